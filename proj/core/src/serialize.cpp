#include <algorithm>
#include <sstream>

#include "arclab/error.hpp"
#include "arclab/sets.hpp"
#include "json_io.hpp"

namespace arclab {

namespace {

void canonicalize(PointSetRecord& record)
{
    std::sort(record.ids.begin(), record.ids.end());
    if (std::adjacent_find(record.ids.begin(), record.ids.end()) != record.ids.end()) {
        throw PreconditionError("duplicate point id in point set");
    }
    const std::uint64_t q = record.q;
    const std::uint64_t n = record.kind == PlaneKind::affine ? q * q : q * q + q + 1;
    if (!record.ids.empty() && record.ids.back() >= n) {
        throw PreconditionError("point id " + std::to_string(record.ids.back()) + " out of range for q=" +
                                std::to_string(q));
    }
}

}  // namespace

std::string to_text(const PointSetRecord& record)
{
    std::ostringstream out;
    out << record.q << ' ' << to_string(record.kind) << '\n';
    for (std::size_t i = 0; i < record.ids.size(); ++i) {
        if (i > 0) {
            out << ' ';
        }
        out << record.ids[i];
    }
    out << '\n';
    return out.str();
}

PointSetRecord record_from_text(const std::string& text)
{
    std::istringstream in(text);
    std::string header;
    if (!std::getline(in, header)) {
        throw PreconditionError("empty point set text");
    }
    std::istringstream head(header);
    PointSetRecord record;
    std::string kind;
    if (!(head >> record.q >> kind)) {
        throw PreconditionError("point set header must be 'q kind'");
    }
    record.kind = parse_plane_kind(kind);
    std::string token;
    while (in >> token) {
        try {
            std::size_t used = 0;
            const unsigned long id = std::stoul(token, &used);
            if (used != token.size()) {
                throw std::invalid_argument(token);
            }
            record.ids.push_back(static_cast<std::uint32_t>(id));
        } catch (const std::exception&) {
            throw PreconditionError("malformed point id '" + token + "'");
        }
    }
    canonicalize(record);
    return record;
}

std::string to_json(const PointSetRecord& record)
{
    return detail::record_to_json(record).dump();
}

PointSetRecord record_from_json(const std::string& text)
{
    try {
        return detail::record_from_json_value(nlohmann::json::parse(text));
    } catch (const nlohmann::json::exception& e) {
        throw PreconditionError(std::string("malformed point set JSON: ") + e.what());
    }
}

PointSetRecord parse_point_set(const std::string& text)
{
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        return record_from_json(text);
    }
    return record_from_text(text);
}

namespace detail {

json record_to_json(const PointSetRecord& record)
{
    return json{{"q", record.q}, {"kind", std::string(to_string(record.kind))}, {"points", record.ids}};
}

PointSetRecord record_from_json_value(const json& value)
{
    PointSetRecord record;
    try {
        record.q = value.at("q").get<std::uint32_t>();
        record.kind = parse_plane_kind(value.at("kind").get<std::string>());
        record.ids = value.at("points").get<std::vector<std::uint32_t>>();
    } catch (const json::exception& e) {
        throw PreconditionError(std::string("malformed point set JSON: ") + e.what());
    }
    canonicalize(record);
    return record;
}

}  // namespace detail

}  // namespace arclab
