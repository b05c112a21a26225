#include "arclab/sets.hpp"

#include <string>

#include "arclab/error.hpp"

namespace arclab {

std::uint64_t LineHistogram::total() const
{
    std::uint64_t sum = 0;
    for (const auto c : counts) {
        sum += c;
    }
    return sum;
}

LineHistogram line_histogram(const PlaneModel& model, const PointSet& points)
{
    if (points.universe() != model.num_points()) {
        throw PreconditionError("point set does not belong to this plane model");
    }
    LineHistogram h;
    h.counts.assign(model.num_lines(), 0);
    points.for_each([&](std::uint32_t id) {
        for (const std::uint32_t l : model.lines_through(id)) {
            ++h.counts[l];
        }
    });
    for (const auto c : h.counts) {
        ++h.summary[c];
    }
    return h;
}

BigInt count_collinear_tuples(const PlaneModel& model, const PointSet& points, unsigned l)
{
    if (l < 3) {
        throw PreconditionError("collinear tuples need l >= 3");
    }
    const LineHistogram h = line_histogram(model, points);
    BigInt total = 0;
    for (const auto& [size, lines] : h.summary) {
        if (size >= l) {
            total += binomial(size, l) * lines;
        }
    }
    return total;
}

std::uint64_t collinear_triples(const PlaneModel& model, const PointSet& points)
{
    if (points.universe() != model.num_points()) {
        throw PreconditionError("point set does not belong to this plane model");
    }
    std::vector<std::uint32_t> counts(model.num_lines(), 0);
    points.for_each([&](std::uint32_t id) {
        for (const std::uint32_t l : model.lines_through(id)) {
            ++counts[l];
        }
    });
    std::uint64_t total = 0;
    for (const std::uint64_t m : counts) {
        if (m >= 3) {
            total += m * (m - 1) * (m - 2) / 6;
        }
    }
    return total;
}

bool is_arc(const PlaneModel& model, const PointSet& points)
{
    return collinear_triples(model, points) == 0;
}

CoverageSet coverage(const PlaneModel& model, const PointSet& points)
{
    CoverageSet out;
    out.points = model.empty_set();
    if (points.size() <= 1) {
        out.points = points;
    } else {
        const LineHistogram h = line_histogram(model, points);
        for (std::uint32_t l = 0; l < h.counts.size(); ++l) {
            if (h.counts[l] >= 2) {
                out.points |= model.line(l).incidence;
                ++out.lines_used;
            }
        }
    }
    out.cardinality = out.points.size();

    const std::uint64_t k = points.size();
    const std::uint64_t q = model.q();
    const BigInt pairs = binomial(k, 2);
    out.lower = Rational(BigInt(q) * pairs, BigInt(2));
    out.upper = BigInt(q) * pairs;
    if (k * k <= q && is_arc(model, points)) {
        out.bound_checked = true;
        out.bound_holds = out.lower <= Rational(BigInt(out.cardinality)) && BigInt(out.cardinality) <= out.upper;
    }
    return out;
}

bool SupersaturationReport::chain_holds() const
{
    for (const auto& step : chain) {
        if (!step.holds) {
            return false;
        }
    }
    return true;
}

SupersaturationReport supersaturation_report(const PlaneModel& model, const PointSet& points)
{
    const std::uint64_t q = model.q();
    const std::uint64_t n = points.size();
    if (n < 4 * q) {
        throw PreconditionError("supersaturation needs |P| >= 4q (|P| = " + std::to_string(n) +
                                ", q = " + std::to_string(q) + ")");
    }
    const LineHistogram h = line_histogram(model, points);

    BigInt all_sum = 0;
    BigInt short_sum = 0;
    BigInt long_sum = 0;
    BigInt long_cubes = 0;
    BigInt triples = 0;
    std::uint64_t long_lines = 0;
    for (const std::uint64_t m : h.counts) {
        all_sum += m;
        if (m >= 3) {
            ++long_lines;
            long_sum += m;
            long_cubes += BigInt(m) * m * m;
            triples += m * (m - 1) * (m - 2) / 6;
        } else {
            short_sum += m;
        }
    }

    SupersaturationReport r;
    r.size = n;
    r.triples = triples.convert_to<std::uint64_t>();
    r.long_lines = long_lines;
    r.ratio = Rational(triples * q, BigInt(n) * n * n);

    const BigInt lines = model.num_lines();
    auto step = [&](std::string name, std::string relation, Rational lhs, Rational rhs) {
        const bool holds = relation == "==" ? lhs == rhs : lhs <= rhs;
        r.chain.push_back({std::move(name), std::move(relation), std::move(lhs), std::move(rhs), holds});
    };
    // sum over all lines of |l ∩ P| = (q+1)|P|
    step("incidence_identity", "==", Rational(all_sum), Rational(BigInt(q + 1) * n));
    // lines with at most two points contribute at most 2 each
    step("short_lines_cap", "<=", Rational(short_sum), Rational(2 * lines));
    // (q+1)|P|/2 <= sum over long lines
    step("long_lines_mass", "<=", Rational(BigInt(q + 1) * n, BigInt(2)), Rational(long_sum));
    // Hölder with exponents (3/2, 3): (sum x)^3 <= |L'|^2 sum x^3
    step("holder_long_lines", "<=", Rational(long_sum * long_sum * long_sum),
         Rational(BigInt(long_lines) * long_lines * long_cubes));
    step("holder_all_lines", "<=", Rational(long_sum * long_sum * long_sum), Rational(lines * lines * long_cubes));
    // x^3 <= 27 C(x,3) for x >= 3
    step("cube_to_binomial", "<=", Rational(long_cubes), Rational(27 * triples));
    // chaining the above: T(P) >= ((q+1)|P|/2)^3 / (27 |L|^2)
    const Rational mass(BigInt(q + 1) * n, BigInt(2));
    step("triples_lower_bound", "<=", mass * mass * mass / Rational(27 * lines * lines), Rational(triples));
    return r;
}

CodegreeStats collinearity_codegrees(const PlaneModel& model)
{
    const auto n = static_cast<std::uint32_t>(model.num_points());
    CodegreeStats s;
    bool first = true;
    for (std::uint32_t u = 0; u < n; ++u) {
        for (std::uint32_t v = u + 1; v < n; ++v) {
            std::uint64_t d = 0;
            for (std::uint32_t w = 0; w < n; ++w) {
                if (w != u && w != v && model.collinear(u, v, w)) {
                    ++d;
                }
            }
            s.pair_min = first ? d : std::min(s.pair_min, d);
            s.pair_max = first ? d : std::max(s.pair_max, d);
            first = false;
        }
    }
    // A fixed 3-set is contained in at most one 3-edge: itself.
    for (std::uint32_t u = 0; u < n && s.triple_max == 0; ++u) {
        for (std::uint32_t v = u + 1; v < n && s.triple_max == 0; ++v) {
            for (std::uint32_t w = v + 1; w < n; ++w) {
                if (model.collinear(u, v, w)) {
                    s.triple_max = 1;
                    break;
                }
            }
        }
    }
    return s;
}

PointSetRecord make_record(const PlaneModel& model, const PointSet& points)
{
    if (points.universe() != model.num_points()) {
        throw PreconditionError("point set does not belong to this plane model");
    }
    return {model.q(), model.kind(), points.ids()};
}

PointSet to_point_set(const PlaneModel& model, const PointSetRecord& record)
{
    if (record.q != model.q() || record.kind != model.kind()) {
        throw PreconditionError("point set header (q=" + std::to_string(record.q) + ", " +
                                std::string(to_string(record.kind)) + ") does not match the plane model");
    }
    return PointSet::from_ids(model.num_points(), record.ids);
}

}  // namespace arclab
