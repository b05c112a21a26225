#include "arclab/maxarc.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "arclab/error.hpp"
#include "arclab/random.hpp"
#include "arclab/sets.hpp"
#include "json_io.hpp"

namespace arclab {

namespace {

using Bits = std::vector<std::uint64_t>;

std::size_t popcount(const Bits& b)
{
    std::size_t n = 0;
    for (const auto w : b) {
        n += static_cast<std::size_t>(std::popcount(w));
    }
    return n;
}

std::size_t and_count(const Bits& a, const Bits& b)
{
    std::size_t n = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        n += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
    }
    return n;
}

bool test(const Bits& b, std::uint32_t i) { return (b[i >> 6] >> (i & 63u)) & 1u; }
void set(Bits& b, std::uint32_t i) { b[i >> 6] |= std::uint64_t{1} << (i & 63u); }
void reset(Bits& b, std::uint32_t i) { b[i >> 6] &= ~(std::uint64_t{1} << (i & 63u)); }

struct BudgetHit {};

// Search over local indices 0..m-1 of the input points.
class ArcSearch {
public:
    ArcSearch(const PlaneModel& model, const std::vector<std::uint32_t>& ids, std::uint64_t budget)
        : m_(static_cast<std::uint32_t>(ids.size())), words_((ids.size() + 63) / 64), budget_(budget)
    {
        std::vector<std::int64_t> local(model.num_points(), -1);
        for (std::uint32_t i = 0; i < m_; ++i) {
            local[ids[i]] = i;
        }
        // Every line meeting the input in two or more points.
        std::vector<std::int64_t> slot(model.num_lines(), -1);
        point_lines_.resize(m_);
        for (std::uint32_t i = 0; i < m_; ++i) {
            for (const std::uint32_t l : model.lines_through(ids[i])) {
                const Line& line = model.line(l);
                std::size_t hits = 0;
                for (const std::uint32_t pt : line.points) {
                    hits += local[pt] >= 0 ? 1 : 0;
                }
                if (hits < 2) {
                    continue;
                }
                if (slot[l] < 0) {
                    slot[l] = static_cast<std::int64_t>(lines_.size());
                    Bits bits(words_, 0);
                    for (const std::uint32_t pt : line.points) {
                        if (local[pt] >= 0) {
                            set(bits, static_cast<std::uint32_t>(local[pt]));
                        }
                    }
                    lines_.push_back(std::move(bits));
                }
                point_lines_[i].push_back(static_cast<std::uint32_t>(slot[l]));
            }
        }
        pair_line_.assign(static_cast<std::size_t>(m_) * m_, 0);
        for (std::uint32_t l = 0; l < lines_.size(); ++l) {
            std::vector<std::uint32_t> on;
            for (std::uint32_t i = 0; i < m_; ++i) {
                if (test(lines_[l], i)) {
                    on.push_back(i);
                }
            }
            for (const auto a : on) {
                for (const auto b : on) {
                    pair_line_[static_cast<std::size_t>(a) * m_ + b] = l;
                }
            }
        }
    }

    void run()
    {
        Bits candidates(words_, 0);
        for (std::uint32_t i = 0; i < m_; ++i) {
            set(candidates, i);
        }
        std::vector<std::uint32_t> chosen;
        try {
            search(chosen, candidates);
            complete_ = true;
        } catch (const BudgetHit&) {
            complete_ = false;
        }
    }

    bool complete() const noexcept { return complete_; }
    std::uint64_t nodes() const noexcept { return nodes_; }
    const std::vector<std::uint32_t>& best() const noexcept { return best_; }

private:
    // Upper bound on how many candidates can still join the arc.
    std::size_t bound(const std::vector<std::uint32_t>& chosen, const Bits& cand, std::size_t ncand) const
    {
        std::size_t best = ncand;
        // Pencil: lines through a chosen point meeting the candidates.
        for (const std::uint32_t s : chosen) {
            std::size_t covered = 0;
            std::size_t lines = 0;
            for (const std::uint32_t l : point_lines_[s]) {
                const std::size_t c = and_count(lines_[l], cand);
                if (c > 0) {
                    ++lines;
                    covered += c;
                }
            }
            // Candidates on no recorded line through s each occupy their own pencil line.
            best = std::min(best, lines + (ncand - covered));
        }
        // Greedy disjoint cover: each line holds at most two arc points.
        Bits rest = cand;
        std::size_t remaining = ncand;
        std::size_t total = 0;
        std::vector<bool> used(lines_.size(), false);
        while (remaining > 0) {
            std::size_t top = 0;
            std::size_t arg = 0;
            for (std::size_t l = 0; l < lines_.size(); ++l) {
                if (used[l]) {
                    continue;
                }
                const std::size_t c = and_count(lines_[l], rest);
                if (c > top) {
                    top = c;
                    arg = l;
                }
            }
            if (top <= 2) {
                total += remaining;
                break;
            }
            used[arg] = true;
            std::size_t have = 0;
            for (const std::uint32_t s : chosen) {
                have += test(lines_[arg], s) ? 1 : 0;
            }
            total += std::min<std::size_t>(top, have >= 2 ? 0 : 2 - have);
            for (std::size_t w = 0; w < words_; ++w) {
                rest[w] &= ~lines_[arg][w];
            }
            remaining -= top;
            if (total >= best) {
                break;
            }
        }
        return std::min(best, total);
    }

    void record(const std::vector<std::uint32_t>& chosen, const Bits& extra)
    {
        std::vector<std::uint32_t> arc = chosen;
        for (std::uint32_t i = 0; i < m_; ++i) {
            if (test(extra, i)) {
                arc.push_back(i);
            }
        }
        if (arc.size() > best_.size()) {
            best_ = std::move(arc);
        }
    }

    bool is_arc_with(const std::vector<std::uint32_t>& chosen, const Bits& cand) const
    {
        for (const Bits& line : lines_) {
            std::size_t n = and_count(line, cand);
            for (const std::uint32_t s : chosen) {
                n += test(line, s) ? 1 : 0;
            }
            if (n > 2) {
                return false;
            }
        }
        return true;
    }

    void search(std::vector<std::uint32_t>& chosen, const Bits& cand)
    {
        if (++nodes_ > budget_) {
            throw BudgetHit{};
        }
        const std::size_t ncand = popcount(cand);
        if (ncand == 0) {
            record(chosen, cand);
            return;
        }
        if (chosen.size() + ncand <= best_.size()) {
            return;
        }
        if (is_arc_with(chosen, cand)) {
            record(chosen, cand);
            return;
        }
        if (chosen.size() + bound(chosen, cand, ncand) <= best_.size()) {
            return;
        }

        // Lowest candidate on the line with the most candidates.
        std::size_t top = 0;
        std::size_t arg = 0;
        for (std::size_t l = 0; l < lines_.size(); ++l) {
            const std::size_t c = and_count(lines_[l], cand);
            if (c > top) {
                top = c;
                arg = l;
            }
        }
        std::uint32_t v = 0;
        for (std::size_t w = 0; w < words_; ++w) {
            const std::uint64_t bits = lines_[arg][w] & cand[w];
            if (bits != 0) {
                v = static_cast<std::uint32_t>(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
                break;
            }
        }

        Bits with = cand;
        reset(with, v);
        for (const std::uint32_t s : chosen) {
            const Bits& line = lines_[pair_line_[static_cast<std::size_t>(s) * m_ + v]];
            for (std::size_t w = 0; w < words_; ++w) {
                with[w] &= ~line[w];
            }
        }
        chosen.push_back(v);
        search(chosen, with);
        chosen.pop_back();

        Bits without = cand;
        reset(without, v);
        search(chosen, without);
    }

    std::uint32_t m_;
    std::size_t words_;
    std::uint64_t budget_;
    std::vector<Bits> lines_;
    std::vector<std::vector<std::uint32_t>> point_lines_;
    std::vector<std::uint32_t> pair_line_;
    std::vector<std::uint32_t> best_;
    std::uint64_t nodes_ = 0;
    bool complete_ = false;
};

void check_arc(const PlaneModel& model, const PointSet& points, const PointSet& witness)
{
    if (!witness.is_subset_of(points) || collinear_triples(model, witness) != 0) {
        throw std::logic_error("arc search emitted an invalid witness");
    }
}

}  // namespace

ArcCertificate max_arc_exact(const PlaneModel& model, const PointSet& points, const MaxArcOptions& options)
{
    if (points.universe() != model.num_points()) {
        throw PreconditionError("point set does not belong to this plane");
    }
    const std::vector<std::uint32_t> ids = points.ids();
    ArcSearch search(model, ids, options.node_budget);
    search.run();

    ArcCertificate cert;
    cert.witness = model.empty_set();
    for (const std::uint32_t i : search.best()) {
        cert.witness.insert(ids[i]);
    }
    cert.size = cert.witness.size();
    cert.optimal = search.complete();
    cert.nodes = search.nodes();
    cert.input_size = points.size();
    cert.bound_used = cert.optimal ? "branch-and-bound exhausted (pencil and two-per-line cover bounds)"
                                   : "node budget exhausted; best arc found so far";
    check_arc(model, points, cert.witness);
    return cert;
}

PointSet prune_tuples(const PlaneModel& model, const PointSet& points, unsigned l, std::uint64_t seed, PruneMode mode)
{
    if (l < 3) {
        throw PreconditionError("prune_tuples needs l >= 3");
    }
    if (points.universe() != model.num_points()) {
        throw PreconditionError("point set does not belong to this plane");
    }
    PointSet out = points;
    StreamRng rng(seed, 0x70756e65);
    for (const Line& line : model.lines()) {
        std::vector<std::uint32_t> on;
        for (const std::uint32_t pt : line.points) {
            if (out.contains(pt)) {
                on.push_back(pt);
            }
        }
        while (on.size() >= l) {
            std::size_t victim = on.size() - 1;
            if (mode == PruneMode::random) {
                victim = static_cast<std::size_t>(rng.below(on.size()));
            }
            out.erase(on[victim]);
            on.erase(on.begin() + static_cast<std::ptrdiff_t>(victim));
        }
    }
    return out;
}

ArcCertificate greedy_arc(const PlaneModel& model, const PointSet& points, std::uint64_t seed, unsigned retries)
{
    if (points.universe() != model.num_points()) {
        throw PreconditionError("point set does not belong to this plane");
    }
    ArcCertificate cert;
    cert.input_size = points.size();
    const std::uint64_t triples = collinear_triples(model, points);
    if (triples == 0) {
        cert.witness = points;
        cert.size = points.size();
        cert.optimal = true;
        cert.bound_used = "input is already an arc";
        return cert;
    }

    const double n = static_cast<double>(points.size());
    const double t = static_cast<double>(triples);
    if (2 * triples < points.size()) {
        cert.witness = prune_tuples(model, points, 3);
        cert.size = cert.witness.size();
        cert.nodes = 1;
        cert.bound_used = "direct pruning, removes at most T(P) points";
        check_arc(model, points, cert.witness);
        return cert;
    }

    const double p = std::sqrt(n / (2 * t));
    cert.guarantee = std::pow(n, 1.5) / (2 * std::sqrt(2.0) * std::sqrt(t));
    const CounterRng rng(seed, 0x67726565);
    cert.witness = model.empty_set();
    for (unsigned r = 0; r < std::max(1u, retries); ++r) {
        const CounterRng draw(rng.derive(r), 0);
        PointSet sample = model.empty_set();
        points.for_each([&](std::uint32_t id) {
            if (static_cast<double>(draw.at(id) >> 11) * 0x1.0p-53 < p) {
                sample.insert(id);
            }
        });
        PointSet arc = prune_tuples(model, sample, 3);
        if (arc.size() > cert.witness.size()) {
            cert.witness = std::move(arc);
        }
        ++cert.nodes;
    }
    cert.size = cert.witness.size();
    std::ostringstream desc;
    desc << "subsample p = sqrt(|P|/(2T)) then prune, best of " << std::max(1u, retries);
    cert.bound_used = desc.str();
    check_arc(model, points, cert.witness);
    return cert;
}

std::string certificate_json(const PlaneModel& model, const ArcCertificate& cert, const PointSet* input)
{
    detail::json j;
    j["q"] = model.q();
    j["kind"] = std::string(to_string(model.kind()));
    j["input_size"] = cert.input_size;
    j["arc_size"] = cert.size;
    j["optimal"] = cert.optimal;
    j["witness"] = cert.witness.ids();
    j["nodes"] = cert.nodes;
    j["bound_used"] = cert.bound_used;
    if (cert.guarantee) {
        j["guarantee"] = *cert.guarantee;
    }
    if (input != nullptr) {
        j["input"] = input->ids();
    }
    return j.dump();
}

}  // namespace arclab
