#include "arclab/census.hpp"

#include <atomic>
#include <bit>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>

#include "arclab/bounds.hpp"
#include "arclab/error.hpp"
#include "json_io.hpp"

namespace arclab {

namespace {

constexpr std::size_t kPairTableLimit = 4096;
constexpr std::uint64_t kFlushInterval = 1u << 12;

// Incidence in search-position space: line bitsets and a pair -> line table.
class IncidenceIndex {
public:
    IncidenceIndex(const PlaneModel& model, const std::vector<std::uint32_t>& relabeling)
        : model_(model), n_(model.num_points()), words_((n_ + 63) / 64)
    {
        image_.resize(n_);
        if (relabeling.empty()) {
            std::iota(image_.begin(), image_.end(), 0u);
        } else {
            if (relabeling.size() != n_) {
                throw PreconditionError("relabeling must be a permutation of all point ids");
            }
            image_ = relabeling;
        }
        position_.assign(n_, UINT32_MAX);
        for (std::uint32_t i = 0; i < n_; ++i) {
            if (image_[i] >= n_ || position_[image_[i]] != UINT32_MAX) {
                throw PreconditionError("relabeling must be a permutation of all point ids");
            }
            position_[image_[i]] = i;
        }

        line_bits_.assign(model.num_lines() * words_, 0);
        for (const Line& line : model.lines()) {
            std::uint64_t* bits = line_bits_.data() + static_cast<std::size_t>(line.id) * words_;
            for (const std::uint32_t pt : line.points) {
                const std::uint32_t i = position_[pt];
                bits[i >> 6] |= std::uint64_t{1} << (i & 63u);
            }
        }
        if (n_ <= kPairTableLimit) {
            pair_line_.assign(n_ * n_, 0);
            for (std::uint32_t a = 0; a < n_; ++a) {
                for (std::uint32_t b = a + 1; b < n_; ++b) {
                    const std::uint32_t l = model.line_id_through(image_[a], image_[b]);
                    pair_line_[a * n_ + b] = l;
                    pair_line_[b * n_ + a] = l;
                }
            }
        }
    }

    std::size_t size() const noexcept { return n_; }
    std::size_t words() const noexcept { return words_; }
    std::uint32_t position(std::uint32_t model_id) const { return position_[model_id]; }

    const std::uint64_t* line_through(std::uint32_t a, std::uint32_t b) const
    {
        const std::uint32_t l =
            pair_line_.empty() ? model_.line_id_through(image_[a], image_[b]) : pair_line_[a * n_ + b];
        return line_bits_.data() + static_cast<std::size_t>(l) * words_;
    }

private:
    const PlaneModel& model_;
    std::size_t n_;
    std::size_t words_;
    std::vector<std::uint32_t> image_;
    std::vector<std::uint32_t> position_;
    std::vector<std::uint64_t> line_bits_;
    std::vector<std::uint32_t> pair_line_;
};

struct SharedProgress {
    std::atomic<std::uint64_t> nodes{0};
    std::atomic<bool> abort{false};
    std::uint64_t budget = 0;
    bool capped = true;
};

// Depth-first extension of a fixed base by points in increasing position order.
class Searcher {
public:
    Searcher(const IncidenceIndex& index, std::uint32_t target, SharedProgress& progress)
        : index_(index), words_(index.words()), target_(target), progress_(progress),
          forbidden_((target + 1) * index.words(), 0)
    {
        valid_.assign(words_, ~std::uint64_t{0});
        if (index.size() % 64 != 0) {
            valid_.back() = (std::uint64_t{1} << (index.size() % 64)) - 1;
        }
    }

    // Count completions of base + {first}; `root` holds the forbidden set of the base.
    std::uint64_t count_subtree(const std::vector<std::uint32_t>& base, const std::uint64_t* root,
                                std::uint32_t first)
    {
        chosen_ = base;
        const std::size_t d = chosen_.size();
        std::uint64_t* next = frame(d + 1);
        std::copy(root, root + words_, next);
        for (const std::uint32_t c : chosen_) {
            or_line(next, c, first);
        }
        chosen_.push_back(first);
        count_ = 0;
        extend(first);
        flush();
        return count_;
    }

    std::uint64_t local_nodes() const noexcept { return total_nodes_; }

private:
    std::uint64_t* frame(std::size_t depth) { return forbidden_.data() + depth * words_; }

    void or_line(std::uint64_t* dst, std::uint32_t a, std::uint32_t b) const
    {
        const std::uint64_t* line = index_.line_through(a, b);
        for (std::size_t w = 0; w < words_; ++w) {
            dst[w] |= line[w];
        }
    }

    void tick()
    {
        ++total_nodes_;
        if (++pending_ >= kFlushInterval) {
            flush();
        }
    }

    void flush()
    {
        const std::uint64_t seen = progress_.nodes.fetch_add(pending_) + pending_;
        pending_ = 0;
        if (progress_.capped && seen > progress_.budget) {
            progress_.abort.store(true);
        }
        if (progress_.abort.load(std::memory_order_relaxed)) {
            throw BudgetExceeded("census node budget exhausted", seen);
        }
    }

    void extend(std::uint32_t last)
    {
        const std::size_t depth = chosen_.size();
        const std::uint64_t* f = frame(depth);
        const std::size_t start = (static_cast<std::size_t>(last) + 1) >> 6;
        const std::uint64_t first_mask = ~std::uint64_t{0} << ((last + 1) & 63u);
        const bool last_level = target_ - depth == 1;

        for (std::size_t w = start; w < words_; ++w) {
            std::uint64_t cand = ~f[w] & valid_[w];
            if (w == start) {
                cand &= first_mask;
            }
            if (last_level) {
                count_ += static_cast<std::uint64_t>(std::popcount(cand));
                continue;
            }
            while (cand != 0) {
                const auto v = static_cast<std::uint32_t>(w * 64 + static_cast<std::size_t>(std::countr_zero(cand)));
                cand &= cand - 1;
                tick();
                std::uint64_t* next = frame(depth + 1);
                std::copy(f, f + words_, next);
                for (const std::uint32_t c : chosen_) {
                    or_line(next, c, v);
                }
                chosen_.push_back(v);
                extend(v);
                chosen_.pop_back();
            }
        }
    }

    const IncidenceIndex& index_;
    std::size_t words_;
    std::uint32_t target_;
    SharedProgress& progress_;
    std::vector<std::uint64_t> forbidden_;
    std::vector<std::uint64_t> valid_;
    std::vector<std::uint32_t> chosen_;
    std::uint64_t count_ = 0;
    std::uint64_t pending_ = 0;
    std::uint64_t total_nodes_ = 0;
};

struct ExtensionCount {
    BigInt count;
    std::uint64_t nodes = 0;
};

// Number of (target - |base|)-subsets S of the non-base points such that base ∪ S is an arc.
ExtensionCount count_extensions(const IncidenceIndex& index, const std::vector<std::uint32_t>& base,
                                std::uint32_t target, const CensusQuery& query)
{
    const std::size_t words = index.words();
    std::vector<std::uint64_t> root(words, 0);
    for (std::size_t i = 0; i < base.size(); ++i) {
        root[base[i] >> 6] |= std::uint64_t{1} << (base[i] & 63u);
        for (std::size_t j = i + 1; j < base.size(); ++j) {
            const std::uint64_t* line = index.line_through(base[i], base[j]);
            for (std::size_t w = 0; w < words; ++w) {
                root[w] |= line[w];
            }
        }
    }

    ExtensionCount out;
    if (target == base.size()) {
        out.count = 1;
        return out;
    }
    std::vector<std::uint32_t> firsts;
    for (std::uint32_t v = 0; v < index.size(); ++v) {
        if (!((root[v >> 6] >> (v & 63u)) & 1u)) {
            firsts.push_back(v);
        }
    }
    if (target - base.size() == 1) {
        out.count = firsts.size();
        return out;
    }

    SharedProgress progress;
    progress.budget = query.node_budget;
    progress.capped = query.mode == CensusMode::capped;

    std::vector<std::uint64_t> partial(firsts.size(), 0);
    std::vector<std::uint64_t> partial_nodes(firsts.size(), 0);
    std::atomic<std::size_t> next_task{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto worker = [&]() {
        Searcher searcher(index, target, progress);
        try {
            for (;;) {
                const std::size_t t = next_task.fetch_add(1);
                if (t >= firsts.size() || progress.abort.load()) {
                    break;
                }
                const std::uint64_t before = searcher.local_nodes();
                partial[t] = searcher.count_subtree(base, root.data(), firsts[t]);
                partial_nodes[t] = searcher.local_nodes() - before + 1;
            }
        } catch (...) {
            progress.abort.store(true);
            std::lock_guard lock(failure_mutex);
            if (!failure) {
                failure = std::current_exception();
            }
        }
    };

    const unsigned jobs = std::max(1u, query.jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> threads;
        for (unsigned j = 0; j < jobs; ++j) {
            threads.emplace_back(worker);
        }
        for (auto& t : threads) {
            t.join();
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }

    for (std::size_t t = 0; t < firsts.size(); ++t) {
        out.count += partial[t];
        out.nodes += partial_nodes[t];
    }
    return out;
}

}  // namespace

CensusResult count_arcs_exact(const PlaneModel& model, const CensusQuery& query)
{
    const auto start = std::chrono::steady_clock::now();
    const std::uint64_t n = model.num_points();
    if (query.k > n) {
        throw PreconditionError("k = " + std::to_string(query.k) + " exceeds the number of points " +
                                std::to_string(n));
    }

    CensusResult result;
    const IncidenceIndex index(model, query.relabeling);
    if (query.k == 0) {
        result.count = 1;
    } else if (query.orbit_reduction && query.k >= 3) {
        const std::uint32_t q = model.q();
        const std::vector<std::uint32_t> triangle = {index.position(0), index.position(1), index.position(q)};
        const ExtensionCount ext = count_extensions(index, triangle, query.k, query);
        const BigInt triangles = binomial(n, 3) - BigInt(model.num_lines()) * binomial(model.points_per_line(), 3);
        BigInt quotient;
        BigInt remainder;
        boost::multiprecision::divide_qr(triangles * ext.count, binomial(query.k, 3), quotient, remainder);
        if (remainder != 0) {
            throw std::logic_error("orbit-reduced census produced a non-integral count");
        }
        result.count = quotient;
        result.nodes = ext.nodes;
        result.orbit_reduced = true;
    } else {
        const ExtensionCount ext = count_extensions(index, {}, query.k, query);
        result.count = ext.count;
        result.nodes = ext.nodes;
    }
    result.probability = Rational(result.count, binomial(n, query.k));
    result.elapsed =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    return result;
}

CensusResult count_arcs_projective(std::uint32_t q, const CensusQuery& query)
{
    const PlaneModel model(field_of_order(q), PlaneKind::projective);
    return count_arcs_exact(model, query);
}

ArcProbabilityCheck arc_probability_bounds_check(std::uint32_t q, const CensusQuery& query)
{
    if (static_cast<std::uint64_t>(query.k) * query.k > q) {
        throw PreconditionError("probability sandwich needs k <= sqrt(q)");
    }
    const PlaneModel model(field_of_order(q), PlaneKind::affine);
    ArcProbabilityCheck out;
    out.census = count_arcs_exact(model, query);
    const ProductBounds products = arc_probability_products(q, query.k);
    out.probability = out.census.probability;
    out.lower = products.lower;
    out.upper = products.upper;
    out.pass = out.lower <= out.probability && out.probability <= out.upper;
    return out;
}

std::string census_csv_header()
{
    return "q,kind,k,count,numerator,denominator,nodes,ms";
}

std::string census_csv_row(const PlaneModel& model, std::uint32_t k, const CensusResult& result, bool timing)
{
    std::ostringstream out;
    out << model.q() << ',' << to_string(model.kind()) << ',' << k << ',' << result.count.str() << ','
        << boost::multiprecision::numerator(result.probability).str() << ','
        << boost::multiprecision::denominator(result.probability).str() << ',' << result.nodes << ','
        << (timing ? result.elapsed.count() : 0);
    return out.str();
}

std::string census_json(const PlaneModel& model, std::uint32_t k, const CensusResult& result, bool timing)
{
    detail::json j;
    j["q"] = model.q();
    j["kind"] = std::string(to_string(model.kind()));
    j["k"] = k;
    j["count"] = result.count.str();
    j["probability"] = to_string(result.probability);
    j["nodes"] = result.nodes;
    j["ms"] = timing ? result.elapsed.count() : 0;
    j["orbit_reduced"] = result.orbit_reduced;
    return j.dump();
}

}  // namespace arclab
