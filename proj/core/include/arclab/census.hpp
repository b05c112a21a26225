#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

#include "arclab/numeric.hpp"
#include "arclab/plane.hpp"

namespace arclab {

enum class CensusMode { exact, capped };

struct CensusQuery {
    std::uint32_t k = 0;
    CensusMode mode = CensusMode::capped;
    std::uint64_t node_budget = 1'000'000'000;
    // Count the k-arcs through one fixed non-collinear triple and scale by the
    // number of triples; valid because the collineation group is transitive on
    // non-collinear triples. Ignored for k < 3.
    bool orbit_reduction = false;
    unsigned jobs = 1;
    // Optional search order: search position i visits model point relabeling[i].
    std::vector<std::uint32_t> relabeling;
};

struct CensusResult {
    BigInt count;
    Rational probability;  // count / C(num_points, k)
    std::uint64_t nodes = 0;
    std::chrono::milliseconds elapsed{0};
    bool orbit_reduced = false;
};

// Number of k-subsets of the plane with no three collinear points.
//
// Subsets are enumerated in increasing id order, pruning with a bitset of the
// points collinear with two chosen points; the last point is counted by
// popcount. The search splits on the first point into tasks that are summed in
// task order, so the result does not depend on `jobs`.
// Throws BudgetExceeded (capped mode) when the node budget runs out.
CensusResult count_arcs_exact(const PlaneModel& model, const CensusQuery& query);

// B(q,n) over PG(2,q).
CensusResult count_arcs_projective(std::uint32_t q, const CensusQuery& query);

struct ArcProbabilityCheck {
    Rational probability;
    Rational lower;
    Rational upper;
    bool pass = false;
    CensusResult census;
};

// Exact census of AG(2,q) checked against the product sandwich. Requires k^2 <= q.
ArcProbabilityCheck arc_probability_bounds_check(std::uint32_t q, const CensusQuery& query);

std::string census_csv_header();
// `timing` false writes 0 in the ms column so identical runs are byte-identical.
std::string census_csv_row(const PlaneModel& model, std::uint32_t k, const CensusResult& result, bool timing);
std::string census_json(const PlaneModel& model, std::uint32_t k, const CensusResult& result, bool timing);

}  // namespace arclab
