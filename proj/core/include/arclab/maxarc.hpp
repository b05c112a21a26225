#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "arclab/plane.hpp"
#include "arclab/point_set.hpp"

namespace arclab {

struct ArcCertificate {
    PointSet witness;  // an arc contained in the input
    std::size_t size = 0;
    bool optimal = false;  // true only when no larger arc exists in the input
    std::string bound_used;
    std::uint64_t nodes = 0;
    std::size_t input_size = 0;
    std::optional<double> guarantee;  // greedy_arc: |P|^{3/2} / (2 sqrt(2) T^{1/2}) when applicable
};

struct MaxArcOptions {
    std::uint64_t node_budget = 100'000'000;
};

// a(P) by branch and bound. Branches on the lowest-id candidate of the line
// holding the most candidates, include first. Upper bounds: the number of
// lines through a chosen point still meeting the candidates (each carries at
// most one more arc point), and a greedy disjoint line cover where each line
// carries at most two arc points. Sequential, so the witness is deterministic.
// When the budget runs out, returns the best arc found with optimal = false.
ArcCertificate max_arc_exact(const PlaneModel& model, const PointSet& points, const MaxArcOptions& options = {});

// Subsample with p = |P|^{1/2} / (sqrt(2) T(P)^{1/2}) and prune collinear
// triples, keeping the best of `retries` seeded attempts. With 2T(P) < |P| the
// set is pruned directly (removes at most T(P) points).
ArcCertificate greedy_arc(const PlaneModel& model, const PointSet& points, std::uint64_t seed,
                          unsigned retries = 100);

enum class PruneMode { highest_id, random };

// Scan lines in id order; on each line still holding l or more points of the
// set, remove points until l - 1 remain. highest_id mode removes the largest
// ids; random mode picks victims from the seeded stream. l >= 3.
PointSet prune_tuples(const PlaneModel& model, const PointSet& points, unsigned l, std::uint64_t seed = 0,
                      PruneMode mode = PruneMode::highest_id);

// {q, kind, input_size, arc_size, optimal, witness, nodes}, plus the input ids when given.
std::string certificate_json(const PlaneModel& model, const ArcCertificate& cert, const PointSet* input = nullptr);

}  // namespace arclab
