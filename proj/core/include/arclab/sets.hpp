#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "arclab/numeric.hpp"
#include "arclab/plane.hpp"
#include "arclab/point_set.hpp"

namespace arclab {

// |l ∩ P| for every line l, indexed by line id.
struct LineHistogram {
    std::vector<std::uint32_t> counts;
    std::map<std::uint32_t, std::uint64_t> summary;  // intersection size -> number of lines

    std::uint64_t total() const;
};

LineHistogram line_histogram(const PlaneModel& model, const PointSet& points);

// T_l(P) = sum over lines of C(|l ∩ P|, l), unordered tuples. l >= 3.
BigInt count_collinear_tuples(const PlaneModel& model, const PointSet& points, unsigned l);
// T(P) = T_3(P) in machine integers.
std::uint64_t collinear_triples(const PlaneModel& model, const PointSet& points);
bool is_arc(const PlaneModel& model, const PointSet& points);

// Union of all lines meeting P in at least two points; P itself when |P| <= 1.
struct CoverageSet {
    PointSet points;
    std::size_t cardinality = 0;
    std::size_t lines_used = 0;
    // Interval (q/2) C(k,2) <= |cover| <= q C(k,2), checked only for arcs with k^2 <= q.
    bool bound_checked = false;
    bool bound_holds = false;
    Rational lower;
    BigInt upper;
};

CoverageSet coverage(const PlaneModel& model, const PointSet& points);

struct ChainStep {
    std::string name;
    std::string relation;  // "==" or "<="
    Rational lhs;
    Rational rhs;
    bool holds = false;
};

// Collinear-triple count of a large set together with every intermediate
// quantity of the incidence / Hölder argument that lower-bounds it, each
// evaluated exactly.
struct SupersaturationReport {
    std::uint64_t size = 0;
    std::uint64_t triples = 0;
    Rational ratio;  // T(P) q / |P|^3
    std::uint64_t long_lines = 0;  // lines with |l ∩ P| >= 3
    std::vector<ChainStep> chain;

    bool chain_holds() const;
};

// Requires |P| >= 4q.
SupersaturationReport supersaturation_report(const PlaneModel& model, const PointSet& points);

// Maximum co-degrees of the 3-uniform collinearity hypergraph, by brute force
// over point pairs and triples with the determinant test.
struct CodegreeStats {
    std::uint64_t pair_min = 0;  // min over pairs of #{w : {u,v,w} collinear}
    std::uint64_t pair_max = 0;  // Δ2
    std::uint64_t triple_max = 0;  // Δ3
};

CodegreeStats collinearity_codegrees(const PlaneModel& model);

// Plain-data form of a point set: "q kind" header plus ascending ids.
struct PointSetRecord {
    std::uint32_t q = 0;
    PlaneKind kind = PlaneKind::affine;
    std::vector<std::uint32_t> ids;

    friend bool operator==(const PointSetRecord&, const PointSetRecord&) = default;
};

PointSetRecord make_record(const PlaneModel& model, const PointSet& points);
PointSet to_point_set(const PlaneModel& model, const PointSetRecord& record);

// Text: first line "q kind", second line the ascending ids separated by spaces.
std::string to_text(const PointSetRecord& record);
PointSetRecord record_from_text(const std::string& text);
std::string to_json(const PointSetRecord& record);
PointSetRecord record_from_json(const std::string& text);
// Dispatches on the first non-blank character ('{' means JSON).
PointSetRecord parse_point_set(const std::string& text);

}  // namespace arclab
