#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "arclab/numeric.hpp"
#include "arclab/plane.hpp"
#include "arclab/point_set.hpp"
#include "arclab/random.hpp"

namespace arclab {

// Point i is kept iff p.admits(CounterRng(seed, stream).at(i)); the draw for a
// point never depends on any other point.
PointSet sample_random(const PlaneModel& model, const DyadicProbability& p, std::uint64_t seed,
                       std::uint64_t stream = 0);

enum class ArcMode { none, greedy, exact };

std::string_view to_string(ArcMode mode) noexcept;
ArcMode parse_arc_mode(std::string_view text);

struct ExperimentConfig {
    std::uint32_t q = 0;
    DyadicProbability p{1};
    std::uint64_t trials = 0;
    ArcMode arc_mode = ArcMode::none;
    std::uint64_t seed = 0;
    unsigned l = 4;  // order of the extra tuple moment
    double delta = 0.1;
    unsigned jobs = 1;
    std::uint64_t node_budget = 10'000'000;  // per trial, exact mode
};

struct TrialRecord {
    std::uint64_t trial = 0;
    std::size_t size = 0;
    std::uint64_t triples = 0;
    std::uint64_t tuples = 0;  // T_l
    std::size_t parabola_hits = 0;  // |Q ∩ {(x, x^2)}|
    std::optional<std::size_t> arc;  // a(Q) (exact) or a lower bound (greedy)
    bool arc_optimal = false;
    bool twothings = false;  // |Q| >= pq^2/2 and T(Q) <= p^3 (q^2+q) C(q,3) / delta
};

struct Summary {
    double mean = 0;
    double variance = 0;  // sample variance (n - 1)
    double min = 0;
    double q25 = 0;
    double median = 0;
    double q75 = 0;
    double max = 0;
};

Summary summarize(std::vector<double> values);

struct MomentCheck {
    std::string name;
    std::string formula;
    double observed = 0;
    double expected = 0;
    double standard_error = 0;
    std::string criterion;  // "5 SE" or "10% relative"
    bool pass = false;
};

struct ExperimentReport {
    ExperimentConfig config;
    std::vector<TrialRecord> trials;
    Summary size;
    Summary triples;
    std::optional<Summary> arc;
    std::vector<MomentCheck> moments;
    double twothings_frequency = 0;
    double twothings_guarantee = 0;  // 1 - delta
    bool in_lower_range = false;  // q^{-3/2} < p < q^{-1}
    double parabola_mean = 0;
    double parabola_expected = 0;  // qp
    std::optional<double> prune_bound_frequency;  // share of trials with a(Q) >= |Q| - T(Q)
    std::optional<double> parabola_bound_frequency;  // share with a(Q) >= |Q ∩ C|
    std::optional<double> median_arc_over_sqrt_q;

    bool moments_pass() const;
};

// Exact mode requires pq^2 <= kExactArcLimit.
inline constexpr double kExactArcLimit = 120;

ExperimentReport random_arc_experiment(const ExperimentConfig& config);

std::string trial_json(const ExperimentReport& report, const TrialRecord& trial);
std::string report_json(const ExperimentReport& report);

struct ConstructionConfig {
    std::uint32_t q = 0;
    unsigned l = 4;
    double delta = 0.05;
    std::uint64_t seed = 0;
    unsigned max_attempts = 50;
    std::uint64_t node_budget = 10'000'000;
};

// Failed attempts per event. E4 is evaluated only when E1..E3 all pass.
struct EventTally {
    unsigned e1 = 0;  // |Q| < E|Q| / 2
    unsigned e2 = 0;  // T_l(Q) >= E|Q| / 4
    unsigned e3 = 0;  // T(Q) >= 10 E[T(Q)]
    unsigned e4 = 0;  // a(Q) >= q^{1/2 + delta}
};

struct ConstructionCertificate {
    std::uint32_t q = 0;
    unsigned l = 4;
    double delta = 0;
    DyadicProbability p{1};  // q^{-l/(l-1)} / 100 rounded to a dyadic
    std::uint64_t seed = 0;
    unsigned attempts = 0;
    std::vector<std::uint32_t> points;
    std::size_t sample_size = 0;
    std::size_t removed = 0;
    double size_floor = 0;  // q^{(l-2)/(l-1)} / 200
    bool size_check = false;
    std::uint64_t tuples = 0;  // T_l(P)
    bool no_l_tuples = false;
    std::uint64_t triples = 0;
    Rational triples_bound;  // 10 p^3 q^5
    bool triples_check = false;
    std::size_t arc_size = 0;  // a(P)
    bool arc_certified = false;
    double arc_threshold = 0;  // q^{1/2 + delta}
    bool arc_check = false;
    bool e4_downgraded = false;  // some a(Q) search hit its budget
    bool below_asymptotic_regime = false;  // p q^2 < 1
    EventTally failures;
};

// Resample Q until none of E1..E4 occurs, prune collinear l-tuples, and
// re-verify the result. Throws BudgetExceeded when max_attempts draws all fail.
ConstructionCertificate construct_no_l_tuples(const ConstructionConfig& config);

struct CertificateCheck {
    bool points_valid = false;
    bool no_l_tuples = false;
    bool bruteforce_run = false;  // determinant check over all l-subsets (|P| <= 64)
    bool bruteforce_agrees = false;
    bool size_floor = false;
    bool triples = false;
    bool arc = false;
    std::vector<std::string> failures;

    bool all_pass() const { return failures.empty(); }
};

// Recomputes every recorded property from the point list alone.
CertificateCheck verify_certificate(const ConstructionCertificate& cert, std::uint64_t node_budget = 10'000'000);

std::string construction_json(const ConstructionCertificate& cert);
ConstructionCertificate construction_from_json(const std::string& text);

struct ScanConfig {
    std::vector<std::uint32_t> qs;
    std::vector<double> exponents;  // p = q^{-exponent}
    unsigned trials = 100;
    std::uint64_t seed = 42;
    double delta = 0.05;
    ArcMode arc_mode = ArcMode::exact;
    unsigned jobs = 1;
};

struct ScanRow {
    std::uint32_t q = 0;
    double exponent = 0;
    DyadicProbability p{1};
    double threshold1 = 0;  // q^{1/2 + 2 delta}
    double threshold2 = 0;  // q^{1 + 2 delta} p^{1/2}
    int applicable = 1;  // 1 when p < 1/q, else 2
    unsigned trials = 0;
    double above1 = 0;  // share of trials with a(Q) > threshold1
    double above2 = 0;
    double mean_arc = 0;
    double median_arc = 0;
    bool all_optimal = false;
};

std::vector<ScanRow> threshold_scan(const ScanConfig& config);
std::string scan_csv_header();
std::string scan_csv_row(const ScanRow& row);

}  // namespace arclab
