#include "arclab/randlab.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <mutex>
#include <thread>

#include "arclab/error.hpp"
#include "arclab/maxarc.hpp"
#include "arclab/sets.hpp"
#include "json_io.hpp"

namespace arclab {

namespace {

// Runs fn(i) for i in [0, n); results must be written by index.
template <class F>
void parallel_for(std::uint64_t n, unsigned jobs, F&& fn)
{
    if (jobs <= 1 || n <= 1) {
        for (std::uint64_t i = 0; i < n; ++i) {
            fn(i);
        }
        return;
    }
    std::atomic<std::uint64_t> next{0};
    std::exception_ptr failure;
    std::mutex m;
    auto worker = [&]() {
        try {
            for (std::uint64_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) {
                fn(i);
            }
        } catch (...) {
            next.store(n);
            std::lock_guard lock(m);
            if (!failure) {
                failure = std::current_exception();
            }
        }
    };
    std::vector<std::thread> threads;
    for (unsigned j = 0; j < std::min<std::uint64_t>(jobs, n); ++j) {
        threads.emplace_back(worker);
    }
    for (auto& t : threads) {
        t.join();
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
}

double to_double(const Rational& r) { return static_cast<double>(to_real(r)); }

std::uint64_t to_u64(const BigInt& v) { return static_cast<std::uint64_t>(v); }

// p^l C(q,l) (q^2+q): expected collinear l-tuples in AG(2,q).
Rational expected_tuples(std::uint32_t q, const Rational& p, unsigned l)
{
    Rational pl(1);
    for (unsigned i = 0; i < l; ++i) {
        pl *= p;
    }
    return pl * Rational(binomial(q, l)) * Rational(BigInt(q) * q + q);
}

PlaneModel affine_plane(std::uint32_t q) { return PlaneModel(field_of_order(q), PlaneKind::affine); }

double quantile(const std::vector<double>& sorted, double f)
{
    const double pos = f * static_cast<double>(sorted.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(pos));
    const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
    return sorted[lo] + (pos - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

detail::json summary_json(const Summary& s)
{
    return {{"mean", s.mean}, {"variance", s.variance}, {"min", s.min},   {"q25", s.q25},
            {"median", s.median}, {"q75", s.q75},       {"max", s.max}};
}

MomentCheck mean_check(std::string name, std::string formula, const std::vector<double>& xs, double expected)
{
    const Summary s = summarize(xs);
    MomentCheck c;
    c.name = std::move(name);
    c.formula = std::move(formula);
    c.observed = s.mean;
    c.expected = expected;
    c.standard_error = std::sqrt(s.variance / static_cast<double>(xs.size()));
    c.criterion = "5 SE";
    c.pass = std::abs(c.observed - c.expected) <= 5 * c.standard_error;
    return c;
}

}  // namespace

PointSet sample_random(const PlaneModel& model, const DyadicProbability& p, std::uint64_t seed, std::uint64_t stream)
{
    const CounterRng rng(seed, stream);
    PointSet out = model.empty_set();
    for (std::uint32_t id = 0; id < model.num_points(); ++id) {
        if (p.admits(rng.at(id))) {
            out.insert(id);
        }
    }
    return out;
}

std::string_view to_string(ArcMode mode) noexcept
{
    switch (mode) {
    case ArcMode::none:
        return "none";
    case ArcMode::greedy:
        return "greedy";
    case ArcMode::exact:
        return "exact";
    }
    return "none";
}

ArcMode parse_arc_mode(std::string_view text)
{
    if (text == "none") {
        return ArcMode::none;
    }
    if (text == "greedy") {
        return ArcMode::greedy;
    }
    if (text == "exact") {
        return ArcMode::exact;
    }
    throw PreconditionError("unknown arc mode '" + std::string(text) + "' (none, greedy, exact)");
}

Summary summarize(std::vector<double> values)
{
    Summary s;
    if (values.empty()) {
        return s;
    }
    const double n = static_cast<double>(values.size());
    double sum = 0;
    for (const double v : values) {
        sum += v;
    }
    s.mean = sum / n;
    double ss = 0;
    for (const double v : values) {
        ss += (v - s.mean) * (v - s.mean);
    }
    s.variance = values.size() > 1 ? ss / (n - 1) : 0;
    std::sort(values.begin(), values.end());
    s.min = values.front();
    s.max = values.back();
    s.q25 = quantile(values, 0.25);
    s.median = quantile(values, 0.5);
    s.q75 = quantile(values, 0.75);
    return s;
}

bool ExperimentReport::moments_pass() const
{
    return std::all_of(moments.begin(), moments.end(), [](const MomentCheck& m) { return m.pass; });
}

ExperimentReport random_arc_experiment(const ExperimentConfig& config)
{
    if (config.trials == 0) {
        throw PreconditionError("trials must be positive");
    }
    if (config.l < 3) {
        throw PreconditionError("tuple order l must be at least 3");
    }
    if (!(config.delta > 0 && config.delta < 1)) {
        throw PreconditionError("delta must lie in (0, 1)");
    }
    const PlaneModel model = affine_plane(config.q);
    const std::uint32_t q = config.q;
    const Rational p = config.p.exact();
    const double pd = config.p.value();
    const double qd = q;
    if (config.arc_mode == ArcMode::exact && pd * qd * qd > kExactArcLimit) {
        throw PreconditionError("exact arc mode needs p q^2 <= " + std::to_string(static_cast<int>(kExactArcLimit)));
    }

    const Rational expected_size = p * q * q;
    const Real triple_cap = to_real(expected_tuples(q, p, 3)) / Real(config.delta);
    const PointSet parabola = model.parabola();

    ExperimentReport report;
    report.config = config;
    report.trials.resize(config.trials);
    parallel_for(config.trials, config.jobs, [&](std::uint64_t t) {
        const PointSet sample = sample_random(model, config.p, config.seed, t);
        TrialRecord r;
        r.trial = t;
        r.size = sample.size();
        const LineHistogram hist = line_histogram(model, sample);
        for (const std::uint32_t c : hist.counts) {
            r.triples += to_u64(binomial(c, 3));
            r.tuples += to_u64(binomial(c, config.l));
        }
        r.parabola_hits = sample.intersection_size(parabola);
        r.twothings = Rational(2 * r.size) >= expected_size && Real(r.triples) <= triple_cap;
        if (config.arc_mode == ArcMode::exact) {
            const ArcCertificate cert = max_arc_exact(model, sample, {config.node_budget});
            r.arc = cert.size;
            r.arc_optimal = cert.optimal;
        } else if (config.arc_mode == ArcMode::greedy) {
            const ArcCertificate cert = greedy_arc(model, sample, CounterRng(config.seed, t).derive(1));
            r.arc = cert.size;
            r.arc_optimal = cert.optimal;
        }
        report.trials[t] = r;
    });

    std::vector<double> sizes;
    std::vector<double> triples;
    std::vector<double> tuples;
    std::vector<double> arcs;
    std::vector<double> hits;
    std::uint64_t twothings = 0;
    std::uint64_t prune_ok = 0;
    std::uint64_t parabola_ok = 0;
    for (const TrialRecord& r : report.trials) {
        sizes.push_back(static_cast<double>(r.size));
        triples.push_back(static_cast<double>(r.triples));
        tuples.push_back(static_cast<double>(r.tuples));
        hits.push_back(static_cast<double>(r.parabola_hits));
        twothings += r.twothings ? 1 : 0;
        if (r.arc) {
            arcs.push_back(static_cast<double>(*r.arc));
            prune_ok += *r.arc + r.triples >= r.size ? 1 : 0;
            parabola_ok += *r.arc >= r.parabola_hits ? 1 : 0;
        }
    }
    const double n = static_cast<double>(config.trials);
    report.size = summarize(sizes);
    report.triples = summarize(triples);

    report.moments.push_back(mean_check("mean_size", "p q^2", sizes, to_double(expected_size)));
    {
        MomentCheck c;
        c.name = "variance_size";
        c.formula = "q^2 p (1 - p)";
        c.observed = report.size.variance;
        c.expected = to_double(p * (1 - p) * q * q);
        c.criterion = "10% relative";
        c.pass = std::abs(c.observed - c.expected) <= 0.1 * c.expected;
        report.moments.push_back(c);
    }
    report.moments.push_back(mean_check("mean_triples", "p^3 C(q,3) (q^2+q)", triples, to_double(expected_tuples(q, p, 3))));
    if (config.l != 3) {
        report.moments.push_back(mean_check("mean_tuples", "p^l C(q,l) (q^2+q), l = " + std::to_string(config.l),
                                            tuples, to_double(expected_tuples(q, p, config.l))));
    }

    report.twothings_frequency = static_cast<double>(twothings) / n;
    report.twothings_guarantee = 1 - config.delta;
    report.in_lower_range = pd > std::pow(qd, -1.5) && pd < 1 / qd;
    report.parabola_mean = summarize(hits).mean;
    report.parabola_expected = to_double(p * q);
    if (!arcs.empty()) {
        report.arc = summarize(arcs);
        report.prune_bound_frequency = static_cast<double>(prune_ok) / n;
        report.parabola_bound_frequency = static_cast<double>(parabola_ok) / n;
        report.median_arc_over_sqrt_q = report.arc->median / std::sqrt(qd);
    }
    return report;
}

std::string trial_json(const ExperimentReport& report, const TrialRecord& trial)
{
    detail::json j;
    j["q"] = report.config.q;
    j["p"] = to_string(report.config.p.exact());
    j["seed"] = report.config.seed;
    j["trial"] = trial.trial;
    j["size"] = trial.size;
    j["triples"] = trial.triples;
    j["l"] = report.config.l;
    j["tuples"] = trial.tuples;
    j["parabola_hits"] = trial.parabola_hits;
    if (trial.arc) {
        j["arc"] = *trial.arc;
        j["arc_optimal"] = trial.arc_optimal;
    } else {
        j["arc"] = nullptr;
    }
    j["twothings"] = trial.twothings;
    return j.dump();
}

std::string report_json(const ExperimentReport& report)
{
    const ExperimentConfig& c = report.config;
    detail::json j;
    j["version"] = kVersion;
    j["q"] = c.q;
    j["p"] = to_string(c.p.exact());
    j["p_value"] = c.p.value();
    j["seed"] = c.seed;
    j["trials"] = c.trials;
    j["arc_mode"] = std::string(to_string(c.arc_mode));
    j["l"] = c.l;
    j["delta"] = c.delta;
    j["size"] = summary_json(report.size);
    j["triples"] = summary_json(report.triples);
    j["arc"] = report.arc ? summary_json(*report.arc) : detail::json(nullptr);
    detail::json moments = detail::json::array();
    for (const MomentCheck& m : report.moments) {
        moments.push_back({{"name", m.name},
                           {"formula", m.formula},
                           {"observed", m.observed},
                           {"expected", m.expected},
                           {"standard_error", m.standard_error},
                           {"criterion", m.criterion},
                           {"pass", m.pass}});
    }
    j["moment_checks"] = moments;
    j["twothings_frequency"] = report.twothings_frequency;
    j["twothings_guarantee"] = report.twothings_guarantee;
    j["in_lower_range"] = report.in_lower_range;
    j["parabola_mean"] = report.parabola_mean;
    j["parabola_expected"] = report.parabola_expected;
    auto opt = [](const std::optional<double>& v) { return v ? detail::json(*v) : detail::json(nullptr); };
    j["prune_bound_frequency"] = opt(report.prune_bound_frequency);
    j["parabola_bound_frequency"] = opt(report.parabola_bound_frequency);
    j["median_arc_over_sqrt_q"] = opt(report.median_arc_over_sqrt_q);
    return j.dump();
}

ConstructionCertificate construct_no_l_tuples(const ConstructionConfig& config)
{
    if (config.l < 4) {
        throw PreconditionError("construction needs l >= 4");
    }
    if (!(config.delta > 0)) {
        throw PreconditionError("delta must be positive");
    }
    if (config.max_attempts == 0) {
        throw PreconditionError("max_attempts must be positive");
    }
    const PlaneModel model = affine_plane(config.q);
    const std::uint32_t q = config.q;
    const unsigned l = config.l;
    const Real qr(q);

    ConstructionCertificate cert;
    cert.q = q;
    cert.l = l;
    cert.delta = config.delta;
    cert.seed = config.seed;
    cert.p = DyadicProbability::from_real(real_pow(qr, -Real(l) / Real(l - 1)) / 100);
    const Rational p = cert.p.exact();
    const Rational mean_size = p * q * q;
    const Rational mean_triples = expected_tuples(q, p, 3);
    cert.below_asymptotic_regime = mean_size < 1;
    cert.size_floor = static_cast<double>(real_pow(qr, Real(l - 2) / Real(l - 1)) / 200);
    cert.triples_bound = 10 * p * p * p * Rational(BigInt(q) * q * q * q * q);
    cert.arc_threshold = static_cast<double>(real_pow(qr, Real(0.5) + Real(config.delta)));

    for (unsigned attempt = 0; attempt < config.max_attempts; ++attempt) {
        const PointSet sample = sample_random(model, cert.p, config.seed, attempt);
        const LineHistogram hist = line_histogram(model, sample);
        BigInt tl = 0;
        BigInt t3 = 0;
        for (const std::uint32_t c : hist.counts) {
            tl += binomial(c, l);
            t3 += binomial(c, 3);
        }
        const bool e1 = Rational(2 * sample.size()) < mean_size;
        const bool e2 = Rational(4 * tl) >= mean_size;
        const bool e3 = Rational(t3) >= 10 * mean_triples;
        cert.failures.e1 += e1 ? 1 : 0;
        cert.failures.e2 += e2 ? 1 : 0;
        cert.failures.e3 += e3 ? 1 : 0;
        if (e1 || e2 || e3) {
            continue;
        }
        const ArcCertificate arc = max_arc_exact(model, sample, {config.node_budget});
        if (!arc.optimal) {
            cert.e4_downgraded = true;
        } else if (static_cast<double>(arc.size) >= cert.arc_threshold) {
            ++cert.failures.e4;
            continue;
        }

        const PointSet pruned = prune_tuples(model, sample, l);
        cert.attempts = attempt + 1;
        cert.sample_size = sample.size();
        cert.removed = sample.size() - pruned.size();
        cert.points = pruned.ids();

        const ArcCertificate final_arc = max_arc_exact(model, pruned, {config.node_budget});
        cert.tuples = to_u64(count_collinear_tuples(model, pruned, l));
        cert.triples = collinear_triples(model, pruned);
        cert.arc_size = final_arc.size;
        cert.arc_certified = final_arc.optimal;
        cert.no_l_tuples = cert.tuples == 0;
        cert.size_check = static_cast<double>(pruned.size()) >= cert.size_floor;
        cert.triples_check = Rational(cert.triples) <= cert.triples_bound;
        cert.arc_check = cert.arc_certified && static_cast<double>(cert.arc_size) < cert.arc_threshold;
        return cert;
    }
    throw BudgetExceeded("construction failed in all " + std::to_string(config.max_attempts) + " attempts",
                         config.max_attempts);
}

CertificateCheck verify_certificate(const ConstructionCertificate& cert, std::uint64_t node_budget)
{
    CertificateCheck out;
    const PlaneModel model = affine_plane(cert.q);
    auto fail = [&](const std::string& what) { out.failures.push_back(what); };

    PointSet points = model.empty_set();
    out.points_valid = std::is_sorted(cert.points.begin(), cert.points.end());
    for (const std::uint32_t id : cert.points) {
        if (id >= model.num_points() || !points.insert(id)) {
            out.points_valid = false;
        }
    }
    if (!out.points_valid) {
        fail("point list is not a sorted set of valid ids");
        return out;
    }

    const BigInt tl = count_collinear_tuples(model, points, cert.l);
    out.no_l_tuples = tl == 0;
    if (!out.no_l_tuples || !cert.no_l_tuples || cert.tuples != 0) {
        fail("collinear l-tuples present");
    }

    std::uint64_t brute_triples = 0;
    if (cert.points.size() <= 64) {
        // Determinant test over every triple and every l-subset, no line tables.
        out.bruteforce_run = true;
        const auto& v = cert.points;
        const std::size_t n = v.size();
        for (std::size_t a = 0; a < n; ++a) {
            for (std::size_t b = a + 1; b < n; ++b) {
                for (std::size_t c = b + 1; c < n; ++c) {
                    brute_triples += model.collinear(v[a], v[b], v[c]) ? 1 : 0;
                }
            }
        }
        // A collinear l-set contains a collinear (l-1)-set; extend collinear triples.
        std::uint64_t brute_tuples = 0;
        std::vector<std::size_t> idx;
        auto extend = [&](auto&& self, std::size_t from) -> void {
            if (idx.size() == cert.l) {
                ++brute_tuples;
                return;
            }
            for (std::size_t c = from; c < n; ++c) {
                if (idx.size() < 2 || model.collinear(v[idx[0]], v[idx[1]], v[c])) {
                    idx.push_back(c);
                    self(self, c + 1);
                    idx.pop_back();
                }
            }
        };
        extend(extend, 0);
        out.bruteforce_agrees = brute_tuples == 0 && brute_triples == collinear_triples(model, points);
        if (!out.bruteforce_agrees) {
            fail("determinant recount disagrees with line counts");
        }
    }

    const double floor = static_cast<double>(real_pow(Real(cert.q), Real(cert.l - 2) / Real(cert.l - 1)) / 200);
    out.size_floor = static_cast<double>(points.size()) >= floor;
    if (!out.size_floor) {
        fail("size below q^{(l-2)/(l-1)}/200");
    }

    const Rational p = cert.p.exact();
    const Rational bound = 10 * p * p * p * Rational(BigInt(cert.q) * cert.q * cert.q * cert.q * cert.q);
    const std::uint64_t t3 = collinear_triples(model, points);
    out.triples = Rational(t3) <= bound && t3 == cert.triples;
    if (!out.triples) {
        fail("triple count exceeds 10 p^3 q^5 or differs from the record");
    }

    const ArcCertificate arc = max_arc_exact(model, points, {node_budget});
    const double threshold = static_cast<double>(real_pow(Real(cert.q), Real(0.5) + Real(cert.delta)));
    out.arc = arc.optimal && arc.size == cert.arc_size && static_cast<double>(arc.size) < threshold;
    if (!out.arc) {
        fail("a(P) recomputation disagrees or exceeds q^{1/2+delta}");
    }
    return out;
}

std::string construction_json(const ConstructionCertificate& cert)
{
    detail::json j;
    j["version"] = kVersion;
    j["q"] = cert.q;
    j["kind"] = "affine";
    j["l"] = cert.l;
    j["delta"] = cert.delta;
    j["p"] = to_string(cert.p.exact());
    j["p_value"] = cert.p.value();
    j["seed"] = cert.seed;
    j["attempts"] = cert.attempts;
    j["points"] = detail::record_to_json(PointSetRecord{cert.q, PlaneKind::affine, cert.points});
    j["size"] = cert.points.size();
    j["sample_size"] = cert.sample_size;
    j["removed"] = cert.removed;
    j["size_floor"] = cert.size_floor;
    j["size_check"] = cert.size_check;
    j["tuples"] = cert.tuples;
    j["no_l_tuples"] = cert.no_l_tuples;
    j["triples"] = cert.triples;
    j["triples_bound"] = to_string(cert.triples_bound);
    j["triples_check"] = cert.triples_check;
    j["arc_size"] = cert.arc_size;
    j["arc_certified"] = cert.arc_certified;
    j["arc_threshold"] = cert.arc_threshold;
    j["arc_check"] = cert.arc_check;
    j["e4_downgraded"] = cert.e4_downgraded;
    j["below_asymptotic_regime"] = cert.below_asymptotic_regime;
    j["failures"] = {{"E1", cert.failures.e1}, {"E2", cert.failures.e2}, {"E3", cert.failures.e3}, {"E4", cert.failures.e4}};
    return j.dump();
}

ConstructionCertificate construction_from_json(const std::string& text)
{
    try {
        const detail::json j = detail::json::parse(text);
        ConstructionCertificate c;
        c.q = j.at("q").get<std::uint32_t>();
        c.l = j.at("l").get<unsigned>();
        c.delta = j.at("delta").get<double>();
        c.p = DyadicProbability::parse(j.at("p").get<std::string>());
        c.seed = j.at("seed").get<std::uint64_t>();
        c.attempts = j.at("attempts").get<unsigned>();
        const PointSetRecord rec = detail::record_from_json_value(j.at("points"));
        if (rec.q != c.q || rec.kind != PlaneKind::affine) {
            throw PreconditionError("certificate point set header does not match q");
        }
        c.points = rec.ids;
        c.sample_size = j.at("sample_size").get<std::size_t>();
        c.removed = j.at("removed").get<std::size_t>();
        c.size_floor = j.at("size_floor").get<double>();
        c.size_check = j.at("size_check").get<bool>();
        c.tuples = j.at("tuples").get<std::uint64_t>();
        c.no_l_tuples = j.at("no_l_tuples").get<bool>();
        c.triples = j.at("triples").get<std::uint64_t>();
        c.triples_bound = parse_rational(j.at("triples_bound").get<std::string>());
        c.triples_check = j.at("triples_check").get<bool>();
        c.arc_size = j.at("arc_size").get<std::size_t>();
        c.arc_certified = j.at("arc_certified").get<bool>();
        c.arc_threshold = j.at("arc_threshold").get<double>();
        c.arc_check = j.at("arc_check").get<bool>();
        c.e4_downgraded = j.at("e4_downgraded").get<bool>();
        c.below_asymptotic_regime = j.at("below_asymptotic_regime").get<bool>();
        const auto& f = j.at("failures");
        c.failures = {f.at("E1").get<unsigned>(), f.at("E2").get<unsigned>(), f.at("E3").get<unsigned>(),
                      f.at("E4").get<unsigned>()};
        return c;
    } catch (const detail::json::exception& e) {
        throw PreconditionError(std::string("malformed construction certificate: ") + e.what());
    }
}

std::vector<ScanRow> threshold_scan(const ScanConfig& config)
{
    if (config.trials == 0) {
        throw PreconditionError("trials must be positive");
    }
    std::vector<ScanRow> rows;
    for (const std::uint32_t q : config.qs) {
        for (std::size_t e = 0; e < config.exponents.size(); ++e) {
            const double exponent = config.exponents[e];
            if (!(exponent > 0)) {
                throw PreconditionError("p exponents must be positive");
            }
            const Real qr(q);
            ScanRow row;
            row.q = q;
            row.exponent = exponent;
            row.p = DyadicProbability::from_real(real_pow(qr, -Real(exponent)));
            const Real pr = to_real(row.p.exact());
            row.threshold1 = static_cast<double>(real_pow(qr, Real(0.5) + 2 * Real(config.delta)));
            row.threshold2 = static_cast<double>(real_pow(qr, 1 + 2 * Real(config.delta)) * boost::multiprecision::sqrt(pr));
            row.applicable = pr * qr < 1 ? 1 : 2;
            row.trials = config.trials;

            ExperimentConfig ec;
            ec.q = q;
            ec.p = row.p;
            ec.trials = config.trials;
            ec.arc_mode = config.arc_mode == ArcMode::none ? ArcMode::exact : config.arc_mode;
            ec.seed = CounterRng(config.seed, q).derive(e);
            ec.l = 4;
            ec.delta = config.delta;
            ec.jobs = config.jobs;
            const ExperimentReport report = random_arc_experiment(ec);

            std::uint64_t above1 = 0;
            std::uint64_t above2 = 0;
            row.all_optimal = true;
            for (const TrialRecord& t : report.trials) {
                const double a = static_cast<double>(*t.arc);
                above1 += a > row.threshold1 ? 1 : 0;
                above2 += a > row.threshold2 ? 1 : 0;
                row.all_optimal = row.all_optimal && t.arc_optimal;
            }
            row.above1 = static_cast<double>(above1) / config.trials;
            row.above2 = static_cast<double>(above2) / config.trials;
            row.mean_arc = report.arc->mean;
            row.median_arc = report.arc->median;
            rows.push_back(row);
        }
    }
    return rows;
}

std::string scan_csv_header()
{
    return "q,exponent,p_num,p_den,threshold1,threshold2,applicable,trials,above1,above2,mean_arc,median_arc,all_optimal";
}

std::string scan_csv_row(const ScanRow& row)
{
    char buf[512];
    std::snprintf(buf, sizeof buf, "%u,%.4f,%llu,%llu,%.6f,%.6f,%d,%u,%.4f,%.4f,%.4f,%.1f,%d", row.q, row.exponent,
                  static_cast<unsigned long long>(row.p.numerator()),
                  static_cast<unsigned long long>(DyadicProbability::kDenominator), row.threshold1, row.threshold2,
                  row.applicable, row.trials, row.above1, row.above2, row.mean_arc, row.median_arc,
                  row.all_optimal ? 1 : 0);
    return buf;
}

}  // namespace arclab
