#include "cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <map>
#include <optional>
#include <sstream>

#include "arclab/bounds.hpp"
#include "arclab/census.hpp"
#include "arclab/error.hpp"
#include "arclab/maxarc.hpp"
#include "arclab/randlab.hpp"
#include "arclab/sets.hpp"

namespace arclab::cli {

namespace {

using nlohmann::json;

// Options that do not change the data and are left out of the config echo.
const char* const kNotEchoed[] = {"help", "jobs", "out"};

struct Output {
    std::string format;
    std::string path;
};

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw PreconditionError("cannot read '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Certificate files written by this tool start with the config header line; the payload is the last line.
std::string payload_line(const std::string& text)
{
    std::istringstream in(text);
    std::string line;
    std::string last;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") != std::string::npos) {
            last = line;
        }
    }
    return last;
}

std::filesystem::path resolve_output(const std::string& path)
{
    std::filesystem::path p(path);
    if (p.is_relative()) {
        if (const char* dir = std::getenv("ARCLAB_OUTPUT_DIR"); dir != nullptr && *dir != '\0') {
            p = std::filesystem::path(dir) / p;
        }
    }
    return p;
}

// Every option of the subcommand with its effective value, in declaration order.
std::vector<std::pair<std::string, std::string>> config_echo(const CLI::App& sub)
{
    std::vector<std::pair<std::string, std::string>> out;
    for (const CLI::Option* opt : sub.get_options()) {
        const std::string name = opt->get_single_name();
        if (std::find(std::begin(kNotEchoed), std::end(kNotEchoed), name) != std::end(kNotEchoed)) {
            continue;
        }
        std::string value;
        if (opt->count() > 0) {
            const auto& results = opt->results();
            for (std::size_t i = 0; i < results.size(); ++i) {
                value += (i ? "," : "") + results[i];
            }
        } else {
            value = opt->get_default_str();
            // vector defaults render as [a,b]; match the explicit a,b form
            if (value.size() >= 2 && value.front() == '[' && value.back() == ']') {
                value = value.substr(1, value.size() - 2);
            }
        }
        out.emplace_back(name, value);
    }
    return out;
}

std::string header(const CLI::App& sub, const std::string& format)
{
    const auto echo = config_echo(sub);
    if (format == "csv") {
        std::string line = std::string("# arclab ") + kVersion + " " + sub.get_name();
        for (const auto& [k, v] : echo) {
            line += " " + k + "=" + v;
        }
        return line;
    }
    json config = json::object();
    for (const auto& [k, v] : echo) {
        config[k] = v;
    }
    return json{{"arclab", kVersion}, {"command", sub.get_name()}, {"config", config}}.dump();
}

std::string real_str(const Real& x) { return to_string(x, 20); }

Real parse_real(const std::string& text, const char* what)
{
    try {
        std::size_t used = 0;
        const double d = std::stod(text, &used);
        if (used == text.size()) {
            (void)d;
            return Real(text);
        }
    } catch (const std::exception&) {
    }
    throw PreconditionError(std::string("invalid number for ") + what + ": '" + text + "'");
}

struct PointSource {
    std::uint32_t q = 0;
    std::string kind = "affine";
    std::string file;
    bool full = false;
    bool parabola = false;
    std::string random;
    std::uint64_t seed = 0;
};

void add_point_source(CLI::App* sub, PointSource& s)
{
    sub->add_option("--q", s.q, "Field order (taken from --points when omitted)");
    sub->add_option("--kind", s.kind, "affine or projective")->capture_default_str();
    auto* file = sub->add_option("--points", s.file, "Point set file (text or JSON record)");
    auto* full = sub->add_flag("--full", s.full, "Use every point of the plane")->default_str("false");
    auto* para = sub->add_flag("--parabola", s.parabola, "Use the parabola / conic")->default_str("false");
    auto* rnd = sub->add_option("--random", s.random, "p-random subset with this probability");
    file->excludes(full)->excludes(para)->excludes(rnd);
    full->excludes(para)->excludes(rnd);
    para->excludes(rnd);
    sub->add_option("--seed", s.seed, "Seed for --random")->capture_default_str();
}

struct Loaded {
    PlaneModel model;
    PointSet points;
};

Loaded load_points(const PointSource& s)
{
    if (!s.file.empty()) {
        const PointSetRecord rec = parse_point_set(read_file(s.file));
        if (s.q != 0 && s.q != rec.q) {
            throw PreconditionError("--q disagrees with the point set header");
        }
        PlaneModel model(field_of_order(rec.q), rec.kind);
        PointSet pts = to_point_set(model, rec);
        return {std::move(model), std::move(pts)};
    }
    if (s.q == 0) {
        throw PreconditionError("--q is required unless --points is given");
    }
    PlaneModel model(field_of_order(s.q), parse_plane_kind(s.kind));
    PointSet pts = model.empty_set();
    if (s.full) {
        pts = model.full_set();
    } else if (s.parabola) {
        pts = model.parabola();
    } else if (!s.random.empty()) {
        pts = sample_random(model, DyadicProbability::parse(s.random), s.seed);
    } else {
        throw PreconditionError("choose a point source: --points, --full, --parabola or --random");
    }
    return {std::move(model), std::move(pts)};
}

json histogram_json(const LineHistogram& h)
{
    json j = json::object();
    for (const auto& [size, lines] : h.summary) {
        j[std::to_string(size)] = lines;
    }
    return j;
}

json container_json(const ContainerCheck& c)
{
    return {{"terminal", c.terminal},
            {"tau", real_str(c.tau)},
            {"epsilon", real_str(c.epsilon)},
            {"delta2", real_str(c.delta2)},
            {"delta3", real_str(c.delta3)},
            {"degree_lower", real_str(c.degree_lower)},
            {"cond1_lhs", real_str(c.cond1_lhs)},
            {"cond1_rhs", real_str(c.cond1_rhs)},
            {"cond1", c.cond1},
            {"condition_lhs", real_str(c.condition_lhs)},
            {"condition_rhs", real_str(c.condition_rhs)},
            {"condition", c.condition},
            {"sufficiency1_lhs", real_str(c.sufficiency1_lhs)},
            {"sufficiency2_lhs", real_str(c.sufficiency2_lhs)},
            {"sufficiency_rhs", real_str(c.sufficiency_rhs)},
            {"sufficiency1", c.sufficiency1},
            {"sufficiency2", c.sufficiency2},
            {"cond2", c.cond2},
            {"cond2_margin", real_str(c.cond2_margin)},
            {"tau_in_range", c.tau_in_range},
            {"epsilon_in_range", c.epsilon_in_range},
            {"container_size_cap", real_str(c.container_size_cap)},
            {"log2_container_count", real_str(c.log2_container_count)},
            {"iterations", real_str(c.iterations)},
            {"all_pass", c.all_pass()}};
}

// Verification of a max-arc certificate written by `maxarc`.
json verify_arc_certificate(const std::string& text, std::uint64_t budget, bool& ok)
{
    json cert;
    try {
        cert = json::parse(text);
    } catch (const json::exception& e) {
        throw PreconditionError(std::string("malformed certificate: ") + e.what());
    }
    const auto q = cert.at("q").get<std::uint32_t>();
    const PlaneModel model(field_of_order(q), parse_plane_kind(cert.at("kind").get<std::string>()));
    const auto witness_ids = cert.at("witness").get<std::vector<std::uint32_t>>();
    const PointSet witness = to_point_set(model, {q, model.kind(), witness_ids});
    json out;
    const bool arc = is_arc(model, witness);
    const bool size = witness.size() == cert.at("arc_size").get<std::size_t>();
    out["witness_is_arc"] = arc;
    out["size_matches"] = size;
    ok = arc && size;
    if (cert.contains("input")) {
        const PointSet input = to_point_set(model, {q, model.kind(), cert.at("input").get<std::vector<std::uint32_t>>()});
        const bool subset = witness.is_subset_of(input);
        out["witness_in_input"] = subset;
        ok = ok && subset;
        if (cert.at("optimal").get<bool>()) {
            const ArcCertificate redo = max_arc_exact(model, input, {budget});
            const bool same = redo.optimal && redo.size == witness.size();
            out["optimality_rechecked"] = same;
            ok = ok && same;
        }
    }
    out["pass"] = ok;
    return out;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app("Arcs in finite planes: exact census, maximum arcs, bounds and random experiments", "arclab");
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    Output io;
    unsigned jobs = 1;
    bool timing = false;
    std::map<const CLI::App*, std::string> default_format;
    auto add_io = [&](CLI::App* sub, const std::string& format) {
        default_format[sub] = format;
        sub->add_option("--format", io.format, "json or csv")
            ->check(CLI::IsMember({"json", "csv"}))
            ->default_str(format);
        sub->add_option("--out", io.path, "Write data here instead of stdout (relative to $ARCLAB_OUTPUT_DIR)");
    };

    // census
    auto* census = app.add_subcommand("census", "Exact number of k-arcs in AG(2,q) or PG(2,q)");
    std::uint32_t census_q = 0;
    std::vector<std::uint32_t> census_k;
    std::string census_kind = "affine";
    std::string census_mode = "capped";
    std::uint64_t census_budget = CensusQuery{}.node_budget;
    bool census_orbit = false;
    std::uint64_t census_relabel = 0;
    census->add_option("--q", census_q, "Field order")->required();
    census->add_option("--k", census_k, "Arc size(s), comma separated")->required()->delimiter(',');
    census->add_option("--kind", census_kind, "affine or projective")->capture_default_str();
    census->add_option("--mode", census_mode, "exact or capped")
        ->check(CLI::IsMember({"exact", "capped"}))
        ->capture_default_str();
    census->add_option("--budget", census_budget, "Node budget in capped mode")->capture_default_str();
    census->add_flag("--orbit", census_orbit, "Count extensions of one triangle and scale")->default_str("false");
    census->add_option("--relabel-seed", census_relabel, "Search in the order of a random collineation (0: identity)")
        ->capture_default_str();
    census->add_option("--jobs", jobs, "Worker threads")->capture_default_str();
    census->add_flag("--timing", timing, "Fill the ms column with wall time")->default_str("false");
    add_io(census, "csv");

    // maxarc
    auto* maxarc = app.add_subcommand("maxarc", "Largest arc inside a point set");
    PointSource maxarc_src;
    std::string maxarc_method = "exact";
    std::uint64_t maxarc_budget = MaxArcOptions{}.node_budget;
    unsigned maxarc_retries = 100;
    std::string maxarc_verify;
    add_point_source(maxarc, maxarc_src);
    maxarc->add_option("--method", maxarc_method, "exact or greedy")
        ->check(CLI::IsMember({"exact", "greedy"}))
        ->capture_default_str();
    maxarc->add_option("--budget", maxarc_budget, "Branch-and-bound node budget")->capture_default_str();
    maxarc->add_option("--retries", maxarc_retries, "Greedy retries")->capture_default_str();
    maxarc->add_option("--verify", maxarc_verify, "Re-check a certificate file instead of searching");
    add_io(maxarc, "json");

    // tuples
    auto* tuples = app.add_subcommand("tuples", "Collinear l-tuple counts and line histogram");
    PointSource tuples_src;
    unsigned tuples_l = 3;
    add_point_source(tuples, tuples_src);
    tuples->add_option("--l", tuples_l, "Tuple order (>= 3)")->capture_default_str();
    add_io(tuples, "json");

    // supersat
    auto* supersat = app.add_subcommand("supersat", "Collinear-triple lower-bound chain for a large set");
    PointSource supersat_src;
    bool supersat_codegrees = false;
    add_point_source(supersat, supersat_src);
    supersat->add_flag("--codegrees", supersat_codegrees, "Also report brute-force hypergraph co-degrees")->default_str("false");
    add_io(supersat, "json");

    // bounds
    auto* bounds = app.add_subcommand("bounds", "Trivial, product and exponential bounds on A(q,k)");
    std::uint64_t bounds_q = 0;
    std::uint64_t bounds_k = 0;
    std::string bounds_delta = "0.1";
    std::string bounds_t;
    bounds->add_option("--q", bounds_q, "Field order")->required();
    bounds->add_option("--k", bounds_k, "Arc size")->required();
    bounds->add_option("--delta", bounds_delta, "delta > 0")->capture_default_str();
    bounds->add_option("--t", bounds_t, "Also evaluate the large-k bound at k = floor(q^t)");
    add_io(bounds, "json");

    // container-check
    auto* container = app.add_subcommand("container-check", "Container theorem hypothesis arithmetic");
    std::string cc_q;
    std::string cc_s;
    std::string cc_t;
    std::string cc_delta;
    std::string cc_c = "1";
    std::string cc_cdelta = "1";
    container->add_option("--q", cc_q, "q (real)")->required();
    container->add_option("--s", cc_s, "Current set has size q^{2-s}")->required();
    container->add_option("--t", cc_t, "Target arc size q^t")->required();
    container->add_option("--delta", cc_delta, "delta > 0")->required();
    container->add_option("--c", cc_c, "Supersaturation constant")->capture_default_str();
    container->add_option("--c-delta", cc_cdelta, "Container-count constant")->capture_default_str();
    add_io(container, "json");

    // random-arc
    auto* random_arc = app.add_subcommand("random-arc", "p-random subsets: moments and arc sizes");
    ExperimentConfig rx;
    std::string rx_p;
    std::string rx_exponent;
    std::string rx_mode = "none";
    bool rx_summary_only = false;
    random_arc->add_option("--q", rx.q, "Field order")->required();
    auto* rx_p_opt = random_arc->add_option("--p", rx_p, "Inclusion probability (decimal or dyadic num/den)");
    auto* rx_e_opt = random_arc->add_option("--p-exponent", rx_exponent, "Use p = q^{-e}");
    rx_p_opt->excludes(rx_e_opt);
    random_arc->add_option("--trials", rx.trials, "Number of trials")->required();
    random_arc->add_option("--arc-mode", rx_mode, "none, greedy or exact")
        ->check(CLI::IsMember({"none", "greedy", "exact"}))
        ->capture_default_str();
    random_arc->add_option("--seed", rx.seed, "Seed")->capture_default_str();
    random_arc->add_option("--l", rx.l, "Tuple order of the extra moment")->capture_default_str();
    random_arc->add_option("--delta", rx.delta, "delta for the two-events check")->capture_default_str();
    random_arc->add_option("--budget", rx.node_budget, "Per-trial node budget in exact mode")->capture_default_str();
    random_arc->add_option("--jobs", jobs, "Worker threads")->capture_default_str();
    random_arc->add_flag("--summary-only", rx_summary_only, "Skip the per-trial lines")->default_str("false");
    add_io(random_arc, "json");

    // construct
    auto* construct = app.add_subcommand("construct", "Point set with no collinear l-tuples and few triples");
    ConstructionConfig cx;
    std::string cx_verify;
    construct->add_option("--q", cx.q, "Field order");
    construct->add_option("--l", cx.l, "Forbidden tuple order (>= 4)")->capture_default_str();
    construct->add_option("--delta", cx.delta, "delta > 0")->capture_default_str();
    construct->add_option("--seed", cx.seed, "Seed")->capture_default_str();
    construct->add_option("--max-attempts", cx.max_attempts, "Resampling limit")->capture_default_str();
    construct->add_option("--budget", cx.node_budget, "Node budget for each a(Q) search")->capture_default_str();
    construct->add_option("--verify", cx_verify, "Re-check a certificate file from scratch");
    add_io(construct, "json");

    // mds
    auto* mds = app.add_subcommand("mds", "Number of [n,3]_q MDS codes from the projective arc census");
    std::uint32_t mds_q = 0;
    std::uint32_t mds_n = 0;
    std::uint64_t mds_budget = CensusQuery{}.node_budget;
    bool mds_orbit = false;
    mds->add_option("--q", mds_q, "Field order")->required();
    mds->add_option("--n", mds_n, "Code length")->required();
    mds->add_option("--budget", mds_budget, "Census node budget")->capture_default_str();
    mds->add_flag("--orbit", mds_orbit, "Orbit-reduced census")->default_str("false");
    mds->add_option("--jobs", jobs, "Worker threads")->capture_default_str();
    add_io(mds, "json");

    // scan
    auto* scan = app.add_subcommand("scan", "Threshold trend table for a(Q) of p-random sets");
    ScanConfig sx;
    std::string sx_mode = "exact";
    sx.qs = {9, 11, 13};
    sx.exponents = {1.1, 1.25, 1.4};
    scan->add_option("--qs", sx.qs, "Field orders")->delimiter(',')->capture_default_str();
    scan->add_option("--exponents", sx.exponents, "p = q^{-e}")->delimiter(',')->capture_default_str();
    scan->add_option("--trials", sx.trials, "Trials per cell")->capture_default_str();
    scan->add_option("--seed", sx.seed, "Seed")->capture_default_str();
    scan->add_option("--delta", sx.delta, "delta")->capture_default_str();
    scan->add_option("--arc-mode", sx_mode, "greedy or exact")
        ->check(CLI::IsMember({"greedy", "exact"}))
        ->capture_default_str();
    scan->add_option("--jobs", jobs, "Worker threads")->capture_default_str();
    add_io(scan, "csv");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            app.exit(e, out, err);
            return kExitOk;
        }
        err << "arclab: " << e.what() << "\n";
        err << "run 'arclab --help' for usage\n";
        return kExitUsage;
    }

    CLI::App* sub = app.get_subcommands().front();
    if (io.format.empty()) {
        io.format = default_format[sub];
    }
    std::ostringstream data;
    int status = kExitOk;
    auto csv_only_json = [&]() {
        if (io.format != "json") {
            throw PreconditionError(sub->get_name() + " only writes json");
        }
    };

    try {
        data << header(*sub, io.format) << "\n";

        if (sub == census) {
            const PlaneModel model(field_of_order(census_q), parse_plane_kind(census_kind));
            CensusQuery query;
            query.mode = census_mode == "exact" ? CensusMode::exact : CensusMode::capped;
            query.node_budget = census_budget;
            query.orbit_reduction = census_orbit;
            query.jobs = jobs;
            if (census_relabel != 0) {
                query.relabeling = random_collineation(model, census_relabel);
            }
            if (io.format == "csv") {
                data << census_csv_header() << "\n";
            }
            for (const std::uint32_t k : census_k) {
                query.k = k;
                const CensusResult r = count_arcs_exact(model, query);
                data << (io.format == "csv" ? census_csv_row(model, k, r, timing) : census_json(model, k, r, timing))
                     << "\n";
            }
        } else if (sub == maxarc) {
            csv_only_json();
            if (!maxarc_verify.empty()) {
                bool ok = false;
                data << verify_arc_certificate(payload_line(read_file(maxarc_verify)), maxarc_budget, ok).dump() << "\n";
                if (!ok) {
                    err << "arclab: certificate verification failed\n";
                    status = kExitFailure;
                }
            } else {
                const Loaded in = load_points(maxarc_src);
                const ArcCertificate cert = maxarc_method == "exact"
                                                ? max_arc_exact(in.model, in.points, {maxarc_budget})
                                                : greedy_arc(in.model, in.points, maxarc_src.seed, maxarc_retries);
                data << certificate_json(in.model, cert, &in.points) << "\n";
            }
        } else if (sub == tuples) {
            csv_only_json();
            const Loaded in = load_points(tuples_src);
            const LineHistogram h = line_histogram(in.model, in.points);
            const CoverageSet cover = coverage(in.model, in.points);
            json j{{"q", in.model.q()},
                   {"kind", std::string(to_string(in.model.kind()))},
                   {"size", in.points.size()},
                   {"l", tuples_l},
                   {"tuples", to_string(count_collinear_tuples(in.model, in.points, tuples_l))},
                   {"triples", collinear_triples(in.model, in.points)},
                   {"is_arc", is_arc(in.model, in.points)},
                   {"incidences", h.total()},
                   {"histogram", histogram_json(h)},
                   {"coverage", cover.cardinality},
                   {"coverage_lines", cover.lines_used}};
            if (cover.bound_checked) {
                j["coverage_bounds"] = {{"lower", to_string(cover.lower)},
                                        {"upper", to_string(cover.upper)},
                                        {"holds", cover.bound_holds}};
            }
            data << j.dump() << "\n";
        } else if (sub == supersat) {
            csv_only_json();
            const Loaded in = load_points(supersat_src);
            const SupersaturationReport r = supersaturation_report(in.model, in.points);
            json chain = json::array();
            for (const ChainStep& s : r.chain) {
                chain.push_back({{"name", s.name},
                                 {"relation", s.relation},
                                 {"lhs", to_string(s.lhs)},
                                 {"rhs", to_string(s.rhs)},
                                 {"holds", s.holds}});
            }
            json j{{"q", in.model.q()},
                   {"kind", std::string(to_string(in.model.kind()))},
                   {"size", r.size},
                   {"triples", r.triples},
                   {"ratio", to_string(r.ratio)},
                   {"long_lines", r.long_lines},
                   {"chain", chain},
                   {"chain_holds", r.chain_holds()}};
            if (supersat_codegrees) {
                const CodegreeStats c = collinearity_codegrees(in.model);
                j["codegrees"] = {{"pair_min", c.pair_min}, {"pair_max", c.pair_max}, {"triple_max", c.triple_max}};
            }
            data << j.dump() << "\n";
        } else if (sub == bounds) {
            csv_only_json();
            const Real delta = parse_real(bounds_delta, "--delta");
            const TrivialBounds tb = trivial_bounds(bounds_q, bounds_k);
            const ProductBounds pb = arc_probability_products(bounds_q, bounds_k);
            json j{{"q", bounds_q},
                   {"k", bounds_k},
                   {"trivial", {{"lower", to_string(tb.lower)}, {"upper", to_string(tb.upper)}}},
                   {"product", {{"lower", to_string(pb.lower)}, {"upper", to_string(pb.upper)}}}};
            const Real need = Real(bounds_k) * Real(bounds_k) * (1 + delta) * (1 + delta);
            if (need <= Real(bounds_q)) {
                const SmallTBounds s = smallt_bounds(bounds_q, bounds_k, delta);
                j["small_k"] = {{"c", real_str(s.c)},
                                {"C", real_str(s.C)},
                                {"exp_lower", real_str(s.exp_lo)},
                                {"exp_upper", real_str(s.exp_hi)},
                                {"product_count_lower", real_str(s.scaled_product_lo)},
                                {"product_count_upper", real_str(s.scaled_product_hi)}};
            } else {
                j["small_k"] = nullptr;
            }
            if (!bounds_t.empty()) {
                const LargeTBound lt = larget_bound(bounds_q, parse_real(bounds_t, "--t"), delta);
                j["large_k"] = {{"k", lt.k},
                                {"top_real", real_str(lt.top_real)},
                                {"top", to_string(lt.top)},
                                {"bound", to_string(lt.bound)},
                                {"trivial_upper", to_string(lt.trivial_upper)}};
            }
            data << j.dump() << "\n";
        } else if (sub == container) {
            csv_only_json();
            BoundParams params;
            params.q = parse_real(cc_q, "--q");
            params.s = parse_real(cc_s, "--s");
            params.t = parse_real(cc_t, "--t");
            params.delta = parse_real(cc_delta, "--delta");
            params.c = parse_real(cc_c, "--c");
            params.c_delta = parse_real(cc_cdelta, "--c-delta");
            data << container_json(container_condition(params)).dump() << "\n";
        } else if (sub == random_arc) {
            csv_only_json();
            if (rx_p.empty() == rx_exponent.empty()) {
                throw PreconditionError("give exactly one of --p and --p-exponent");
            }
            rx.p = rx_p.empty()
                       ? DyadicProbability::from_real(real_pow(Real(rx.q), -parse_real(rx_exponent, "--p-exponent")))
                       : DyadicProbability::parse(rx_p);
            rx.arc_mode = parse_arc_mode(rx_mode);
            rx.jobs = jobs;
            const ExperimentReport report = random_arc_experiment(rx);
            if (!rx_summary_only) {
                for (const TrialRecord& t : report.trials) {
                    data << trial_json(report, t) << "\n";
                }
            }
            data << report_json(report) << "\n";
        } else if (sub == construct) {
            csv_only_json();
            if (!cx_verify.empty()) {
                const ConstructionCertificate cert = construction_from_json(payload_line(read_file(cx_verify)));
                const CertificateCheck check = verify_certificate(cert, cx.node_budget);
                json j{{"points_valid", check.points_valid},
                       {"no_l_tuples", check.no_l_tuples},
                       {"bruteforce_run", check.bruteforce_run},
                       {"bruteforce_agrees", check.bruteforce_agrees},
                       {"size_floor", check.size_floor},
                       {"triples", check.triples},
                       {"arc", check.arc},
                       {"failures", check.failures},
                       {"pass", check.all_pass()}};
                data << j.dump() << "\n";
                if (!check.all_pass()) {
                    err << "arclab: certificate verification failed\n";
                    status = kExitFailure;
                }
            } else {
                if (cx.q == 0) {
                    throw PreconditionError("--q is required");
                }
                const ConstructionCertificate cert = construct_no_l_tuples(cx);
                if (cert.below_asymptotic_regime) {
                    err << "arclab: note: p q^2 < 1, below the regime where the resampling bound applies\n";
                }
                data << construction_json(cert) << "\n";
            }
        } else if (sub == mds) {
            csv_only_json();
            CensusQuery query;
            query.k = mds_n;
            query.node_budget = mds_budget;
            query.orbit_reduction = mds_orbit;
            query.jobs = jobs;
            const CensusResult r = count_arcs_projective(mds_q, query);
            const BigInt codes = mds_count(mds_q, mds_n, r.count);
            data << json{{"q", mds_q},
                         {"n", mds_n},
                         {"arcs", to_string(r.count)},
                         {"nodes", r.nodes},
                         {"mds_codes", to_string(codes)}}
                        .dump()
                 << "\n";
        } else if (sub == scan) {
            sx.arc_mode = parse_arc_mode(sx_mode);
            sx.jobs = jobs;
            const std::vector<ScanRow> rows = threshold_scan(sx);
            if (io.format == "csv") {
                data << scan_csv_header() << "\n";
                for (const ScanRow& r : rows) {
                    data << scan_csv_row(r) << "\n";
                }
            } else {
                for (const ScanRow& r : rows) {
                    data << json{{"q", r.q},
                                 {"exponent", r.exponent},
                                 {"p", to_string(r.p.exact())},
                                 {"threshold1", r.threshold1},
                                 {"threshold2", r.threshold2},
                                 {"applicable", r.applicable},
                                 {"trials", r.trials},
                                 {"above1", r.above1},
                                 {"above2", r.above2},
                                 {"mean_arc", r.mean_arc},
                                 {"median_arc", r.median_arc},
                                 {"all_optimal", r.all_optimal}}
                                .dump()
                         << "\n";
                }
            }
        }
    } catch (const BudgetExceeded& e) {
        err << "arclab: budget exhausted: " << e.what() << " (nodes " << e.nodes() << ")\n";
        return kExitBudget;
    } catch (const PreconditionError& e) {
        err << "arclab: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const std::exception& e) {
        err << "arclab: internal error: " << e.what() << "\n";
        return kExitFailure;
    }

    if (io.path.empty()) {
        out << data.str();
    } else {
        const std::filesystem::path path = resolve_output(io.path);
        if (path.has_parent_path()) {
            std::filesystem::create_directories(path.parent_path());
        }
        std::ofstream file(path, std::ios::binary);
        if (!file || !(file << data.str())) {
            err << "arclab: cannot write '" << path.string() << "'\n";
            return kExitFailure;
        }
        err << "arclab: wrote " << path.string() << "\n";
    }
    return status;
}

}  // namespace arclab::cli
