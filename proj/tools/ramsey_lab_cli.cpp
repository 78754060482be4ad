#include <ramsey_lab/certificate.hpp>
#include <ramsey_lab/constructive.hpp>
#include <ramsey_lab/prover.hpp>
#include <ramsey_lab/witness.hpp>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <regex>

#ifndef RAMSEY_LAB_VERSION
#define RAMSEY_LAB_VERSION "unknown"
#endif

using namespace ramsey_lab;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

enum Exit : int { ok = 0, unsat = 10, unknown = 20, usage = 2, hypothesis = 3, gap = 4 };

struct Run {
    std::vector<std::string> argv;
    std::string out;
    std::string cert_dir = ".";
    std::uint64_t seed = 1;
    int threads = 1;
    std::uint64_t max_nodes = 0;
    double max_secs = 0;
    json inputs = json::object();
    json result = json::object();
    std::vector<std::string> certificates;

    [[nodiscard]] auto budget() const -> Budget { return {max_nodes, max_secs}; }

    auto write_json(const std::string & name, const json & doc) -> std::string
    {
        fs::create_directories(cert_dir);
        auto path = (fs::path(cert_dir) / name).string();
        std::ofstream(path) << doc.dump(2) << "\n";
        return path;
    }

    /// Writes a certificate after checking it; arrowing certificates are not
    /// re-run here since that repeats the search.
    auto certify(const std::string & name, const json & doc) -> std::string
    {
        if (doc.at("type") != "arrowing") {
            auto check = verify_certificate(doc, cert_dir);
            require(check.ok, ErrorKind::internal_assertion, "fresh certificate fails its check: " + check.reason);
        }
        auto path = write_json(name, doc);
        certificates.push_back(path);
        return path;
    }
};

auto stem(const LooseTemplate & t) -> std::string
{
    return std::string(t.is_cycle() ? "cycle" : "path") + std::to_string(t.length());
}

auto stats_json(const ArrowingStats & s) -> json
{
    return {{"nodes", s.nodes}, {"propagations", s.propagations}, {"wall_seconds", s.wall_seconds}};
}

auto load_json(const std::string & path) -> json
{
    std::ifstream in(path);
    require(static_cast<bool>(in), ErrorKind::invalid_parameter, "cannot open " + path);
    try {
        return json::parse(in);
    }
    catch (const json::exception & e) {
        fail(ErrorKind::invalid_parameter, path + ": " + e.what());
    }
}

// ---- subcommands ----

auto run_witness(Run & run, int k, int n, int m, const std::string & pair_text) -> int
{
    auto pair = parse_pair_kind(pair_text);
    auto w = lower_bound_witness(k, n, m, pair);
    auto [red, blue] = pair_targets(k, n, m, pair);
    std::string base = "witness_k" + std::to_string(k) + "_" + to_string(pair) + "_n" + std::to_string(n) + "_m"
        + std::to_string(m);
    auto coloring_path = run.write_json(base + "_coloring.json", coloring_to_json(w.coloring));
    auto cert = witness_certificate(w.coloring, red, blue, {"lower bound construction", run.seed, false, {}});
    cert["coloring_ref"] = base + "_coloring.json";
    auto cert_path = run.certify(base + ".json", cert);
    run.result = {{"claim", "R(" + red.name() + "," + blue.name() + ";k=" + std::to_string(k) + ") > "
                                    + std::to_string(w.n_vertices)},
        {"n_vertices", w.n_vertices}, {"core_size", w.core_size}, {"conjectured_value", conjectured_value(k, n, m, pair)},
        {"coloring", coloring_path}, {"certificate", cert_path}};
    return Exit::ok;
}

auto run_arrow(Run & run, int k, int n_vertices, const std::string & red_text, const std::string & blue_text,
        bool symmetry) -> int
{
    auto red = parse_target(red_text, k);
    auto blue = parse_target(blue_text, k);
    ArrowingOptions options;
    options.symmetry_pruning = symmetry;
    options.threads = run.threads;
    auto v = decide_arrowing(k, n_vertices, red, blue, run.budget(), options);
    run.result = {{"status", to_string(v.status)}, {"stats", stats_json(v.stats)}};
    std::string base = "arrow_k" + std::to_string(k) + "_N" + std::to_string(n_vertices) + "_" + stem(red) + "_" + stem(blue);
    if (v.status == ArrowingStatus::SAT) {
        run.result["claim"] = "K^" + std::to_string(k) + "_" + std::to_string(n_vertices) + " does not arrow";
        run.result["certificate"] = run.certify(base + ".json",
                witness_certificate(*v.witness, red, blue, {"arrowing search", run.seed, false, {}}));
        return Exit::ok;
    }
    if (v.status == ArrowingStatus::UNSAT) {
        run.result["claim"] = "K^" + std::to_string(k) + "_" + std::to_string(n_vertices) + " arrows";
        run.result["certificate"] = run.certify(base + ".json",
                arrowing_certificate(k, n_vertices, red, blue, {"arrowing search", run.seed, false, {}}));
        return Exit::unsat;
    }
    return Exit::unknown;
}

auto run_ramsey(Run & run, int k, const std::string & red_text, const std::string & blue_text, bool symmetry) -> int
{
    auto red = parse_target(red_text, k);
    auto blue = parse_target(blue_text, k);
    ArrowingOptions options;
    options.symmetry_pruning = symmetry;
    options.threads = run.threads;
    auto claim = compute_ramsey(k, red, blue, run.budget(), options);
    run.result = claim_to_json(claim);
    std::string base = "ramsey_k" + std::to_string(k) + "_" + stem(red) + "_" + stem(blue);
    json certs = json::array();
    if (claim.witness)
        certs.push_back(run.certify(base + "_lower.json",
                witness_certificate(*claim.witness, red, blue, {"ascending scan", run.seed, false, {}})));
    if (claim.value)
        certs.push_back(run.certify(base + "_upper.json",
                arrowing_certificate(k, *claim.value, red, blue, {"ascending scan", run.seed, false, {}})));
    run.result["certificates"] = certs;
    return claim.value ? Exit::ok : Exit::unknown;
}

auto run_count(Run & run, int k, int n_vertices, const std::string & target_text) -> int
{
    auto t = parse_target(target_text, k);
    run.result = {{"target", t.name()}, {"copies", count_copies(n_vertices, k, t)}};
    return Exit::ok;
}

auto parse_base(const std::string & text, int k) -> std::vector<RamseyClaim>
{
    // entries "n:m=value" separated by commas
    static const std::regex entry(R"(\s*(\d+):(\d+)=(\d+)\s*)");
    std::vector<RamseyClaim> base;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        std::smatch match;
        require(std::regex_match(item, match, entry), ErrorKind::invalid_parameter,
                "base entries look like n:m=value, got '" + item + "'");
        base.push_back(cycle_claim(k, std::stoi(match[1]), std::stoi(match[2]), std::stoi(match[3]),
                Provenance::closed_form, "supplied base value"));
    }
    require(! base.empty(), ErrorKind::invalid_parameter, "empty base");
    return base;
}

auto run_table(Run & run, int k, const std::string & base_text, int max_n, bool certify_lower) -> int
{
    auto base = parse_base(base_text, k);
    auto table = derive_table(k, base, max_n);
    json rows = json::array();
    for (const auto & claim : table) {
        auto row = claim_to_json(claim);
        if (certify_lower) {
            int n = claim.red.length();
            int m = claim.blue.length();
            auto pair = claim.red.is_cycle() ? PairKind::CC : claim.blue.is_cycle() ? PairKind::PC : PairKind::PP;
            auto w = lower_bound_witness(k, n, m, pair);
            require(w.n_vertices + 1 == *claim.value, ErrorKind::internal_assertion, "witness disagrees with the table");
            row["certificate"] = run.certify("table_k" + std::to_string(k) + "_" + stem(claim.red) + "_" + stem(claim.blue)
                            + ".json",
                    witness_certificate(w.coloring, claim.red, claim.blue, {"lower bound construction", run.seed, false, {}}));
        }
        rows.push_back(std::move(row));
    }
    run.result = {{"claims", rows}};
    return Exit::ok;
}

auto run_export(Run & run, int k, int n_vertices, const std::string & red_text, const std::string & blue_text,
        const std::string & cnf_path) -> int
{
    auto doc = export_dimacs(k, n_vertices, parse_target(red_text, k), parse_target(blue_text, k));
    std::ofstream(cnf_path) << doc.cnf;
    auto sidecar = cnf_path + ".map.json";
    std::ofstream(sidecar) << doc.sidecar.dump(2) << "\n";
    run.result = {{"cnf", cnf_path}, {"sidecar", sidecar}, {"variables", doc.sidecar["variables"]},
        {"clauses", doc.sidecar["red_clauses"].get<std::size_t>() + doc.sidecar["blue_clauses"].get<std::size_t>()},
        {"map_digest", doc.sidecar["map_digest"]}};
    return Exit::ok;
}

auto run_check(Run & run, const std::string & file) -> int
{
    auto doc = load_json(file);
    CertificateCheck check;
    try {
        check = verify_certificate(doc, fs::path(file).parent_path());
    }
    catch (const Error & e) {
        run.result = {{"accepted", false}, {"reason", e.what()}};
        return Exit::hypothesis;
    }
    run.result = {{"type", doc.value("type", "")}, {"accepted", check.ok}};
    if (! check.ok)
        run.result["reason"] = check.reason;
    return check.ok ? Exit::ok : Exit::hypothesis;
}

struct ExtractArgs {
    std::string lemma;
    std::string coloring_file;
    int k = 3;
    int n_vertices = 0;
    double red_probability = -1;
    std::vector<Vertex> vertices;
    std::vector<Vertex> second;
    std::vector<Vertex> w;
    Vertex u = 0;
    int i = 1;
    int n = 0;
    int m = 0;
    int l = 0;
    int t = 0;
    bool no_check = false;
    std::uint64_t hypothesis_budget = 200000;
};

auto run_extract(Run & run, const ExtractArgs & a) -> int
{
    TwoColoring c(a.k, std::max(a.n_vertices, a.k));
    if (! a.coloring_file.empty())
        c = coloring_from_json(load_json(a.coloring_file));
    else {
        require(a.red_probability >= 0 && a.red_probability <= 1 && a.n_vertices > 0, ErrorKind::invalid_parameter,
                "give --coloring, or --n-vertices with --random");
        std::mt19937_64 rng(run.seed);
        std::bernoulli_distribution coin(a.red_probability);
        for (Rank r = 0; r < c.edge_count(); ++r)
            c.set_at(r, coin(rng) ? Color::red : Color::blue);
        run.result["coloring"] = coloring_to_json(c);
    }
    int k = c.k();
    ConstructiveOptions options;
    options.check_hypotheses = ! a.no_check;
    options.hypothesis_budget = a.hypothesis_budget;
    CertificateMeta meta{a.lemma, run.seed, false, {}};
    auto name = "extract_" + a.lemma + ".json";
    auto path_of = [&](const std::vector<Vertex> & vs) {
        require(vs.size() >= 3 && (vs.size() - 1) % static_cast<std::size_t>(k - 1) == 0, ErrorKind::invalid_parameter,
                "--vertices does not describe a loose path");
        return Embedding{LooseTemplate::path(k, static_cast<int>((vs.size() - 1) / static_cast<std::size_t>(k - 1))), vs,
            ColorClaim::red};
    };
    auto cycle_of = [&](const std::vector<Vertex> & vs, ColorClaim claim) {
        require(! vs.empty() && vs.size() % static_cast<std::size_t>(k - 1) == 0, ErrorKind::invalid_parameter,
                "vertex list does not describe a loose cycle");
        return Embedding{LooseTemplate::cycle(k, static_cast<int>(vs.size() / static_cast<std::size_t>(k - 1))), vs, claim};
    };

    if (a.lemma == "configuration") {
        auto p = path_of(a.vertices);
        auto g = find_good_configuration(c, p, a.w, a.i, a.u, {}, options);
        run.result["configuration"] = {{"x", g.x}, {"a1", g.a1}, {"a2", g.a2}, {"a3", g.a3}, {"y", g.y},
            {"avoided_vertex", g.avoided_vertex}, {"branch", g.branch}};
        run.result["certificate"] = run.certify(name, configuration_certificate(c, p, a.w, a.u, g, meta));
    }
    else if (a.lemma == "absorb") {
        auto p = path_of(a.vertices);
        auto r = absorb_blue_path(c, p, a.w, options);
        run.result["q"] = embedding_to_json(r.q);
        run.result["w_used"] = r.w_used;
        run.result["r"] = r.r;
        run.result["certificate"] = run.certify(name, embedding_certificate(c, r.q, meta));
    }
    else if (a.lemma == "case2") {
        auto e = case2_blue_cycle(c, cycle_of(a.vertices, ColorClaim::red), a.w, a.m);
        run.result["cycle"] = embedding_to_json(e);
        run.result["certificate"] = run.certify(name, embedding_certificate(c, e, meta));
    }
    else if (a.lemma == "shorter-cycle") {
        auto r = blue_cycle_from_red_shorter_cycle(c, cycle_of(a.vertices, ColorClaim::red), a.n, a.m, options);
        meta.budget_exhausted = r.budget_exhausted;
        run.result["cycle"] = embedding_to_json(r.cycle);
        run.result["route"] = r.route;
        run.result["certificate"] = run.certify(name, embedding_certificate(c, r.cycle, meta));
    }
    else if (a.lemma == "join") {
        int l = a.l > 0 ? a.l : 3;
        auto c1 = cycle_of(a.vertices, ColorClaim::red);
        auto c2 = cycle_of(a.second, ColorClaim::red);
        auto t = join_red_cycles(c, c1, c2, l);
        int n = c1.shape.length();
        int m = c2.shape.length();
        run.result["red_outcome"] = t.red_outcome;
        run.result["outcome"] = embedding_to_json(t.outcome);
        run.result["route"] = t.route;
        run.result["steps"] = t.steps.size();
        run.result["certificate"] = run.certify(name, join_trace_certificate(c, t, n, m, l, meta));
    }
    else if (a.lemma == "adjacent-pair") {
        auto r = adjacent_bichromatic_pair(c);
        run.result["iterations"] = r.iterations;
        run.result["certificate"] = run.certify(name, pair_set_certificate(c, {r.pair}, false, meta));
    }
    else if (a.lemma == "disjoint-pairs") {
        auto d = disjoint_bichromatic_pairs(c, a.t, options);
        meta.budget_exhausted = d.budget_exhausted;
        run.result["route"] = d.route;
        run.result["certificate"] = run.certify(name, pair_set_certificate(c, {d.first, d.second}, true, meta));
    }
    else if (a.lemma == "lift-c4") {
        auto e = lift_blue_c4(c, cycle_of(a.vertices, ColorClaim::blue), a.i, options);
        run.result["cycle"] = embedding_to_json(e);
        run.result["certificate"] = run.certify(name, embedding_certificate(c, e, meta));
    }
    else
        fail(ErrorKind::invalid_parameter, "unknown lemma '" + a.lemma + "'");
    return Exit::ok;
}

auto exit_for(ErrorKind kind) -> int
{
    switch (kind) {
        case ErrorKind::hypothesis_violation:
        case ErrorKind::blue_edge_encountered:
        case ErrorKind::inconsistent_base:
        case ErrorKind::monochromatic_coloring:
        case ErrorKind::host_too_small:
        case ErrorKind::precondition_violation:
        case ErrorKind::malformed_certificate: return Exit::hypothesis;
        case ErrorKind::proof_gap: return Exit::gap;
        default: return Exit::usage;
    }
}

} // namespace

int main(int argc, char ** argv)
{
    Run run;
    run.argv.assign(argv, argv + argc);

    CLI::App app{"Ramsey numbers of loose paths and cycles: witnesses, arrowing, constructive extraction"};
    app.set_version_flag("--version", RAMSEY_LAB_VERSION);
    app.require_subcommand(1);
    app.add_option("--out", run.out, "write the JSON report here instead of stdout");
    app.add_option("--cert-dir", run.cert_dir, "directory for certificate files")->capture_default_str();
    app.add_option("--seed", run.seed, "seed for randomized inputs")->capture_default_str();
    app.add_option("--threads", run.threads, "worker threads for arrowing searches")->check(CLI::Range(1, 256));
    app.add_option("--max-nodes", run.max_nodes, "search node budget (0 = none)");
    app.add_option("--max-secs", run.max_secs, "search time budget in seconds (0 = none)");

    int k = 3;
    int n = 0;
    int m = 0;
    int n_vertices = 0;
    int max_n = 0;
    std::string pair = "CC";
    std::string red;
    std::string blue;
    std::string target;
    std::string base;
    std::string cnf;
    std::string file;
    bool symmetry = false;
    bool certify_table = false;
    ExtractArgs ex;

    auto * witness = app.add_subcommand("witness", "lower-bound coloring for a path/cycle pair");
    witness->add_option("--k", k)->required();
    witness->add_option("--n", n)->required();
    witness->add_option("--m", m)->required();
    witness->add_option("--pair", pair, "PP, PC or CC")->capture_default_str();

    auto * arrow = app.add_subcommand("arrow", "decide K^k_N -> (red, blue)");
    arrow->add_option("--k", k)->required();
    arrow->add_option("--n-vertices", n_vertices)->required();
    arrow->add_option("--red", red, "kind:length")->required();
    arrow->add_option("--blue", blue, "kind:length")->required();
    arrow->add_flag("--symmetry", symmetry, "lex-leader pruning under adjacent transpositions");

    auto * ramsey = app.add_subcommand("ramsey", "ascending scan for R(red, blue)");
    ramsey->add_option("--k", k)->required();
    ramsey->add_option("--red", red)->required();
    ramsey->add_option("--blue", blue)->required();
    ramsey->add_flag("--symmetry", symmetry);

    auto * extract = app.add_subcommand("extract", "run a constructive procedure and certify its output");
    extract->add_option("--lemma", ex.lemma,
                   "configuration, absorb, case2, shorter-cycle, join, adjacent-pair, disjoint-pairs or lift-c4")
        ->required();
    extract->add_option("--coloring", ex.coloring_file, "coloring JSON file");
    extract->add_option("--k", ex.k, "uniformity of a random coloring");
    extract->add_option("--n-vertices", ex.n_vertices, "host size of a random coloring");
    extract->add_option("--random", ex.red_probability, "red probability of a seeded random coloring");
    extract->add_option("--vertices", ex.vertices, "host vertices of the input path or cycle")->delimiter(',');
    extract->add_option("--second", ex.second, "host vertices of the second cycle (join)")->delimiter(',');
    extract->add_option("--w", ex.w, "outside vertex set W")->delimiter(',');
    extract->add_option("--u", ex.u);
    extract->add_option("--i", ex.i, "edge index (configuration) or cycle length (lift-c4)");
    extract->add_option("--n", ex.n);
    extract->add_option("--m", ex.m);
    extract->add_option("--l", ex.l);
    extract->add_option("--t", ex.t);
    extract->add_flag("--no-hypothesis-check", ex.no_check);
    extract->add_option("--hypothesis-budget", ex.hypothesis_budget);

    auto * count = app.add_subcommand("count", "number of copies of a target in K^k_N");
    count->add_option("--k", k)->required();
    count->add_option("--n-vertices", n_vertices)->required();
    count->add_option("--target", target)->required();

    auto * table = app.add_subcommand("table", "values derived from cycle-cycle base values");
    table->add_option("--k", k)->required();
    table->add_option("--base", base, "comma-separated n:m=value entries")->required();
    table->add_option("--max-n", max_n, "extend cycle-cycle values up to this n (k >= 4)");
    table->add_flag("--certify", certify_table, "write a lower-bound witness certificate per row");

    auto * export_cnf = app.add_subcommand("export-cnf", "DIMACS encoding of the arrowing question");
    export_cnf->add_option("--k", k)->required();
    export_cnf->add_option("--n-vertices", n_vertices)->required();
    export_cnf->add_option("--red", red)->required();
    export_cnf->add_option("--blue", blue)->required();
    export_cnf->add_option("--cnf", cnf, "output CNF path")->required();

    auto * check = app.add_subcommand("check-cert", "re-validate a certificate file");
    check->add_option("--file", file)->required();

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e) {
        if (e.get_exit_code() == 0)
            return app.exit(e);
        std::cerr << "ramsey-lab: " << e.what() << "\n";
        return Exit::usage;
    }

    auto * sub = app.get_subcommands().front();
    for (const auto * opt : sub->get_options())
        if (opt->count() > 0 && ! opt->get_lnames().empty())
            run.inputs[opt->get_lnames().front()] = opt->as<std::string>();

    auto start = std::chrono::steady_clock::now();
    int code = Exit::ok;
    json error;
    try {
        if (sub == witness)
            code = run_witness(run, k, n, m, pair);
        else if (sub == arrow)
            code = run_arrow(run, k, n_vertices, red, blue, symmetry);
        else if (sub == ramsey)
            code = run_ramsey(run, k, red, blue, symmetry);
        else if (sub == extract)
            code = run_extract(run, ex);
        else if (sub == count)
            code = run_count(run, k, n_vertices, target);
        else if (sub == table)
            code = run_table(run, k, base, max_n, certify_table);
        else if (sub == export_cnf)
            code = run_export(run, k, n_vertices, red, blue, cnf);
        else
            code = run_check(run, file);
    }
    catch (const Error & e) {
        code = exit_for(e.kind());
        error = {{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}};
        std::cerr << "ramsey-lab: " << to_string(e.kind()) << ": " << e.what() << "\n";
    }
    catch (const std::exception & e) {
        code = Exit::usage;
        error = {{"kind", "usage"}, {"message", e.what()}};
        std::cerr << "ramsey-lab: " << e.what() << "\n";
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    json report{{"tool", "ramsey-lab"}, {"version", RAMSEY_LAB_VERSION}, {"command", run.argv}, {"subcommand", sub->get_name()},
        {"inputs", run.inputs}, {"seed", run.seed}, {"threads", run.threads},
        {"budget", {{"max_nodes", run.max_nodes}, {"max_secs", run.max_secs}}}, {"result", run.result},
        {"certificates", run.certificates}, {"exit_code", code}, {"timings", {{"wall_seconds", seconds}}}};
    if (! error.is_null())
        report["error"] = error;
    if (run.out.empty())
        std::cout << report.dump(2) << "\n";
    else
        std::ofstream(run.out) << report.dump(2) << "\n";
    return code;
}
