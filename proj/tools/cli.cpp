#include "cli.hpp"

#include "mdim/error.hpp"
#include "mdim/games.hpp"
#include "mdim/generators.hpp"
#include "mdim/graph_io.hpp"
#include "mdim/product.hpp"
#include "mdim/resolver.hpp"
#include "mdim/suites.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

namespace mdim::cli {

namespace {

using Json = nlohmann::ordered_json;

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        fail(ErrorCode::parse_error, "cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text))
        fail(ErrorCode::parse_error, "cannot write '" + path + "'");
}

std::string fnv_hex(std::string_view bytes)
{
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream ss;
    ss << "fnv1a64:" << std::hex << std::setw(16) << std::setfill('0') << h;
    return ss.str();
}

Json file_input(const std::string& path, const std::string& text)
{
    return {{"path", path}, {"hash", fnv_hex(text)}};
}

std::chrono::milliseconds seconds_to_ms(double seconds)
{
    return std::chrono::milliseconds{static_cast<std::int64_t>(seconds * 1000.0)};
}

// Everything a subcommand produces before the exit code is known.
struct Outcome {
    int code = exit_ok;
    std::string text;  // plain output
    Json inputs = Json::object();
    Json result = Json::object();
};

struct Flags {
    bool json = false;

    // gen
    std::string family;
    int n = 0, k = 0, m = 0;
    std::vector<int> dims;
    std::uint64_t seed = 1;
    std::string output;

    // beta / psi
    std::string graph_file;
    double budget_seconds = 60.0;
    bool certificate = false;
    bool no_twins = false;

    // product
    std::string g_file, h_file;

    // verify
    std::string suite;
    int max_size = 0;
    double suite_budget_seconds = 0.0;

    // games
    std::string questions_file, answers_file, secret, scheme_file;
};

Outcome cmd_gen(const Flags& f)
{
    FamilySpec spec;
    spec.family = parse_family(f.family);
    spec.n = f.n;
    spec.k = f.k;
    spec.seed = f.seed;
    spec.dims = f.dims;
    if (spec.family == Family::grid && spec.dims.empty() && f.n > 0)
        spec.dims = f.m > 0 ? std::vector<int>{f.n, f.m} : std::vector<int>{f.n};
    Graph g = generate(spec);
    Outcome o;
    std::string text = format_graph(g);
    o.inputs = {{"family", std::string(to_string(spec.family))}, {"n", spec.n}, {"k", spec.k},
                {"dims", spec.dims}, {"seed", spec.seed}};
    o.result = {{"order", g.order()}, {"size", g.size()}};
    if (f.output.empty()) {
        o.text = text;
        o.result["graph"] = text;
    } else {
        write_file(f.output, text);
        o.result["output"] = f.output;
        o.text = "wrote " + f.output + " (" + std::to_string(g.order()) + " vertices, " + std::to_string(g.size()) +
                 " edges)\n";
    }
    return o;
}

Outcome cmd_invariant(const Flags& f, InvariantKind kind)
{
    const std::string text = read_file(f.graph_file);
    Graph g = parse_graph(text);
    auto dm = all_pairs_distances(g);
    SolverOptions options;
    options.budget = seconds_to_ms(f.budget_seconds);
    options.twin_reduction = !f.no_twins;
    SolverResult r = kind == InvariantKind::beta ? metric_dimension(g, dm, options) : min_doubly_resolving(g, dm, options);

    Outcome o;
    o.inputs = {{"graph", file_input(f.graph_file, text)}};
    const std::string json = to_json(r);
    o.result = Json::parse(json);
    o.text = json + "\n";
    if (f.certificate) {
        // Re-read the certificate from the serialized report before checking it.
        SolverResult echoed = solver_result_from_json(json);
        bool ok = echoed.certificate.fits(g.order()) &&
                  (kind == InvariantKind::beta ? resolves(g, dm, echoed.certificate)
                                               : echoed.certificate.size() >= 2 &&
                                                     doubly_resolves(g, dm, echoed.certificate));
        o.result["certificate_verified"] = ok;
        o.text += std::string("certificate ") + (ok ? "verified" : "REJECTED") + "\n";
        if (!ok)
            o.code = exit_violation;
    }
    return o;
}

Outcome cmd_product(const Flags& f)
{
    const std::string g_text = read_file(f.g_file);
    const std::string h_text = read_file(f.h_file);
    auto p = cartesian_product(parse_graph(g_text), parse_graph(h_text));
    write_file(f.output, format_graph(p.graph));
    const std::string sidecar = f.output + ".labels";
    write_file(sidecar, format_labeling(p.labeling));
    Outcome o;
    o.inputs = {{"g", file_input(f.g_file, g_text)}, {"h", file_input(f.h_file, h_text)}};
    o.result = {{"order", p.graph.order()}, {"size", p.graph.size()}, {"output", f.output}, {"labels", sidecar}};
    o.text = "wrote " + f.output + " and " + sidecar + " (" + std::to_string(p.graph.order()) + " vertices, " +
             std::to_string(p.graph.size()) + " edges)\n";
    return o;
}

Outcome cmd_verify(const Flags& f)
{
    SuiteOptions options;
    options.max_size = f.max_size;
    options.seed = f.seed;
    options.budget = seconds_to_ms(f.suite_budget_seconds);
    SuiteReport report = run_suite(f.suite, options);
    Outcome o;
    o.inputs = {{"suite", f.suite}, {"max_size", f.max_size}, {"seed", f.seed}};
    o.result = Json::parse(report_json(report));
    std::ostringstream text;
    write_report_text(text, report);
    o.text = text.str();
    o.code = report.ok() ? exit_ok : exit_violation;
    return o;
}

std::vector<CodeVector> load_questions(const Flags& f, Outcome& o)
{
    const std::string text = read_file(f.questions_file);
    o.inputs["questions"] = file_input(f.questions_file, text);
    return parse_questions(text, f.n, f.k);
}

CodeVector parse_secret(const Flags& f)
{
    auto qs = parse_questions(f.secret, f.n, f.k);
    if (qs.size() != 1)
        fail(ErrorCode::parse_error, "secret must be a single vector");
    return qs.front();
}

Json codes_json(const std::vector<CodeVector>& codes, int k)
{
    Json out = Json::array();
    for (const auto& c : codes)
        out.push_back(format_code(c, k));
    return out;
}

Outcome cmd_mastermind(const std::string& action, const Flags& f)
{
    Outcome o;
    o.inputs = {{"n", f.n}, {"k", f.k}};
    auto questions = load_questions(f, o);
    if (action == "verify") {
        bool ok = static_questions_verify(f.n, f.k, questions);
        o.result = {{"questions", questions.size()}, {"verified", ok}};
        o.text = ok ? "verified\n" : "not verified\n";
        o.code = ok ? exit_ok : exit_violation;
    } else if (action == "answer") {
        CodeVector secret = parse_secret(f);
        auto answers = answer_questions(secret, questions);
        o.inputs["secret"] = format_code(secret, f.k);
        o.result = {{"answers", answers}};
        for (int a : answers)
            o.text += std::to_string(a) + "\n";
    } else {
        const std::string text = read_file(f.answers_file);
        o.inputs["answers"] = file_input(f.answers_file, text);
        auto inferred = infer_secret(f.n, f.k, questions, parse_answers(text));
        o.result = {{"status", std::string(to_string(inferred.status))}, {"witnesses", codes_json(inferred.witnesses, f.k)}};
        switch (inferred.status) {
        case Inference::Status::unique: o.text = format_code(inferred.witnesses.front(), f.k) + "\n"; break;
        case Inference::Status::ambiguous:
            o.text = "ambiguous: " + format_code(inferred.witnesses[0], f.k) + " / " +
                     format_code(inferred.witnesses[1], f.k) + "\n";
            o.code = exit_violation;
            break;
        case Inference::Status::inconsistent:
            o.text = "inconsistent\n";
            o.code = exit_violation;
            break;
        }
    }
    return o;
}

Outcome cmd_weighing(const std::string& action, const Flags& f)
{
    Outcome o;
    o.inputs = {{"n", f.n}};
    if (action == "min") {
        auto r = min_weighings(f.n, seconds_to_ms(f.budget_seconds));
        const std::string json = to_json(r);
        o.result = Json::parse(json);
        o.text = json + "\n";
        return o;
    }
    const std::string text = read_file(f.scheme_file);
    o.inputs["scheme"] = file_input(f.scheme_file, text);
    bool ok = weighing_scheme_verify(parse_weighing_scheme(text, f.n));
    o.result = {{"verified", ok}};
    o.text = ok ? "detecting\n" : "not detecting\n";
    o.code = ok ? exit_ok : exit_violation;
    return o;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact metric dimension and doubly resolving sets of graphs and their products", "mdim"};
    app.require_subcommand(1);
    app.fallthrough();
    Flags f;
    app.add_flag("--json", f.json, "Print a machine-readable run report");

    auto* gen = app.add_subcommand("gen", "Write a generated graph");
    gen->add_option("--family", f.family, "path|cycle|complete|hypercube|hamming|grid|tree|comb|gnk")->required();
    gen->add_option("--n", f.n, "Order, dimension or size parameter");
    gen->add_option("--k", f.k, "Alphabet size (hamming) or k (gnk)");
    gen->add_option("--m", f.m, "Second grid side");
    gen->add_option("--dims", f.dims, "Grid side lengths")->delimiter(',');
    gen->add_option("--seed", f.seed, "Seed for random families");
    gen->add_option("-o,--output", f.output, "Output file (default stdout)");

    auto* beta = app.add_subcommand("beta", "Metric dimension of a graph file");
    auto* psi = app.add_subcommand("psi", "Minimum doubly resolving set of a graph file");
    for (auto* sub : {beta, psi}) {
        sub->add_option("file", f.graph_file, "Graph file")->required();
        sub->add_option("--budget", f.budget_seconds, "Time budget in seconds");
        sub->add_flag("--certificate", f.certificate, "Re-verify the certificate before exiting");
        sub->add_flag("--no-twins", f.no_twins, "Disable twin-class forcing");
    }

    auto* product = app.add_subcommand("product", "Cartesian product of two graph files");
    product->add_option("first", f.g_file, "First factor file")->required();
    product->add_option("second", f.h_file, "Second factor file")->required();
    product->add_option("-o,--output", f.output, "Output file; labels go to <output>.labels")->required();

    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("--suite", f.suite, "Suite name")->required();
    verify->add_option("--max-size", f.max_size, "Largest instance parameter (0 = suite default)");
    verify->add_option("--seed", f.seed, "Seed for randomized suites");
    verify->add_option("--budget", f.suite_budget_seconds, "Per-instance budget in seconds (0 = suite default)");

    auto* mastermind = app.add_subcommand("mastermind", "Static Mastermind question sets");
    mastermind->require_subcommand(1);
    std::string mm_action;
    for (const char* name : {"verify", "infer", "answer"}) {
        auto* sub = mastermind->add_subcommand(name);
        sub->add_option("--n", f.n, "Code length")->required();
        sub->add_option("--k", f.k, "Alphabet size")->required();
        sub->add_option("--questions", f.questions_file, "Question file")->required();
        if (std::string(name) == "infer")
            sub->add_option("--answers", f.answers_file, "Answer file")->required();
        if (std::string(name) == "answer")
            sub->add_option("--secret", f.secret, "Secret vector")->required();
        sub->callback([&mm_action, name] { mm_action = name; });
    }

    auto* weighing = app.add_subcommand("weighing", "Coin-weighing schemes");
    weighing->require_subcommand(1);
    std::string w_action;
    auto* w_verify = weighing->add_subcommand("verify", "Check a scheme file");
    w_verify->add_option("--scheme", f.scheme_file, "Scheme file")->required();
    w_verify->add_option("--n", f.n, "Number of coins")->required();
    w_verify->callback([&w_action] { w_action = "verify"; });
    auto* w_min = weighing->add_subcommand("min", "Smallest detecting scheme");
    w_min->add_option("--n", f.n, "Number of coins")->required();
    w_min->add_option("--budget", f.budget_seconds, "Time budget in seconds");
    w_min->callback([&w_action] { w_action = "min"; });

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    Outcome o;
    try {
        if (*gen)
            o = cmd_gen(f);
        else if (*beta)
            o = cmd_invariant(f, InvariantKind::beta);
        else if (*psi)
            o = cmd_invariant(f, InvariantKind::psi);
        else if (*product)
            o = cmd_product(f);
        else if (*verify)
            o = cmd_verify(f);
        else if (*mastermind)
            o = cmd_mastermind(mm_action, f);
        else
            o = cmd_weighing(w_action, f);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }

    if (f.json) {
        Json report;
        report["command"] = args;
        report["inputs"] = o.inputs;
        report["results"] = o.result;
        report["exit_code"] = o.code;
        out << report.dump() << "\n";
    } else {
        out << o.text;
    }
    return o.code;
}

} // namespace mdim::cli
