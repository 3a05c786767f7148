#include "mdim/suites.hpp"

#include "mdim/error.hpp"
#include "mdim/formulas.hpp"
#include "mdim/games.hpp"
#include "mdim/generators.hpp"
#include "mdim/product.hpp"
#include "mdim/reference.hpp"
#include "mdim/resolver.hpp"

#include <json.hpp>

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <ostream>
#include <random>
#include <sstream>

namespace mdim {

namespace {

using std::chrono::milliseconds;
using Clock = std::chrono::steady_clock;

struct Instance {
    std::string family;
    std::string params;
    std::string expected;
    std::string actual;
    CheckStatus status = CheckStatus::pass;
};

class Recorder {
public:
    explicit Recorder(SuiteReport& report) : report_(report) {}

    void check(const std::function<Instance()>& body)
    {
        auto start = Clock::now();
        Instance inst = body();
        report_.lines.push_back({std::move(inst.family), std::move(inst.params), std::move(inst.expected),
                                 std::move(inst.actual), inst.status,
                                 std::chrono::duration_cast<milliseconds>(Clock::now() - start)});
    }

private:
    SuiteReport& report_;
};

CheckStatus verdict(bool ok) { return ok ? CheckStatus::pass : CheckStatus::fail; }

std::string show(const SolverResult& r)
{
    if (r.exact())
        return std::to_string(r.value);
    return "[" + std::to_string(r.lower) + "," + std::to_string(r.upper) + "]";
}

// Exact result: compare. Bounds: fail when they exclude the expectation,
// otherwise skipped.
CheckStatus against(const SolverResult& r, int expected)
{
    if (r.exact())
        return verdict(r.value == expected);
    if (expected < r.lower || expected > r.upper)
        return CheckStatus::fail;
    return CheckStatus::skipped;
}

SolverOptions solver_options(milliseconds budget)
{
    SolverOptions o;
    o.budget = budget;
    return o;
}

milliseconds pick(milliseconds requested, milliseconds fallback) { return requested.count() > 0 ? requested : fallback; }

std::string kv(std::initializer_list<std::pair<const char*, long long>> items)
{
    std::string out;
    for (const auto& [key, value] : items) {
        if (!out.empty())
            out += ',';
        out += key;
        out += '=';
        out += std::to_string(value);
    }
    return out;
}

struct Solved {
    Graph graph;
    DistanceMatrix dm;
    SolverResult result;
};

Solved beta_of(Graph g, milliseconds budget)
{
    auto dm = all_pairs_distances(g);
    auto r = metric_dimension(g, dm, solver_options(budget));
    return {std::move(g), std::move(dm), std::move(r)};
}

// ---------------------------------------------------------------------------

void suite_qn(SuiteReport& rep, const SuiteOptions& opt)
{
    Recorder rec(rep);
    const int max_n = opt.max_size > 0 ? opt.max_size : 6;
    for (int n = 2; n <= std::min(max_n, 8); ++n) {
        const int table = beta_formula({FormulaTarget::beta, FormulaFamily::hypercube_table, {n}});
        const milliseconds budget = pick(opt.budget, n <= 6 ? milliseconds{120'000} : milliseconds{600'000});
        Solved s;
        rec.check([&] {
            s = beta_of(hypercube(n), budget);
            return Instance{"hypercube", kv({{"n", n}}), std::to_string(table), show(s.result),
                            against(s.result, table)};
        });
        if (n >= 7)
            rec.check([&] {
                bool ok = static_cast<int>(s.result.certificate.size()) <= table &&
                          resolves(s.graph, s.dm, s.result.certificate);
                return Instance{"hypercube-certificate", kv({{"n", n}}), "<=" + std::to_string(table),
                                std::to_string(s.result.certificate.size()) + ":" + to_string(s.result.certificate),
                                verdict(ok)};
            });
    }
    rec.check([&] {
        auto q5 = hypercube(5);
        auto dm = all_pairs_distances(q5);
        VertexSet set;
        {
            std::vector<Vertex> members;
            for (const char* w : {"00000", "00011", "00101", "01001"})
                members.push_back(static_cast<Vertex>(hamming_index(from_binary_string(w), 2)));
            set = VertexSet(std::move(members));
        }
        auto start = Clock::now();
        bool ok = resolves(q5, dm, set);
        auto took = std::chrono::duration_cast<milliseconds>(Clock::now() - start);
        return Instance{"hypercube-q5-set", "n=5,set=" + to_string(set), "resolves,<1000ms",
                        std::string(ok ? "resolves," : "fails,") + std::to_string(took.count()) + "ms",
                        verdict(ok && took < milliseconds{1000})};
    });
}

void suite_knkm(SuiteReport& rep, const SuiteOptions& opt)
{
    Recorder rec(rep);
    const int max_n = opt.max_size > 0 ? opt.max_size : 8;
    const milliseconds budget = pick(opt.budget, milliseconds{900'000});
    for (int n = 2; n <= max_n; ++n)
        for (int m = 2; m <= n; ++m)
            rec.check([&] {
                const int expected = beta_formula({FormulaTarget::beta, FormulaFamily::knkm, {n, m}});
                auto p = cartesian_product(complete_graph(n), complete_graph(m));
                auto s = beta_of(p.graph, budget);
                std::vector<CliqueCell> cells;
                for (Vertex x : s.result.certificate) {
                    auto [a, v] = p.labeling.coords(x);
                    cells.emplace_back(a, v);
                }
                CheckStatus status = against(s.result, expected);
                if (!knkm_resolving_check(n, m, cells) || !resolves(s.graph, s.dm, s.result.certificate))
                    status = CheckStatus::fail;
                return Instance{"knkm", kv({{"n", n}, {"m", m}}), std::to_string(expected), show(s.result), status};
            });
    rec.check([&] {
        int agree = 0, total = 0;
        for (int n = 1; n <= 30; ++n)
            for (int m = 1; m <= n; ++m, ++total)
                agree += knkm_recursion(n, m) == beta_formula({FormulaTarget::beta, FormulaFamily::knkm, {n, m}});
        return Instance{"knkm-recursion", "1<=m<=n<=30", std::to_string(total), std::to_string(agree),
                        verdict(agree == total)};
    });
}

void formula_products(SuiteReport& rep, const char* family, FormulaFamily formula, int a_lo, int a_hi, int b_lo,
                      int b_hi, bool symmetric, const std::function<Graph(int)>& make_a,
                      const std::function<Graph(int)>& make_b, milliseconds budget)
{
    Recorder rec(rep);
    for (int a = a_lo; a <= a_hi; ++a)
        for (int b = symmetric ? std::max(a, b_lo) : b_lo; b <= b_hi; ++b)
            rec.check([&] {
                const int expected = beta_formula({FormulaTarget::beta, formula, {a, b}});
                auto p = cartesian_product(make_a(a), make_b(b));
                auto s = beta_of(p.graph, budget);
                CheckStatus status = against(s.result, expected);
                if (!resolves(s.graph, s.dm, s.result.certificate))
                    status = CheckStatus::fail;
                return Instance{family, kv({{"a", a}, {"b", b}}), std::to_string(expected), show(s.result), status};
            });
}

void suite_cycles(SuiteReport& rep, const SuiteOptions& opt)
{
    const int max_n = opt.max_size > 0 ? opt.max_size : 7;
    formula_products(rep, "cmcn", FormulaFamily::cmcn, 3, max_n, 3, max_n, true, cycle_graph, cycle_graph,
                     pick(opt.budget, milliseconds{300'000}));
}

void suite_complete_cycle(SuiteReport& rep, const SuiteOptions& opt)
{
    const int max_m = opt.max_size > 0 ? opt.max_size : 8;
    formula_products(rep, "kncm", FormulaFamily::kncm, 1, 5, 3, max_m, false, complete_graph, cycle_graph,
                     pick(opt.budget, milliseconds{300'000}));
}

void suite_path_cycle(SuiteReport& rep, const SuiteOptions& opt)
{
    const int max_n = opt.max_size > 0 ? opt.max_size : 8;
    formula_products(rep, "pmcn", FormulaFamily::pmcn, 2, 5, 3, max_n, false, path_graph, cycle_graph,
                     pick(opt.budget, milliseconds{300'000}));
}

void suite_trees(SuiteReport& rep, const SuiteOptions& opt)
{
    Recorder rec(rep);
    const int max_n = opt.max_size > 0 ? opt.max_size : 10;
    if (max_n > brute_force_max_order)
        fail(ErrorCode::too_large, "tree suite compares against brute force, max size " +
                                       std::to_string(brute_force_max_order));
    const milliseconds budget = pick(opt.budget, milliseconds{60'000});
    for (int n = 1; n <= max_n; ++n) {
        auto catalog = tree_catalog(n);
        for (std::size_t i = 0; i < catalog.size(); ++i) {
            const Graph& t = catalog[i];
            const std::string params = kv({{"n", n}, {"index", static_cast<long long>(i)}});
            auto dm = all_pairs_distances(t);
            rec.check([&] {
                int formula = tree_beta(t).beta;
                auto brute = brute_force_invariant(t, dm, InvariantKind::beta);
                return Instance{"tree-beta", params, std::to_string(formula), show(brute),
                                verdict(brute.exact() && brute.value == formula)};
            });
            if (n < 2)
                continue;
            rec.check([&] {
                VertexSet leaf_set(leaves(t));
                auto psi = min_doubly_resolving(t, dm, solver_options(budget));
                CheckStatus status = psi.exact() ? verdict(psi.certificate == leaf_set) : CheckStatus::skipped;
                return Instance{"tree-psi", params, to_string(leaf_set), to_string(psi.certificate), status};
            });
        }
    }
}

std::vector<Graph> random_factors(std::mt19937_64& rng, int count, int min_n, int max_n)
{
    static constexpr double densities[] = {0.15, 0.3, 0.5, 0.75};
    std::vector<Graph> out;
    for (int i = 0; i < count; ++i) {
        int n = min_n + static_cast<int>(rng() % static_cast<std::uint64_t>(max_n - min_n + 1));
        double p = densities[rng() % 4];
        out.push_back(random_connected_graph(n, p, rng()));
    }
    return out;
}

void suite_sandwich(SuiteReport& rep, const SuiteOptions& opt)
{
    Recorder rec(rep);
    const int max_n = opt.max_size > 0 ? opt.max_size : 8;
    const milliseconds budget = pick(opt.budget, milliseconds{120'000});
    std::mt19937_64 rng(opt.seed);
    auto graphs = random_factors(rng, 24, 2, max_n);
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        const Graph& g = graphs[i];
        rec.check([&] {
            auto dm = all_pairs_distances(g);
            auto beta = metric_dimension(g, dm, solver_options(budget));
            auto psi = min_doubly_resolving(g, dm, solver_options(budget));
            auto gg = beta_of(cartesian_product(g, g).graph, budget);
            std::string params = kv({{"n", g.order()}, {"m", static_cast<long long>(g.size())},
                                     {"index", static_cast<long long>(i)}});
            if (!beta.exact() || !psi.exact())
                return Instance{"sandwich", params, "exact-factors", show(beta) + "/" + show(psi),
                                CheckStatus::skipped};
            const int lo = (psi.value + 1) / 2, hi = psi.value + beta.value - 1;
            const int lower = std::max(lo, beta.value);
            std::string expected = "[" + std::to_string(lower) + "," + std::to_string(hi) + "]<=" +
                                   std::to_string(2 * psi.value - 1);
            CheckStatus status;
            if (gg.result.upper < lower || gg.result.lower > hi || hi > 2 * psi.value - 1)
                status = CheckStatus::fail;
            else if (!gg.result.exact())
                status = CheckStatus::skipped;
            else
                status = CheckStatus::pass;
            return Instance{"sandwich", params, expected, show(gg.result), status};
        });
    }
}

std::vector<Graph> catalog_up_to(int max_n, int min_n = 1)
{
    std::vector<Graph> out;
    for (int n = min_n; n <= max_n; ++n)
        for (auto& g : connected_graph_catalog(n))
            out.push_back(std::move(g));
    return out;
}

void suite_sxs(SuiteReport& rep, const SuiteOptions& opt)
{
    Recorder rec(rep);
    const int max_n = opt.max_size > 0 ? opt.max_size : 7;
    auto graphs = catalog_up_to(max_n, 2);
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        const Graph& g = graphs[i];
        rec.check([&] {
            auto dm = all_pairs_distances(g);
            auto p = cartesian_product(g, g);
            auto pdm = all_pairs_distances(p.graph);
            const Vertex n = g.order();
            int total = 0, agree = 0;
            for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
                if (std::popcount(mask) < 2)
                    continue;
                std::vector<Vertex> members;
                for (Vertex v = 0; v < n; ++v)
                    if (mask >> v & 1u)
                        members.push_back(v);
                VertexSet s(std::move(members));
                ++total;
                agree += resolves(p.graph, pdm, product_set(s, s, p.labeling)) == doubly_resolves(g, dm, s);
            }
            return Instance{"sxs", kv({{"n", n}, {"m", static_cast<long long>(g.size())},
                                      {"index", static_cast<long long>(i)}}),
                            std::to_string(total), std::to_string(agree), verdict(agree == total)};
        });
    }
}

void suite_projections(SuiteReport& rep, const SuiteOptions& opt)
{
    Recorder rec(rep);
    const int max_n = opt.max_size > 0 ? opt.max_size : 8;
    const milliseconds budget = pick(opt.budget, milliseconds{120'000});
    std::mt19937_64 rng(opt.seed);
    auto gs = random_factors(rng, 16, 2, max_n);
    auto hs = random_factors(rng, 16, 2, max_n);
    for (std::size_t i = 0; i < gs.size(); ++i) {
        const Graph& g = gs[i];
        const Graph& h = hs[i];
        const std::string params = kv({{"ng", g.order()}, {"nh", h.order()}, {"index", static_cast<long long>(i)}});
        auto gdm = all_pairs_distances(g);
        auto hdm = all_pairs_distances(h);
        auto bg = metric_dimension(g, gdm, solver_options(budget));
        auto bh = metric_dimension(h, hdm, solver_options(budget));
        auto ph = min_doubly_resolving(h, hdm, solver_options(budget));
        auto p = cartesian_product(g, h);
        auto s = beta_of(p.graph, budget);

        rec.check([&] {
            auto x = construct_product_resolving(g, h, bg.certificate, ph.certificate);
            bool ok = true;
            for (const VertexSet* set : {&s.result.certificate, &x}) {
                ok = ok && resolves(s.graph, s.dm, *set);
                ok = ok && resolves(g, gdm, project(*set, p.labeling, Side::g));
                ok = ok && resolves(h, hdm, project(*set, p.labeling, Side::h));
            }
            return Instance{"projection", params, "resolved", ok ? "resolved" : "violated",
                            verdict(ok)};
        });
        rec.check([&] {
            if (!bg.exact() || !bh.exact())
                return Instance{"product-lower", params, "exact-factors", show(bg) + "/" + show(bh),
                                CheckStatus::skipped};
            const int lower = std::max(bg.value, bh.value);
            CheckStatus status = s.result.upper < lower ? CheckStatus::fail
                                 : s.result.exact()    ? verdict(s.result.value >= lower)
                                                       : CheckStatus::skipped;
            return Instance{"product-lower", params, ">=" + std::to_string(lower), show(s.result), status};
        });
        rec.check([&] {
            // β(G □ H) <= β(G) + ψ(H) - 1, witnessed by the explicit construction.
            auto x = construct_product_resolving(g, h, bg.certificate, ph.certificate);
            const int bound = static_cast<int>(bg.certificate.size() + ph.certificate.size()) - 1;
            bool ok = static_cast<int>(x.size()) <= bound && resolves(s.graph, s.dm, x) &&
                      (!s.result.exact() || s.result.value <= bound);
            return Instance{"doubly-construction", params, "<=" + std::to_string(bound),
                            std::to_string(x.size()) + "/" + show(s.result), verdict(ok)};
        });
    }
}

void suite_psi_bounds(SuiteReport& rep, const SuiteOptions& opt)
{
    Recorder rec(rep);
    const int max_n = opt.max_size > 0 ? opt.max_size : 7;
    const milliseconds budget = pick(opt.budget, milliseconds{60'000});
    std::mt19937_64 rng(opt.seed);
    auto graphs = catalog_up_to(max_n, 2);
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        const Graph& g = graphs[i];
        rec.check([&] {
            auto dm = all_pairs_distances(g);
            auto beta = metric_dimension(g, dm, solver_options(budget));
            auto psi = min_doubly_resolving(g, dm, solver_options(budget));
            const Vertex n = g.order();
            std::string params = kv({{"n", n}, {"m", static_cast<long long>(g.size())},
                                     {"index", static_cast<long long>(i)}});
            std::string expected = "beta<=psi<=" + std::to_string(std::max<int>(n - 1, 2));
            if (!beta.exact() || !psi.exact())
                return Instance{"psi-bounds", params, expected, show(beta) + "/" + show(psi), CheckStatus::skipped};
            bool ok = beta.value <= psi.value && psi.value >= 2 && (n < 3 || psi.value <= n - 1);
            // Doubly resolving implies resolving, on random subsets.
            for (int trial = 0; trial < 16 && ok; ++trial) {
                std::vector<Vertex> members;
                for (Vertex v = 0; v < n; ++v)
                    if (rng() % 2)
                        members.push_back(v);
                if (members.size() < 2)
                    continue;
                VertexSet s(std::move(members));
                if (doubly_resolves(g, dm, s) && !resolves(g, dm, s))
                    ok = false;
            }
            return Instance{"psi-bounds", params, expected,
                            std::to_string(beta.value) + "<=" + std::to_string(psi.value), verdict(ok)};
        });
    }
}

void suite_product_two(SuiteReport& rep, const SuiteOptions& opt)
{
    Recorder rec(rep);
    const int max_n = opt.max_size > 0 ? opt.max_size : 6;
    const milliseconds budget = pick(opt.budget, milliseconds{60'000});
    auto graphs = catalog_up_to(max_n, 2);
    std::vector<int> betas;
    for (const auto& g : graphs)
        betas.push_back(metric_dimension(g, all_pairs_distances(g), solver_options(budget)).upper);

    long long by_path = 0, by_bound = 0;
    for (std::size_t i = 0; i < graphs.size(); ++i)
        for (std::size_t j = i; j < graphs.size(); ++j) {
            if (is_path(graphs[i]) || is_path(graphs[j])) {
                ++by_path;
                continue;
            }
            // β(G □ H) >= max{β(G), β(H)}, so only β <= 2 factors can give 2.
            if (betas[i] > 2 || betas[j] > 2) {
                ++by_bound;
                continue;
            }
            rec.check([&] {
                auto s = beta_of(cartesian_product(graphs[i], graphs[j]).graph, budget);
                CheckStatus status = s.result.exact() ? verdict(s.result.value != 2)
                                     : s.result.upper == 2 ? CheckStatus::fail
                                                           : CheckStatus::skipped;
                return Instance{"product-two",
                                kv({{"g", static_cast<long long>(i)}, {"h", static_cast<long long>(j)},
                                    {"ng", graphs[i].order()}, {"nh", graphs[j].order()}}),
                                "!=2", show(s.result), status};
            });
        }
    rec.check([&] {
        return Instance{"product-two-pruned", kv({{"path_factor", by_path}, {"factor_beta_above_2", by_bound}}),
                        "implication", "implication", CheckStatus::pass};
    });
}

void suite_big_clique(SuiteReport& rep, const SuiteOptions& opt)
{
    Recorder rec(rep);
    const int max_n = opt.max_size > 0 ? opt.max_size : 9;
    const milliseconds budget = pick(opt.budget, milliseconds{300'000});
    const std::vector<std::pair<std::string, Graph>> factors = {
        {"P3", path_graph(3)}, {"C5", cycle_graph(5)}, {"C6", cycle_graph(6)}, {"K13", star_graph(3)}};
    for (const auto& [name, g] : factors) {
        auto gdm = all_pairs_distances(g);
        auto basis = metric_dimension(g, gdm, solver_options(budget));
        for (int n = 2 * basis.value + 1; n <= max_n; ++n)
            rec.check([&] {
                auto s = beta_of(cartesian_product(complete_graph(n), g).graph, budget);
                auto t = construct_clique_product_resolving(n, g, basis.certificate);
                CheckStatus status = against(s.result, n - 1);
                if (static_cast<int>(t.size()) != n - 1 || !resolves(s.graph, s.dm, t))
                    status = CheckStatus::fail;
                return Instance{"big-clique", "G=" + name + "," + kv({{"n", n}}), std::to_string(n - 1),
                                show(s.result) + "/" + std::to_string(t.size()), status};
            });
    }
}

void suite_graph_cycle(SuiteReport& rep, const SuiteOptions& opt)
{
    Recorder rec(rep);
    const int max_n = opt.max_size > 0 ? opt.max_size : 5;
    const milliseconds budget = pick(opt.budget, milliseconds{120'000});
    auto graphs = catalog_up_to(max_n, 2);
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        const Graph& g = graphs[i];
        auto gdm = all_pairs_distances(g);
        auto bg = metric_dimension(g, gdm, solver_options(budget));
        for (int c = 3; c <= 7; ++c)
            rec.check([&] {
                auto s = beta_of(cartesian_product(g, cycle_graph(c)).graph, budget);
                const bool predicted_two = is_path(g) && c % 2 == 1;
                const int upper = bg.value + psi_formula({FormulaTarget::psi, FormulaFamily::cycle, {c}}) - 1;
                std::string params = kv({{"n", g.order()}, {"m", static_cast<long long>(g.size())},
                                         {"index", static_cast<long long>(i)}, {"cycle", c}});
                std::string expected = std::string(predicted_two ? "=2" : "!=2") + ",[" +
                                       std::to_string(bg.value) + "," + std::to_string(upper) + "]";
                CheckStatus status;
                if (!s.result.exact())
                    status = (s.result.lower > upper || s.result.upper < bg.value) ? CheckStatus::fail
                                                                                   : CheckStatus::skipped;
                else
                    status = verdict((s.result.value == 2) == predicted_two && s.result.value >= bg.value &&
                                     s.result.value <= upper);
                return Instance{"graph-cycle", params, expected, show(s.result), status};
            });
    }
}

void suite_comb(SuiteReport& rep, const SuiteOptions& opt)
{
    Recorder rec(rep);
    const int max_n = opt.max_size > 0 ? opt.max_size : 6;
    const milliseconds budget = pick(opt.budget, milliseconds{300'000});
    for (int n = 4; n <= max_n; ++n) {
        Graph b = comb_graph(n);
        auto dm = all_pairs_distances(b);
        rec.check([&] {
            auto r = metric_dimension(b, dm, solver_options(budget));
            CheckStatus status = against(r, 2);
            if (tree_beta(b).beta != 2 || beta_formula({FormulaTarget::beta, FormulaFamily::comb, {n}}) != 2)
                status = CheckStatus::fail;
            return Instance{"comb-beta", kv({{"n", n}}), "2", show(r), status};
        });
        rec.check([&] {
            auto r = min_doubly_resolving(b, dm, solver_options(budget));
            CheckStatus status = against(r, n);
            if (r.exact() && r.certificate != VertexSet(leaves(b)))
                status = CheckStatus::fail;
            return Instance{"comb-psi", kv({{"n", n}}), std::to_string(n), show(r), status};
        });
    }

    Graph b4 = comb_graph(4);
    auto dm4 = all_pairs_distances(b4);
    auto basis = metric_dimension(b4, dm4, solver_options(budget));
    auto drs = min_doubly_resolving(b4, dm4, solver_options(budget));
    auto p = cartesian_product(b4, b4);
    Solved s;
    rec.check([&] {
        s = beta_of(p.graph, budget);
        CheckStatus status = s.result.exact() ? verdict(s.result.value == 4 || s.result.value == 5)
                             : (s.result.upper < 4 || s.result.lower > 5) ? CheckStatus::fail
                                                                           : CheckStatus::skipped;
        return Instance{"comb-product", "n=4", "{4,5}", show(s.result), status};
    });
    rec.check([&] {
        bool ok = resolves(b4, dm4, project(s.result.certificate, p.labeling, Side::g)) &&
                  resolves(b4, dm4, project(s.result.certificate, p.labeling, Side::h));
        return Instance{"comb-projection", "n=4", "resolved", ok ? "resolved" : "violated", verdict(ok)};
    });
    rec.check([&] {
        const int leaf_count = static_cast<int>(leaves(b4).size());
        CheckStatus status = s.result.upper < leaf_count ? CheckStatus::fail
                             : s.result.lower >= leaf_count ? CheckStatus::pass
                                                            : CheckStatus::skipped;
        return Instance{"comb-leaf-bound", "n=4", ">=" + std::to_string(leaf_count), show(s.result), status};
    });
    rec.check([&] {
        auto x = construct_product_resolving(b4, b4, basis.certificate, drs.certificate);
        const int bound = static_cast<int>(basis.certificate.size() + drs.certificate.size()) - 1;
        bool ok = static_cast<int>(x.size()) <= bound && bound == 5 && resolves(s.graph, s.dm, x) &&
                  s.result.lower <= bound;
        return Instance{"comb-upper-bound", "n=4", "<=5", std::to_string(x.size()) + ":" + to_string(x), verdict(ok)};
    });
}

void suite_gnk(SuiteReport& rep, const SuiteOptions& opt)
{
    Recorder rec(rep);
    const milliseconds budget = pick(opt.budget, milliseconds{300'000});
    for (auto [k, n] : std::vector<std::pair<int, int>>{{1, 2}, {2, 2}, {3, 2}, {2, 3}}) {
        Graph g = gnk_graph(n, k);
        auto dm = all_pairs_distances(g);
        auto certs = gnk_certificates(k, n);
        const std::string params = kv({{"k", k}, {"n", n}});
        rec.check([&] {
            bool ok = static_cast<int>(certs.resolving_set.size()) == 2 * k && resolves(g, dm, certs.resolving_set);
            return Instance{"gnk-resolving", params, std::to_string(2 * k) + ":resolves",
                            std::to_string(certs.resolving_set.size()) + (ok ? ":resolves" : ":fails"), verdict(ok)};
        });
        rec.check([&] {
            auto r = min_doubly_resolving(g, dm, solver_options(budget));
            CheckStatus status = r.lower >= certs.psi_lower ? CheckStatus::pass
                                 : r.upper < certs.psi_lower ? CheckStatus::fail
                                                             : CheckStatus::skipped;
            if (!doubly_resolves(g, dm, r.certificate))
                status = CheckStatus::fail;
            return Instance{"gnk-psi", params, ">=" + std::to_string(certs.psi_lower), show(r), status};
        });
    }
}

// Questions that pin every coordinate: the all-ones vector plus, for every
// position, vectors with value j >= 2 there and 1 elsewhere.
std::vector<CodeVector> coordinate_questions(int n, int k)
{
    std::vector<CodeVector> out{CodeVector(n, 1)};
    for (int i = 0; i < n; ++i)
        for (int j = 2; j <= k; ++j) {
            CodeVector t(n, 1);
            t[i] = j;
            out.push_back(std::move(t));
        }
    return out;
}

VertexSet as_vertices(const std::vector<CodeVector>& questions, int k)
{
    std::vector<Vertex> members;
    for (const auto& t : questions)
        members.push_back(static_cast<Vertex>(hamming_index(t, k)));
    return VertexSet(std::move(members));
}

void suite_mastermind(SuiteReport& rep, const SuiteOptions& opt)
{
    Recorder rec(rep);
    const int cap = opt.max_size > 0 ? opt.max_size : 2000;
    std::mt19937_64 rng(opt.seed);

    // H_{1,k} = K_k costs k^3 to set up; above 64 only a few alphabets are sampled.
    std::vector<std::pair<int, int>> cases;
    for (int n = 1; n <= 30; ++n)
        for (int k = 2;; ++k) {
            long long size = 1;
            for (int i = 0; i < n && size <= cap; ++i)
                size *= k;
            if (size > cap)
                break;
            if (n == 1 && k > 64 && k != 100 && k != 250 && k != 500 && k != 1000)
                continue;
            cases.emplace_back(n, k);
        }

    for (auto [n, k] : cases) {
        const std::string params = kv({{"n", n}, {"k", k}});
        Graph h = hamming_graph(n, k);
        auto dm = all_pairs_distances(h);
        rec.check([&] {
            int total = 0, agree = 0, verified = 0;
            std::vector<std::vector<CodeVector>> sets{coordinate_questions(n, k)};
            const int largest = n * (k - 1) + 1;
            for (int trial = 0; trial < 6; ++trial) {
                int size = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(largest));
                std::vector<CodeVector> qs;
                for (int q = 0; q < size; ++q) {
                    CodeVector t(n);
                    for (auto& e : t)
                        e = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(k));
                    qs.push_back(std::move(t));
                }
                sets.push_back(std::move(qs));
            }
            bool ordering_ok = true;
            for (const auto& qs : sets) {
                const bool by_game = static_questions_verify(n, k, qs);
                const bool by_graph = resolves(h, dm, as_vertices(qs, k));
                ++total;
                agree += by_game == by_graph;
                verified += by_game;
                if (by_game && n == 2 &&
                    static_cast<int>(as_vertices(qs, k).size()) <
                        beta_formula({FormulaTarget::beta, FormulaFamily::hamming2k, {k}}))
                    ordering_ok = false;
            }
            return Instance{"mastermind-equivalence", params, std::to_string(total),
                            std::to_string(agree) + ":" + std::to_string(verified) + "-verified",
                            verdict(agree == total && ordering_ok)};
        });
        rec.check([&] {
            auto qs = coordinate_questions(n, k);
            std::uint64_t secrets = 1;
            for (int i = 0; i < n; ++i)
                secrets *= static_cast<std::uint64_t>(k);
            int ok = 0;
            for (int trial = 0; trial < 100; ++trial) {
                CodeVector secret = hamming_word(static_cast<std::int64_t>(rng() % secrets), n, k);
                auto inferred = infer_secret(n, k, qs, answer_questions(secret, qs));
                ok += inferred.status == Inference::Status::unique && inferred.witnesses.front() == secret;
            }
            return Instance{"mastermind-roundtrip", params, "100", std::to_string(ok), verdict(ok == 100)};
        });
    }

    rec.check([&] {
        std::vector<CodeVector> qs;
        for (const char* w : {"00000", "00011", "00101", "01001"})
            qs.push_back(from_binary_string(w));
        bool ok = static_questions_verify(5, 2, qs);
        return Instance{"mastermind-q5-set", "n=5,k=2", "verified", ok ? "verified" : "not-verified", verdict(ok)};
    });
    rec.check([&] {
        int verified = 0;
        for (int a = 0; a < 9; ++a)
            for (int b = a + 1; b < 9; ++b)
                verified += static_questions_verify(2, 3, {hamming_word(a, 2, 3), hamming_word(b, 2, 3)});
        return Instance{"mastermind-two-questions", "n=2,k=3", "0/36-verified", std::to_string(verified) + "/36-verified", verdict(verified == 0)};
    });
}

void suite_weighing(SuiteReport& rep, const SuiteOptions& opt)
{
    Recorder rec(rep);
    const int max_n = opt.max_size > 0 ? opt.max_size : 5;
    const milliseconds budget = pick(opt.budget, milliseconds{120'000});
    for (int n = 1; n <= max_n; ++n)
        rec.check([&] {
            auto w = min_weighings(n, budget);
            auto q = beta_of(hypercube(n), budget);
            std::vector<std::vector<int>> weighings;
            for (Vertex mask : w.certificate) {
                std::vector<int> coins;
                for (int c = 0; c < n; ++c)
                    if (mask >> c & 1)
                        coins.push_back(c);
                weighings.push_back(std::move(coins));
            }
            bool cert_ok = weighing_scheme_verify({n, weighings}) && reference::weighing_injective(n, weighings);
            std::string expected = "|w-" + show(q.result) + "|<=1";
            std::string actual = show(w);
            if (!w.exact() || !q.result.exact())
                return Instance{"weighing", kv({{"n", n}}), expected, actual,
                                cert_ok ? CheckStatus::skipped : CheckStatus::fail};
            bool ok = cert_ok && std::abs(w.value - q.result.value) <= 1;
            if (n >= 2 && q.result.value != beta_formula({FormulaTarget::beta, FormulaFamily::hypercube_table, {n}}))
                ok = false;
            return Instance{"weighing", kv({{"n", n}}), expected, actual, verdict(ok)};
        });
    rec.check([&] {
        bool ok = weighing_scheme_verify({2, {{0}, {1}}}) && !weighing_scheme_verify({2, {{0, 1}}}) &&
                  weighing_scheme_verify({3, {{0}, {1}, {2}}});
        return Instance{"weighing-examples", "n<=3", "true,false,true", ok ? "true,false,true" : "mismatch",
                        verdict(ok)};
    });
}

using SuiteFn = void (*)(SuiteReport&, const SuiteOptions&);

const std::map<std::string_view, SuiteFn>& registry()
{
    static const std::map<std::string_view, SuiteFn> suites = {
        {"qn", suite_qn},
        {"knkm", suite_knkm},
        {"cycles", suite_cycles},
        {"complete-cycle", suite_complete_cycle},
        {"path-cycle", suite_path_cycle},
        {"trees", suite_trees},
        {"sandwich", suite_sandwich},
        {"sxs", suite_sxs},
        {"projections", suite_projections},
        {"psi-bounds", suite_psi_bounds},
        {"product-two", suite_product_two},
        {"big-clique", suite_big_clique},
        {"graph-cycle", suite_graph_cycle},
        {"comb", suite_comb},
        {"gnk", suite_gnk},
        {"mastermind", suite_mastermind},
        {"weighing", suite_weighing},
    };
    return suites;
}

} // namespace

std::string_view to_string(CheckStatus status)
{
    switch (status) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "FAIL";
    case CheckStatus::skipped: return "skipped (bounds only)";
    }
    return "unknown";
}

std::size_t SuiteReport::count(CheckStatus status) const
{
    return static_cast<std::size_t>(
        std::count_if(lines.begin(), lines.end(), [&](const SuiteLine& l) { return l.status == status; }));
}

const std::vector<std::string_view>& suite_names()
{
    static const std::vector<std::string_view> names = {
        "qn",          "knkm",       "cycles",      "complete-cycle", "path-cycle", "trees",
        "sandwich",    "sxs",        "projections", "psi-bounds",     "product-two", "big-clique",
        "graph-cycle", "comb",       "gnk",         "mastermind",     "weighing"};
    return names;
}

SuiteReport run_suite(std::string_view name, const SuiteOptions& options)
{
    auto it = registry().find(name);
    if (it == registry().end())
        fail(ErrorCode::invalid_params, "unknown suite '" + std::string(name) + "'");
    SuiteReport report;
    report.suite = std::string(name);
    report.max_size = options.max_size;
    report.seed = options.seed;
    auto start = Clock::now();
    it->second(report, options);
    report.elapsed = std::chrono::duration_cast<milliseconds>(Clock::now() - start);
    return report;
}

void write_report_text(std::ostream& out, const SuiteReport& report)
{
    for (const auto& l : report.lines)
        out << l.family << ' ' << l.params << ' ' << l.expected << ' ' << l.actual << ' ' << to_string(l.status)
            << '\n';
    out << "# suite " << report.suite << ": " << report.count(CheckStatus::pass) << " pass, "
        << report.count(CheckStatus::fail) << " fail, " << report.count(CheckStatus::skipped) << " skipped\n";
}

std::string report_json(const SuiteReport& report)
{
    nlohmann::ordered_json j;
    j["suite"] = report.suite;
    j["max_size"] = report.max_size;
    j["seed"] = report.seed;
    auto lines = nlohmann::ordered_json::array();
    for (const auto& l : report.lines)
        lines.push_back({{"family", l.family},
                         {"params", l.params},
                         {"expected", l.expected},
                         {"actual", l.actual},
                         {"status", l.status == CheckStatus::pass   ? "pass"
                                    : l.status == CheckStatus::fail ? "fail"
                                                                    : "skipped"}});
    j["lines"] = std::move(lines);
    j["pass"] = report.count(CheckStatus::pass);
    j["fail"] = report.count(CheckStatus::fail);
    j["skipped"] = report.count(CheckStatus::skipped);
    return j.dump();
}

} // namespace mdim
