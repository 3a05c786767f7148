#include "mdim/formulas.hpp"

#include "mdim/error.hpp"

#include <algorithm>
#include <map>

namespace mdim {

namespace {

[[noreturn]] void out_of_range(const std::string& what) { fail(ErrorCode::out_of_proven_range, what); }

int param(const FormulaQuery& q, std::size_t i)
{
    if (q.params.size() <= i)
        fail(ErrorCode::invalid_params, std::string(to_string(q.family)) + " needs " + std::to_string(i + 1) +
                                            " parameter(s)");
    return q.params[i];
}

int floor_two_thirds(int x) { return 2 * x / 3; }

int knkm_closed_form(int n, int m)
{
    if (n < m)
        std::swap(n, m);
    return n <= 2 * m - 1 ? floor_two_thirds(n + m - 1) : n - 1;
}

const Graph& tree_param(const FormulaQuery& q)
{
    if (q.tree == nullptr)
        fail(ErrorCode::invalid_params, "tree formula needs a tree graph");
    return *q.tree;
}

} // namespace

std::string_view to_string(FormulaFamily f)
{
    switch (f) {
    case FormulaFamily::complete: return "complete";
    case FormulaFamily::path: return "path";
    case FormulaFamily::cycle: return "cycle";
    case FormulaFamily::tree: return "tree";
    case FormulaFamily::hypercube_table: return "hypercube_table";
    case FormulaFamily::knkm: return "knkm";
    case FormulaFamily::cmcn: return "cmcn";
    case FormulaFamily::kncm: return "kncm";
    case FormulaFamily::pmcn: return "pmcn";
    case FormulaFamily::hamming2k: return "hamming2k";
    case FormulaFamily::comb: return "comb";
    case FormulaFamily::gnk_bounds: return "gnk_bounds";
    }
    return "unknown";
}

FormulaFamily parse_formula_family(std::string_view name)
{
    for (int i = 0; i <= static_cast<int>(FormulaFamily::gnk_bounds); ++i) {
        auto f = static_cast<FormulaFamily>(i);
        if (to_string(f) == name)
            return f;
    }
    fail(ErrorCode::invalid_params, "unknown formula family '" + std::string(name) + "'");
}

int beta_formula(const FormulaQuery& q)
{
    switch (q.family) {
    case FormulaFamily::complete: {
        int n = param(q, 0);
        if (n < 1)
            out_of_range("complete graph needs n >= 1");
        return n - 1;
    }
    case FormulaFamily::path: {
        int n = param(q, 0);
        if (n < 2)
            out_of_range("path formula needs n >= 2");
        return 1;
    }
    case FormulaFamily::cycle: {
        if (param(q, 0) < 3)
            out_of_range("cycle needs n >= 3");
        return 2;
    }
    case FormulaFamily::tree: return tree_beta(tree_param(q)).beta;
    case FormulaFamily::hypercube_table: {
        static constexpr int table[] = {0, 0, 2, 3, 4, 4, 5, 6, 6};
        int n = param(q, 0);
        if (n < 2 || n > 8)
            out_of_range("hypercube table is exact only for 2 <= n <= 8");
        return table[n];
    }
    case FormulaFamily::knkm: {
        int n = param(q, 0), m = param(q, 1);
        if (n < 1 || m < 1)
            out_of_range("K_n x K_m needs n, m >= 1");
        return knkm_closed_form(n, m);
    }
    case FormulaFamily::cmcn: {
        int m = param(q, 0), n = param(q, 1);
        if (m < 3 || n < 3)
            out_of_range("C_m x C_n needs m, n >= 3");
        return (m % 2 == 1 || n % 2 == 1) ? 3 : 4;
    }
    case FormulaFamily::kncm: {
        int n = param(q, 0), m = param(q, 1);
        if (n < 1 || m < 3)
            out_of_range("K_n x C_m needs n >= 1 and m >= 3");
        if (n == 1)
            return 2;
        if (n == 2)
            return m % 2 == 1 ? 2 : 3;
        if (n == 3)
            return 3;
        if (n == 4)
            return m % 2 == 0 ? 3 : 4;
        return n - 1;
    }
    case FormulaFamily::pmcn: {
        int m = param(q, 0), n = param(q, 1);
        if (m < 2 || n < 3)
            out_of_range("P_m x C_n needs m >= 2 and n >= 3");
        return n % 2 == 1 ? 2 : 3;
    }
    case FormulaFamily::hamming2k: {
        int k = param(q, 0);
        if (k < 1)
            out_of_range("H_{2,k} needs k >= 1");
        return floor_two_thirds(2 * k - 1);
    }
    case FormulaFamily::comb: {
        int n = param(q, 0);
        if (n < 4)
            out_of_range("comb formula is proven for n >= 4");
        return 2;
    }
    case FormulaFamily::gnk_bounds: out_of_range("G_{n,k} has bounds only, see gnk_certificates");
    }
    out_of_range("unknown family");
}

int psi_formula(const FormulaQuery& q)
{
    switch (q.family) {
    case FormulaFamily::complete: {
        int n = param(q, 0);
        if (n < 2)
            out_of_range("psi needs n >= 2");
        return std::max(n - 1, 2);
    }
    case FormulaFamily::path: {
        if (param(q, 0) < 2)
            out_of_range("psi needs n >= 2");
        return 2;
    }
    case FormulaFamily::cycle: {
        int n = param(q, 0);
        if (n < 3)
            out_of_range("cycle needs n >= 3");
        return n % 2 == 1 ? 2 : 3;
    }
    case FormulaFamily::tree: {
        const Graph& t = tree_param(q);
        if (!is_tree(t))
            fail(ErrorCode::not_a_tree, "graph is not a tree");
        if (t.order() < 2)
            out_of_range("psi needs at least two vertices");
        return static_cast<int>(leaves(t).size());
    }
    case FormulaFamily::comb: {
        int n = param(q, 0);
        if (n < 2)
            out_of_range("comb psi formula needs n >= 2");
        return n;
    }
    default: out_of_range("no psi formula for " + std::string(to_string(q.family)));
    }
}

std::optional<int> hypercube_upper_bound(int n)
{
    if (n >= 2 && n <= 8)
        return beta_formula({FormulaTarget::beta, FormulaFamily::hypercube_table, {n}});
    if (n == 10)
        return 7;
    if (n == 15)
        return 10;
    return std::nullopt;
}

TreeBeta tree_beta(const Graph& t)
{
    if (!is_tree(t))
        fail(ErrorCode::not_a_tree, "graph with " + std::to_string(t.order()) + " vertices and " +
                                        std::to_string(t.size()) + " edges is not a tree");
    TreeBeta out;
    const Vertex n = t.order();
    out.decoration.legs.assign(n, 0);
    out.decoration.leaves = VertexSet(leaves(t));

    // A leg at v: walking away from v through degree-2 vertices ends in a leaf.
    for (Vertex v = 0; v < n; ++v)
        for (Vertex start : t.neighbors(v)) {
            Vertex prev = v, cur = start;
            while (t.degree(cur) == 2) {
                auto nb = t.neighbors(cur);
                Vertex next = nb[0] == prev ? nb[1] : nb[0];
                prev = cur;
                cur = next;
            }
            if (t.degree(cur) == 1)
                ++out.decoration.legs[v];
        }

    if (n == 1)
        out.beta = 0;
    else if (is_path(t))
        out.beta = 1;
    else
        for (int legs : out.decoration.legs)
            out.beta += std::max(legs - 1, 0);
    return out;
}

bool knkm_resolving_check(int n, int m, const std::vector<CliqueCell>& cells)
{
    if (n < 2 || m < 2)
        fail(ErrorCode::invalid_params, "characterisation needs n, m >= 2");
    std::vector<int> column_count(n, 0), row_count(m, 0);
    std::vector<CliqueCell> members(cells);
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    for (auto [a, v] : members) {
        if (a < 0 || a >= n || v < 0 || v >= m)
            fail(ErrorCode::invalid_params, "cell out of range");
        ++column_count[a];
        ++row_count[v];
    }
    const int empty_columns = static_cast<int>(std::count(column_count.begin(), column_count.end(), 0));
    const int empty_rows = static_cast<int>(std::count(row_count.begin(), row_count.end(), 0));
    int lonely = 0;
    for (auto [a, v] : members)
        if (column_count[a] == 1 && row_count[v] == 1)
            ++lonely;
    if (empty_rows > 1 || empty_columns > 1)
        return false;
    if (lonely > 1)
        return false;
    if (empty_rows == 1 && empty_columns == 1 && lonely > 0)
        return false;
    return true;
}

int knkm_recursion(int n, int m)
{
    if (n < 1 || m < 1)
        fail(ErrorCode::invalid_params, "K_n x K_m needs n, m >= 1");
    static thread_local std::map<std::pair<int, int>, int> memo;
    if (n < m)
        std::swap(n, m);
    if (m == 1)
        return n - 1;
    if (m == 2)
        return n <= 3 ? 2 : n - 1;
    auto key = std::make_pair(n, m);
    if (auto it = memo.find(key); it != memo.end())
        return it->second;
    int value = 2 + std::min(knkm_recursion(n - 2, m - 1), knkm_recursion(n - 1, m - 2));
    memo.emplace(key, value);
    return value;
}

GnkCertificates gnk_certificates(int k, int n)
{
    if (k < 1 || n < 2)
        fail(ErrorCode::invalid_params, "G_{n,k} needs k >= 1 and n >= 2");
    const int count = 2 * k * n;
    std::vector<Vertex> members;
    for (int i = 1; i <= k; ++i) {
        members.push_back(i - 1);         // v_i
        members.push_back(count - i);     // v_{2kn+1-i}
    }
    return {VertexSet(std::move(members)), 2 * n};
}

} // namespace mdim
