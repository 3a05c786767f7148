#include "mdim/generators.hpp"

#include "mdim/error.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>

namespace mdim {

namespace {

void require(bool ok, const std::string& message)
{
    if (!ok)
        fail(ErrorCode::invalid_params, message);
}

std::string join(const std::vector<int>& xs, char sep)
{
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i)
            out += sep;
        out += std::to_string(xs[i]);
    }
    return out;
}

constexpr std::int64_t generator_vertex_limit = 100000;

/// Vertices of the product of cliques/paths with the given side lengths, in
/// lexicographic coordinate order. `clique` selects K_s (else P_s) factors.
Graph lattice(const std::vector<int>& sides, bool clique, const std::function<std::string(const std::vector<int>&)>& label)
{
    std::int64_t total = 1;
    for (int s : sides) {
        total *= s;
        require(total <= generator_vertex_limit, "generated graph exceeds 100000 vertices");
    }
    const auto n = static_cast<Vertex>(total);
    const int dims = static_cast<int>(sides.size());
    std::vector<std::int64_t> stride(dims, 1);
    for (int i = dims - 2; i >= 0; --i)
        stride[i] = stride[i + 1] * sides[i + 1];

    std::vector<Edge> edges;
    std::vector<std::string> labels(n);
    std::vector<int> coord(dims, 0);
    for (Vertex x = 0; x < n; ++x) {
        std::int64_t rest = x;
        for (int i = 0; i < dims; ++i) {
            coord[i] = static_cast<int>(rest / stride[i]);
            rest %= stride[i];
        }
        labels[x] = label(coord);
        for (int i = 0; i < dims; ++i) {
            if (clique) {
                for (int c = coord[i] + 1; c < sides[i]; ++c)
                    edges.emplace_back(x, static_cast<Vertex>(x + (c - coord[i]) * stride[i]));
            } else if (coord[i] + 1 < sides[i]) {
                edges.emplace_back(x, static_cast<Vertex>(x + stride[i]));
            }
        }
    }
    return build_graph(n, edges, std::move(labels));
}

Graph prufer_tree(int n, std::mt19937_64& rng)
{
    if (n == 1)
        return Graph{};
    if (n == 2)
        return build_graph(2, {{0, 1}});
    std::vector<int> code(n - 2);
    for (auto& c : code)
        c = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
    std::vector<int> degree(n, 1);
    for (int c : code)
        ++degree[c];
    std::vector<Edge> edges;
    std::set<int> leaves;
    for (int v = 0; v < n; ++v)
        if (degree[v] == 1)
            leaves.insert(v);
    for (int c : code) {
        int leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        edges.emplace_back(leaf, c);
        if (--degree[c] == 1)
            leaves.insert(c);
    }
    int u = *leaves.begin();
    int v = *std::next(leaves.begin());
    edges.emplace_back(u, v);
    return build_graph(n, edges);
}

} // namespace

std::string_view to_string(Family f)
{
    switch (f) {
    case Family::path: return "path";
    case Family::cycle: return "cycle";
    case Family::complete: return "complete";
    case Family::hypercube: return "hypercube";
    case Family::hamming: return "hamming";
    case Family::grid: return "grid";
    case Family::tree_random: return "tree_random";
    case Family::comb: return "comb";
    case Family::gnk: return "gnk";
    }
    return "unknown";
}

Family parse_family(std::string_view name)
{
    for (Family f : {Family::path, Family::cycle, Family::complete, Family::hypercube, Family::hamming, Family::grid,
                     Family::tree_random, Family::comb, Family::gnk})
        if (to_string(f) == name)
            return f;
    if (name == "tree" || name == "tree-random")
        return Family::tree_random;
    fail(ErrorCode::invalid_params, "unknown family '" + std::string(name) + "'");
}

Graph path_graph(int n)
{
    require(n >= 1, "path needs n >= 1");
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i)
        edges.emplace_back(i, i + 1);
    return build_graph(n, edges);
}

Graph cycle_graph(int n)
{
    require(n >= 3, "cycle needs n >= 3");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        edges.emplace_back(i, (i + 1) % n);
    return build_graph(n, edges);
}

Graph complete_graph(int n)
{
    require(n >= 1, "complete graph needs n >= 1");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            edges.emplace_back(i, j);
    return build_graph(n, edges);
}

Graph hypercube(int n)
{
    require(n >= 1 && n <= 16, "hypercube needs 1 <= n <= 16");
    return lattice(std::vector<int>(n, 2), true, [](const std::vector<int>& c) {
        std::string bits;
        for (int b : c)
            bits += static_cast<char>('0' + b);
        return bits;
    });
}

Graph hamming_graph(int n, int k)
{
    require(n >= 1 && k >= 1, "hamming needs n >= 1 and k >= 1");
    return lattice(std::vector<int>(n, k), true, [](const std::vector<int>& c) {
        std::vector<int> word(c);
        for (int& x : word)
            ++x;
        return join(word, ',');
    });
}

Graph grid_graph(const std::vector<int>& dims)
{
    require(!dims.empty(), "grid needs at least one dimension");
    for (int d : dims)
        require(d >= 1, "grid side lengths must be >= 1");
    return lattice(dims, false, [](const std::vector<int>& c) { return join(c, ','); });
}

Graph random_tree(int n, std::uint64_t seed)
{
    require(n >= 1, "tree needs n >= 1");
    std::mt19937_64 rng(seed);
    return prufer_tree(n, rng);
}

Graph comb_graph(int n)
{
    require(n >= 1, "comb needs n >= 1");
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i)
        edges.emplace_back(i, i + 1);
    for (int i = 0; i < n; ++i)
        edges.emplace_back(i, n + i);
    return build_graph(2 * n, edges);
}

Graph gnk_graph(int n, int k)
{
    require(k >= 1 && n >= 2, "gnk needs k >= 1 and n >= 2");
    const int count = 2 * k * n;
    require(2LL * count <= generator_vertex_limit, "generated graph exceeds 100000 vertices");
    auto v = [](int i) { return i - 1; };
    auto w = [count](int i) { return count + i - 1; };
    auto block = [k](int i) { return (i + k - 1) / k; };
    std::vector<Edge> edges;
    for (int i = 1; i <= count; ++i) {
        edges.emplace_back(v(i), w(i));
        for (int j = i + 1; j <= count && j - i <= k; ++j)
            edges.emplace_back(v(i), v(j));
        for (int j = i + 1; j <= count && block(j) == block(i); ++j)
            edges.emplace_back(w(i), w(j));
    }
    return build_graph(2 * count, edges);
}

Graph star_graph(int leaves)
{
    require(leaves >= 1, "star needs at least one leaf");
    std::vector<Edge> edges;
    for (int i = 1; i <= leaves; ++i)
        edges.emplace_back(0, i);
    return build_graph(leaves + 1, edges);
}

Graph petersen_graph()
{
    std::vector<Edge> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);
        edges.emplace_back(i, i + 5);
        edges.emplace_back(5 + i, 5 + (i + 2) % 5);
    }
    return build_graph(10, edges);
}

Graph generate(const FamilySpec& spec)
{
    switch (spec.family) {
    case Family::path: return path_graph(spec.n);
    case Family::cycle: return cycle_graph(spec.n);
    case Family::complete: return complete_graph(spec.n);
    case Family::hypercube: return hypercube(spec.n);
    case Family::hamming: return hamming_graph(spec.n, spec.k);
    case Family::grid: return grid_graph(spec.dims);
    case Family::tree_random: return random_tree(spec.n, spec.seed);
    case Family::comb: return comb_graph(spec.n);
    case Family::gnk: return gnk_graph(spec.n, spec.k);
    }
    fail(ErrorCode::invalid_params, "unknown family");
}

Graph random_connected_graph(int n, double edge_probability, std::uint64_t seed)
{
    require(n >= 1, "graph needs n >= 1");
    std::mt19937_64 rng(seed);
    Graph tree = prufer_tree(n, rng);
    std::vector<Edge> edges = tree.edges();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            double draw = static_cast<double>(rng() >> 11) * 0x1.0p-53;
            if (draw < edge_probability && !tree.has_edge(u, v))
                edges.emplace_back(u, v);
        }
    return build_graph(n, edges);
}

std::int64_t hamming_index(const std::vector<int>& word, int k)
{
    std::int64_t index = 0;
    for (int x : word)
        index = index * k + (x - 1);
    return index;
}

std::vector<int> hamming_word(std::int64_t index, int n, int k)
{
    std::vector<int> word(n);
    for (int i = n - 1; i >= 0; --i) {
        word[i] = static_cast<int>(index % k) + 1;
        index /= k;
    }
    return word;
}

// ---------------------------------------------------------------------------
// Catalogs

namespace {

using AdjMask = std::vector<std::uint32_t>;

std::uint64_t canonical_code(const AdjMask& adj)
{
    const int n = static_cast<int>(adj.size());
    std::vector<int> order(n);
    for (int v = 0; v < n; ++v)
        order[v] = v;
    auto deg = [&](int v) { return __builtin_popcount(adj[v]); };
    std::sort(order.begin(), order.end(), [&](int a, int b) { return deg(a) != deg(b) ? deg(a) < deg(b) : a < b; });

    // Canonical form: least upper-triangle code over orderings that keep
    // vertices sorted by degree; only same-degree vertices are permuted.
    std::vector<std::pair<int, int>> classes;
    for (int i = 0; i < n;) {
        int j = i;
        while (j < n && deg(order[j]) == deg(order[i]))
            ++j;
        classes.emplace_back(i, j);
        i = j;
    }
    std::uint64_t best = ~std::uint64_t{0};
    std::function<void(std::size_t)> recurse = [&](std::size_t c) {
        if (c == classes.size()) {
            std::uint64_t code = 0;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    code = (code << 1) | ((adj[order[i]] >> order[j]) & 1u);
            best = std::min(best, code);
            return;
        }
        auto [lo, hi] = classes[c];
        std::sort(order.begin() + lo, order.begin() + hi);
        do {
            recurse(c + 1);
        } while (std::next_permutation(order.begin() + lo, order.begin() + hi));
    };
    recurse(0);
    return best;
}

bool mask_connected(const AdjMask& adj)
{
    std::uint32_t seen = 1, frontier = 1;
    while (frontier) {
        std::uint32_t next = 0;
        for (int v = 0; v < static_cast<int>(adj.size()); ++v)
            if (frontier >> v & 1u)
                next |= adj[v];
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == (std::uint32_t{1} << adj.size()) - 1;
}

Graph mask_graph(const AdjMask& adj)
{
    std::vector<Edge> edges;
    for (int u = 0; u < static_cast<int>(adj.size()); ++u)
        for (int v = u + 1; v < static_cast<int>(adj.size()); ++v)
            if (adj[u] >> v & 1u)
                edges.emplace_back(u, v);
    return build_graph(static_cast<Vertex>(adj.size()), edges);
}

std::string rooted_code(const Graph& t, Vertex v, Vertex parent)
{
    std::vector<std::string> kids;
    for (Vertex w : t.neighbors(v))
        if (w != parent)
            kids.push_back(rooted_code(t, w, v));
    std::sort(kids.begin(), kids.end());
    std::string out = "(";
    for (auto& k : kids)
        out += k;
    return out + ")";
}

std::string tree_code(const Graph& t)
{
    std::string best;
    for (Vertex r = 0; r < t.order(); ++r) {
        auto c = rooted_code(t, r, -1);
        if (best.empty() || c < best)
            best = std::move(c);
    }
    return best;
}

} // namespace

std::vector<Graph> connected_graph_catalog(int n)
{
    require(n >= 1 && n <= 8, "graph catalog supports 1 <= n <= 8");
    // All graphs (connected or not) up to isomorphism, grown one vertex at a time.
    std::map<std::uint64_t, AdjMask> level{{0, AdjMask(1, 0)}};
    for (int size = 2; size <= n; ++size) {
        std::map<std::uint64_t, AdjMask> next;
        for (const auto& [code, adj] : level) {
            for (std::uint32_t nb = 0; nb < (std::uint32_t{1} << (size - 1)); ++nb) {
                AdjMask grown(adj);
                grown.push_back(nb);
                for (int v = 0; v < size - 1; ++v)
                    if (nb >> v & 1u)
                        grown[v] |= std::uint32_t{1} << (size - 1);
                next.try_emplace(canonical_code(grown), std::move(grown));
            }
        }
        level = std::move(next);
    }
    std::vector<Graph> out;
    for (const auto& [code, adj] : level)
        if (mask_connected(adj))
            out.push_back(mask_graph(adj));
    return out;
}

std::vector<Graph> tree_catalog(int n)
{
    require(n >= 1 && n <= 14, "tree catalog supports 1 <= n <= 14");
    std::map<std::string, Graph> level{{tree_code(Graph{}), Graph{}}};
    for (int size = 2; size <= n; ++size) {
        std::map<std::string, Graph> next;
        for (const auto& [code, t] : level) {
            for (Vertex v = 0; v < t.order(); ++v) {
                auto edges = t.edges();
                edges.emplace_back(v, t.order());
                Graph grown = build_graph(t.order() + 1, edges);
                next.try_emplace(tree_code(grown), std::move(grown));
            }
        }
        level = std::move(next);
    }
    std::vector<Graph> out;
    for (auto& [code, t] : level)
        out.push_back(std::move(t));
    return out;
}

} // namespace mdim
