#include "mdim/reference.hpp"

#include "mdim/pair_cover.hpp"

#include <map>
#include <queue>
#include <set>

namespace mdim::reference {

DistanceMatrix all_pairs_distances(const Graph& g)
{
    const Vertex n = g.order();
    std::vector<DistanceMatrix::value_type> d(static_cast<std::size_t>(n) * n, 0);
    for (Vertex s = 0; s < n; ++s) {
        std::vector<int> dist(n, -1);
        std::queue<Vertex> q;
        dist[s] = 0;
        q.push(s);
        while (!q.empty()) {
            Vertex u = q.front();
            q.pop();
            for (Vertex v : g.neighbors(u))
                if (dist[v] < 0) {
                    dist[v] = dist[u] + 1;
                    q.push(v);
                }
        }
        for (Vertex v = 0; v < n; ++v)
            d[static_cast<std::size_t>(s) * n + v] = static_cast<DistanceMatrix::value_type>(dist[v]);
    }
    return DistanceMatrix(n, std::move(d));
}

bool resolves(const DistanceMatrix& dm, const VertexSet& s)
{
    std::set<std::vector<int>> seen;
    for (Vertex v = 0; v < dm.order(); ++v) {
        std::vector<int> sig;
        for (Vertex x : s)
            sig.push_back(dm(v, x));
        if (!seen.insert(sig).second)
            return false;
    }
    return true;
}

bool doubly_resolves(const DistanceMatrix& dm, const VertexSet& s)
{
    for (Vertex v = 0; v < dm.order(); ++v)
        for (Vertex w = v + 1; w < dm.order(); ++w) {
            std::set<int> diffs;
            for (Vertex x : s)
                diffs.insert(dm(v, x) - dm(w, x));
            if (diffs.size() < 2)
                return false;
        }
    return true;
}

std::vector<std::uint64_t> pair_cover_rows(const DistanceMatrix& dm)
{
    const Vertex n = dm.order();
    const std::size_t words = words_for(static_cast<std::size_t>(n));
    std::vector<std::uint64_t> rows;
    for (Vertex v = 0; v < n; ++v)
        for (Vertex w = v + 1; w < n; ++w) {
            std::vector<std::uint64_t> row(words, 0);
            for (Vertex x = 0; x < n; ++x)
                if (dm(v, x) != dm(w, x))
                    row[x / 64] |= std::uint64_t{1} << (x % 64);
            rows.insert(rows.end(), row.begin(), row.end());
        }
    return rows;
}

bool static_questions_injective(int n, int k, const std::vector<std::vector<int>>& questions)
{
    std::set<std::vector<int>> seen;
    std::vector<int> secret(n, 1);
    while (true) {
        std::vector<int> answers;
        for (const auto& t : questions) {
            int a = 0;
            for (int i = 0; i < n; ++i)
                a += secret[i] == t[i];
            answers.push_back(a);
        }
        if (!seen.insert(answers).second)
            return false;
        int i = n - 1;
        while (i >= 0 && secret[i] == k)
            secret[i--] = 1;
        if (i < 0)
            break;
        ++secret[i];
    }
    return true;
}

bool weighing_injective(int n, const std::vector<std::vector<int>>& weighings)
{
    std::set<std::vector<int>> seen;
    for (std::uint64_t heavy = 0; heavy < (std::uint64_t{1} << n); ++heavy) {
        std::vector<int> counts;
        for (const auto& w : weighings) {
            int c = 0;
            for (int coin : w)
                c += static_cast<int>(heavy >> coin & 1u);
            counts.push_back(c);
        }
        if (!seen.insert(counts).second)
            return false;
    }
    return true;
}

} // namespace mdim::reference
