#include "mdim/error.hpp"
#include "mdim/resolver.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <numeric>

namespace mdim {

namespace {

std::uint64_t signature_hash(const DistanceMatrix& dm, Vertex v, const VertexSet& s)
{
    std::uint64_t h = 1469598103934665603ull;
    for (Vertex x : s) {
        h ^= static_cast<std::uint64_t>(dm(v, x));
        h *= 1099511628211ull;
    }
    return h;
}

bool same_signature(const DistanceMatrix& dm, Vertex v, Vertex w, const VertexSet& s)
{
    for (Vertex x : s)
        if (dm(v, x) != dm(w, x))
            return false;
    return true;
}

/// Vertices grouped by signature hash; the callback sees each run of equal
/// hashes and returns false to stop.
template <typename F>
void for_each_hash_run(const DistanceMatrix& dm, const VertexSet& s, F&& f)
{
    const Vertex n = dm.order();
    std::vector<std::uint64_t> hash(n);
#pragma omp parallel for schedule(static)
    for (Vertex v = 0; v < n; ++v)
        hash[v] = signature_hash(dm, v, s);
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return hash[a] != hash[b] ? hash[a] < hash[b] : a < b; });
    for (Vertex i = 0; i < n;) {
        Vertex j = i + 1;
        while (j < n && hash[order[j]] == hash[order[i]])
            ++j;
        if (j - i > 1 && !f(std::span<const Vertex>(order.data() + i, static_cast<std::size_t>(j - i))))
            return;
        i = j;
    }
}

} // namespace

bool resolves(const Graph& g, const DistanceMatrix& dm, const VertexSet& s)
{
    if (!s.fits(g.order()))
        fail(ErrorCode::invalid_params, "vertex set has indices outside the graph");
    if (g.order() == 1)
        return true;
    bool ok = true;
    for_each_hash_run(dm, s, [&](std::span<const Vertex> run) {
        for (std::size_t i = 0; i < run.size() && ok; ++i)
            for (std::size_t j = i + 1; j < run.size() && ok; ++j)
                if (same_signature(dm, run[i], run[j], s))
                    ok = false;
        return ok;
    });
    return ok;
}

std::vector<Edge> unresolved_pairs(const Graph& g, const DistanceMatrix& dm, const VertexSet& s)
{
    if (!s.fits(g.order()))
        fail(ErrorCode::invalid_params, "vertex set has indices outside the graph");
    std::vector<Edge> out;
    for_each_hash_run(dm, s, [&](std::span<const Vertex> run) {
        for (std::size_t i = 0; i < run.size(); ++i)
            for (std::size_t j = i + 1; j < run.size(); ++j)
                if (same_signature(dm, run[i], run[j], s))
                    out.emplace_back(std::min(run[i], run[j]), std::max(run[i], run[j]));
        return true;
    });
    std::sort(out.begin(), out.end());
    return out;
}

bool doubly_resolves(const Graph& g, const DistanceMatrix& dm, const VertexSet& s)
{
    if (s.size() < 2)
        fail(ErrorCode::too_small, "doubly resolving needs at least two vertices");
    if (!s.fits(g.order()))
        fail(ErrorCode::invalid_params, "vertex set has indices outside the graph");
    const Vertex n = g.order();
    const auto& members = s.members();
    std::atomic<bool> ok{true};
#pragma omp parallel for schedule(dynamic, 8)
    for (Vertex v = 0; v < n; ++v) {
        if (!ok.load(std::memory_order_relaxed))
            continue;
        for (Vertex w = v + 1; w < n; ++w) {
            const int base = dm(v, members[0]) - dm(w, members[0]);
            bool varies = false;
            for (std::size_t i = 1; i < members.size() && !varies; ++i)
                varies = dm(v, members[i]) - dm(w, members[i]) != base;
            if (!varies) {
                ok.store(false, std::memory_order_relaxed);
                break;
            }
        }
    }
    return ok.load();
}

} // namespace mdim
