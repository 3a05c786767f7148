#include "mdim/pair_cover.hpp"

#include <bit>

namespace mdim {

std::pair<Vertex, Vertex> pair_at(std::size_t index, Vertex n)
{
    Vertex v = 0;
    while (index >= static_cast<std::size_t>(n - v - 1)) {
        index -= static_cast<std::size_t>(n - v - 1);
        ++v;
    }
    return {v, static_cast<Vertex>(v + 1 + index)};
}

PairCoverTable::PairCoverTable(Vertex n)
    : n_(n), pairs_(static_cast<std::size_t>(n) * (n - 1) / 2), words_(words_for(n)), rows_(pairs_ * words_, 0)
{
}

std::size_t PairCoverTable::coverer_count(std::size_t pair) const noexcept
{
    std::size_t c = 0;
    for (Word w : coverers(pair))
        c += static_cast<std::size_t>(std::popcount(w));
    return c;
}

PairCoverTable PairCoverTable::resolving(const DistanceMatrix& dm)
{
    const Vertex n = dm.order();
    PairCoverTable t(n);
#pragma omp parallel for schedule(dynamic, 4)
    for (Vertex v = 0; v < n; ++v) {
        auto dv = dm.row(v);
        for (Vertex w = v + 1; w < n; ++w) {
            auto dw = dm.row(w);
            Word* row = t.rows_.data() + pair_index(v, w, n) * t.words_;
            for (Vertex x = 0; x < n; ++x)
                if (dv[x] != dw[x])
                    row[x / 64] |= Word{1} << (x % 64);
        }
    }
    return t;
}

PairCoverTable PairCoverTable::doubly(const DistanceMatrix& dm, Vertex anchor)
{
    const Vertex n = dm.order();
    PairCoverTable t(n);
#pragma omp parallel for schedule(dynamic, 4)
    for (Vertex v = 0; v < n; ++v) {
        auto dv = dm.row(v);
        for (Vertex w = v + 1; w < n; ++w) {
            auto dw = dm.row(w);
            const int base = int{dv[anchor]} - int{dw[anchor]};
            Word* row = t.rows_.data() + pair_index(v, w, n) * t.words_;
            for (Vertex x = 0; x < n; ++x)
                if (int{dv[x]} - int{dw[x]} != base)
                    row[x / 64] |= Word{1} << (x % 64);
        }
    }
    return t;
}

} // namespace mdim
