#pragma once

#include "mdim/distance.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace mdim {

using Word = std::uint64_t;

inline std::size_t words_for(std::size_t bits) { return (bits + 63) / 64; }

/// Index of the unordered pair (v, w), v < w, among the n(n-1)/2 pairs in
/// lexicographic order.
inline std::size_t pair_index(Vertex v, Vertex w, Vertex n)
{
    const auto vv = static_cast<std::size_t>(v);
    return vv * n - vv * (vv + 1) / 2 + static_cast<std::size_t>(w - v - 1);
}

std::pair<Vertex, Vertex> pair_at(std::size_t index, Vertex n);

/// For each unordered pair, the bitset of vertices that cover it.
///
/// resolving(): x covers (v, w) when d(v,x) != d(w,x).
/// doubly(anchor): x covers (v, w) when d(v,x) - d(w,x) differs from
/// d(v,anchor) - d(w,anchor), i.e. {anchor, x} doubly resolves the pair.
class PairCoverTable {
public:
    static PairCoverTable resolving(const DistanceMatrix& dm);
    static PairCoverTable doubly(const DistanceMatrix& dm, Vertex anchor);

    Vertex order() const noexcept { return n_; }
    std::size_t pair_count() const noexcept { return pairs_; }
    std::size_t row_words() const noexcept { return words_; }

    std::span<const Word> coverers(std::size_t pair) const noexcept
    {
        return {rows_.data() + pair * words_, words_};
    }
    bool covers(std::size_t pair, Vertex x) const noexcept
    {
        return (rows_[pair * words_ + x / 64] >> (x % 64)) & 1u;
    }
    std::size_t coverer_count(std::size_t pair) const noexcept;

    const std::vector<Word>& raw() const noexcept { return rows_; }

private:
    PairCoverTable(Vertex n);

    Vertex n_ = 0;
    std::size_t pairs_ = 0;
    std::size_t words_ = 0;
    std::vector<Word> rows_;
};

} // namespace mdim
