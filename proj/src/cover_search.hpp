#pragma once

// Exact branch-and-bound set cover over vertex pairs. Internal to the solver.

#include "mdim/pair_cover.hpp"

#include <chrono>
#include <cstdint>
#include <vector>

namespace mdim::detail {

class Budget {
public:
    Budget(std::chrono::milliseconds limit, std::uint64_t node_limit);

    /// Counts one node; true once the time or node limit is exhausted.
    bool tick()
    {
        ++nodes_;
        if (expired_)
            return true;
        if (node_limit_ && nodes_ >= node_limit_)
            expired_ = true;
        else if ((nodes_ & 1023u) == 0 && std::chrono::steady_clock::now() >= end_)
            expired_ = true;
        return expired_;
    }
    bool expired() const noexcept { return expired_; }
    std::uint64_t nodes() const noexcept { return nodes_; }
    std::chrono::milliseconds elapsed() const;

private:
    std::chrono::steady_clock::time_point start_;
    std::chrono::steady_clock::time_point end_;
    std::uint64_t node_limit_;
    std::uint64_t nodes_ = 0;
    bool expired_ = false;
};

enum class SearchOutcome { found, infeasible, timeout };

/// Set cover instance: elements are the pairs that still matter, candidates
/// are vertices. Pairs covered by every candidate are dropped (any nonempty
/// pick covers them) and a pair whose coverer set contains another pair's
/// coverer set is dropped as implied.
class CoverInstance {
public:
    /// `excluded` is a vertex that may never be picked (the anchor of a
    /// doubly resolving table), or -1.
    CoverInstance(const PairCoverTable& table, Vertex excluded);

    Vertex candidates() const noexcept { return n_; }
    std::size_t elements() const noexcept { return elements_; }
    std::size_t element_words() const noexcept { return we_; }
    std::size_t candidate_words() const noexcept { return wc_; }

    const Word* cover(Vertex x) const noexcept { return cover_.data() + static_cast<std::size_t>(x) * we_; }
    const Word* coverers(std::size_t e) const noexcept { return coverers_.data() + e * wc_; }

    /// Elements not covered by any vertex of `picked`.
    std::vector<Word> uncovered_after(const std::vector<Vertex>& picked) const;

private:
    Vertex n_;
    std::size_t elements_ = 0;
    std::size_t we_ = 0;
    std::size_t wc_ = 0;
    std::vector<Word> cover_;
    std::vector<Word> coverers_;
};

/// Finds at most `max_picks` vertices from `allowed` covering `uncovered`.
/// Branches on the uncovered element with the fewest allowed coverers and
/// excludes earlier siblings from later branches; prunes with
/// ceil(|uncovered| / best single coverage).
SearchOutcome find_cover(const CoverInstance& inst, const std::vector<Word>& uncovered, const std::vector<Word>& allowed,
                         int max_picks, std::vector<Vertex>& picks, Budget& budget);

/// Repeatedly picks the allowed vertex covering the most uncovered elements
/// (ties to the lower index). Returns false if some element cannot be covered.
bool greedy_cover(const CoverInstance& inst, std::vector<Word> uncovered, const std::vector<Word>& allowed,
                  std::vector<Vertex>& picks);

} // namespace mdim::detail
