#include "cover_search.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace mdim::detail {

namespace {

inline bool test(const Word* w, std::size_t i) { return (w[i / 64] >> (i % 64)) & 1u; }
inline void clear(Word* w, std::size_t i) { w[i / 64] &= ~(Word{1} << (i % 64)); }

std::size_t popcount(const Word* w, std::size_t words)
{
    std::size_t c = 0;
    for (std::size_t i = 0; i < words; ++i)
        c += static_cast<std::size_t>(std::popcount(w[i]));
    return c;
}

std::size_t popcount_and(const Word* a, const Word* b, std::size_t words)
{
    std::size_t c = 0;
    for (std::size_t i = 0; i < words; ++i)
        c += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
    return c;
}

template <typename F>
void for_each_bit(const Word* w, std::size_t words, F&& f)
{
    for (std::size_t i = 0; i < words; ++i)
        for (Word bits = w[i]; bits; bits &= bits - 1)
            f(i * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
}

bool subset_of(const Word* a, const Word* b, std::size_t words)
{
    for (std::size_t i = 0; i < words; ++i)
        if (a[i] & ~b[i])
            return false;
    return true;
}

} // namespace

Budget::Budget(std::chrono::milliseconds limit, std::uint64_t node_limit)
    : start_(std::chrono::steady_clock::now()), end_(start_ + limit), node_limit_(node_limit)
{
}

std::chrono::milliseconds Budget::elapsed() const
{
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_);
}

CoverInstance::CoverInstance(const PairCoverTable& table, Vertex excluded) : n_(table.order())
{
    wc_ = words_for(static_cast<std::size_t>(n_));
    const std::size_t candidate_count = static_cast<std::size_t>(n_) - (excluded >= 0 ? 1 : 0);

    // Keep pairs that are not covered by every candidate.
    std::vector<std::size_t> kept;
    std::vector<Word> rows;
    std::vector<std::size_t> counts;
    for (std::size_t p = 0; p < table.pair_count(); ++p) {
        auto row = table.coverers(p);
        std::size_t count = 0;
        for (std::size_t i = 0; i < wc_; ++i) {
            Word w = row[i];
            if (excluded >= 0 && static_cast<std::size_t>(excluded) / 64 == i)
                w &= ~(Word{1} << (excluded % 64));
            count += static_cast<std::size_t>(std::popcount(w));
        }
        if (count == candidate_count)
            continue;
        kept.push_back(p);
        counts.push_back(count);
        rows.insert(rows.end(), row.begin(), row.end());
        if (excluded >= 0)
            rows[rows.size() - wc_ + excluded / 64] &= ~(Word{1} << (excluded % 64));
    }

    // Drop implied pairs: if coverers(p) ⊆ coverers(q) then covering p covers q.
    // Quadratic, so only for moderate instances.
    const std::size_t m = kept.size();
    std::vector<char> drop(m, 0);
    if (m <= 6000) {
        std::vector<std::size_t> order(m);
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return counts[a] < counts[b]; });
        std::vector<std::size_t> survivors;
        for (std::size_t q : order) {
            const Word* rq = rows.data() + q * wc_;
            bool implied = false;
            for (std::size_t p : survivors)
                if (counts[p] <= counts[q] && subset_of(rows.data() + p * wc_, rq, wc_)) {
                    implied = true;
                    break;
                }
            if (implied)
                drop[q] = 1;
            else
                survivors.push_back(q);
        }
    }

    for (std::size_t i = 0; i < m; ++i)
        if (!drop[i]) {
            coverers_.insert(coverers_.end(), rows.begin() + static_cast<std::ptrdiff_t>(i * wc_),
                             rows.begin() + static_cast<std::ptrdiff_t>((i + 1) * wc_));
            ++elements_;
        }
    we_ = words_for(elements_);
    cover_.assign(static_cast<std::size_t>(n_) * we_, 0);
    for (std::size_t e = 0; e < elements_; ++e)
        for_each_bit(coverers(e), wc_, [&](std::size_t x) { cover_[x * we_ + e / 64] |= Word{1} << (e % 64); });
}

std::vector<Word> CoverInstance::uncovered_after(const std::vector<Vertex>& picked) const
{
    std::vector<Word> u(we_, 0);
    for (std::size_t e = 0; e < elements_; ++e)
        u[e / 64] |= Word{1} << (e % 64);
    for (Vertex x : picked)
        for (std::size_t i = 0; i < we_; ++i)
            u[i] &= ~cover(x)[i];
    return u;
}

namespace {

class Searcher {
public:
    Searcher(const CoverInstance& inst, int max_picks, Budget& budget)
        : inst_(inst), we_(inst.element_words()), wc_(inst.candidate_words()), budget_(budget),
          uncovered_(static_cast<std::size_t>(max_picks + 1) * we_), allowed_(static_cast<std::size_t>(max_picks + 1) * wc_),
          coverage_(static_cast<std::size_t>(inst.candidates()), 0)
    {
    }

    SearchOutcome run(const std::vector<Word>& uncovered, const std::vector<Word>& allowed, int max_picks,
                      std::vector<Vertex>& picks)
    {
        std::copy(uncovered.begin(), uncovered.end(), uncovered_.begin());
        std::copy(allowed.begin(), allowed.end(), allowed_.begin());
        picks_.clear();
        bool ok = dfs(0, max_picks);
        if (ok) {
            picks = picks_;
            return SearchOutcome::found;
        }
        return budget_.expired() ? SearchOutcome::timeout : SearchOutcome::infeasible;
    }

private:
    bool dfs(int depth, int remaining)
    {
        if (budget_.tick())
            return false;
        const Word* u = uncovered_.data() + static_cast<std::size_t>(depth) * we_;
        Word* a = allowed_.data() + static_cast<std::size_t>(depth) * wc_;

        const std::size_t open = popcount(u, we_);
        if (open == 0)
            return true;
        if (remaining == 0)
            return false;

        // Coverage of each allowed candidate; useless candidates leave the pool.
        std::size_t best = 0;
        Vertex best_vertex = -1;
        for_each_bit(a, wc_, [&](std::size_t x) {
            std::size_t c = popcount_and(inst_.cover(static_cast<Vertex>(x)), u, we_);
            coverage_[x] = c;
            if (c == 0)
                clear(a, x);
            else if (c > best) {
                best = c;
                best_vertex = static_cast<Vertex>(x);
            }
        });
        if (best == 0)
            return false;
        if (remaining == 1) {
            if (best < open)
                return false;
            picks_.push_back(best_vertex);
            return true;
        }
        if ((open + best - 1) / best > static_cast<std::size_t>(remaining))
            return false;

        // Branch on the open element with the fewest coverers.
        std::size_t pivot = 0, pivot_count = SIZE_MAX;
        bool dead = false;
        for_each_bit(u, we_, [&](std::size_t e) {
            if (dead || pivot_count == 1)
                return;
            std::size_t c = popcount_and(inst_.coverers(e), a, wc_);
            if (c == 0)
                dead = true;
            else if (c < pivot_count) {
                pivot_count = c;
                pivot = e;
            }
        });
        if (dead)
            return false;

        std::vector<Vertex> branch;
        branch.reserve(pivot_count);
        const Word* cand = inst_.coverers(pivot);
        for (std::size_t i = 0; i < wc_; ++i)
            for (Word bits = cand[i] & a[i]; bits; bits &= bits - 1)
                branch.push_back(static_cast<Vertex>(i * 64 + static_cast<std::size_t>(std::countr_zero(bits))));
        std::stable_sort(branch.begin(), branch.end(),
                         [&](Vertex x, Vertex y) { return coverage_[x] > coverage_[y]; });

        Word* next_u = uncovered_.data() + static_cast<std::size_t>(depth + 1) * we_;
        Word* next_a = allowed_.data() + static_cast<std::size_t>(depth + 1) * wc_;
        for (Vertex x : branch) {
            const Word* cx = inst_.cover(x);
            for (std::size_t i = 0; i < we_; ++i)
                next_u[i] = u[i] & ~cx[i];
            clear(a, static_cast<std::size_t>(x));
            std::copy(a, a + wc_, next_a);
            picks_.push_back(x);
            if (dfs(depth + 1, remaining - 1))
                return true;
            picks_.pop_back();
            if (budget_.expired())
                return false;
        }
        return false;
    }

    const CoverInstance& inst_;
    std::size_t we_, wc_;
    Budget& budget_;
    std::vector<Word> uncovered_;
    std::vector<Word> allowed_;
    std::vector<std::size_t> coverage_;
    std::vector<Vertex> picks_;
};

} // namespace

SearchOutcome find_cover(const CoverInstance& inst, const std::vector<Word>& uncovered, const std::vector<Word>& allowed,
                         int max_picks, std::vector<Vertex>& picks, Budget& budget)
{
    if (max_picks < 0)
        return SearchOutcome::infeasible;
    Searcher s(inst, max_picks, budget);
    return s.run(uncovered, allowed, max_picks, picks);
}

bool greedy_cover(const CoverInstance& inst, std::vector<Word> uncovered, const std::vector<Word>& allowed,
                  std::vector<Vertex>& picks)
{
    const std::size_t we = inst.element_words();
    while (popcount(uncovered.data(), we) > 0) {
        std::size_t best = 0;
        Vertex best_vertex = -1;
        for_each_bit(allowed.data(), inst.candidate_words(), [&](std::size_t x) {
            if (std::find(picks.begin(), picks.end(), static_cast<Vertex>(x)) != picks.end())
                return;
            std::size_t c = popcount_and(inst.cover(static_cast<Vertex>(x)), uncovered.data(), we);
            if (c > best) {
                best = c;
                best_vertex = static_cast<Vertex>(x);
            }
        });
        if (best_vertex < 0)
            return false;
        picks.push_back(best_vertex);
        for (std::size_t i = 0; i < we; ++i)
            uncovered[i] &= ~inst.cover(best_vertex)[i];
    }
    return true;
}

} // namespace mdim::detail
