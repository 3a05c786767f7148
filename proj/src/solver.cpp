#include "mdim/resolver.hpp"

#include "cover_search.hpp"
#include "mdim/error.hpp"
#include "mdim/pair_cover.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <numeric>

namespace mdim {

using detail::Budget;
using detail::CoverInstance;
using detail::SearchOutcome;

namespace {

std::vector<Word> all_bits(Vertex n)
{
    std::vector<Word> bits(words_for(static_cast<std::size_t>(n)), 0);
    for (Vertex x = 0; x < n; ++x)
        bits[x / 64] |= Word{1} << (x % 64);
    return bits;
}

void clear_bit(std::vector<Word>& bits, Vertex x) { bits[x / 64] &= ~(Word{1} << (x % 64)); }

std::vector<Vertex> merged(std::vector<Vertex> a, const std::vector<Vertex>& b)
{
    a.insert(a.end(), b.begin(), b.end());
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
    return a;
}

/// "Is there a set of at most k vertices, containing `chosen` and the forced
/// vertices, with every other member in `allowed`?"
class Problem {
public:
    virtual ~Problem() = default;
    virtual SearchOutcome exists(const std::vector<Vertex>& chosen, const std::vector<Word>& allowed, int k,
                                 std::vector<Vertex>& solution, Budget& budget) = 0;
    virtual std::vector<Vertex> greedy() = 0;
    virtual int lower_bound() const = 0;
};

class ResolvingProblem final : public Problem {
public:
    ResolvingProblem(const DistanceMatrix& dm, std::vector<Vertex> forced)
        : n_(dm.order()), forced_(std::move(forced)), inst_(PairCoverTable::resolving(dm), -1)
    {
    }

    SearchOutcome exists(const std::vector<Vertex>& chosen, const std::vector<Word>& allowed, int k,
                         std::vector<Vertex>& solution, Budget& budget) override
    {
        auto base = merged(chosen, forced_);
        auto pool = allowed;
        for (Vertex x : base)
            clear_bit(pool, x);
        std::vector<Vertex> picks;
        auto outcome = detail::find_cover(inst_, inst_.uncovered_after(base), pool, k - static_cast<int>(base.size()),
                                          picks, budget);
        if (outcome == SearchOutcome::found) {
            solution = merged(base, picks);
            if (solution.empty())
                solution.push_back(0);
        }
        return outcome;
    }

    std::vector<Vertex> greedy() override
    {
        std::vector<Vertex> picks = forced_;
        detail::greedy_cover(inst_, inst_.uncovered_after(picks), all_bits(n_), picks);
        if (picks.empty())
            picks.push_back(0);
        std::sort(picks.begin(), picks.end());
        return picks;
    }

    int lower_bound() const override { return std::max<int>(1, static_cast<int>(forced_.size())); }

private:
    Vertex n_;
    std::vector<Vertex> forced_;
    CoverInstance inst_;
};

// Doubly resolving sets reduce to set cover once one member (the anchor)
// is fixed: S doubly resolves G iff every pair sees some x in S whose
// difference d(v,x) - d(w,x) differs from the anchor's.
class DoublyResolvingProblem final : public Problem {
public:
    DoublyResolvingProblem(const DistanceMatrix& dm, std::vector<Vertex> forced)
        : dm_(dm), n_(dm.order()), forced_(std::move(forced))
    {
    }

    SearchOutcome exists(const std::vector<Vertex>& chosen, const std::vector<Word>& allowed, int k,
                         std::vector<Vertex>& solution, Budget& budget) override
    {
        auto base = merged(chosen, forced_);
        if (!base.empty())
            return extend(base, allowed, k, solution, budget);
        // No member known yet: enumerate the least member.
        for (Vertex a = 0; a < n_; ++a) {
            if (!(allowed[a / 64] >> (a % 64) & 1u))
                continue;
            std::vector<Word> above = allowed;
            for (Vertex x = 0; x <= a; ++x)
                clear_bit(above, x);
            auto outcome = extend({a}, above, k, solution, budget);
            if (outcome != SearchOutcome::infeasible)
                return outcome;
        }
        return SearchOutcome::infeasible;
    }

    std::vector<Vertex> greedy() override
    {
        std::vector<Vertex> picks = forced_.empty() ? std::vector<Vertex>{0} : forced_;
        const auto& inst = instance(picks.front());
        detail::greedy_cover(inst, inst.uncovered_after(picks), all_bits(n_), picks);
        pad(picks, all_bits(n_));
        std::sort(picks.begin(), picks.end());
        return picks;
    }

    int lower_bound() const override { return std::max<int>(2, static_cast<int>(forced_.size())); }

private:
    SearchOutcome extend(const std::vector<Vertex>& base, std::vector<Word> allowed, int k,
                         std::vector<Vertex>& solution, Budget& budget)
    {
        const auto& inst = instance(base.front());
        for (Vertex x : base)
            clear_bit(allowed, x);
        std::vector<Vertex> picks;
        auto outcome = detail::find_cover(inst, inst.uncovered_after(base), allowed, k - static_cast<int>(base.size()),
                                          picks, budget);
        if (outcome != SearchOutcome::found)
            return outcome;
        solution = merged(base, picks);
        if (solution.size() < 2 && !pad(solution, allowed))
            return SearchOutcome::infeasible;
        if (static_cast<int>(solution.size()) > k)
            return SearchOutcome::infeasible;
        std::sort(solution.begin(), solution.end());
        return SearchOutcome::found;
    }

    // A doubly resolving set has at least two members; pairs dropped from the
    // instance as "covered by any second vertex" rely on this.
    bool pad(std::vector<Vertex>& picks, const std::vector<Word>& allowed) const
    {
        for (Vertex x = 0; x < n_ && picks.size() < 2; ++x)
            if ((allowed[x / 64] >> (x % 64) & 1u) && std::find(picks.begin(), picks.end(), x) == picks.end())
                picks.push_back(x);
        return picks.size() >= 2;
    }

    const CoverInstance& instance(Vertex anchor)
    {
        auto it = cache_.find(anchor);
        if (it == cache_.end())
            it = cache_.emplace(anchor, std::make_unique<CoverInstance>(PairCoverTable::doubly(dm_, anchor), anchor))
                     .first;
        return *it->second;
    }

    const DistanceMatrix& dm_;
    Vertex n_;
    std::vector<Vertex> forced_;
    std::map<Vertex, std::unique_ptr<CoverInstance>> cache_;
};

/// Rewrites a minimum solution into the lexicographically least one of the
/// same size by fixing members left to right. Stops early (keeping the
/// current valid solution) if the budget runs out.
std::vector<Vertex> canonicalize(Problem& problem, Vertex n, std::vector<Vertex> best, Budget& budget)
{
    const int k = static_cast<int>(best.size());
    std::vector<Vertex> prefix;
    for (int i = 0; i < k; ++i) {
        Vertex lo = prefix.empty() ? 0 : prefix.back() + 1;
        for (Vertex c = lo; c < best[i]; ++c) {
            auto chosen = prefix;
            chosen.push_back(c);
            auto allowed = all_bits(n);
            for (Vertex x = 0; x <= c; ++x)
                clear_bit(allowed, x);
            std::vector<Vertex> solution;
            auto outcome = problem.exists(chosen, allowed, k, solution, budget);
            if (outcome == SearchOutcome::timeout)
                return best;
            if (outcome == SearchOutcome::found && static_cast<int>(solution.size()) == k) {
                best = std::move(solution);
                break;
            }
        }
        prefix.push_back(best[i]);
    }
    return best;
}

SolverResult solve(Problem& problem, Vertex n, InvariantKind kind, const SolverOptions& options)
{
    Budget budget(options.budget, options.node_limit);
    SolverResult result;
    result.kind = kind;

    auto incumbent = problem.greedy();
    int lower = problem.lower_bound();
    bool timed_out = false;

    std::uint64_t descent_nodes = 0;
    if (options.descent_budget.count() > 0) {
        Budget descent(std::min(options.descent_budget, options.budget / 4), options.node_limit / 4);
        while (static_cast<int>(incumbent.size()) > lower) {
            std::vector<Vertex> solution;
            const int k = static_cast<int>(incumbent.size()) - 1;
            auto outcome = problem.exists({}, all_bits(n), k, solution, descent);
            if (outcome == SearchOutcome::found)
                incumbent = std::move(solution);
            else {
                if (outcome == SearchOutcome::infeasible)
                    lower = k + 1;
                break;
            }
        }
        descent_nodes = descent.nodes();
    }
    for (int k = lower; k < static_cast<int>(incumbent.size()); ++k) {
        std::vector<Vertex> solution;
        auto outcome = problem.exists({}, all_bits(n), k, solution, budget);
        if (outcome == SearchOutcome::found) {
            incumbent = std::move(solution);
            break;
        }
        if (outcome == SearchOutcome::timeout) {
            timed_out = true;
            break;
        }
        lower = k + 1;
    }

    if (timed_out) {
        result.status = ResultStatus::bounds;
        result.lower = lower;
        result.upper = static_cast<int>(incumbent.size());
    } else {
        if (options.canonical_certificate)
            incumbent = canonicalize(problem, n, std::move(incumbent), budget);
        result.status = ResultStatus::exact;
        result.value = result.lower = result.upper = static_cast<int>(incumbent.size());
    }
    result.certificate = VertexSet(std::move(incumbent));
    result.nodes_explored = budget.nodes() + descent_nodes;
    result.elapsed = budget.elapsed();
    return result;
}

} // namespace

std::vector<std::vector<Vertex>> twin_classes(const DistanceMatrix& dm)
{
    const Vertex n = dm.order();
    auto twins = [&](Vertex u, Vertex v) {
        for (Vertex x = 0; x < n; ++x)
            if (x != u && x != v && dm(u, x) != dm(v, x))
                return false;
        return true;
    };
    // Twin-ness is an equivalence relation, so comparing with a class
    // representative suffices.
    std::vector<Vertex> rep(n, -1);
    std::vector<std::vector<Vertex>> classes;
    for (Vertex v = 0; v < n; ++v) {
        if (rep[v] >= 0)
            continue;
        std::vector<Vertex> cls{v};
        for (Vertex w = v + 1; w < n; ++w)
            if (rep[w] < 0 && twins(v, w)) {
                rep[w] = v;
                cls.push_back(w);
            }
        if (cls.size() >= 2)
            classes.push_back(std::move(cls));
    }
    return classes;
}

VertexSet forced_doubly_resolving_vertices(const DistanceMatrix& dm)
{
    const Vertex n = dm.order();
    std::vector<Vertex> forced;
    std::vector<int> values(n);
    for (Vertex v = 0; v < n; ++v)
        for (Vertex w = v + 1; w < n; ++w) {
            for (Vertex x = 0; x < n; ++x)
                values[x] = dm(v, x) - dm(w, x);
            // If all vertices but one share a value, that one must be chosen.
            for (Vertex x = 0; x < n; ++x) {
                Vertex other = x == 0 ? 1 : 0;
                bool lonely = true;
                for (Vertex y = 0; y < n && lonely; ++y)
                    if (y != x && values[y] != values[other])
                        lonely = false;
                if (lonely && values[x] != values[other]) {
                    forced.push_back(x);
                    break;
                }
            }
        }
    return VertexSet(std::move(forced));
}

SolverResult metric_dimension(const Graph& g, const DistanceMatrix& dm, const SolverOptions& options)
{
    const Vertex n = g.order();
    if (n == 1) {
        SolverResult r;
        r.kind = InvariantKind::beta;
        return r;
    }
    std::vector<Vertex> forced;
    if (options.twin_reduction)
        for (const auto& cls : twin_classes(dm))
            forced.insert(forced.end(), cls.begin(), cls.end() - 1);
    std::sort(forced.begin(), forced.end());
    ResolvingProblem problem(dm, std::move(forced));
    return solve(problem, n, InvariantKind::beta, options);
}

SolverResult min_doubly_resolving(const Graph& g, const DistanceMatrix& dm, const SolverOptions& options)
{
    const Vertex n = g.order();
    if (n < 2)
        fail(ErrorCode::too_small, "doubly resolving sets need at least two vertices");
    auto forced = forced_doubly_resolving_vertices(dm);
    DoublyResolvingProblem problem(dm, forced.members());
    return solve(problem, n, InvariantKind::psi, options);
}

SolverResult brute_force_invariant(const Graph& g, const DistanceMatrix& dm, InvariantKind kind)
{
    const Vertex n = g.order();
    if (n > brute_force_max_order)
        fail(ErrorCode::too_large, "brute force is limited to " + std::to_string(brute_force_max_order) + " vertices");
    if (kind == InvariantKind::psi && n < 2)
        fail(ErrorCode::too_small, "doubly resolving sets need at least two vertices");
    if (kind == InvariantKind::weighings)
        fail(ErrorCode::invalid_params, "brute force covers beta and psi only");

    auto start = std::chrono::steady_clock::now();
    SolverResult result;
    result.kind = kind;
    for (int size = kind == InvariantKind::psi ? 2 : 0; size <= n; ++size) {
        // Combinations of the given size in lexicographic order.
        std::vector<Vertex> combo(size);
        std::iota(combo.begin(), combo.end(), 0);
        while (true) {
            ++result.nodes_explored;
            VertexSet s(combo);
            bool ok = kind == InvariantKind::beta ? resolves(g, dm, s) : doubly_resolves(g, dm, s);
            if (ok) {
                result.value = result.lower = result.upper = size;
                result.certificate = s;
                result.elapsed =
                    std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
                return result;
            }
            int i = size - 1;
            while (i >= 0 && combo[i] == n - size + i)
                --i;
            if (i < 0)
                break;
            ++combo[i];
            for (int j = i + 1; j < size; ++j)
                combo[j] = combo[j - 1] + 1;
        }
    }
    fail(ErrorCode::precondition_failed, "no resolving set found (graph must be connected)");
}

} // namespace mdim
