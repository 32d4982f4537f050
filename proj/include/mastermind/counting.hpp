// counting.hpp -- solution-space counters for the three variants
//
// Full and black instances are counted by walking ordered codes in
// lexicographic order. When the queries pin the exact multiplicity of every
// color, only rearrangements of that census are walked. White instances are
// counted over multisets (sorted codes) by a depth-first search that assigns
// one color multiplicity at a time and cuts branches whose score can no
// longer reach some query's rating.

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "instance.hpp"

namespace mastermind {

/// Default cap on the number of candidates a counter may enumerate.
inline constexpr std::uint64_t default_budget = std::uint64_t{1} << 26;

/// Result of enumerate_solutions.
struct SolutionSet
{
    /// Exact number of solutions, independent of the listing limit.
    std::uint64_t count = 0;
    /// Solutions in lexicographic order; sorted codes for white instances.
    std::vector<Code> solutions;
    /// True when solutions holds fewer than count entries.
    bool truncated = false;
};

namespace detail {

/// Returns the per-color multiplicities forced on every solution, if the
/// queries determine them completely. An empty optional means "not pinned";
/// a census that sums to something other than n means no code can satisfy
/// the pins.
inline std::optional<std::vector<std::size_t>> pinned_census(const Instance &inst)
{
    const std::size_t n = inst.length();
    const std::size_t c = inst.colors();
    std::vector<std::optional<std::size_t>> pins(c);
    bool conflict = false;

    auto pin = [&](std::size_t color, std::size_t count) {
        if (pins[color] && *pins[color] != count)
            conflict = true;
        pins[color] = count;
    };

    for (const Query &q : inst.queries)
    {
        const auto census = q.guess.census();
        const bool monochrome = std::count(census.begin(), census.end(), n) == 1;

        // A full rating with black + white = n, or a white rating of n, means
        // the secret is a rearrangement of the guess.
        bool whole = inst.variant() == Variant::full ? q.rating.black() + q.rating.white() == n
                     : inst.variant() == Variant::white ? q.rating.score() == n
                                                         : false;
        if (whole)
        {
            for (std::size_t k = 0; k < c; ++k)
                pin(k, census[k]);
            continue;
        }
        if (monochrome)
        {
            // Against (k, k, ..., k) every score equals the multiplicity of k;
            // a full rating with white pegs cannot occur.
            const Color k = q.guess[0];
            if (inst.variant() == Variant::full && q.rating.white() != 0)
                conflict = true;
            pin(k, q.rating.score());
        }
    }

    std::size_t unknown = 0, known = 0;
    std::size_t last_unknown = 0;
    for (std::size_t k = 0; k < c; ++k)
    {
        if (pins[k])
            known += *pins[k];
        else
        {
            ++unknown;
            last_unknown = k;
        }
    }
    if (conflict || known > n)
    {
        // Unsatisfiable: return a census that cannot sum to n.
        std::vector<std::size_t> bad(c, 0);
        bad[0] = n + 1;
        return bad;
    }
    if (unknown == 1)
    {
        pins[last_unknown] = n - known;
        unknown = 0;
    }
    if (unknown != 0)
        return std::nullopt;

    std::vector<std::size_t> census(c);
    for (std::size_t k = 0; k < c; ++k)
        census[k] = *pins[k];
    return census;
}

/// Per-color multiplicities fixed by monochrome queries, used for bounds in
/// the multiset search.
inline std::vector<std::optional<std::size_t>> monochrome_pins(const Instance &inst,
                                                               bool &conflict)
{
    const std::size_t n = inst.length();
    std::vector<std::optional<std::size_t>> pins(inst.colors());
    conflict = false;
    for (const Query &q : inst.queries)
    {
        if (!std::all_of(q.guess.begin(), q.guess.end(), [&](Color k) { return k == q.guess[0]; }))
            continue;
        const std::size_t count = q.rating.score();
        auto &slot = pins[q.guess[0]];
        if (slot && *slot != count)
            conflict = true;
        slot = count;
    }
    std::size_t total = 0;
    for (auto &p : pins)
        total += p.value_or(0);
    if (total > n)
        conflict = true;
    return pins;
}

/// Tracks alpha and beta of a working code against every query while
/// single pegs change.
class IncrementalScorer
{
public:
    IncrementalScorer(const Instance &inst, const std::vector<Color> &start)
      : _n(inst.length()), _c(inst.colors()), _q(inst.queries.size()),
        _with_beta(inst.variant() == Variant::full), _code(start), _census(_c, 0)
    {
        _guess.resize(_n * _q);
        _guess_census.assign(_c * _q, 0);
        _target_alpha.resize(_q);
        _target_beta.resize(_q);
        _alpha.assign(_q, 0);
        _beta.assign(_q, 0);

        for (Color k : _code)
            ++_census[k];
        for (std::size_t j = 0; j < _q; ++j)
        {
            const Query &query = inst.queries[j];
            for (std::size_t i = 0; i < _n; ++i)
            {
                _guess[i * _q + j] = query.guess[i];
                ++_guess_census[query.guess[i] * _q + j];
                _alpha[j] += query.guess[i] == _code[i];
            }
            for (std::size_t k = 0; k < _c; ++k)
                _beta[j] += std::min(_census[k], _guess_census[k * _q + j]);
            if (_with_beta)
            {
                _target_alpha[j] = query.rating.black();
                _target_beta[j] = query.rating.black() + query.rating.white();
            }
            else
                _target_alpha[j] = query.rating.score();
        }
    }

    void assign(std::size_t pos, Color color)
    {
        const Color old = _code[pos];
        if (old == color)
            return;
        const Color *g = &_guess[pos * _q];
        for (std::size_t j = 0; j < _q; ++j)
            _alpha[j] += std::size_t(g[j] == color) - std::size_t(g[j] == old);
        if (_with_beta)
        {
            const std::size_t *gc_old = &_guess_census[old * _q];
            const std::size_t *gc_new = &_guess_census[color * _q];
            for (std::size_t j = 0; j < _q; ++j)
            {
                _beta[j] -= _census[old] <= gc_old[j];
                _beta[j] += _census[color] < gc_new[j];
            }
        }
        --_census[old];
        ++_census[color];
        _code[pos] = color;
    }

    bool consistent() const
    {
        for (std::size_t j = 0; j < _q; ++j)
        {
            if (_alpha[j] != _target_alpha[j])
                return false;
            if (_with_beta && _beta[j] != _target_beta[j])
                return false;
        }
        return true;
    }

    const std::vector<Color> &code() const noexcept { return _code; }

private:
    std::size_t _n, _c, _q;
    bool _with_beta;
    std::vector<Color> _code;
    std::vector<std::size_t> _census;
    std::vector<Color> _guess;               // [position][query]
    std::vector<std::size_t> _guess_census;  // [color][query]
    std::vector<std::size_t> _target_alpha, _target_beta;
    std::vector<std::size_t> _alpha, _beta;
};

using Visitor = std::function<void(const std::vector<Color> &)>;

inline void require_budget(std::uint64_t space, std::uint64_t budget, const char *what)
{
    if (space >= budget)
        throw BudgetExceeded(space, budget, what);
}

/// Every ordered code, last position varying fastest.
inline void walk_all_codes(const Instance &inst, const Visitor &visit)
{
    const std::size_t n = inst.length();
    const Color top = static_cast<Color>(inst.colors() - 1);
    std::vector<Color> code(n, 0);
    IncrementalScorer scorer(inst, code);
    while (true)
    {
        if (scorer.consistent())
            visit(scorer.code());
        std::size_t i = n;
        while (i > 0 && code[i - 1] == top)
        {
            code[i - 1] = 0;
            scorer.assign(i - 1, 0);
            --i;
        }
        if (i == 0)
            return;
        ++code[i - 1];
        scorer.assign(i - 1, code[i - 1]);
    }
}

/// Every rearrangement of a fixed census, in lexicographic order.
inline void walk_census(const Instance &inst, const std::vector<std::size_t> &census,
                        const Visitor &visit)
{
    std::vector<Color> code;
    for (std::size_t k = 0; k < census.size(); ++k)
        code.insert(code.end(), census[k], static_cast<Color>(k));
    IncrementalScorer scorer(inst, code);
    const std::size_t n = code.size();
    while (true)
    {
        if (scorer.consistent())
            visit(scorer.code());
        // next_permutation, keeping track of the first changed position
        if (n < 2)
            return;
        std::size_t i = n - 1;
        while (i > 0 && code[i - 1] >= code[i])
            --i;
        if (i == 0)
            return;
        const std::size_t pivot = i - 1;
        std::size_t j = n - 1;
        while (code[j] <= code[pivot])
            --j;
        std::swap(code[pivot], code[j]);
        std::reverse(code.begin() + static_cast<std::ptrdiff_t>(pivot + 1), code.end());
        for (std::size_t p = pivot; p < n; ++p)
            scorer.assign(p, code[p]);
    }
}

inline void walk_ordered(const Instance &inst, std::uint64_t budget, const Visitor &visit)
{
    if (auto census = pinned_census(inst))
    {
        std::size_t total = 0;
        for (std::size_t k : *census)
            total += k;
        if (total != inst.length())
            return;
        require_budget(space::multinomial(*census), budget, "census-restricted enumeration");
        walk_census(inst, *census, visit);
        return;
    }
    require_budget(space::power(inst.colors(), inst.length()), budget, "ordered enumeration");
    walk_all_codes(inst, visit);
}

/// Depth-first search over color multiplicities for white instances.
class MultisetSearch
{
public:
    MultisetSearch(const Instance &inst, std::uint64_t node_limit, const Visitor &visit)
      : _n(inst.length()), _c(inst.colors()), _q(inst.queries.size()),
        _node_limit(node_limit), _visit(visit)
    {
        bool conflict = false;
        _pins = monochrome_pins(inst, conflict);
        _infeasible = conflict;

        _target.resize(_q);
        _gc.assign(_c * _q, 0);
        for (std::size_t j = 0; j < _q; ++j)
        {
            _target[j] = inst.queries[j].rating.score();
            for (Color k : inst.queries[j].guess)
                ++_gc[k * _q + j];
        }

        // Suffix tables over colors t..c-1.
        _pin_total.assign(_c + 1, 0);
        _free_colors.assign(_c + 1, 0);
        _pin_score.assign((_c + 1) * _q, 0);
        _free_mass.assign((_c + 1) * _q, 0);
        _free_min.assign((_c + 1) * _q, SIZE_MAX);
        for (std::size_t t = _c; t-- > 0;)
        {
            _pin_total[t] = _pin_total[t + 1] + _pins[t].value_or(0);
            _free_colors[t] = _free_colors[t + 1] + !_pins[t];
            for (std::size_t j = 0; j < _q; ++j)
            {
                const std::size_t g = _gc[t * _q + j];
                if (_pins[t])
                {
                    _pin_score[t * _q + j] = _pin_score[(t + 1) * _q + j] + std::min(*_pins[t], g);
                    _free_mass[t * _q + j] = _free_mass[(t + 1) * _q + j];
                    _free_min[t * _q + j] = _free_min[(t + 1) * _q + j];
                }
                else
                {
                    _pin_score[t * _q + j] = _pin_score[(t + 1) * _q + j];
                    _free_mass[t * _q + j] = _free_mass[(t + 1) * _q + j] + g;
                    _free_min[t * _q + j] = std::min(_free_min[(t + 1) * _q + j], g);
                }
            }
        }
        _score.assign(_q, 0);
        _counts.assign(_c, 0);
    }

    void run()
    {
        if (_infeasible)
            return;
        descend(0, _n);
    }

    std::uint64_t nodes() const noexcept { return _nodes; }

private:
    /// Whether some completion of colors [t, c) with `left` pegs can still
    /// meet every query.
    bool feasible(std::size_t t, std::size_t left) const
    {
        if (_pin_total[t] > left)
            return false;
        const std::size_t spare = left - _pin_total[t];
        if (_free_colors[t] == 0 && spare != 0)
            return false;
        for (std::size_t j = 0; j < _q; ++j)
        {
            const std::size_t base = _score[j] + _pin_score[t * _q + j];
            const std::size_t upper = base + std::min(spare, _free_mass[t * _q + j]);
            // Piling every spare peg onto one color wastes the most.
            const std::size_t lower =
                base + (spare == 0 ? 0 : std::min(spare, _free_min[t * _q + j]));
            if (_target[j] < lower || _target[j] > upper)
                return false;
        }
        return true;
    }

    void descend(std::size_t t, std::size_t left)
    {
        if (++_nodes > _node_limit)
            throw BudgetExceeded(space::multisets(_n, _c), _node_limit,
                                 "multiset search visited too many nodes");
        if (!feasible(t, left))
            return;
        if (t == _c)
        {
            emit();
            return;
        }
        std::size_t hi = left, lo = 0;
        if (_pins[t])
            hi = lo = *_pins[t];
        else if (_free_colors[t] == 1)
            hi = lo = left - _pin_total[t + 1];
        // Higher multiplicity of a smaller color sorts first.
        for (std::size_t k = hi + 1; k-- > lo;)
        {
            for (std::size_t j = 0; j < _q; ++j)
                _score[j] += std::min(k, _gc[t * _q + j]);
            _counts[t] = k;
            descend(t + 1, left - k);
            for (std::size_t j = 0; j < _q; ++j)
                _score[j] -= std::min(k, _gc[t * _q + j]);
        }
        _counts[t] = 0;
    }

    void emit()
    {
        _buffer.clear();
        for (std::size_t k = 0; k < _c; ++k)
            _buffer.insert(_buffer.end(), _counts[k], static_cast<Color>(k));
        _visit(_buffer);
    }

    std::size_t _n, _c, _q;
    std::uint64_t _node_limit;
    const Visitor &_visit;
    bool _infeasible = false;
    std::uint64_t _nodes = 0;

    std::vector<std::optional<std::size_t>> _pins;
    std::vector<std::size_t> _target;
    std::vector<std::size_t> _gc; // [color][query]
    std::vector<std::size_t> _pin_total, _free_colors;
    std::vector<std::size_t> _pin_score, _free_mass, _free_min; // [color][query]
    std::vector<std::size_t> _score;
    std::vector<std::size_t> _counts;
    std::vector<Color> _buffer;
};

inline void walk_multisets(const Instance &inst, std::uint64_t budget, const Visitor &visit)
{
    // Small spaces are always affordable; larger ones are bounded by the
    // number of search nodes actually visited.
    const std::uint64_t limit =
        space::multisets(inst.length(), inst.colors()) < budget ? space::saturated : budget;
    MultisetSearch search(inst, limit, visit);
    search.run();
}

inline void walk_solutions(const Instance &inst, std::uint64_t budget, const Visitor &visit)
{
    inst.validate();
    if (inst.variant() == Variant::white)
        walk_multisets(inst, budget, visit);
    else
        walk_ordered(inst, budget, visit);
}

} // namespace detail

/// Number of codes consistent with every query of inst: ordered codes for
/// full and black instances, multisets (sorted codes) for white ones.
///
/// Throws BudgetExceeded rather than returning a partial count.
inline std::uint64_t count_solutions(const Instance &inst, std::uint64_t budget = default_budget)
{
    std::uint64_t count = 0;
    detail::walk_solutions(inst, budget, [&](const std::vector<Color> &) { ++count; });
    return count;
}

/// Lists up to limit solutions in lexicographic order. The count is exact
/// even when the listing is truncated.
inline SolutionSet enumerate_solutions(const Instance &inst, std::size_t limit,
                                       std::uint64_t budget = default_budget)
{
    SolutionSet out;
    detail::walk_solutions(inst, budget, [&](const std::vector<Color> &code) {
        ++out.count;
        if (out.solutions.size() < limit)
            out.solutions.emplace_back(code, inst.colors());
    });
    out.truncated = out.solutions.size() < out.count;
    return out;
}

} // namespace mastermind
