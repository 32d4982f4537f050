// strategy.hpp -- one-step minimax guessing and an adversarial codemaker

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

#include "counting.hpp"

namespace mastermind {

namespace detail {

/// Dense index of a rating: black * (n + 1) + white, or the score.
inline std::size_t rating_index(const Rating &r, Variant v, std::size_t n)
{
    return v == Variant::full ? r.black() * (n + 1) + r.white() : r.score();
}

inline Rating rating_from_index(std::size_t idx, Variant v, std::size_t n)
{
    switch (v)
    {
    case Variant::full:
        return Rating::full(idx / (n + 1), idx % (n + 1));
    case Variant::black:
        return Rating::black_only(idx);
    case Variant::white:
        return Rating::white_only(idx);
    }
    throw UnsupportedVariant("unknown variant");
}

inline std::size_t rating_slots(Variant v, std::size_t n)
{
    return v == Variant::full ? (n + 1) * (n + 1) : n + 1;
}

/// Candidates flattened for fast repeated scoring.
class CandidateTable
{
public:
    CandidateTable(const std::vector<Code> &candidates, std::size_t n, std::size_t c)
      : _n(n), _c(c), _count(candidates.size()), _pegs(_count * n), _census(_count * c, 0)
    {
        for (std::size_t i = 0; i < _count; ++i)
        {
            for (std::size_t p = 0; p < n; ++p)
            {
                _pegs[i * n + p] = candidates[i][p];
                ++_census[i * c + candidates[i][p]];
            }
        }
    }

    std::size_t size() const noexcept { return _count; }

    /// Size of the largest rating class, giving up (returning something
    /// above cutoff) once a class exceeds cutoff.
    std::size_t worst_case(const std::vector<Color> &guess, Variant v, std::size_t cutoff,
                           std::vector<std::size_t> &hist) const
    {
        std::vector<std::size_t> gc(_c, 0);
        for (Color k : guess)
            ++gc[k];
        hist.assign(rating_slots(v, _n), 0);
        std::size_t worst = 0;
        for (std::size_t i = 0; i < _count; ++i)
        {
            const std::size_t idx = index_of(i, guess, gc, v);
            worst = std::max(worst, ++hist[idx]);
            if (worst > cutoff)
                return worst;
        }
        return worst;
    }

    std::size_t index_of(std::size_t i, const std::vector<Color> &guess, const std::vector<std::size_t> &gc,
                         Variant v) const
    {
        std::size_t a = 0, b = 0;
        if (v != Variant::white)
        {
            const Color *pegs = &_pegs[i * _n];
            for (std::size_t p = 0; p < _n; ++p)
                a += pegs[p] == guess[p];
            if (v == Variant::black)
                return a;
        }
        const std::size_t *census = &_census[i * _c];
        for (std::size_t k = 0; k < _c; ++k)
            b += std::min(census[k], gc[k]);
        return v == Variant::white ? b : a * (_n + 1) + (b - a);
    }

private:
    std::size_t _n, _c, _count;
    std::vector<Color> _pegs;
    std::vector<std::size_t> _census;
};

/// Advances code to the next ordered code (or the next sorted code when
/// sorted_only); returns false after the last one.
inline bool next_code(std::vector<Color> &code, std::size_t colors, bool sorted_only)
{
    const Color top = static_cast<Color>(colors - 1);
    std::size_t i = code.size();
    while (i > 0 && code[i - 1] == top)
        --i;
    if (i == 0)
        return false;
    ++code[i - 1];
    for (std::size_t p = i; p < code.size(); ++p)
        code[p] = sorted_only ? code[i - 1] : 0;
    return true;
}

inline std::vector<Code> all_candidates(const PlayHistory &h, std::uint64_t budget)
{
    SolutionSet set = enumerate_solutions(h, std::numeric_limits<std::size_t>::max(), budget);
    return std::move(set.solutions);
}

} // namespace detail

/// Size of the largest class when candidates are split by their rating
/// against g.
inline std::size_t worst_case_partition(const Code &g, const std::vector<Code> &candidates, Variant variant)
{
    if (candidates.empty())
        throw EmptyState("worst-case partition of an empty candidate list");
    for (const Code &x : candidates)
        detail::require_compatible(x, g);
    detail::CandidateTable table(candidates, g.size(), g.colors());
    std::vector<std::size_t> hist;
    return table.worst_case(std::vector<Color>(g.begin(), g.end()), variant,
                            std::numeric_limits<std::size_t>::max(), hist);
}

/// A guess together with the worst-case number of candidates it leaves.
struct Suggestion
{
    Code guess;
    std::size_t worst_case = 0;
};

/// Greedy minimax guess over all codes of the shape.
///
/// Returns the only candidate when one remains. Otherwise picks the code
/// whose largest rating class is smallest; ties prefer codes that are
/// themselves candidates, then the lexicographically smallest code. For
/// white games only sorted guesses are searched: a guess's rating classes
/// depend only on its multiset, and the sorted arrangement is the smallest.
inline Suggestion suggest(const PlayHistory &h, std::uint64_t budget = default_budget)
{
    h.validate();
    const std::size_t n = h.length(), c = h.colors();
    const Variant v = h.variant();
    detail::require_budget(space::power(c, n), budget, "guess search");

    const std::vector<Code> candidates = detail::all_candidates(h, budget);
    if (candidates.empty())
        throw Contradiction("no code is consistent with the history");
    if (candidates.size() == 1)
        return {candidates.front(), 1};

    detail::CandidateTable table(candidates, n, c);
    const bool sorted_only = v == Variant::white;
    // Candidates are listed in lexicographic order.
    auto is_candidate = [&](const std::vector<Color> &g) {
        return std::binary_search(candidates.begin(), candidates.end(), Code(g, c));
    };

    std::vector<Color> g(n, 0), best;
    std::size_t best_worst = std::numeric_limits<std::size_t>::max();
    bool best_is_candidate = false;
    std::vector<std::size_t> hist;
    do
    {
        const std::size_t worst = table.worst_case(g, v, best_worst, hist);
        if (worst > best_worst)
            continue;
        const bool candidate = is_candidate(g);
        // Codes arrive in increasing order, so an equal score only wins by
        // being a candidate when the incumbent is not.
        if (worst < best_worst || (candidate && !best_is_candidate))
        {
            best = g;
            best_worst = worst;
            best_is_candidate = candidate;
        }
    } while (detail::next_code(g, c, sorted_only));
    return {Code(best, c), best_worst};
}

inline Code suggest_guess(const PlayHistory &h, std::uint64_t budget = default_budget)
{
    return suggest(h, budget).guess;
}

/// Rating an adaptive codemaker gives to g: the one that keeps the most
/// candidates alive, smallest rating first on ties. Never contradicts the
/// history.
inline Rating adaptive_rating(const PlayHistory &h, const Code &g, std::uint64_t budget = default_budget)
{
    h.validate();
    if (g.size() != h.length() || g.colors() != h.colors())
        throw DimensionError("guess " + g.to_string() + " does not match the game's shape");
    const std::vector<Code> candidates = detail::all_candidates(h, budget);
    if (candidates.empty())
        throw Contradiction("no code is consistent with the history");

    const std::size_t n = h.length();
    const Variant v = h.variant();
    detail::CandidateTable table(candidates, n, h.colors());
    std::vector<std::size_t> hist;
    table.worst_case(std::vector<Color>(g.begin(), g.end()), v, std::numeric_limits<std::size_t>::max(), hist);
    // Slots are laid out in increasing rating order, so the first maximum
    // is the smallest rating.
    const auto it = std::max_element(hist.begin(), hist.end());
    return detail::rating_from_index(static_cast<std::size_t>(it - hist.begin()), v, n);
}

/// Ceiling of 2n log2(c) + 4n + ceil(c/n).
inline std::uint64_t chvatal_bound(std::uint64_t n, std::uint64_t c)
{
    if (n == 0 || c == 0)
        throw ValidationError("chvatal_bound needs n >= 1 and c >= 1");
    const std::uint64_t tail = 4 * n + (c + n - 1) / n;
    if ((c & (c - 1)) == 0)
    {
        // Exact for powers of two, where the log term is an integer.
        std::uint64_t log2c = 0;
        while ((std::uint64_t{1} << log2c) < c)
            ++log2c;
        return 2 * n * log2c + tail;
    }
    return static_cast<std::uint64_t>(std::ceil(2.0 * static_cast<double>(n) * std::log2(static_cast<double>(c)))) +
           tail;
}

} // namespace mastermind
