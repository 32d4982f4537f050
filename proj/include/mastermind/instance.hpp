// instance.hpp -- queries, instances and search-space arithmetic

#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "code.hpp"

namespace mastermind {

/// Code length, color count and variant of a game.
struct Shape
{
    std::size_t length = 0;
    std::size_t colors = 0;
    Variant variant = Variant::full;

    friend bool operator==(const Shape &, const Shape &) = default;

    void validate() const
    {
        if (length == 0)
            throw ValidationError("code length must be at least 1");
        if (colors == 0)
            throw ValidationError("color count must be at least 1");
    }
};

/// A guess together with the rating it received.
struct Query
{
    Code guess;
    Rating rating;

    friend bool operator==(const Query &, const Query &) = default;
};

/// A Mastermind satisfiability instance: a shape plus the queries a
/// solution has to agree with.
struct Instance
{
    Shape shape;
    std::vector<Query> queries;

    std::size_t length() const noexcept { return shape.length; }
    std::size_t colors() const noexcept { return shape.colors; }
    Variant variant() const noexcept { return shape.variant; }

    /// Throws ValidationError unless every query fits the shape.
    void validate() const
    {
        shape.validate();
        for (std::size_t i = 0; i < queries.size(); ++i)
        {
            const Query &q = queries[i];
            const std::string where = "query " + std::to_string(i);
            if (q.guess.size() != shape.length)
                throw ValidationError(where + ": guess has length " + std::to_string(q.guess.size()) +
                                      ", expected " + std::to_string(shape.length));
            if (q.guess.colors() != shape.colors)
                throw ValidationError(where + ": guess uses " + std::to_string(q.guess.colors()) +
                                      " colors, expected " + std::to_string(shape.colors));
            if (q.rating.variant() != shape.variant)
                throw ValidationError(where + ": rating is " + std::string(to_string(q.rating.variant())) +
                                      ", instance is " + std::string(to_string(shape.variant)));
            if (!q.rating.within(shape.length))
                throw ValidationError(where + ": rating " + q.rating.to_string() +
                                      " out of bounds for length " + std::to_string(shape.length));
        }
    }
};

/// Game transcript: same data as an instance, seen from the players' side.
using PlayHistory = Instance;

/// True iff x would have produced q's rating for q's guess.
inline bool is_consistent(const Code &x, const Query &q, Variant variant)
{
    return rate(x, q.guess, variant) == q.rating;
}

inline bool is_consistent(const Code &x, const Instance &inst)
{
    for (const Query &q : inst.queries)
        if (!is_consistent(x, q, inst.variant()))
            return false;
    return true;
}

/// Saturating arithmetic for search-space sizes.
namespace space {

inline constexpr std::uint64_t saturated = std::numeric_limits<std::uint64_t>::max();

inline std::uint64_t mul(std::uint64_t a, std::uint64_t b)
{
    if (a != 0 && b > saturated / a)
        return saturated;
    return a * b;
}

/// c^n
inline std::uint64_t power(std::uint64_t c, std::size_t n)
{
    std::uint64_t r = 1;
    for (std::size_t i = 0; i < n; ++i)
        r = mul(r, c);
    return r;
}

/// Binomial coefficient C(n, k).
inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k)
{
    if (k > n)
        return 0;
    k = std::min(k, n - k);
    unsigned __int128 r = 1;
    for (std::uint64_t i = 1; i <= k; ++i)
    {
        r = r * (n - k + i) / i;
        if (r > saturated)
            return saturated;
    }
    return static_cast<std::uint64_t>(r);
}

/// n! / prod(k_i!) for a census summing to n.
inline std::uint64_t multinomial(const std::vector<std::size_t> &census)
{
    std::uint64_t r = 1;
    std::uint64_t placed = 0;
    for (std::size_t k : census)
    {
        placed += k;
        r = mul(r, binomial(placed, k));
    }
    return r;
}

/// Number of multisets of size n over c colors.
inline std::uint64_t multisets(std::size_t n, std::size_t c)
{
    return binomial(n + c - 1, c - 1);
}

/// Size of the solution space with no queries: ordered codes for full and
/// black, multisets for white.
inline std::uint64_t unconstrained(const Shape &shape)
{
    return shape.variant == Variant::white ? multisets(shape.length, shape.colors)
                                           : power(shape.colors, shape.length);
}

} // namespace space

} // namespace mastermind
