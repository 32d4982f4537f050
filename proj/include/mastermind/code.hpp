// code.hpp -- codes, ratings and the two match counts behind all variants

#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"

namespace mastermind {

/// Color index in [0, c).
using Color = std::uint32_t;

/// Which of the three games a rating belongs to.
enum class Variant
{
    full,  ///< (black, white) pegs
    black, ///< black pegs only
    white, ///< color matches only, position ignored
};

inline std::string_view to_string(Variant v)
{
    switch (v)
    {
    case Variant::full:
        return "full";
    case Variant::black:
        return "black";
    case Variant::white:
        return "white";
    }
    return "?";
}

inline Variant parse_variant(std::string_view s)
{
    if (s == "full")
        return Variant::full;
    if (s == "black")
        return Variant::black;
    if (s == "white")
        return Variant::white;
    throw ValidationError("unknown variant '" + std::string(s) +
                          "' (expected full, black or white)");
}

/// An ordered sequence of pegs over a fixed number of colors.
///
/// A code always knows its color bound, so two codes can only be compared
/// when both their length and their color count agree.
class Code
{
public:
    Code() = default;

    Code(std::vector<Color> pegs, std::size_t colors)
      : _pegs(std::move(pegs)), _colors(colors)
    {
        if (colors == 0)
            throw ValidationError("a code needs at least one color");
        for (std::size_t i = 0; i < _pegs.size(); ++i)
        {
            if (_pegs[i] >= colors)
                throw ValidationError("peg " + std::to_string(i) + " has color " +
                                      std::to_string(_pegs[i]) + ", expected < " +
                                      std::to_string(colors));
        }
    }

    Code(std::initializer_list<Color> pegs, std::size_t colors)
      : Code(std::vector<Color>(pegs), colors)
    {
    }

    /// Constant code (k, k, ..., k).
    static Code filled(std::size_t length, Color k, std::size_t colors)
    {
        return Code(std::vector<Color>(length, k), colors);
    }

    /// Parses "0,1,2,3". Whitespace around entries is ignored.
    static Code parse(std::string_view text, std::size_t colors)
    {
        std::vector<Color> pegs;
        std::size_t pos = 0;
        while (pos <= text.size())
        {
            std::size_t comma = text.find(',', pos);
            if (comma == std::string_view::npos)
                comma = text.size();
            std::string item(text.substr(pos, comma - pos));
            std::istringstream ss(item);
            long long value = -1;
            char junk;
            if (!(ss >> value) || (ss >> junk) || value < 0)
                throw ValidationError("bad peg '" + item + "' in code '" + std::string(text) + "'");
            pegs.push_back(static_cast<Color>(value));
            pos = comma + 1;
        }
        return Code(std::move(pegs), colors);
    }

    std::size_t size() const noexcept { return _pegs.size(); }
    std::size_t colors() const noexcept { return _colors; }
    Color operator[](std::size_t i) const { return _pegs[i]; }
    std::span<const Color> pegs() const noexcept { return _pegs; }
    auto begin() const noexcept { return _pegs.begin(); }
    auto end() const noexcept { return _pegs.end(); }

    /// Multiplicity of every color.
    std::vector<std::size_t> census() const
    {
        std::vector<std::size_t> counts(_colors, 0);
        for (Color k : _pegs)
            ++counts[k];
        return counts;
    }

    /// Canonical representative of the code up to reordering.
    Code sorted() const
    {
        Code out = *this;
        std::sort(out._pegs.begin(), out._pegs.end());
        return out;
    }

    bool is_sorted() const { return std::is_sorted(_pegs.begin(), _pegs.end()); }

    std::string to_string() const
    {
        std::string s;
        for (std::size_t i = 0; i < _pegs.size(); ++i)
        {
            if (i)
                s += ',';
            s += std::to_string(_pegs[i]);
        }
        return s;
    }

    friend bool operator==(const Code &, const Code &) = default;

    /// Lexicographic on pegs.
    friend std::strong_ordering operator<=>(const Code &a, const Code &b)
    {
        if (auto c = a._pegs <=> b._pegs; c != 0)
            return c;
        return a._colors <=> b._colors;
    }

private:
    std::vector<Color> _pegs;
    std::size_t _colors = 0;
};

/// Codemaker's answer to a guess, tagged with the variant it belongs to.
///
/// Full ratings carry (black, white). Black-only and white-only ratings
/// carry a single score, available through score().
class Rating
{
public:
    static Rating full(std::size_t black, std::size_t white)
    {
        return Rating(Variant::full, black, white);
    }
    static Rating black_only(std::size_t score) { return Rating(Variant::black, score, 0); }
    static Rating white_only(std::size_t score) { return Rating(Variant::white, score, 0); }

    /// The top rating for a code of the given length.
    static Rating maximal(Variant v, std::size_t length)
    {
        return v == Variant::full ? full(length, 0) : Rating(v, length, 0);
    }

    Variant variant() const noexcept { return _variant; }

    /// Black pegs of a full rating.
    std::size_t black() const { return _first; }
    /// White pegs of a full rating.
    std::size_t white() const { return _second; }
    /// Score of a black-only or white-only rating.
    std::size_t score() const { return _first; }

    /// Checks the bounds a rating must satisfy for codes of length n.
    bool within(std::size_t n) const
    {
        return _variant == Variant::full ? _first + _second <= n : _first <= n;
    }

    std::string to_string() const
    {
        if (_variant == Variant::full)
            return "black=" + std::to_string(_first) + " white=" + std::to_string(_second);
        return std::to_string(_first);
    }

    friend bool operator==(const Rating &, const Rating &) = default;

    /// Orders by black then white (or by score). Only meaningful within one
    /// variant.
    friend auto operator<=>(const Rating &a, const Rating &b)
    {
        if (auto c = a._first <=> b._first; c != 0)
            return c;
        return a._second <=> b._second;
    }

private:
    Rating(Variant v, std::size_t first, std::size_t second)
      : _variant(v), _first(first), _second(second)
    {
    }

    Variant _variant;
    std::size_t _first;
    std::size_t _second;
};

namespace detail {

inline void require_compatible(const Code &x, const Code &y)
{
    if (x.size() != y.size())
        throw DimensionError("code lengths differ: " + std::to_string(x.size()) + " vs " +
                             std::to_string(y.size()));
    if (x.colors() != y.colors())
        throw DimensionError("color counts differ: " + std::to_string(x.colors()) + " vs " +
                             std::to_string(y.colors()));
}

} // namespace detail

/// Number of positions where the two codes agree.
inline std::size_t alpha(const Code &x, const Code &y)
{
    detail::require_compatible(x, y);
    std::size_t n = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
        n += x[i] == y[i];
    return n;
}

/// Largest alpha(x, y') over all rearrangements y' of y, computed as the
/// sum over colors of the smaller multiplicity.
inline std::size_t beta(const Code &x, const Code &y)
{
    detail::require_compatible(x, y);
    std::vector<std::size_t> cx = x.census();
    std::vector<std::size_t> cy = y.census();
    std::size_t n = 0;
    for (std::size_t k = 0; k < cx.size(); ++k)
        n += std::min(cx[k], cy[k]);
    return n;
}

/// Rating of guess g against secret s.
inline Rating rate(const Code &s, const Code &g, Variant variant)
{
    switch (variant)
    {
    case Variant::full:
    {
        std::size_t a = alpha(s, g);
        return Rating::full(a, beta(s, g) - a);
    }
    case Variant::black:
        return Rating::black_only(alpha(s, g));
    case Variant::white:
        return Rating::white_only(beta(s, g));
    }
    throw UnsupportedVariant("unknown variant");
}

} // namespace mastermind
