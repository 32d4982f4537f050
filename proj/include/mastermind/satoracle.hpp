// satoracle.hpp -- brute-force model counting for small formulas
//
// Tries every assignment. Shares no code with the Mastermind counters, which
// it is used to check.

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "cnf.hpp"

namespace mastermind {

/// Largest variable count the oracle will enumerate.
inline constexpr std::size_t max_oracle_variables = 26;

namespace detail {

inline void require_oracle_size(const CnfFormula &f)
{
    if (f.variables > max_oracle_variables)
        throw BudgetExceeded(std::uint64_t{1} << std::min<std::size_t>(f.variables, 63),
                             std::uint64_t{1} << max_oracle_variables,
                             "model enumeration over " + std::to_string(f.variables) + " variables");
}

/// Calls visit on every model; variable 0 is the most significant bit and
/// false sorts before true.
template <typename Visit>
void for_each_model(const CnfFormula &f, Visit &&visit)
{
    require_oracle_size(f);
    const std::size_t v = f.variables;
    Assignment values(v);
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << v); ++bits)
    {
        for (std::size_t i = 0; i < v; ++i)
            values[i] = (bits >> (v - 1 - i)) & 1;
        if (f.satisfied_by(values))
            visit(values);
    }
}

} // namespace detail

/// Number of satisfying assignments.
inline std::uint64_t count_sat(const CnfFormula &f)
{
    std::uint64_t n = 0;
    detail::for_each_model(f, [&](const Assignment &) { ++n; });
    return n;
}

/// All models in lexicographic order (variable 0 most significant, false
/// before true).
inline std::vector<Assignment> enumerate_models(const CnfFormula &f)
{
    std::vector<Assignment> out;
    detail::for_each_model(f, [&](const Assignment &a) { out.push_back(a); });
    return out;
}

} // namespace mastermind
