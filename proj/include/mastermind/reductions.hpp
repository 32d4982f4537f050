// reductions.hpp -- parsimonious maps from 3-CNF formulas to Mastermind
//
// Every variable (original or auxiliary) owns two slots: slot 2j stands for
// "variable j is true", slot 2j+1 for "variable j is false". Originals come
// first; each clause i then adds auxiliaries a_i, b_i, c_i at indices
// v+3i, v+3i+1, v+3i+2. For the white target slots are colors and the mask
// color is 2(v+3m); for the binary targets slots are code positions.
//
// The auxiliaries are forced by how many literals of their clause hold:
// a_i iff exactly one holds, not b_i iff all three hold, c_i iff a_i == b_i.

#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cnf.hpp"
#include "counting.hpp"
#include "instance.hpp"

namespace mastermind {

enum class ReductionTarget
{
    white,  ///< white-peg instance over 2(v+3m)+1 colors
    black2, ///< black-peg instance over 2 colors, length 2(v+3m)
    full2,  ///< full instance over 2 colors, length 2(v+3m)
};

inline std::string_view to_string(ReductionTarget t)
{
    switch (t)
    {
    case ReductionTarget::white:
        return "white";
    case ReductionTarget::black2:
        return "black2";
    case ReductionTarget::full2:
        return "full2";
    }
    return "?";
}

inline ReductionTarget parse_target(std::string_view s)
{
    if (s == "white")
        return ReductionTarget::white;
    if (s == "black2")
        return ReductionTarget::black2;
    if (s == "full2")
        return ReductionTarget::full2;
    throw ValidationError("unknown reduction target '" + std::string(s) +
                          "' (expected white, black2 or full2)");
}

/// Where each variable of a reduced formula lives in the Mastermind instance.
struct ReductionLayout
{
    struct Auxiliaries
    {
        std::size_t a, b, c; ///< variable indices

        friend bool operator==(const Auxiliaries &, const Auxiliaries &) = default;
    };

    ReductionTarget target = ReductionTarget::white;
    CnfFormula formula;
    std::size_t original_variables = 0;
    std::size_t total_variables = 0;
    /// Color (white) or position (binary targets) meaning "variable j true".
    std::vector<std::size_t> positive;
    /// Color or position meaning "variable j false".
    std::vector<std::size_t> negative;
    /// Mask color; white target only.
    std::optional<std::size_t> mask;
    std::vector<Auxiliaries> auxiliaries;

    friend bool operator==(const ReductionLayout &, const ReductionLayout &) = default;

    std::size_t slot(const Literal &l) const
    {
        return l.positive ? positive[l.variable] : negative[l.variable];
    }

    /// Display name: x1..xv for originals, a1/b1/c1... for auxiliaries.
    std::string variable_name(std::size_t j) const
    {
        if (j < original_variables)
            return "x" + std::to_string(j + 1);
        const std::size_t k = j - original_variables;
        static constexpr std::array<char, 3> prefix{'a', 'b', 'c'};
        return std::string(1, prefix[k % 3]) + std::to_string(k / 3 + 1);
    }
};

namespace detail {

inline ReductionLayout make_layout(const CnfFormula &f, ReductionTarget target)
{
    f.validate();
    ReductionLayout layout;
    layout.target = target;
    layout.formula = f;
    layout.original_variables = f.variables;
    layout.total_variables = f.variables + 3 * f.clauses.size();
    for (std::size_t j = 0; j < layout.total_variables; ++j)
    {
        layout.positive.push_back(2 * j);
        layout.negative.push_back(2 * j + 1);
    }
    for (std::size_t i = 0; i < f.clauses.size(); ++i)
    {
        const std::size_t base = f.variables + 3 * i;
        layout.auxiliaries.push_back({base, base + 1, base + 2});
    }
    if (target == ReductionTarget::white)
        layout.mask = 2 * layout.total_variables;
    return layout;
}

/// Binary guess with ones exactly at the given positions.
inline Code ones_at(std::size_t length, std::initializer_list<std::size_t> positions)
{
    std::vector<Color> pegs(length, 0);
    for (std::size_t p : positions)
        pegs[p] = 1;
    return Code(std::move(pegs), 2);
}

inline std::pair<Instance, ReductionLayout> reduce_binary(const CnfFormula &f, ReductionTarget target)
{
    ReductionLayout L = make_layout(f, target);
    const std::size_t n = L.total_variables;
    const std::size_t len = 2 * n;
    const bool full = target == ReductionTarget::full2;
    auto rated = [&](std::size_t black, std::size_t white) {
        return full ? Rating::full(black, white) : Rating::black_only(black);
    };

    Instance inst;
    inst.shape = {len, 2, full ? Variant::full : Variant::black};
    inst.queries.push_back({ones_at(len, {}), rated(n, 0)});
    for (std::size_t j = 0; j < n; ++j)
        inst.queries.push_back({ones_at(len, {L.positive[j], L.negative[j]}), rated(n, 2)});
    for (std::size_t i = 0; i < f.clauses.size(); ++i)
    {
        const Clause &cl = f.clauses[i];
        const auto &aux = L.auxiliaries[i];
        inst.queries.push_back({ones_at(len, {L.slot(cl[0]), L.slot(cl[1]), L.slot(cl[2]),
                                              L.positive[aux.a], L.positive[aux.b]}),
                                rated(n + 1, 4)});
    }
    for (std::size_t i = 0; i < f.clauses.size(); ++i)
    {
        const auto &aux = L.auxiliaries[i];
        inst.queries.push_back(
            {ones_at(len, {L.negative[aux.a], L.positive[aux.b], L.positive[aux.c]}), rated(n + 1, 2)});
    }
    return {std::move(inst), std::move(L)};
}

/// Truth values of all v+3m variables for a model of f.
inline std::vector<bool> extend_assignment(const CnfFormula &f, const Assignment &a)
{
    if (a.size() != f.variables)
        throw NotAModel("assignment has " + std::to_string(a.size()) + " values, formula has " +
                        std::to_string(f.variables) + " variables");
    if (!f.satisfied_by(a))
        throw NotAModel("assignment does not satisfy the formula");
    std::vector<bool> values(a.begin(), a.end());
    for (const Clause &cl : f.clauses)
    {
        std::size_t hits = 0;
        for (const Literal &l : cl)
            hits += l.satisfied_by(a);
        const bool av = hits == 1;
        const bool bv = hits != 3;
        values.push_back(av);
        values.push_back(bv);
        values.push_back(av == bv);
    }
    return values;
}

inline Instance reduce_for_layout(const ReductionLayout &layout);

} // namespace detail

/// White-peg instance whose multiset solutions correspond one-to-one to the
/// models of f.
///
/// Query order: the all-mask guess rated 0; per variable (x, x, ~x, ~x,
/// mask...) rated 1; per clause (l1, l2, l3, a, b, mask...) rated 3; per
/// clause (~a, b, c, mask...) rated 2.
inline std::pair<Instance, ReductionLayout> reduce_to_white(const CnfFormula &f)
{
    ReductionLayout L = detail::make_layout(f, ReductionTarget::white);
    const std::size_t n = L.total_variables;
    const std::size_t c = 2 * n + 1;
    const Color mask = static_cast<Color>(*L.mask);

    auto guess = [&](std::initializer_list<std::size_t> head) {
        std::vector<Color> pegs(n, mask);
        std::size_t i = 0;
        for (std::size_t k : head)
            pegs[i++] = static_cast<Color>(k);
        return Code(std::move(pegs), c);
    };

    Instance inst;
    inst.shape = {n, c, Variant::white};
    inst.queries.push_back({guess({}), Rating::white_only(0)});
    for (std::size_t j = 0; j < n; ++j)
        inst.queries.push_back(
            {guess({L.positive[j], L.positive[j], L.negative[j], L.negative[j]}), Rating::white_only(1)});
    for (std::size_t i = 0; i < f.clauses.size(); ++i)
    {
        const Clause &cl = f.clauses[i];
        const auto &aux = L.auxiliaries[i];
        inst.queries.push_back({guess({L.slot(cl[0]), L.slot(cl[1]), L.slot(cl[2]), L.positive[aux.a],
                                       L.positive[aux.b]}),
                                Rating::white_only(3)});
    }
    for (std::size_t i = 0; i < f.clauses.size(); ++i)
    {
        const auto &aux = L.auxiliaries[i];
        inst.queries.push_back(
            {guess({L.negative[aux.a], L.positive[aux.b], L.positive[aux.c]}), Rating::white_only(2)});
    }
    return {std::move(inst), std::move(L)};
}

/// Binary black-peg instance of length 2(v+3m) with the same solution count
/// as f's model count. Every solution has exactly v+3m ones.
inline std::pair<Instance, ReductionLayout> reduce_to_black2(const CnfFormula &f)
{
    return detail::reduce_binary(f, ReductionTarget::black2);
}

/// The black2 construction with full ratings: (n,0), (n,2), (n+1,4) and
/// (n+1,2) in place of n, n, n+1, n+1.
inline std::pair<Instance, ReductionLayout> reduce_to_full2(const CnfFormula &f)
{
    return detail::reduce_binary(f, ReductionTarget::full2);
}

inline std::pair<Instance, ReductionLayout> reduce(const CnfFormula &f, ReductionTarget target)
{
    return target == ReductionTarget::white ? reduce_to_white(f) : detail::reduce_binary(f, target);
}

inline Instance detail::reduce_for_layout(const ReductionLayout &layout)
{
    return reduce(layout.formula, layout.target).first;
}

/// Adds a color that no solution may use: the constant guess of the new
/// color rated zero. The solution count is unchanged.
inline Instance lift_color(const Instance &inst)
{
    inst.validate();
    if (inst.variant() == Variant::white)
        throw UnsupportedVariant("color lifting is defined for full and black instances only");
    const std::size_t c = inst.colors() + 1;
    Instance out;
    out.shape = {inst.length(), c, inst.variant()};
    for (const Query &q : inst.queries)
        out.queries.push_back({Code(std::vector<Color>(q.guess.begin(), q.guess.end()), c), q.rating});
    out.queries.push_back({Code::filled(inst.length(), static_cast<Color>(c - 1), c),
                           inst.variant() == Variant::full ? Rating::full(0, 0) : Rating::black_only(0)});
    return out;
}

/// Solution of the reduced instance that encodes model a of f.
///
/// White target: the sorted multiset holding one literal color per variable.
/// Binary targets: ones exactly at each variable's satisfied-literal position.
inline Code assignment_to_code(const CnfFormula &f, const Assignment &a, const ReductionLayout &layout)
{
    if (f != layout.formula)
        throw ValidationError("layout was built for a different formula");
    const std::vector<bool> values = detail::extend_assignment(f, a);
    const std::size_t n = layout.total_variables;
    if (layout.target == ReductionTarget::white)
    {
        std::vector<Color> pegs;
        for (std::size_t j = 0; j < n; ++j)
            pegs.push_back(static_cast<Color>(values[j] ? layout.positive[j] : layout.negative[j]));
        std::sort(pegs.begin(), pegs.end());
        return Code(std::move(pegs), 2 * n + 1);
    }
    std::vector<Color> pegs(2 * n, 0);
    for (std::size_t j = 0; j < n; ++j)
        pegs[values[j] ? layout.positive[j] : layout.negative[j]] = 1;
    return Code(std::move(pegs), 2);
}

/// Reads the original variables back out of a solution of the reduced
/// instance. Throws InconsistentCode if code is not a solution.
inline Assignment code_to_assignment(const Code &code, const ReductionLayout &layout)
{
    const Instance inst = detail::reduce_for_layout(layout);
    if (code.size() != inst.length() || code.colors() != inst.colors())
        throw InconsistentCode("code has shape (" + std::to_string(code.size()) + ", " +
                               std::to_string(code.colors()) + "), instance expects (" +
                               std::to_string(inst.length()) + ", " + std::to_string(inst.colors()) + ")");
    if (!is_consistent(code, inst))
        throw InconsistentCode("code " + code.to_string() + " is not a solution of the reduced instance");

    Assignment a(layout.original_variables);
    if (layout.target == ReductionTarget::white)
    {
        const auto census = code.census();
        for (std::size_t j = 0; j < a.size(); ++j)
            a[j] = census[layout.positive[j]] == 1;
    }
    else
    {
        for (std::size_t j = 0; j < a.size(); ++j)
            a[j] = code[layout.positive[j]] == 1;
    }
    return a;
}

} // namespace mastermind
