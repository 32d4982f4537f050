#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>

#include <mastermind/reductions.hpp>
#include <mastermind/satoracle.hpp>

#include "oracles.hpp"
#include "worked_example.hpp"

using namespace mastermind;

namespace {

CnfFormula formula(std::size_t v, const oracle::Clauses &clauses)
{
    CnfFormula f;
    f.variables = v;
    for (const auto &cl : clauses)
    {
        Clause c;
        for (int lit : cl)
            c.push_back({static_cast<std::size_t>(std::abs(lit) - 1), lit > 0});
        f.clauses.push_back(c);
    }
    return f;
}

const CnfFormula xyz = formula(3, {{1, 2, 3}});

Code binary(std::string_view bits)
{
    std::vector<Color> pegs;
    for (char b : bits)
        pegs.push_back(b == '1');
    return Code(pegs, 2);
}

std::vector<std::size_t> ones(const Code &c)
{
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < c.size(); ++i)
        if (c[i] == 1)
            out.push_back(i);
    return out;
}

} // namespace

TEST(ReduceToWhite, SingleClause)
{
    const auto [inst, layout] = reduce_to_white(xyz);
    EXPECT_EQ(inst.shape, (Shape{6, 13, Variant::white}));
    EXPECT_EQ(inst.queries.size(), 9u);
    EXPECT_EQ(layout.mask, std::optional<std::size_t>{12});
    EXPECT_EQ(count_solutions(inst), 7u);

    // Query order and ratings: mask 0, per variable 1, per clause 3, aux 2.
    std::vector<std::size_t> ratings;
    for (const Query &q : inst.queries)
        ratings.push_back(q.rating.score());
    EXPECT_EQ(ratings, (std::vector<std::size_t>{0, 1, 1, 1, 1, 1, 1, 3, 2}));
    EXPECT_EQ(inst.queries[0].guess, Code::filled(6, 12, 13));
    EXPECT_EQ(inst.queries[1].guess, Code({0, 0, 1, 1, 12, 12}, 13));
    // a1 = variable 3, b1 = 4, c1 = 5.
    EXPECT_EQ(inst.queries[7].guess, Code({0, 2, 4, 6, 8, 12}, 13));
    EXPECT_EQ(inst.queries[8].guess, Code({7, 8, 10, 12, 12, 12}, 13));
}

TEST(ReduceToWhite, TwoClausesMatchModelCount)
{
    const CnfFormula f = formula(4, {{1, 2, 3}, {1, 2, 4}});
    const auto [inst, layout] = reduce_to_white(f);
    EXPECT_EQ(inst.shape, (Shape{10, 21, Variant::white}));
    EXPECT_EQ(inst.queries.size(), 15u);
    EXPECT_EQ(count_solutions(inst), oracle::models(4, {{1, 2, 3}, {1, 2, 4}}).size());
    EXPECT_EQ(count_solutions(inst), 13u);
}

TEST(ReduceToWhite, WorkedExampleShape)
{
    const auto [inst, layout] = reduce_to_white(parse_dimacs(worked_example::dimacs));
    EXPECT_EQ(inst.shape, (Shape{13, 27, Variant::white}));
    EXPECT_EQ(inst.queries.size(), 20u);
    EXPECT_EQ(count_solutions(inst), 10u);
}

TEST(ReduceToBlack2, SingleClause)
{
    const auto [inst, layout] = reduce_to_black2(xyz);
    EXPECT_EQ(inst.shape, (Shape{12, 2, Variant::black}));
    std::vector<std::size_t> ratings;
    for (const Query &q : inst.queries)
        ratings.push_back(q.rating.score());
    EXPECT_EQ(ratings, (std::vector<std::size_t>{6, 6, 6, 6, 6, 6, 6, 7, 7}));
    EXPECT_EQ(count_solutions(inst), 7u);
    // Same count straight from the brute-force rating oracle over 2^12 codes.
    std::vector<oracle::Query> qs;
    for (const Query &q : inst.queries)
        qs.push_back({oracle::Pegs(q.guess.begin(), q.guess.end()), {q.rating.score(), 0}});
    EXPECT_EQ(oracle::ordered_solutions(12, 2, oracle::Kind::black, qs).size(), 7u);
}

TEST(ReduceToBlack2, EverySolutionHasExactlyNOnes)
{
    const auto [inst, layout] = reduce_to_black2(parse_dimacs(worked_example::dimacs));
    for (const Code &s : enumerate_solutions(inst, SIZE_MAX).solutions)
        EXPECT_EQ(ones(s).size(), 13u);
}

TEST(ReduceToFull2, WorkedExampleTable)
{
    const CnfFormula f = parse_dimacs(worked_example::dimacs);
    const auto [full, layout] = reduce_to_full2(f);
    const auto [black, black_layout] = reduce_to_black2(f);
    EXPECT_EQ(full.shape, (Shape{26, 2, Variant::full}));
    ASSERT_EQ(full.queries.size(), worked_example::queries.size());
    for (std::size_t i = 0; i < full.queries.size(); ++i)
    {
        const auto &row = worked_example::queries[i];
        EXPECT_EQ(full.queries[i].guess, binary(row.guess)) << "query " << i;
        EXPECT_EQ(full.queries[i].rating, Rating::full(row.black, row.white)) << "query " << i;
        EXPECT_EQ(black.queries[i].guess, binary(row.guess));
        EXPECT_EQ(black.queries[i].rating, Rating::black_only(row.black));
    }
    EXPECT_EQ(layout.positive, black_layout.positive);
}

TEST(ReduceToFull2, SingleClauseRatings)
{
    const auto [inst, layout] = reduce_to_full2(xyz);
    std::vector<Rating> expected{Rating::full(6, 0)};
    for (int i = 0; i < 6; ++i)
        expected.push_back(Rating::full(6, 2));
    expected.push_back(Rating::full(7, 4));
    expected.push_back(Rating::full(7, 2));
    std::vector<Rating> got;
    for (const Query &q : inst.queries)
        got.push_back(q.rating);
    EXPECT_EQ(got, expected);
    EXPECT_EQ(count_solutions(inst), 7u);
}

TEST(ReduceToFull2, WorkedExampleSolutionCodes)
{
    const CnfFormula f = parse_dimacs(worked_example::dimacs);
    const auto [inst, layout] = reduce_to_full2(f);
    const SolutionSet s = enumerate_solutions(inst, 100);
    ASSERT_EQ(s.count, 10u);
    // Listed codes ascend; the worked example lists them descending.
    for (std::size_t i = 0; i < 10; ++i)
        EXPECT_EQ(s.solutions[i], binary(worked_example::solutions[9 - i]));
}

TEST(Layout, IsABijection)
{
    for (auto target : {ReductionTarget::white, ReductionTarget::black2, ReductionTarget::full2})
    {
        const ReductionLayout L = reduce(parse_dimacs(worked_example::dimacs), target).second;
        EXPECT_EQ(L.total_variables, 13u);
        std::set<std::size_t> slots(L.positive.begin(), L.positive.end());
        slots.insert(L.negative.begin(), L.negative.end());
        EXPECT_EQ(slots.size(), 26u);
        EXPECT_EQ(*slots.rbegin(), 25u);
        if (target == ReductionTarget::white)
            EXPECT_EQ(L.mask, std::optional<std::size_t>{26});
        else
            EXPECT_FALSE(L.mask);
        EXPECT_EQ(L.variable_name(0), "x1");
        EXPECT_EQ(L.variable_name(4), "a1");
        EXPECT_EQ(L.variable_name(12), "c3");
        ASSERT_EQ(L.auxiliaries.size(), 3u);
        EXPECT_EQ(L.auxiliaries[1], (ReductionLayout::Auxiliaries{7, 8, 9}));
    }
}

TEST(LiftColor, Examples)
{
    const Instance a{{3, 2, Variant::black}, {}};
    const Instance la = lift_color(a);
    EXPECT_EQ(la.shape, (Shape{3, 3, Variant::black}));
    ASSERT_EQ(la.queries.size(), 1u);
    EXPECT_EQ(la.queries[0].guess, Code({2, 2, 2}, 3));
    EXPECT_EQ(la.queries[0].rating, Rating::black_only(0));
    EXPECT_EQ(count_solutions(la), 8u);

    const Instance b{{1, 1, Variant::full}, {}};
    const Instance lb = lift_color(b);
    EXPECT_EQ(lb.shape, (Shape{1, 2, Variant::full}));
    EXPECT_EQ(lb.queries[0].guess, Code({1}, 2));
    EXPECT_EQ(lb.queries[0].rating, Rating::full(0, 0));
    EXPECT_EQ(count_solutions(lb), 1u);

    const Instance c{{2, 2, Variant::full}, {{Code({0, 0}, 2), Rating::full(2, 0)}}};
    EXPECT_EQ(count_solutions(c), 1u);
    EXPECT_EQ(count_solutions(lift_color(c)), 1u);

    EXPECT_THROW(lift_color(Instance{{2, 2, Variant::white}, {}}), UnsupportedVariant);
}

TEST(LiftColor, NeverUsesTheNewColor)
{
    std::mt19937_64 rng(37);
    for (int t = 0; t < 40; ++t)
    {
        const std::size_t n = 1 + rng() % 4, c = 1 + rng() % 3;
        Instance inst{{n, c, rng() % 2 ? Variant::full : Variant::black}, {}};
        std::vector<Color> s(n), g(n);
        for (std::size_t i = 0; i < n; ++i)
        {
            s[i] = static_cast<Color>(rng() % c);
            g[i] = static_cast<Color>(rng() % c);
        }
        inst.queries.push_back({Code(g, c), rate(Code(s, c), Code(g, c), inst.variant())});
        const Instance lifted = lift_color(inst);
        const SolutionSet sols = enumerate_solutions(lifted, SIZE_MAX);
        ASSERT_EQ(sols.count, count_solutions(inst));
        for (const Code &x : sols.solutions)
            for (Color k : x)
                ASSERT_LT(k, c);
    }
}

TEST(AssignmentToCode, ForcesAuxiliaries)
{
    const auto [inst, layout] = reduce_to_black2(xyz);
    // x true only: one literal holds, so a1 = b1 = c1 = true.
    const Code code = assignment_to_code(xyz, {true, false, false}, layout);
    EXPECT_EQ(ones(code), (std::vector<std::size_t>{0, 3, 5, 6, 8, 10}));
    EXPECT_TRUE(is_consistent(code, inst));

    // All three hold: a1 = false, b1 = false, c1 = true.
    const Code all = assignment_to_code(xyz, {true, true, true}, layout);
    EXPECT_EQ(ones(all), (std::vector<std::size_t>{0, 2, 4, 7, 9, 10}));
    EXPECT_TRUE(is_consistent(all, inst));

    EXPECT_THROW(assignment_to_code(xyz, {false, false, false}, layout), NotAModel);
    EXPECT_THROW(assignment_to_code(xyz, {true, false}, layout), NotAModel);
}

TEST(AssignmentToCode, WhiteCodeIsSortedLiteralColors)
{
    const auto [inst, layout] = reduce_to_white(xyz);
    const Code code = assignment_to_code(xyz, {true, false, false}, layout);
    EXPECT_EQ(code, Code({0, 3, 5, 6, 8, 10}, 13));
    EXPECT_TRUE(is_consistent(code, inst));
}

TEST(CodeToAssignment, WorkedExampleFirstRow)
{
    const auto [inst, layout] = reduce_to_full2(parse_dimacs(worked_example::dimacs));
    EXPECT_EQ(code_to_assignment(binary(worked_example::solutions[0]), layout),
              (Assignment{true, true, true, true}));
}

TEST(CodeToAssignment, RejectsNonSolutions)
{
    const auto [inst, layout] = reduce_to_full2(xyz);
    EXPECT_THROW(code_to_assignment(binary("101010101010"), layout), InconsistentCode);
    EXPECT_THROW(code_to_assignment(binary("1010"), layout), InconsistentCode);
    const auto [winst, wlayout] = reduce_to_white(xyz);
    EXPECT_THROW(code_to_assignment(Code({0, 2, 4, 6, 8, 10}, 13), wlayout), InconsistentCode);
}

TEST(CodeToAssignment, WhiteAcceptsAnyArrangement)
{
    const auto [inst, layout] = reduce_to_white(xyz);
    EXPECT_EQ(code_to_assignment(Code({10, 8, 6, 5, 3, 0}, 13), layout), (Assignment{true, false, false}));
}

// Bijection: models map one-to-one onto the listed solutions of every
// reduction, and back.
TEST(Properties, ModelsBiject)
{
    std::mt19937_64 rng(41);
    for (int t = 0; t < 30; ++t)
    {
        const std::size_t v = 3 + rng() % 2, m = 1 + rng() % 2;
        const oracle::Clauses clauses = oracle::random_clauses(rng, v, m);
        const CnfFormula f = formula(v, clauses);
        const auto models = oracle::models(v, clauses);
        for (auto target : {ReductionTarget::white, ReductionTarget::black2, ReductionTarget::full2})
        {
            const auto [inst, layout] = reduce(f, target);
            const SolutionSet sols = enumerate_solutions(inst, SIZE_MAX);
            std::set<Code> mapped;
            for (const auto &a : models)
            {
                const Code code = assignment_to_code(f, a, layout);
                ASSERT_EQ(code_to_assignment(code, layout), a);
                mapped.insert(code);
            }
            ASSERT_EQ(mapped, std::set<Code>(sols.solutions.begin(), sols.solutions.end()))
                << to_string(target);
            ASSERT_EQ(inst.queries.size(), 1 + (v + 3 * m) + 2 * m);
        }
    }
}

// If flipping k bits raises the rating by r, (k + r) / 2 of them are right:
// each variable query flips x and ~x, and exactly one of them matches.
TEST(Properties, VariableQueriesSplitEachPair)
{
    const auto [inst, layout] = reduce_to_black2(parse_dimacs(worked_example::dimacs));
    for (const Code &s : enumerate_solutions(inst, SIZE_MAX).solutions)
        for (std::size_t j = 0; j < layout.total_variables; ++j)
            ASSERT_EQ((s[layout.positive[j]] == 1) + (s[layout.negative[j]] == 1), 1);
}

TEST(Properties, ParsimonyOnRandomFormulas)
{
    std::mt19937_64 rng(43);
    for (int t = 0; t < 20; ++t)
    {
        const std::size_t v = 3 + rng() % 2, m = 1 + rng() % 2;
        const CnfFormula f = formula(v, oracle::random_clauses(rng, v, m));
        const std::uint64_t models = count_sat(f);
        ASSERT_EQ(count_solutions(reduce_to_white(f).first), models);
        ASSERT_EQ(count_solutions(reduce_to_black2(f).first), models);
        ASSERT_EQ(count_solutions(reduce_to_full2(f).first), models);
    }
}

TEST(Reductions, RejectInvalidFormulas)
{
    CnfFormula bad = xyz;
    bad.clauses.clear();
    EXPECT_THROW(reduce_to_white(bad), RestrictionError);
    EXPECT_THROW(reduce_to_black2(formula(3, {{1, 1, 2}})), RestrictionError);
    EXPECT_THROW(reduce_to_full2(formula(2, {{1, 2, -1}})), RestrictionError);
}
