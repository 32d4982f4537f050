#include <gtest/gtest.h>

#include <random>

#include <mastermind/satoracle.hpp>

#include "worked_example.hpp"

using namespace mastermind;

namespace {

CnfFormula formula(std::size_t v, std::vector<std::vector<int>> clauses)
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

} // namespace

TEST(CountSat, Examples)
{
    EXPECT_EQ(count_sat(parse_dimacs(worked_example::dimacs)), 10u);
    EXPECT_EQ(count_sat(formula(3, {{1, 2, 3}})), 7u);
    EXPECT_EQ(count_sat(formula(3, {{1, 2, 3}, {-1, 2, 3}})), 6u);
}

TEST(CountSat, AllSignPatternsIsUnsatisfiable)
{
    std::vector<std::vector<int>> clauses;
    for (int s1 : {1, -1})
        for (int s2 : {1, -1})
            for (int s3 : {1, -1})
                clauses.push_back({s1 * 1, s2 * 2, s3 * 3});
    const CnfFormula f = formula(3, clauses);
    EXPECT_EQ(count_sat(f), 0u);
    EXPECT_TRUE(enumerate_models(f).empty());
}

TEST(CountSat, BudgetOnVariables)
{
    EXPECT_THROW(count_sat(formula(27, {{1, 2, 3}})), BudgetExceeded);
}

TEST(EnumerateModels, WorkedExampleIsTheReversedTable)
{
    const auto models = enumerate_models(parse_dimacs(worked_example::dimacs));
    ASSERT_EQ(models.size(), worked_example::models.size());
    for (std::size_t i = 0; i < models.size(); ++i)
    {
        const auto &row = worked_example::models[models.size() - 1 - i];
        EXPECT_EQ(models[i], (Assignment{row[0], row[1], row[2], row[3]})) << "row " << i;
    }
}

TEST(EnumerateModels, ExcludesOnlyTheFalsifyingAssignment)
{
    const auto models = enumerate_models(formula(3, {{1, 2, 3}}));
    ASSERT_EQ(models.size(), 7u);
    EXPECT_EQ(models.front(), (Assignment{false, false, true}));
    for (const auto &m : models)
        EXPECT_NE(m, (Assignment{false, false, false}));
}

TEST(Properties, ModelsAreSortedDistinctAndSatisfying)
{
    std::mt19937_64 rng(3);
    for (int t = 0; t < 100; ++t)
    {
        const std::size_t v = 3 + rng() % 4;
        std::vector<std::vector<int>> clauses;
        CnfFormula f = formula(v, {});
        std::uint64_t previous = count_sat(f);
        for (std::size_t m = 0; m < 4; ++m)
        {
            std::vector<int> cl;
            while (cl.size() < 3)
            {
                int var = static_cast<int>(1 + rng() % v);
                if (std::find_if(cl.begin(), cl.end(), [&](int l) { return std::abs(l) == var; }) != cl.end())
                    continue;
                cl.push_back(rng() & 1 ? var : -var);
            }
            clauses.push_back(cl);
            f = formula(v, clauses);
            const auto models = enumerate_models(f);
            ASSERT_EQ(models.size(), count_sat(f));
            ASSERT_LE(models.size(), previous);
            ASSERT_LE(models.size(), std::uint64_t{1} << v);
            ASSERT_TRUE(std::is_sorted(models.begin(), models.end()));
            ASSERT_TRUE(std::adjacent_find(models.begin(), models.end()) == models.end());
            for (const auto &a : models)
                ASSERT_TRUE(f.satisfied_by(a));
            previous = models.size();
        }
    }
}
