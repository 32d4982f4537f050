#include <gtest/gtest.h>

#include <random>

#include <mastermind/strategy.hpp>

#include "oracles.hpp"

using namespace mastermind;

namespace {

std::vector<Code> all_codes(std::size_t n, std::size_t c)
{
    std::vector<Code> out;
    for (const auto &p : oracle::all_codes(n, static_cast<unsigned>(c)))
        out.emplace_back(std::vector<Color>(p.begin(), p.end()), c);
    return out;
}

oracle::Kind kind_of(Variant v)
{
    return v == Variant::full ? oracle::Kind::full : v == Variant::black ? oracle::Kind::black : oracle::Kind::white;
}

std::vector<oracle::Pegs> candidate_pegs(const PlayHistory &h)
{
    std::vector<oracle::Pegs> out;
    for (const Code &x : enumerate_solutions(h, SIZE_MAX).solutions)
        out.emplace_back(x.begin(), x.end());
    return out;
}

std::pair<std::size_t, std::size_t> as_pair(const Rating &r)
{
    return r.variant() == Variant::full ? std::pair{r.black(), r.white()} : std::pair{r.score(), std::size_t{0}};
}

Code random_code(std::mt19937_64 &rng, std::size_t n, std::size_t c)
{
    std::vector<Color> pegs(n);
    for (auto &p : pegs)
        p = static_cast<Color>(rng() % c);
    return Code(pegs, c);
}

} // namespace

TEST(WorstCasePartition, Examples)
{
    const auto codes = all_codes(2, 2);
    EXPECT_EQ(worst_case_partition(Code({0, 0}, 2), codes, Variant::black), 2u);
    EXPECT_EQ(worst_case_partition(Code({1, 0}, 2), {Code({1, 0}, 2)}, Variant::full), 1u);
    // 00 and 11 both rate (1,0) against 01.
    EXPECT_EQ(worst_case_partition(Code({0, 1}, 2), codes, Variant::full), 2u);
}

TEST(WorstCasePartition, Errors)
{
    EXPECT_THROW(worst_case_partition(Code({0, 0}, 2), {}, Variant::full), EmptyState);
    EXPECT_THROW(worst_case_partition(Code({0, 0}, 2), {Code({0, 0, 0}, 2)}, Variant::full), DimensionError);
}

TEST(SuggestGuess, Examples)
{
    EXPECT_EQ(suggest_guess(PlayHistory{{2, 2, Variant::black}, {}}), Code({0, 0}, 2));
    EXPECT_EQ(suggest_guess(PlayHistory{{2, 2, Variant::full}, {}}), Code({0, 0}, 2));
    const Suggestion s = suggest(PlayHistory{{2, 2, Variant::full}, {}});
    EXPECT_EQ(s.worst_case, 2u);

    // (0,1) rated (0,2) leaves only (1,0).
    const PlayHistory unique{{2, 2, Variant::full}, {{Code({0, 1}, 2), Rating::full(0, 2)}}};
    EXPECT_EQ(suggest(unique).guess, Code({1, 0}, 2));
    EXPECT_EQ(suggest(unique).worst_case, 1u);
}

TEST(SuggestGuess, Errors)
{
    const PlayHistory contradiction{{2, 2, Variant::black},
                                    {{Code({0, 0}, 2), Rating::black_only(2)},
                                     {Code({1, 1}, 2), Rating::black_only(2)}}};
    EXPECT_THROW(suggest_guess(contradiction), Contradiction);
    EXPECT_THROW(suggest_guess(PlayHistory{{26, 2, Variant::black}, {}}), BudgetExceeded);
}

TEST(SuggestGuess, PrefersCandidatesOnTies)
{
    // Against {00, 11} every guess splits 1/1 in the black game; 00 is a
    // candidate and lexicographically first.
    const PlayHistory h{{2, 2, Variant::black}, {{Code({0, 1}, 2), Rating::black_only(1)}}};
    const Suggestion s = suggest(h);
    EXPECT_EQ(s.worst_case, 1u);
    EXPECT_EQ(s.guess, Code({0, 0}, 2));

    // Candidates {01, 10}: 00 and 11 rate both 1 (worst 2); 01 separates
    // them and is a candidate.
    const PlayHistory h2{{2, 2, Variant::black}, {{Code({0, 0}, 2), Rating::black_only(1)}}};
    EXPECT_EQ(suggest(h2).guess, Code({0, 1}, 2));
    EXPECT_EQ(suggest(h2).worst_case, 1u);
}

TEST(AdaptiveRating, Examples)
{
    EXPECT_EQ(adaptive_rating(PlayHistory{{2, 2, Variant::black}, {}}, Code({0, 0}, 2)), Rating::black_only(1));
    EXPECT_EQ(adaptive_rating(PlayHistory{{2, 2, Variant::full}, {}}, Code({0, 1}, 2)), Rating::full(1, 0));
    // A single remaining candidate forces its own rating.
    const PlayHistory h{{2, 2, Variant::full}, {{Code({0, 1}, 2), Rating::full(0, 2)}}};
    EXPECT_EQ(adaptive_rating(h, Code({1, 1}, 2)), rate(Code({1, 0}, 2), Code({1, 1}, 2), Variant::full));
}

TEST(AdaptiveRating, Errors)
{
    const PlayHistory contradiction{{2, 2, Variant::black},
                                    {{Code({0, 0}, 2), Rating::black_only(2)},
                                     {Code({1, 1}, 2), Rating::black_only(2)}}};
    EXPECT_THROW(adaptive_rating(contradiction, Code({0, 0}, 2)), Contradiction);
    EXPECT_THROW(adaptive_rating(PlayHistory{{2, 2, Variant::black}, {}}, Code({0, 0, 0}, 2)), DimensionError);
}

TEST(ChvatalBound, Examples)
{
    EXPECT_EQ(chvatal_bound(4, 6), 39u);
    EXPECT_EQ(chvatal_bound(1, 1), 5u);
    EXPECT_EQ(chvatal_bound(2, 4), 18u);
    EXPECT_EQ(chvatal_bound(4, 4), 33u);
    EXPECT_THROW(chvatal_bound(0, 3), ValidationError);
}

// Suggestions attain the exhaustive minimax optimum, and among optimal
// guesses the candidate-first, lexicographic tie-break holds.
TEST(Properties, SuggestMatchesMinimaxOracle)
{
    std::mt19937_64 rng(47);
    for (auto [n, c] : {std::pair<std::size_t, std::size_t>{2, 2}, {3, 2}, {2, 3}})
        for (Variant v : {Variant::full, Variant::black, Variant::white})
            for (int turn = 0; turn < 6; ++turn)
            {
                PlayHistory h{{n, c, v}, {}};
                const Code secret = random_code(rng, n, c);
                for (int k = 0; k < turn % 3; ++k)
                {
                    const Code g = random_code(rng, n, c);
                    h.queries.push_back({g, rate(secret, g, v)});
                }
                const auto candidates = candidate_pegs(h);
                const Suggestion s = suggest(h);
                if (candidates.size() == 1)
                {
                    ASSERT_EQ(oracle::Pegs(s.guess.begin(), s.guess.end()), candidates.front());
                    continue;
                }
                const auto [best, argmin] = oracle::minimax(n, static_cast<unsigned>(c), kind_of(v), candidates);
                ASSERT_EQ(s.worst_case, best);
                auto is_cand = [&](oracle::Pegs p) {
                    if (v == Variant::white)
                        std::sort(p.begin(), p.end());
                    return std::find(candidates.begin(), candidates.end(), p) != candidates.end();
                };
                oracle::Pegs expected = argmin.front();
                for (const auto &g : argmin)
                    if (is_cand(g))
                    {
                        expected = g;
                        break;
                    }
                ASSERT_EQ(oracle::Pegs(s.guess.begin(), s.guess.end()), expected);
            }
}

TEST(Properties, AdaptiveKeepsLargestClass)
{
    std::mt19937_64 rng(53);
    for (auto [n, c] : {std::pair<std::size_t, std::size_t>{2, 2}, {3, 2}, {2, 3}})
        for (Variant v : {Variant::full, Variant::black, Variant::white})
            for (int t = 0; t < 10; ++t)
            {
                PlayHistory h{{n, c, v}, {}};
                for (int turn = 0; turn < 3; ++turn)
                {
                    const Code g = random_code(rng, n, c);
                    const auto candidates = candidate_pegs(h);
                    const auto classes = oracle::classes(oracle::Pegs(g.begin(), g.end()), kind_of(v), candidates);
                    std::size_t largest = 0;
                    std::pair<std::size_t, std::size_t> first{};
                    for (auto &[r, size] : classes)
                        if (size > largest)
                        {
                            largest = size;
                            first = r;
                        }
                    const Rating r = adaptive_rating(h, g);
                    ASSERT_EQ(as_pair(r), first);
                    h.queries.push_back({g, r});
                    ASSERT_EQ(count_solutions(h), largest);
                }
            }
}

TEST(Properties, HonestSelfPlayStaysUnderChvatalBound)
{
    std::mt19937_64 rng(59);
    for (auto [n, c] : {std::pair<std::size_t, std::size_t>{3, 3}, {3, 4}, {4, 3}})
        for (int game = 0; game < 10; ++game)
        {
            const Code secret = random_code(rng, n, c);
            PlayHistory h{{n, c, Variant::full}, {}};
            std::size_t guesses = 0;
            while (true)
            {
                const Code g = suggest_guess(h);
                ++guesses;
                const Rating r = rate(secret, g, Variant::full);
                if (r == Rating::maximal(Variant::full, n))
                    break;
                h.queries.push_back({g, r});
                ASSERT_LE(guesses, chvatal_bound(n, c));
            }
            ASSERT_LE(guesses, chvatal_bound(n, c));
        }
}
