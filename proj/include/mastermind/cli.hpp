// cli.hpp -- the `mastermind` command line
//
// Exit status: 0 success, 1 invalid input or usage, 2 budget exceeded,
// 3 a `verify` count mismatch.

#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "satoracle.hpp"
#include "server.hpp"

namespace mastermind::cli {

inline constexpr int ok = 0;
inline constexpr int invalid = 1;
inline constexpr int over_budget = 2;
inline constexpr int mismatch = 3;

namespace detail {

inline std::string read_file(const std::string &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ValidationError("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_file(const std::string &path, const std::string &text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text))
        throw ValidationError("cannot write '" + path + "'");
}

/// Parses a code whose color count is not known yet.
inline std::vector<Color> parse_pegs(const std::string &text)
{
    const Code wide = Code::parse(text, std::numeric_limits<Color>::max());
    return {wide.begin(), wide.end()};
}

/// Parses "b,w", "b w" or a bare score, as the variant requires.
inline Rating parse_rating(const std::vector<std::string> &tokens, Variant variant)
{
    std::vector<std::size_t> values;
    for (const std::string &token : tokens)
        for (Color k : parse_pegs(token))
            values.push_back(k);
    const std::size_t want = variant == Variant::full ? 2 : 1;
    if (values.size() != want)
        throw ValidationError(variant == Variant::full ? "a full rating is 'black,white'" : "a rating is one integer");
    if (variant == Variant::full)
        return Rating::full(values[0], values[1]);
    return variant == Variant::black ? Rating::black_only(values[0]) : Rating::white_only(values[0]);
}

inline std::string describe(const GameSession &s)
{
    return "n=" + std::to_string(s.shape.length) + " c=" + std::to_string(s.shape.colors) +
           " variant=" + std::string(to_string(s.shape.variant)) + " mode=" + std::string(to_string(s.mode)) +
           " remaining=" + std::to_string(s.remaining);
}

/// Reads guesses from in until the game ends, "quit", or end of input.
inline void play_loop(SessionStore &store, const std::string &id, std::istream &in, std::ostream &out,
                      std::ostream &err)
{
    GameSession s = store.get(id);
    out << "game " << describe(s) << '\n';
    std::string line;
    while (s.status == Status::in_progress && std::getline(in, line))
    {
        std::istringstream words(line);
        std::vector<std::string> tokens;
        for (std::string w; words >> w;)
            tokens.push_back(w);
        if (tokens.empty())
            continue;
        if (tokens[0] == "quit")
            break;
        try
        {
            if (tokens[0] == "hint")
            {
                const Suggestion hint = suggest(s.transcript(), store.budget());
                out << "hint " << hint.guess.to_string() << " worst=" << hint.worst_case << '\n';
                continue;
            }
            const Code guess(parse_pegs(tokens[0]), s.shape.colors);
            std::optional<Rating> rating;
            if (tokens.size() > 1)
                rating = parse_rating({tokens.begin() + 1, tokens.end()}, s.shape.variant);
            auto [r, next] = store.submit(id, guess, rating);
            s = next;
            out << "turn " << s.turn << ' ' << guess.to_string() << " -> " << r.to_string()
                << " remaining=" << s.remaining << '\n';
        }
        catch (const Error &e)
        {
            err << "error: " << e.what() << '\n';
        }
    }
    if (s.status == Status::solved)
        out << "solved in " << s.turn << " guesses\n";
    else if (s.status == Status::contradicted)
        out << "contradicted: no code fits these ratings\n";
}

} // namespace detail

/// Runs one command. argv[0] is the program name.
inline int dispatch(int argc, const char *const *argv, std::istream &in, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Mastermind rating, counting, reduction and strategy tools", "mastermind"};
    app.require_subcommand(1);
    app.failure_message(CLI::FailureMessage::help);

    std::function<int()> action;
    std::uint64_t budget = default_budget;
    auto add_budget = [&](CLI::App *cmd) {
        cmd->add_option("--budget", budget, "enumeration budget (search space must stay below it)")
            ->capture_default_str();
    };

    // rate
    std::string variant_name = "full", secret_text, guess_text;
    std::size_t colors = 0;
    auto *rate_cmd = app.add_subcommand("rate", "rate a guess against a secret");
    rate_cmd->add_option("--variant", variant_name, "full, black or white")->capture_default_str();
    rate_cmd->add_option("--secret", secret_text, "comma-separated secret")->required();
    rate_cmd->add_option("--guess", guess_text, "comma-separated guess")->required();
    rate_cmd->add_option("--colors", colors, "number of colors (default: largest peg + 1)");
    rate_cmd->callback([&] {
        action = [&] {
            const Variant v = parse_variant(variant_name);
            const auto s = detail::parse_pegs(secret_text), g = detail::parse_pegs(guess_text);
            std::size_t c = colors;
            if (c == 0)
            {
                for (Color k : s)
                    c = std::max<std::size_t>(c, k + 1);
                for (Color k : g)
                    c = std::max<std::size_t>(c, k + 1);
            }
            out << rate(Code(s, c), Code(g, c), v).to_string() << '\n';
            return ok;
        };
    });

    // count, enumerate, suggest
    std::string instance_path;
    auto *count_cmd = app.add_subcommand("count", "count the codes consistent with an instance");
    count_cmd->add_option("instance", instance_path, "instance document")->required();
    add_budget(count_cmd);
    count_cmd->callback([&] {
        action = [&] {
            out << count_solutions(parse_instance(detail::read_file(instance_path)), budget) << '\n';
            return ok;
        };
    });

    std::size_t limit = 100;
    auto *enumerate_cmd = app.add_subcommand("enumerate", "list consistent codes in lexicographic order");
    enumerate_cmd->add_option("instance", instance_path, "instance document")->required();
    enumerate_cmd->add_option("--limit", limit, "maximum number of codes to print")->capture_default_str();
    add_budget(enumerate_cmd);
    enumerate_cmd->callback([&] {
        action = [&] {
            const SolutionSet set = enumerate_solutions(parse_instance(detail::read_file(instance_path)), limit, budget);
            for (const Code &x : set.solutions)
                out << x.to_string() << '\n';
            out << "count=" << set.count << (set.truncated ? " (truncated)" : "") << '\n';
            return ok;
        };
    });

    auto *suggest_cmd = app.add_subcommand("suggest", "minimax next guess for an instance");
    suggest_cmd->add_option("instance", instance_path, "instance document")->required();
    add_budget(suggest_cmd);
    suggest_cmd->callback([&] {
        action = [&] {
            const Suggestion s = suggest(parse_instance(detail::read_file(instance_path)), budget);
            out << "guess=" << s.guess.to_string() << " worst=" << s.worst_case << '\n';
            return ok;
        };
    });

    // reduce, verify
    std::string dimacs_path, target_name, out_prefix;
    auto *reduce_cmd = app.add_subcommand("reduce", "reduce a 3-CNF formula to a Mastermind instance");
    reduce_cmd->add_option("formula", dimacs_path, "DIMACS file")->required();
    reduce_cmd->add_option("--target", target_name, "white, black2 or full2")->required();
    reduce_cmd->add_option("--out", out_prefix, "write PREFIX.json and PREFIX.layout.json instead of stdout");
    reduce_cmd->callback([&] {
        action = [&] {
            auto [inst, layout] = reduce(parse_dimacs(detail::read_file(dimacs_path)), parse_target(target_name));
            if (out_prefix.empty())
            {
                out << json{{"instance", to_json(inst)}, {"layout", to_json(layout)}}.dump(2) << '\n';
                return ok;
            }
            detail::write_file(out_prefix + ".json", to_json(inst).dump(2) + "\n");
            detail::write_file(out_prefix + ".layout.json", to_json(layout).dump(2) + "\n");
            out << "wrote " << out_prefix << ".json and " << out_prefix << ".layout.json\n";
            return ok;
        };
    });

    auto *verify_cmd = app.add_subcommand("verify", "check that every reduction preserves the model count");
    verify_cmd->add_option("formula", dimacs_path, "DIMACS file")->required();
    add_budget(verify_cmd);
    verify_cmd->callback([&] {
        action = [&] {
            const CnfFormula f = parse_dimacs(detail::read_file(dimacs_path));
            const ReductionTarget targets[] = {ReductionTarget::white, ReductionTarget::black2, ReductionTarget::full2};
            std::uint64_t expected = 0;
            try
            {
                expected = count_sat(f);
            }
            catch (const BudgetExceeded &e)
            {
                for (ReductionTarget t : targets)
                    out << to_string(t) << ": SKIP (" << e.what() << ")\n";
                return ok;
            }
            int status = ok;
            for (ReductionTarget t : targets)
            {
                try
                {
                    const std::uint64_t got = count_solutions(reduce(f, t).first, budget);
                    const bool pass = got == expected;
                    out << to_string(t) << ": " << expected << '=' << got << (pass ? " PASS" : " FAIL") << '\n';
                    if (!pass)
                        status = mismatch;
                }
                catch (const BudgetExceeded &e)
                {
                    out << to_string(t) << ": SKIP (" << e.what() << ")\n";
                }
            }
            return status;
        };
    });

    // bound
    std::uint64_t bound_n = 0, bound_c = 0;
    auto *bound_cmd = app.add_subcommand("bound", "guess bound 2n log2(c) + 4n + ceil(c/n)");
    bound_cmd->add_option("n", bound_n, "code length")->required();
    bound_cmd->add_option("c", bound_c, "number of colors")->required();
    bound_cmd->callback([&] {
        action = [&] {
            out << chvatal_bound(bound_n, bound_c) << '\n';
            return ok;
        };
    });

    // serve
    int port = default_port();
    std::string host = "127.0.0.1", journal;
    auto *serve_cmd = app.add_subcommand("serve", "run the HTTP game and analysis service");
    serve_cmd->add_option("--port", port, "TCP port (default: MASTERMIND_PORT or 8080)")->capture_default_str();
    serve_cmd->add_option("--host", host, "address to bind")->capture_default_str();
    serve_cmd->add_option("--journal", journal, "append-only session journal");
    add_budget(serve_cmd);
    serve_cmd->callback([&] {
        action = [&] {
            SessionStore store(budget, journal.empty() ? std::nullopt : std::optional<std::filesystem::path>(journal));
            Server server(store);
            const int bound = server.bind(host, port);
            out << "listening on http://" << host << ':' << bound << std::endl;
            return server.listen() ? ok : invalid;
        };
    });

    // play
    std::size_t play_n = 4, play_c = 6;
    std::string mode_name = "engine-secret";
    std::uint64_t seed = 0;
    auto *play_cmd = app.add_subcommand("play", "play a game on the terminal (guess [rating] | hint | quit)");
    play_cmd->add_option("--n", play_n, "code length")->capture_default_str();
    play_cmd->add_option("--c", play_c, "number of colors")->capture_default_str();
    play_cmd->add_option("--variant", variant_name, "full, black or white")->capture_default_str();
    play_cmd->add_option("--mode", mode_name, "engine-secret, engine-adaptive or external-assistant")
        ->capture_default_str();
    play_cmd->add_option("--seed", seed, "secret seed for engine-secret games")->capture_default_str();
    add_budget(play_cmd);
    play_cmd->callback([&] {
        action = [&] {
            SessionStore store(budget);
            const GameSession s = store.create({play_n, play_c, parse_variant(variant_name)}, parse_mode(mode_name), seed);
            detail::play_loop(store, s.id, in, out, err);
            return ok;
        };
    });

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError &e)
    {
        return app.exit(e, out, err) == 0 ? ok : invalid;
    }

    try
    {
        return action();
    }
    catch (const BudgetExceeded &e)
    {
        err << "error: " << e.what() << '\n';
        return over_budget;
    }
    catch (const Error &e)
    {
        err << "error: " << e.what() << '\n';
        return invalid;
    }
    catch (const json::exception &e)
    {
        err << "error: " << e.what() << '\n';
        return invalid;
    }
}

} // namespace mastermind::cli
