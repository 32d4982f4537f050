// session.hpp -- live game sessions behind the local service
//
// Sessions live in memory. With a journal path every state change is also
// appended as one JSON document per line, and a new store replays the file
// on start-up.

#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "document.hpp"
#include "strategy.hpp"

namespace mastermind {

class UnknownSession : public Error
{
public:
    explicit UnknownSession(const std::string &id) : Error("no game with id '" + id + "'") {}
};

class SessionFinished : public Error
{
public:
    explicit SessionFinished(const std::string &id) : Error("game '" + id + "' is already over") {}
};

enum class Mode
{
    engine_secret,      ///< the engine holds a fixed secret
    engine_adaptive,    ///< the engine re-picks the secret every turn
    external_assistant, ///< ratings come from a real opponent, the engine only tracks
};

inline std::string_view to_string(Mode m)
{
    switch (m)
    {
    case Mode::engine_secret:
        return "engine-secret";
    case Mode::engine_adaptive:
        return "engine-adaptive";
    case Mode::external_assistant:
        return "external-assistant";
    }
    return "?";
}

inline Mode parse_mode(std::string_view s)
{
    if (s == "engine-secret")
        return Mode::engine_secret;
    if (s == "engine-adaptive")
        return Mode::engine_adaptive;
    if (s == "external-assistant")
        return Mode::external_assistant;
    throw ValidationError("unknown mode '" + std::string(s) +
                          "' (expected engine-secret, engine-adaptive or external-assistant)");
}

enum class Status
{
    in_progress,
    solved,
    contradicted,
};

inline std::string_view to_string(Status s)
{
    switch (s)
    {
    case Status::in_progress:
        return "in-progress";
    case Status::solved:
        return "solved";
    case Status::contradicted:
        return "contradicted";
    }
    return "?";
}

struct Turn
{
    Query query;
    std::uint64_t remaining = 0;
};

struct GameSession
{
    std::string id;
    Shape shape;
    Mode mode = Mode::engine_secret;
    std::optional<Code> secret;
    std::vector<Turn> history;
    Status status = Status::in_progress;
    std::uint64_t remaining = 0;
    /// Number of state changes applied; strictly increasing.
    std::uint64_t turn = 0;

    PlayHistory transcript() const
    {
        PlayHistory h{shape, {}};
        for (const Turn &t : history)
            h.queries.push_back(t.query);
        return h;
    }
};

/// Public view of a session. The secret appears only once the game is over.
inline json to_json(const GameSession &s)
{
    json doc{{"id", s.id},
             {"shape", to_json(s.shape)},
             {"mode", std::string(to_string(s.mode))},
             {"status", std::string(to_string(s.status))},
             {"remaining", s.remaining},
             {"turn", s.turn}};
    doc["history"] = json::array();
    for (const Turn &t : s.history)
        doc["history"].push_back(
            json{{"guess", to_json(t.query.guess)}, {"rating", to_json(t.query.rating)}, {"remaining", t.remaining}});
    if (s.secret && s.status != Status::in_progress)
        doc["secret"] = to_json(*s.secret);
    return doc;
}

/// Uniform secret from Z_c^n, reproducible from the seed on any platform.
inline Code draw_secret(const Shape &shape, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    const std::uint64_t c = shape.colors;
    // Uniform by rejection sampling.
    const std::uint64_t limit = std::mt19937_64::max() - (std::mt19937_64::max() % c + 1) % c;
    std::vector<Color> pegs(shape.length);
    for (auto &p : pegs)
    {
        std::uint64_t x;
        do
            x = rng();
        while (x > limit);
        p = static_cast<Color>(x % c);
    }
    return Code(std::move(pegs), shape.colors);
}

inline std::string random_token()
{
    std::random_device rd;
    static constexpr char hex[] = "0123456789abcdef";
    std::string out;
    for (int i = 0; i < 8; ++i)
    {
        const std::uint32_t word = rd();
        for (int k = 0; k < 4; ++k)
        {
            out += hex[(word >> (8 * k + 4)) & 0xf];
            out += hex[(word >> (8 * k)) & 0xf];
        }
    }
    return out;
}

class SessionStore
{
public:
    explicit SessionStore(std::uint64_t budget = default_budget,
                          std::optional<std::filesystem::path> journal = std::nullopt)
      : _budget(budget), _journal_path(std::move(journal))
    {
        if (_journal_path)
        {
            replay();
            _journal.open(*_journal_path, std::ios::app);
            if (!_journal)
                throw Error("cannot open journal " + _journal_path->string());
        }
    }

    std::uint64_t budget() const noexcept { return _budget; }

    GameSession create(const Shape &shape, Mode mode, std::optional<std::uint64_t> seed = std::nullopt)
    {
        shape.validate();
        const std::uint64_t space = space::unconstrained(shape);
        detail::require_budget(space, _budget, "game shape");

        GameSession s;
        s.id = random_token();
        s.shape = shape;
        s.mode = mode;
        s.remaining = space;
        if (mode == Mode::engine_secret)
            s.secret = draw_secret(shape, seed ? *seed : std::random_device{}());
        write_create(s);
        return insert(std::move(s));
    }

    /// Applies one guess. Engine modes compute the rating; the external
    /// assistant mode records the caller's rating.
    std::pair<Rating, GameSession> submit(const std::string &id, const Code &guess,
                                          std::optional<Rating> external = std::nullopt)
    {
        auto entry = find(id);
        std::lock_guard lock(entry->mutex);
        GameSession &s = entry->session;
        if (s.status != Status::in_progress)
            throw SessionFinished(id);
        if (guess.size() != s.shape.length || guess.colors() != s.shape.colors)
            throw ValidationError("guess " + guess.to_string() + " does not fit a game of length " +
                                  std::to_string(s.shape.length) + " over " + std::to_string(s.shape.colors) +
                                  " colors");
        Rating rating = Rating::maximal(s.shape.variant, s.shape.length);
        switch (s.mode)
        {
        case Mode::engine_secret:
            if (external)
                throw ValidationError("ratings are supplied by the engine in this mode");
            rating = rate(*s.secret, guess, s.shape.variant);
            break;
        case Mode::engine_adaptive:
            if (external)
                throw ValidationError("ratings are supplied by the engine in this mode");
            rating = adaptive_rating(s.transcript(), guess, _budget);
            break;
        case Mode::external_assistant:
            if (!external)
                throw ValidationError("external-assistant games need the opponent's rating");
            if (external->variant() != s.shape.variant || !external->within(s.shape.length))
                throw ValidationError("rating " + external->to_string() + " is not a valid " +
                                      std::string(to_string(s.shape.variant)) + " rating for length " +
                                      std::to_string(s.shape.length));
            rating = *external;
            break;
        }
        apply(s, guess, rating);
        write_guess(s, guess, rating);
        return {rating, s};
    }

    GameSession get(const std::string &id) const
    {
        auto entry = find(id);
        std::lock_guard lock(entry->mutex);
        return entry->session;
    }

    std::size_t size() const
    {
        std::shared_lock lock(_map_mutex);
        return _sessions.size();
    }

private:
    struct Entry
    {
        std::mutex mutex;
        GameSession session;
    };

    std::shared_ptr<Entry> find(const std::string &id) const
    {
        std::shared_lock lock(_map_mutex);
        auto it = _sessions.find(id);
        if (it == _sessions.end())
            throw UnknownSession(id);
        return it->second;
    }

    GameSession insert(GameSession s)
    {
        auto entry = std::make_shared<Entry>();
        entry->session = s;
        std::unique_lock lock(_map_mutex);
        _sessions[s.id] = std::move(entry);
        return s;
    }

    void apply(GameSession &s, const Code &guess, const Rating &rating) const
    {
        s.history.push_back({{guess, rating}, 0});
        s.remaining = count_solutions(s.transcript(), _budget);
        s.history.back().remaining = s.remaining;
        ++s.turn;
        // A maximal rating nobody can hold still counts as a contradiction.
        if (s.remaining == 0)
            s.status = Status::contradicted;
        else if (rating == Rating::maximal(s.shape.variant, s.shape.length))
            s.status = Status::solved;
    }

    void append(const json &doc)
    {
        if (!_journal.is_open())
            return;
        std::lock_guard lock(_journal_mutex);
        _journal << doc.dump() << '\n';
        _journal.flush();
    }

    void write_create(const GameSession &s)
    {
        json doc{{"event", "create"}, {"id", s.id}, {"shape", to_json(s.shape)}, {"mode", std::string(to_string(s.mode))}};
        if (s.secret)
            doc["secret"] = to_json(*s.secret);
        append(doc);
    }

    void write_guess(const GameSession &s, const Code &guess, const Rating &rating)
    {
        append(json{{"event", "guess"}, {"id", s.id}, {"turn", s.turn}, {"guess", to_json(guess)},
                    {"rating", to_json(rating)}});
    }

    void replay()
    {
        std::ifstream in(*_journal_path);
        if (!in)
            return;
        std::string line;
        std::size_t line_no = 0;
        while (std::getline(in, line))
        {
            ++line_no;
            if (line.empty())
                continue;
            const json doc = json::parse(line, nullptr, false);
            if (doc.is_discarded() || !doc.is_object() || !doc.contains("event") || !doc.contains("id"))
                throw Error("journal line " + std::to_string(line_no) + " is not a valid event");
            const std::string id = doc["id"].get<std::string>();
            if (doc["event"] == "create")
            {
                GameSession s;
                s.id = id;
                s.shape = shape_from_json(doc["shape"]);
                s.mode = parse_mode(doc["mode"].get<std::string>());
                s.remaining = space::unconstrained(s.shape);
                if (doc.contains("secret"))
                    s.secret = code_from_json(doc["secret"], s.shape.colors);
                insert(std::move(s));
            }
            else if (doc["event"] == "guess")
            {
                auto entry = find(id);
                GameSession &s = entry->session;
                apply(s, code_from_json(doc["guess"], s.shape.colors),
                      rating_from_json(doc["rating"], s.shape.variant));
            }
            else
                throw Error("journal line " + std::to_string(line_no) + " has an unknown event");
        }
    }

    std::uint64_t _budget;
    std::optional<std::filesystem::path> _journal_path;
    std::ofstream _journal;
    std::mutex _journal_mutex;
    mutable std::shared_mutex _map_mutex;
    std::unordered_map<std::string, std::shared_ptr<Entry>> _sessions;
};

} // namespace mastermind
