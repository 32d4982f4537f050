// server.hpp -- HTTP surface of the game and analysis service
//
//   POST /games                {shape, mode, seed?}        -> session view
//   POST /games/{id}/guesses   {guess, rating?}            -> {rating, state}
//   GET  /games/{id}                                       -> session view
//   POST /analyze/count        {instance, budget?}         -> {count}
//   POST /analyze/suggest      {instance, budget?}         -> {guess, worstCase}
//   POST /analyze/reduce       {dimacs, target}            -> {instance, layout}
//
// Failures answer {"error": message} with 400 (invalid input), 404 (unknown
// game), 409 (game over) or 413 (budget exceeded).

#pragma once

#include <cstdint>
#include <cstdlib>
#include <optional>
#include <string>

#include <httplib.h>

#include "session.hpp"

namespace mastermind {

struct ApiResponse
{
    int status = 200;
    json body;
};

/// Request handlers, independent of the HTTP transport.
class Api
{
public:
    explicit Api(SessionStore &store) : _store(store) {}

    ApiResponse create_game(const std::string &body)
    {
        return guarded([&] {
            const json doc = parse_body(body);
            const Shape shape = shape_from_json(detail::field(doc, "shape", "request"), "shape");
            const json &mode = detail::field(doc, "mode", "request");
            if (!mode.is_string())
                throw ValidationError("mode: expected a string");
            std::optional<std::uint64_t> seed;
            if (doc.contains("seed") && !doc["seed"].is_null())
            {
                if (!doc["seed"].is_number_unsigned())
                    throw ValidationError("seed: expected a non-negative integer");
                seed = doc["seed"].get<std::uint64_t>();
            }
            return ApiResponse{201, to_json(_store.create(shape, parse_mode(mode.get<std::string>()), seed))};
        });
    }

    ApiResponse submit_guess(const std::string &id, const std::string &body)
    {
        return guarded([&] {
            const json doc = parse_body(body);
            const GameSession current = _store.get(id);
            const Code guess = code_from_json(detail::field(doc, "guess", "request"), current.shape.colors, "guess");
            std::optional<Rating> rating;
            if (doc.contains("rating") && !doc["rating"].is_null())
                rating = rating_from_json(doc["rating"], current.shape.variant);
            auto [r, state] = _store.submit(id, guess, rating);
            return ApiResponse{200, json{{"rating", to_json(r)}, {"state", to_json(state)}}};
        });
    }

    ApiResponse get_game(const std::string &id)
    {
        return guarded([&] { return ApiResponse{200, to_json(_store.get(id))}; });
    }

    ApiResponse count(const std::string &body)
    {
        return guarded([&] {
            const json doc = parse_body(body);
            const Instance inst = instance_from_json(detail::field(doc, "instance", "request"));
            return ApiResponse{200, json{{"count", count_solutions(inst, budget_of(doc))}}};
        });
    }

    ApiResponse suggest(const std::string &body)
    {
        return guarded([&] {
            const json doc = parse_body(body);
            const Instance inst = instance_from_json(detail::field(doc, "instance", "request"));
            const Suggestion s = mastermind::suggest(inst, budget_of(doc));
            return ApiResponse{200, json{{"guess", to_json(s.guess)}, {"worstCase", s.worst_case}}};
        });
    }

    ApiResponse reduce(const std::string &body)
    {
        return guarded([&] {
            const json doc = parse_body(body);
            const json &dimacs = detail::field(doc, "dimacs", "request");
            const json &target = detail::field(doc, "target", "request");
            if (!dimacs.is_string() || !target.is_string())
                throw ValidationError("dimacs and target must be strings");
            const CnfFormula f = parse_dimacs(dimacs.get<std::string>());
            auto [inst, layout] = mastermind::reduce(f, parse_target(target.get<std::string>()));
            return ApiResponse{200, json{{"instance", to_json(inst)}, {"layout", to_json(layout)}}};
        });
    }

private:
    static json parse_body(const std::string &body)
    {
        json doc = json::parse(body, nullptr, false);
        if (doc.is_discarded() || !doc.is_object())
            throw ValidationError("request body must be a JSON object");
        return doc;
    }

    std::uint64_t budget_of(const json &doc) const
    {
        if (!doc.contains("budget"))
            return _store.budget();
        if (!doc["budget"].is_number_unsigned())
            throw ValidationError("budget: expected a non-negative integer");
        return doc["budget"].get<std::uint64_t>();
    }

    template <typename F>
    static ApiResponse guarded(F &&handler)
    {
        auto fail = [](int status, const std::exception &e) { return ApiResponse{status, json{{"error", e.what()}}}; };
        try
        {
            return handler();
        }
        catch (const UnknownSession &e)
        {
            return fail(404, e);
        }
        catch (const SessionFinished &e)
        {
            return fail(409, e);
        }
        catch (const BudgetExceeded &e)
        {
            return fail(413, e);
        }
        catch (const Error &e)
        {
            return fail(400, e);
        }
        catch (const json::exception &e)
        {
            return fail(400, e);
        }
    }

    SessionStore &_store;
};

/// Default port, overridable by MASTERMIND_PORT.
inline int default_port()
{
    if (const char *env = std::getenv("MASTERMIND_PORT"))
    {
        char *end = nullptr;
        const long port = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && port > 0 && port < 65536)
            return static_cast<int>(port);
    }
    return 8080;
}

/// The API mounted on a cpp-httplib server.
class Server
{
public:
    explicit Server(SessionStore &store) : _api(store)
    {
        auto reply = [](httplib::Response &res, const ApiResponse &r) {
            res.status = r.status;
            res.set_content(r.body.dump(), "application/json");
        };
        _http.set_default_headers({{"Access-Control-Allow-Origin", "*"},
                                   {"Access-Control-Allow-Headers", "Content-Type"},
                                   {"Access-Control-Allow-Methods", "GET, POST, OPTIONS"}});
        _http.Options(R"(/.*)", [](const httplib::Request &, httplib::Response &res) { res.status = 204; });
        _http.Post("/games", [this, reply](const httplib::Request &req, httplib::Response &res) {
            reply(res, _api.create_game(req.body));
        });
        _http.Post(R"(/games/([0-9a-f]+)/guesses)", [this, reply](const httplib::Request &req, httplib::Response &res) {
            reply(res, _api.submit_guess(req.matches[1], req.body));
        });
        _http.Get(R"(/games/([^/]+))", [this, reply](const httplib::Request &req, httplib::Response &res) {
            reply(res, _api.get_game(req.matches[1]));
        });
        _http.Post("/analyze/count", [this, reply](const httplib::Request &req, httplib::Response &res) {
            reply(res, _api.count(req.body));
        });
        _http.Post("/analyze/suggest", [this, reply](const httplib::Request &req, httplib::Response &res) {
            reply(res, _api.suggest(req.body));
        });
        _http.Post("/analyze/reduce", [this, reply](const httplib::Request &req, httplib::Response &res) {
            reply(res, _api.reduce(req.body));
        });
    }

    /// Binds to host:port (port 0 picks a free one) and returns the port.
    int bind(const std::string &host, int port)
    {
        if (port == 0)
            port = _http.bind_to_any_port(host);
        else if (!_http.bind_to_port(host, port))
            port = -1;
        if (port < 0)
            throw Error("cannot bind " + host + ":" + std::to_string(port));
        return port;
    }

    /// Serves until stop() is called.
    bool listen() { return _http.listen_after_bind(); }

    void stop() { _http.stop(); }

    void wait_until_ready() const { _http.wait_until_ready(); }

private:
    Api _api;
    httplib::Server _http;
};

} // namespace mastermind
