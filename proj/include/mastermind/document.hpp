// document.hpp -- JSON documents for instances, ratings and layouts
//
// Instance document:
//
//   {"n": 4, "c": 6, "variant": "full",
//    "queries": [{"guess": [4,4,1,1], "rating": {"black": 0, "white": 1}}]}
//
// Ratings are {"black", "white"} objects for full instances and bare
// integers otherwise.

#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <json.hpp>

#include "instance.hpp"
#include "reductions.hpp"

namespace mastermind {

using json = nlohmann::json;

namespace detail {

inline const json &field(const json &doc, const char *key, const std::string &where)
{
    if (!doc.is_object())
        throw ValidationError(where + ": expected an object");
    auto it = doc.find(key);
    if (it == doc.end())
        throw ValidationError(where + ": missing field '" + key + "'");
    return *it;
}

inline std::size_t count_field(const json &value, const std::string &where)
{
    if (!value.is_number_integer() || value.get<long long>() < 0)
        throw ValidationError(where + ": expected a non-negative integer");
    return value.get<std::size_t>();
}

} // namespace detail

inline json to_json(const Code &code)
{
    json arr = json::array();
    for (Color k : code)
        arr.push_back(k);
    return arr;
}

inline Code code_from_json(const json &doc, std::size_t colors, const std::string &where = "code")
{
    if (!doc.is_array())
        throw ValidationError(where + ": expected an array of integers");
    std::vector<Color> pegs;
    for (const json &peg : doc)
        pegs.push_back(static_cast<Color>(detail::count_field(peg, where)));
    try
    {
        return Code(std::move(pegs), colors);
    }
    catch (const ValidationError &e)
    {
        throw ValidationError(where + ": " + e.what());
    }
}

inline json to_json(const Rating &r)
{
    if (r.variant() == Variant::full)
        return json{{"black", r.black()}, {"white", r.white()}};
    return r.score();
}

inline Rating rating_from_json(const json &doc, Variant variant, const std::string &where = "rating")
{
    if (variant == Variant::full)
    {
        if (!doc.is_object())
            throw ValidationError(where + ": expected {\"black\": .., \"white\": ..}");
        return Rating::full(detail::count_field(detail::field(doc, "black", where), where + ".black"),
                            detail::count_field(detail::field(doc, "white", where), where + ".white"));
    }
    const std::size_t score = detail::count_field(doc, where);
    return variant == Variant::black ? Rating::black_only(score) : Rating::white_only(score);
}

inline json to_json(const Shape &shape)
{
    return json{{"n", shape.length}, {"c", shape.colors}, {"variant", std::string(to_string(shape.variant))}};
}

inline Shape shape_from_json(const json &doc, const std::string &where = "shape")
{
    Shape shape;
    shape.length = detail::count_field(detail::field(doc, "n", where), where + ".n");
    shape.colors = detail::count_field(detail::field(doc, "c", where), where + ".c");
    const json &variant = detail::field(doc, "variant", where);
    if (!variant.is_string())
        throw ValidationError(where + ".variant: expected a string");
    shape.variant = parse_variant(variant.get<std::string>());
    shape.validate();
    return shape;
}

inline json to_json(const Query &q)
{
    return json{{"guess", to_json(q.guess)}, {"rating", to_json(q.rating)}};
}

inline json to_json(const Instance &inst)
{
    json doc = to_json(inst.shape);
    doc["queries"] = json::array();
    for (const Query &q : inst.queries)
        doc["queries"].push_back(to_json(q));
    return doc;
}

/// Parses and validates an instance document.
inline Instance instance_from_json(const json &doc)
{
    Instance inst;
    inst.shape = shape_from_json(doc, "instance");
    const json &queries = detail::field(doc, "queries", "instance");
    if (!queries.is_array())
        throw ValidationError("instance.queries: expected an array");
    for (std::size_t i = 0; i < queries.size(); ++i)
    {
        const std::string where = "instance.queries[" + std::to_string(i) + "]";
        inst.queries.push_back(
            {code_from_json(detail::field(queries[i], "guess", where), inst.colors(), where + ".guess"),
             rating_from_json(detail::field(queries[i], "rating", where), inst.variant(), where + ".rating")});
    }
    inst.validate();
    return inst;
}

inline Instance parse_instance(std::string_view text)
{
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded())
        throw ValidationError("instance document is not valid JSON");
    return instance_from_json(doc);
}

/// Layout sidecar: the source formula in DIMACS numbering plus the slot of
/// every variable, so a reduction can be re-derived and checked.
inline json to_json(const ReductionLayout &L)
{
    json doc;
    doc["target"] = std::string(to_string(L.target));
    doc["slots"] = L.target == ReductionTarget::white ? "colors" : "positions";
    doc["originalVariables"] = L.original_variables;
    doc["totalVariables"] = L.total_variables;
    doc["clauses"] = json::array();
    for (const Clause &cl : L.formula.clauses)
    {
        json lits = json::array();
        for (const Literal &l : cl)
            lits.push_back(l.to_dimacs());
        doc["clauses"].push_back(lits);
    }
    doc["variables"] = json::array();
    for (std::size_t j = 0; j < L.total_variables; ++j)
        doc["variables"].push_back(
            json{{"name", L.variable_name(j)}, {"positive", L.positive[j]}, {"negative", L.negative[j]}});
    doc["auxiliaries"] = json::array();
    for (std::size_t i = 0; i < L.auxiliaries.size(); ++i)
    {
        const auto &aux = L.auxiliaries[i];
        doc["auxiliaries"].push_back(json{{"clause", i + 1}, {"a", aux.a}, {"b", aux.b}, {"c", aux.c}});
    }
    if (L.mask)
        doc["mask"] = *L.mask;
    return doc;
}

/// Rebuilds a layout from its sidecar. The stored slots must match the
/// layout the reduction produces for the stored formula.
inline ReductionLayout layout_from_json(const json &doc)
{
    const json &target = detail::field(doc, "target", "layout");
    if (!target.is_string())
        throw ValidationError("layout.target: expected a string");
    CnfFormula f;
    f.variables = detail::count_field(detail::field(doc, "originalVariables", "layout"), "layout.originalVariables");
    const json &clauses = detail::field(doc, "clauses", "layout");
    if (!clauses.is_array())
        throw ValidationError("layout.clauses: expected an array");
    for (const json &cl : clauses)
    {
        if (!cl.is_array())
            throw ValidationError("layout.clauses: expected arrays of literals");
        Clause clause;
        for (const json &lit : cl)
        {
            if (!lit.is_number_integer() || lit.get<long long>() == 0)
                throw ValidationError("layout.clauses: literals are non-zero integers");
            const long long v = lit.get<long long>();
            clause.push_back({static_cast<std::size_t>((v < 0 ? -v : v) - 1), v > 0});
        }
        f.clauses.push_back(std::move(clause));
    }
    ReductionLayout L = reduce(f, parse_target(target.get<std::string>())).second;
    if (to_json(L) != doc)
        throw ValidationError("layout document does not match the layout derived from its formula");
    return L;
}

} // namespace mastermind
