// cnf.hpp -- 3-CNF formulas and DIMACS input

#pragma once

#include <cstddef>
#include <cstdlib>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"

namespace mastermind {

/// A variable (0-based) with a polarity.
struct Literal
{
    std::size_t variable = 0;
    bool positive = true;

    friend bool operator==(const Literal &, const Literal &) = default;

    /// Signed 1-based DIMACS form.
    long long to_dimacs() const
    {
        const long long v = static_cast<long long>(variable) + 1;
        return positive ? v : -v;
    }

    bool satisfied_by(const std::vector<bool> &values) const
    {
        return values[variable] == positive;
    }
};

using Clause = std::vector<Literal>;

/// Truth values of the original variables.
using Assignment = std::vector<bool>;

/// A conjunction of clauses with exactly three literals on distinct variables.
struct CnfFormula
{
    std::size_t variables = 0;
    std::vector<Clause> clauses;

    friend bool operator==(const CnfFormula &, const CnfFormula &) = default;

    /// Throws RestrictionError if the formula is outside the accepted class.
    void validate() const
    {
        if (variables < 3)
            throw RestrictionError("formula needs at least 3 variables, has " +
                                   std::to_string(variables));
        if (clauses.empty())
            throw RestrictionError("formula has no clauses");
        for (std::size_t i = 0; i < clauses.size(); ++i)
        {
            const Clause &cl = clauses[i];
            const std::string where = "clause " + std::to_string(i + 1);
            if (cl.size() != 3)
                throw RestrictionError(where + " has " + std::to_string(cl.size()) +
                                       " literals, expected exactly 3");
            for (const Literal &l : cl)
                if (l.variable >= variables)
                    throw RestrictionError(where + " uses variable " + std::to_string(l.variable + 1) +
                                           " beyond declared " + std::to_string(variables));
            if (cl[0].variable == cl[1].variable || cl[0].variable == cl[2].variable ||
                cl[1].variable == cl[2].variable)
                throw RestrictionError(where + " repeats a variable");
        }
    }

    bool satisfied_by(const Assignment &values) const
    {
        for (const Clause &cl : clauses)
        {
            bool any = false;
            for (const Literal &l : cl)
                any = any || l.satisfied_by(values);
            if (!any)
                return false;
        }
        return true;
    }

    std::string to_dimacs() const
    {
        std::ostringstream out;
        out << "p cnf " << variables << ' ' << clauses.size() << '\n';
        for (const Clause &cl : clauses)
        {
            for (const Literal &l : cl)
                out << l.to_dimacs() << ' ';
            out << "0\n";
        }
        return out.str();
    }
};

/// Parses DIMACS CNF text and validates it for the reductions.
///
/// Comment lines start with 'c'. A single "p cnf V M" header must precede
/// the clauses; clauses are whitespace-separated signed integers ended by 0
/// and may span lines. A trailing "%" line (SATLIB style) ends the input.
/// Variables are 1-based in the text and 0-based in the result.
inline CnfFormula parse_dimacs(std::string_view text)
{
    CnfFormula f;
    bool have_header = false;
    std::size_t declared_clauses = 0;
    std::size_t line_no = 0;
    std::size_t last_clause_line = 0;
    Clause current;

    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line))
    {
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        const auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos)
            continue;
        if (line[first] == 'c')
            continue;
        if (line[first] == '%')
            break;
        if (line[first] == 'p')
        {
            if (have_header)
                throw ParseError(line_no, "duplicate problem line");
            std::istringstream ss(line.substr(first));
            std::string p, kind, extra;
            long long v = -1, m = -1;
            if (!(ss >> p >> kind >> v >> m) || p != "p" || kind != "cnf" || (ss >> extra))
                throw ParseError(line_no, "malformed problem line, expected 'p cnf <vars> <clauses>'");
            if (v < 0 || m < 0)
                throw ParseError(line_no, "negative count in problem line");
            f.variables = static_cast<std::size_t>(v);
            declared_clauses = static_cast<std::size_t>(m);
            have_header = true;
            continue;
        }
        if (!have_header)
            throw ParseError(line_no, "clause before problem line");

        std::istringstream ss(line);
        std::string token;
        while (ss >> token)
        {
            char *end = nullptr;
            const long long value = std::strtoll(token.c_str(), &end, 10);
            if (end == token.c_str() || *end != '\0')
                throw ParseError(line_no, "expected an integer literal, got '" + token + "'");
            if (value == 0)
            {
                if (current.empty())
                    throw ParseError(line_no, "empty clause");
                f.clauses.push_back(std::move(current));
                current.clear();
                continue;
            }
            const unsigned long long var = static_cast<unsigned long long>(std::llabs(value));
            if (var > f.variables)
                throw ParseError(line_no, "literal " + token + " exceeds declared variable count " +
                                              std::to_string(f.variables));
            current.push_back({static_cast<std::size_t>(var - 1), value > 0});
            last_clause_line = line_no;
        }
    }
    if (!have_header)
        throw ParseError(line_no == 0 ? 1 : line_no, "missing problem line");
    if (!current.empty())
        throw ParseError(last_clause_line, "last clause is not terminated by 0");
    if (f.clauses.size() != declared_clauses)
        throw ParseError(line_no, "problem line declares " + std::to_string(declared_clauses) +
                                      " clauses, found " + std::to_string(f.clauses.size()));
    f.validate();
    return f;
}

} // namespace mastermind
