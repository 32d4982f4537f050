#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace mastermind {

/// Base class of every error raised by the library.
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Codes of different length or color bound were combined.
class DimensionError : public Error
{
public:
    using Error::Error;
};

/// Malformed input: instance documents, codes, ratings, shapes.
class ValidationError : public Error
{
public:
    using Error::Error;
};

/// The search space is larger than the caller allowed.
class BudgetExceeded : public Error
{
public:
    BudgetExceeded(std::uint64_t required, std::uint64_t budget, const std::string &what)
      : Error(what + ": search space of " + std::to_string(required) +
              " candidates needs a budget above " + std::to_string(required) +
              " (current budget " + std::to_string(budget) + ")"),
        _required(required), _budget(budget)
    {
    }

    std::uint64_t required() const noexcept { return _required; }
    std::uint64_t budget() const noexcept { return _budget; }

private:
    std::uint64_t _required;
    std::uint64_t _budget;
};

/// DIMACS text that does not parse.
class ParseError : public Error
{
public:
    ParseError(std::size_t line, const std::string &what)
      : Error("line " + std::to_string(line) + ": " + what), _line(line)
    {
    }

    std::size_t line() const noexcept { return _line; }

private:
    std::size_t _line;
};

/// A formula outside the class the reductions accept (exactly three
/// distinct variables per clause, at least one clause, at least three
/// variables).
class RestrictionError : public Error
{
public:
    using Error::Error;
};

/// Operation not defined for the instance's rating variant.
class UnsupportedVariant : public Error
{
public:
    using Error::Error;
};

/// Assignment that does not satisfy the formula.
class NotAModel : public Error
{
public:
    using Error::Error;
};

/// Code that is not a solution of the instance it was checked against.
class InconsistentCode : public Error
{
public:
    using Error::Error;
};

/// No code is consistent with the transcript.
class Contradiction : public Error
{
public:
    using Error::Error;
};

/// An operation that needs a nonempty candidate list got an empty one.
class EmptyState : public Error
{
public:
    using Error::Error;
};

} // namespace mastermind
