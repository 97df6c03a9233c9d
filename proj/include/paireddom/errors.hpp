#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace paireddom {

class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// Malformed edge-list input. line() is 1-based.
class ParseError : public Error
{
public:
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line)
    {
    }

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

class SelfLoopError : public ParseError
{
public:
    using ParseError::ParseError;
};

// Argument outside the operation's domain (bad vertex id, wrong graph shape, ...).
class DomainError : public Error
{
public:
    using Error::Error;
};

class DisconnectedError : public DomainError
{
public:
    using DomainError::DomainError;
};

class NoPathError : public Error
{
public:
    using Error::Error;
};

class NotAtFreeError : public DomainError
{
public:
    using DomainError::DomainError;
};

// A structural guarantee did not hold (e.g. no backbone path exists).
class StructureError : public Error
{
public:
    using Error::Error;
};

class CapExceededError : public DomainError
{
public:
    using DomainError::DomainError;
};

class NotNormalizedError : public DomainError
{
public:
    using DomainError::DomainError;
};

class GenerationError : public Error
{
public:
    using Error::Error;
};

// Internal consistency failure: a result did not re-verify.
class DiscrepancyError : public Error
{
public:
    using Error::Error;
};

class AlgorithmFailure : public DiscrepancyError
{
public:
    using DiscrepancyError::DiscrepancyError;
};

} // namespace paireddom
