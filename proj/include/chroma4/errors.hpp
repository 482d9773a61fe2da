#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace chroma4 {

/// Bad arguments: out-of-range ids, empty sets where one is required, size caps.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed DIMACS or coloring text.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string & what, int line) :
        std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line)
    {
    }
    [[nodiscard]] int line() const { return line_; }

private:
    int line_;
};

/// The input contains an induced P6 or C5, either found up front or exposed
/// when a structural property that holds for (P6,C5)-free graphs failed.
class InputNotFreeError : public std::runtime_error {
public:
    InputNotFreeError(const std::string & what, std::vector<int> witness = {}) :
        std::runtime_error(what), witness_(std::move(witness))
    {
    }
    [[nodiscard]] const std::vector<int> & witness() const { return witness_; }

private:
    std::vector<int> witness_;
};

/// An internal invariant failed. `claim` names the structural fact that broke
/// (e.g. "x2", "z7", "glue").
class ContractError : public std::logic_error {
public:
    ContractError(std::string claim, const std::string & what) :
        std::logic_error("[" + claim + "] " + what), claim_(std::move(claim))
    {
    }
    [[nodiscard]] const std::string & claim() const { return claim_; }

private:
    std::string claim_;
};

/// A partial coloring handed to nice_complete is not nice.
class NiceColoringViolation : public ContractError {
public:
    NiceColoringViolation(const std::string & condition, const std::string & what) : ContractError(condition, what) {}
};

class GenerationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace chroma4
