#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace girth5 {

/// Bad arguments from a caller: out-of-range vertex ids, invalid parameter
/// domains, degenerate ranges.
class UsageError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// A documented precondition of an edit or search was violated
/// (adding an illegal edge, seeding a search with a short cycle, ...).
class ContractViolation : public std::logic_error {
   public:
    using std::logic_error::logic_error;
};

/// An operation whose result domain is empty, e.g. asking for the best
/// legal edge of an edge-maximal graph.
class EmptyDomainError : public std::domain_error {
   public:
    using std::domain_error::domain_error;
};

class CapacityError : public std::length_error {
   public:
    using std::length_error::length_error;
};

/// Malformed graph6 input. `offset` is the byte position of the first bad byte.
class ParseError : public std::runtime_error {
   public:
    ParseError(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " (at byte " + std::to_string(offset) + ")"),
          offset_(offset) {}
    std::size_t offset() const noexcept { return offset_; }

   private:
    std::size_t offset_;
};

/// Input data that parses but fails a semantic check, e.g. a seed graph with
/// a triangle. The message names the offending file and line.
class ValidationError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

class ConfigError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

}  // namespace girth5
