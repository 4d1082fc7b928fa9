#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace lll {

// Input outside an operation's domain (wrong space, bad index, mismatched sizes).
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Matching validation failures, one kind per rule.
class ValidationError : public DomainError {
public:
    enum class Kind {
        size_mismatch,     // |S| != |T|
        bad_domain,        // f not a total map on S (missing/duplicate domain point)
        not_injective,     // two domain points share an image
        image_mismatch,    // image of f != T
    };

    ValidationError(Kind kind, const std::string& what)
        : DomainError(what), kind_(kind) {}

    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

// Conditioning on an event of probability zero. Deliberately not a DomainError.
class NullConditionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A configured enumeration or resource cap would be exceeded.
class SizeLimitError : public std::runtime_error {
public:
    SizeLimitError(std::uint64_t required, std::uint64_t limit, const std::string& what)
        : std::runtime_error(what), required_(required), limit_(limit) {}

    std::uint64_t required() const { return required_; }
    std::uint64_t limit() const { return limit_; }

private:
    std::uint64_t required_;
    std::uint64_t limit_;
};

// Text input rejected, with 1-based position information.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& what)
        : std::runtime_error(what), line_(line), column_(column) {}

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

} // namespace lll
