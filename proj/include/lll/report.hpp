#pragma once

#include "lll/lll.hpp"
#include "lll/rational.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace lll {

// Assembles the machine-readable report emitted by every command. The layout
// is fixed — command, inputs, verdicts, optional sections in insertion order,
// stats — and rationals are rendered as exact "num/den" strings, so reports
// for identical inputs and seeds are byte-identical (timing is opt-in for the
// same reason). with_float additionally attaches approximate decimal values,
// clearly marked.
class ReportBuilder {
public:
    using Json = nlohmann::ordered_json;

    explicit ReportBuilder(std::string command, bool with_float = false);

    void input(const std::string& name, std::uint64_t value);
    void input(const std::string& name, const std::string& value);

    void verdict(const std::string& name, bool value);
    void verdict(const std::string& name, TriState value);
    void verdict(const std::string& name, std::uint64_t value);
    void verdict(const std::string& name, const Rational& value);
    void verdict(const std::string& name, const Json& value);

    // Optional top-level sections (certificate, violation, partition, ...).
    void section(const std::string& name, Json value);
    void certificate(const std::vector<std::size_t>& witness);

    void stat(const std::string& name, std::uint64_t value);

    Json rational_json(const Rational& value) const;

    std::string render() const;

private:
    std::string command_;
    bool with_float_;
    Json inputs_;
    Json verdicts_;
    std::vector<std::pair<std::string, Json>> sections_;
    Json stats_;
};

} // namespace lll
