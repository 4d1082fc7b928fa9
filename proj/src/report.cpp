#include "lll/report.hpp"

namespace lll {

ReportBuilder::ReportBuilder(std::string command, bool with_float)
    : command_(std::move(command)),
      with_float_(with_float),
      inputs_(Json::object()),
      verdicts_(Json::object()),
      stats_(Json::object()) {}

ReportBuilder::Json ReportBuilder::rational_json(const Rational& value) const {
    if (!with_float_) return to_fraction_string(value);
    Json j = Json::object();
    j["exact"] = to_fraction_string(value);
    j["approx"] = to_double_approx(value);
    return j;
}

void ReportBuilder::input(const std::string& name, std::uint64_t value) { inputs_[name] = value; }

void ReportBuilder::input(const std::string& name, const std::string& value) {
    inputs_[name] = value;
}

void ReportBuilder::verdict(const std::string& name, bool value) { verdicts_[name] = value; }

void ReportBuilder::verdict(const std::string& name, TriState value) {
    verdicts_[name] = std::string(to_string(value));
}

void ReportBuilder::verdict(const std::string& name, std::uint64_t value) {
    verdicts_[name] = value;
}

void ReportBuilder::verdict(const std::string& name, const Rational& value) {
    verdicts_[name] = rational_json(value);
}

void ReportBuilder::verdict(const std::string& name, const Json& value) {
    verdicts_[name] = value;
}

void ReportBuilder::section(const std::string& name, Json value) {
    sections_.emplace_back(name, std::move(value));
}

void ReportBuilder::certificate(const std::vector<std::size_t>& witness) {
    section("certificate", Json(witness));
}

void ReportBuilder::stat(const std::string& name, std::uint64_t value) { stats_[name] = value; }

std::string ReportBuilder::render() const {
    Json root = Json::object();
    root["command"] = command_;
    root["inputs"] = inputs_;
    root["verdicts"] = verdicts_;
    for (const auto& [name, value] : sections_) root[name] = value;
    root["stats"] = stats_;
    return root.dump(2) + "\n";
}

} // namespace lll
