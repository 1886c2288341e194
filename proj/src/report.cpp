#include "liext/report.hpp"

#include "liext/error.hpp"

namespace liext {

void AxiomReport::begin(const std::string& label) {
    for (const auto& c : checks_) {
        if (c.label == label) throw Error("axiom label begun twice: " + label);
    }
    checks_.push_back(AxiomCheck{label, true, std::nullopt});
}

void AxiomReport::fail(const std::string& label, std::vector<std::size_t> tuple, Vec defect) {
    auto& check = find(label);
    if (check.passed) {
        check.passed = false;
        check.witness = AxiomWitness{std::move(tuple), std::move(defect)};
    }
}

bool AxiomReport::passed() const {
    for (const auto& c : checks_) {
        if (!c.passed) return false;
    }
    return true;
}

bool AxiomReport::passed(const std::string& label) const { return find(label).passed; }

bool AxiomReport::has(const std::string& label) const {
    for (const auto& c : checks_) {
        if (c.label == label) return true;
    }
    return false;
}

std::vector<std::string> AxiomReport::failing_labels() const {
    std::vector<std::string> out;
    for (const auto& c : checks_) {
        if (!c.passed) out.push_back(c.label);
    }
    return out;
}

std::string AxiomReport::str() const {
    std::string out;
    for (const auto& c : checks_) {
        out += c.label;
        out += c.passed ? " pass" : " fail";
        if (!c.passed && c.witness) {
            out += " at (";
            for (std::size_t i = 0; i < c.witness->tuple.size(); ++i) {
                if (i > 0) out += ",";
                out += std::to_string(c.witness->tuple[i] + 1);
            }
            out += ")";
        }
        out += "\n";
    }
    return out;
}

AxiomCheck& AxiomReport::find(const std::string& label) {
    for (auto& c : checks_) {
        if (c.label == label) return c;
    }
    throw Error("unknown axiom label: " + label);
}

const AxiomCheck& AxiomReport::find(const std::string& label) const {
    for (const auto& c : checks_) {
        if (c.label == label) return c;
    }
    throw Error("unknown axiom label: " + label);
}

namespace {

std::string axiom_error_message(const std::string& context, const AxiomReport& report) {
    std::string msg = context + ": failed";
    for (const auto& label : report.failing_labels()) msg += " " + label;
    return msg;
}

}  // namespace

AxiomError::AxiomError(const std::string& context, AxiomReport report)
    : Error(axiom_error_message(context, report)), report_(std::move(report)) {}

}  // namespace liext
