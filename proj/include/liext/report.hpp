#pragma once

#include <optional>
#include <string>
#include <vector>

#include "liext/error.hpp"
#include "liext/matrix.hpp"

namespace liext {

/// Concrete evidence for a failed axiom: the basis tuple it fails on and the
/// nonzero defect vector (left side minus right side at that tuple).
struct AxiomWitness {
    std::vector<std::size_t> tuple;  // 0-based basis indices
    Vec defect;
};

/// One named axiom with its verdict and, on failure, the first witness found.
struct AxiomCheck {
    std::string label;
    bool passed = true;
    std::optional<AxiomWitness> witness;
};

/// Ordered collection of axiom verdicts produced by a checker. Labels appear
/// in the order the checker evaluates them, so reports are deterministic.
class AxiomReport {
public:
    /// Registers a label as checked (initially passing).
    void begin(const std::string& label);

    /// Marks a previously begun label as failed; only the first witness per
    /// label is retained.
    void fail(const std::string& label, std::vector<std::size_t> tuple, Vec defect);

    bool passed() const;
    bool passed(const std::string& label) const;
    bool has(const std::string& label) const;

    const std::vector<AxiomCheck>& checks() const { return checks_; }

    /// Labels of all failing axioms, in evaluation order.
    std::vector<std::string> failing_labels() const;

    /// Human-readable verdict lines, one per axiom, 1-based witness indices.
    std::string str() const;

private:
    AxiomCheck& find(const std::string& label);
    const AxiomCheck& find(const std::string& label) const;

    std::vector<AxiomCheck> checks_;
};

/// Thrown by constructors that refuse invalid input; carries the full report
/// so callers can inspect which axiom failed and on which witness.
class AxiomError : public Error {
public:
    AxiomError(const std::string& context, AxiomReport report);

    const AxiomReport& report() const { return report_; }

private:
    AxiomReport report_;
};

}  // namespace liext
