#pragma once

#include <string>
#include <vector>

namespace defext {

struct CriterionResult {
    std::string id;
    std::string title;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

struct AcceptanceReport {
    std::vector<CriterionResult> results;

    bool all_pass() const;
    /// One `PASS|FAIL  id  title  (time)` line per result, then a summary line.
    std::string text() const;
};

/// The twelve acceptance criteria, run concurrently when `parallel` is set.
AcceptanceReport run_acceptance(bool parallel = true);

/// Acceptance criteria followed by the mutation checks.
AcceptanceReport run_selftest(bool parallel = true);

/// A deformed differential with one sign flipped in v_m must break d d = 0;
/// pass means the unmutated complex composes to zero and the mutant does not.
CriterionResult mutation_check();

} // namespace defext
