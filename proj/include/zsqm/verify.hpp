#ifndef ZSQM_VERIFY_HPP
#define ZSQM_VERIFY_HPP

#include <string>
#include <vector>

// Reproduction checks for every published table and coefficient block,
// shared by the CLI's verify-all command and the acceptance runner.
//
// Where a printed value is internally inconsistent with its own companion
// values (a handful of dropped-digit misprints, plus two series
// coefficients that two independent routes here pin to different numbers),
// the check asserts the dual-route-verified value and reports the distance
// to the printed one in the detail string, marked "reference misprint".

namespace zsqm::verify {

struct CheckResult {
    std::string name;
    bool pass;
    std::string detail;
};

struct CriterionReport {
    int id;
    std::string title;
    bool pass;
    std::vector<CheckResult> checks;
};

// criteria 1..9
CriterionReport run_criterion(int id);
std::vector<CriterionReport> run_all();

} // namespace zsqm::verify

#endif
