#pragma once

#include <string>
#include <vector>

#include "bchlab/formulas.hpp"

namespace bchlab {
namespace harness {

enum class CaseStatus { Pass, Fail, SkippedBudget, SkippedPrecondition };

const char* to_string(CaseStatus s);

struct VerificationCase {
    std::string claimId;   ///< lemma/theorem/table/example id
    std::string params;    ///< "q=3,m=4,..." (stable key, also the sort key)
    std::string expected;  ///< closed-form / claimed value
    std::string actual;    ///< oracle value
    CaseStatus status = CaseStatus::Fail;
};

struct VerificationReport {
    std::string suite;
    std::vector<VerificationCase> cases;
    std::uint64_t passed = 0, failed = 0, skippedBudget = 0, skippedPrecondition = 0;
    double wallSeconds = 0.0;
    std::string config;

    bool all_passed() const { return failed == 0; }
};

struct SuiteConfig {
    std::vector<std::uint64_t> qSet{3, 5, 7};
    unsigned mMax = 0;  ///< 0 = as far as the table budget allows
    Budget budget;
    bool useCache = true;
};

const std::vector<std::string>& suite_names();

/// Runs one suite deterministically; cases are evaluated concurrently and
/// reported in (claimId, params) order. Unknown ids throw UnknownSuite.
VerificationReport run_suite(const std::string& suiteId, const SuiteConfig& config = {});

enum class ReportFormat { Json, Csv, Text };

std::string emit_report(const VerificationReport& report, ReportFormat format);

/// Compact "{w:count,...}" rendering used in expected/actual fields.
std::string enumerator_to_string(const WeightEnumerator& W);

}  // namespace harness
}  // namespace bchlab
