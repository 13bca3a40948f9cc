#pragma once

#include <string>
#include <vector>

namespace pin2 {

struct VerifyCheck {
    std::string name;
    bool pass;
    double seconds;
    std::string detail;
};

// The cross-validation suite. The quick tier covers the semigroup and
// graded-root pipelines, the closed-form identities and small chain
// computations; the full tier adds the complete chain-engine sweep and the
// deeper property checks.
std::vector<VerifyCheck> run_verification(bool full);

bool verification_passed(const std::vector<VerifyCheck>& checks);

}  // namespace pin2
