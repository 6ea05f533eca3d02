#ifndef HBK_VERIFY_HPP
#define HBK_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace hbk {

// The acceptance suite.  Criteria, sample counts, and parameter ranges are
// pinned here; only the seed is configurable.

struct VerifyOptions {
    std::uint64_t seed = 7;
    int max_degree = 4096; // generous guard; the suite multiplies long products
};

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
};

CriterionResult run_criterion(int id, const VerifyOptions& opts);

// ids empty = all ten.
std::vector<CriterionResult> run_acceptance(const VerifyOptions& opts,
                                            const std::vector<int>& ids = {});

} // namespace hbk

#endif
