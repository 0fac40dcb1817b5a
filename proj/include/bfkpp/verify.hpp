#ifndef BFKPP_VERIFY_HPP
#define BFKPP_VERIFY_HPP

#include <string>
#include <vector>

// Self-check suite over the library's analytic identities and numerical
// invariants, exposed to the CLI as `verify`. The fast level covers the
// closed-form identities and short integrations; the full level adds the
// sweep-based convergence-order fits.

namespace bfkpp::verify {

enum class Level { Fast, Full };

struct CheckResult {
    std::string module;
    std::string name;
    bool passed = false;
    double observed = 0.0;
    double bound = 0.0;
    std::string detail;
};

std::vector<CheckResult> run_checks(Level level);

}  // namespace bfkpp::verify

#endif
