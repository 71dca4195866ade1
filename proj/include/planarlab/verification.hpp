#pragma once

#include <string>
#include <vector>

namespace planarlab::verification {

struct CheckResult {
    std::string id;        // stable identifier, e.g. "A5.example1-x.radius"
    std::string claim;     // human-readable statement being checked
    std::string computed;  // what came out
    bool pass = false;
};

// Exact algebraic claims: commutation, centralizer dimensions, abelian-ness,
// the symplectic-lift identity, operator coranks and first integrals.
std::vector<CheckResult> run_exact_checks();

// Numerical limit-cycle claims: cycle locations, periods, multipliers,
// invariance defects, and the van der Pol scan against an independent
// fixed-step oracle.
std::vector<CheckResult> run_cycle_checks();

std::vector<CheckResult> run_all();

bool all_passed(const std::vector<CheckResult>& results);

// Independent fixed-step classical RK4 locator for the van der Pol cycle:
// iterates the positive-x-axis return map to its fixed point.  Shares no code
// path with the adaptive integrator or the cycle scanner.
double van_der_pol_oracle_radius();

}  // namespace planarlab::verification
