#pragma once

#include "encone/shoji.hpp"

#include <string>
#include <vector>

namespace encone {

// Each check sweeps one spec invariant exhaustively at the given size and
// reports every violation it finds. They are used by the CLI `verify`
// command and by the acceptance suite.

CheckReport check_order_axioms(int n);
CheckReport check_cover_classification(int n);
CheckReport check_b_monotonicity(int n);
CheckReport check_componentwise_vs_order(int n);
CheckReport check_interval_type3(int n);
CheckReport check_doubling_monotone(int n);

CheckReport check_character_table(int n);
CheckReport check_fake_degree_pins(int n);

CheckReport check_solver_invariants(int n);
CheckReport check_extension_independence(int n);
CheckReport check_theta_polynomials(int n, const std::vector<int>& qs);

CheckReport check_two_way_classification(int n, int q);
CheckReport check_flag_and_quotient(int n, int q);
CheckReport check_counts_vs_theta(int n, int q, bool extended = false);
CheckReport check_fiber_counts(int n, int q);
CheckReport check_hall_counts(int n, int q);
CheckReport check_closure_vs_order(int n, int q);
CheckReport check_pointcount_identity(int n, int q);

struct RunConfig {
    int n = 3;
    std::vector<int> qs = {2, 3};
    bool extended = false;  // n=4 enumeration and n=4 omega cross-check
};

struct VerifyOutcome {
    bool ok = true;
    std::vector<std::pair<std::string, CheckReport>> checks;
};

/// The full invariant suite within the configured budget.
VerifyOutcome run_verification(const RunConfig& config);

}  // namespace encone
