#pragma once

#include <string>
#include <vector>

#include "ginv/rational.hpp"

namespace ginv {

// One checked equation. `residual` is the max-entry |LHS - RHS| in double;
// `exact` marks that the check ran in exact arithmetic, where `holds` means
// the residual is identically zero (not merely small). A skipped entry (for
// example the double-commutant clause in float mode) never counts toward the
// overall verdict.
struct ConditionCheck {
    std::string name;
    double residual = 0.0;
    bool holds = false;
    bool exact = false;
    bool skipped = false;
};

struct HypothesisReport {
    std::vector<ConditionCheck> conditions;
    bool overall = false;

    void add(ConditionCheck c) {
        conditions.push_back(std::move(c));
        recompute();
    }
    // Records the residual of LHS = RHS for a pair of same-backend matrices.
    template <typename M>
    void add(std::string name, const M& lhs, const M& rhs, const Tolerance& tol) {
        ConditionCheck c;
        c.name = std::move(name);
        c.residual = max_abs_diff(lhs, rhs);
        c.exact = ScalarOps<typename M::value_type>::exact;
        c.holds = c.exact ? lhs == rhs : c.residual <= tol.eq_tol;
        add(std::move(c));
    }
    void recompute() {
        overall = true;
        for (const auto& c : conditions) {
            if (!c.skipped && !c.holds) overall = false;
        }
    }
};

}  // namespace ginv
