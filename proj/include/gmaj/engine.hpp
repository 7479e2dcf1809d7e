#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "gmaj/classify.hpp"
#include "gmaj/instance.hpp"
#include "gmaj/majorization.hpp"
#include "gmaj/tables.hpp"

namespace gmaj {

enum class condition_side { i, ii };

/// One row of the feasibility test. Side i rows are indexed by the rank y of
/// a selected c value; side ii rows by the rank x of a selected d value.
/// A row is triggered when t_y <= m_y (resp. t'_x <= m'_x); untriggered rows
/// are vacuously satisfied. lhs/rhs are evaluated either way.
struct condition_report {
    condition_side side = condition_side::i;
    long long index = 0;
    bool triggered = false;
    ext_int lhs, rhs;
    bool satisfied = true;
};

struct sum_check_result {
    long long lhs = 0; // sum of c plus sum of b
    long long rhs = 0; // sum of d plus sum of a
    bool equal = false;
};

/// Record of the prefix flattening that turns a weak witness into an exact
/// one. f = 1 exactly when omega = 0 and nothing changes. The prefix
/// replaces the first f-1 entries and its values differ by at most 1.
struct homogenization_record {
    long long omega = 0;
    long long f = 1;
    long long prefix_total = 0;
    partition prefix;
};

enum class run_mode { weak, exact };

struct certificate {
    run_mode mode = run_mode::weak;
    bool exists = false;
    sd_result sd;
    derived_tables tables;
    std::vector<condition_report> reports;
    std::optional<sum_check_result> sums; // exact mode only
    std::optional<partition> witness;
    // Verification of the witness against (d, a) first, then (c, b).
    std::optional<std::pair<verdict, verdict>> verification;
};

/// Evaluate both sides of the feasibility conditions. Side i rows fully,
/// then side ii; every row is materialized whether triggered or not.
std::vector<condition_report> evaluate_conditions(const instance& inst,
                                                  const derived_tables& tb,
                                                  const sd_result& sd);

/// Build the canonical weak witness: the selected c values, the selected d
/// values, and a pad of t0 copies of one more than the largest input value,
/// arranged nonincreasingly. Callers must have checked that every triggered
/// condition row is satisfied. Internal invariants of the construction are
/// asserted and a failure throws internal_invariant_violated.
partition build_weak_witness(const instance& inst, const sd_result& sd,
                             const derived_tables& tb);

/// Flatten the smallest possible prefix of gbar so that the total drops to
/// sum(d) + sum(a) while the tail stays untouched. Requires gbar weakly
/// majorized by (d, a); throws negative_omega when the sum is already too
/// small and infeasible_homogenization when no prefix length works.
std::pair<partition, homogenization_record>
homogenize(const partition& gbar, const partition& d, const partition& a);

/// Decide whether some partition is weakly majorized by both (d, a) and
/// (c, b); on success the certificate carries a verified witness.
certificate decide_weak(const instance& inst);

/// Decide the exact variant: the total-sum balance must hold on top of the
/// condition rows, and the witness is homogenized before verification.
certificate decide_exact(const instance& inst);

} // namespace gmaj
