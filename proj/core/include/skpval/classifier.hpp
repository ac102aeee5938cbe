#pragma once

#include <optional>
#include <string>
#include <vector>

#include "skpval/skp.hpp"

namespace skpval {

struct invariant_report {
    enum class status { ok, ambiguous, unclassified };

    std::size_t rk = 0;
    std::size_t r_rk = 0;
    std::size_t tr_deg = 0;
    std::vector<std::size_t> rk_increments;   // per row
    std::vector<std::size_t> r_rk_increments; // per row
    std::vector<gvalue> generators;
    status st = status::ok;
    std::optional<std::string> table1_row;  // "I".."X"
    std::optional<std::string> table1_case; // e.g. "II_1"
    std::vector<std::string> matches;       // every matching case
};

const char *status_name(invariant_report::status s);

/* Archimedean level of each coordinate of Q^r. The level of a vector is
 * the largest level among its nonzero coordinates. An empty map means the
 * lexicographic convention: coordinate c of r has level r - c. Several
 * coordinates may share a level, which models groups such as Z + Z*sqrt(2)
 * whose order inside a level is not needed by the predicates below. */
using level_map = std::vector<unsigned>;

unsigned level_of(const gvalue &v, const level_map &levels = {});

/* Values of a minimal pseudo-SKP in three rows (variables X0, X1, X2).
 * infinite[i] declares alpha'_i = infinity; the row then holds only the
 * materialized prefix. Conclusions about tr.deg are conditional on that
 * declaration. */
struct pseudo_skp_arithmetic {
    std::size_t dim = 1;
    std::vector<std::vector<gvalue>> rows;
    std::vector<bool> infinite;
    level_map levels;

    static pseudo_skp_arithmetic of(const skp_table &s, const std::vector<bool> &infinite);
};

/* Membership in the k-th nonzero isolated subgroup of the group generated
 * by the given values (k >= 1; beyond the rank the whole group). */
bool in_isolated(const gvalue &v, std::size_t k, const std::vector<gvalue> &group,
                 const level_map &levels = {});

invariant_report inductive_invariants(const skp_table &s, const std::vector<bool> &declared_infinite = {});
invariant_report classify_table1(const pseudo_skp_arithmetic &a);

struct abhyankar_result {
    bool pass = false;
    bool equality = false; // r_rk + tr_deg == num_vars
};

abhyankar_result abhyankar_check(const invariant_report &rep, std::size_t num_vars);

} // namespace skpval
