#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "skpval/expansion.hpp"

namespace skpval {

class skp_valuation {
  public:
    explicit skp_valuation(std::shared_ptr<const skp_table> s, alpha_vec alpha = {});

    const skp_table &skp() const { return *skp_; }
    std::shared_ptr<const skp_table> skp_ptr() const { return skp_; }
    const alpha_vec &alpha() const { return alpha_; }
    /* The same table cut at position j of the top row. */
    skp_valuation with_top_cutoff(unsigned j) const;

  private:
    std::shared_ptr<const skp_table> skp_;
    alpha_vec alpha_;
};

gvalue monomial_value(const adic_exp &e, const skp_table &s);
gvalue value_of(const adic_expansion &x, const skp_table &s);
gvalue value_of(const poly &f, const skp_valuation &v);
adic_expansion initial_form(const poly &f, const skp_valuation &v);
gvalue value_via_euclidean(const poly &f, const skp_valuation &v);
/* Highest power of U_{top,j} among initial monomials for the cutoff alpha^(j). */
unsigned delta_of(const poly &f, const skp_valuation &v, unsigned j);

struct graded_form {
    adic_exp J;
    poly p; // variables T_i, indexed by row
    std::vector<std::size_t> torus_rows;
    gvalue value;
};

graded_form graded_normal_form(const poly &f, const skp_valuation &v);

struct stabilization {
    std::vector<unsigned> cutoffs;
    std::vector<gvalue> values;
    std::optional<std::size_t> stable_from; // position in cutoffs
    bool non_decreasing = true;
};

stabilization stabilization_profile(const poly &f, const skp_valuation &v,
                                    const std::vector<unsigned> &cutoffs);

} // namespace skpval
