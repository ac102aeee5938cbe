#pragma once

#include <cstdint>
#include <vector>

#include "skpval/skp.hpp"

namespace skpval {

struct adic_monomial {
    scalar coeff;
    adic_exp e;
};

/* Sum of adic-form monomials, sorted by increasing Vdeg (then exponents). */
struct adic_expansion {
    std::vector<adic_monomial> monomials;

    bool empty() const { return monomials.empty(); }
};

constexpr std::uint64_t default_iteration_cap = 1000000;

adic_expansion adic_expand(const poly &f, const skp_table &s, const alpha_vec &alpha,
                           std::uint64_t cap = default_iteration_cap);
/* Re-expands an expansion given in terms of key polynomials. */
adic_expansion adic_expand(const adic_expansion &x, const skp_table &s, const alpha_vec &alpha,
                           std::uint64_t cap = default_iteration_cap);

bool is_adic_form(const adic_exp &e, const skp_table &s, const alpha_vec &alpha);
poly evaluate(const adic_exp &e, const skp_table &s);
poly evaluate(const adic_expansion &x, const skp_table &s);

struct vdeg_vp {
    std::vector<unsigned> vdeg; // per row
    std::vector<unsigned> vp;   // row-final exponents, top row first
};

vdeg_vp vdeg_of(const adic_exp &e, const skp_table &s, const alpha_vec &alpha);
/* Vdeg-lex comparison of two monomials (X0 degree most significant). */
bool vdeg_less(const adic_exp &a, const adic_exp &b, const skp_table &s);
adic_exp exponent_from_vdeg(const std::vector<unsigned> &vdeg, const skp_table &s,
                            const alpha_vec &alpha);

struct euclid_term {
    poly coeff;                // polynomial in the variables below the row
    std::vector<std::uint32_t> J; // exponents of U_{row,1..j}
};

/* f = sum f_J U_row^J with 0 <= J_{j'} < n_{row,j'} for j' < j. */
std::vector<euclid_term> euclidean_expand(const poly &f, const skp_table &s, std::size_t row,
                                          unsigned j);
/* The same data obtained by grouping an adic expansion by its row exponents. */
std::vector<euclid_term> group_by_row(const adic_expansion &x, const skp_table &s, std::size_t row,
                                      unsigned j);

} // namespace skpval
