#pragma once

#include <map>
#include <memory>
#include <vector>

#include "skpval/poly.hpp"
#include "skpval/value_table.hpp"

namespace skpval {

/* Exponents over key polynomials, indexed by flat table position. */
using adic_exp = std::vector<std::uint32_t>;
using alpha_vec = std::vector<unsigned>;

/* a + b*k in the unroll counter k. */
struct affine {
    long a = 0;
    long b = 0;
    long at(unsigned k) const { return a + b * static_cast<long>(k); }
};

/* Tail of n = 1 steps between the materialized entry (row, start) and the
 * limit-labelled entry that follows it:
 *   U_{row,start+k+1} = U_{row,start+k}^{n} - theta * prod U^{m(k)}. */
struct limit_tail {
    int row = 0;
    int start = 1;
    std::map<table_index, affine> exponents;
    scalar theta{1L};
    unsigned depth = 1000;
};

struct unroll_result {
    poly value;
    bool stabilized = false;
    /* Summands theta * U^{m(k)} that survive the cutoff. */
    std::vector<std::map<table_index, unsigned>> summands;
};

unroll_result unroll_limit(const poly &start, std::uint64_t start_n, const limit_tail &tail,
                           const std::map<table_index, poly> &polys, unsigned depth,
                           const truncation &trunc);

class skp_table {
  public:
    /* U_{i,j}^{n_{i,j}} = U_{i,next} + sum theta * U^m */
    struct step_term {
        scalar theta;
        adic_exp m;
    };

    const value_table &values() const { return values_; }
    field fld() const { return field_; }
    const truncation &trunc() const { return trunc_; }
    bool is_pseudo() const { return pseudo_; }

    std::size_t size() const { return values_.size(); }
    std::size_t flat(table_index t) const { return values_.flat(t); }
    std::size_t row_of(std::size_t k) const { return values_.at(k).idx.i; }
    const poly &U(std::size_t k) const { return polys_[k]; }
    const poly &U(table_index t) const { return polys_[flat(t)]; }
    const scalar &theta(std::size_t k) const { return thetas_[k]; }
    unsigned degree(std::size_t k) const { return degrees_[k]; }
    unsigned order(std::size_t k) const { return orders_[k]; }
    const std::vector<step_term> &step(std::size_t k) const { return steps_[k]; }
    const std::vector<limit_tail> &tails() const { return tails_; }
    /* Per limit-labelled entry: whether the unrolled tail stabilized. */
    const std::map<table_index, bool> &stabilized() const { return stabilized_; }

    alpha_vec full_alpha() const;
    std::vector<std::size_t> variable_rows() const { return values_.nonempty_rows(); }
    std::size_t top_row() const;

  private:
    friend skp_table build_skp(const value_table &, const std::map<table_index, scalar> &,
                               const std::vector<limit_tail> &, truncation, field);
    friend skp_table minimal_pseudo_skp(const skp_table &);

    value_table values_;
    field field_;
    truncation trunc_;
    bool pseudo_ = false;
    std::vector<poly> polys_;
    std::vector<scalar> thetas_;
    std::vector<unsigned> degrees_;
    std::vector<unsigned> orders_;
    std::vector<std::vector<step_term>> steps_;
    std::vector<limit_tail> tails_;
    std::map<table_index, bool> stabilized_;
};

constexpr unsigned default_cutoff = 32;

skp_table build_skp(const value_table &t, const std::map<table_index, scalar> &thetas = {},
                    const std::vector<limit_tail> &tails = {}, truncation trunc = {},
                    field f = {});

/* Drops every interior entry with n = 1; steps between the kept entries
 * become the collapsed sums of the dropped chain. */
skp_table minimal_pseudo_skp(const skp_table &s);

bool validate_acceptable(const skp_table &s, const alpha_vec &alpha);
std::vector<alpha_vec> acceptable_vectors(const skp_table &s);

} // namespace skpval
