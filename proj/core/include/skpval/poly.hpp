#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "skpval/scalar.hpp"

namespace skpval {

/* Exponent vector (a_0, a_1, ...) with trailing zeros removed. */
using exponent = std::vector<std::uint32_t>;

void trim(exponent &e);
unsigned total_degree(const exponent &e);

/* Lexicographic, highest variable most significant. */
struct exp_less {
    bool operator()(const exponent &a, const exponent &b) const;
};

class poly {
  public:
    using term_map = std::map<exponent, scalar, exp_less>;

    poly() = default;
    explicit poly(const scalar &c);
    static poly var(std::size_t i, field f = {});
    static poly monomial(exponent e, const scalar &c);

    bool is_zero() const { return terms_.empty(); }
    const term_map &terms() const { return terms_; }
    std::size_t num_terms() const { return terms_.size(); }
    /* One past the highest variable index that occurs. */
    std::size_t num_vars() const;
    bool involves(std::size_t var) const;
    unsigned deg(std::size_t var) const;
    unsigned total_degree() const;
    /* Coefficient of X_var^k, as a polynomial free of X_var. */
    poly coeff_in(std::size_t var, unsigned k) const;
    bool is_monic_in(std::size_t var) const;
    scalar constant_term() const;

    void add_term(const exponent &e, const scalar &c);
    poly &truncate(unsigned n);

    poly operator-() const;
    poly &operator+=(const poly &o);
    poly &operator-=(const poly &o);
    poly &operator*=(const scalar &c);
    friend poly operator+(poly a, const poly &b) { return a += b; }
    friend poly operator-(poly a, const poly &b) { return a -= b; }
    friend poly operator*(const poly &a, const poly &b);
    friend poly operator*(poly a, const scalar &c) { return a *= c; }
    bool operator==(const poly &o) const { return terms_ == o.terms_; }

    /* Terms in decreasing order, e.g. "X1^2 - X0^3". */
    std::string str(const std::string &var = "X") const;

  private:
    term_map terms_;
};

/* Total-degree cutoff applied after every arithmetic operation. */
struct truncation {
    std::optional<unsigned> cutoff;

    bool active() const { return cutoff.has_value(); }
    poly &apply(poly &p) const;
};

poly mul(const poly &a, const poly &b, const truncation &t = {});
poly pow(const poly &a, unsigned e, const truncation &t = {});

/* f = q*g + r with deg_{X_i} r < deg_{X_i} g; g must be monic in X_i. */
std::pair<poly, poly> monic_divide(const poly &f, const poly &g, std::size_t i);

/* Minimum total degree of a term. */
unsigned order_of(const poly &f);

/* Integers and rationals, X0..Xd, + - * ^ and parentheses. */
poly parse_poly(const std::string &s, field f = {});

} // namespace skpval
