#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace skpval {

/* An element of Q^r, ordered lexicographically (first coordinate most
 * significant). */
class gvalue {
  public:
    gvalue() = default;
    explicit gvalue(std::size_t r) : c_(r) {}
    gvalue(std::vector<mpq_class> c) : c_(std::move(c)) {}
    gvalue(std::initializer_list<mpq_class> c) : c_(c) {}

    std::size_t dim() const { return c_.size(); }
    const mpq_class &operator[](std::size_t k) const { return c_[k]; }
    mpq_class &operator[](std::size_t k) { return c_[k]; }
    const std::vector<mpq_class> &coords() const { return c_; }
    bool is_zero() const;

    gvalue &operator+=(const gvalue &o);
    gvalue &operator-=(const gvalue &o);
    friend gvalue operator+(gvalue a, const gvalue &b) { return a += b; }
    friend gvalue operator-(gvalue a, const gvalue &b) { return a -= b; }
    friend gvalue operator*(const mpq_class &s, gvalue a);

    /* "(a,b,c)"; a one-dimensional value prints without parentheses. */
    std::string str() const;

  private:
    std::vector<mpq_class> c_;
};

std::strong_ordering lex_compare(const gvalue &a, const gvalue &b);
inline bool operator==(const gvalue &a, const gvalue &b) { return lex_compare(a, b) == 0; }
inline std::strong_ordering operator<=>(const gvalue &a, const gvalue &b) { return lex_compare(a, b); }

/* A positive integer or infinity. */
struct index_or_inf {
    bool inf = true;
    std::uint64_t n = 0;

    static index_or_inf infinity() { return {}; }
    static index_or_inf finite(std::uint64_t n) { return {false, n}; }
    bool is_inf() const { return inf; }
    std::string str() const { return inf ? "inf" : std::to_string(n); }
    bool operator==(const index_or_inf &) const = default;
    std::strong_ordering operator<=>(const index_or_inf &o) const;
};

/* Coefficients of n*gamma = sum m_j gamma_j, aligned with the generator list. */
struct representation {
    std::vector<mpz_class> m;
    bool positive = true;

    bool empty() const;
};

/* The subgroup of Q^r generated by a finite list, kept in echelon form
 * together with the unimodular transform back to the generators. */
class lattice {
  public:
    lattice(std::size_t dim, const std::vector<gvalue> &gens);

    std::size_t dim() const { return dim_; }
    std::size_t rank() const { return basis_.size(); }
    bool in_qspan(const gvalue &v) const;
    bool contains(const gvalue &v) const;
    index_or_inf index_of(const gvalue &v) const;
    /* Some integer combination of the generators equal to v. */
    std::optional<std::vector<mpz_class>> solve(const gvalue &v) const;

  private:
    std::optional<std::vector<mpq_class>> coords(const gvalue &v) const;

    std::size_t dim_;
    std::size_t ngens_;
    mpz_class scale_;
    std::vector<std::vector<mpz_class>> basis_; // echelon rows
    std::vector<std::size_t> pivot_;
    std::vector<std::vector<mpz_class>> transform_; // basis_[k] = sum transform_[k][j] * scale_*gen_j
};

std::strong_ordering lex_compare(const gvalue &a, const gvalue &b);
index_or_inf subgroup_index(const gvalue &g, const std::vector<gvalue> &previous);
representation canonical_representation(const mpz_class &n, const gvalue &g,
                                        const std::vector<gvalue> &previous,
                                        const std::vector<index_or_inf> &previous_n);
std::size_t rational_rank(const std::vector<gvalue> &values, std::size_t dim = 0);
std::size_t isolated_level(const gvalue &v);
/* Number of proper isolated subgroups of the group generated by values. */
std::size_t group_rank(const std::vector<gvalue> &values, std::size_t dim = 0);
bool in_qspan(const gvalue &v, const std::vector<gvalue> &values);
bool in_qspan(const gvalue &v, const gvalue &w);

/* Incrementally computes n_j and the canonical relation of each pushed
 * generator over all earlier ones. */
class relation_builder {
  public:
    struct entry {
        index_or_inf n;
        representation rel; // empty when n is infinite
    };

    explicit relation_builder(std::size_t dim) : dim_(dim) {}

    const entry &push(const gvalue &g);
    const std::vector<gvalue> &generators() const { return gens_; }
    const std::vector<entry> &entries() const { return info_; }
    /* Canonical representation of n*v over every generator pushed so far. */
    representation represent(const mpz_class &n, const gvalue &v) const;

  private:
    representation reduce(std::vector<mpz_class> x, std::size_t upto) const;

    std::size_t dim_;
    std::vector<gvalue> gens_;
    std::vector<entry> info_;
};

} // namespace skpval
