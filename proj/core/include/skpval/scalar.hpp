#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace skpval {

/* The coefficient field: either Q (modulus 0) or F_p. */
struct field {
    std::uint32_t p = 0;

    static field rationals() { return {}; }
    static field prime(std::uint32_t p);
    bool is_prime() const { return p != 0; }
    std::string name() const;
    bool operator==(const field &) const = default;
};

/* An element of a field. Elements of F_p are stored as integers in [0,p).
 * Mixing a Q element with an F_p element reduces the Q element mod p;
 * mixing two different primes throws. */
class scalar {
  public:
    scalar() = default;
    scalar(long v) : q_(v) {}
    scalar(const mpq_class &v, field f = {});
    scalar(long v, field f);

    static scalar parse(const std::string &s, field f = {});

    field fld() const { return {p_}; }
    const mpq_class &value() const { return q_; }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_one() const { return q_ == 1; }
    bool is_integer() const { return q_.get_den() == 1; }

    scalar operator-() const;
    scalar &operator+=(const scalar &o);
    scalar &operator-=(const scalar &o);
    scalar &operator*=(const scalar &o);
    scalar &operator/=(const scalar &o);

    friend scalar operator+(scalar a, const scalar &b) { return a += b; }
    friend scalar operator-(scalar a, const scalar &b) { return a -= b; }
    friend scalar operator*(scalar a, const scalar &b) { return a *= b; }
    friend scalar operator/(scalar a, const scalar &b) { return a /= b; }
    friend bool operator==(const scalar &a, const scalar &b) {
        return a.p_ == b.p_ && a.q_ == b.q_;
    }

    scalar pow(unsigned long e) const;
    scalar inverse() const;

    /* "p/q" or "p"; F_p elements print as their representative. */
    std::string str() const;

  private:
    void reduce();
    std::uint32_t join(const scalar &o) const;

    mpq_class q_;
    std::uint32_t p_ = 0;
};

std::string rat_str(const mpq_class &q);
mpq_class parse_rat(const std::string &s);

} // namespace skpval
