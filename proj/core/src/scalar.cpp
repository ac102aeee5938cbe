#include "skpval/scalar.hpp"
#include "skpval/error.hpp"

#include <cctype>

namespace skpval {

const char *errc_name(errc c)
{
    switch (c) {
    case errc::dimension_mismatch: return "DIMENSION_MISMATCH";
    case errc::not_in_group: return "NOT_IN_GROUP";
    case errc::not_monic: return "NOT_MONIC";
    case errc::zero_poly: return "ZERO_POLY";
    case errc::invalid_table: return "INVALID_TABLE";
    case errc::theta_zero: return "THETA_ZERO";
    case errc::no_cutoff: return "NO_CUTOFF";
    case errc::non_stabilizing: return "NON_STABILIZING";
    case errc::iteration_cap: return "ITERATION_CAP";
    case errc::unrealizable: return "UNREALIZABLE";
    case errc::hypothesis_violated: return "HYPOTHESIS_VIOLATED";
    case errc::verification_failed: return "VERIFICATION_FAILED";
    case errc::parse_error: return "PARSE_ERROR";
    case errc::variable_not_in_table: return "VARIABLE_NOT_IN_TABLE";
    case errc::not_acceptable: return "NOT_ACCEPTABLE";
    case errc::bad_input: return "BAD_INPUT";
    case errc::field_mismatch: return "FIELD_MISMATCH";
    }
    return "UNKNOWN";
}

static bool is_prime_u32(std::uint32_t p)
{
    if (p < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

field field::prime(std::uint32_t p)
{
    if (!is_prime_u32(p))
        throw error(errc::bad_input, "field characteristic " + std::to_string(p) + " is not prime");
    return {p};
}

std::string field::name() const
{
    return p ? "GF(" + std::to_string(p) + ")" : "Q";
}

mpq_class parse_rat(const std::string &s0)
{
    std::string s;
    for (char c : s0)
        if (!std::isspace(static_cast<unsigned char>(c)))
            s.push_back(c);
    auto digits = [](const std::string &t, std::size_t from, std::size_t to) {
        if (from >= to)
            return false;
        for (std::size_t k = from; k < to; ++k)
            if (!std::isdigit(static_cast<unsigned char>(t[k])))
                return false;
        return true;
    };
    std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    std::size_t slash = s.find('/');
    bool ok = slash == std::string::npos
                  ? digits(s, start, s.size())
                  : digits(s, start, slash) && digits(s, slash + 1, s.size());
    if (!ok)
        throw error(errc::parse_error, "malformed rational '" + s0 + "'");
    if (s[0] == '+')
        s.erase(0, 1);
    mpq_class q;
    if (slash == std::string::npos) {
        q = mpz_class(s);
    } else {
        std::size_t sl = s.find('/');
        mpz_class num(s.substr(0, sl)), den(s.substr(sl + 1));
        if (den == 0)
            throw error(errc::parse_error, "zero denominator in '" + s0 + "'");
        q = mpq_class(num, den);
        q.canonicalize();
    }
    return q;
}

std::string rat_str(const mpq_class &q)
{
    return q.get_str();
}

scalar::scalar(const mpq_class &v, field f) : q_(v), p_(f.p)
{
    reduce();
}

scalar::scalar(long v, field f) : q_(v), p_(f.p)
{
    reduce();
}

scalar scalar::parse(const std::string &s, field f)
{
    return scalar(parse_rat(s), f);
}

void scalar::reduce()
{
    if (!p_)
        return;
    mpz_class P(p_);
    mpz_class num = q_.get_num() % P;
    mpz_class den = q_.get_den() % P;
    if (den == 0)
        throw error(errc::field_mismatch, "denominator divisible by " + std::to_string(p_));
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), P.get_mpz_t());
    num = (num * inv) % P;
    if (num < 0)
        num += P;
    q_ = mpq_class(num);
}

std::uint32_t scalar::join(const scalar &o) const
{
    if (p_ && o.p_ && p_ != o.p_)
        throw error(errc::field_mismatch, "mixing GF(" + std::to_string(p_) + ") and GF(" +
                                              std::to_string(o.p_) + ")");
    return p_ ? p_ : o.p_;
}

scalar scalar::operator-() const
{
    scalar r = *this;
    r.q_ = -r.q_;
    r.reduce();
    return r;
}

scalar &scalar::operator+=(const scalar &o)
{
    p_ = join(o);
    q_ += o.q_;
    reduce();
    return *this;
}

scalar &scalar::operator-=(const scalar &o)
{
    p_ = join(o);
    q_ -= o.q_;
    reduce();
    return *this;
}

scalar &scalar::operator*=(const scalar &o)
{
    p_ = join(o);
    q_ *= o.q_;
    reduce();
    return *this;
}

scalar &scalar::operator/=(const scalar &o)
{
    return *this *= o.inverse();
}

scalar scalar::inverse() const
{
    if (is_zero())
        throw error(errc::bad_input, "division by zero");
    scalar r = *this;
    r.q_ = 1 / r.q_;
    r.reduce();
    return r;
}

scalar scalar::pow(unsigned long e) const
{
    scalar r(1L, fld()), b = *this;
    while (e) {
        if (e & 1)
            r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

std::string scalar::str() const
{
    return rat_str(q_);
}

} // namespace skpval
