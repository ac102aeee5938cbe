#include "skpval/poly.hpp"
#include "skpval/error.hpp"

#include <cctype>

namespace skpval {

void trim(exponent &e)
{
    while (!e.empty() && e.back() == 0)
        e.pop_back();
}

unsigned total_degree(const exponent &e)
{
    unsigned s = 0;
    for (auto x : e)
        s += x;
    return s;
}

bool exp_less::operator()(const exponent &a, const exponent &b) const
{
    std::size_t n = std::max(a.size(), b.size());
    for (std::size_t k = n; k-- > 0;) {
        std::uint32_t x = k < a.size() ? a[k] : 0, y = k < b.size() ? b[k] : 0;
        if (x != y)
            return x < y;
    }
    return false;
}

poly::poly(const scalar &c)
{
    if (!c.is_zero())
        terms_.emplace(exponent{}, c);
}

poly poly::var(std::size_t i, field f)
{
    exponent e(i + 1, 0);
    e[i] = 1;
    return monomial(std::move(e), scalar(1L, f));
}

poly poly::monomial(exponent e, const scalar &c)
{
    poly p;
    trim(e);
    if (!c.is_zero())
        p.terms_.emplace(std::move(e), c);
    return p;
}

std::size_t poly::num_vars() const
{
    std::size_t n = 0;
    for (auto &[e, c] : terms_)
        n = std::max(n, e.size());
    return n;
}

bool poly::involves(std::size_t var) const
{
    for (auto &[e, c] : terms_)
        if (var < e.size() && e[var])
            return true;
    return false;
}

unsigned poly::deg(std::size_t var) const
{
    unsigned d = 0;
    for (auto &[e, c] : terms_)
        if (var < e.size())
            d = std::max<unsigned>(d, e[var]);
    return d;
}

unsigned poly::total_degree() const
{
    unsigned d = 0;
    for (auto &[e, c] : terms_)
        d = std::max(d, skpval::total_degree(e));
    return d;
}

poly poly::coeff_in(std::size_t var, unsigned k) const
{
    poly p;
    for (auto &[e, c] : terms_) {
        unsigned ev = var < e.size() ? e[var] : 0;
        if (ev != k)
            continue;
        exponent f = e;
        if (var < f.size())
            f[var] = 0;
        trim(f);
        p.terms_.emplace(std::move(f), c);
    }
    return p;
}

bool poly::is_monic_in(std::size_t var) const
{
    if (is_zero())
        return false;
    poly lc = coeff_in(var, deg(var));
    return lc.terms_.size() == 1 && lc.terms_.begin()->first.empty() &&
           lc.terms_.begin()->second.is_one();
}

scalar poly::constant_term() const
{
    auto it = terms_.find(exponent{});
    return it == terms_.end() ? scalar(0L) : it->second;
}

void poly::add_term(const exponent &e, const scalar &c)
{
    if (c.is_zero())
        return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        exponent t = e;
        trim(t);
        terms_.emplace(std::move(t), c);
        return;
    }
    it->second += c;
    if (it->second.is_zero())
        terms_.erase(it);
}

poly &poly::truncate(unsigned n)
{
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (skpval::total_degree(it->first) > n)
            it = terms_.erase(it);
        else
            ++it;
    }
    return *this;
}

poly poly::operator-() const
{
    poly p = *this;
    for (auto &[e, c] : p.terms_)
        c = -c;
    return p;
}

poly &poly::operator+=(const poly &o)
{
    for (auto &[e, c] : o.terms_)
        add_term(e, c);
    return *this;
}

poly &poly::operator-=(const poly &o)
{
    for (auto &[e, c] : o.terms_)
        add_term(e, -c);
    return *this;
}

poly &poly::operator*=(const scalar &s)
{
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto &[e, c] : terms_)
        c *= s;
    return *this;
}

poly operator*(const poly &a, const poly &b)
{
    return mul(a, b);
}

static void append_monomial(std::string &s, const exponent &e, const std::string &var)
{
    bool first = true;
    for (std::size_t k = 0; k < e.size(); ++k) {
        if (!e[k])
            continue;
        if (!first)
            s += "*";
        first = false;
        s += var + std::to_string(k);
        if (e[k] > 1)
            s += "^" + std::to_string(e[k]);
    }
}

std::string poly::str(const std::string &var) const
{
    if (terms_.empty())
        return "0";
    std::string s;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const exponent &e = it->first;
        scalar c = it->second;
        bool neg = sgn(c.value()) < 0 && !c.fld().is_prime();
        if (neg)
            c = -c;
        if (first)
            s += neg ? "-" : "";
        else
            s += neg ? " - " : " + ";
        first = false;
        if (e.empty()) {
            s += c.str();
        } else {
            if (!c.is_one())
                s += c.str() + "*";
            append_monomial(s, e, var);
        }
    }
    return s;
}

poly &truncation::apply(poly &p) const
{
    if (cutoff)
        p.truncate(*cutoff);
    return p;
}

poly mul(const poly &a, const poly &b, const truncation &t)
{
    poly r;
    if (a.is_zero() || b.is_zero())
        return r;
    exponent e;
    for (auto &[ea, ca] : a.terms()) {
        unsigned da = total_degree(ea);
        if (t.cutoff && da > *t.cutoff)
            continue;
        for (auto &[eb, cb] : b.terms()) {
            if (t.cutoff && da + total_degree(eb) > *t.cutoff)
                continue;
            e.assign(std::max(ea.size(), eb.size()), 0);
            for (std::size_t k = 0; k < ea.size(); ++k)
                e[k] += ea[k];
            for (std::size_t k = 0; k < eb.size(); ++k)
                e[k] += eb[k];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

poly pow(const poly &a, unsigned e, const truncation &t)
{
    scalar one(1L);
    if (!a.is_zero())
        one = scalar(1L, a.terms().begin()->second.fld());
    poly r(one), b = a;
    t.apply(r);
    t.apply(b);
    while (e) {
        if (e & 1)
            r = mul(r, b, t);
        e >>= 1;
        if (e)
            b = mul(b, b, t);
    }
    return r;
}

std::pair<poly, poly> monic_divide(const poly &f, const poly &g, std::size_t i)
{
    if (!g.is_monic_in(i))
        throw error(errc::not_monic, "divisor " + g.str() + " is not monic in X" + std::to_string(i));
    unsigned dg = g.deg(i);
    poly q, r = f;
    while (!r.is_zero() && r.deg(i) >= dg) {
        unsigned dr = r.deg(i);
        poly lc = r.coeff_in(i, dr);
        exponent xi(i + 1, 0);
        xi[i] = dr - dg;
        poly t = mul(lc, poly::monomial(xi, scalar(1L)));
        q += t;
        r -= mul(t, g);
    }
    return {q, r};
}

unsigned order_of(const poly &f)
{
    if (f.is_zero())
        throw error(errc::zero_poly, "order of the zero polynomial");
    unsigned o = ~0u;
    for (auto &[e, c] : f.terms())
        o = std::min(o, total_degree(e));
    return o;
}

namespace {

class parser {
  public:
    parser(const std::string &s, field f) : s_(s), f_(f) {}

    poly run()
    {
        poly p = expr();
        skip();
        if (pos_ != s_.size())
            fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return p;
    }

  private:
    [[noreturn]] void fail(const std::string &msg)
    {
        throw error(errc::parse_error,
                    "polynomial '" + s_ + "': " + msg + " at offset " + std::to_string(pos_));
    }
    void skip()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }
    bool eat(char c)
    {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    std::string digits()
    {
        skip();
        std::size_t b = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
        if (b == pos_)
            fail("expected a number");
        return s_.substr(b, pos_ - b);
    }
    poly expr()
    {
        poly p = term();
        for (;;) {
            if (eat('+'))
                p += term();
            else if (eat('-'))
                p -= term();
            else
                return p;
        }
    }
    poly term()
    {
        poly p = unary();
        while (eat('*'))
            p = mul(p, unary());
        return p;
    }
    poly unary()
    {
        if (eat('-'))
            return -unary();
        if (eat('+'))
            return unary();
        return power();
    }
    poly power()
    {
        poly p = atom();
        if (eat('^')) {
            std::string d = digits();
            if (d.size() > 6)
                fail("exponent too large");
            p = pow(p, static_cast<unsigned>(std::stoul(d)));
        }
        return p;
    }
    poly atom()
    {
        skip();
        if (pos_ >= s_.size())
            fail("unexpected end");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            poly p = expr();
            if (!eat(')'))
                fail("expected ')'");
            return p;
        }
        if (c == 'X') {
            ++pos_;
            std::string d = digits();
            if (d.size() > 4)
                fail("variable index too large");
            return poly::var(std::stoul(d), f_);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num = digits();
            std::size_t save = pos_;
            if (eat('/')) {
                skip();
                if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                    num += "/" + digits();
                else
                    pos_ = save;
            }
            return poly(scalar::parse(num, f_));
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    const std::string &s_;
    field f_;
    std::size_t pos_ = 0;
};

} // namespace

poly parse_poly(const std::string &s, field f)
{
    return parser(s, f).run();
}

} // namespace skpval
