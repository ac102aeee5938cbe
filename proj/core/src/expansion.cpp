#include "skpval/expansion.hpp"
#include "skpval/error.hpp"

#include <algorithm>
#include <map>

namespace skpval {

namespace {

struct engine {
    const skp_table &s;
    const alpha_vec &alpha;
    std::size_t K;
    std::size_t nrows;
    std::vector<bool> inside;
    std::vector<bool> rewritable;
    std::vector<std::uint64_t> nval;
    std::vector<std::size_t> row;

    using key = std::pair<std::vector<unsigned>, adic_exp>;
    std::map<key, scalar> pending;
    std::map<adic_exp, scalar> result;

    engine(const skp_table &s_, const alpha_vec &a) : s(s_), alpha(a)
    {
        if (!validate_acceptable(s, alpha))
            throw error(errc::not_acceptable, "cutoff vector is not acceptable for this table");
        const value_table &t = s.values();
        K = t.size();
        nrows = t.num_rows();
        inside.resize(K);
        rewritable.resize(K);
        nval.resize(K);
        row.resize(K);
        for (std::size_t k = 0; k < K; ++k) {
            auto &e = t.at(k);
            row[k] = e.idx.i;
            unsigned j = e.idx.j;
            inside[k] = j <= alpha[e.idx.i];
            rewritable[k] = j < alpha[e.idx.i] && !e.n.is_inf();
            nval[k] = e.n.is_inf() ? 0 : e.n.n;
        }
    }

    std::vector<unsigned> vdeg(const adic_exp &e) const
    {
        std::vector<unsigned> v(nrows, 0);
        for (std::size_t k = 0; k < K; ++k)
            v[row[k]] += e[k] * s.degree(k);
        return v;
    }

    bool dropped(const adic_exp &e) const
    {
        if (!s.trunc().active())
            return false;
        unsigned long o = 0;
        for (std::size_t k = 0; k < K; ++k)
            o += static_cast<unsigned long>(e[k]) * s.order(k);
        return o > *s.trunc().cutoff;
    }

    void push(const adic_exp &e, const scalar &c)
    {
        if (c.is_zero() || dropped(e))
            return;
        for (std::size_t k = 0; k < K; ++k)
            if (e[k] && !inside[k])
                throw error(errc::not_acceptable,
                            "monomial uses " + s.values().at(k).idx.str() + " outside the cutoff");
        key kk{vdeg(e), e};
        auto it = pending.find(kk);
        if (it == pending.end()) {
            pending.emplace(std::move(kk), c);
            return;
        }
        it->second += c;
        if (it->second.is_zero())
            pending.erase(it);
    }

    std::size_t violation(const adic_exp &e) const
    {
        for (std::size_t k = K; k-- > 0;)
            if (rewritable[k] && e[k] >= nval[k])
                return k;
        return K;
    }

    adic_expansion run(std::uint64_t cap)
    {
        std::uint64_t iters = 0;
        while (!pending.empty()) {
            auto it = pending.begin();
            adic_exp e = it->first.second;
            scalar c = it->second;
            pending.erase(it);
            if (++iters > cap)
                throw error(errc::iteration_cap, "adic expansion exceeded " + std::to_string(cap) + " rewrites");
            std::size_t k = violation(e);
            if (k == K) {
                auto r = result.find(e);
                if (r == result.end()) {
                    result.emplace(std::move(e), c);
                } else {
                    r->second += c;
                    if (r->second.is_zero())
                        result.erase(r);
                }
                continue;
            }
            e[k] -= static_cast<std::uint32_t>(nval[k]);
            adic_exp up = e;
            ++up[k + 1];
            push(up, c);
            for (auto &term : s.step(k)) {
                adic_exp down = e;
                for (std::size_t l = 0; l < K; ++l)
                    down[l] += term.m[l];
                push(down, c * term.theta);
            }
        }
        std::vector<std::pair<std::vector<unsigned>, adic_monomial>> sorted;
        for (auto &[e, c] : result)
            sorted.push_back({vdeg(e), {c, e}});
        std::sort(sorted.begin(), sorted.end(), [](const auto &a, const auto &b) {
            if (a.first != b.first)
                return a.first < b.first;
            return a.second.e < b.second.e;
        });
        adic_expansion x;
        for (auto &p : sorted)
            x.monomials.push_back(std::move(p.second));
        return x;
    }
};

} // namespace

adic_expansion adic_expand(const poly &f, const skp_table &s, const alpha_vec &alpha,
                           std::uint64_t cap)
{
    engine en(s, alpha);
    const value_table &t = s.values();
    for (auto &[a, c] : f.terms()) {
        adic_exp e(en.K, 0);
        for (std::size_t v = 0; v < a.size(); ++v) {
            if (!a[v])
                continue;
            if (v >= t.num_rows() || t.row_len(v) == 0)
                throw error(errc::variable_not_in_table, "X" + std::to_string(v) + " has no key polynomials");
            e[t.flat({static_cast<int>(v), 1})] = a[v];
        }
        en.push(e, scalar(c.value(), s.fld()));
    }
    return en.run(cap);
}

adic_expansion adic_expand(const adic_expansion &x, const skp_table &s, const alpha_vec &alpha,
                           std::uint64_t cap)
{
    engine en(s, alpha);
    for (auto &m : x.monomials)
        en.push(m.e, m.coeff);
    return en.run(cap);
}

bool is_adic_form(const adic_exp &e, const skp_table &s, const alpha_vec &alpha)
{
    const value_table &t = s.values();
    for (std::size_t k = 0; k < t.size(); ++k) {
        auto &en = t.at(k);
        unsigned j = en.idx.j;
        if (e[k] && j > alpha[en.idx.i])
            return false;
        if (j < alpha[en.idx.i] && !en.n.is_inf() && e[k] >= en.n.n)
            return false;
    }
    return true;
}

poly evaluate(const adic_exp &e, const skp_table &s)
{
    poly p(scalar(1L, s.fld()));
    for (std::size_t k = 0; k < e.size(); ++k)
        if (e[k])
            p = mul(p, pow(s.U(k), e[k], s.trunc()), s.trunc());
    return p;
}

poly evaluate(const adic_expansion &x, const skp_table &s)
{
    poly p;
    for (auto &m : x.monomials)
        p += evaluate(m.e, s) * m.coeff;
    return s.trunc().apply(p);
}

vdeg_vp vdeg_of(const adic_exp &e, const skp_table &s, const alpha_vec &alpha)
{
    const value_table &t = s.values();
    vdeg_vp r;
    r.vdeg.assign(t.num_rows(), 0);
    for (std::size_t k = 0; k < t.size(); ++k)
        r.vdeg[t.at(k).idx.i] += e[k] * s.degree(k);
    for (std::size_t i = t.num_rows(); i-- > 0;)
        r.vp.push_back(alpha[i] ? e[t.flat({static_cast<int>(i), static_cast<int>(alpha[i])})] : 0);
    return r;
}

bool vdeg_less(const adic_exp &a, const adic_exp &b, const skp_table &s)
{
    alpha_vec full = s.full_alpha();
    auto va = vdeg_of(a, s, full).vdeg, vb = vdeg_of(b, s, full).vdeg;
    if (va != vb)
        return va < vb;
    return a < b;
}

adic_exp exponent_from_vdeg(const std::vector<unsigned> &vdeg, const skp_table &s,
                            const alpha_vec &alpha)
{
    const value_table &t = s.values();
    adic_exp e(t.size(), 0);
    for (std::size_t i = 0; i < t.num_rows(); ++i) {
        unsigned rem = i < vdeg.size() ? vdeg[i] : 0;
        for (unsigned j = alpha[i]; j >= 1; --j) {
            std::size_t k = t.flat({static_cast<int>(i), static_cast<int>(j)});
            e[k] = rem / s.degree(k);
            rem -= e[k] * s.degree(k);
        }
        if (rem)
            throw error(errc::unrealizable, "degree " + std::to_string(vdeg[i]) + " of row " +
                                                std::to_string(i) + " is not realizable");
    }
    for (std::size_t i = t.num_rows(); i < vdeg.size(); ++i)
        if (vdeg[i])
            throw error(errc::unrealizable, "degree vector longer than the table");
    if (!is_adic_form(e, s, alpha))
        throw error(errc::unrealizable, "degree vector has no monomial of adic form");
    return e;
}

static void check_variables(const poly &f, const skp_table &s, std::size_t row)
{
    const value_table &t = s.values();
    for (std::size_t v = 0; v < f.num_vars(); ++v) {
        if (!f.involves(v))
            continue;
        if (v > row)
            throw error(errc::bad_input, "X" + std::to_string(v) + " lies above row " + std::to_string(row));
        if (t.row_len(v) == 0)
            throw error(errc::variable_not_in_table, "X" + std::to_string(v) + " has no key polynomials");
    }
}

static void euclid_rec(const poly &f, const skp_table &s, std::size_t row, unsigned j, unsigned top,
                       std::vector<std::uint32_t> &J, std::map<std::vector<std::uint32_t>, poly> &out)
{
    if (f.is_zero())
        return;
    if (j == 1) {
        unsigned D = f.deg(row);
        for (unsigned k = 0; k <= D; ++k) {
            poly c = f.coeff_in(row, k);
            if (c.is_zero())
                continue;
            J[0] = k;
            out[J] += c;
        }
        J[0] = 0;
        return;
    }
    const poly &g = s.U(s.flat({static_cast<int>(row), static_cast<int>(j)}));
    poly r = f;
    std::uint32_t k = 0;
    while (!r.is_zero()) {
        auto [q, rem] = monic_divide(r, g, row);
        J[j - 1] = k;
        euclid_rec(rem, s, row, j - 1, top, J, out);
        r = std::move(q);
        ++k;
    }
    J[j - 1] = 0;
}

std::vector<euclid_term> euclidean_expand(const poly &f, const skp_table &s, std::size_t row,
                                          unsigned j)
{
    check_variables(f, s, row);
    if (j < 1 || j > s.values().row_len(row))
        throw error(errc::bad_input, "cutoff " + std::to_string(j) + " outside row " + std::to_string(row));
    std::map<std::vector<std::uint32_t>, poly> acc;
    std::vector<std::uint32_t> J(j, 0);
    euclid_rec(f, s, row, j, j, J, acc);
    std::vector<euclid_term> out;
    for (auto &[J2, c] : acc)
        if (!c.is_zero())
            out.push_back({c, J2});
    return out;
}

std::vector<euclid_term> group_by_row(const adic_expansion &x, const skp_table &s, std::size_t row,
                                      unsigned j)
{
    const value_table &t = s.values();
    std::map<std::vector<std::uint32_t>, poly> acc;
    for (auto &m : x.monomials) {
        std::vector<std::uint32_t> J(j, 0);
        adic_exp rest = m.e;
        for (std::size_t k = 0; k < t.size(); ++k) {
            auto idx = t.at(k).idx;
            if (static_cast<std::size_t>(idx.i) != row || !m.e[k])
                continue;
            if (static_cast<unsigned>(idx.j) > j)
                throw error(errc::bad_input, "monomial uses " + idx.str() + " beyond the cutoff");
            J[idx.j - 1] = m.e[k];
            rest[k] = 0;
        }
        acc[J] += evaluate(rest, s) * m.coeff;
    }
    std::vector<euclid_term> out;
    for (auto &[J, c] : acc)
        if (!c.is_zero())
            out.push_back({c, J});
    return out;
}

} // namespace skpval
