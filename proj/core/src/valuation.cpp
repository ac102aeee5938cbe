#include "skpval/valuation.hpp"
#include "skpval/error.hpp"

#include <set>

namespace skpval {

skp_valuation::skp_valuation(std::shared_ptr<const skp_table> s, alpha_vec alpha)
    : skp_(std::move(s)), alpha_(std::move(alpha))
{
    if (alpha_.empty())
        alpha_ = skp_->full_alpha();
    if (!validate_acceptable(*skp_, alpha_))
        throw error(errc::not_acceptable, "cutoff vector is not acceptable for this table");
}

skp_valuation skp_valuation::with_top_cutoff(unsigned j) const
{
    alpha_vec a = alpha_;
    a[skp_->top_row()] = j;
    return skp_valuation(skp_, a);
}

gvalue monomial_value(const adic_exp &e, const skp_table &s)
{
    const value_table &t = s.values();
    gvalue v(t.dim());
    for (std::size_t k = 0; k < t.size(); ++k)
        if (e[k])
            v += mpq_class(e[k]) * t.at(k).beta;
    return v;
}

gvalue value_of(const adic_expansion &x, const skp_table &s)
{
    if (x.empty())
        throw error(errc::zero_poly, "value of zero");
    gvalue best = monomial_value(x.monomials[0].e, s);
    for (std::size_t k = 1; k < x.monomials.size(); ++k) {
        gvalue v = monomial_value(x.monomials[k].e, s);
        if (v < best)
            best = std::move(v);
    }
    return best;
}

static adic_expansion expand_nonzero(const poly &f, const skp_valuation &v)
{
    if (f.is_zero())
        throw error(errc::zero_poly, "value of the zero polynomial");
    auto x = adic_expand(f, v.skp(), v.alpha());
    if (x.empty())
        throw error(errc::zero_poly, "polynomial vanishes below the truncation cutoff");
    return x;
}

gvalue value_of(const poly &f, const skp_valuation &v)
{
    return value_of(expand_nonzero(f, v), v.skp());
}

adic_expansion initial_form(const poly &f, const skp_valuation &v)
{
    auto x = expand_nonzero(f, v);
    gvalue m = value_of(x, v.skp());
    adic_expansion in;
    std::set<std::vector<unsigned>> vps;
    for (auto &mon : x.monomials) {
        if (!(monomial_value(mon.e, v.skp()) == m))
            continue;
        if (!vps.insert(vdeg_of(mon.e, v.skp(), v.alpha()).vp).second)
            throw error(errc::verification_failed, "two initial monomials share their row-final exponents");
        in.monomials.push_back(mon);
    }
    return in;
}

static gvalue euclid_value(const poly &f, const skp_valuation &v, const std::vector<std::size_t> &rows,
                           std::size_t t)
{
    const skp_table &s = v.skp();
    if (f.num_vars() == 0)
        return gvalue(s.values().dim());
    std::size_t row = rows[t];
    if (!f.involves(row) && t > 0)
        return euclid_value(f, v, rows, t - 1);
    auto terms = euclidean_expand(f, s, row, v.alpha()[row]);
    std::optional<gvalue> best;
    for (auto &term : terms) {
        gvalue val = t > 0 ? euclid_value(term.coeff, v, rows, t - 1) : gvalue(s.values().dim());
        for (std::size_t j = 0; j < term.J.size(); ++j)
            if (term.J[j])
                val += mpq_class(term.J[j]) *
                       s.values().at({static_cast<int>(row), static_cast<int>(j + 1)}).beta;
        if (!best || val < *best)
            best = std::move(val);
    }
    return *best;
}

gvalue value_via_euclidean(const poly &f, const skp_valuation &v)
{
    if (f.is_zero())
        throw error(errc::zero_poly, "value of the zero polynomial");
    return euclid_value(f, v, v.skp().variable_rows(), v.skp().variable_rows().size() - 1);
}

unsigned delta_of(const poly &f, const skp_valuation &v, unsigned j)
{
    skp_valuation vj = v.with_top_cutoff(j);
    auto in = initial_form(f, vj);
    std::size_t k = v.skp().flat({static_cast<int>(v.skp().top_row()), static_cast<int>(j)});
    unsigned d = 0;
    for (auto &m : in.monomials)
        d = std::max<unsigned>(d, m.e[k]);
    return d;
}

graded_form graded_normal_form(const poly &f, const skp_valuation &v)
{
    const skp_table &s = v.skp();
    const value_table &t = s.values();
    const alpha_vec &alpha = v.alpha();
    auto in = initial_form(f, v);
    graded_form out;
    out.value = value_of(in, s);
    for (std::size_t i = 0; i < t.num_rows(); ++i)
        if (alpha[i] && !t.at({static_cast<int>(i), static_cast<int>(alpha[i])}).n.is_inf())
            out.torus_rows.push_back(i);
    bool first = true;
    for (auto &mon : in.monomials) {
        adic_exp e = mon.e;
        scalar c = mon.coeff;
        exponent T(t.num_rows(), 0);
        for (std::size_t k = t.size(); k-- > 0;) {
            if (!e[k])
                continue;
            auto &en = t.at(k);
            if (en.n.is_inf() || e[k] < en.n.n)
                continue;
            std::uint32_t n = static_cast<std::uint32_t>(en.n.n);
            std::uint32_t r = e[k] / n;
            e[k] -= r * n;
            if (static_cast<unsigned>(en.idx.j) == alpha[en.idx.i]) {
                T[en.idx.i] += r;
                for (std::size_t l = 0; l < en.rel.size(); ++l) {
                    if (en.rel[l] == 0)
                        continue;
                    auto idx = t.at(l).idx;
                    if (static_cast<unsigned>(idx.j) > alpha[idx.i])
                        throw error(errc::not_acceptable, "relation of " + en.idx.str() + " uses " + idx.str() +
                                                              " beyond the cutoff");
                    e[l] += r * static_cast<std::uint32_t>(en.rel[l].get_ui());
                }
                c *= s.theta(k).pow(r);
            } else {
                const skp_table::step_term *best = nullptr;
                gvalue bv;
                for (auto &term : s.step(k)) {
                    gvalue tv = monomial_value(term.m, s);
                    if (!best || tv < bv) {
                        best = &term;
                        bv = tv;
                    }
                }
                for (std::size_t l = 0; l < e.size(); ++l)
                    e[l] += r * best->m[l];
                c *= best->theta.pow(r);
            }
        }
        if (first) {
            out.J = e;
            first = false;
        } else if (out.J != e) {
            throw error(errc::verification_failed, "initial monomials give different normal form exponents");
        }
        out.p.add_term(T, c);
    }
    return out;
}

stabilization stabilization_profile(const poly &f, const skp_valuation &v,
                                    const std::vector<unsigned> &cutoffs)
{
    stabilization st;
    st.cutoffs = cutoffs;
    for (unsigned j : cutoffs)
        st.values.push_back(value_of(f, v.with_top_cutoff(j)));
    for (std::size_t k = 1; k < st.values.size(); ++k)
        if (st.values[k] < st.values[k - 1])
            st.non_decreasing = false;
    if (!st.values.empty()) {
        std::size_t s = st.values.size() - 1;
        while (s > 0 && st.values[s - 1] == st.values.back())
            --s;
        st.stable_from = s;
    }
    return st;
}

} // namespace skpval
