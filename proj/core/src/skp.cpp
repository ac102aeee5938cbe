#include "skpval/skp.hpp"
#include "skpval/error.hpp"

namespace skpval {

alpha_vec skp_table::full_alpha() const
{
    alpha_vec a;
    for (std::size_t i = 0; i < values_.num_rows(); ++i)
        a.push_back(static_cast<unsigned>(values_.row_len(i)));
    return a;
}

std::size_t skp_table::top_row() const
{
    auto rows = variable_rows();
    return rows.back();
}

static poly key_product(const std::map<table_index, unsigned> &m,
                        const std::map<table_index, poly> &polys, const truncation &trunc,
                        field f)
{
    poly p(scalar(1L, f));
    for (auto &[idx, e] : m) {
        if (!e)
            continue;
        auto it = polys.find(idx);
        if (it == polys.end())
            throw error(errc::bad_input, "tail refers to unknown key polynomial " + idx.str());
        p = mul(p, pow(it->second, e, trunc), trunc);
    }
    return p;
}

unroll_result unroll_limit(const poly &start, std::uint64_t start_n, const limit_tail &tail,
                           const std::map<table_index, poly> &polys, unsigned depth,
                           const truncation &trunc)
{
    if (!trunc.active())
        throw error(errc::no_cutoff, "unrolling a limit requires a truncation cutoff");
    for (auto &[idx, f] : tail.exponents)
        if (f.a < 0 || f.b < 0)
            throw error(errc::bad_input, "tail exponent of " + idx.str() + " must be a + b*k with a, b >= 0");
    if (tail.theta.is_zero())
        throw error(errc::theta_zero, "tail theta is zero");
    unroll_result r;
    r.value = pow(start, static_cast<unsigned>(start_n), trunc);
    if (depth == 0)
        return r;
    field f = tail.theta.fld();
    for (unsigned k = 0; k < depth; ++k) {
        std::map<table_index, unsigned> m;
        for (auto &[idx, a] : tail.exponents)
            if (a.at(k))
                m[idx] = static_cast<unsigned>(a.at(k));
        poly s = key_product(m, polys, trunc, f);
        s *= tail.theta;
        trunc.apply(s);
        if (s.is_zero()) {
            r.stabilized = true;
            break;
        }
        r.value -= s;
        r.summands.push_back(std::move(m));
    }
    if (!r.stabilized)
        throw error(errc::non_stabilizing, "tail of row " + std::to_string(tail.row) + " from " +
                                               std::to_string(tail.start) + ": summand orders stay within cutoff " +
                                               std::to_string(*trunc.cutoff) + " for " +
                                               std::to_string(depth) + " steps");
    return r;
}

static std::string describe_failures(const validation_report &rep)
{
    std::string s;
    for (auto &c : rep.failures()) {
        if (!s.empty())
            s += "; ";
        s += c.name + " failed at (" + c.at.str() + ")";
        if (!c.detail.empty())
            s += ": " + c.detail;
    }
    return s;
}

skp_table build_skp(const value_table &t, const std::map<table_index, scalar> &thetas,
                    const std::vector<limit_tail> &tails, truncation trunc, field f)
{
    auto rep = validate_table(t);
    if (!rep.ok())
        throw error(errc::invalid_table, describe_failures(rep));
    skp_table s;
    s.values_ = t;
    s.field_ = f;
    if (!t.limit_labels().empty() && !trunc.active())
        trunc.cutoff = default_cutoff;
    s.trunc_ = trunc;
    std::size_t K = t.size();
    s.polys_.resize(K);
    s.thetas_.assign(K, scalar(1L, f));
    s.degrees_.assign(K, 0);
    s.orders_.assign(K, 0);
    s.steps_.resize(K);
    for (auto &[idx, th] : thetas) {
        if (!t.has(idx))
            throw error(errc::bad_input, "theta given for missing entry " + idx.str());
        scalar v(th.value(), f);
        if (v.is_zero())
            throw error(errc::theta_zero, "theta of " + idx.str() + " is zero");
        s.thetas_[t.flat(idx)] = v;
    }
    std::map<std::size_t, limit_tail> tail_of;
    for (auto tl : tails) {
        table_index lim{tl.row, tl.start + 1};
        if (!t.has(lim) || !t.at(lim).limit_label)
            throw error(errc::bad_input, "tail at (" + std::to_string(tl.row) + "," +
                                             std::to_string(tl.start) +
                                             ") is not followed by a limit-labelled entry");
        tl.theta = scalar(tl.theta.value(), f);
        tail_of[t.flat(lim)] = tl;
        s.tails_.push_back(tl);
    }
    std::map<table_index, poly> built;
    for (std::size_t k = 0; k < K; ++k) {
        auto &e = t.at(k);
        std::size_t i = e.idx.i;
        poly U;
        if (e.idx.j == 1) {
            if (e.limit_label)
                throw error(errc::invalid_table, "limit label on the first entry of row " + std::to_string(i));
            U = poly::var(i, f);
            s.degrees_[k] = 1;
        } else {
            std::size_t kp = k - 1;
            auto &prev = t.at(kp);
            std::uint64_t np = prev.n.n;
            adic_exp rel(K, 0);
            std::map<table_index, unsigned> relmap;
            for (std::size_t l = 0; l < prev.rel.size(); ++l)
                if (prev.rel[l] != 0) {
                    rel[l] = static_cast<std::uint32_t>(prev.rel[l].get_ui());
                    relmap[t.at(l).idx] = rel[l];
                }
            if (e.limit_label) {
                auto it = tail_of.find(k);
                if (it == tail_of.end())
                    throw error(errc::invalid_table, "limit-labelled entry " + e.idx.str() + " has no declared tail");
                auto &tl = it->second;
                std::map<table_index, unsigned> first;
                for (auto &[idx, a] : tl.exponents)
                    if (a.at(0))
                        first[idx] = static_cast<unsigned>(a.at(0));
                if (first != relmap)
                    throw error(errc::invalid_table, "tail before " + e.idx.str() +
                                                         " does not start with the relation of " + prev.idx.str());
                auto ur = unroll_limit(s.polys_[kp], np, tl, built, tl.depth, trunc);
                U = std::move(ur.value);
                s.stabilized_[e.idx] = ur.stabilized;
                s.thetas_[kp] = tl.theta;
                for (auto &m : ur.summands) {
                    adic_exp x(K, 0);
                    for (auto &[idx, v] : m)
                        x[t.flat(idx)] = v;
                    s.steps_[kp].push_back({tl.theta, std::move(x)});
                }
            } else {
                poly prod = key_product(relmap, built, trunc, f);
                U = pow(s.polys_[kp], static_cast<unsigned>(np), trunc);
                U -= prod * s.thetas_[kp];
                trunc.apply(U);
                s.steps_[kp].push_back({s.thetas_[kp], std::move(rel)});
            }
            s.degrees_[k] = static_cast<unsigned>(np) * s.degrees_[kp];
        }
        if (!U.is_monic_in(i) || U.deg(i) != s.degrees_[k])
            throw error(errc::invalid_table, "key polynomial " + e.idx.str() + " is not monic of degree " +
                                                 std::to_string(s.degrees_[k]) + " in X" + std::to_string(i) +
                                                 (trunc.active() ? " (cutoff too small?)" : ""));
        for (std::size_t v = i + 1; v < U.num_vars(); ++v)
            if (U.involves(v))
                throw error(errc::invalid_table, "key polynomial " + e.idx.str() + " involves X" + std::to_string(v));
        s.orders_[k] = order_of(U);
        built[e.idx] = U;
        s.polys_[k] = std::move(U);
    }
    return s;
}

skp_table minimal_pseudo_skp(const skp_table &s)
{
    const value_table &t = s.values();
    std::size_t K = t.size();
    std::vector<bool> keep(K);
    for (std::size_t k = 0; k < K; ++k) {
        auto &e = t.at(k);
        keep[k] = t.is_row_final(k) || e.n.is_inf() || e.n.n != 1;
    }
    std::vector<std::vector<gvalue>> rows(t.num_rows());
    std::map<table_index, unsigned> labels;
    std::vector<std::size_t> remap(K, K);
    std::size_t pos = 0;
    for (std::size_t k = 0; k < K; ++k) {
        if (!keep[k])
            continue;
        auto &e = t.at(k);
        rows[e.idx.i].push_back(e.beta);
        if (e.limit_label)
            labels[{e.idx.i, static_cast<int>(rows[e.idx.i].size())}] = *e.limit_label;
        remap[k] = pos++;
    }
    skp_table r;
    r.values_ = value_table::compute_relations(t.dim(), std::move(rows), std::move(labels));
    r.field_ = s.field_;
    r.trunc_ = s.trunc_;
    r.pseudo_ = true;
    std::size_t N = r.values_.size();
    r.polys_.resize(N);
    r.thetas_.resize(N);
    r.degrees_.resize(N);
    r.orders_.resize(N);
    r.steps_.resize(N);
    for (std::size_t k = 0; k < K; ++k) {
        if (!keep[k])
            continue;
        std::size_t nk = remap[k];
        if (!(r.values_.at(nk).n == t.at(k).n))
            throw error(errc::invalid_table, "index of " + t.at(k).idx.str() + " changed after reduction");
        r.polys_[nk] = s.polys_[k];
        r.thetas_[nk] = s.thetas_[k];
        r.degrees_[nk] = s.degrees_[k];
        r.orders_[nk] = s.orders_[k];
        auto st = s.stabilized_.find(t.at(k).idx);
        if (st != s.stabilized_.end())
            r.stabilized_[r.values_.at(nk).idx] = st->second;
        if (t.is_row_final(k))
            continue;
        std::map<adic_exp, scalar> acc;
        for (std::size_t l = k; l == k || (l < K && !keep[l]); ++l) {
            for (auto &term : s.steps_[l]) {
                adic_exp x(N, 0);
                for (std::size_t o = 0; o < K; ++o) {
                    if (!term.m[o])
                        continue;
                    if (!keep[o])
                        throw error(errc::invalid_table, "step of " + t.at(l).idx.str() +
                                                             " uses dropped entry " + t.at(o).idx.str());
                    x[remap[o]] = term.m[o];
                }
                auto it = acc.find(x);
                if (it == acc.end())
                    acc.emplace(std::move(x), term.theta);
                else
                    it->second += term.theta;
            }
        }
        for (auto &[x, th] : acc)
            if (!th.is_zero())
                r.steps_[nk].push_back({th, x});
    }
    return r;
}

bool validate_acceptable(const skp_table &s, const alpha_vec &alpha)
{
    const value_table &t = s.values();
    if (alpha.size() != t.num_rows())
        return false;
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        std::size_t len = t.row_len(i);
        if (len == 0 ? alpha[i] != 0 : (alpha[i] < 1 || alpha[i] > len))
            return false;
    }
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        for (unsigned j = 1; j < alpha[i]; ++j) {
            std::size_t k = t.flat({static_cast<int>(i), static_cast<int>(j)});
            for (auto &term : s.step(k))
                for (std::size_t l = 0; l < term.m.size(); ++l) {
                    if (!term.m[l])
                        continue;
                    auto idx = t.at(l).idx;
                    if (static_cast<unsigned>(idx.j) > alpha[idx.i])
                        return false;
                }
        }
    }
    return true;
}

std::vector<alpha_vec> acceptable_vectors(const skp_table &s)
{
    alpha_vec full = s.full_alpha();
    std::vector<alpha_vec> out;
    alpha_vec cur(full.size());
    for (std::size_t i = 0; i < full.size(); ++i)
        cur[i] = full[i] ? 1 : 0;
    for (;;) {
        if (validate_acceptable(s, cur))
            out.push_back(cur);
        std::size_t i = 0;
        while (i < full.size()) {
            if (full[i] && cur[i] < full[i]) {
                ++cur[i];
                break;
            }
            cur[i] = full[i] ? 1 : 0;
            ++i;
        }
        if (i == full.size())
            break;
    }
    return out;
}

} // namespace skpval
