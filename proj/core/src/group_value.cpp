#include "skpval/group_value.hpp"
#include "skpval/error.hpp"

namespace skpval {

static void check_dim(std::size_t a, std::size_t b)
{
    if (a != b)
        throw error(errc::dimension_mismatch,
                    "dimension mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
}

bool gvalue::is_zero() const
{
    for (auto &x : c_)
        if (sgn(x) != 0)
            return false;
    return true;
}

gvalue &gvalue::operator+=(const gvalue &o)
{
    check_dim(dim(), o.dim());
    for (std::size_t k = 0; k < c_.size(); ++k)
        c_[k] += o.c_[k];
    return *this;
}

gvalue &gvalue::operator-=(const gvalue &o)
{
    check_dim(dim(), o.dim());
    for (std::size_t k = 0; k < c_.size(); ++k)
        c_[k] -= o.c_[k];
    return *this;
}

gvalue operator*(const mpq_class &s, gvalue a)
{
    for (auto &x : a.c_)
        x *= s;
    return a;
}

std::string gvalue::str() const
{
    if (c_.size() == 1)
        return c_[0].get_str();
    std::string s = "(";
    for (std::size_t k = 0; k < c_.size(); ++k) {
        if (k)
            s += ",";
        s += c_[k].get_str();
    }
    return s + ")";
}

std::strong_ordering lex_compare(const gvalue &a, const gvalue &b)
{
    check_dim(a.dim(), b.dim());
    for (std::size_t k = 0; k < a.dim(); ++k) {
        int c = cmp(a[k], b[k]);
        if (c < 0)
            return std::strong_ordering::less;
        if (c > 0)
            return std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

std::strong_ordering index_or_inf::operator<=>(const index_or_inf &o) const
{
    if (inf || o.inf)
        return inf == o.inf ? std::strong_ordering::equal
                            : (inf ? std::strong_ordering::greater : std::strong_ordering::less);
    return n <=> o.n;
}

bool representation::empty() const
{
    for (auto &x : m)
        if (x != 0)
            return false;
    return true;
}

lattice::lattice(std::size_t dim, const std::vector<gvalue> &gens)
    : dim_(dim), ngens_(gens.size()), scale_(1)
{
    for (auto &g : gens) {
        check_dim(dim_, g.dim());
        for (auto &x : g.coords())
            mpz_lcm(scale_.get_mpz_t(), scale_.get_mpz_t(), x.get_den_mpz_t());
    }
    std::size_t k = gens.size();
    std::vector<std::vector<mpz_class>> H(k, std::vector<mpz_class>(dim_));
    std::vector<std::vector<mpz_class>> T(k, std::vector<mpz_class>(k));
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t c = 0; c < dim_; ++c) {
            mpq_class s = gens[i][c] * scale_;
            H[i][c] = s.get_num();
        }
        T[i][i] = 1;
    }
    auto combine = [&](std::vector<mpz_class> &x, std::vector<mpz_class> &y, const mpz_class &s,
                       const mpz_class &t, const mpz_class &u, const mpz_class &v) {
        // (x, y) <- (s x + t y, u x + v y)
        for (std::size_t c = 0; c < x.size(); ++c) {
            mpz_class nx = s * x[c] + t * y[c];
            mpz_class ny = u * x[c] + v * y[c];
            x[c] = nx;
            y[c] = ny;
        }
    };
    std::size_t row = 0;
    for (std::size_t col = 0; col < dim_ && row < k; ++col) {
        for (std::size_t i = row + 1; i < k; ++i) {
            if (H[i][col] == 0)
                continue;
            if (H[row][col] == 0) {
                std::swap(H[row], H[i]);
                std::swap(T[row], T[i]);
                continue;
            }
            mpz_class a = H[row][col], b = H[i][col], g, s, t;
            mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
            mpz_class u = -b / g, v = a / g;
            combine(H[row], H[i], s, t, u, v);
            combine(T[row], T[i], s, t, u, v);
        }
        if (H[row][col] != 0) {
            if (H[row][col] < 0) {
                for (auto &x : H[row])
                    x = -x;
                for (auto &x : T[row])
                    x = -x;
            }
            pivot_.push_back(col);
            ++row;
        }
    }
    basis_.assign(H.begin(), H.begin() + row);
    transform_.assign(T.begin(), T.begin() + row);
}

std::optional<std::vector<mpq_class>> lattice::coords(const gvalue &v) const
{
    check_dim(dim_, v.dim());
    std::vector<mpq_class> w(dim_);
    for (std::size_t c = 0; c < dim_; ++c)
        w[c] = v[c] * scale_;
    std::vector<mpq_class> out(basis_.size());
    for (std::size_t k = 0; k < basis_.size(); ++k) {
        std::size_t p = pivot_[k];
        out[k] = w[p] / mpq_class(basis_[k][p]);
        if (sgn(out[k]) != 0)
            for (std::size_t c = p; c < dim_; ++c)
                w[c] -= out[k] * basis_[k][c];
    }
    for (auto &x : w)
        if (sgn(x) != 0)
            return std::nullopt;
    return out;
}

bool lattice::in_qspan(const gvalue &v) const
{
    return coords(v).has_value();
}

bool lattice::contains(const gvalue &v) const
{
    auto c = coords(v);
    if (!c)
        return false;
    for (auto &x : *c)
        if (x.get_den() != 1)
            return false;
    return true;
}

index_or_inf lattice::index_of(const gvalue &v) const
{
    auto c = coords(v);
    if (!c)
        return index_or_inf::infinity();
    mpz_class l = 1;
    for (auto &x : *c)
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    if (!l.fits_ulong_p())
        throw error(errc::bad_input, "subgroup index too large");
    return index_or_inf::finite(l.get_ui());
}

std::optional<std::vector<mpz_class>> lattice::solve(const gvalue &v) const
{
    auto c = coords(v);
    if (!c)
        return std::nullopt;
    std::vector<mpz_class> x(ngens_);
    for (std::size_t k = 0; k < c->size(); ++k) {
        if ((*c)[k].get_den() != 1)
            return std::nullopt;
        mpz_class ck = (*c)[k].get_num();
        if (ck == 0)
            continue;
        for (std::size_t j = 0; j < ngens_; ++j)
            x[j] += ck * transform_[k][j];
    }
    return x;
}

index_or_inf subgroup_index(const gvalue &g, const std::vector<gvalue> &previous)
{
    return lattice(g.dim(), previous).index_of(g);
}

const relation_builder::entry &relation_builder::push(const gvalue &g)
{
    check_dim(dim_, g.dim());
    lattice lat(dim_, gens_);
    entry e;
    e.n = lat.index_of(g);
    if (!e.n.is_inf()) {
        auto x = lat.solve(mpq_class(mpz_class(e.n.n)) * g);
        e.rel = reduce(*x, gens_.size());
    } else {
        e.rel.m.assign(gens_.size(), 0);
    }
    gens_.push_back(g);
    info_.push_back(std::move(e));
    return info_.back();
}

representation relation_builder::reduce(std::vector<mpz_class> x, std::size_t upto) const
{
    for (std::size_t j = upto; j-- > 0;) {
        const entry &ej = info_[j];
        if (ej.n.is_inf())
            continue;
        mpz_class nj(ej.n.n), q;
        mpz_fdiv_q(q.get_mpz_t(), x[j].get_mpz_t(), nj.get_mpz_t());
        if (q == 0)
            continue;
        x[j] -= q * nj;
        for (std::size_t l = 0; l < j; ++l)
            x[l] += q * ej.rel.m[l];
    }
    representation r;
    r.m = std::move(x);
    for (auto &v : r.m)
        if (v < 0)
            r.positive = false;
    return r;
}

representation relation_builder::represent(const mpz_class &n, const gvalue &v) const
{
    lattice lat(dim_, gens_);
    auto x = lat.solve(mpq_class(n) * v);
    if (!x)
        throw error(errc::not_in_group, n.get_str() + "*" + v.str() + " is not in the group");
    return reduce(std::move(*x), gens_.size());
}

representation canonical_representation(const mpz_class &n, const gvalue &g,
                                        const std::vector<gvalue> &previous,
                                        const std::vector<index_or_inf> &previous_n)
{
    if (previous.size() != previous_n.size())
        throw error(errc::bad_input, "generator and index lists differ in length");
    relation_builder rb(g.dim());
    for (std::size_t j = 0; j < previous.size(); ++j) {
        auto &e = rb.push(previous[j]);
        if (!(e.n == previous_n[j]))
            throw error(errc::bad_input, "declared index " + previous_n[j].str() +
                                             " of generator " + std::to_string(j) +
                                             " differs from computed " + e.n.str());
    }
    return rb.represent(n, g);
}

std::size_t rational_rank(const std::vector<gvalue> &values, std::size_t dim)
{
    if (values.empty())
        return 0;
    return lattice(dim ? dim : values[0].dim(), values).rank();
}

std::size_t isolated_level(const gvalue &v)
{
    for (std::size_t k = 0; k < v.dim(); ++k)
        if (sgn(v[k]) != 0)
            return v.dim() - k;
    return 0;
}

std::size_t group_rank(const std::vector<gvalue> &values, std::size_t dim)
{
    if (values.empty())
        return 0;
    std::size_t r = dim ? dim : values[0].dim();
    std::size_t total = rational_rank(values, r);
    std::size_t prev = 0, count = 0;
    for (std::size_t k = 1; k <= r; ++k) {
        std::vector<gvalue> proj;
        for (auto &v : values) {
            std::vector<mpq_class> c(v.coords().begin(), v.coords().begin() + (r - k));
            proj.emplace_back(std::move(c));
        }
        std::size_t pr = r - k ? lattice(r - k, proj).rank() : 0;
        std::size_t dk = total - pr;
        if (dk > prev)
            ++count;
        prev = dk;
    }
    return count;
}

bool in_qspan(const gvalue &v, const std::vector<gvalue> &values)
{
    return lattice(v.dim(), values).in_qspan(v);
}

bool in_qspan(const gvalue &v, const gvalue &w)
{
    return in_qspan(v, std::vector<gvalue>{w});
}

} // namespace skpval
