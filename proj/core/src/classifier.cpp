#include "skpval/classifier.hpp"
#include "skpval/error.hpp"

#include <algorithm>
#include <set>

namespace skpval {

const char *status_name(invariant_report::status s)
{
    switch (s) {
    case invariant_report::status::ok:
        return "ok";
    case invariant_report::status::ambiguous:
        return "AMBIGUOUS";
    case invariant_report::status::unclassified:
        return "UNCLASSIFIED";
    }
    return "?";
}

pseudo_skp_arithmetic pseudo_skp_arithmetic::of(const skp_table &s, const std::vector<bool> &infinite)
{
    skp_table m = s.is_pseudo() ? s : minimal_pseudo_skp(s);
    pseudo_skp_arithmetic a;
    a.dim = m.values().dim();
    a.rows = m.values().rows();
    a.infinite = infinite;
    a.infinite.resize(a.rows.size(), false);
    return a;
}

unsigned level_of(const gvalue &v, const level_map &levels)
{
    if (levels.empty())
        return static_cast<unsigned>(isolated_level(v));
    if (levels.size() != v.dim())
        throw error(errc::dimension_mismatch, "level map has " + std::to_string(levels.size()) +
                                                  " entries for dimension " + std::to_string(v.dim()));
    unsigned l = 0;
    for (std::size_t c = 0; c < v.dim(); ++c)
        if (sgn(v[c]) != 0)
            l = std::max(l, levels[c]);
    return l;
}

/* Levels at which the group generated by the values gains rational rank;
 * these index its nonzero isolated subgroups. */
static std::vector<unsigned> jump_levels(const std::vector<gvalue> &group, const level_map &levels)
{
    std::vector<unsigned> out;
    if (group.empty())
        return out;
    std::size_t r = group[0].dim();
    level_map lv = levels;
    if (lv.empty())
        for (std::size_t c = 0; c < r; ++c)
            lv.push_back(static_cast<unsigned>(r - c));
    std::set<unsigned> present(lv.begin(), lv.end());
    std::size_t total = rational_rank(group, r);
    std::size_t prev = 0;
    for (unsigned l : present) {
        // rank of the part above level l
        std::vector<std::size_t> above;
        for (std::size_t c = 0; c < r; ++c)
            if (lv[c] > l)
                above.push_back(c);
        std::size_t pr = 0;
        if (!above.empty()) {
            std::vector<gvalue> proj;
            for (auto &v : group) {
                std::vector<mpq_class> c;
                for (auto k : above)
                    c.push_back(v[k]);
                proj.emplace_back(std::move(c));
            }
            pr = lattice(above.size(), proj).rank();
        }
        std::size_t dl = total - pr;
        if (dl > prev)
            out.push_back(l);
        prev = dl;
    }
    return out;
}

bool in_isolated(const gvalue &v, std::size_t k, const std::vector<gvalue> &group, const level_map &levels)
{
    if (k == 0)
        return v.is_zero();
    auto L = jump_levels(group, levels);
    if (k > L.size())
        return true;
    return level_of(v, levels) <= L[k - 1];
}

invariant_report inductive_invariants(const skp_table &s, const std::vector<bool> &declared_infinite)
{
    const value_table &t = s.values();
    invariant_report rep;
    rep.generators = t.betas();
    std::vector<gvalue> below, counted;
    std::size_t prev_rk = 0;
    for (std::size_t i = 0; i < t.num_rows(); ++i) {
        bool inf = i < declared_infinite.size() && declared_infinite[i];
        std::size_t len = t.row_len(i);
        std::size_t inc = 0, rk_inc = 0;
        if (len && !inf) {
            std::size_t kf = t.flat({static_cast<int>(i), static_cast<int>(len)});
            const gvalue &b = t.at(kf).beta;
            if (below.empty() || !in_qspan(b, below))
                inc = 1;
            if (!t.at(kf).n.is_inf())
                ++rep.tr_deg;
            for (auto &v : t.rows()[i])
                counted.push_back(v);
            std::size_t rk = group_rank(counted, t.dim());
            rk_inc = rk - prev_rk;
            prev_rk = rk;
        }
        for (auto &v : t.rows()[i])
            below.push_back(v);
        rep.r_rk += inc;
        rep.r_rk_increments.push_back(inc);
        rep.rk_increments.push_back(rk_inc);
    }
    rep.rk = prev_rk;
    return rep;
}

namespace {

struct table1_case {
    const char *name;
    const char *row;
    std::size_t rk, r_rk, tr;
};

} // namespace

invariant_report classify_table1(const pseudo_skp_arithmetic &a)
{
    if (a.rows.size() != 3)
        throw error(errc::bad_input, "the table lookup needs exactly three rows");
    if (a.rows[0].size() != 1)
        throw error(errc::bad_input, "row 0 of a minimal pseudo-SKP holds exactly one value");
    for (std::size_t i = 1; i < 3; ++i)
        if (a.rows[i].empty())
            throw error(errc::bad_input, "row " + std::to_string(i) + " is empty");
    std::vector<gvalue> all;
    for (auto &r : a.rows)
        for (auto &v : r) {
            if (v.dim() != a.dim)
                throw error(errc::dimension_mismatch, "value " + v.str() + " has the wrong dimension");
            all.push_back(v);
        }
    const gvalue &b0 = a.rows[0][0];
    if (!in_isolated(b0, 1, all, a.levels))
        throw error(errc::hypothesis_violated, "beta_{0,1} = " + b0.str() + " is not in the smallest isolated subgroup");

    bool inf1 = a.infinite.size() > 1 && a.infinite[1];
    bool inf2 = a.infinite.size() > 2 && a.infinite[2];
    const gvalue &b1 = a.rows[1].back();
    const gvalue &b2 = a.rows[2].back();
    auto Q = [&](const gvalue &v) { return in_qspan(v, b0); };
    auto D = [&](const gvalue &v, std::size_t k) { return in_isolated(v, k, all, a.levels); };
    auto span = [&](const gvalue &v, const gvalue &w) { return in_qspan(v, std::vector<gvalue>{b0, w}); };
    bool all_q = std::all_of(all.begin(), all.end(), Q);
    bool all_d1 = std::all_of(all.begin(), all.end(), [&](const gvalue &v) { return D(v, 1); });
    // The largest row-final value is the one of highest level.
    const gvalue *mx = &b0;
    for (const gvalue *b : {&b1, &b2})
        if (level_of(*b, a.levels) > level_of(*mx, a.levels))
            mx = b;
    bool ff = !inf1 && !inf2;

    std::vector<std::pair<table1_case, bool>> cases = {
        {{"I", "I", 1, 1, 2}, ff && all_q},
        {{"II_1", "II", 1, 2, 1}, ff && all_d1 && Q(b1) && D(b2, 1) && !Q(b2)},
        {{"II_2", "II", 1, 2, 1}, ff && all_d1 && D(b1, 1) && !Q(b1) && Q(b2)},
        {{"III_1", "III", 1, 1, 1}, inf1 && !inf2 && all_q},
        {{"III_2", "III", 1, 1, 1}, !inf1 && inf2 && all_q},
        {{"IV", "IV", 1, 3, 0}, ff && D(b1, 1) && !Q(b1) && D(b2, 1) && !span(b2, b1)},
        {{"V_1", "V", 1, 2, 0}, inf1 && !inf2 && D(b2, 1) && !Q(b2)},
        {{"V_2", "V", 1, 2, 0}, !inf1 && inf2 && D(b1, 1) && !Q(b1)},
        {{"VI", "VI", 2, 2, 1}, ff && D(*mx, 2) && !D(*mx, 1) && span(b1, b2)},
        {{"VII_1", "VII", 3, 3, 0}, ff && D(b1, 2) && !D(b1, 1) && !D(b2, 2)},
        {{"VII_2", "VII", 3, 3, 0}, ff && D(b2, 2) && !D(b2, 1) && !D(b1, 2)},
        {{"VIII_1", "VIII", 2, 2, 0}, inf1 && !inf2 && D(b2, 2) && !D(b2, 1)},
        {{"VIII_2", "VIII", 2, 2, 0}, !inf1 && inf2 && D(b1, 2) && !D(b1, 1)},
        {{"IX", "IX", 2, 3, 0}, ff && D(*mx, 2) && !D(*mx, 1) && D(b1, 2) && !span(b1, b2)},
        {{"X", "X", 1, 1, 0}, inf1 && inf2},
    };

    invariant_report rep;
    rep.generators = all;
    std::set<std::tuple<std::size_t, std::size_t, std::size_t>> triples;
    const table1_case *hit = nullptr;
    for (auto &[c, m] : cases) {
        if (!m)
            continue;
        rep.matches.push_back(c.name);
        triples.insert({c.rk, c.r_rk, c.tr});
        if (!hit)
            hit = &c;
    }
    if (!hit) {
        rep.st = invariant_report::status::unclassified;
        return rep;
    }
    if (triples.size() > 1) {
        rep.st = invariant_report::status::ambiguous;
        return rep;
    }
    rep.rk = hit->rk;
    rep.r_rk = hit->r_rk;
    rep.tr_deg = hit->tr;
    rep.table1_row = hit->row;
    rep.table1_case = hit->name;
    return rep;
}

abhyankar_result abhyankar_check(const invariant_report &rep, std::size_t num_vars)
{
    abhyankar_result r;
    r.pass = rep.rk <= rep.r_rk && rep.r_rk + rep.tr_deg <= num_vars;
    r.equality = rep.r_rk + rep.tr_deg == num_vars;
    return r;
}

} // namespace skpval
