#include "json_io.hpp"

#include <cctype>

#include "skpval/error.hpp"

namespace skpval::io {

static mpq_class rat_from_json(const json &j)
{
    if (j.is_number_integer())
        return mpq_class(mpz_class(std::to_string(j.get<long long>())));
    if (j.is_string())
        return parse_rat(j.get<std::string>());
    throw error(errc::bad_input, "expected an integer or a rational string, got " + j.dump());
}

gvalue value_from_json(const json &j, std::size_t dim)
{
    if (j.is_array()) {
        if (j.size() != dim)
            throw error(errc::dimension_mismatch, "value " + j.dump() + " should have " + std::to_string(dim) +
                                                      " coordinates");
        std::vector<mpq_class> c;
        for (auto &x : j)
            c.push_back(rat_from_json(x));
        return gvalue(std::move(c));
    }
    if (dim != 1)
        throw error(errc::dimension_mismatch, "value " + j.dump() + " should have " + std::to_string(dim) +
                                                  " coordinates");
    return gvalue{rat_from_json(j)};
}

json value_to_json(const gvalue &v)
{
    if (v.dim() == 1)
        return rat_str(v[0]);
    json a = json::array();
    for (auto &c : v.coords())
        a.push_back(rat_str(c));
    return a;
}

field field_from_json(const json &j)
{
    if (j.is_null())
        return field::rationals();
    if (j.is_string()) {
        std::string s = j.get<std::string>();
        if (s == "Q")
            return field::rationals();
        try {
            return field::prime(static_cast<std::uint32_t>(std::stoul(s)));
        } catch (const error &) {
            throw;
        } catch (...) {
            throw error(errc::bad_input, "unknown field '" + s + "'");
        }
    }
    if (j.is_number_unsigned() || j.is_number_integer())
        return field::prime(j.get<std::uint32_t>());
    throw error(errc::bad_input, "field must be \"Q\" or a prime");
}

static std::size_t dim_of(const json &j)
{
    if (!j.is_object())
        throw error(errc::bad_input, "input must be a JSON object");
    if (!j.contains("dimension"))
        return 1;
    long d = j.at("dimension").get<long>();
    if (d < 1)
        throw error(errc::bad_input, "dimension must be positive");
    return static_cast<std::size_t>(d);
}

static std::vector<std::vector<gvalue>> rows_from_json(const json &j, std::size_t dim)
{
    if (!j.contains("rows") || !j.at("rows").is_array() || j.at("rows").empty())
        throw error(errc::bad_input, "\"rows\" must be a nonempty array of rows");
    std::vector<std::vector<gvalue>> rows;
    for (auto &r : j.at("rows")) {
        if (!r.is_array())
            throw error(errc::bad_input, "each row must be an array of values");
        rows.emplace_back();
        for (auto &v : r)
            rows.back().push_back(value_from_json(v, dim));
    }
    return rows;
}

value_table table_from_json(const json &j)
{
    std::size_t dim = dim_of(j);
    auto rows = rows_from_json(j, dim);
    std::map<table_index, unsigned> labels;
    if (j.contains("limit_labels")) {
        if (!j.at("limit_labels").is_object())
            throw error(errc::bad_input, "\"limit_labels\" must map \"i,j\" to a label");
        for (auto &[k, v] : j.at("limit_labels").items())
            labels[table_index::parse(k)] = v.get<unsigned>();
    }
    return value_table::compute_relations(dim, std::move(rows), std::move(labels));
}

affine affine_from_json(const json &j)
{
    if (j.is_number_integer())
        return {j.get<long>(), 0};
    if (j.is_array() && j.size() == 2)
        return {j[0].get<long>(), j[1].get<long>()};
    if (j.is_string()) {
        std::string s;
        for (char c : j.get<std::string>())
            if (!std::isspace(static_cast<unsigned char>(c)))
                s += c;
        auto number = [](const std::string &x, long dflt) {
            if (x.empty())
                return dflt;
            std::size_t used = 0;
            long v = std::stol(x, &used);
            if (used != x.size() || v < 0)
                throw 0;
            return v;
        };
        try {
            if (s.empty())
                throw 0;
            if (s.back() != 'k')
                return {number(s, 0), 0};
            std::size_t plus = s.find('+');
            std::string kpart = plus == std::string::npos ? s : s.substr(plus + 1);
            kpart.pop_back();
            if (!kpart.empty() && kpart.back() == '*')
                kpart.pop_back();
            return {plus == std::string::npos ? 0 : number(s.substr(0, plus), 0), number(kpart, 1)};
        } catch (...) {
        }
    }
    throw error(errc::bad_input, "malformed tail exponent " + j.dump());
}

skp_input skp_from_json(const json &j)
{
    skp_input in;
    in.fld = field_from_json(j.value("field", json()));
    in.table = table_from_json(j);
    if (j.contains("thetas")) {
        if (!j.at("thetas").is_object())
            throw error(errc::bad_input, "\"thetas\" must map \"i,j\" to a rational");
        for (auto &[k, v] : j.at("thetas").items())
            in.thetas[table_index::parse(k)] = scalar(rat_from_json(v), in.fld);
    }
    if (j.contains("limit_tails")) {
        for (auto &t : j.at("limit_tails")) {
            limit_tail tl;
            tl.row = t.at("row").get<int>();
            tl.start = t.at("start").get<int>();
            tl.theta = scalar(rat_from_json(t.value("theta", json(1))), in.fld);
            tl.depth = t.value("depth", tl.depth);
            for (auto &[k, v] : t.at("exponents").items())
                tl.exponents[table_index::parse(k)] = affine_from_json(v);
            in.tails.push_back(std::move(tl));
        }
    }
    if (j.contains("cutoff") && !j.at("cutoff").is_null())
        in.trunc.cutoff = j.at("cutoff").get<unsigned>();
    return in;
}

skp_table build_from_json(const json &j)
{
    auto in = skp_from_json(j);
    return build_skp(in.table, in.thetas, in.tails, in.trunc, in.fld);
}

semigroup_spec semigroup_from_json(const json &j)
{
    semigroup_spec g;
    g.dim = dim_of(j);
    g.fld = field_from_json(j.value("field", json()));
    if (!j.contains("generators") || !j.at("generators").is_array() || j.at("generators").empty())
        throw error(errc::bad_input, "\"generators\" must be a nonempty array");
    for (auto &v : j.at("generators"))
        g.generators.push_back(value_from_json(v, g.dim));
    if (j.contains("limit_labels"))
        g.limit_labels = j.at("limit_labels").get<std::vector<std::size_t>>();
    return g;
}

pseudo_skp_arithmetic arithmetic_from_json(const json &j)
{
    pseudo_skp_arithmetic a;
    a.dim = dim_of(j);
    a.rows = rows_from_json(j, a.dim);
    if (j.contains("infinite"))
        a.infinite = j.at("infinite").get<std::vector<bool>>();
    a.infinite.resize(a.rows.size(), false);
    if (j.contains("levels"))
        a.levels = j.at("levels").get<level_map>();
    return a;
}

alpha_vec alpha_from_string(const std::string &s)
{
    alpha_vec a;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t c = s.find(',', pos);
        std::string part = s.substr(pos, c == std::string::npos ? std::string::npos : c - pos);
        try {
            std::size_t used = 0;
            unsigned long v = std::stoul(part, &used);
            if (used != part.size())
                throw 0;
            a.push_back(static_cast<unsigned>(v));
        } catch (...) {
            throw error(errc::parse_error, "malformed cutoff vector '" + s + "'");
        }
        if (c == std::string::npos)
            break;
        pos = c + 1;
    }
    return a;
}

json report_to_json(const validation_report &r)
{
    json checks = json::array();
    for (auto &c : r.checks) {
        json x = {{"at", c.at.str()}, {"check", c.name}, {"pass", c.pass}};
        if (!c.detail.empty())
            x["detail"] = c.detail;
        checks.push_back(x);
    }
    json tl = json::array();
    for (auto &t : r.truncated_limits)
        tl.push_back(t.str());
    json fails = json::array();
    for (auto &c : r.failures())
        fails.push_back(c.name + " failed at (" + c.at.str() + ")" + (c.detail.empty() ? "" : ": " + c.detail));
    return {{"ok", r.ok()}, {"checks", checks}, {"truncated_limits", tl}, {"failures", fails}};
}

json exp_to_json(const adic_exp &e, const skp_table &s)
{
    json o = json::object();
    for (std::size_t k = 0; k < e.size(); ++k)
        if (e[k])
            o[s.values().at(k).idx.str()] = e[k];
    return o;
}

static json relation_to_json(const std::vector<mpz_class> &rel, const value_table &t)
{
    json o = json::object();
    for (std::size_t k = 0; k < rel.size(); ++k)
        if (rel[k] != 0)
            o[t.at(k).idx.str()] = rel[k].get_str();
    return o;
}

json skp_to_json(const skp_table &s)
{
    const value_table &t = s.values();
    json entries = json::array();
    for (std::size_t k = 0; k < s.size(); ++k) {
        auto &e = t.at(k);
        json x = {{"index", e.idx.str()},
                  {"beta", value_to_json(e.beta)},
                  {"n", e.n.str()},
                  {"relation", relation_to_json(e.rel, t)},
                  {"U", s.U(k).str()},
                  {"degree", s.degree(k)},
                  {"order", s.order(k)},
                  {"theta", s.theta(k).str()}};
        if (e.limit_label)
            x["limit_label"] = *e.limit_label;
        json steps = json::array();
        for (auto &st : s.step(k))
            steps.push_back({{"theta", st.theta.str()}, {"m", exp_to_json(st.m, s)}});
        x["step"] = steps;
        entries.push_back(x);
    }
    json stab = json::object();
    for (auto &[idx, b] : s.stabilized())
        stab[idx.str()] = b;
    json out = {{"entries", entries}, {"field", s.fld().name()}, {"pseudo", s.is_pseudo()}, {"stabilized", stab}};
    out["cutoff"] = s.trunc().active() ? json(*s.trunc().cutoff) : json();
    return out;
}

json expansion_to_json(const adic_expansion &x, const skp_table &s)
{
    json a = json::array();
    for (auto &m : x.monomials)
        a.push_back({{"coeff", m.coeff.str()}, {"exponents", exp_to_json(m.e, s)},
                     {"value", value_to_json(monomial_value(m.e, s))}});
    return a;
}

json invariants_to_json(const invariant_report &r)
{
    json gens = json::array();
    for (auto &g : r.generators)
        gens.push_back(value_to_json(g));
    json out = {{"rk", r.rk},
                {"r_rk", r.r_rk},
                {"tr_deg", r.tr_deg},
                {"rk_increments", r.rk_increments},
                {"r_rk_increments", r.r_rk_increments},
                {"generators", gens},
                {"status", status_name(r.st)},
                {"matches", r.matches}};
    out["table1_row"] = r.table1_row ? json(*r.table1_row) : json();
    out["table1_case"] = r.table1_case ? json(*r.table1_case) : json();
    return out;
}

json abhyankar_to_json(const abhyankar_result &a)
{
    return {{"pass", a.pass}, {"equality", a.equality}};
}

json analysis_to_json(const generator_analysis &a)
{
    json n = json::array(), reps = json::array();
    for (auto &x : a.n)
        n.push_back(x.str());
    for (auto &r : a.reps) {
        json m = json::array();
        for (auto &c : r.m)
            m.push_back(c.get_str());
        reps.push_back(m);
    }
    auto pos = [](const std::optional<std::size_t> &p) { return p ? json(*p + 1) : json(); };
    return {{"n", n},
            {"representations", reps},
            {"positive", a.positive()},
            {"positivity_failure", pos(a.positivity_failure)},
            {"increasing", a.increasing()},
            {"increasing_failure", pos(a.increasing_failure)},
            {"minimal", a.minimal()},
            {"minimality_failure", pos(a.minimality_failure)},
            {"minimality_witness", a.minimality_witness},
            {"r_rk", a.r_rk}};
}

json blocks_to_json(const block_assignment &b)
{
    json blocks = json::array();
    for (std::size_t k = 0; k < b.blocks.size(); ++k) {
        std::vector<std::size_t> pos;
        for (auto p : b.blocks[k])
            pos.push_back(p + 1);
        blocks.push_back({{"row", b.block_row[k]}, {"positions", pos}});
    }
    json rows = json::array();
    for (auto &r : b.table.rows()) {
        json row = json::array();
        for (auto &v : r)
            row.push_back(value_to_json(v));
        rows.push_back(row);
    }
    return {{"mode", mode_name(b.mode)}, {"d", b.d}, {"blocks", blocks}, {"rows", rows},
            {"validation", report_to_json(b.report)}};
}

json realization_to_json(const realization &r)
{
    json keys = json::array();
    for (std::size_t k = 0; k < r.skp->size(); ++k)
        keys.push_back({{"index", r.skp->values().at(k).idx.str()}, {"U", r.skp->U(k).str()}});
    return {{"blocks", blocks_to_json(r.blocks)},
            {"analysis", analysis_to_json(r.analysis)},
            {"key_polynomials", keys},
            {"num_vars", r.blocks.d},
            {"invariants", invariants_to_json(r.invariants)},
            {"abhyankar", abhyankar_to_json(r.abhyankar)},
            {"zero_dimensional", r.zero_dimensional}};
}

json verdict_to_json(const realization_verdict &v)
{
    json wit = json::array();
    for (auto &w : v.attained)
        wit.push_back({{"gamma", value_to_json(w.gamma)},
                       {"coefficients", w.coeffs},
                       {"computed", w.computed.dim() ? value_to_json(w.computed) : json()},
                       {"ok", w.ok}});
    std::size_t in_window = 0, bad = 0;
    for (auto &s : v.samples) {
        in_window += s.in_window;
        bad += !s.ok;
    }
    json out = {{"pass", v.pass},
                {"window", value_to_json(v.window)},
                {"witnesses", wit},
                {"samples", v.samples.size()},
                {"samples_in_window", in_window},
                {"samples_failed", bad}};
    out["failure"] = v.failure ? json(*v.failure) : json();
    return out;
}

json rank_jumps_to_json(const std::vector<rank_jump> &jumps)
{
    json a = json::array();
    for (auto &j : jumps)
        a.push_back({{"position", j.position},
                     {"labelled", j.labelled},
                     {"before", j.before},
                     {"after", j.after},
                     {"pass", j.pass}});
    return a;
}

} // namespace skpval::io
