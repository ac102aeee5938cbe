#include "skpval/realization.hpp"
#include "skpval/error.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <thread>

namespace skpval {

const char *mode_name(reindex_mode m)
{
    return m == reindex_mode::literal ? "literal" : "corrected";
}

static void check_spec(const semigroup_spec &g)
{
    if (g.generators.empty())
        throw error(errc::bad_input, "no generators");
    for (auto &v : g.generators)
        if (v.dim() != g.dim)
            throw error(errc::dimension_mismatch, "generator " + v.str() + " has dimension " +
                                                      std::to_string(v.dim()));
    for (auto p : g.limit_labels)
        if (p < 1 || p > g.generators.size())
            throw error(errc::bad_input, "limit label at position " + std::to_string(p) + " out of range");
}

generator_analysis analyze_generators(const semigroup_spec &g, unsigned minimality_bound)
{
    check_spec(g);
    generator_analysis a;
    relation_builder rb(g.dim);
    const auto &gens = g.generators;
    for (std::size_t j = 0; j < gens.size(); ++j) {
        const auto &e = rb.push(gens[j]);
        a.n.push_back(e.n);
        a.reps.push_back(e.rel);
        if (!a.positivity_failure && (!e.rel.positive || !(gvalue(g.dim) < gens[j])))
            a.positivity_failure = j;
        if (!a.increasing_failure && j + 1 < gens.size() && !e.n.is_inf() &&
            !(mpq_class(e.n.n) * gens[j] < gens[j + 1]))
            a.increasing_failure = j + 1;
        if (!a.minimality_failure && j > 0) {
            std::vector<gvalue> prev(gens.begin(), gens.begin() + j);
            for (auto &el : enumerate_semigroup_witnessed(prev, minimality_bound, g.dim)) {
                if (el.value == gens[j]) {
                    a.minimality_failure = j;
                    a.minimality_witness = el.witness;
                    break;
                }
                if (gens[j] < el.value)
                    break;
            }
        }
    }
    a.r_rk = rational_rank(gens, g.dim);
    return a;
}

std::size_t block_assignment::flat_of(std::size_t p) const
{
    for (std::size_t b = 0; b < blocks.size(); ++b)
        for (std::size_t j = 0; j < blocks[b].size(); ++j)
            if (blocks[b][j] == p)
                return table.flat({static_cast<int>(block_row[b]), static_cast<int>(j + 1)});
    throw error(errc::bad_input, "generator position " + std::to_string(p) + " not assigned");
}

block_assignment reindex(const semigroup_spec &g, reindex_mode mode)
{
    check_spec(g);
    relation_builder rb(g.dim);
    std::vector<bool> inf;
    for (auto &v : g.generators)
        inf.push_back(rb.push(v).n.is_inf());

    block_assignment ba;
    ba.mode = mode;
    for (std::size_t p = 0; p < g.generators.size(); ++p) {
        bool open = mode == reindex_mode::literal ? inf[p] : (p == 0 || inf[p - 1]);
        if (open || ba.blocks.empty())
            ba.blocks.emplace_back();
        ba.blocks.back().push_back(p);
    }
    std::size_t first_row = mode == reindex_mode::literal ? 1 : 0;
    std::vector<std::vector<gvalue>> rows(first_row);
    for (std::size_t b = 0; b < ba.blocks.size(); ++b) {
        ba.block_row.push_back(first_row + b);
        rows.emplace_back();
        for (auto p : ba.blocks[b])
            rows.back().push_back(g.generators[p]);
    }
    ba.d = ba.blocks.size();
    ba.table = value_table::compute_relations(g.dim, std::move(rows));
    ba.report = validate_table(ba.table);
    return ba;
}

static std::string describe(const validation_report &rep)
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

realization realize(const semigroup_spec &g, reindex_mode mode, const std::map<table_index, scalar> &thetas)
{
    realization r;
    r.blocks = reindex(g, mode);
    if (!r.blocks.report.ok())
        throw error(errc::invalid_table, describe(r.blocks.report));
    r.analysis = analyze_generators(g);
    if (!r.analysis.ok()) {
        std::string why;
        if (!r.analysis.positive())
            why = "canonical representation of generator " + std::to_string(*r.analysis.positivity_failure + 1) +
                  " is not positive";
        else if (!r.analysis.increasing())
            why = "increasing condition fails at generator " + std::to_string(*r.analysis.increasing_failure + 1);
        else
            why = "generator " + std::to_string(*r.analysis.minimality_failure + 1) +
                  " lies in the semigroup of its predecessors";
        throw error(errc::unrealizable, why);
    }
    r.skp = std::make_shared<const skp_table>(build_skp(r.blocks.table, thetas, {}, {}, g.fld));
    r.invariants = inductive_invariants(*r.skp);
    r.abhyankar = abhyankar_check(r.invariants, r.blocks.d);
    r.zero_dimensional = r.invariants.tr_deg == 0;
    return r;
}

namespace {

struct sampler {
    std::mt19937_64 rng;
    std::vector<std::size_t> vars;
    unsigned degree_bound;
    field fld;

    poly next()
    {
        std::uniform_int_distribution<int> nterms(1, 4), coeff(-3, 3), deg(0, static_cast<int>(degree_bound));
        std::uniform_int_distribution<std::size_t> pick(0, vars.size() - 1);
        for (;;) {
            poly f;
            int t = nterms(rng);
            for (int k = 0; k < t; ++k) {
                int c = 0;
                while (c == 0)
                    c = coeff(rng);
                unsigned total = static_cast<unsigned>(deg(rng));
                exponent e;
                for (unsigned s = 0; s < total; ++s) {
                    std::size_t v = vars[pick(rng)];
                    if (e.size() <= v)
                        e.resize(v + 1, 0);
                    ++e[v];
                }
                trim(e);
                f.add_term(e, scalar(c, fld));
            }
            if (!f.is_zero())
                return f;
        }
    }
};

} // namespace

realization_verdict verify_realization(const realization &r, const semigroup_spec &g, const verify_options &opt)
{
    check_spec(g);
    realization_verdict out;
    skp_valuation v = r.valuation();
    const skp_table &s = *r.skp;

    auto elems = enumerate_semigroup_witnessed(g.generators, opt.coeff_bound, g.dim);
    gvalue gmin = *std::min_element(g.generators.begin(), g.generators.end());
    out.window = mpq_class(opt.coeff_bound + 1) * gmin;
    std::set<std::vector<mpq_class>> known;
    for (auto &el : elems)
        known.insert(el.value.coords());

    for (auto &el : elems) {
        realization_verdict::witness w;
        w.gamma = el.value;
        w.coeffs = el.witness;
        poly f(scalar(1L, s.fld()));
        for (std::size_t p = 0; p < el.witness.size(); ++p)
            if (el.witness[p])
                f = mul(f, pow(s.U(r.blocks.flat_of(p)), el.witness[p], s.trunc()), s.trunc());
        std::string why;
        try {
            w.computed = value_of(f, v);
            w.ok = w.computed == el.value;
            why = "product has value " + w.computed.str();
        } catch (const error &e) {
            why = e.what();
        }
        if (!w.ok && out.pass) {
            out.pass = false;
            out.failure = "no attainment for " + el.value.str() + ": " + why;
        }
        out.attained.push_back(std::move(w));
    }

    sampler smp{std::mt19937_64(opt.seed), s.variable_rows(), opt.degree_bound, s.fld()};
    std::vector<poly> polys;
    for (unsigned k = 0; k < opt.samples; ++k)
        polys.push_back(smp.next());
    out.samples.resize(polys.size());
    std::vector<std::string> errors(polys.size());
    auto work = [&](std::size_t from, std::size_t step) {
        for (std::size_t k = from; k < polys.size(); k += step) {
            auto &o = out.samples[k];
            o.poly = polys[k].str();
            try {
                o.value = value_of(polys[k], v);
                o.in_window = o.value < out.window;
                o.ok = !o.in_window || known.count(o.value.coords());
            } catch (const error &e) {
                errors[k] = e.what();
            }
        }
    };
    unsigned jobs = std::max(1u, opt.jobs);
    if (jobs == 1) {
        work(0, 1);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < jobs; ++t)
            pool.emplace_back(work, t, jobs);
        for (auto &th : pool)
            th.join();
    }
    for (std::size_t k = 0; k < polys.size(); ++k) {
        if (out.samples[k].ok || !out.pass)
            continue;
        out.pass = false;
        out.failure = errors[k].empty()
                          ? "value " + out.samples[k].value.str() + " of " + out.samples[k].poly +
                                " is below the window but not in the semigroup"
                          : "evaluating " + out.samples[k].poly + ": " + errors[k];
    }
    return out;
}

std::vector<rank_jump> rank_jump_check(const semigroup_spec &g)
{
    check_spec(g);
    relation_builder rb(g.dim);
    std::set<std::size_t> positions(g.limit_labels.begin(), g.limit_labels.end());
    for (std::size_t p = 0; p < g.generators.size(); ++p)
        if (rb.push(g.generators[p]).n.is_inf())
            positions.insert(p + 1);
    std::set<std::size_t> labelled(g.limit_labels.begin(), g.limit_labels.end());
    std::vector<rank_jump> out;
    for (auto p : positions) {
        std::vector<gvalue> prefix(g.generators.begin(), g.generators.begin() + (p - 1));
        std::size_t before = prefix.empty() ? 0 : rational_rank(prefix, g.dim);
        prefix.push_back(g.generators[p - 1]);
        std::size_t after = rational_rank(prefix, g.dim);
        out.push_back({p, labelled.count(p) > 0, before, after, after == before + 1});
    }
    return out;
}

} // namespace skpval
