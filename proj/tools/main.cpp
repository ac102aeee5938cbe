#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <openssl/evp.h>

#include "json_io.hpp"
#include "skpval/error.hpp"

using namespace skpval;
using nlohmann::json;

namespace {

struct options {
    std::string input;
    std::string out;
    std::string poly;
    std::string alpha;
    bool minimal = false;
    bool profile = false;
    unsigned j = 1;
    std::string mode = "corrected";
    bool verify = false;
    bool inductive = false;
    unsigned coeff_bound = 4;
    unsigned degree_bound = 8;
    unsigned samples = 200;
    std::uint64_t seed = 1;
    unsigned jobs = 1;
};

/* Outcome of a command: 0 ok, 1 domain failure. */
struct outcome {
    json result = json::object();
    std::vector<std::string> diagnostics;
    bool failed = false;
};

std::string sha256_hex(const std::string &data)
{
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr);
    static const char *hex = "0123456789abcdef";
    std::string s;
    for (unsigned k = 0; k < len; ++k) {
        s += hex[md[k] >> 4];
        s += hex[md[k] & 15];
    }
    return s;
}

bool malformed(errc c)
{
    return c == errc::parse_error || c == errc::bad_input || c == errc::dimension_mismatch ||
           c == errc::field_mismatch;
}

std::shared_ptr<const skp_table> load_skp(const json &in, const options &o)
{
    auto s = io::build_from_json(in);
    if (o.minimal)
        return std::make_shared<const skp_table>(minimal_pseudo_skp(s));
    return std::make_shared<const skp_table>(std::move(s));
}

skp_valuation load_valuation(const json &in, const options &o)
{
    auto s = load_skp(in, o);
    return skp_valuation(s, o.alpha.empty() ? alpha_vec{} : io::alpha_from_string(o.alpha));
}

poly need_poly(const options &o, const skp_table &s)
{
    if (o.poly.empty())
        throw error(errc::bad_input, "--poly is required");
    return parse_poly(o.poly, s.fld());
}

outcome cmd_validate(const json &in, const options &)
{
    outcome r;
    auto rep = validate_table(io::table_from_json(in));
    r.result = io::report_to_json(rep);
    for (auto &f : r.result["failures"])
        r.diagnostics.push_back(f.get<std::string>());
    r.failed = !rep.ok();
    return r;
}

outcome cmd_build(const json &in, const options &o)
{
    outcome r;
    auto s = load_skp(in, o);
    r.result = io::skp_to_json(*s);
    return r;
}

outcome cmd_expand(const json &in, const options &o)
{
    outcome r;
    auto v = load_valuation(in, o);
    poly f = need_poly(o, v.skp());
    auto x = adic_expand(f, v.skp(), v.alpha());
    r.result["poly"] = f.str();
    r.result["alpha"] = v.alpha();
    r.result["monomials"] = io::expansion_to_json(x, v.skp());
    return r;
}

outcome cmd_eval(const json &in, const options &o)
{
    outcome r;
    auto v = load_valuation(in, o);
    poly f = need_poly(o, v.skp());
    gvalue a = value_of(f, v);
    r.result["poly"] = f.str();
    r.result["value"] = io::value_to_json(a);
    if (!v.skp().trunc().active()) {
        gvalue e = value_via_euclidean(f, v);
        r.result["value_euclidean"] = io::value_to_json(e);
        r.result["routes_agree"] = a == e;
        if (!(a == e)) {
            r.failed = true;
            r.diagnostics.push_back("adic value " + a.str() + " differs from Euclidean value " + e.str());
        }
    } else {
        r.result["cutoff"] = *v.skp().trunc().cutoff;
    }
    if (o.profile) {
        std::vector<unsigned> cut;
        for (unsigned j = 1; j <= v.alpha()[v.skp().top_row()]; ++j)
            cut.push_back(j);
        auto st = stabilization_profile(f, v, cut);
        json vals = json::array();
        for (auto &x : st.values)
            vals.push_back(io::value_to_json(x));
        r.result["profile"] = {{"cutoffs", st.cutoffs},
                               {"values", vals},
                               {"non_decreasing", st.non_decreasing},
                               {"stable_from", st.stable_from ? json(st.cutoffs[*st.stable_from]) : json()}};
    }
    return r;
}

outcome cmd_initial(const json &in, const options &o)
{
    outcome r;
    auto v = load_valuation(in, o);
    poly f = need_poly(o, v.skp());
    auto x = initial_form(f, v);
    r.result["poly"] = f.str();
    r.result["value"] = io::value_to_json(value_of(x, v.skp()));
    r.result["initial"] = io::expansion_to_json(x, v.skp());
    return r;
}

outcome cmd_delta(const json &in, const options &o)
{
    outcome r;
    auto v = load_valuation(in, o);
    poly f = need_poly(o, v.skp());
    r.result["poly"] = f.str();
    r.result["j"] = o.j;
    r.result["delta"] = delta_of(f, v, o.j);
    return r;
}

outcome cmd_normal_form(const json &in, const options &o)
{
    outcome r;
    auto v = load_valuation(in, o);
    poly f = need_poly(o, v.skp());
    auto g = graded_normal_form(f, v);
    r.result["poly"] = f.str();
    r.result["J"] = io::exp_to_json(g.J, v.skp());
    r.result["p"] = g.p.str("T");
    r.result["torus_rows"] = g.torus_rows;
    r.result["value"] = io::value_to_json(g.value);
    return r;
}

outcome cmd_classify(const json &in, const options &o)
{
    outcome r;
    std::vector<bool> inf;
    if (in.contains("infinite"))
        inf = in.at("infinite").get<std::vector<bool>>();
    std::size_t nvars;
    invariant_report rep;
    if (o.inductive) {
        auto s = load_skp(in, o);
        rep = inductive_invariants(*s, inf);
        nvars = s->values().num_rows();
    } else {
        auto a = io::arithmetic_from_json(in);
        rep = classify_table1(a);
        nvars = a.rows.size();
        if (rep.st != invariant_report::status::ok) {
            r.failed = true;
            r.diagnostics.push_back(std::string(status_name(rep.st)) + ": matched " +
                                    std::to_string(rep.matches.size()) + " cases");
        }
    }
    r.result = io::invariants_to_json(rep);
    if (!r.failed) {
        auto ab = abhyankar_check(rep, nvars);
        r.result["abhyankar"] = io::abhyankar_to_json(ab);
        r.result["num_vars"] = nvars;
        if (!ab.pass) {
            r.failed = true;
            r.diagnostics.push_back("Abhyankar inequality fails");
        }
    }
    return r;
}

outcome cmd_realize(const json &in, const options &o)
{
    outcome r;
    auto g = io::semigroup_from_json(in);
    reindex_mode mode;
    if (o.mode == "literal")
        mode = reindex_mode::literal;
    else if (o.mode == "corrected")
        mode = reindex_mode::corrected;
    else
        throw error(errc::bad_input, "unknown mode '" + o.mode + "'");
    auto jumps = rank_jump_check(g);
    r.result["rank_jumps"] = io::rank_jumps_to_json(jumps);
    for (auto &j : jumps)
        if (!j.pass)
            r.diagnostics.push_back("rational rank does not rise by one at position " + std::to_string(j.position));
    auto ba = reindex(g, mode);
    if (!ba.report.ok()) {
        r.result["blocks"] = io::blocks_to_json(ba);
        r.result["analysis"] = io::analysis_to_json(analyze_generators(g));
        for (auto &f : ba.report.failures())
            r.diagnostics.push_back(f.name + " failed at (" + f.at.str() + ")" + (f.detail.empty() ? "" : ": " + f.detail));
        r.failed = true;
        return r;
    }
    auto real = realize(g, mode);
    r.result.update(io::realization_to_json(real));
    if (o.verify) {
        verify_options vo{o.coeff_bound, o.degree_bound, o.samples, o.seed, o.jobs};
        auto verdict = verify_realization(real, g, vo);
        r.result["verdict"] = io::verdict_to_json(verdict);
        r.result["seed"] = o.seed;
        if (!verdict.pass) {
            r.failed = true;
            r.diagnostics.push_back(*verdict.failure);
        }
    }
    return r;
}

/* Random sweep over an SKP: expansions evaluate back to the input, the two
 * value routes agree, and initial forms are well defined. */
outcome cmd_verify(const json &in, const options &o)
{
    outcome r;
    auto v = load_valuation(in, o);
    const skp_table &s = v.skp();
    auto vars = s.variable_rows();
    std::mt19937_64 rng(o.seed);
    std::uniform_int_distribution<int> nterms(1, 5), coeff(-3, 3), deg(0, static_cast<int>(o.degree_bound));
    std::uniform_int_distribution<std::size_t> pick(0, vars.size() - 1);
    std::vector<poly> polys;
    while (polys.size() < o.samples) {
        poly f;
        int t = nterms(rng);
        for (int k = 0; k < t; ++k) {
            int c = 0;
            while (c == 0)
                c = coeff(rng);
            exponent e;
            for (int d = deg(rng); d > 0; --d) {
                std::size_t x = vars[pick(rng)];
                if (e.size() <= x)
                    e.resize(x + 1, 0);
                ++e[x];
            }
            f.add_term(e, scalar(c, s.fld()));
        }
        if (!f.is_zero() && !s.trunc().apply(f).is_zero())
            polys.push_back(std::move(f));
    }
    std::vector<std::string> problems(polys.size());
    auto work = [&](std::size_t from, std::size_t step) {
        for (std::size_t k = from; k < polys.size(); k += step) {
            const poly &f = polys[k];
            try {
                auto x = adic_expand(f, s, v.alpha());
                poly back = evaluate(x, s);
                poly ft = f;
                s.trunc().apply(ft);
                if (!(back == ft)) {
                    problems[k] = "expansion of " + f.str() + " does not evaluate back";
                    continue;
                }
                initial_form(f, v);
                if (!s.trunc().active() && !(value_of(x, s) == value_via_euclidean(f, v)))
                    problems[k] = "value routes disagree on " + f.str();
            } catch (const error &e) {
                problems[k] = f.str() + ": " + e.what();
            }
        }
    };
    unsigned jobs = std::max(1u, o.jobs);
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < jobs; ++t)
        pool.emplace_back(work, t, jobs);
    work(0, jobs);
    for (auto &th : pool)
        th.join();
    std::size_t bad = 0;
    for (auto &p : problems)
        if (!p.empty()) {
            ++bad;
            if (r.diagnostics.size() < 20)
                r.diagnostics.push_back(p);
        }
    r.result = {{"samples", polys.size()}, {"failed", bad}, {"seed", o.seed},
                {"euclidean_checked", !s.trunc().active()}};
    r.failed = bad > 0;
    return r;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"skpval: valuations from sequences of key polynomials"};
    app.set_version_flag("--version", SKPVAL_VERSION);
    app.require_subcommand(1);

    options o;
    if (const char *env = std::getenv("SKPVAL_JOBS")) {
        try {
            o.jobs = static_cast<unsigned>(std::stoul(env));
        } catch (...) {
        }
    }

    auto add_input = [&](CLI::App *c) {
        c->add_option("input", o.input, "Input JSON file");
        c->add_option("--skp,--in", o.input, "Input JSON file");
        c->add_option("-o,--out", o.out, "Write the report here instead of stdout");
    };
    auto add_poly = [&](CLI::App *c) {
        c->add_option("-p,--poly", o.poly, "Polynomial, e.g. \"X1^2 - X0^3\"")->required();
        c->add_option("--alpha", o.alpha, "Cutoff vector, e.g. 1,3");
        c->add_flag("--minimal", o.minimal, "Use the minimal pseudo-SKP");
    };
    auto add_random = [&](CLI::App *c) {
        c->add_option("--seed", o.seed, "Random seed");
        c->add_option("--jobs", o.jobs, "Worker threads (default $SKPVAL_JOBS or 1)");
        c->add_option("--degree-bound", o.degree_bound, "Degree bound for random polynomials");
        c->add_option("--samples", o.samples, "Number of random polynomials");
    };

    std::map<CLI::App *, outcome (*)(const json &, const options &)> handlers;
    auto sub = [&](const char *name, const char *help, outcome (*fn)(const json &, const options &)) {
        auto *c = app.add_subcommand(name, help);
        add_input(c);
        handlers[c] = fn;
        return c;
    };

    sub("validate", "Check a value table", cmd_validate);
    sub("build", "Construct the key polynomials of a table", cmd_build)
        ->add_flag("--minimal", o.minimal, "Reduce to the minimal pseudo-SKP");
    add_poly(sub("expand", "Adic expansion of a polynomial", cmd_expand));
    auto *ev = sub("eval", "Value of a polynomial", cmd_eval);
    add_poly(ev);
    ev->add_flag("--profile", o.profile, "Values for every cutoff of the top row");
    add_poly(sub("initial", "Initial form of a polynomial", cmd_initial));
    auto *de = sub("delta", "Top-row degree of the initial form", cmd_delta);
    add_poly(de);
    de->add_option("-j", o.j, "Cutoff position in the top row")->required();
    add_poly(sub("normal-form", "Graded normal form p(T) U^J of the initial form", cmd_normal_form));
    auto *cl = sub("classify", "Numerical invariants", cmd_classify);
    cl->add_flag("--inductive", o.inductive, "Build the SKP and accumulate the invariants row by row");
    auto *re = sub("realize", "Realize a semigroup as a value semigroup", cmd_realize);
    re->add_option("--mode", o.mode, "literal or corrected")->check(CLI::IsMember({"literal", "corrected"}));
    re->add_flag("--verify", o.verify, "Brute-force verification of the value semigroup");
    re->add_option("--coeff-bound", o.coeff_bound, "Generator coefficient bound");
    add_random(re);
    auto *ve = sub("verify", "Random consistency sweep over an SKP", cmd_verify);
    add_random(ve);
    ve->add_option("--alpha", o.alpha, "Cutoff vector");
    ve->add_flag("--minimal", o.minimal, "Use the minimal pseudo-SKP");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    CLI::App *chosen = app.get_subcommands().front();
    json report = {{"tool", "skpval"}, {"version", SKPVAL_VERSION}, {"command", chosen->get_name()}};
    if (chosen == re || chosen == ve)
        std::cerr << "seed: " << o.seed << "\n";

    int code = 0;
    std::string text;
    if (o.input.empty()) {
        std::cerr << "skpval: an input file is required\n";
        return 2;
    }
    {
        std::ifstream f(o.input, std::ios::binary);
        if (!f) {
            std::cerr << "skpval: cannot read " << o.input << "\n";
            return 2;
        }
        std::ostringstream ss;
        ss << f.rdbuf();
        text = ss.str();
    }
    report["input_sha256"] = sha256_hex(text);
    try {
        json in = json::parse(text);
        outcome r = handlers.at(chosen)(in, o);
        report["result"] = r.result;
        report["diagnostics"] = r.diagnostics;
        report["status"] = r.failed ? "failed" : "ok";
        code = r.failed ? 1 : 0;
    } catch (const error &e) {
        code = malformed(e.code()) ? 2 : 1;
        report["status"] = "error";
        report["error"] = errc_name(e.code());
        report["diagnostics"] = {e.what()};
    } catch (const json::exception &e) {
        code = 2;
        report["status"] = "error";
        report["error"] = "BAD_INPUT";
        report["diagnostics"] = {e.what()};
    }

    std::string out = report.dump(2) + "\n";
    if (o.out.empty()) {
        std::cout << out;
    } else {
        std::ofstream f(o.out, std::ios::binary);
        if (!f) {
            std::cerr << "skpval: cannot write " << o.out << "\n";
            return 2;
        }
        f << out;
    }
    if (code)
        std::cerr << "skpval: " << report["status"].get<std::string>() << ": "
                  << (report["diagnostics"].empty() ? std::string() : report["diagnostics"][0].get<std::string>())
                  << "\n";
    return code;
}
