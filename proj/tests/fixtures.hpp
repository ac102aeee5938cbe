#pragma once

#include <memory>
#include <random>
#include <vector>

#include "skpval/realization.hpp"

namespace fixtures {

using namespace skpval;

inline gvalue q(const char *s) { return gvalue{parse_rat(s)}; }
inline gvalue v2(long a, long b) { return gvalue{mpq_class(a), mpq_class(b)}; }
inline gvalue v3(long a, long b, long c) { return gvalue{mpq_class(a), mpq_class(b), mpq_class(c)}; }

/* Values (2,3,9,10) on two variables. */
inline std::shared_ptr<const skp_table> diffskp()
{
    auto t = value_table::compute_relations(1, {{q("2")}, {q("3"), q("9"), q("10")}});
    return std::make_shared<const skp_table>(build_skp(t));
}

/* Primes (2,3,5) on three variables, second row repeating the first. */
inline std::shared_ptr<const skp_table> example2()
{
    std::vector<gvalue> r = {q("1/2"), q("4/3"), q("21/5")};
    auto t = value_table::compute_relations(1, {{q("1")}, r, r});
    return std::make_shared<const skp_table>(build_skp(t));
}

/* A rank-two table on three variables. */
inline std::shared_ptr<const skp_table> rank2()
{
    auto t = value_table::compute_relations(
        2, {{v2(0, 2)}, {v2(0, 3), v2(1, 0)}, {v2(0, 5), v2(1, 3)}});
    return std::make_shared<const skp_table>(build_skp(t));
}

/* Reverse-lex values (j, n+2, 0) written in lex coordinates as (0, n+2, j):
 * blocks n = 0, 1, 2 of five successors each, separated by limit entries
 * (0, n+2, 0) reached through tails X0^{5+k} X1^{n+2}. */
inline value_table example1_table()
{
    std::vector<gvalue> row2;
    std::map<table_index, unsigned> labels;
    for (long n = 0; n <= 2; ++n) {
        if (n > 0) {
            row2.push_back(v3(0, n + 2, 0));
            labels[{2, static_cast<int>(row2.size())}] = static_cast<unsigned>(n);
        }
        for (long j = 1; j <= 5; ++j)
            row2.push_back(v3(0, n + 2, j));
    }
    return value_table::compute_relations(3, {{v3(0, 0, 1)}, {v3(0, 1, 0)}, row2}, labels);
}

inline std::vector<limit_tail> example1_tails()
{
    std::vector<limit_tail> tails;
    for (long n = 0; n < 2; ++n) {
        limit_tail tl;
        tl.row = 2;
        tl.start = static_cast<int>(6 * n + 5);
        tl.exponents[{0, 1}] = {5, 1};
        tl.exponents[{1, 1}] = {n + 2, 0};
        tails.push_back(tl);
    }
    return tails;
}

inline std::shared_ptr<const skp_table> example1()
{
    return std::make_shared<const skp_table>(build_skp(example1_table(), {}, example1_tails()));
}

/* Random polynomial in the given variables: 1..max_terms terms, total
 * degree <= deg, coefficients in [-5, 5] \ {0}. */
inline poly random_poly(std::mt19937_64 &rng, const std::vector<std::size_t> &vars, unsigned deg,
                        unsigned max_terms = 5, field f = {})
{
    std::uniform_int_distribution<unsigned> nt(1, max_terms), dd(0, deg);
    std::uniform_int_distribution<int> cc(-5, 5);
    std::uniform_int_distribution<std::size_t> pick(0, vars.size() - 1);
    for (;;) {
        poly p;
        unsigned t = nt(rng);
        for (unsigned k = 0; k < t; ++k) {
            int c = 0;
            while (c == 0)
                c = cc(rng);
            exponent e;
            for (unsigned d = dd(rng); d > 0; --d) {
                std::size_t x = vars[pick(rng)];
                if (e.size() <= x)
                    e.resize(x + 1, 0);
                ++e[x];
            }
            trim(e);
            p.add_term(e, scalar(c, f));
        }
        if (!p.is_zero())
            return p;
    }
}

} // namespace fixtures
