#include <benchmark/benchmark.h>

#include <random>

#include "skpval/realization.hpp"

using namespace skpval;

namespace {

gvalue q(const char *s) { return gvalue{parse_rat(s)}; }

std::shared_ptr<const skp_table> diffskp()
{
    auto t = value_table::compute_relations(1, {{q("2")}, {q("3"), q("9"), q("10")}});
    return std::make_shared<const skp_table>(build_skp(t));
}

std::shared_ptr<const skp_table> three_primes()
{
    std::vector<gvalue> r = {q("1/2"), q("4/3"), q("21/5")};
    auto t = value_table::compute_relations(1, {{q("1")}, r, r});
    return std::make_shared<const skp_table>(build_skp(t));
}

std::vector<poly> inputs(std::size_t vars, unsigned deg, std::size_t count)
{
    std::mt19937_64 rng(1);
    std::uniform_int_distribution<int> c(-5, 5);
    std::uniform_int_distribution<std::size_t> v(0, vars - 1);
    std::vector<poly> out;
    while (out.size() < count) {
        poly p;
        for (int t = 0; t < 5; ++t) {
            exponent e(vars, 0);
            for (unsigned d = 0; d < deg; ++d)
                ++e[v(rng)];
            trim(e);
            if (int k = c(rng))
                p.add_term(e, scalar(static_cast<long>(k)));
        }
        if (!p.is_zero())
            out.push_back(std::move(p));
    }
    return out;
}

void BM_adic_expand(benchmark::State &st)
{
    auto s = three_primes();
    auto fs = inputs(3, static_cast<unsigned>(st.range(0)), 32);
    alpha_vec full = s->full_alpha();
    std::size_t k = 0;
    for (auto _ : st)
        benchmark::DoNotOptimize(adic_expand(fs[k++ % fs.size()], *s, full));
}
BENCHMARK(BM_adic_expand)->Arg(4)->Arg(8)->Arg(12);

void BM_value_of(benchmark::State &st)
{
    skp_valuation nu(three_primes());
    auto fs = inputs(3, static_cast<unsigned>(st.range(0)), 32);
    std::size_t k = 0;
    for (auto _ : st)
        benchmark::DoNotOptimize(value_of(fs[k++ % fs.size()], nu));
}
BENCHMARK(BM_value_of)->Arg(4)->Arg(8)->Arg(12);

void BM_value_via_euclidean(benchmark::State &st)
{
    skp_valuation nu(three_primes());
    auto fs = inputs(3, static_cast<unsigned>(st.range(0)), 32);
    std::size_t k = 0;
    for (auto _ : st)
        benchmark::DoNotOptimize(value_via_euclidean(fs[k++ % fs.size()], nu));
}
BENCHMARK(BM_value_via_euclidean)->Arg(4)->Arg(8)->Arg(12);

void BM_initial_form(benchmark::State &st)
{
    skp_valuation nu(diffskp());
    auto fs = inputs(2, 10, 32);
    std::size_t k = 0;
    for (auto _ : st)
        benchmark::DoNotOptimize(initial_form(fs[k++ % fs.size()], nu));
}
BENCHMARK(BM_initial_form);

void BM_relations(benchmark::State &st)
{
    std::mt19937_64 rng(2);
    std::uniform_int_distribution<int> num(1, 50), den(1, 6);
    std::vector<gvalue> gens;
    for (int k = 0; k < st.range(0); ++k) {
        mpq_class x(num(rng), den(rng));
        x.canonicalize();
        gens.push_back(gvalue{x, mpq_class(num(rng))});
    }
    for (auto _ : st) {
        relation_builder rb(2);
        for (auto &g : gens)
            benchmark::DoNotOptimize(rb.push(g));
    }
}
BENCHMARK(BM_relations)->Arg(4)->Arg(16)->Arg(64);

void BM_verify_realization(benchmark::State &st)
{
    semigroup_spec g{1, {q("4"), q("6"), q("13")}, {}, {}};
    auto r = realize(g, reindex_mode::corrected);
    verify_options opt;
    opt.samples = 50;
    opt.jobs = static_cast<unsigned>(st.range(0));
    for (auto _ : st)
        benchmark::DoNotOptimize(verify_realization(r, g, opt));
}
BENCHMARK(BM_verify_realization)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

} // namespace
BENCHMARK_MAIN();
