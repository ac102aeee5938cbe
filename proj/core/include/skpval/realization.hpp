#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "skpval/classifier.hpp"
#include "skpval/valuation.hpp"

namespace skpval {

struct semigroup_spec {
    std::size_t dim = 1;
    std::vector<gvalue> generators;
    std::vector<std::size_t> limit_labels; // 1-based generator positions
    field fld;
};

struct generator_analysis {
    std::vector<index_or_inf> n;
    std::vector<representation> reps; // n_j * gamma_j over the predecessors
    std::optional<std::size_t> positivity_failure;
    std::optional<std::size_t> increasing_failure;
    std::optional<std::size_t> minimality_failure;
    std::vector<unsigned> minimality_witness;
    std::size_t r_rk = 0;

    bool positive() const { return !positivity_failure; }
    bool increasing() const { return !increasing_failure; }
    bool minimal() const { return !minimality_failure; }
    bool ok() const { return positive() && increasing() && minimal(); }
};

constexpr unsigned default_minimality_bound = 8;

generator_analysis analyze_generators(const semigroup_spec &g, unsigned minimality_bound = default_minimality_bound);

enum class reindex_mode { literal, corrected };

const char *mode_name(reindex_mode m);

struct block_assignment {
    reindex_mode mode = reindex_mode::corrected;
    std::vector<std::vector<std::size_t>> blocks; // generator positions, 0-based
    std::vector<std::size_t> block_row;
    std::size_t d = 0; // number of variables
    value_table table;
    validation_report report;

    /* Flat table position of generator p. */
    std::size_t flat_of(std::size_t p) const;
};

block_assignment reindex(const semigroup_spec &g, reindex_mode mode);

struct realization {
    block_assignment blocks;
    generator_analysis analysis;
    std::shared_ptr<const skp_table> skp;
    invariant_report invariants;
    abhyankar_result abhyankar;
    bool zero_dimensional = false;

    skp_valuation valuation() const { return skp_valuation(skp); }
};

realization realize(const semigroup_spec &g, reindex_mode mode,
                    const std::map<table_index, scalar> &thetas = {});

struct verify_options {
    unsigned coeff_bound = 4;
    unsigned degree_bound = 8;
    unsigned samples = 200;
    std::uint64_t seed = 1;
    unsigned jobs = 1;
};

struct realization_verdict {
    struct witness {
        gvalue gamma;
        std::vector<unsigned> coeffs; // over the generators
        gvalue computed;
        bool ok = false;
    };
    struct sample {
        std::string poly;
        gvalue value;
        bool in_window = false;
        bool ok = false;
    };

    bool pass = true;
    gvalue window; // every semigroup element below this is enumerated
    std::vector<witness> attained;
    std::vector<sample> samples;
    std::optional<std::string> failure;
};

realization_verdict verify_realization(const realization &r, const semigroup_spec &g,
                                       const verify_options &opt = {});

struct rank_jump {
    std::size_t position; // 1-based
    bool labelled;
    std::size_t before;
    std::size_t after;
    bool pass;
};

std::vector<rank_jump> rank_jump_check(const semigroup_spec &g);

} // namespace skpval
