#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "skpval/realization.hpp"

namespace skpval::io {

using nlohmann::json;

/* A value is a rational ("7", "7/2", 7) or, for dimension > 1, an array of them. */
gvalue value_from_json(const json &j, std::size_t dim);
json value_to_json(const gvalue &v);
field field_from_json(const json &j);

struct skp_input {
    value_table table;
    std::map<table_index, scalar> thetas;
    std::vector<limit_tail> tails;
    truncation trunc;
    field fld;
};

value_table table_from_json(const json &j);
skp_input skp_from_json(const json &j);
skp_table build_from_json(const json &j);
semigroup_spec semigroup_from_json(const json &j);
pseudo_skp_arithmetic arithmetic_from_json(const json &j);
/* "a+bk", "bk", "a" or [a, b]. */
affine affine_from_json(const json &j);
alpha_vec alpha_from_string(const std::string &s);

json report_to_json(const validation_report &r);
json skp_to_json(const skp_table &s);
json exp_to_json(const adic_exp &e, const skp_table &s);
json expansion_to_json(const adic_expansion &x, const skp_table &s);
json invariants_to_json(const invariant_report &r);
json abhyankar_to_json(const abhyankar_result &a);
json analysis_to_json(const generator_analysis &a);
json blocks_to_json(const block_assignment &b);
json realization_to_json(const realization &r);
json verdict_to_json(const realization_verdict &v);
json rank_jumps_to_json(const std::vector<rank_jump> &j);

} // namespace skpval::io
