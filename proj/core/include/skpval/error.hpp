#pragma once

#include <stdexcept>
#include <string>

namespace skpval {

enum class errc {
    dimension_mismatch,
    not_in_group,
    not_monic,
    zero_poly,
    invalid_table,
    theta_zero,
    no_cutoff,
    non_stabilizing,
    iteration_cap,
    unrealizable,
    hypothesis_violated,
    verification_failed,
    parse_error,
    variable_not_in_table,
    not_acceptable,
    bad_input,
    field_mismatch,
};

const char *errc_name(errc c);

class error : public std::runtime_error {
  public:
    error(errc code, const std::string &what)
        : std::runtime_error(what), code_(code) {}
    errc code() const { return code_; }

  private:
    errc code_;
};

} // namespace skpval
