#pragma once

#include <stdexcept>
#include <string>

namespace hohf {

// Stable error codes; the C API exposes these one-to-one.
enum class errc {
  ok = 0,
  parse_error,
  schema_error,
  validation_error,
  type_mismatch,
  cardinality_mismatch,
  mixed_types,
  empty_terms,
  negative_lambda,
  out_of_range,
  missing_subset,
  bad_boundary,
  monotonicity_violation,
  value_out_of_range,
  not_normalized,
  no_root,
  dimension_mismatch,
  negative_weight_unsupported,
  label_mismatch,
  not_a_total_order,
  io_error,
  internal_error,
};

const char* errc_name(errc c);

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) {
  throw error(code, what);
}

}  // namespace hohf
