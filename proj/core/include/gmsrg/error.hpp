#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gmsrg {

enum class Errc {
  invalid_dimension,
  kind_parity,
  singular_form,
  degenerate_polarity,
  empty_span,
  degenerate_line,
  not_external_point,
  no_nucleus,
  unsupported_quadric,
  invalid_graph,
  not_strongly_regular,
  invalid_request,
  not_found,
  invalid_config,
  not_a_switching_set,
  length_mismatch,
  too_large,
  no_nonzero_words,
  not_a_vertex,
  indeterminate,
  parse_error,
};

std::string_view to_string(Errc code) noexcept;

/// Base exception for every failure reported by the library. The code is the
/// stable, machine-readable part; the message carries the context.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace gmsrg
