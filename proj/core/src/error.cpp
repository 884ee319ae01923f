#include "gmsrg/error.hpp"

namespace gmsrg {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::invalid_dimension: return "invalid-dimension";
    case Errc::kind_parity: return "kind-parity";
    case Errc::singular_form: return "singular-form";
    case Errc::degenerate_polarity: return "degenerate-polarity";
    case Errc::empty_span: return "empty-span";
    case Errc::degenerate_line: return "degenerate-line";
    case Errc::not_external_point: return "not-an-external-point";
    case Errc::no_nucleus: return "no-nucleus";
    case Errc::unsupported_quadric: return "unsupported-quadric";
    case Errc::invalid_graph: return "invalid-graph";
    case Errc::not_strongly_regular: return "not-strongly-regular";
    case Errc::invalid_request: return "invalid-request";
    case Errc::not_found: return "not-found";
    case Errc::invalid_config: return "invalid-config";
    case Errc::not_a_switching_set: return "not-a-switching-set";
    case Errc::length_mismatch: return "length-mismatch";
    case Errc::too_large: return "too-large";
    case Errc::no_nonzero_words: return "no-nonzero-words";
    case Errc::not_a_vertex: return "not-a-vertex";
    case Errc::indeterminate: return "indeterminate";
    case Errc::parse_error: return "parse-error";
  }
  return "unknown";
}

}  // namespace gmsrg
