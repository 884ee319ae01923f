#pragma once

#include <string>
#include <string_view>

#include "gmsrg/graph.hpp"

namespace gmsrg::graph6 {

/// Header-less graph6: N(n) followed by the upper triangle read column by
/// column (x(0,1), x(0,2), x(1,2), x(0,3), ...) in big-endian 6-bit groups,
/// each offset by 63. No trailing newline.
std::string encode(const Graph& g);

/// Inverse of encode; vertices are labelled 1..n. Throws parse_error.
Graph decode(std::string_view text);

/// Sidecar text mapping vertex index to point integer, one "index point" pair
/// per line.
std::string encode_labels(const Graph& g);

/// Graph from a graph6 string plus a label sidecar. Throws parse_error.
Graph decode_with_labels(std::string_view graph6_text, std::string_view labels_text);

}  // namespace gmsrg::graph6
