#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "gmsrg/bits.hpp"
#include "gmsrg/gf2geom.hpp"
#include "gmsrg/graph.hpp"

namespace gmsrg {

/// Codes with more than this many dimensions are not enumerated.
inline constexpr int max_enumeration_dim = 24;

/// Binary linear code held as a reduced row-echelon generator matrix
/// (pivot = lowest set index; pivot columns are cleared in every other row).
class BinaryCode {
 public:
  explicit BinaryCode(std::size_t length) : length_(length) {}

  /// Row space of the given vectors; throws length_mismatch.
  static BinaryCode from_generators(std::size_t length, std::span<const BitVec> rows);

  std::size_t length() const noexcept { return length_; }
  int dim() const noexcept { return static_cast<int>(basis_.size()); }
  std::span<const BitVec> basis() const noexcept { return basis_; }

  /// v reduced against the basis; zero iff v is a codeword.
  BitVec reduce(BitVec v) const;
  bool contains(const BitVec& v) const;
  /// True iff every generator of other lies in *this.
  bool contains(const BinaryCode& other) const;

  BinaryCode extended(std::span<const BitVec> extra) const;

  friend bool operator==(const BinaryCode&, const BinaryCode&) = default;

 private:
  void insert(BitVec v);

  std::size_t length_;
  std::vector<BitVec> basis_;
  std::vector<std::size_t> pivots_;
};

/// weight -> number of codewords of that weight.
using WeightDistribution = std::map<std::size_t, std::uint64_t>;

BinaryCode code_from_graph(const Graph& g);

bool contains(const BinaryCode& c, const BitVec& v);

/// Exact enumeration of all 2^dim codewords (Gray-code order, one row XOR per
/// step). Throws too_large above max_enumeration_dim.
WeightDistribution weight_distribution(const BinaryCode& c);

/// All nonzero codewords of minimum weight, sorted. Throws no_nonzero_words
/// for the zero code.
std::vector<BitVec> min_weight_codewords(const BinaryCode& c);

/// v^U over the vertex order of g; throws not_a_vertex.
BitVec characteristic_vector(const Graph& g, std::span<const Point> points);

}  // namespace gmsrg
