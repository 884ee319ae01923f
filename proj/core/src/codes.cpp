#include "gmsrg/codes.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "gmsrg/error.hpp"

namespace gmsrg {
namespace {

void check_enumerable(const BinaryCode& c) {
  if (c.dim() > max_enumeration_dim) {
    throw Error(Errc::too_large, "code dimension " + std::to_string(c.dim()) +
                                     " exceeds the enumeration guard of " +
                                     std::to_string(max_enumeration_dim));
  }
}

// Calls visit(word) for every codeword, zero first, in Gray-code order.
template <typename Visit>
void for_each_codeword(const BinaryCode& c, Visit&& visit) {
  check_enumerable(c);
  BitVec word(c.length());
  visit(word);
  const std::uint64_t total = std::uint64_t{1} << c.dim();
  for (std::uint64_t i = 1; i < total; ++i) {
    word ^= c.basis()[static_cast<std::size_t>(std::countr_zero(i))];
    visit(word);
  }
}

}  // namespace

BinaryCode BinaryCode::from_generators(std::size_t length, std::span<const BitVec> rows) {
  BinaryCode c(length);
  for (const auto& r : rows) {
    if (r.size() != length) {
      throw Error(Errc::length_mismatch, "generator of length " + std::to_string(r.size()) +
                                             " for a code of length " + std::to_string(length));
    }
    c.insert(r);
  }
  return c;
}

BitVec BinaryCode::reduce(BitVec v) const {
  if (v.size() != length_) {
    throw Error(Errc::length_mismatch, "vector of length " + std::to_string(v.size()) +
                                           " against a code of length " + std::to_string(length_));
  }
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (v.test(pivots_[i])) v ^= basis_[i];
  }
  return v;
}

bool BinaryCode::contains(const BitVec& v) const { return reduce(v).none(); }

bool BinaryCode::contains(const BinaryCode& other) const {
  return std::all_of(other.basis_.begin(), other.basis_.end(),
                     [&](const BitVec& b) { return contains(b); });
}

BinaryCode BinaryCode::extended(std::span<const BitVec> extra) const {
  BinaryCode c = *this;
  for (const auto& v : extra) {
    if (v.size() != length_) throw Error(Errc::length_mismatch, "extension vector length");
    c.insert(v);
  }
  return c;
}

void BinaryCode::insert(BitVec v) {
  v = reduce(std::move(v));
  const auto lead = v.first_set();
  if (!lead) return;
  for (auto& b : basis_) {
    if (b.test(*lead)) b ^= v;
  }
  // Keep rows ordered by pivot so the representation is canonical.
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), *lead);
  const auto offset = pos - pivots_.begin();
  pivots_.insert(pos, *lead);
  basis_.insert(basis_.begin() + offset, std::move(v));
}

BinaryCode code_from_graph(const Graph& g) {
  return BinaryCode::from_generators(g.vertex_count(), g.rows());
}

bool contains(const BinaryCode& c, const BitVec& v) { return c.contains(v); }

WeightDistribution weight_distribution(const BinaryCode& c) {
  WeightDistribution dist;
  for_each_codeword(c, [&](const BitVec& w) { ++dist[w.count()]; });
  return dist;
}

std::vector<BitVec> min_weight_codewords(const BinaryCode& c) {
  if (c.dim() == 0) throw Error(Errc::no_nonzero_words, "the zero code has no nonzero words");
  std::size_t best = c.length() + 1;
  std::vector<BitVec> words;
  for_each_codeword(c, [&](const BitVec& w) {
    const std::size_t wt = w.count();
    if (wt == 0 || wt > best) return;
    if (wt < best) {
      best = wt;
      words.clear();
    }
    words.push_back(w);
  });
  std::sort(words.begin(), words.end());
  return words;
}

BitVec characteristic_vector(const Graph& g, std::span<const Point> points) {
  BitVec v(g.vertex_count());
  for (auto p : points) {
    auto idx = g.index_of(p);
    if (!idx) {
      throw Error(Errc::not_a_vertex, "point " + std::to_string(p.bits) + " is not a vertex");
    }
    v.set(*idx);
  }
  return v;
}

}  // namespace gmsrg
