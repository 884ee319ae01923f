#pragma once

// Godsil-McKay switching sets of Gamma_Q built from a singular t-space alpha
// and one or two (t+1)-spaces through it that meet the quadric only in alpha.

#include <array>
#include <cstddef>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "gmsrg/error.hpp"
#include "gmsrg/gf2geom.hpp"
#include "gmsrg/graph.hpp"

namespace gmsrg {

/// single: S = Pi \ alpha.  pair: S = (Pi u Pi') \ alpha.
enum class SwitchVariant { single, pair };

std::string_view to_string(SwitchVariant v) noexcept;  // "t" / "tt"
SwitchVariant parse_variant(std::string_view text);

struct SwitchConfig {
  QuadraticForm form;
  int t = 0;
  Subspace alpha;
  Subspace pi;
  std::optional<Subspace> pi2;

  SwitchVariant variant() const noexcept {
    return pi2 ? SwitchVariant::pair : SwitchVariant::single;
  }
};

/// Largest legal t for the construction: (n-3)/2, or (n-5)/2 for the pair
/// variant on a hyperbolic quadric. Returns 0 when no t is legal.
int max_switch_t(int n, QuadricKind kind, SwitchVariant variant) noexcept;

/// Throws invalid_config naming the first violated condition.
void validate_config(const SwitchConfig& config);

/// Visits singular projective t-spaces in lexicographic order of their
/// canonical point sequence (p1 = least point, p_{i+1} = least point outside
/// the span so far). The visitor returns false to stop.
void for_each_singular_subspace(const QuadraticForm& form, int t,
                                const std::function<bool(const Subspace&)>& visit);

/// The lexicographically least singular t-space; throws not_found.
Subspace find_singular_subspace(const QuadraticForm& form, int t);

/// Least (t+1)-space through alpha meeting the quadric exactly in alpha,
/// ordered by its least point outside alpha.
Subspace find_tangent_space(const QuadraticForm& form, const Subspace& alpha);

/// Least (t+1)-space Pi' != Pi through alpha with Pi' and <Pi, Pi'> both
/// meeting the quadric exactly in alpha; throws not_found.
Subspace find_second_tangent_space(const QuadraticForm& form, const Subspace& alpha,
                                   const Subspace& pi);

/// The choice-th valid (alpha, Pi[, Pi']) flag in nested lexicographic order
/// (alpha, then Pi, then Pi' with a larger least point than Pi). choice 0 is
/// the canonical configuration. Throws not_found when too few flags exist.
SwitchConfig make_config(const QuadraticForm& form, int t, SwitchVariant variant,
                         std::size_t choice = 0);

std::vector<Point> build_S(const SwitchConfig& config);

/// T_t = (PG(n,2) \ Q) \ alpha^perp, and for the pair variant
/// T_{t,t} = T_t u [((Pi^perp sym-diff Pi'^perp) \ S) \ Q].
std::vector<Point> T_formula(const SwitchConfig& config);

std::size_t expected_S_size(int t, SwitchVariant variant) noexcept;
std::size_t expected_T_size(int n, QuadricKind kind, int t, SwitchVariant variant) noexcept;

/// Vertex indices of the given points; throws not_a_vertex.
std::vector<std::size_t> vertex_indices(const Graph& g, std::span<const Point> points);

struct SwitchCertificate {
  std::vector<std::size_t> S;
  std::vector<std::size_t> none;  // 0 neighbours in S
  std::vector<std::size_t> half;  // |S|/2 neighbours in S
  std::vector<std::size_t> all;   // |S| neighbours in S
  std::size_t induced_degree = 0;
};

class NotASwitchingSet : public Error {
 public:
  NotASwitchingSet(const std::string& what, std::size_t witness)
      : Error(Errc::not_a_switching_set, what), witness_(witness) {}
  std::size_t witness() const noexcept { return witness_; }

 private:
  std::size_t witness_;
};

SwitchCertificate validate_switching_set(const Graph& g, std::span<const std::size_t> S);

/// Godsil-McKay switch: every vertex with |S|/2 neighbours in S swaps its
/// neighbours and non-neighbours inside S. Labels are unchanged.
Graph gm_switch(const Graph& g, std::span<const std::size_t> S);

using Line = std::array<Point, 3>;  // sorted ascending

/// Without `through`: least external line disjoint from `avoid`. With
/// `through` (a point off Q inside `avoid`): least external line through it
/// meeting `avoid` only there. Throws not_found.
Line find_external_line(const QuadraticForm& form, const Subspace& avoid,
                        std::optional<Point> through = std::nullopt);

}  // namespace gmsrg
