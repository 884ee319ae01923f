#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gmsrg/graph.hpp"
#include "gmsrg/srg.hpp"
#include "gmsrg/switching.hpp"

namespace gmsrg {

/// One minimum-weight codeword seen through the graph: size of its support and
/// the sorted degree sequence of the subgraph induced on the support.
struct MinWordProfile {
  std::size_t support_size = 0;
  std::vector<std::size_t> induced_degrees;

  friend auto operator<=>(const MinWordProfile&, const MinWordProfile&) = default;
};

/// Isomorphism invariants of a graph read off its binary code.
struct GraphSignature {
  int two_rank = 0;
  std::size_t min_weight = 0;           // 0 for the zero code
  std::vector<MinWordProfile> profiles;  // sorted multiset

  friend bool operator==(const GraphSignature&, const GraphSignature&) = default;
};

GraphSignature signature(const Graph& g);

/// Short description of a profile multiset, e.g. "1 word(s) of weight 4,
/// null support" or "4 word(s) of weight 8, 4-regular support".
std::string describe_profiles(const GraphSignature& sig);

inline constexpr std::uint64_t default_node_budget = 10'000'000;
inline constexpr std::size_t max_iso_vertices = 600;

/// Exact isomorphism search by colour refinement (colour = own colour plus
/// sorted multiset of neighbour colours, iterated to a fixed point) with
/// individualization of the smallest non-singleton class. Returns a mapping
/// g1 vertex -> g2 vertex, verified edge by edge. Throws indeterminate when
/// the node budget is exhausted.
std::optional<std::vector<std::size_t>> find_isomorphism(
    const Graph& g1, const Graph& g2, std::uint64_t node_budget = default_node_budget);

bool are_isomorphic(const Graph& g1, const Graph& g2,
                    std::uint64_t node_budget = default_node_budget);

enum class Separation { two_rank, min_weight, min_word_profile, none };
enum class Distinctness { yes, no, unknown };

std::string_view to_string(Separation s) noexcept;
std::string_view to_string(Distinctness d) noexcept;

struct FamilyMember {
  std::string name;  // "Gamma_Q", "Gamma_Q,t" or "Gamma_Q,t,t"
  int t = 0;
  std::optional<SwitchVariant> variant;
  Graph graph;
  GraphSignature sig;
};

struct PairEvidence {
  std::size_t a = 0;
  std::size_t b = 0;
  Separation separated_by = Separation::none;
  std::string invariant_detail;
  /// Result of the isomorphism tester when it ran and decided.
  std::optional<bool> tester_isomorphic;
  bool tester_indeterminate = false;
  Distinctness distinct = Distinctness::unknown;
};

struct FamilyReport {
  int n = 0;
  QuadricKind kind = QuadricKind::elliptic;
  std::vector<FamilyMember> members;
  std::vector<PairEvidence> pairs;
  std::size_t distinct_count = 0;   // classes after merging pairs not proven distinct
  std::size_t switched_count = 0;   // distinct_count - 1
  long long claimed_switched = 0;   // n-3 (elliptic) / n-2 (hyperbolic)
  bool claim_matches = false;
};

struct ClassifyOptions {
  /// Run the isomorphism tester on every pair, not only on pairs the
  /// invariants fail to separate.
  bool cross_check_all = false;
  std::uint64_t node_budget = default_node_budget;
};

/// Builds Gamma_Q and every legal Gamma_Q,t and Gamma_Q,t,t (canonical
/// configurations) and separates them pairwise. Requires odd 5 <= n <= 9.
FamilyReport classify_family(int n, QuadricKind kind, const ClassifyOptions& options = {});

}  // namespace gmsrg
