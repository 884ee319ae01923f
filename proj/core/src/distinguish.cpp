#include "gmsrg/distinguish.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "gmsrg/codes.hpp"
#include "gmsrg/error.hpp"

namespace gmsrg {
namespace {

using Colours = std::vector<int>;

std::string support_shape(const std::vector<std::size_t>& degrees) {
  if (degrees.empty()) return "empty support";
  const bool all_equal = std::adjacent_find(degrees.begin(), degrees.end(),
                                            std::not_equal_to<>()) == degrees.end();
  if (!all_equal) return "irregular support";
  if (degrees.front() == 0) return "null support";
  return std::to_string(degrees.front()) + "-regular support";
}

std::vector<int> neighbour_signature(const Graph& g, const Colours& c, std::size_t v) {
  std::vector<int> sig;
  sig.reserve(g.degree(v) + 1);
  for (auto u : g.row(v).ones_indices()) sig.push_back(c[u]);
  std::sort(sig.begin(), sig.end());
  sig.insert(sig.begin(), c[v]);
  return sig;
}

std::size_t colour_count(const Colours& c) {
  return c.empty() ? 0 : static_cast<std::size_t>(*std::max_element(c.begin(), c.end()) + 1);
}

// Refines both colourings jointly to a fixed point. Colour ids are assigned
// from the sorted set of signatures over both graphs, so a colour means the
// same thing on either side. Returns false as soon as the class sizes differ.
bool refine(const Graph& g1, const Graph& g2, Colours& c1, Colours& c2) {
  const std::size_t v = c1.size();
  std::size_t classes = colour_count(c1);
  for (;;) {
    std::vector<std::vector<int>> s1(v);
    std::vector<std::vector<int>> s2(v);
    std::map<std::vector<int>, int> ids;
    for (std::size_t i = 0; i < v; ++i) {
      s1[i] = neighbour_signature(g1, c1, i);
      s2[i] = neighbour_signature(g2, c2, i);
      ids.emplace(s1[i], 0);
      ids.emplace(s2[i], 0);
    }
    int next = 0;
    for (auto& [key, id] : ids) id = next++;
    std::vector<std::size_t> h1(ids.size(), 0);
    std::vector<std::size_t> h2(ids.size(), 0);
    for (std::size_t i = 0; i < v; ++i) {
      c1[i] = ids[s1[i]];
      c2[i] = ids[s2[i]];
      ++h1[static_cast<std::size_t>(c1[i])];
      ++h2[static_cast<std::size_t>(c2[i])];
    }
    if (h1 != h2) return false;
    if (ids.size() == classes) return true;
    classes = ids.size();
  }
}

class IsoSearch {
 public:
  IsoSearch(const Graph& g1, const Graph& g2, std::uint64_t budget)
      : g1_(g1), g2_(g2), budget_(budget) {}

  std::optional<std::vector<std::size_t>> run() {
    const std::size_t v = g1_.vertex_count();
    Colours c1(v, 0);
    Colours c2(v, 0);
    if (search(c1, c2)) return mapping_;
    return std::nullopt;
  }

 private:
  bool search(Colours c1, Colours c2) {
    if (++nodes_ > budget_) {
      throw Error(Errc::indeterminate, "isomorphism search exceeded " +
                                           std::to_string(budget_) + " nodes");
    }
    if (!refine(g1_, g2_, c1, c2)) return false;
    const std::size_t v = c1.size();
    const std::size_t k = colour_count(c1);
    std::vector<std::size_t> sizes(k, 0);
    for (auto c : c1) ++sizes[static_cast<std::size_t>(c)];

    std::optional<int> target;
    for (std::size_t c = 0; c < k; ++c) {
      if (sizes[c] > 1 && (!target || sizes[c] < sizes[static_cast<std::size_t>(*target)])) {
        target = static_cast<int>(c);
      }
    }
    if (!target) return check_discrete(c1, c2);

    const auto u = static_cast<std::size_t>(
        std::find(c1.begin(), c1.end(), *target) - c1.begin());
    const int fresh = static_cast<int>(k);
    for (std::size_t w = 0; w < v; ++w) {
      if (c2[w] != *target) continue;
      Colours d1 = c1;
      Colours d2 = c2;
      d1[u] = fresh;
      d2[w] = fresh;
      if (search(std::move(d1), std::move(d2))) return true;
    }
    return false;
  }

  bool check_discrete(const Colours& c1, const Colours& c2) {
    const std::size_t v = c1.size();
    std::vector<std::size_t> by_colour(v);
    for (std::size_t w = 0; w < v; ++w) by_colour[static_cast<std::size_t>(c2[w])] = w;
    std::vector<std::size_t> map(v);
    for (std::size_t u = 0; u < v; ++u) map[u] = by_colour[static_cast<std::size_t>(c1[u])];
    for (std::size_t a = 0; a < v; ++a) {
      for (std::size_t b = a + 1; b < v; ++b) {
        if (g1_.adjacent(a, b) != g2_.adjacent(map[a], map[b])) return false;
      }
    }
    mapping_ = std::move(map);
    return true;
  }

  const Graph& g1_;
  const Graph& g2_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<std::size_t> mapping_;
};

std::string pair_detail(const GraphSignature& a, const GraphSignature& b, Separation s) {
  switch (s) {
    case Separation::two_rank:
      return "2-rank " + std::to_string(a.two_rank) + " vs " + std::to_string(b.two_rank);
    case Separation::min_weight:
      return "minimum weight " + std::to_string(a.min_weight) + " vs " +
             std::to_string(b.min_weight);
    case Separation::min_word_profile:
      return describe_profiles(a) + " vs " + describe_profiles(b);
    case Separation::none:
      return "signatures equal";
  }
  return {};
}

}  // namespace

GraphSignature signature(const Graph& g) {
  const BinaryCode code = code_from_graph(g);
  GraphSignature sig;
  sig.two_rank = code.dim();
  if (code.dim() == 0) return sig;
  for (const auto& word : min_weight_codewords(code)) {
    MinWordProfile p;
    p.support_size = word.count();
    for (auto i : word.ones_indices()) p.induced_degrees.push_back(g.row(i).and_count(word));
    std::sort(p.induced_degrees.begin(), p.induced_degrees.end());
    sig.profiles.push_back(std::move(p));
  }
  sig.min_weight = sig.profiles.front().support_size;
  std::sort(sig.profiles.begin(), sig.profiles.end());
  return sig;
}

std::string describe_profiles(const GraphSignature& sig) {
  if (sig.profiles.empty()) return "no nonzero words";
  std::map<std::string, std::size_t> shapes;
  for (const auto& p : sig.profiles) ++shapes[support_shape(p.induced_degrees)];
  std::string out = std::to_string(sig.profiles.size()) + " word(s) of weight " +
                    std::to_string(sig.min_weight) + ",";
  bool first = true;
  for (const auto& [shape, count] : shapes) {
    out += first ? " " : "; ";
    if (shapes.size() > 1) out += std::to_string(count) + "x ";
    out += shape;
    first = false;
  }
  return out;
}

std::optional<std::vector<std::size_t>> find_isomorphism(const Graph& g1, const Graph& g2,
                                                         std::uint64_t node_budget) {
  if (g1.vertex_count() != g2.vertex_count()) return std::nullopt;
  if (g1.vertex_count() > max_iso_vertices) {
    throw Error(Errc::invalid_request, "isomorphism tester is limited to " +
                                           std::to_string(max_iso_vertices) + " vertices");
  }
  if (g1.edge_count() != g2.edge_count()) return std::nullopt;
  auto d1 = g1.degree_sequence();
  auto d2 = g2.degree_sequence();
  std::sort(d1.begin(), d1.end());
  std::sort(d2.begin(), d2.end());
  if (d1 != d2) return std::nullopt;
  return IsoSearch(g1, g2, node_budget).run();
}

bool are_isomorphic(const Graph& g1, const Graph& g2, std::uint64_t node_budget) {
  return find_isomorphism(g1, g2, node_budget).has_value();
}

std::string_view to_string(Separation s) noexcept {
  switch (s) {
    case Separation::two_rank: return "2-rank";
    case Separation::min_weight: return "min-weight";
    case Separation::min_word_profile: return "min-word-profile";
    case Separation::none: return "none";
  }
  return "unknown";
}

std::string_view to_string(Distinctness d) noexcept {
  switch (d) {
    case Distinctness::yes: return "yes";
    case Distinctness::no: return "no";
    case Distinctness::unknown: return "unknown";
  }
  return "unknown";
}

FamilyReport classify_family(int n, QuadricKind kind, const ClassifyOptions& options) {
  if (n < 5 || n > 9 || n % 2 == 0 || kind == QuadricKind::parabolic) {
    throw Error(Errc::invalid_request,
                "family classification needs odd 5 <= n <= 9 and an elliptic or hyperbolic quadric");
  }
  const QuadraticForm form = canonical_form(n, kind);
  const Graph gamma = build_gamma(form);

  FamilyReport report;
  report.n = n;
  report.kind = kind;
  report.members.push_back({"Gamma_Q", 0, std::nullopt, gamma, signature(gamma)});
  for (auto variant : {SwitchVariant::single, SwitchVariant::pair}) {
    for (int t = 1; t <= max_switch_t(n, kind, variant); ++t) {
      const SwitchConfig cfg = make_config(form, t, variant);
      const Graph switched = gm_switch(gamma, vertex_indices(gamma, build_S(cfg)));
      std::string name = "Gamma_Q," + std::to_string(t);
      if (variant == SwitchVariant::pair) name += "," + std::to_string(t);
      report.members.push_back({name, t, variant, switched, signature(switched)});
    }
  }

  const std::size_t m = report.members.size();
  std::vector<std::size_t> parent(m);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };

  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = a + 1; b < m; ++b) {
      const auto& sa = report.members[a].sig;
      const auto& sb = report.members[b].sig;
      PairEvidence ev;
      ev.a = a;
      ev.b = b;
      if (sa.two_rank != sb.two_rank) {
        ev.separated_by = Separation::two_rank;
      } else if (sa.min_weight != sb.min_weight) {
        ev.separated_by = Separation::min_weight;
      } else if (sa.profiles != sb.profiles) {
        ev.separated_by = Separation::min_word_profile;
      }
      ev.invariant_detail = pair_detail(sa, sb, ev.separated_by);
      if (ev.separated_by == Separation::none || options.cross_check_all) {
        try {
          ev.tester_isomorphic = are_isomorphic(report.members[a].graph,
                                                report.members[b].graph, options.node_budget);
        } catch (const Error& e) {
          if (e.code() != Errc::indeterminate) throw;
          ev.tester_indeterminate = true;
        }
      }
      if (ev.separated_by != Separation::none) {
        ev.distinct = Distinctness::yes;
      } else if (ev.tester_isomorphic) {
        ev.distinct = *ev.tester_isomorphic ? Distinctness::no : Distinctness::yes;
      }
      if (ev.distinct != Distinctness::yes) parent[find(a)] = find(b);
      report.pairs.push_back(std::move(ev));
    }
  }

  for (std::size_t i = 0; i < m; ++i) {
    if (find(i) == i) ++report.distinct_count;
  }
  report.switched_count = report.distinct_count - 1;
  report.claimed_switched = kind == QuadricKind::elliptic ? n - 3 : n - 2;
  report.claim_matches =
      static_cast<long long>(report.switched_count) == report.claimed_switched;
  return report;
}

}  // namespace gmsrg
