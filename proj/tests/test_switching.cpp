#include <gtest/gtest.h>

#include <set>

#include "gmsrg/error.hpp"
#include "gmsrg/srg.hpp"
#include "gmsrg/switching.hpp"
#include "oracles.hpp"

using namespace gmsrg;

namespace {

using Pts = std::vector<std::uint32_t>;

char letter(QuadricKind k) { return k == QuadricKind::elliptic ? 'e' : 'h'; }

Pts bits_of(std::span<const Point> pts) {
  Pts out;
  for (auto p : pts) out.push_back(p.bits);
  return out;
}

// Singular lines by brute force, each as its sorted point triple.
std::set<Pts> singular_lines(int n, char kind) {
  std::set<Pts> out;
  const auto q = oracle::quadric(n, kind);
  for (auto x : q) {
    for (auto y : q) {
      if (x < y && oracle::Q(n, kind, x ^ y) == 0) {
        Pts l{x, y, x ^ y};
        std::sort(l.begin(), l.end());
        out.insert(l);
      }
    }
  }
  return out;
}

bool meets_q_only_in(int n, char kind, const Pts& space, const Pts& alpha) {
  for (auto p : space) {
    const bool in_alpha = std::find(alpha.begin(), alpha.end(), p) != alpha.end();
    if (oracle::Q(n, kind, p) == 0 && !in_alpha) return false;
  }
  return true;
}

std::vector<std::size_t> all_indices(std::size_t v) {
  std::vector<std::size_t> out(v);
  std::iota(out.begin(), out.end(), std::size_t{0});
  return out;
}

}  // namespace

TEST(Variant, Parsing) {
  EXPECT_EQ(parse_variant("t"), SwitchVariant::single);
  EXPECT_EQ(parse_variant("tt"), SwitchVariant::pair);
  EXPECT_EQ(to_string(SwitchVariant::pair), "tt");
  EXPECT_THROW(parse_variant("ttt"), Error);
}

TEST(Bounds, LegalRange) {
  EXPECT_EQ(max_switch_t(5, QuadricKind::elliptic, SwitchVariant::single), 1);
  EXPECT_EQ(max_switch_t(5, QuadricKind::elliptic, SwitchVariant::pair), 1);
  EXPECT_EQ(max_switch_t(5, QuadricKind::hyperbolic, SwitchVariant::pair), 0);
  EXPECT_EQ(max_switch_t(9, QuadricKind::hyperbolic, SwitchVariant::single), 3);
  EXPECT_EQ(max_switch_t(9, QuadricKind::hyperbolic, SwitchVariant::pair), 2);
}

TEST(SingularSubspaces, LinesInLexOrder) {
  for (auto kind : {QuadricKind::elliptic, QuadricKind::hyperbolic}) {
    const auto form = canonical_form(5, kind);
    std::vector<Pts> visited;
    for_each_singular_subspace(form, 1, [&](const Subspace& s) {
      visited.push_back(bits_of(s.points()));
      return true;
    });
    const auto brute = singular_lines(5, letter(kind));
    EXPECT_EQ(visited, std::vector<Pts>(brute.begin(), brute.end()));
    EXPECT_EQ(bits_of(find_singular_subspace(form, 1).points()), *brute.begin());
  }
}

TEST(SingularSubspaces, PointsAreTheQuadric) {
  const auto form = canonical_form(7, QuadricKind::elliptic);
  Pts visited;
  for_each_singular_subspace(form, 0, [&](const Subspace& s) {
    visited.push_back(s.basis().front().bits);
    return true;
  });
  EXPECT_EQ(visited, oracle::quadric(7, 'e'));
}

TEST(SingularSubspaces, NoPlaneOnEllipticFive) {
  const auto form = canonical_form(5, QuadricKind::elliptic);
  const auto q = oracle::quadric(5, 'e');
  for (const auto& l : singular_lines(5, 'e')) {
    for (auto p : q) {
      if (std::find(l.begin(), l.end(), p) != l.end()) continue;
      bool all = true;
      for (auto x : l) all = all && oracle::Q(5, 'e', x ^ p) == 0;
      ASSERT_FALSE(all);
    }
  }
  try {
    find_singular_subspace(form, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::not_found);
  }
}

TEST(Config, CanonicalChoiceIsValid) {
  for (int n : {5, 7}) {
    for (auto kind : {QuadricKind::elliptic, QuadricKind::hyperbolic}) {
      const auto form = canonical_form(n, kind);
      for (auto variant : {SwitchVariant::single, SwitchVariant::pair}) {
        for (int t = 1; t <= max_switch_t(n, kind, variant); ++t) {
          const auto cfg = make_config(form, t, variant);
          EXPECT_NO_THROW(validate_config(cfg));
          EXPECT_EQ(cfg.alpha.projective_dimension(), t);
          EXPECT_EQ(cfg.variant(), variant);
          const char k = letter(kind);
          const Pts alpha = bits_of(cfg.alpha.points());
          EXPECT_TRUE(meets_q_only_in(n, k, bits_of(cfg.pi.points()), alpha));
          for (auto a : alpha) EXPECT_EQ(oracle::Q(n, k, a), 0);
          if (cfg.pi2) {
            EXPECT_TRUE(meets_q_only_in(n, k, bits_of(cfg.pi2->points()), alpha));
            EXPECT_TRUE(meets_q_only_in(n, k, bits_of(cfg.pi.joined(*cfg.pi2).points()), alpha));
          }
        }
      }
    }
  }
}

TEST(Config, AlternativeChoicesDiffer) {
  const auto form = canonical_form(5, QuadricKind::elliptic);
  const auto c0 = make_config(form, 1, SwitchVariant::single, 0);
  const auto c1 = make_config(form, 1, SwitchVariant::single, 1);
  EXPECT_TRUE(c0.alpha != c1.alpha || c0.pi != c1.pi);
  EXPECT_NO_THROW(validate_config(c1));
}

TEST(Config, InvalidConfigurationsRejected) {
  const auto form = canonical_form(5, QuadricKind::elliptic);
  auto cfg = make_config(form, 1, SwitchVariant::single);
  // Join alpha with a quadric point off alpha: Pi then meets Q outside alpha.
  for (auto q : quadric_points(form)) {
    if (cfg.alpha.contains(q)) continue;
    auto bad = cfg;
    bad.pi = cfg.alpha.joined(q);
    try {
      validate_config(bad);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::invalid_config);
    }
    break;
  }
  auto bad = cfg;
  bad.t = 2;
  EXPECT_THROW(validate_config(bad), Error);
}

TEST(Config, NoSecondTangentSpaceOnHyperbolicFive) {
  const int n = 5;
  const char k = 'h';
  std::size_t tangent_spaces = 0;
  for (const auto& alpha : singular_lines(n, k)) {
    const auto alpha_perp = oracle::perp_points(n, k, alpha);
    Pts ext;
    for (auto p : alpha_perp) {
      if (oracle::Q(n, k, p) == 1) ext.push_back(p);
    }
    for (auto p : ext) {
      Pts pi_gens{alpha[0], alpha[1], p};
      const Pts pi = oracle::span_points(pi_gens);
      if (!meets_q_only_in(n, k, pi, alpha)) continue;
      ++tangent_spaces;
      for (auto p2 : ext) {
        if (std::find(pi.begin(), pi.end(), p2) != pi.end()) continue;
        const Pts pi2 = oracle::span_points({alpha[0], alpha[1], p2});
        if (!meets_q_only_in(n, k, pi2, alpha)) continue;
        const Pts both = oracle::span_points({alpha[0], alpha[1], p, p2});
        ASSERT_FALSE(meets_q_only_in(n, k, both, alpha));
      }
    }
  }
  EXPECT_GT(tangent_spaces, 0u);

  const auto form = canonical_form(n, QuadricKind::hyperbolic);
  const auto alpha = find_singular_subspace(form, 1);
  const auto pi = find_tangent_space(form, alpha);
  try {
    find_second_tangent_space(form, alpha, pi);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::not_found);
    EXPECT_NE(std::string(e.what()).find("no Pi' exists"), std::string::npos);
  }
  try {
    make_config(form, 1, SwitchVariant::pair);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::not_found);
  }
}

TEST(Sets, SAndTAgainstDefinitions) {
  for (int n : {5, 7}) {
    for (auto kind : {QuadricKind::elliptic, QuadricKind::hyperbolic}) {
      const auto form = canonical_form(n, kind);
      const Graph g = build_gamma(form);
      for (auto variant : {SwitchVariant::single, SwitchVariant::pair}) {
        for (int t = 1; t <= max_switch_t(n, kind, variant); ++t) {
          const auto cfg = make_config(form, t, variant);
          const auto S = build_S(cfg);
          // S is the union of the tangent spaces minus alpha.
          std::set<std::uint32_t> want;
          for (auto p : cfg.pi.points()) {
            if (!cfg.alpha.contains(p)) want.insert(p.bits);
          }
          if (cfg.pi2) {
            for (auto p : cfg.pi2->points()) {
              if (!cfg.alpha.contains(p)) want.insert(p.bits);
            }
          }
          EXPECT_EQ(bits_of(S), Pts(want.begin(), want.end()));
          EXPECT_EQ(S.size(), expected_S_size(t, variant));

          const auto s_idx = vertex_indices(g, S);
          const auto counts = oracle::neighbours_in(g, s_idx);
          std::vector<std::size_t> half;
          for (std::size_t v = 0; v < g.vertex_count(); ++v) {
            if (!std::binary_search(s_idx.begin(), s_idx.end(), v) && counts[v] * 2 == S.size()) {
              half.push_back(v);
            }
          }
          EXPECT_EQ(vertex_indices(g, T_formula(cfg)), half);
          EXPECT_EQ(half.size(), expected_T_size(n, kind, t, variant));
        }
      }
    }
  }
}

TEST(Sets, ClosedFormSizes) {
  EXPECT_EQ(expected_S_size(2, SwitchVariant::single), 8u);
  EXPECT_EQ(expected_S_size(2, SwitchVariant::pair), 16u);
  EXPECT_EQ(expected_T_size(5, QuadricKind::elliptic, 1, SwitchVariant::single), 24u);
  EXPECT_EQ(expected_T_size(5, QuadricKind::elliptic, 1, SwitchVariant::pair), 24u);
  EXPECT_EQ(expected_T_size(7, QuadricKind::hyperbolic, 1, SwitchVariant::pair), 96u);
  EXPECT_EQ(expected_T_size(9, QuadricKind::elliptic, 1, SwitchVariant::pair), 456u);
}

TEST(SwitchingSet, CertificateMatchesCounts) {
  const auto form = canonical_form(7, QuadricKind::elliptic);
  const Graph g = build_gamma(form);
  const auto cfg = make_config(form, 2, SwitchVariant::pair);
  const auto s_idx = vertex_indices(g, build_S(cfg));
  const auto cert = validate_switching_set(g, s_idx);
  const auto counts = oracle::neighbours_in(g, s_idx);
  EXPECT_EQ(cert.induced_degree, 8u);
  for (auto v : cert.none) EXPECT_EQ(counts[v], 0u);
  for (auto v : cert.half) EXPECT_EQ(counts[v], s_idx.size() / 2);
  for (auto v : cert.all) EXPECT_EQ(counts[v], s_idx.size());
  EXPECT_EQ(cert.none.size() + cert.half.size() + cert.all.size() + s_idx.size(), g.vertex_count());
}

TEST(SwitchingSet, ArbitrarySetFails) {
  const Graph g = build_gamma(canonical_form(5, QuadricKind::elliptic));
  const std::vector<std::size_t> first{0, 1, 2, 3};
  try {
    validate_switching_set(g, first);
    FAIL();
  } catch (const NotASwitchingSet& e) {
    const std::size_t w = e.witness();
    const auto counts = oracle::neighbours_in(g, first);
    const bool in_s = w < 4;
    if (in_s) {
      // Irregular induced subgraph.
      std::set<std::size_t> degrees;
      for (auto s : first) degrees.insert(counts[s]);
      EXPECT_GT(degrees.size(), 1u);
    } else {
      EXPECT_TRUE(counts[w] == 1 || counts[w] == 3);
    }
  }
  EXPECT_THROW(validate_switching_set(g, std::vector<std::size_t>{0, 1, 2}), Error);
  EXPECT_THROW(validate_switching_set(g, std::vector<std::size_t>{}), Error);
}

TEST(GmSwitch, MatchesDefinitionAndIsInvolution) {
  for (auto kind : {QuadricKind::elliptic, QuadricKind::hyperbolic}) {
    const auto form = canonical_form(7, kind);
    const Graph g = build_gamma(form);
    for (auto variant : {SwitchVariant::single, SwitchVariant::pair}) {
      const auto s_idx = vertex_indices(g, build_S(make_config(form, 1, variant)));
      const Graph h = gm_switch(g, s_idx);
      const auto counts = oracle::neighbours_in(g, s_idx);
      for (std::size_t a = 0; a < g.vertex_count(); ++a) {
        const bool a_in = std::binary_search(s_idx.begin(), s_idx.end(), a);
        for (std::size_t b = 0; b < g.vertex_count(); ++b) {
          const bool b_in = std::binary_search(s_idx.begin(), s_idx.end(), b);
          bool flips = false;
          if (a_in != b_in) {
            const std::size_t outside = a_in ? b : a;
            flips = counts[outside] * 2 == s_idx.size();
          }
          ASSERT_EQ(h.adjacent(a, b), g.adjacent(a, b) != flips);
        }
      }
      EXPECT_EQ(gm_switch(h, s_idx), g);
      EXPECT_EQ(verify_srg(h), verify_srg(g));
    }
  }
}

TEST(GmSwitch, IdentityOnTrivialPartition) {
  // If every outside vertex sees none or all of S, nothing changes.
  const Graph g = build_gamma(canonical_form(5, QuadricKind::hyperbolic));
  const auto all = all_indices(g.vertex_count());
  EXPECT_EQ(gm_switch(g, all), g);
}

TEST(ExternalLines, LexLeastAvoidingSpace) {
  const int n = 5;
  const auto form = canonical_form(n, QuadricKind::elliptic);
  const auto cfg = make_config(form, 1, SwitchVariant::single);
  const Subspace ap = perp(form, cfg.alpha);
  const Line l = find_external_line(form, ap);
  Pts brute;
  for (std::uint32_t x = 1; x < 64 && brute.empty(); ++x) {
    for (std::uint32_t y = x + 1; y < 64; ++y) {
      const std::uint32_t z = x ^ y;
      if (z < y) continue;
      const bool external = oracle::Q(n, 'e', x) && oracle::Q(n, 'e', y) && oracle::Q(n, 'e', z);
      if (external && !ap.contains(Point{x}) && !ap.contains(Point{y}) && !ap.contains(Point{z})) {
        brute = {x, y, z};
        break;
      }
    }
  }
  EXPECT_EQ(bits_of(l), brute);

  const auto S = build_S(cfg);
  const Point x1 = *std::find_if(S.begin(), S.end(), [&](Point p) { return cfg.pi.contains(p); });
  const Line tangent = find_external_line(form, ap, x1);
  EXPECT_NE(std::find(tangent.begin(), tangent.end(), x1), tangent.end());
  std::size_t inside = 0;
  for (auto p : tangent) {
    EXPECT_FALSE(form.on_quadric(p));
    inside += ap.contains(p) ? 1 : 0;
  }
  EXPECT_EQ(inside, 1u);
}
