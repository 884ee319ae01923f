#include <gtest/gtest.h>

#include <random>
#include <set>

#include "gmsrg/error.hpp"
#include "gmsrg/gf2geom.hpp"
#include "oracles.hpp"

using namespace gmsrg;

namespace {

char letter(QuadricKind k) {
  return k == QuadricKind::elliptic ? 'e' : k == QuadricKind::hyperbolic ? 'h' : 'p';
}

std::vector<QuadricKind> kinds_for(int n) {
  if (n % 2 == 0) return {QuadricKind::parabolic};
  return {QuadricKind::elliptic, QuadricKind::hyperbolic};
}

template <class F>
Errc code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no exception";
  return Errc::invalid_request;
}

Subspace random_subspace(std::mt19937_64& rng, int n, int vdim) {
  std::uniform_int_distribution<std::uint32_t> pick(1, (1U << (n + 1)) - 1);
  Subspace s(n);
  while (s.vdim() < vdim) s = s.joined(Point{pick(rng)});
  return s;
}

std::vector<std::uint32_t> bits_of(const std::vector<Point>& pts) {
  std::vector<std::uint32_t> out;
  for (auto p : pts) out.push_back(p.bits);
  return out;
}

}  // namespace

TEST(Points, EnumerationCoversTheSpace) {
  const auto pts = enumerate_points(4);
  ASSERT_EQ(pts.size(), 31u);
  EXPECT_EQ(pts.front().bits, 1u);
  EXPECT_EQ(pts.back().bits, 31u);
  EXPECT_EQ(third_point(Point{3}, Point{5}).bits, 6u);
}

TEST(Points, DimensionBounds) {
  EXPECT_EQ(code_of([] { check_dimension(0); }), Errc::invalid_dimension);
  EXPECT_EQ(code_of([] { check_dimension(max_dimension + 1); }), Errc::invalid_dimension);
  EXPECT_NO_THROW(check_dimension(1));
}

TEST(QuadraticForm, QuadricSizesAgainstOracle) {
  for (int n = 2; n <= 11; ++n) {
    for (auto kind : kinds_for(n)) {
      const auto form = canonical_form(n, kind);
      const auto brute = oracle::quadric(n, letter(kind));
      EXPECT_EQ(form.quadric_size(), brute.size()) << n;
      EXPECT_EQ(expected_quadric_size(n, kind), brute.size()) << n;
      EXPECT_EQ(bits_of(quadric_points(form)), brute) << n;
    }
  }
}

TEST(QuadraticForm, KnownSizes) {
  EXPECT_EQ(expected_quadric_size(5, QuadricKind::elliptic), 27u);
  EXPECT_EQ(expected_quadric_size(5, QuadricKind::hyperbolic), 35u);
  EXPECT_EQ(expected_quadric_size(4, QuadricKind::parabolic), 15u);
  EXPECT_EQ(expected_quadric_size(9, QuadricKind::elliptic), 495u);
}

TEST(QuadraticForm, ParityAndSingularity) {
  EXPECT_EQ(code_of([] { canonical_form(4, QuadricKind::elliptic); }), Errc::kind_parity);
  EXPECT_EQ(code_of([] { canonical_form(5, QuadricKind::parabolic); }), Errc::kind_parity);
  // X0 X1 + X2^2 on PG(3,2) is degenerate: too many zeros for any kind.
  EXPECT_EQ(code_of([] {
              QuadraticForm::from_coefficients(3, QuadricKind::hyperbolic, {0b10, 0, 0b100, 0});
            }),
            Errc::singular_form);
}

TEST(QuadraticForm, EvaluateMatchesPolynomial) {
  for (auto [n, kind] : {std::pair{5, QuadricKind::elliptic}, std::pair{7, QuadricKind::hyperbolic},
                         std::pair{6, QuadricKind::parabolic}}) {
    const auto form = canonical_form(n, kind);
    for (std::uint32_t x = 0; x < form.space_size(); ++x) {
      ASSERT_EQ(form.evaluate(x), oracle::Q(n, letter(kind), x)) << x;
    }
    EXPECT_EQ(form.evaluate(0), 0);
  }
}

TEST(QuadraticForm, NonCanonicalCoefficients) {
  // X0^2 + X0X1 + X1^2 + X2X3 + X0X2 is elliptic too (projectively equivalent).
  const auto form =
      QuadraticForm::from_coefficients(3, QuadricKind::elliptic, {0b0111, 0b0010, 0b1000, 0});
  EXPECT_EQ(form.quadric_size(), expected_quadric_size(3, QuadricKind::elliptic));
  EXPECT_TRUE(form.coefficient(0, 2));
  EXPECT_FALSE(form.coefficient(1, 3));
}

TEST(Bilinear, MatchesPolarisation) {
  const auto form = canonical_form(5, QuadricKind::hyperbolic);
  for (std::uint32_t x = 1; x < 64; ++x) {
    for (std::uint32_t y = 1; y < 64; ++y) {
      ASSERT_EQ(bilinear(form, Point{x}, Point{y}), oracle::B(5, 'h', x, y));
    }
  }
}

TEST(Subspace, SpanAndMembership) {
  const std::vector<Point> gens{Point{1}, Point{2}, Point{3}};
  const Subspace line = span(gens, 4);
  EXPECT_EQ(line.vdim(), 2);
  EXPECT_EQ(line.projective_dimension(), 1);
  EXPECT_EQ(line.point_count(), 3u);
  EXPECT_EQ(bits_of(line.points()), (std::vector<std::uint32_t>{1, 2, 3}));
  EXPECT_TRUE(line.contains(Point{3}));
  EXPECT_FALSE(line.contains(Point{4}));
  EXPECT_EQ(code_of([] { span({}, 3); }), Errc::empty_span);
  EXPECT_EQ(Subspace(4).point_count(), 0u);
  EXPECT_EQ(whole_space(4).point_count(), 31u);
}

TEST(Subspace, CanonicalBasisIgnoresGeneratorOrder) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const Subspace s = random_subspace(rng, 6, 3);
    auto pts = s.points();
    std::shuffle(pts.begin(), pts.end(), rng);
    EXPECT_EQ(span(pts, 6), s);
    EXPECT_EQ(bits_of(s.points()), oracle::span_points(bits_of(std::vector<Point>(
                                              s.basis().begin(), s.basis().end()))));
  }
}

TEST(Perp, AgreesWithOracle) {
  std::mt19937_64 rng(11);
  for (auto kind : {QuadricKind::elliptic, QuadricKind::hyperbolic}) {
    const auto form = canonical_form(5, kind);
    for (int trial = 0; trial < 40; ++trial) {
      const Subspace u = random_subspace(rng, 5, 1 + trial % 5);
      const auto brute = oracle::perp_points(5, letter(kind), bits_of(u.points()));
      EXPECT_EQ(bits_of(perp(form, u).points()), brute);
    }
  }
}

TEST(Perp, InvolutionAndReversal) {
  std::mt19937_64 rng(13);
  for (int n : {5, 7}) {
    for (auto kind : {QuadricKind::elliptic, QuadricKind::hyperbolic}) {
      const auto form = canonical_form(n, kind);
      for (int trial = 0; trial < 30; ++trial) {
        const Subspace u = random_subspace(rng, n, 1 + trial % n);
        const Subspace w = u.joined(random_subspace(rng, n, 1));
        const Subspace pu = perp(form, u);
        EXPECT_EQ(perp(form, pu), u);
        EXPECT_EQ(pu.vdim() + u.vdim(), n + 1);
        EXPECT_TRUE(pu.contains(perp(form, w)));
      }
    }
  }
}

TEST(Perp, ParabolicRejected) {
  const auto form = canonical_form(4, QuadricKind::parabolic);
  EXPECT_EQ(code_of([&] { perp(form, whole_space(4)); }), Errc::degenerate_polarity);
}

TEST(Perp, HyperplaneSections) {
  // x^perp is a hyperplane; for x off Q it cuts Q in a parabolic quadric of
  // one dimension less, for x on Q in a cone.
  const int n = 5;
  for (auto kind : {QuadricKind::elliptic, QuadricKind::hyperbolic}) {
    const auto form = canonical_form(n, kind);
    for (std::uint32_t x = 1; x < 64; ++x) {
      const auto h = perp(form, span(std::vector<Point>{Point{x}}, n)).points();
      ASSERT_EQ(h.size(), 31u);
      std::size_t on = 0;
      for (auto p : h) on += form.on_quadric(p) ? 1 : 0;
      if (form.on_quadric(Point{x})) {
        EXPECT_EQ(on, 1 + 2 * expected_quadric_size(n - 2, kind));
      } else {
        EXPECT_EQ(on, expected_quadric_size(n - 1, QuadricKind::parabolic));
      }
    }
  }
}

TEST(Lines, ClassificationMatchesCounting) {
  const auto form = canonical_form(5, QuadricKind::elliptic);
  std::map<LineClass, int> seen;
  std::set<std::set<std::uint32_t>> lines;
  for (std::uint32_t x = 1; x < 64; ++x) {
    for (std::uint32_t y = x + 1; y < 64; ++y) {
      const auto c = classify_line(form, Point{x}, Point{y});
      const int zeros = (oracle::Q(5, 'e', x) == 0) + (oracle::Q(5, 'e', y) == 0) +
                        (oracle::Q(5, 'e', x ^ y) == 0);
      ASSERT_EQ(static_cast<int>(c), zeros);
      if (lines.insert({x, y, x ^ y}).second) ++seen[c];
    }
  }
  EXPECT_EQ(lines.size(), 651u);
  EXPECT_EQ(static_cast<std::size_t>(seen[LineClass::external]), count_external_lines(form));
  EXPECT_EQ(code_of([&] { classify_line(form, Point{3}, Point{3}); }), Errc::degenerate_line);
}

TEST(Lines, ExternalCountsPerPoint) {
  for (int n : {5, 7}) {
    for (auto kind : {QuadricKind::elliptic, QuadricKind::hyperbolic}) {
      const auto form = canonical_form(n, kind);
      const char k = letter(kind);
      const std::size_t base = std::size_t{1} << (n - 2);
      const std::size_t delta = std::size_t{1} << ((n - 3) / 2);
      const std::size_t want = kind == QuadricKind::elliptic ? base + delta : base - delta;
      for (auto x : oracle::complement_of_quadric(n, k)) {
        std::size_t brute = 0;
        for (std::uint32_t y = 1; y < (1U << (n + 1)); ++y) {
          if (y != x && oracle::Q(n, k, y) == 1 && oracle::Q(n, k, x ^ y) == 1) ++brute;
        }
        ASSERT_EQ(brute / 2, want);
        ASSERT_EQ(count_external_lines_through(form, Point{x}), want);
      }
      EXPECT_EQ(code_of([&] { count_external_lines_through(form, quadric_points(form).front()); }),
                Errc::not_external_point);
    }
  }
}

TEST(Nucleus, ParabolicHasAllTangents) {
  for (int n : {2, 4, 6}) {
    const auto form = canonical_form(n, QuadricKind::parabolic);
    const Point c = nucleus(form);
    EXPECT_FALSE(form.on_quadric(c));
    // The nucleus is the unique point all of whose lines meet Q in one point.
    std::vector<std::uint32_t> all_tangent;
    for (std::uint32_t x = 1; x < form.space_size(); ++x) {
      bool ok = true;
      for (std::uint32_t y = 1; y < form.space_size() && ok; ++y) {
        if (y == x) continue;
        const int zeros = (oracle::Q(n, 'p', x) == 0) + (oracle::Q(n, 'p', y) == 0) +
                          (oracle::Q(n, 'p', x ^ y) == 0);
        ok = zeros == 1;
      }
      if (ok) all_tangent.push_back(x);
    }
    EXPECT_EQ(all_tangent, std::vector<std::uint32_t>{c.bits});
  }
  EXPECT_EQ(code_of([] { nucleus(canonical_form(5, QuadricKind::elliptic)); }), Errc::no_nucleus);
}
