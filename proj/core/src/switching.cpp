#include "gmsrg/switching.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace gmsrg {
namespace {

std::uint32_t pivot_mask(const Subspace& s) {
  std::uint32_t m = 0;
  for (auto b : s.basis()) m |= 1U << (std::bit_width(b.bits) - 1);
  return m;
}

// p is the least element of its coset p + s, i.e. zero at every pivot of s.
bool is_reduced(Point p, const Subspace& s) { return (p.bits & pivot_mask(s)) == 0; }

// The points of `space` lying on the quadric are exactly those of `alpha`.
bool meets_quadric_exactly_in(const QuadraticForm& form, const Subspace& space,
                              const Subspace& alpha) {
  for (auto p : space.points()) {
    if (form.on_quadric(p) != alpha.contains(p)) return false;
  }
  return true;
}

bool orthogonal_to_all(const QuadraticForm& form, Point p, std::span<const Point> pts) {
  return std::all_of(pts.begin(), pts.end(),
                     [&](Point q) { return bilinear(form, p, q) == 0; });
}

void require_switchable(const QuadraticForm& form) {
  const int n = form.dimension();
  if (form.kind() == QuadricKind::parabolic || n % 2 == 0 || n < 5) {
    throw Error(Errc::unsupported_quadric,
                "switching sets are built on elliptic or hyperbolic quadrics with odd n >= 5");
  }
}

// Extensions of alpha by one point of alpha^perp \ Q, in order of the least
// new point. Every such extension meets Q exactly in alpha.
std::vector<Point> extension_points(const QuadraticForm& form, const Subspace& alpha) {
  const Subspace ap = perp(form, alpha);
  std::vector<Point> out;
  for (auto p : ap.points()) {
    if (!form.on_quadric(p) && is_reduced(p, alpha)) out.push_back(p);
  }
  return out;
}

bool valid_second(const QuadraticForm& form, const Subspace& alpha, const Subspace& pi,
                  const Subspace& pi2) {
  return pi2 != pi && meets_quadric_exactly_in(form, pi2, alpha) &&
         meets_quadric_exactly_in(form, pi.joined(pi2), alpha);
}

Point least_outside(const Subspace& space, const Subspace& alpha) {
  for (auto p : space.points()) {
    if (!alpha.contains(p)) return p;
  }
  return Point{};
}

}  // namespace

std::string_view to_string(SwitchVariant v) noexcept {
  return v == SwitchVariant::single ? "t" : "tt";
}

SwitchVariant parse_variant(std::string_view text) {
  if (text == "t") return SwitchVariant::single;
  if (text == "tt") return SwitchVariant::pair;
  throw Error(Errc::invalid_request, "unknown variant '" + std::string(text) + "'");
}

int max_switch_t(int n, QuadricKind kind, SwitchVariant variant) noexcept {
  if (kind == QuadricKind::parabolic || n % 2 == 0 || n < 5) return 0;
  if (variant == SwitchVariant::pair && kind == QuadricKind::hyperbolic) return (n - 5) / 2;
  return (n - 3) / 2;
}

void validate_config(const SwitchConfig& c) {
  auto fail = [](const std::string& why) { throw Error(Errc::invalid_config, why); };
  const QuadraticForm& form = c.form;
  require_switchable(form);
  const int n = form.dimension();
  const int bound = max_switch_t(n, form.kind(), c.variant());
  if (c.t < 1 || c.t > bound) {
    fail("t=" + std::to_string(c.t) + " outside [1, " + std::to_string(bound) + "] for " +
         std::string(to_string(form.kind())) + " n=" + std::to_string(n) + " variant " +
         std::string(to_string(c.variant())));
  }
  if (c.alpha.vdim() != c.t + 1) fail("alpha is not a projective t-space");
  for (auto p : c.alpha.points()) {
    if (!form.on_quadric(p)) fail("alpha is not contained in the quadric");
  }
  if (c.pi.vdim() != c.t + 2 || !c.pi.contains(c.alpha)) {
    fail("Pi is not a (t+1)-space through alpha");
  }
  if (!meets_quadric_exactly_in(form, c.pi, c.alpha)) fail("Pi meets Q outside alpha");
  if (c.pi2) {
    if (c.pi2->vdim() != c.t + 2 || !c.pi2->contains(c.alpha)) {
      fail("Pi' is not a (t+1)-space through alpha");
    }
    if (*c.pi2 == c.pi) fail("Pi' equals Pi");
    if (!meets_quadric_exactly_in(form, *c.pi2, c.alpha)) fail("Pi' meets Q outside alpha");
    if (!meets_quadric_exactly_in(form, c.pi.joined(*c.pi2), c.alpha)) {
      fail("<Pi, Pi'> meets Q outside alpha");
    }
  }
}

void for_each_singular_subspace(const QuadraticForm& form, int t,
                                const std::function<bool(const Subspace&)>& visit) {
  if (t < 0 || t > form.dimension()) {
    throw Error(Errc::invalid_request, "t must lie in [0, n]");
  }
  const auto candidates = quadric_points(form);
  std::vector<Point> chosen;
  bool stop = false;
  // Depth-first over increasing, reduced, pairwise-orthogonal quadric points.
  // Q vanishes on the span of such points, and each subspace is reached once.
  std::function<void(const Subspace&, std::size_t)> dfs = [&](const Subspace& cur,
                                                               std::size_t from) {
    if (static_cast<int>(chosen.size()) == t + 1) {
      stop = !visit(cur);
      return;
    }
    for (std::size_t i = from; i < candidates.size() && !stop; ++i) {
      const Point p = candidates[i];
      if (!is_reduced(p, cur) || !orthogonal_to_all(form, p, chosen)) continue;
      chosen.push_back(p);
      dfs(cur.joined(p), i + 1);
      chosen.pop_back();
    }
  };
  dfs(Subspace(form.dimension()), 0);
}

Subspace find_singular_subspace(const QuadraticForm& form, int t) {
  std::optional<Subspace> found;
  for_each_singular_subspace(form, t, [&](const Subspace& s) {
    found = s;
    return false;
  });
  if (!found) {
    throw Error(Errc::not_found, "no projective " + std::to_string(t) +
                                     "-space lies on the " +
                                     std::string(to_string(form.kind())) + " quadric");
  }
  return *found;
}

Subspace find_tangent_space(const QuadraticForm& form, const Subspace& alpha) {
  require_switchable(form);
  for (auto p : extension_points(form, alpha)) {
    Subspace pi = alpha.joined(p);
    if (meets_quadric_exactly_in(form, pi, alpha)) return pi;
  }
  throw Error(Errc::not_found, "no (t+1)-space through alpha meets Q exactly in alpha");
}

Subspace find_second_tangent_space(const QuadraticForm& form, const Subspace& alpha,
                                   const Subspace& pi) {
  require_switchable(form);
  // Candidates come from alpha^perp \ Q; only points off Pi^perp can work,
  // and the pointwise checks below decide.
  for (auto p : extension_points(form, alpha)) {
    if (pi.contains(p)) continue;
    Subspace pi2 = alpha.joined(p);
    if (valid_second(form, alpha, pi, pi2)) return pi2;
  }
  throw Error(Errc::not_found, "no Pi' exists: no second (t+1)-space through alpha with "
                               "<Pi, Pi'> meeting Q exactly in alpha");
}

SwitchConfig make_config(const QuadraticForm& form, int t, SwitchVariant variant,
                         std::size_t choice) {
  require_switchable(form);
  const int bound = max_switch_t(form.dimension(), form.kind(), variant);
  if (t < 1 || t > bound) {
    if (variant == SwitchVariant::pair && t >= 1 &&
        t <= max_switch_t(form.dimension(), form.kind(), SwitchVariant::single)) {
      throw Error(Errc::not_found,
                  "no Pi' exists for t=" + std::to_string(t) + " on the " +
                      std::string(to_string(form.kind())) + " quadric with n=" +
                      std::to_string(form.dimension()) + " (requires t <= " +
                      std::to_string(bound) + ")");
    }
    throw Error(Errc::invalid_request, "t=" + std::to_string(t) + " outside [1, " +
                                           std::to_string(bound) + "]");
  }
  std::optional<SwitchConfig> result;
  std::size_t seen = 0;
  for_each_singular_subspace(form, t, [&](const Subspace& alpha) {
    const auto ext = extension_points(form, alpha);
    for (std::size_t i = 0; i < ext.size(); ++i) {
      Subspace pi = alpha.joined(ext[i]);
      if (!meets_quadric_exactly_in(form, pi, alpha)) continue;
      if (variant == SwitchVariant::single) {
        if (seen++ == choice) {
          result = SwitchConfig{form, t, alpha, pi, std::nullopt};
          return false;
        }
        continue;
      }
      for (std::size_t j = i + 1; j < ext.size(); ++j) {
        if (pi.contains(ext[j])) continue;
        Subspace pi2 = alpha.joined(ext[j]);
        if (!valid_second(form, alpha, pi, pi2)) continue;
        if (seen++ == choice) {
          result = SwitchConfig{form, t, alpha, pi, pi2};
          return false;
        }
      }
    }
    return true;
  });
  if (!result) {
    if (seen == 0 && variant == SwitchVariant::pair) {
      throw Error(Errc::not_found, "no Pi' exists for this quadric and t");
    }
    throw Error(Errc::not_found, "only " + std::to_string(seen) +
                                     " switching configurations exist, choice " +
                                     std::to_string(choice) + " requested");
  }
  validate_config(*result);
  return *result;
}

std::vector<Point> build_S(const SwitchConfig& config) {
  validate_config(config);
  std::vector<Point> out;
  auto add = [&](const Subspace& s) {
    for (auto p : s.points()) {
      if (!config.alpha.contains(p)) out.push_back(p);
    }
  };
  add(config.pi);
  if (config.pi2) add(*config.pi2);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Point> T_formula(const SwitchConfig& config) {
  validate_config(config);
  const QuadraticForm& form = config.form;
  const Subspace alpha_perp = perp(form, config.alpha);
  std::vector<Point> out;
  std::optional<Subspace> pi_perp;
  std::optional<Subspace> pi2_perp;
  std::vector<Point> S;
  if (config.pi2) {
    pi_perp = perp(form, config.pi);
    pi2_perp = perp(form, *config.pi2);
    S = build_S(config);
  }
  for (std::uint32_t x = 1; x < form.space_size(); ++x) {
    const Point p{x};
    if (form.on_quadric(p)) continue;
    bool in_t = !alpha_perp.contains(p);
    if (!in_t && config.pi2) {
      in_t = pi_perp->contains(p) != pi2_perp->contains(p) &&
             !std::binary_search(S.begin(), S.end(), p);
    }
    if (in_t) out.push_back(p);
  }
  return out;
}

std::size_t expected_S_size(int t, SwitchVariant variant) noexcept {
  return std::size_t{1} << (variant == SwitchVariant::single ? t + 1 : t + 2);
}

std::size_t expected_T_size(int n, QuadricKind kind, int t, SwitchVariant variant) noexcept {
  const long long two_n = 1LL << n;
  long long size = two_n - (1LL << (n - t - 1));
  if (variant == SwitchVariant::pair) {
    const long long h = 1LL << ((n - 1) / 2);
    size = two_n + (kind == QuadricKind::elliptic ? h : -h) - (1LL << (n - t - 2)) -
           (1LL << (t + 2));
  }
  return static_cast<std::size_t>(size);
}

std::vector<std::size_t> vertex_indices(const Graph& g, std::span<const Point> points) {
  std::vector<std::size_t> out;
  out.reserve(points.size());
  for (auto p : points) {
    auto idx = g.index_of(p);
    if (!idx) {
      throw Error(Errc::not_a_vertex, "point " + std::to_string(p.bits) + " is not a vertex");
    }
    out.push_back(*idx);
  }
  std::sort(out.begin(), out.end());
  return out;
}

SwitchCertificate validate_switching_set(const Graph& g, std::span<const std::size_t> S) {
  const std::size_t v = g.vertex_count();
  SwitchCertificate cert;
  cert.S.assign(S.begin(), S.end());
  std::sort(cert.S.begin(), cert.S.end());
  if (cert.S.empty() || cert.S.size() % 2 != 0) {
    throw Error(Errc::invalid_request, "switching set must be nonempty of even size");
  }
  if (std::adjacent_find(cert.S.begin(), cert.S.end()) != cert.S.end() || cert.S.back() >= v) {
    throw Error(Errc::invalid_request, "switching set has repeated or out-of-range vertices");
  }
  BitVec mask(v);
  for (auto s : cert.S) mask.set(s);

  cert.induced_degree = g.row(cert.S.front()).and_count(mask);
  for (auto s : cert.S) {
    if (g.row(s).and_count(mask) != cert.induced_degree) {
      throw NotASwitchingSet("induced subgraph on S is not regular at vertex " +
                                 std::to_string(s),
                             s);
    }
  }
  const std::size_t size = cert.S.size();
  for (std::size_t x = 0; x < v; ++x) {
    if (mask.test(x)) continue;
    const std::size_t c = g.row(x).and_count(mask);
    if (c == 0) {
      cert.none.push_back(x);
    } else if (c == size) {
      cert.all.push_back(x);
    } else if (2 * c == size) {
      cert.half.push_back(x);
    } else {
      throw NotASwitchingSet("vertex " + std::to_string(x) + " has " + std::to_string(c) +
                                 " neighbours in S of size " + std::to_string(size),
                             x);
    }
  }
  return cert;
}

Graph gm_switch(const Graph& g, std::span<const std::size_t> S) {
  const SwitchCertificate cert = validate_switching_set(g, S);
  const std::size_t v = g.vertex_count();
  BitVec s_mask(v);
  for (auto s : cert.S) s_mask.set(s);
  BitVec half_mask(v);
  for (auto x : cert.half) half_mask.set(x);

  std::vector<BitVec> rows(g.rows().begin(), g.rows().end());
  for (auto x : cert.half) rows[x] ^= s_mask;
  for (auto s : cert.S) rows[s] ^= half_mask;
  return Graph(std::vector<Point>(g.labels().begin(), g.labels().end()), std::move(rows));
}

Line find_external_line(const QuadraticForm& form, const Subspace& avoid,
                        std::optional<Point> through) {
  auto clear = [&](std::uint32_t x) {
    return !form.on_quadric(Point{x}) && !avoid.contains(Point{x});
  };
  const std::uint32_t end = form.space_size();
  if (through) {
    const Point p = *through;
    if (form.on_quadric(p) || !avoid.contains(p)) {
      throw Error(Errc::invalid_request, "tangent mode needs a point off Q inside the avoided space");
    }
    for (std::uint32_t y = 1; y < end; ++y) {
      const std::uint32_t z = p.bits ^ y;
      if (y == p.bits || z < y) continue;
      if (clear(y) && clear(z)) {
        Line l{p, Point{y}, Point{z}};
        std::sort(l.begin(), l.end());
        return l;
      }
    }
  } else {
    for (std::uint32_t x = 1; x < end; ++x) {
      if (!clear(x)) continue;
      for (std::uint32_t y = x + 1; y < end; ++y) {
        const std::uint32_t z = x ^ y;
        if (z > y && clear(y) && clear(z)) return Line{Point{x}, Point{y}, Point{z}};
      }
    }
  }
  throw Error(Errc::not_found, "no external line with the requested position");
}

}  // namespace gmsrg
