#include "gmsrg/srg.hpp"

#include <cmath>
#include <string>

namespace gmsrg {
namespace {

long long isqrt(long long x) {
  if (x < 0) return -1;
  auto r = static_cast<long long>(std::sqrt(static_cast<double>(x)));
  while (r * r > x) --r;
  while ((r + 1) * (r + 1) <= x) ++r;
  return r;
}

std::string pair_text(std::size_t a, std::size_t b) {
  return "(" + std::to_string(a) + ", " + std::to_string(b) + ")";
}

}  // namespace

std::optional<Spectrum> spectrum_from(long long v, long long k, long long lambda,
                                      long long mu) {
  // r, s are the roots of x^2 - (lambda - mu) x - (k - mu).
  const long long b = lambda - mu;
  const long long disc = b * b + 4 * (k - mu);
  const long long d = isqrt(disc);
  if (d < 0 || d * d != disc || (b + d) % 2 != 0) return std::nullopt;
  Spectrum sp;
  sp.r = (b + d) / 2;
  sp.s = (b - d) / 2;
  if (sp.r == sp.s) return std::nullopt;
  // f + g = v - 1 and k + f r + g s = 0.
  const long long num = -k - (v - 1) * sp.s;
  if (num % (sp.r - sp.s) != 0) return std::nullopt;
  sp.f = num / (sp.r - sp.s);
  sp.g = v - 1 - sp.f;
  return sp;
}

Graph build_gamma(const QuadraticForm& form) {
  const int n = form.dimension();
  if (form.kind() == QuadricKind::parabolic || n % 2 == 0 || n < 5) {
    throw Error(Errc::unsupported_quadric,
                "Gamma_Q needs an elliptic or hyperbolic quadric with odd n >= 5, got " +
                    std::string(to_string(form.kind())) + " n=" + std::to_string(n));
  }
  std::vector<Point> labels;
  for (std::uint32_t x = 1; x < form.space_size(); ++x) {
    if (!form.on_quadric(Point{x})) labels.push_back(Point{x});
  }
  const std::size_t v = labels.size();
  std::vector<BitVec> adj(v, BitVec(v));
  for (std::size_t i = 0; i < v; ++i) {
    for (std::size_t j = i + 1; j < v; ++j) {
      if (classify_line(form, labels[i], labels[j]) == LineClass::external) {
        adj[i].set(j);
        adj[j].set(i);
      }
    }
  }
  return Graph(std::move(labels), std::move(adj));
}

SrgParams verify_srg(const Graph& g) {
  const std::size_t v = g.vertex_count();
  if (v < 2) throw NotStronglyRegular("graph has fewer than 2 vertices", 0, 0);
  const std::size_t k = g.degree(0);
  for (std::size_t i = 1; i < v; ++i) {
    if (g.degree(i) != k) {
      throw NotStronglyRegular("not regular: degrees differ at " + pair_text(0, i), 0, i);
    }
  }
  if (k == 0) throw NotStronglyRegular("empty graph is a degenerate SRG", 0, 1);
  if (k == v - 1) throw NotStronglyRegular("complete graph is a degenerate SRG", 0, 1);

  std::optional<std::size_t> lambda;
  std::optional<std::size_t> mu;
  for (std::size_t i = 0; i < v; ++i) {
    for (std::size_t j = i + 1; j < v; ++j) {
      const std::size_t common = g.row(i).and_count(g.row(j));
      auto& slot = g.adjacent(i, j) ? lambda : mu;
      if (!slot) {
        slot = common;
      } else if (*slot != common) {
        throw NotStronglyRegular(
            std::string(g.adjacent(i, j) ? "adjacent" : "non-adjacent") +
                " pair " + pair_text(i, j) + " has " + std::to_string(common) +
                " common neighbours, expected " + std::to_string(*slot),
            i, j);
      }
    }
  }
  SrgParams p;
  p.v = static_cast<long long>(v);
  p.k = static_cast<long long>(k);
  p.lambda = static_cast<long long>(*lambda);
  p.mu = static_cast<long long>(*mu);
  p.spectrum = spectrum_from(p.v, p.k, p.lambda, p.mu);
  return p;
}

SrgParams expected_params(int n, QuadricKind kind) {
  if (n < 5 || n % 2 == 0 || n > max_dimension || kind == QuadricKind::parabolic) {
    throw Error(Errc::invalid_request,
                "Gamma_Q parameters are defined for odd n >= 5 and elliptic or "
                "hyperbolic quadrics");
  }
  const long long p_n = 1LL << n;
  const long long p_n1 = 1LL << (n - 1);
  const long long p_n2 = 1LL << (n - 2);
  const long long h = 1LL << ((n - 1) / 2);
  const long long h3 = 1LL << ((n - 3) / 2);
  const long long third_big = ((1LL << (n + 1)) - 4) / 3;
  const long long third_small = (p_n + 1) / 3;
  SrgParams p;
  Spectrum sp;
  if (kind == QuadricKind::elliptic) {
    p.v = p_n + h;
    p.k = p_n1 + h;
    p.lambda = p_n2 + h3;
    p.mu = p_n2 + h;
    sp = Spectrum{h3, -h, third_big, third_small + h};
  } else {
    p.v = p_n - h;
    p.k = p_n1 - h;
    p.lambda = p_n2 - h3;
    p.mu = p_n2 - h;
    sp = Spectrum{h, -h3, third_small - h, third_big};
  }
  p.spectrum = sp;
  return p;
}

}  // namespace gmsrg
