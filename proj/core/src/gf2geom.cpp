#include "gmsrg/gf2geom.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "gmsrg/error.hpp"

namespace gmsrg {
namespace {

int parity(std::uint32_t x) noexcept { return std::popcount(x) & 1; }

bool parity_matches(int n, QuadricKind kind) noexcept {
  return (kind == QuadricKind::parabolic) == (n % 2 == 0);
}

// Linear functional y -> B(x, y) as a bit mask over coordinates.
std::uint32_t polar_functional(const QuadraticForm& form, std::uint32_t x) {
  std::uint32_t mask = 0;
  const int q_x = form.evaluate(x);
  for (int i = 0; i <= form.dimension(); ++i) {
    const std::uint32_t e = 1U << i;
    if ((form.evaluate(x ^ e) ^ q_x ^ form.evaluate(e)) != 0) mask |= e;
  }
  return mask;
}

// Basis of {x : parity(r & x) = 0 for every row r}, over n+1 coordinates.
std::vector<std::uint32_t> null_space(std::vector<std::uint32_t> rows, int n) {
  // Reduced echelon form, pivot = highest set bit.
  std::vector<std::uint32_t> ech;
  for (auto r : rows) {
    for (auto e : ech) {
      if (r & (1U << (std::bit_width(e) - 1))) r ^= e;
    }
    if (r == 0) continue;
    const std::uint32_t lead = 1U << (std::bit_width(r) - 1);
    for (auto& e : ech) {
      if (e & lead) e ^= r;
    }
    ech.push_back(r);
    std::sort(ech.begin(), ech.end(), std::greater<>());
  }
  std::uint32_t pivots = 0;
  for (auto e : ech) pivots |= 1U << (std::bit_width(e) - 1);

  std::vector<std::uint32_t> out;
  for (int c = 0; c <= n; ++c) {
    const std::uint32_t col = 1U << c;
    if (pivots & col) continue;
    std::uint32_t x = col;
    for (auto e : ech) {
      if (e & col) x |= 1U << (std::bit_width(e) - 1);
    }
    out.push_back(x);
  }
  return out;
}

}  // namespace

std::string_view to_string(QuadricKind kind) noexcept {
  switch (kind) {
    case QuadricKind::elliptic: return "elliptic";
    case QuadricKind::hyperbolic: return "hyperbolic";
    case QuadricKind::parabolic: return "parabolic";
  }
  return "unknown";
}

QuadricKind parse_kind(std::string_view text) {
  if (text == "elliptic") return QuadricKind::elliptic;
  if (text == "hyperbolic") return QuadricKind::hyperbolic;
  if (text == "parabolic") return QuadricKind::parabolic;
  throw Error(Errc::invalid_request,
              "unknown quadric kind '" + std::string(text) + "'");
}

void check_dimension(int n) {
  if (n < 1 || n > max_dimension) {
    throw Error(Errc::invalid_dimension,
                "projective dimension must lie in [1, " +
                    std::to_string(max_dimension) + "], got " +
                    std::to_string(n));
  }
}

std::vector<Point> enumerate_points(int n) {
  check_dimension(n);
  const std::uint32_t end = 1U << (n + 1);
  std::vector<Point> pts;
  pts.reserve(end - 1);
  for (std::uint32_t x = 1; x < end; ++x) pts.push_back(Point{x});
  return pts;
}

// --- QuadraticForm ---------------------------------------------------------

QuadraticForm::QuadraticForm(int n, QuadricKind kind,
                             std::vector<std::uint32_t> rows)
    : n_(n), kind_(kind), rows_(std::move(rows)), zeros_(space_size()) {
  for (std::uint32_t x = 1; x < space_size(); ++x) {
    if (evaluate(x) == 0) {
      zeros_.set(x);
      ++quadric_size_;
    }
  }
}

QuadraticForm QuadraticForm::from_coefficients(
    int n, QuadricKind kind, std::vector<std::uint32_t> upper_rows) {
  check_dimension(n);
  if (!parity_matches(n, kind)) {
    throw Error(Errc::kind_parity,
                std::string(to_string(kind)) + " quadric requires " +
                    (kind == QuadricKind::parabolic ? "even" : "odd") +
                    " n, got n=" + std::to_string(n));
  }
  if (upper_rows.size() != static_cast<std::size_t>(n + 1)) {
    throw Error(Errc::invalid_request, "coefficient matrix must have n+1 rows");
  }
  const std::uint32_t all = (1U << (n + 1)) - 1;
  for (std::size_t i = 0; i < upper_rows.size(); ++i) {
    // keep only the upper triangle j >= i
    upper_rows[i] &= all & ~((1U << i) - 1);
  }
  QuadraticForm form(n, kind, std::move(upper_rows));
  if (form.quadric_size() != expected_quadric_size(n, kind)) {
    throw Error(Errc::singular_form,
                "form has " + std::to_string(form.quadric_size()) +
                    " zeros, a non-singular " + std::string(to_string(kind)) +
                    " quadric has " +
                    std::to_string(expected_quadric_size(n, kind)));
  }
  return form;
}

bool QuadraticForm::coefficient(int i, int j) const noexcept {
  if (i > j) std::swap(i, j);
  return (rows_[i] >> j) & 1U;
}

std::vector<std::pair<int, int>> QuadraticForm::monomials() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i <= n_; ++i) {
    for (int j = i; j <= n_; ++j) {
      if (coefficient(i, j)) out.emplace_back(i, j);
    }
  }
  return out;
}

int QuadraticForm::evaluate(std::uint32_t x) const noexcept {
  int q = 0;
  for (int i = 0; i <= n_; ++i) {
    if ((x >> i) & 1U) q ^= parity(rows_[i] & x);
  }
  return q;
}

QuadraticForm canonical_form(int n, QuadricKind kind) {
  check_dimension(n);
  if (!parity_matches(n, kind)) {
    throw Error(Errc::kind_parity,
                std::string(to_string(kind)) + " quadric is not defined for n=" +
                    std::to_string(n));
  }
  std::vector<std::uint32_t> rows(static_cast<std::size_t>(n + 1), 0);
  auto add = [&](int i, int j) { rows[static_cast<std::size_t>(i)] |= 1U << j; };
  int first_pair = 0;
  switch (kind) {
    case QuadricKind::elliptic:
      add(0, 0);
      add(0, 1);
      add(1, 1);
      first_pair = 2;
      break;
    case QuadricKind::hyperbolic:
      first_pair = 0;
      break;
    case QuadricKind::parabolic:
      add(0, 0);
      first_pair = 1;
      break;
  }
  for (int i = first_pair; i + 1 <= n; i += 2) add(i, i + 1);
  return QuadraticForm::from_coefficients(n, kind, std::move(rows));
}

std::size_t expected_quadric_size(int n, QuadricKind kind) {
  check_dimension(n);
  const std::size_t two_n = std::size_t{1} << n;
  switch (kind) {
    case QuadricKind::elliptic:
      return two_n - (std::size_t{1} << ((n - 1) / 2)) - 1;
    case QuadricKind::hyperbolic:
      return two_n + (std::size_t{1} << ((n - 1) / 2)) - 1;
    case QuadricKind::parabolic:
      return two_n - 1;
  }
  return 0;
}

std::vector<Point> quadric_points(const QuadraticForm& form) {
  std::vector<Point> out;
  out.reserve(form.quadric_size());
  for (std::uint32_t x = 1; x < form.space_size(); ++x) {
    if (form.on_quadric(Point{x})) out.push_back(Point{x});
  }
  return out;
}

int bilinear(const QuadraticForm& form, Point x, Point y) noexcept {
  return form.evaluate(x.bits ^ y.bits) ^ form.evaluate(x.bits) ^
         form.evaluate(y.bits);
}

// --- Subspace --------------------------------------------------------------

Subspace::Subspace(int n) : n_(n) { check_dimension(n); }

std::uint32_t Subspace::reduce(std::uint32_t x) const noexcept {
  for (auto b : basis_) {
    if (x & (1U << (std::bit_width(b.bits) - 1))) x ^= b.bits;
  }
  return x;
}

void Subspace::insert(std::uint32_t x) {
  x = reduce(x);
  if (x == 0) return;
  const std::uint32_t lead = 1U << (std::bit_width(x) - 1);
  for (auto& b : basis_) {
    if (b.bits & lead) b.bits ^= x;
  }
  basis_.push_back(Point{x});
  std::sort(basis_.begin(), basis_.end(), std::greater<>());
}

bool Subspace::contains(Point p) const noexcept {
  return p.bits != 0 && reduce(p.bits) == 0;
}

bool Subspace::contains(const Subspace& other) const noexcept {
  return std::all_of(other.basis_.begin(), other.basis_.end(),
                     [&](Point b) { return reduce(b.bits) == 0; });
}

std::vector<Point> Subspace::points() const {
  std::vector<Point> out;
  out.reserve(point_count());
  std::uint32_t x = 0;
  // Gray-code walk over all nonzero combinations of the basis.
  for (std::uint32_t i = 1; i < (1U << basis_.size()); ++i) {
    x ^= basis_[static_cast<std::size_t>(std::countr_zero(i))].bits;
    out.push_back(Point{x});
  }
  std::sort(out.begin(), out.end());
  return out;
}

Subspace Subspace::joined(Point p) const {
  Subspace out = *this;
  out.insert(p.bits);
  return out;
}

Subspace Subspace::joined(const Subspace& other) const {
  Subspace out = *this;
  for (auto b : other.basis_) out.insert(b.bits);
  return out;
}

Subspace whole_space(int n) {
  Subspace s(n);
  for (int i = 0; i <= n; ++i) s = s.joined(Point{1U << i});
  return s;
}

Subspace span(std::span<const Point> points, int n) {
  if (points.empty()) throw Error(Errc::empty_span, "span of an empty point list");
  Subspace s(n);
  for (auto p : points) {
    if (p.bits == 0 || p.bits >= (1U << (n + 1))) {
      throw Error(Errc::invalid_request,
                  "point " + std::to_string(p.bits) + " is not in PG(" +
                      std::to_string(n) + ",2)");
    }
    s = s.joined(p);
  }
  return s;
}

Subspace perp(const QuadraticForm& form, const Subspace& u) {
  if (form.kind() == QuadricKind::parabolic) {
    throw Error(Errc::degenerate_polarity,
                "the polar form of a parabolic quadric is degenerate");
  }
  std::vector<std::uint32_t> rows;
  for (auto b : u.basis()) rows.push_back(polar_functional(form, b.bits));
  Subspace out(form.dimension());
  for (auto x : null_space(std::move(rows), form.dimension())) {
    out = out.joined(Point{x});
  }
  return out;
}

std::string_view to_string(LineClass c) noexcept {
  switch (c) {
    case LineClass::external: return "external";
    case LineClass::tangent: return "tangent";
    case LineClass::secant: return "secant";
    case LineClass::contained: return "contained";
  }
  return "unknown";
}

LineClass classify_line(const QuadraticForm& form, Point x, Point y) {
  if (x == y) throw Error(Errc::degenerate_line, "a line needs two distinct points");
  const int on = static_cast<int>(form.on_quadric(x)) +
                 static_cast<int>(form.on_quadric(y)) +
                 static_cast<int>(form.on_quadric(third_point(x, y)));
  return static_cast<LineClass>(on);
}

std::size_t count_external_lines_through(const QuadraticForm& form, Point x) {
  if (form.on_quadric(x)) {
    throw Error(Errc::not_external_point,
                "point " + std::to_string(x.bits) + " lies on the quadric");
  }
  std::size_t count = 0;
  for (std::uint32_t y = 1; y < form.space_size(); ++y) {
    const std::uint32_t z = x.bits ^ y;
    if (y == x.bits || y > z) continue;  // visit each line once, via y < z
    if (!form.on_quadric(Point{y}) && !form.on_quadric(Point{z})) ++count;
  }
  return count;
}

std::size_t count_external_lines(const QuadraticForm& form) {
  std::size_t count = 0;
  for (std::uint32_t x = 1; x < form.space_size(); ++x) {
    if (form.on_quadric(Point{x})) continue;
    for (std::uint32_t y = x + 1; y < form.space_size(); ++y) {
      const std::uint32_t z = x ^ y;
      if (z <= y) continue;
      if (!form.on_quadric(Point{y}) && !form.on_quadric(Point{z})) ++count;
    }
  }
  return count;
}

Point nucleus(const QuadraticForm& form) {
  if (form.kind() != QuadricKind::parabolic) {
    throw Error(Errc::no_nucleus,
                std::string(to_string(form.kind())) + " quadric has no nucleus");
  }
  std::vector<std::uint32_t> rows;
  for (int i = 0; i <= form.dimension(); ++i) {
    rows.push_back(polar_functional(form, 1U << i));
  }
  const auto radical = null_space(std::move(rows), form.dimension());
  if (radical.size() != 1) {
    throw Error(Errc::singular_form, "polar radical is not a single point");
  }
  return Point{radical.front()};
}

}  // namespace gmsrg
