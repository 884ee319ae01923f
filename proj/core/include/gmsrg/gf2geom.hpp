#pragma once

// Points, subspaces and non-singular quadrics of the binary projective space
// PG(n,2). A point is a nonzero vector of GF(2)^{n+1} stored as an integer;
// coordinate X_i is bit i (X_0 is the least significant bit).

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "gmsrg/bits.hpp"

namespace gmsrg {

/// Largest ambient projective dimension accepted anywhere in the library.
inline constexpr int max_dimension = 20;

struct Point {
  std::uint32_t bits = 0;

  friend auto operator<=>(const Point&, const Point&) = default;
};

/// The third point x + y on the line through distinct points x and y.
constexpr Point third_point(Point x, Point y) noexcept {
  return Point{x.bits ^ y.bits};
}

enum class QuadricKind { elliptic, hyperbolic, parabolic };

std::string_view to_string(QuadricKind kind) noexcept;
QuadricKind parse_kind(std::string_view text);

/// Throws invalid_dimension unless 1 <= n <= max_dimension.
void check_dimension(int n);

/// All 2^{n+1} - 1 points of PG(n,2) in ascending integer order.
std::vector<Point> enumerate_points(int n);

/// A quadratic form Q(x) = sum_{i<=j} a_ij x_i x_j over GF(2), tagged with its
/// quadric type. Construction checks non-singularity by counting zeros, and
/// the zero set is kept as a bitmap indexed by the point integer.
class QuadraticForm {
 public:
  /// upper_rows[i] has bit j set iff a_ij = 1 (only bits j >= i are used).
  static QuadraticForm from_coefficients(int n, QuadricKind kind,
                                         std::vector<std::uint32_t> upper_rows);

  int dimension() const noexcept { return n_; }
  QuadricKind kind() const noexcept { return kind_; }
  std::uint32_t space_size() const noexcept { return 1U << (n_ + 1); }

  bool coefficient(int i, int j) const noexcept;
  /// (i, j) pairs with i <= j and a_ij = 1, sorted.
  std::vector<std::pair<int, int>> monomials() const;

  /// Q(x) for any vector x, including 0; evaluates the polynomial directly.
  int evaluate(std::uint32_t x) const noexcept;
  bool on_quadric(Point p) const noexcept { return zeros_.test(p.bits); }
  std::size_t quadric_size() const noexcept { return quadric_size_; }

  friend bool operator==(const QuadraticForm& a, const QuadraticForm& b) {
    return a.n_ == b.n_ && a.kind_ == b.kind_ && a.rows_ == b.rows_;
  }

 private:
  QuadraticForm(int n, QuadricKind kind, std::vector<std::uint32_t> rows);

  int n_;
  QuadricKind kind_;
  std::vector<std::uint32_t> rows_;
  BitVec zeros_;  // bit x set iff x != 0 and Q(x) = 0
  std::size_t quadric_size_ = 0;
};

/// Canonical equations: elliptic X0^2+X0X1+X1^2+X2X3+...; hyperbolic
/// X0X1+X2X3+...; parabolic X0^2+X1X2+X3X4+...
QuadraticForm canonical_form(int n, QuadricKind kind);

/// Number of points on a non-singular quadric of the given type.
std::size_t expected_quadric_size(int n, QuadricKind kind);

std::vector<Point> quadric_points(const QuadraticForm& form);

/// Polarization B(x,y) = Q(x+y) + Q(x) + Q(y).
int bilinear(const QuadraticForm& form, Point x, Point y) noexcept;

/// Vector subspace of GF(2)^{n+1} held as a reduced row-echelon basis, so two
/// subspaces are equal iff their bases are equal. Basis rows are sorted by
/// descending leading bit and each leading bit is cleared in all other rows.
class Subspace {
 public:
  explicit Subspace(int n);  // the zero subspace (empty projective set)

  int ambient_dimension() const noexcept { return n_; }
  int vdim() const noexcept { return static_cast<int>(basis_.size()); }
  int projective_dimension() const noexcept { return vdim() - 1; }
  std::span<const Point> basis() const noexcept { return basis_; }
  std::size_t point_count() const noexcept {
    return (std::size_t{1} << basis_.size()) - 1;
  }

  bool contains(Point p) const noexcept;
  bool contains(const Subspace& other) const noexcept;
  /// Every point of the subspace, ascending.
  std::vector<Point> points() const;

  Subspace joined(Point p) const;
  Subspace joined(const Subspace& other) const;

  friend bool operator==(const Subspace&, const Subspace&) = default;
  friend auto operator<=>(const Subspace&, const Subspace&) = default;

 private:
  std::uint32_t reduce(std::uint32_t x) const noexcept;
  void insert(std::uint32_t x);

  int n_;
  std::vector<Point> basis_;
};

Subspace whole_space(int n);

/// Smallest subspace containing every input point. Throws empty_span on an
/// empty input.
Subspace span(std::span<const Point> points, int n);

/// {x : B(x,u) = 0 for all u in U}. Requires a non-degenerate bilinear form,
/// so parabolic forms throw degenerate_polarity.
Subspace perp(const QuadraticForm& form, const Subspace& u);

enum class LineClass { external, tangent, secant, contained };

std::string_view to_string(LineClass c) noexcept;

LineClass classify_line(const QuadraticForm& form, Point x, Point y);

/// Number of external lines of the quadric through a point off it.
std::size_t count_external_lines_through(const QuadraticForm& form, Point x);

/// Total number of external lines of the quadric.
std::size_t count_external_lines(const QuadraticForm& form);

/// The unique point of a parabolic quadric's ambient space through which
/// every line is tangent (the radical of the polar form).
Point nucleus(const QuadraticForm& form);

}  // namespace gmsrg
