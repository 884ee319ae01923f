#pragma once

#include <cstddef>
#include <optional>
#include <utility>

#include "gmsrg/error.hpp"
#include "gmsrg/gf2geom.hpp"
#include "gmsrg/graph.hpp"

namespace gmsrg {

/// Restricted eigenvalues r > s of an SRG and their multiplicities f, g.
struct Spectrum {
  long long r = 0;
  long long s = 0;
  long long f = 0;
  long long g = 0;

  friend bool operator==(const Spectrum&, const Spectrum&) = default;
};

struct SrgParams {
  long long v = 0;
  long long k = 0;
  long long lambda = 0;
  long long mu = 0;
  /// Empty when the restricted eigenvalues are irrational (conference graphs).
  std::optional<Spectrum> spectrum;

  friend bool operator==(const SrgParams&, const SrgParams&) = default;
};

/// Integral eigenvalue data derived from (v, k, lambda, mu), if it exists.
std::optional<Spectrum> spectrum_from(long long v, long long k, long long lambda,
                                      long long mu);

class NotStronglyRegular : public Error {
 public:
  NotStronglyRegular(const std::string& what, std::size_t a, std::size_t b)
      : Error(Errc::not_strongly_regular, what), witness_(a, b) {}

  /// A vertex pair on which the defining identity fails.
  std::pair<std::size_t, std::size_t> witness() const noexcept { return witness_; }

 private:
  std::pair<std::size_t, std::size_t> witness_;
};

/// Gamma_Q: vertices are the points off the quadric in ascending order, and
/// x ~ y iff the line xy is external. Requires an elliptic or hyperbolic form
/// with odd n >= 5.
Graph build_gamma(const QuadraticForm& form);

/// Checks A^2 = kI + lambda A + mu (J - I - A) exactly. Complete and empty
/// graphs are rejected.
SrgParams verify_srg(const Graph& g);

/// Closed-form parameters of Gamma_Q, including r, s, f, g.
SrgParams expected_params(int n, QuadricKind kind);

}  // namespace gmsrg
