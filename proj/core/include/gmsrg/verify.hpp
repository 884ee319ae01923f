#pragma once

// End-to-end checks of the quadric graphs, their switchings and their codes.
// Each check returns a deterministic verdict plus human-readable notes; the
// CLI serializes them and the acceptance suite prints them.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gmsrg/codes.hpp"
#include "gmsrg/gf2geom.hpp"
#include "gmsrg/graph.hpp"
#include "gmsrg/switching.hpp"

namespace gmsrg {

struct CheckResult {
  std::string id;
  std::string title;
  bool applicable = true;
  bool passed = true;
  std::vector<std::string> notes;

  void fail(std::string note) {
    passed = false;
    notes.push_back("FAIL " + std::move(note));
  }
  void note(std::string text) { notes.push_back(std::move(text)); }
};

/// One legal switching of Gamma_Q with everything derived from it.
struct SwitchCase {
  int t = 0;
  SwitchVariant variant = SwitchVariant::single;
  std::optional<std::string> error;  // set when construction failed
  std::optional<SwitchConfig> config;
  std::vector<Point> S;
  std::vector<Point> T;
  std::optional<SwitchCertificate> cert;
  Graph switched;
  std::optional<BinaryCode> code;

  std::string label() const;
};

struct QuadricCase {
  int n = 0;
  QuadricKind kind = QuadricKind::elliptic;
  QuadraticForm form;
  Graph gamma;
  BinaryCode code;
  std::vector<SwitchCase> switches;
};

/// Gamma_Q plus every legal (t, variant) switching with canonical choices.
QuadricCase build_case(int n, QuadricKind kind);

CheckResult check_quadric_sizes(std::span<const int> dims);
CheckResult check_gamma_srg(std::span<const QuadricCase> cases);
CheckResult check_external_lines(std::span<const QuadricCase> cases);
CheckResult check_switching_validity(std::span<const QuadricCase> cases);
CheckResult check_switched_srg(std::span<const QuadricCase> cases);
CheckResult check_gamma_codes(std::span<const QuadricCase> cases);
CheckResult check_switched_codes(std::span<const QuadricCase> cases);
CheckResult check_membership(std::span<const QuadricCase> cases);
CheckResult check_family_counts(std::span<const int> dims);
CheckResult check_cross_checks(std::span<const int> dims);

/// Whether different (alpha, Pi[, Pi']) choices give isomorphic switched
/// graphs; reported only, never asserted.
CheckResult observe_choice_invariance(int n, std::size_t alternatives = 2);

/// Every check for one n (criteria 1-10); non-applicable ones are marked.
std::vector<CheckResult> verify_all(int n);

}  // namespace gmsrg
