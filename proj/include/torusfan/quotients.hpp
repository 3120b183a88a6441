#pragma once

#include <optional>
#include <string>
#include <vector>

#include "torusfan/fans.hpp"
#include "torusfan/gitfan.hpp"

namespace torusfan {

/// N_lambda, the normal fan of the fiber over a relative interior point of
/// lambda. Throws unless lambda is in q0.
Fan git_quotient_fan(const TorusDowngrade& d, const GitFan& git, const Cone& lambda);
Fan git_quotient_fan(const TorusDowngrade& d, const Cone& lambda);

/// C_Y as the common refinement of the N_lambda.
Fan chow_quotient_fan(const TorusDowngrade& d, const GitFan& git);
Fan chow_quotient_fan(const TorusDowngrade& d);
/// C_Y as the normal fan of the Minkowski sum of one fiber per lambda.
Fan chow_quotient_fan_minkowski(const TorusDowngrade& d, const GitFan& git);

/// alpha^{-1}(C_Y) refined by sigma.
Fan ah_fan(const TorusDowngrade& d, const Fan& chow);
Fan ah_fan(const TorusDowngrade& d);

struct HilbertResult {
  Fan fan;
  int bound = 0;
  /// Same fan one step earlier (explicit bound) or in the last two doubling
  /// rounds (automatic bound). Not a proof of finality.
  bool stabilized = false;
  /// Distinct normal fans of integer hulls met during enumeration.
  std::size_t distinct_hull_fans = 0;
};

/// Refines the N_lambda by the normal fans of the integer hulls P_chi^I for
/// all lattice chi in the relative interior of the weight cone with
/// max-norm <= bound.
HilbertResult hilbert_main_fan(const TorusDowngrade& d, const GitFan& git, int bound);
HilbertResult hilbert_main_fan(const TorusDowngrade& d, int bound);
/// Doubles the bound from 1 until two consecutive rounds leave the fan
/// unchanged, or the cap is reached.
HilbertResult hilbert_main_fan_auto(const TorusDowngrade& d, const GitFan& git, int cap = 64);

/// alpha^{-1}(C_H0) refined by sigma.
Fan universal_main_fan(const TorusDowngrade& d, const Fan& hilbert);

/// All vertices of P_chi are lattice points. Throws if chi is outside the weight cone.
bool is_integer_character(const TorusDowngrade& d, const RatVector& chi);

struct QuotientBundle {
  GitFan git;
  std::vector<Fan> n_fans;  // one per cone of git.q0
  Fan chow_fan;
  Fan chow_fan_minkowski;
  Fan ah_fan;
  HilbertResult hilbert;
  Fan universal_fan;
};

/// Runs the whole pipeline; without a bound the Hilbert fan uses the doubling scheme.
QuotientBundle compute_quotients(const TorusDowngrade& d, std::optional<int> bound = std::nullopt, int cap = 64);

struct DiagramCheck {
  std::string name;
  bool passed = false;
};

struct DiagramReport {
  std::vector<DiagramCheck> checks;
  bool hilbert_equals_chow = false;
  bool hilbert_stabilized = false;
  int bound = 0;
  bool all_passed() const;
  std::string to_text() const;
};

DiagramReport verify_diagram(const TorusDowngrade& d, const QuotientBundle& bundle);

}  // namespace torusfan
