#include "torusfan/quotients.hpp"

#include <algorithm>
#include <sstream>

namespace torusfan {

namespace {

void require_q0(const GitFan& git, const Cone& lambda) {
  if (std::find(git.q0.begin(), git.q0.end(), lambda) == git.q0.end())
    throw DowngradeError("cone does not meet the relative interior of the weight cone");
}

// Incremental enumeration of integer hull normal fans, shell by shell in the
// max-norm.
class HilbertEnumerator {
 public:
  HilbertEnumerator(const TorusDowngrade& d, const GitFan& git)
      : d_(d), omega_(git.weight_cone), fan_(chow_quotient_fan(d, git)) {
    process_shell(0);
  }

  void extend_to(int bound) {
    while (done_ < bound) process_shell(++done_);
  }

  const Fan& fan() const { return fan_; }
  std::size_t distinct() const { return seen_.size(); }

 private:
  void process_shell(int b) {
    const std::size_t k = d_.subtorus_rank();
    std::vector<long> chi(k, -b);
    while (true) {
      const bool on_shell = std::any_of(chi.begin(), chi.end(), [b](long x) { return x == b || x == -b; });
      if (on_shell || k == 0) visit(from_ints(chi));
      std::size_t j = k;
      while (j > 0 && chi[j - 1] == b) chi[--j] = -b;
      if (j == 0) break;
      ++chi[j - 1];
    }
  }

  void visit(const RatVector& chi) {
    if (omega_.classify(chi) != Membership::relative_interior) return;
    const Polyhedron hull = integer_hull(d_.fiber(chi));
    if (hull.is_empty()) return;
    Fan nf = normal_fan(hull);
    if (std::find(seen_.begin(), seen_.end(), nf) != seen_.end()) return;
    fan_ = common_refinement(fan_, nf);
    seen_.push_back(std::move(nf));
  }

  const TorusDowngrade& d_;
  Cone omega_;
  Fan fan_;
  std::vector<Fan> seen_;
  int done_ = 0;
};

}  // namespace

Fan git_quotient_fan(const TorusDowngrade& d, const GitFan& git, const Cone& lambda) {
  require_q0(git, lambda);
  return normal_fan(d.fiber(lambda.relint_point()).polytope);
}

Fan git_quotient_fan(const TorusDowngrade& d, const Cone& lambda) { return git_quotient_fan(d, git_fan(d), lambda); }

Fan chow_quotient_fan(const TorusDowngrade& d, const GitFan& git) {
  std::vector<Fan> fans;
  for (const auto& lambda : git.q0) fans.push_back(git_quotient_fan(d, git, lambda));
  if (fans.empty()) return Fan::from_cone(Cone::zero(d.quotient_rank()));
  return common_refinement(fans);
}

Fan chow_quotient_fan(const TorusDowngrade& d) { return chow_quotient_fan(d, git_fan(d)); }

Fan chow_quotient_fan_minkowski(const TorusDowngrade& d, const GitFan& git) {
  Polyhedron sum = Polyhedron::from_generators(d.quotient_rank(), {zero_vector(d.quotient_rank())});
  for (const auto& lambda : git.q0) sum = minkowski_sum(sum, d.fiber(lambda.relint_point()).polytope);
  return normal_fan(sum);
}

Fan ah_fan(const TorusDowngrade& d, const Fan& chow) {
  return refine_with_cone(preimage_quasifan(chow, d.alpha()), d.sigma());
}

Fan ah_fan(const TorusDowngrade& d) { return ah_fan(d, chow_quotient_fan(d)); }

HilbertResult hilbert_main_fan(const TorusDowngrade& d, const GitFan& git, int bound) {
  if (bound < 1) throw DowngradeError("enumeration bound must be at least 1");
  HilbertEnumerator e(d, git);
  e.extend_to(bound - 1);
  const Fan before = e.fan();
  e.extend_to(bound);
  return {e.fan(), bound, e.fan() == before, e.distinct()};
}

HilbertResult hilbert_main_fan(const TorusDowngrade& d, int bound) { return hilbert_main_fan(d, git_fan(d), bound); }

HilbertResult hilbert_main_fan_auto(const TorusDowngrade& d, const GitFan& git, int cap) {
  if (cap < 1) throw DowngradeError("enumeration cap must be at least 1");
  HilbertEnumerator e(d, git);
  int bound = 1;
  e.extend_to(bound);
  int stable_rounds = 0;
  while (stable_rounds < 2 && bound < cap) {
    const Fan before = e.fan();
    bound = std::min(2 * bound, cap);
    e.extend_to(bound);
    stable_rounds = e.fan() == before ? stable_rounds + 1 : 0;
  }
  return {e.fan(), bound, stable_rounds >= 2, e.distinct()};
}

Fan universal_main_fan(const TorusDowngrade& d, const Fan& hilbert) {
  return refine_with_cone(preimage_quasifan(hilbert, d.alpha()), d.sigma());
}

bool is_integer_character(const TorusDowngrade& d, const RatVector& chi) {
  if (!weight_cone(d).contains(chi)) throw DowngradeError("character " + to_string(chi) + " lies outside the weight cone");
  const auto verts = d.fiber(chi).ambient_vertices();
  return std::all_of(verts.begin(), verts.end(), [](const RatVector& v) { return is_integer(v); });
}

QuotientBundle compute_quotients(const TorusDowngrade& d, std::optional<int> bound, int cap) {
  QuotientBundle b;
  b.git = git_fan(d);
  for (const auto& lambda : b.git.q0) b.n_fans.push_back(git_quotient_fan(d, b.git, lambda));
  b.chow_fan = b.n_fans.empty() ? Fan::from_cone(Cone::zero(d.quotient_rank())) : common_refinement(b.n_fans);
  b.chow_fan_minkowski = chow_quotient_fan_minkowski(d, b.git);
  b.ah_fan = ah_fan(d, b.chow_fan);
  b.hilbert = bound ? hilbert_main_fan(d, b.git, *bound) : hilbert_main_fan_auto(d, b.git, cap);
  b.universal_fan = universal_main_fan(d, b.hilbert.fan);
  return b;
}

// ------------------------------------------------------------------- report

bool DiagramReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const DiagramCheck& c) { return c.passed; });
}

std::string DiagramReport::to_text() const {
  std::ostringstream out;
  for (const auto& c : checks) out << (c.passed ? "PASS " : "FAIL ") << c.name << '\n';
  out << "note: C_H0 " << (hilbert_equals_chow ? "equals" : "differs from") << " C_Y\n";
  out << "note: enumeration bound " << bound << (hilbert_stabilized ? " (stabilized)" : " (not stabilized)") << '\n';
  return out.str();
}

DiagramReport verify_diagram(const TorusDowngrade& d, const QuotientBundle& b) {
  DiagramReport r;
  auto add = [&r](std::string name, bool ok) { r.checks.push_back({std::move(name), ok}); };
  const Fan sigma_fan = Fan::from_cone(d.sigma());
  const RatMatrix id_n = RatMatrix::identity(d.rank());
  const RatMatrix id_q = RatMatrix::identity(d.quotient_rank());

  add("C_H0 refines C_Y with equal support", is_refinement(b.hilbert.fan, b.chow_fan));
  add("C_U0 refines C_X with equal support", is_refinement(b.universal_fan, b.ah_fan));
  add("|C_U0| = sigma", supports_equal(b.universal_fan, sigma_fan));
  add("|C_X| = sigma", supports_equal(b.ah_fan, sigma_fan));
  bool proper = false;
  try {
    proper = check_proper(id_n, b.ah_fan, sigma_fan);
  } catch (const FanError&) {
  }
  add("C_X -> sigma is proper", proper);
  add("alpha maps C_X into C_Y", check_compatible(d.alpha(), b.ah_fan, b.chow_fan));
  add("alpha maps C_U0 into C_H0", check_compatible(d.alpha(), b.universal_fan, b.hilbert.fan));
  for (std::size_t i = 0; i < b.n_fans.size(); ++i)
    add("C_Y maps to N_lambda[" + std::to_string(i) + "]", check_compatible(id_q, b.chow_fan, b.n_fans[i]));
  add("C_Y agrees with the Minkowski sum normal fan", b.chow_fan == b.chow_fan_minkowski);

  const std::vector<Cone> chow_cones = b.chow_fan.cones();
  bool pulled_back = true;
  for (const auto& tau : b.ah_fan.maximal_cones()) {
    const bool found = std::any_of(chow_cones.begin(), chow_cones.end(), [&](const Cone& delta) {
      return intersect(map_cone(delta, d.alpha(), MapDirection::preimage), d.sigma()) == tau;
    });
    pulled_back = pulled_back && found;
  }
  add("every maximal cone of C_X is alpha^{-1}(delta) ∩ sigma", pulled_back);

  r.hilbert_equals_chow = b.hilbert.fan == b.chow_fan;
  r.hilbert_stabilized = b.hilbert.stabilized;
  r.bound = b.hilbert.bound;
  return r;
}

}  // namespace torusfan
