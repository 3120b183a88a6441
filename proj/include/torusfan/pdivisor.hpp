#pragma once

#include <cstddef>
#include <random>
#include <vector>

#include "torusfan/fans.hpp"
#include "torusfan/gitfan.hpp"
#include "torusfan/polyhedra.hpp"

namespace torusfan {

/// Polyhedral divisor on the toric variety of the base fan. Coefficient i
/// sits on base.rays()[i]; coefficients and tail live in the coordinates of
/// the subtorus cocharacter lattice (basis: columns of the weight matrix).
struct PolyhedralDivisor {
  Fan base;
  std::vector<Polyhedron> coefficients;
  Cone tail;
  RatMatrix section;
};

/// One rational coefficient per ray of the base fan.
struct QDivisor {
  std::vector<Rat> coefficients;
};

/// Delta_rho = {t : s(v_rho) + S t in sigma}. `section` must be integral with
/// alpha * section = I.
PolyhedralDivisor downgrade_divisor(const TorusDowngrade& d, const Fan& chow, const RatMatrix& section);

/// a_rho = min <chi, Delta_rho>. Throws when chi is outside the weight cone.
QDivisor evaluate_divisor(const PolyhedralDivisor& pd, const RatVector& chi);

/// {u : <u, v_rho> >= -floor(a_rho)}.
Polyhedron section_polyhedron(const Fan& base, const QDivisor& qd);

struct SectionCount {
  std::size_t lhs = 0;  // lattice points of the section polyhedron
  std::size_t rhs = 0;  // lattice points of P_chi
  bool equal = false;
};

/// Throws when P_chi is unbounded.
SectionCount section_count_check(const TorusDowngrade& d, const PolyhedralDivisor& pd, const RatVector& chi);

/// section + S K for a random integer matrix K with entries in [-spread, spread].
RatMatrix random_section(const TorusDowngrade& d, std::mt19937_64& rng, int spread = 3);

}  // namespace torusfan
