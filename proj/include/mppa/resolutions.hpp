#pragma once

#include "mppa/bimodule.hpp"
#include "mppa/identity.hpp"

#include <vector>

namespace mppa {

struct BimoduleComplex {
  ModulePtr module;
  BimoduleMapPtr d;
};

// Marker leaf e_L [m] e_R.
BimoduleExprPtr marker_leaf(const FreeBimodule& m, int marker);
BimoduleExprPtr marker_leaf(const FreeBimodule& m, const std::string& marker);

// One equation per source marker: d_T f = f d_S (or with the given sign).
std::vector<Equation> chain_map_equations(const BimoduleMapPtr& f, const BimoduleComplex& src,
                                          const BimoduleComplex& tgt, const Rational& sign = 1);
// One equation per marker of f's source: g(marker) == h(marker).
std::vector<Equation> map_equality_equations(const BimoduleMapPtr& g, const BimoduleMapPtr& h,
                                             const std::vector<std::string>& markers = {});

// Two-term resolution A ⊗ kE ⊗ A -> A ⊗_R A for an algebra whose listed
// generators have inverse generators, and its dual shifted by one.
struct SmallResolution {
  AlgebraPtr alg;
  std::vector<std::string> gens;
  BimoduleComplex R;      // r1_<g> (degree 1), r0_<v> (degree 0)
  BimoduleComplex Rdual;  // rd1_<v> (degree 1) dual to r0, rd0_<g> (degree 0) dual to r1
  DualMarkers dual;       // R -> Rdual identification
  BimoduleMapPtr phi;     // product with g^{-1}⊗1 (one generator only)
  BimoduleMapPtr psi;     // product with g⊗1
};

SmallResolution small_resolution(const AlgebraPtr& alg);

struct FiberScalars {
  Rational degree1;
  Rational degree0;
  bool differentials_vanish = false;
};

// -⊗_{A^e} k^e along x -> q applied to phi.
FiberScalars eval_fiber(const SmallResolution& r, const Rational& q);

// Action of A^e on A ⊗_R A: compatibility of ((a⊗b)(a'⊗b'))·m with
// (a⊗b)·((a'⊗b')·m) under the opposite (true) or the naive (false) product.
bool ae_action_compatible(const AlgebraPtr& alg, const std::vector<std::string>& elements, bool opposite);

// Maps of the A_2 non-degeneracy argument.
struct A2Maps {
  AlgebraPtr alg;
  ModulePtr K;   // k1_1, k1_2 (degree 1), k0_1, k0_2 (degree 0)
  ModulePtr Kd;  // kd1_i dual to k0_i (degree 1), kd0_i dual to k1_i (degree 0)
  ModulePtr P;   // m_e, m_estar (degree 1), U_1, U_2 (degree 0)
  ModulePtr Pd;  // u_v dual to U_v (degree 1), n_b identified with -dual(m_{b*}) (degree 0)
  DualMarkers dualK, dualP;
  BimoduleComplex cK, cKd, cP, cPd;
  BimoduleMapPtr dK_literal;  // second component without the sign correction
  BimoduleMapPtr umap;        // (f, τ): K -> P
  BimoduleMapPtr udual;       // (f∨, τ∨): Pd -> Kd
  BimoduleMapPtr m;           // internal product: Kd -> K
  BimoduleMapPtr h;           // homotopy Pd -> P (degree +1)
};

A2Maps build_a2_maps(const AlgebraPtr& a2);

}  // namespace mppa
