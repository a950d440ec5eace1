#pragma once

#include "mppa/morphism.hpp"
#include "mppa/presentation.hpp"
#include "mppa/quiver.hpp"
#include "mppa/repvar.hpp"

#include <map>
#include <string>
#include <vector>

namespace mppa {

struct MomentMap {
  AlgebraPtr alg;  // quiver_loc of the quiver
  FusionOrder order;
  std::map<std::string, ExprPtr> mu_expr, mu_inv_expr;
  std::map<std::string, Element> mu, mu_inv;
};

// μ_v = Π_{e in, ord} (e_v + e e*) × Π_{e out, ord} (e_v + e* e)^{-1}.
MomentMap moment_map(const Quiver& q, const FusionOrder& ord);
MomentMap moment_map(const AlgebraPtr& loc, const Quiver& q, const FusionOrder& ord);

// The induced morphism from ∐_v k[z_v^{±1}].
MorphismPtr moment_morphism(const MomentMap& mm);

struct FusionResult {
  std::map<std::string, Element> mu;           // fused moment map per vertex
  std::vector<MorphismPtr> morphisms;          // every morphism used, for well-definedness checks
};

// Fuses the per-edge A_2 moment maps of the separated quiver along the
// orders: at v, z_v -> y_{e_1} ... y_{e_k} x_{f_1} ... x_{f_m} by iterated
// binary fusion, then y_e -> b_e and x_e -> l_e through the gluing functor.
FusionResult fusion_build(const AlgebraPtr& loc, const Quiver& q, const FusionOrder& ord);

// Π_{e in Ē}(1+ee*)^{ε(e)} - Σ_v q_v e_v in the global order.
Element cbs_relation(const AlgebraPtr& loc, const Quiver& q, const std::map<std::string, Rational>& qv,
                     const FusionOrder& ord);

struct DGAlgebra {
  AlgebraPtr alg;  // quiver_loc plus zprime_<v> in degree -1
  Quiver quiver;
  std::map<std::string, Rational> q;
  FusionOrder order;
  std::vector<Element> d_gen;  // per generator

  // Degree +1 derivation with the Koszul sign.
  Element d(const Element& a) const;
  std::string zprime(const std::string& v) const { return "zprime_" + v; }
};

DGAlgebra build_upsilon(const Quiver& q, const std::map<std::string, Rational>& qv, const FusionOrder& ord);
std::string upsilon_json(const DGAlgebra& dg);

enum class H0Status { Coincide, Certified, Uncertified };

struct H0Report {
  H0Status status = H0Status::Uncertified;
  std::string detail;
};

// Each side's generators lie in the ideal generated by the other's, with
// multiplier words of total length at most `bound`.
H0Report h0_check(const DGAlgebra& dg, const std::map<std::string, Rational>& relation_q, int bound = 8);

// Π_v det μ_v(ρ).
Rational det_product(const MomentMap& mm, const Evaluator& ev);

}  // namespace mppa
