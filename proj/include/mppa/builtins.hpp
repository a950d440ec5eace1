#pragma once

#include "mppa/morphism.hpp"
#include "mppa/presentation.hpp"
#include "mppa/quiver.hpp"

#include <map>
#include <string>
#include <vector>

namespace mppa {

Presentation laurent_presentation(const std::string& var = "x");
Presentation free_group_presentation(const std::vector<std::string>& vars, const std::string& name = "");
Presentation interval_presentation();
Presentation groupoid_presentation();
Presentation a2_loc_presentation();
Presentation quiver_loc_presentation(const Quiver& q, const std::string& name = "");
Presentation pushout_presentation(const Rational& q);
Presentation point_presentation();

AlgebraPtr laurent(const std::string& var = "x");
AlgebraPtr free_group_algebra(const std::vector<std::string>& vars);
AlgebraPtr laurent_pair();
AlgebraPtr interval_kI();
AlgebraPtr two_object_groupoid_C();
AlgebraPtr a2_loc();
AlgebraPtr quiver_loc(const Quiver& q);
AlgebraPtr pushout_xy_q(const Rational& q);
AlgebraPtr point();

// Generator names used by quiver_loc for an edge e.
std::string loc_inverse_name(const std::string& edge);   // l_<e>, inverse of e_s + e* e
std::string loc_a_name(const std::string& edge);         // a_<e>  = e_s + e* e
std::string loc_b_name(const std::string& edge);         // b_<e>  = e_t + e e*
std::string loc_binv_name(const std::string& edge);      // binv_<e>

// name in {laurent, laurent_pair, free_group_algebra, interval_kI, a2_loc,
// quiver_loc, two_object_groupoid_C, pushout_xy_q, point}; params: x, vars
// (comma separated), q. quiver_loc takes the quiver separately.
AlgebraPtr builtin(const std::string& name, const std::map<std::string, std::string>& params = {},
                   const Quiver* quiver = nullptr);
std::vector<std::string> builtin_names();

// Standard morphisms.
MorphismPtr mu1_morphism(const AlgebraPtr& a2);         // k[x1^±1] -> a2_loc, x1 -> a1^-1
MorphismPtr mu2_morphism(const AlgebraPtr& a2);         // k[x2^±1] -> a2_loc, x2 -> a2
MorphismPtr eval_morphism(const AlgebraPtr& laurent_alg, const Rational& q);
MorphismPtr inv_morphism(const AlgebraPtr& laurent_alg);
MorphismPtr rescale_morphism(const AlgebraPtr& laurent_alg, const Rational& q);
MorphismPtr z_to_xy_morphism(const AlgebraPtr& target);  // laurent_pair or the groupoid C
MorphismPtr variable_inclusion(const AlgebraPtr& target, const std::string& var);
MorphismPtr pushout_quotient(const AlgebraPtr& pair, const AlgebraPtr& pushout);

}  // namespace mppa
