#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "schurkit/pc_presentation.hpp"

namespace schurkit {

// Built-in presentations, all with prime relative orders.
//   cyclic:n               C_n
//   abelian:d1,...,dk      C_d1 x ... x C_dk
//   dihedral:2m            dihedral group of order 2m
//   quaternion:4m          dicyclic group of order 4m (generalized quaternion for 2-powers)
//   extraspecial_plus:p[,n]   order p^{2n+1}, exponent p (p odd)
//   extraspecial_minus:p[,n]  order p^{2n+1}, exponent p^2 (p odd)
//   heisenberg_mod:p       upper unitriangular 3x3 matrices over F_p
//   burnside_2_3           free 2-generator group of exponent 3
//   maximal_class_3:n      C_3 acting on Z[w]/(1-w)^{n-1}, order 3^n
//   wreath_cp_cp:p         C_p wr C_p
PcPresentation catalog_group(const std::string& family, const std::vector<long>& params);

// "family:p1,p2" with or without a leading "catalog:".
PcPresentation catalog_group(std::string_view spec);

std::vector<std::string> catalog_families();

// Specs of the groups swept by "scan catalog:default".
std::vector<std::string> default_catalog();

}  // namespace schurkit
