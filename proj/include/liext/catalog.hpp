#pragma once

#include <string>
#include <vector>

#include "liext/lie_algebra.hpp"

namespace liext {

/// Builds a named algebra over the requested field. Known names:
///   abelian:n    zero bracket in dimension n (n >= 0)
///   heisenberg3  [e1,e2] = e3
///   sl2          [e1,e2] = e3, [e1,e3] = -2 e1, [e2,e3] = 2 e2
///   gl2          basis e11, e12, e21, e22 with the commutator bracket
///   perfect5     the perfect 5-dimensional algebra
/// Throws Error on an unknown name.
LieAlgebra catalog(const std::string& name, const FieldSpec& field);

/// The accepted catalog name patterns, for help text.
std::vector<std::string> catalog_names();

}  // namespace liext
