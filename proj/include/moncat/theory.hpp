#pragma once

#include <string>
#include <vector>

#include "moncat/diagram.hpp"
#include "moncat/signature.hpp"

namespace moncat {

// An unordered pair of parallel diagrams (same boundaries).
struct Equation {
    std::string name;
    DiagramPtr lhs;
    DiagramPtr rhs;
};

// A monoidal signature together with a list of equations between diagrams.
struct EquationalTheory {
    std::string name;
    Signature sig;
    std::vector<Equation> equations;

    void add_equation(const std::string& eq_name, DiagramPtr lhs, DiagramPtr rhs);
};

// Checks every equation relates parallel diagrams; throws on failure.
void validate_theory(const EquationalTheory& th);

// Built-in presentations, selected by name:
//   "M"   commutative monoid on one type "1" (mu, eta)
//   "CoM" cocommutative comonoid on one type "1" (delta, eps)
//   "B"   commutative bialgebra on one type "1" (mu, eta, delta, eps, gamma)
//   "R"   theory B plus the absorption law (delta then mu = id)
//   "D"   dual pair of types L, R with unit/counit (eta, eps)
//   "G"   two-type polarized theory on O, P: a full copy of R on O, the
//         mixed unit/counit/symmetry (etaOP, epsOP, gammaOP), and the
//         P-structure defined as adjoint mates of the O-structure
EquationalTheory builtin_theory(const std::string& name);

bool is_builtin_theory_name(const std::string& name);

} // namespace moncat
