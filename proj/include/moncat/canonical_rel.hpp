#pragma once

#include <memory>
#include <string>

#include "moncat/multirel.hpp"
#include "moncat/theory.hpp"

namespace moncat {

class RelCanonical;
using RelCanonicalPtr = std::shared_ptr<const RelCanonical>;

// Canonical-form terms for bialgebra diagrams, read off a matrix row by row.
// Each constructor describes the first input wire:
//   Nil(n)      no inputs remain; n bare outputs (a 0-by-n matrix)
//   Drop(phi)   the first input connects to nothing (a zero row on top)
//   Link(i,phi) the first input additionally feeds output i
//               (phi's matrix with entry (0,i) incremented)
class RelCanonical {
public:
    enum class Kind { Nil, Drop, Link };

    Kind kind;
    int arg = 0; // Nil: output count; Link: output index
    RelCanonicalPtr sub;
    int m = 0, n = 0; // cached boundary sizes

    static RelCanonicalPtr nil(int n);
    static RelCanonicalPtr drop(RelCanonicalPtr phi);
    static RelCanonicalPtr link(int i, RelCanonicalPtr phi);

private:
    RelCanonical() = default;
};

bool rc_equal(const RelCanonical& a, const RelCanonical& b);
std::string rc_to_string(const RelCanonical& c);

// Reads the matrix the term denotes (the inverse of canonical_of_mrel).
Multirelation rc_to_mrel(const RelCanonical& c);

// Canonical term of a matrix: empty matrices are Nil; a zero top row is
// Drop; otherwise Link at the first nonzero column, decrementing it.
RelCanonicalPtr canonical_of_mrel(const Multirelation& r);
// Same recursion on a 0/1 matrix (Link clears the bit).
RelCanonicalPtr canonical_of_rel(const Relation& r);

// Expands a canonical term into a diagram over the bialgebra signature:
// Nil becomes a row of units, Drop a counit over the rest, Link a copy of
// the first wire carried down to its output by a stair of swaps and merged
// there. The theory provides the signature (use "B" or "R").
DiagramPtr flatten(const EquationalTheory& th, const RelCanonical& c);

// Equality in the bialgebra theory: equal boundaries and equal matrix
// semantics (exact multiplicities).
bool decide_eq_B(const EquationalTheory& th, const Diagram& a, const Diagram& b);
// Equality in the absorptive theory: equal boundaries and equal boolean
// semantics.
bool decide_eq_R(const EquationalTheory& th, const Diagram& a, const Diagram& b);

} // namespace moncat
