#pragma once

#include <vector>

#include "moncat/diagram.hpp"
#include "moncat/theory.hpp"

namespace moncat {

// A monotone map between finite ordinals {0..m-1} -> {0..n-1}.
struct MonotoneMap {
    int m = 0;
    int n = 0;
    std::vector<int> table; // table[i] = image of i; nondecreasing

    bool operator==(const MonotoneMap&) const = default;
    void validate() const; // throws DomainError on a malformed table
};

MonotoneMap mm_identity(int m);
// f followed by g.
MonotoneMap mm_compose(const MonotoneMap& f, const MonotoneMap& g);
// Ordinal sum: f on the first block, g shifted onto the second.
MonotoneMap mm_tensor(const MonotoneMap& f, const MonotoneMap& g);

// Evaluates a diagram over the monoid theory "M" (or any theory whose
// generators are named mu : 2 -> 1 and eta : 0 -> 1 on a single type) in
// finite ordinals: mu becomes the unique map collapsing two points, eta the
// empty inclusion. Throws DomainError on other generators.
MonotoneMap eval_monoid(const EquationalTheory& th, const Diagram& d);

} // namespace moncat
