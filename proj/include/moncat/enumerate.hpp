#pragma once

#include <functional>
#include <vector>

#include "moncat/diagram.hpp"

namespace moncat {

// Enumerates sliced diagrams from source to target with at most max_slices
// generator layers. Distinct layer stacks are produced exactly once, in
// depth-first lexicographic order (layer count grows along each branch;
// at each step candidates are ordered by generator index then position).
// The visitor returns false to stop early.
void enumerate_diagrams(const Signature& sig, const ObjectWord& source,
                        const ObjectWord& target, int max_slices,
                        const std::function<bool(const SliceForm&)>& visit);

// Convenience wrapper collecting all results.
std::vector<SliceForm> enumerate_diagrams(const Signature& sig, const ObjectWord& source,
                                          const ObjectWord& target, int max_slices);

} // namespace moncat
