#pragma once

#include <optional>
#include <vector>

#include "moncat/diagram.hpp"
#include "moncat/theory.hpp"

namespace moncat {

// One oriented application of a theory equation inside a sliced diagram.
// The equation side being replaced is matched as a contiguous window of
// layers starting at slice_pos, with an untouched ambient pad of wire_pos
// wires above the match (and whatever remains below).
struct RewriteStep {
    int equation;   // index into EquationalTheory::equations
    bool forward;   // true: replace lhs by rhs; false: replace rhs by lhs
    int slice_pos;  // first layer of the window; insertion point when the
                    // matched side has no layers (an identity side)
    int wire_pos;   // number of ambient wires above the matched region

    bool operator==(const RewriteStep&) const = default;
};

// Attempts the step; returns the rewritten stack or nullopt if the window
// does not match.
std::optional<SliceForm> try_apply_step(const EquationalTheory& th, const SliceForm& sf,
                                        const RewriteStep& step);

// Same, but throws DomainError when the step does not apply.
SliceForm apply_step(const EquationalTheory& th, const SliceForm& sf, const RewriteStep& step);

// Every step applicable to the stack, in deterministic order
// (equation, direction, layer position, wire position).
std::vector<RewriteStep> all_steps(const EquationalTheory& th, const SliceForm& sf);

} // namespace moncat
