#include <doctest.h>

#include "moncat/multirel.hpp"
#include "moncat/parse.hpp"
#include "moncat/rewrite.hpp"
#include "moncat/theory.hpp"

using namespace moncat;

namespace {

int eq_index(const EquationalTheory& th, const std::string& name) {
    for (std::size_t i = 0; i < th.equations.size(); ++i)
        if (th.equations[i].name == name) return static_cast<int>(i);
    REQUIRE(false);
    return -1;
}

} // namespace

TEST_CASE("a forward step rewrites an associativity redex") {
    EquationalTheory th = builtin_theory("B");
    auto d = parse_diagram(th.sig, "(mu * id 1) . mu");
    SliceForm sf = to_slices(th.sig, *d);
    RewriteStep st{eq_index(th, "assoc"), true, 0, 0};
    SliceForm out = apply_step(th, sf, st);
    validate_slice_form(th.sig, out);
    CHECK(out == to_slices(th.sig, *parse_diagram(th.sig, "(id 1 * mu) . mu")));
}

TEST_CASE("steps respect the ambient pads") {
    EquationalTheory th = builtin_theory("B");
    // The redex sits under one extra wire.
    auto d = parse_diagram(th.sig, "(id 1 * mu * id 1) . (id 1 * mu)");
    SliceForm sf = to_slices(th.sig, *d);
    int assoc = eq_index(th, "assoc");
    CHECK(!try_apply_step(th, sf, RewriteStep{assoc, true, 0, 0}));
    auto out = try_apply_step(th, sf, RewriteStep{assoc, true, 0, 1});
    REQUIRE(out);
    validate_slice_form(th.sig, *out);
    CHECK(*out == to_slices(th.sig, *parse_diagram(th.sig, "(id 1 * id 1 * mu) . (id 1 * mu)")));
}

TEST_CASE("a backward step on an identity side inserts slices") {
    EquationalTheory th = builtin_theory("B");
    // unit-left read backwards: replace an empty window on a single wire
    // by (eta * id) . mu.
    auto d = Diagram::identity(ObjectWord{0});
    SliceForm sf = to_slices(th.sig, *d);
    RewriteStep st{eq_index(th, "unit-left"), false, 0, 0};
    SliceForm out = apply_step(th, sf, st);
    REQUIRE(out.slices.size() == 2);
    CHECK(out == to_slices(th.sig, *parse_diagram(th.sig, "(eta * id 1) . mu")));
    // And applying it forward again erases them.
    SliceForm back = apply_step(th, out, RewriteStep{eq_index(th, "unit-left"), true, 0, 0});
    CHECK(back == sf);
}

TEST_CASE("inapplicable steps are rejected") {
    EquationalTheory th = builtin_theory("B");
    auto d = parse_diagram(th.sig, "mu");
    SliceForm sf = to_slices(th.sig, *d);
    CHECK(!try_apply_step(th, sf, RewriteStep{eq_index(th, "assoc"), true, 0, 0}));
    CHECK(!try_apply_step(th, sf, RewriteStep{eq_index(th, "comm"), true, 5, 0}));
    CHECK(!try_apply_step(th, sf, RewriteStep{-1, true, 0, 0}));
    CHECK_THROWS_AS(apply_step(th, sf, RewriteStep{eq_index(th, "assoc"), true, 0, 0}),
                    DomainError);
}

TEST_CASE("all_steps finds every redex and each preserves semantics") {
    EquationalTheory th = builtin_theory("B");
    auto d = parse_diagram(th.sig, "(delta * delta) . (id 1 * gamma * id 1) . (mu * mu)");
    SliceForm sf = to_slices(th.sig, *d);
    auto steps = all_steps(th, sf);
    CHECK(!steps.empty());
    auto base = eval_mrel(th, *from_slices(th.sig, sf));
    for (const auto& st : steps) {
        auto out = try_apply_step(th, sf, st);
        REQUIRE(out);
        validate_slice_form(th.sig, *out);
        CHECK(eval_mrel(th, *from_slices(th.sig, *out)) == base);
    }
}
