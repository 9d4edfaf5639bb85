#include <doctest.h>

#include "moncat/diagram.hpp"
#include "moncat/enumerate.hpp"
#include "moncat/error.hpp"
#include "moncat/parse.hpp"
#include "moncat/theory.hpp"

using namespace moncat;

namespace {

const EquationalTheory& theory_M() {
    static EquationalTheory th = builtin_theory("M");
    return th;
}

const EquationalTheory& theory_B() {
    static EquationalTheory th = builtin_theory("B");
    return th;
}

const EquationalTheory& theory_G() {
    static EquationalTheory th = builtin_theory("G");
    return th;
}

} // namespace

TEST_CASE("words concatenate and compare") {
    ObjectWord a{0, 1}, b{1};
    CHECK(a + b == ObjectWord{0, 1, 1});
    CHECK(ObjectWord{} + a == a);
    CHECK(a.prefix(1) == ObjectWord{0});
    CHECK(a.suffix_from(1) == ObjectWord{1});
    CHECK(ObjectWord::repeated(2, 3) == ObjectWord{2, 2, 2});
}

TEST_CASE("diagram constructors cache boundaries and sizes") {
    const auto& th = theory_M();
    auto mu = Diagram::generator(th.sig, "mu");
    auto id1 = Diagram::identity(ObjectWord{0});

    CHECK(mu->src == ObjectWord{0, 0});
    CHECK(mu->tgt == ObjectWord{0});
    CHECK(mu->gen_count == 1);
    CHECK(id1->gen_count == 0);

    auto d = Diagram::compose(Diagram::tensor(mu, id1), mu);
    CHECK(d->src == ObjectWord{0, 0, 0});
    CHECK(d->tgt == ObjectWord{0});
    CHECK(d->gen_count == 2);

    CHECK_THROWS_AS(Diagram::compose(mu, mu), TypeMismatchError);
}

TEST_CASE("slicing interleaves a tensor of generators") {
    const auto& th = theory_M();
    auto mu = Diagram::generator(th.sig, "mu");
    auto d = Diagram::tensor(mu, mu);
    SliceForm sf = to_slices(th.sig, *d);

    REQUIRE(sf.slices.size() == 2);
    CHECK(sf.slices[0] == Slice{ObjectWord{}, th.sig.gen_index("mu"), ObjectWord{0, 0}});
    CHECK(sf.slices[1] == Slice{ObjectWord{0}, th.sig.gen_index("mu"), ObjectWord{}});
    CHECK(slice_form_target(th.sig, sf) == ObjectWord{0, 0});
}

TEST_CASE("slicing round-trips through from_slices") {
    const auto& th = theory_B();
    auto d = parse_diagram(th.sig, "(mu * delta) . (id 1 * gamma) . (mu * eps)");
    SliceForm sf = to_slices(th.sig, *d);
    validate_slice_form(th.sig, sf);
    auto d2 = from_slices(th.sig, sf);
    CHECK(d2->src == d->src);
    CHECK(d2->tgt == d->tgt);
    // Re-slicing the rebuilt diagram is a fixed point.
    CHECK(to_slices(th.sig, *d2) == sf);
}

TEST_CASE("identity diagrams have no slices") {
    const auto& th = theory_B();
    auto d = Diagram::identity(ObjectWord{0, 0});
    CHECK(to_slices(th.sig, *d).slices.empty());
}

TEST_CASE("builtin theories have the expected shapes") {
    CHECK(theory_M().equations.size() == 3);
    CHECK(builtin_theory("CoM").equations.size() == 3);
    CHECK(theory_B().equations.size() == 22);
    CHECK(builtin_theory("R").equations.size() == 23);
    CHECK(builtin_theory("D").equations.size() == 2);
    const auto& g = theory_G();
    CHECK(g.sig.gens.size() == 13);
    CHECK(g.equations.size() == 29);
    validate_theory(g);
    validate_theory(builtin_theory("R"));
    validate_theory(builtin_theory("D"));
    CHECK(is_builtin_theory_name("R"));
    CHECK(!is_builtin_theory_name("X"));
    CHECK_THROWS_AS(builtin_theory("X"), DomainError);
}

TEST_CASE("expression parser handles precedence and identities") {
    const auto& th = theory_B();
    auto d = parse_diagram(th.sig, "mu * id 1 . mu");
    // '*' binds tighter: (mu * id 1) then mu.
    CHECK(d->src == ObjectWord{0, 0, 0});
    CHECK(d->tgt == ObjectWord{0});

    auto e = parse_diagram(th.sig, "id I");
    CHECK(e->src == ObjectWord{});

    auto f = parse_diagram(th.sig, "(eta . delta) * eps");
    CHECK(f->src == ObjectWord{0});
    CHECK(f->tgt == ObjectWord{0, 0});

    CHECK_THROWS_AS(parse_diagram(th.sig, "mu . mu"), TypeMismatchError);
    CHECK_THROWS_AS(parse_diagram(th.sig, "nope"), ParseError);
    CHECK_THROWS_AS(parse_diagram(th.sig, "mu )"), ParseError);
}

TEST_CASE("printer output reparses to the same diagram") {
    const auto& th = theory_G();
    const char* exprs[] = {
        "muO",
        "id O P",
        "(muO * id P) . (id O * epsP)",
        "etaOP . (id O * deltaP) . (epsO * id P P)",
        "gammaOP * etaO",
    };
    for (const char* e : exprs) {
        auto d = parse_diagram(th.sig, e);
        std::string printed = diagram_to_expr(th.sig, *d);
        auto d2 = parse_diagram(th.sig, printed);
        CHECK(structurally_equal(*d, *d2));
    }
}

TEST_CASE("theory files declare types, generators and equations") {
    std::string text =
        "# a small monoid-like theory\n"
        "type a;\n"
        "gen m : a a -> a;\n"
        "gen u : I -> a;\n"
        "eq unit : (u * id a) . m = id a;\n"
        "eq : (m * id a) . m = (id a * m) . m;\n";
    EquationalTheory th = parse_theory(text, "demo");
    CHECK(th.sig.types.size() == 1);
    CHECK(th.sig.gens.size() == 2);
    REQUIRE(th.equations.size() == 2);
    CHECK(th.equations[0].name == "unit");
    CHECK(th.equations[1].name == "eq1");
    validate_theory(th);

    CHECK_THROWS_AS(parse_theory("type id;"), ParseError);
    CHECK_THROWS_AS(parse_theory("gen f : a -> a;"), ParseError);
    CHECK_THROWS_AS(parse_theory("type a;\neq bad : id a = id I;"), ParseError);
}

TEST_CASE("enumeration lists all stacks up to a slice bound") {
    const auto& th = theory_M();
    // Maps 2 -> 1 over {mu, eta} with at most 2 layers: only mu itself.
    auto two_to_one = enumerate_diagrams(th.sig, ObjectWord{0, 0}, ObjectWord{0}, 2);
    REQUIRE(two_to_one.size() == 1);
    CHECK(two_to_one[0].slices.size() == 1);

    // 1 -> 1: the empty stack, plus stacks that grow with eta and shrink
    // with mu. With <= 2 layers: id, (eta top . mu), (eta bottom . mu).
    auto one_to_one = enumerate_diagrams(th.sig, ObjectWord{0}, ObjectWord{0}, 2);
    CHECK(one_to_one.size() == 3);

    // The visitor can stop early.
    int seen = 0;
    enumerate_diagrams(th.sig, ObjectWord{0}, ObjectWord{0}, 4,
                       [&seen](const SliceForm&) { return ++seen < 2; });
    CHECK(seen == 2);
}

TEST_CASE("enumerated stacks are distinct and well typed") {
    const auto& th = theory_B();
    auto all = enumerate_diagrams(th.sig, ObjectWord{0}, ObjectWord{0}, 2);
    for (const auto& sf : all) validate_slice_form(th.sig, sf);
    for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = i + 1; j < all.size(); ++j)
            CHECK(!(all[i] == all[j]));
}
