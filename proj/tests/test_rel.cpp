#include <doctest.h>

#include "moncat/canonical_rel.hpp"
#include "moncat/error.hpp"
#include "moncat/json_io.hpp"
#include "moncat/monotone.hpp"
#include "moncat/multirel.hpp"
#include "moncat/parse.hpp"

using namespace moncat;

TEST_CASE("monotone maps compose and sum") {
    MonotoneMap f{3, 2, {0, 0, 1}};
    MonotoneMap g{2, 2, {0, 1}};
    f.validate();
    g.validate();
    CHECK(mm_compose(f, g) == f);
    CHECK(mm_compose(mm_identity(3), f) == f);
    CHECK(mm_compose(f, mm_identity(2)) == f);
    MonotoneMap s = mm_tensor(f, g);
    CHECK(s.m == 5);
    CHECK(s.n == 4);
    CHECK(s.table == std::vector<int>{0, 0, 1, 2, 3});
    CHECK_THROWS_AS(mm_compose(g, f), TypeMismatchError);
    MonotoneMap bad{2, 2, {1, 0}};
    CHECK_THROWS_AS(bad.validate(), DomainError);
}

TEST_CASE("the ordinal interpretation evaluates monoid diagrams") {
    EquationalTheory th = builtin_theory("M");
    auto d = parse_diagram(th.sig, "(mu * id 1) . mu");
    MonotoneMap f = eval_monoid(th, *d);
    CHECK(f == MonotoneMap{3, 1, {0, 0, 0}});
    CHECK(eval_monoid(th, *parse_diagram(th.sig, "eta")) == MonotoneMap{0, 1, {}});
    CHECK(eval_monoid(th, *parse_diagram(th.sig, "id 1 * eta")) == MonotoneMap{1, 2, {0}});
}

TEST_CASE("multirelation arithmetic is checked") {
    CHECK(checked_add(2, 3) == 5);
    CHECK(checked_mul(4, 5) == 20);
    std::uint64_t big = ~0ull;
    CHECK_THROWS_AS(checked_add(big, 1), ArithmeticOverflowError);
    CHECK_THROWS_AS(checked_mul(big, 2), ArithmeticOverflowError);

    Multirelation huge(1, 1);
    huge.at(0, 0) = big;
    CHECK_THROWS_AS(mr_compose(huge, huge), ArithmeticOverflowError);
    Multirelation two(1, 1);
    two.at(0, 0) = 2;
    CHECK_THROWS_AS(mr_compose(huge, two), ArithmeticOverflowError);
    CHECK_THROWS_AS(mr_cardinal(mr_tensor(huge, huge)), ArithmeticOverflowError);
}

TEST_CASE("matrix semantics of the bialgebra generators") {
    EquationalTheory th = builtin_theory("B");
    auto ev = [&th](const char* e) { return eval_mrel(th, *parse_diagram(th.sig, e)); };

    Multirelation mu = ev("mu");
    CHECK(mu.m == 2);
    CHECK(mu.n == 1);
    CHECK(mu.at(0, 0) == 1);
    CHECK(mu.at(1, 0) == 1);

    Multirelation comult_then_mult = ev("delta . mu");
    CHECK(comult_then_mult.at(0, 0) == 2); // two paths: both copies merge back

    Multirelation gamma = ev("gamma");
    CHECK(gamma.at(0, 1) == 1);
    CHECK(gamma.at(1, 0) == 1);
    CHECK(gamma.at(0, 0) == 0);

    CHECK(mr_cardinal(ev("delta . (delta * id 1)")) == 3);
    CHECK(ev("eta . eps") == Multirelation(0, 0));
    CHECK_THROWS_AS(eval_mrel(builtin_theory("G"),
                              *parse_diagram(builtin_theory("G").sig, "muO")),
                    DomainError);
}

TEST_CASE("boolean semantics agrees with booleanized matrices") {
    EquationalTheory th = builtin_theory("R");
    const char* exprs[] = {
        "delta . mu",
        "(delta * delta) . (id 1 * gamma * id 1) . (mu * mu)",
        "(eta * id 1) . mu . delta",
        "(gamma * id 1) . (id 1 * mu)",
    };
    for (const char* e : exprs) {
        auto d = parse_diagram(th.sig, e);
        CHECK(eval_rel(th, *d) == booleanize(eval_mrel(th, *d)));
    }
}

TEST_CASE("canonical terms read back their matrices") {
    Multirelation r(2, 2);
    r.at(0, 0) = 2;
    r.at(1, 1) = 1;
    auto c = canonical_of_mrel(r);
    CHECK(rc_to_mrel(*c) == r);
    CHECK(rc_to_string(*c) == "Link(0, Link(0, Drop(Link(1, Drop(Nil(2))))))");

    // Zero row first.
    Multirelation z(2, 1);
    z.at(1, 0) = 1;
    CHECK(rc_to_string(*canonical_of_mrel(z)) == "Drop(Link(0, Drop(Nil(1))))");

    // Empty matrix.
    CHECK(rc_to_string(*canonical_of_mrel(Multirelation(0, 3))) == "Nil(3)");
}

TEST_CASE("flattening a canonical term recovers its matrix") {
    EquationalTheory th = builtin_theory("B");
    for (int m = 0; m <= 3; ++m) {
        for (int n = 0; n <= 2; ++n) {
            // Try a few deterministic matrices with entries up to 2.
            for (int seed = 0; seed < 16; ++seed) {
                Multirelation r(m, n);
                int s = seed;
                for (int i = 0; i < m; ++i)
                    for (int j = 0; j < n; ++j) {
                        r.at(i, j) = static_cast<std::uint64_t>(s % 3);
                        s = s * 5 + 7;
                    }
                auto c = canonical_of_mrel(r);
                auto d = flatten(th, *c);
                CHECK(d->src == ObjectWord::repeated(0, m));
                CHECK(d->tgt == ObjectWord::repeated(0, n));
                CHECK(eval_mrel(th, *d) == r);
            }
        }
    }
}

TEST_CASE("relational canonical forms use each link once") {
    EquationalTheory th = builtin_theory("R");
    Relation r(2, 2);
    r.at(0, 0) = 1;
    r.at(0, 1) = 1;
    r.at(1, 0) = 1;
    auto c = canonical_of_rel(r);
    CHECK(rc_to_string(*c) == "Link(0, Link(1, Drop(Link(0, Drop(Nil(2))))))");
    CHECK(booleanize(rc_to_mrel(*c)) == r);
    auto d = flatten(th, *c);
    CHECK(eval_rel(th, *d) == r);
}

TEST_CASE("decision procedures separate the two theories") {
    EquationalTheory b = builtin_theory("B");
    EquationalTheory r = builtin_theory("R");
    auto lhs = parse_diagram(b.sig, "delta . mu");
    auto rhs = parse_diagram(b.sig, "id 1");
    // Absorption holds relationally but not with multiplicities.
    CHECK(!decide_eq_B(b, *lhs, *rhs));
    CHECK(decide_eq_R(r, *lhs, *rhs));
    // Parallel boundaries are required.
    CHECK(!decide_eq_B(b, *lhs, *parse_diagram(b.sig, "mu")));
    // A genuine B-equality.
    CHECK(decide_eq_B(b, *parse_diagram(b.sig, "gamma . mu"), *parse_diagram(b.sig, "mu")));
}

TEST_CASE("json round-trips for maps and matrices") {
    MonotoneMap f{2, 1, {0, 0}};
    CHECK(monotone_from_json(monotone_to_json(f)) == f);
    CHECK(monotone_to_json(f).dump() == R"({"m":2,"n":1,"table":[0,0]})");
    CHECK_THROWS_AS(monotone_from_json(nlohmann::json::parse(R"({"m":2,"n":1})")), ParseError);
    CHECK_THROWS_AS(monotone_from_json(nlohmann::json::parse(R"({"m":2,"n":1,"table":[1,0]})")),
                    DomainError); // parses but fails monotonicity

    EquationalTheory b = builtin_theory("B");
    Multirelation r = eval_mrel(b, *parse_diagram(b.sig, "delta . mu"));
    CHECK(multirel_from_json(multirel_to_json(r)) == r);
    CHECK(multirel_to_json(r).dump() == R"({"m":1,"n":1,"rows":[[2]]})");
    CHECK_THROWS_AS(multirel_from_json(nlohmann::json::parse(R"({"m":1,"n":1,"rows":[[-2]]})")),
                    ParseError);

    Relation s = eval_rel(b, *parse_diagram(b.sig, "mu . delta"));
    CHECK(rel_from_json(rel_to_json(s)) == s);
    CHECK(rel_to_json(s).dump() == R"({"m":2,"n":2,"rows":[[1,1],[1,1]]})");
    CHECK_THROWS_AS(rel_from_json(nlohmann::json::parse(R"({"m":1,"n":1,"rows":[[2]]})")),
                    ParseError);
}
