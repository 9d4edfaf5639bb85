#include <doctest.h>

#include <set>

#include "moncat/error.hpp"
#include "moncat/fol.hpp"

using namespace moncat;

TEST_CASE("terms and formulas print and reparse") {
    FormulaPtr f = parse_formula("forall x. exists y. P(x, f(y, c()))");
    CHECK(formula_to_string(*f) == "forall x. exists y. P(x, f(y, c()))");
    FormulaPtr again = parse_formula(formula_to_string(*f));
    CHECK(alpha_equal(*f, *again));

    CHECK_THROWS_AS(parse_formula("forall . P"), ParseError);
    CHECK_THROWS_AS(parse_formula("forall x P"), ParseError);
    CHECK_THROWS_AS(parse_formula("P(x,)"), ParseError);
    CHECK_THROWS_AS(parse_formula("P(x) Q"), ParseError);
}

TEST_CASE("free variables and substitution") {
    FormulaPtr f = parse_formula("forall x. P(x, y)");
    CHECK(free_vars(*f) == std::set<std::string>{"y"});

    // Plain replacement of a free variable.
    FormulaPtr g = substitute(*f, "y", Term::var("z"));
    CHECK(formula_to_string(*g) == "forall x. P(x, z)");

    // Substituting for the bound variable's name changes nothing.
    FormulaPtr h = substitute(*f, "x", Term::var("z"));
    CHECK(formula_to_string(*h) == "forall x. P(x, y)");

    // Capture avoidance: the binder renames away from the incoming term.
    FormulaPtr k = substitute(*f, "y", Term::app("f", {Term::var("x")}));
    CHECK(free_vars(*k) == std::set<std::string>{"x"});
    CHECK(alpha_equal(*k, *parse_formula("forall x_0. P(x_0, f(x))")));
    CHECK_FALSE(alpha_equal(*k, *parse_formula("forall x. P(x, f(x))")));
}

TEST_CASE("alpha equivalence") {
    CHECK(alpha_equal(*parse_formula("forall x. P(x)"), *parse_formula("forall y. P(y)")));
    CHECK_FALSE(alpha_equal(*parse_formula("forall x. P(x)"), *parse_formula("exists y. P(y)")));
    CHECK_FALSE(alpha_equal(*parse_formula("forall x. P(x)"), *parse_formula("forall y. P(z)")));
    CHECK(alpha_equal(*parse_formula("forall x. forall y. P(x, y)"),
                      *parse_formula("forall y. forall x. P(y, x)")));
    CHECK_FALSE(alpha_equal(*parse_formula("forall x. forall y. P(x, y)"),
                            *parse_formula("forall y. forall x. P(x, y)")));
}

TEST_CASE("proof checking accepts valid proofs and rejects bad ones") {
    FormulaPtr l = parse_formula("forall x. p");
    FormulaPtr r = parse_formula("forall y. exists z. p");

    ProofPtr good = parse_proof("(AllR y0 (ExR (w y0) (AllL (f y0) (Ax))))");
    CHECK_NOTHROW(check_proof(*l, *r, *good));

    // Wrong rule for the outer right quantifier.
    CHECK_THROWS_AS(check_proof(*l, *r, *parse_proof("(ExR c (Ax))")), ProofError);
    // Unfinished: Ax on non-atomic sides.
    CHECK_THROWS_AS(check_proof(*l, *r, *parse_proof("(Ax)")), ProofError);
    // Atom mismatch at the leaf.
    CHECK_THROWS_AS(check_proof(*parse_formula("q"), *parse_formula("p"), *parse_proof("(Ax)")),
                    ProofError);
    CHECK_THROWS_AS(check_proof(*parse_formula("P(c())"), *parse_formula("P(d())"),
                                *parse_proof("(Ax)")),
                    ProofError);
}

TEST_CASE("eigenvariable side conditions") {
    // right: forall y. P(x) with x free; using x as the eigenvariable is illegal.
    FormulaPtr l = parse_formula("P(x)");
    FormulaPtr r = parse_formula("forall y. P(x)");
    CHECK_THROWS_AS(check_proof(*l, *r, *parse_proof("(AllR x (Ax))")), ProofError);
    CHECK_NOTHROW(check_proof(*l, *r, *parse_proof("(AllR z (Ax))")));

    // Same on the left with ExL.
    FormulaPtr l2 = parse_formula("exists u. P(x)");
    CHECK_THROWS_AS(check_proof(*l2, *parse_formula("P(x)"), *parse_proof("(ExL x (Ax))")),
                    ProofError);
    CHECK_NOTHROW(check_proof(*l2, *parse_formula("P(x)"), *parse_proof("(ExL v (Ax))")));
}

TEST_CASE("formulas denote filiform games") {
    Game g = interpret_formula(*parse_formula("forall x. exists y. forall z. p"));
    CHECK(g.pol == std::vector<std::int8_t>{-1, 1, -1});
    CHECK(g.before(0, 1));
    CHECK(g.before(1, 2));
    CHECK_FALSE(g.before(2, 0));
    CHECK(interpret_formula(*parse_formula("P(x, y)")).size() == 0);
}

TEST_CASE("proof interpretation records witness dependencies as links") {
    FormulaPtr l = parse_formula("forall x. p");
    FormulaPtr r = parse_formula("forall y. exists z. p");

    // Constant witnesses first: no dependencies at all.
    ProofInterpretation a =
        interpret_proof(*l, *r, *parse_proof("(AllL (c) (AllR y (ExR (d) (Ax))))"));
    CHECK(strategy_links(a.strategy).empty());
    CHECK(a.has_intro_order);
    CHECK(a.intro_order == std::vector<int>{0, 1, 2});

    // The existential witness mentions the eigenvariable of move 1.
    ProofInterpretation b =
        interpret_proof(*l, *r, *parse_proof("(AllL (c) (AllR y (ExR y (Ax))))"));
    CHECK(strategy_links(b.strategy) == std::vector<std::pair<int, int>>{{1, 2}});

    // Both witnesses depend on the right eigenvariable; intro order differs
    // from move order.
    ProofInterpretation c =
        interpret_proof(*l, *r, *parse_proof("(AllR y (ExR (g y) (AllL (f y) (Ax))))"));
    CHECK(strategy_links(c.strategy) == std::vector<std::pair<int, int>>{{1, 0}, {1, 2}});
    CHECK(c.intro_order == std::vector<int>{1, 2, 0});

    // Same strategy from a different rule order.
    ProofInterpretation d =
        interpret_proof(*l, *r, *parse_proof("(AllR y (AllL (f y) (ExR (g y) (Ax))))"));
    CHECK(d.strategy == c.strategy);
    CHECK(d.intro_order == std::vector<int>{1, 0, 2});
}

TEST_CASE("left existentials are opponent moves and justify right witnesses") {
    FormulaPtr l = parse_formula("exists x. exists y. p");
    FormulaPtr r = parse_formula("exists z. p");
    auto links_of = [&](const char* proof) {
        return strategy_links(interpret_proof(*l, *r, *parse_proof(proof)).strategy);
    };
    using Links = std::vector<std::pair<int, int>>;
    CHECK(links_of("(ExL x (ExL y (ExR (pair x y) (Ax))))") == Links{{0, 2}, {1, 2}});
    CHECK(links_of("(ExL x (ExL y (ExR x (Ax))))") == Links{{0, 2}});
    CHECK(links_of("(ExL x (ExL y (ExR y (Ax))))") == Links{{1, 2}});
    CHECK(links_of("(ExL x (ExL y (ExR (c) (Ax))))") == Links{});
}

TEST_CASE("interpreting a cut composes the two sides") {
    FormulaPtr l = parse_formula("forall x. p");
    FormulaPtr m = parse_formula("forall u. p");
    FormulaPtr r = parse_formula("forall y. exists z. p");

    ProofPtr via_cut = parse_proof(
        "(Cut {forall u. p} (AllR u (AllL u (Ax))) (AllR y (ExR (g y) (AllL (f y) (Ax)))))");
    ProofInterpretation whole = interpret_proof(*l, *r, *via_cut);
    CHECK_FALSE(whole.has_intro_order);

    ProofInterpretation s1 = interpret_proof(*l, *m, *parse_proof("(AllR u (AllL u (Ax)))"));
    ProofInterpretation s2 =
        interpret_proof(*m, *r, *parse_proof("(AllR y (ExR (g y) (AllL (f y) (Ax))))"));
    CHECK(whole.strategy == interpret_cut(s1.strategy, s2.strategy));
    // The identity proof on the left leaves the right interpretation alone.
    CHECK(whole.strategy == s2.strategy);
}

TEST_CASE("synthesis round-trips every strategy between small filiform games") {
    // All polarity words of length <= 3 on each side.
    std::vector<std::vector<std::int8_t>> words{{}};
    for (int len = 1; len <= 3; ++len) {
        std::size_t start = words.size();
        (void)start;
        std::vector<std::vector<std::int8_t>> next;
        for (const auto& w : words)
            if (static_cast<int>(w.size()) == len - 1)
                for (std::int8_t pol : {std::int8_t{-1}, std::int8_t{1}}) {
                    auto e = w;
                    e.push_back(pol);
                    next.push_back(e);
                }
        words.insert(words.end(), next.begin(), next.end());
    }
    int checked = 0;
    for (const auto& wa : words) {
        for (const auto& wb : words) {
            Game A = game_filiform(wa);
            Game B = game_filiform(wb);
            for (const Strategy& s : enumerate_strategies(A, B)) {
                SynthesisResult syn = synthesize_proof(s);
                REQUIRE_NOTHROW(check_proof(*syn.left, *syn.right, *syn.proof));
                ProofInterpretation back = interpret_proof(*syn.left, *syn.right, *syn.proof);
                REQUIRE(back.strategy == s);
                ++checked;
            }
        }
    }
    CHECK(checked > 500);
}

TEST_CASE("synthesized sequents spell the games over a shared atom") {
    Strategy s = make_strategy(game_filiform({-1}), game_filiform({-1, 1}), {{1, 0}, {1, 2}});
    SynthesisResult syn = synthesize_proof(s);
    CHECK(formula_to_string(*syn.left) == "forall x0. p");
    CHECK(formula_to_string(*syn.right) == "forall y0. exists y1. p");
    CHECK(proof_to_string(*syn.proof) == "(AllR y0 (ExR (w2 y0) (AllL (w0 y0) (Ax))))");
    CHECK(interpret_formula(*syn.left) == s.src);
    CHECK(interpret_formula(*syn.right) == s.tgt);
}

TEST_CASE("synthesis rejects non-filiform games") {
    Game t = game_tensor(game_filiform({-1}), game_filiform({1}));
    CHECK_THROWS_AS(synthesize_proof(make_strategy(t, t, {})), DomainError);
}

TEST_CASE("proof files") {
    std::string text = "# a sample proof file\n"
                       "left: forall x. p\n"
                       "right: forall y. exists z. p  # quantifier prefix\n"
                       "proof:\n"
                       "  (AllR y\n"
                       "    (ExR (g y)\n"
                       "      (AllL (f y) (Ax))))\n";
    ProofFile pf = parse_proof_file(text);
    CHECK(formula_to_string(*pf.left) == "forall x. p");
    CHECK(formula_to_string(*pf.right) == "forall y. exists z. p");
    CHECK_NOTHROW(check_proof(*pf.left, *pf.right, *pf.proof));

    std::string out = proof_file_to_string(*pf.left, *pf.right, *pf.proof);
    ProofFile again = parse_proof_file(out);
    CHECK(proof_to_string(*again.proof) == proof_to_string(*pf.proof));

    CHECK_THROWS_AS(parse_proof_file("left: p\nproof: (Ax)\n"), ParseError);
    CHECK_THROWS_AS(parse_proof_file("left: p\nleft: q\nright: p\nproof: (Ax)\n"), ParseError);
    CHECK_THROWS_AS(parse_proof_file("junk\nleft: p\nright: p\nproof: (Ax)\n"), ParseError);
}
