#include <doctest.h>

#include "moncat/canonical_game.hpp"
#include "moncat/error.hpp"
#include "moncat/json_io.hpp"
#include "moncat/game.hpp"
#include "moncat/parse.hpp"
#include "moncat/strategy.hpp"

using namespace moncat;

namespace {

const EquationalTheory& theory_G() {
    static EquationalTheory th = builtin_theory("G");
    return th;
}

Strategy ev(const char* expr) {
    const auto& th = theory_G();
    return eval_games(th, *parse_diagram(th.sig, expr));
}

Game word_game(const char* w) {
    const auto& th = theory_G();
    return game_of_word(th, parse_object_word(th.sig, w));
}

} // namespace

TEST_CASE("game constructions order and polarize moves") {
    Game g = word_game("O P O");
    CHECK(g.size() == 3);
    CHECK(g.pol == std::vector<std::int8_t>{-1, +1, -1});
    CHECK(g.before(0, 2));
    CHECK(!g.before(2, 0));
    g.validate();

    Game d = game_dual(g);
    CHECK(d.pol == std::vector<std::int8_t>{+1, -1, +1});
    CHECK(d.before(0, 2)); // order is untouched

    Game t = game_tensor(g, g);
    CHECK(t.size() == 6);
    CHECK(!t.before(0, 3)); // no order across the parts
    CHECK(t.before(3, 5));

    Game b = game_before(g, g);
    CHECK(b.before(2, 3));
    CHECK(b == word_game("O P O O P O"));

    Game arr = game_arrow(g, g);
    CHECK(arr.pol[0] == +1);
    CHECK(arr.pol[3] == -1);
    CHECK(!arr.before(0, 3));
}

TEST_CASE("strategy validation rejects bad links") {
    Game o1 = word_game("O");
    // A link out of a proponent-ambient move.
    Strategy bad = make_strategy(o1, o1, {{0, 1}});
    CHECK_THROWS_AS(validate_strategy(bad), InvalidStrategyError);
    // The identity is fine.
    validate_strategy(identity_strategy(o1));

    // The double-crossing swap on mixed polarities deadlocks with the arena
    // order and is rejected.
    Strategy cross = make_strategy(word_game("O P"), word_game("P O"), {{3, 0}, {1, 2}});
    CHECK_THROWS_AS(validate_strategy(cross), InvalidStrategyError);
}

TEST_CASE("generator strategies match their tables") {
    CHECK(strategy_links(ev("muO")) == std::vector<std::pair<int, int>>{{2, 0}, {2, 1}});
    CHECK(strategy_links(ev("deltaO")) == std::vector<std::pair<int, int>>{{1, 0}, {2, 0}});
    CHECK(strategy_links(ev("gammaO")) == std::vector<std::pair<int, int>>{{2, 1}, {3, 0}});
    CHECK(strategy_links(ev("muP")) == std::vector<std::pair<int, int>>{{0, 2}, {1, 2}});
    CHECK(strategy_links(ev("deltaP")) == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}});
    CHECK(strategy_links(ev("gammaP")) == std::vector<std::pair<int, int>>{{0, 3}, {1, 2}});
    CHECK(strategy_links(ev("etaOP")) == std::vector<std::pair<int, int>>{{0, 1}});
    CHECK(strategy_links(ev("epsOP")) == std::vector<std::pair<int, int>>{{0, 1}});
    CHECK(strategy_links(ev("gammaOP")) == std::vector<std::pair<int, int>>{{0, 3}, {2, 1}});
    CHECK(strategy_links(ev("etaO")).empty());
    CHECK(strategy_links(ev("epsP")).empty());
    for (int g = 0; g < static_cast<int>(theory_G().sig.gens.size()); ++g)
        validate_strategy(generator_strategy(theory_G(), g));
}

TEST_CASE("identities compose neutrally") {
    Strategy mu = ev("muO");
    CHECK(compose_strategies(identity_strategy(mu.src), mu) == mu);
    CHECK(compose_strategies(mu, identity_strategy(mu.tgt)) == mu);
    CHECK(ev("id O P") == identity_strategy(word_game("O P")));
}

TEST_CASE("the mixed unit and counit satisfy the zig-zags") {
    CHECK(ev("(etaOP * id O) . (id O * epsOP)") == ev("id O"));
    CHECK(ev("(id P * etaOP) . (epsOP * id P)") == ev("id P"));
}

TEST_CASE("adjoint mates evaluate to the intended strategies") {
    const auto& th = theory_G();
    for (const char* name : {"P-mult-mate", "P-unit-mate", "P-counit-mate", "mixed-sym-mate"}) {
        const Equation* eq = nullptr;
        for (const auto& e : th.equations)
            if (e.name == name) eq = &e;
        REQUIRE(eq != nullptr);
        CHECK(eval_games(th, *eq->lhs) == eval_games(th, *eq->rhs));
    }
}

TEST_CASE("interaction can deadlock on incomparable middles") {
    // Middle game: two incomparable moves of opposite polarity. sigma links
    // them one way, tau the other; the interaction cycles.
    Game mid = game_tensor(word_game("O"), word_game("P"));
    Game unit = game_of_word(theory_G(), ObjectWord{});
    Strategy sigma = make_strategy(unit, mid, {{0, 1}});
    Strategy tau = make_strategy(mid, unit, {{1, 0}});
    validate_strategy(sigma);
    validate_strategy(tau);
    CHECK_THROWS_AS(compose_strategies(sigma, tau), CycleDetectedError);
    // Mismatched middles are a type error instead.
    CHECK_THROWS_AS(compose_strategies(sigma, make_strategy(word_game("O"), unit, {})),
                    TypeMismatchError);
}

TEST_CASE("strategy enumeration counts match the link structure") {
    // O -> O: only the empty strategy and the copycat.
    auto oo = enumerate_strategies(word_game("O"), word_game("O"));
    CHECK(oo.size() == 2);
    // P^3 -> P^3: nine independent candidate links, every subset valid.
    auto ppp = enumerate_strategies(word_game("P P P"), word_game("P P P"));
    CHECK(ppp.size() == 512);
}

TEST_CASE("canonical terms decompose strategies deterministically") {
    auto c_id = canonical_of_strategy(ev("id O"));
    CHECK(gc_to_string(*c_id) == "TargetLink[O](0, Unlinked[O](Base{}))");

    auto c_eta = canonical_of_strategy(ev("etaOP"));
    CHECK(gc_to_string(*c_eta) == "Base{(0,1)}");

    auto c_eps = canonical_of_strategy(ev("epsOP"));
    CHECK(gc_to_string(*c_eps) == "SourceLink(1, Unlinked[P](Unlinked[O](Base{})))");

    auto c_muP = canonical_of_strategy(ev("muP"));
    CHECK(gc_to_string(*c_muP) ==
          "TargetLink[P](0, Unlinked[P](TargetLink[P](0, Unlinked[P](Base{}))))");

    // The links reconstruct exactly.
    CHECK(gc_links(*c_muP) == strategy_links(ev("muP")));
    CHECK(gc_links(*c_eps) == strategy_links(ev("epsOP")));
}

TEST_CASE("flattening a canonical term evaluates back to the strategy") {
    const auto& th = theory_G();
    const char* exprs[] = {
        "id O", "id P", "id O P", "muO", "deltaO", "muP", "deltaP",
        "gammaO", "gammaP", "gammaOP", "etaOP", "epsOP", "etaP * id O",
        "(etaOP * id O) . (id O * epsOP)",
        "(id P * deltaO) . (gammaOP * id O)",
        "(deltaP * etaO) . (gammaP * id O)",
    };
    for (const char* e : exprs) {
        Strategy s = eval_games(th, *parse_diagram(th.sig, e));
        auto c = canonical_of_strategy(s);
        auto d = flatten(th, *c);
        CHECK(eval_games(th, *d) == s);
    }
}

TEST_CASE("round-trip over every strategy on words up to two letters") {
    const auto& th = theory_G();
    std::vector<ObjectWord> words;
    int O = th.sig.type_index("O"), P = th.sig.type_index("P");
    words.push_back(ObjectWord{});
    for (int x : {O, P}) words.push_back(ObjectWord{x});
    for (int x : {O, P})
        for (int y : {O, P}) words.push_back(ObjectWord{x, y});
    int checked = 0;
    for (const auto& aw : words) {
        for (const auto& bw : words) {
            for (const Strategy& s : enumerate_strategies(game_of_word(th, aw),
                                                          game_of_word(th, bw))) {
                auto c = canonical_of_strategy(s);
                auto d = flatten(th, *c);
                CHECK(d->src == aw);
                CHECK(d->tgt == bw);
                CHECK(eval_games(th, *d) == s);
                ++checked;
            }
        }
    }
    CHECK(checked > 100);
}

TEST_CASE("strategy json round-trip") {
    EquationalTheory g = builtin_theory("G");
    Strategy s = eval_games(g, *parse_diagram(g.sig, "gammaOP"));
    nlohmann::json j = strategy_to_json(s);
    CHECK(j.dump() ==
          R"({"links":[["L0","R1"],["R0","L1"]],"source":["P","O"],"target":["O","P"]})");
    CHECK(strategy_from_json(j) == s);

    // Copycat on a single opponent move: justified from the target side.
    CHECK(strategy_from_json(nlohmann::json::parse(
              R"({"source":["O"],"target":["O"],"links":[["R0","L0"]]})")) ==
          identity_strategy(game_of_word(g, ObjectWord{{g.sig.type_index("O")}})));

    using nlohmann::json;
    CHECK_THROWS_AS(strategy_from_json(json::parse(R"({"source":["Q"],"target":[],"links":[]})")),
                    ParseError);
    CHECK_THROWS_AS(strategy_from_json(json::parse(
                        R"({"source":["O"],"target":["O"],"links":[["L0","R9"]]})")),
                    ParseError);
    // Structurally well-formed but violating polarization.
    CHECK_THROWS_AS(strategy_from_json(json::parse(
                        R"({"source":["O"],"target":["O"],"links":[["L0","R0"]]})")),
                    ParseError);
}
