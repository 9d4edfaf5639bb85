#include "moncat/selftest.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <iomanip>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "moncat/canonical_game.hpp"
#include "moncat/canonical_rel.hpp"
#include "moncat/diagram.hpp"
#include "moncat/error.hpp"
#include "moncat/fol.hpp"
#include "moncat/monotone.hpp"
#include "moncat/multirel.hpp"
#include "moncat/parse.hpp"
#include "moncat/rewrite.hpp"
#include "moncat/strategy.hpp"
#include "moncat/theory.hpp"

namespace moncat {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

DiagramPtr parse_in(const EquationalTheory& th, const std::string& expr) {
    return parse_diagram(th.sig, expr);
}

// Rebuilds a diagram with types and generator occurrences renamed.
DiagramPtr rename_diagram(const Signature& sig, const Diagram& d,
                          const std::map<int, int>& type_map,
                          const std::map<int, int>& gen_map) {
    auto map_word = [&](const ObjectWord& w) {
        ObjectWord r = w;
        for (auto& t : r.types) {
            auto it = type_map.find(t);
            if (it != type_map.end()) t = it->second;
        }
        return r;
    };
    switch (d.kind) {
    case DiagramKind::Identity:
        return Diagram::identity(map_word(d.src));
    case DiagramKind::Generator: {
        auto it = gen_map.find(d.gen);
        return Diagram::generator(sig, it == gen_map.end() ? d.gen : it->second);
    }
    case DiagramKind::Composite:
        return Diagram::compose(rename_diagram(sig, *d.lhs, type_map, gen_map),
                                rename_diagram(sig, *d.rhs, type_map, gen_map));
    case DiagramKind::TensorBlock:
        return Diagram::tensor(rename_diagram(sig, *d.lhs, type_map, gen_map),
                               rename_diagram(sig, *d.rhs, type_map, gen_map));
    }
    throw DomainError("unknown diagram kind");
}

// All Opponent/Proponent polarization words of length 0..maxlen, shortest
// first (so a prefix of the list covers the shorter lengths).
std::vector<std::vector<std::int8_t>> polarization_words(int maxlen) {
    std::vector<std::vector<std::int8_t>> words;
    for (int len = 0; len <= maxlen; ++len)
        for (int code = 0; code < (1 << len); ++code) {
            std::vector<std::int8_t> w(static_cast<std::size_t>(len));
            for (int i = 0; i < len; ++i) w[static_cast<std::size_t>(i)] = (code >> i & 1) ? 1 : -1;
            words.push_back(std::move(w));
        }
    return words;
}

// ---------------------------------------------------------------------------
// 1. Every axiom of each built-in theory holds in its intended model, and the
//    derived two-sided-dual equalities hold as well.
// ---------------------------------------------------------------------------

std::string c1_axioms(const AcceptanceOptions&, std::string& detail) {
    long long checked = 0;

    {
        EquationalTheory th = builtin_theory("M");
        for (const auto& eq : th.equations) {
            if (!(eval_monoid(th, *eq.lhs) == eval_monoid(th, *eq.rhs)))
                return "M equation '" + eq.name + "' fails in the ordinal model";
            ++checked;
        }
    }
    {
        EquationalTheory th = builtin_theory("B");
        for (const auto& eq : th.equations) {
            if (!(eval_mrel(th, *eq.lhs) == eval_mrel(th, *eq.rhs)))
                return "B equation '" + eq.name + "' fails in the multirelation model";
            ++checked;
        }
    }
    {
        EquationalTheory th = builtin_theory("R");
        for (const auto& eq : th.equations) {
            if (!(eval_rel(th, *eq.lhs) == eval_rel(th, *eq.rhs)))
                return "R equation '" + eq.name + "' fails in the relation model";
            ++checked;
        }
    }

    EquationalTheory g = builtin_theory("G");
    for (const auto& eq : g.equations) {
        if (!(eval_games(g, *eq.lhs) == eval_games(g, *eq.rhs)))
            return "G equation '" + eq.name + "' fails in the strategy model";
        ++checked;
    }

    // The P generators satisfy the same 23 equations as the O generators:
    // rename every O occurrence in the O-prefixed axioms and re-evaluate.
    {
        std::map<int, int> type_map{{g.sig.type_index("O"), g.sig.type_index("P")}};
        std::map<int, int> gen_map;
        for (const char* base : {"mu", "eta", "delta", "eps", "gamma"})
            gen_map[g.sig.gen_index(std::string(base) + "O")] =
                g.sig.gen_index(std::string(base) + "P");
        int renamed = 0;
        for (const auto& eq : g.equations) {
            if (eq.name.rfind("O-", 0) != 0) continue;
            DiagramPtr l = rename_diagram(g.sig, *eq.lhs, type_map, gen_map);
            DiagramPtr r = rename_diagram(g.sig, *eq.rhs, type_map, gen_map);
            if (!(eval_games(g, *l) == eval_games(g, *r)))
                return "renamed equation 'P-" + eq.name.substr(2) + "' fails in the strategy model";
            ++renamed;
            ++checked;
        }
        if (renamed != 23)
            return "expected 23 single-type equations to rename, found " + std::to_string(renamed);
    }

    // Derived equalities: Yang-Baxter across both types, naturality of the
    // mixed braiding, and the mixed adjunction triangles.
    const std::pair<const char*, const char*> derived[] = {
        // Yang-Baxter on OOO, POO, PPO, PPP
        {"gammaO * id O . id O * gammaO . gammaO * id O",
         "id O * gammaO . gammaO * id O . id O * gammaO"},
        {"gammaOP * id O . id O * gammaOP . gammaO * id P",
         "id P * gammaO . gammaOP * id O . id O * gammaOP"},
        {"gammaP * id O . id P * gammaOP . gammaOP * id P",
         "id P * gammaOP . gammaOP * id P . id O * gammaP"},
        {"gammaP * id P . id P * gammaP . gammaP * id P",
         "id P * gammaP . gammaP * id P . id P * gammaP"},
        // naturality of the mixed braiding against both bialgebras
        {"muP * id O . gammaOP", "id P * gammaOP . gammaOP * id P . id O * muP"},
        {"id P * muO . gammaOP", "gammaOP * id O . id O * gammaOP . muO * id P"},
        {"deltaP * id O . id P * gammaOP . gammaOP * id P", "gammaOP . id O * deltaP"},
        {"gammaOP . deltaO * id P", "id P * deltaO . gammaOP * id O . id O * gammaOP"},
        {"etaP * id O . gammaOP", "id O * etaP"},
        {"id P * etaO . gammaOP", "etaO * id P"},
        {"gammaOP . id O * epsP", "epsP * id O"},
        {"gammaOP . epsO * id P", "id P * epsO"},
        // adjunction triangles and unit/counit absorption
        {"etaOP * id O . id O * epsOP", "id O"},
        {"id P * etaOP . epsOP * id P", "id P"},
        {"etaP * id O . epsOP", "epsO"},
        {"id P * etaO . epsOP", "epsP"},
        {"etaOP . id O * epsP", "etaO"},
        {"etaOP . epsO * id P", "etaP"},
    };
    int index = 0;
    for (const auto& [lhs, rhs] : derived) {
        ++index;
        if (!(eval_games(g, *parse_in(g, lhs)) == eval_games(g, *parse_in(g, rhs))))
            return "derived equality #" + std::to_string(index) + " (" + lhs +
                   " == " + rhs + ") fails in the strategy model";
        ++checked;
    }

    detail = std::to_string(checked) + " equalities";
    return "";
}

// ---------------------------------------------------------------------------
// 2. Multirelation canonical forms: exhaustive round trip.
// ---------------------------------------------------------------------------

std::string c2_mrel_roundtrip(const AcceptanceOptions& opts, std::string& detail) {
    EquationalTheory th = builtin_theory("B");
    const int max_dim = opts.max_size;
    const std::uint64_t max_entry = 2;
    long long count = 0;
    for (int m = 0; m <= max_dim; ++m)
        for (int n = 0; n <= max_dim; ++n) {
            const int cells = m * n;
            long long total = 1;
            for (int c = 0; c < cells; ++c) total *= static_cast<long long>(max_entry + 1);
            for (long long code = 0; code < total; ++code) {
                Multirelation r(m, n);
                long long x = code;
                for (int c = 0; c < cells; ++c) {
                    r.a[static_cast<std::size_t>(c)] = static_cast<std::uint64_t>(x % (max_entry + 1));
                    x /= static_cast<long long>(max_entry + 1);
                }
                RelCanonicalPtr can = canonical_of_mrel(r);
                if (!(rc_to_mrel(*can) == r))
                    return "canonical term of a " + std::to_string(m) + "x" + std::to_string(n) +
                           " matrix reads back differently";
                DiagramPtr d = flatten(th, *can);
                if (!(eval_mrel(th, *d) == r))
                    return "flattened canonical form of a " + std::to_string(m) + "x" +
                           std::to_string(n) + " matrix evaluates differently (code " +
                           std::to_string(code) + ")";
                ++count;
            }
        }
    detail = std::to_string(count) + " multirelations";
    return "";
}

// ---------------------------------------------------------------------------
// 3. Relation canonical forms: exhaustive round trip plus idempotence of the
//    duplicate-link construction under the boolean semantics.
// ---------------------------------------------------------------------------

std::string c3_rel_roundtrip(const AcceptanceOptions& opts, std::string& detail) {
    EquationalTheory th = builtin_theory("R");
    const int max_dim = opts.max_size;
    long long count = 0;
    for (int m = 0; m <= max_dim; ++m)
        for (int n = 0; n <= max_dim; ++n) {
            const int cells = m * n;
            for (long long code = 0; code < (1LL << cells); ++code) {
                Relation r(m, n);
                for (int c = 0; c < cells; ++c)
                    r.a[static_cast<std::size_t>(c)] = static_cast<std::uint8_t>(code >> c & 1);
                RelCanonicalPtr can = canonical_of_rel(r);
                DiagramPtr d = flatten(th, *can);
                if (!(eval_rel(th, *d) == r))
                    return "flattened canonical form of a " + std::to_string(m) + "x" +
                           std::to_string(n) + " relation evaluates differently (code " +
                           std::to_string(code) + ")";
                ++count;
            }
        }

    // Feeding the first input into the same output twice is the same relation
    // as feeding it once.
    const int trials = opts.quick ? 100 : 1000;
    std::mt19937 rng(20240811);
    for (int t = 0; t < trials; ++t) {
        int m = 1 + static_cast<int>(rng() % 3);
        int n = 1 + static_cast<int>(rng() % 3);
        Relation r(m, n);
        for (auto& bit : r.a) bit = static_cast<std::uint8_t>(rng() & 1);
        RelCanonicalPtr phi = canonical_of_rel(r);
        int i = static_cast<int>(rng() % static_cast<unsigned>(n));
        RelCanonicalPtr once = RelCanonical::link(i, phi);
        RelCanonicalPtr twice = RelCanonical::link(i, once);
        if (!(eval_rel(th, *flatten(th, *twice)) == eval_rel(th, *flatten(th, *once))))
            return "doubled link is not idempotent on a " + std::to_string(m) + "x" +
                   std::to_string(n) + " relation (trial " + std::to_string(t) + ")";
    }

    detail = std::to_string(count) + " relations, " + std::to_string(trials) +
             " idempotence trials";
    return "";
}

// ---------------------------------------------------------------------------
// 4. Strategies on filiform games: canonical round trip, closure of
//    composition, and associativity.
// ---------------------------------------------------------------------------

std::string c4_strategies(const AcceptanceOptions& opts, std::string& detail) {
    EquationalTheory g = builtin_theory("G");
    const int maxlen = opts.max_moves;
    auto words = polarization_words(maxlen);
    const int W = static_cast<int>(words.size());

    std::vector<Game> games;
    games.reserve(words.size());
    for (const auto& w : words) games.push_back(game_filiform(w));

    std::vector<std::vector<std::vector<Strategy>>> table(
        static_cast<std::size_t>(W), std::vector<std::vector<Strategy>>(static_cast<std::size_t>(W)));
    long long nstrat = 0;
    for (int a = 0; a < W; ++a)
        for (int b = 0; b < W; ++b) {
            table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
                enumerate_strategies(games[static_cast<std::size_t>(a)],
                                     games[static_cast<std::size_t>(b)]);
            nstrat += static_cast<long long>(
                table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)].size());
        }

    // Canonical round trip for every enumerated strategy.
    for (int a = 0; a < W; ++a)
        for (int b = 0; b < W; ++b)
            for (const Strategy& s : table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]) {
                GameCanonicalPtr can = canonical_of_strategy(s);
                DiagramPtr d = flatten(g, *can);
                if (!(eval_games(g, *d) == s))
                    return "canonical form round trip fails on a strategy between games of sizes " +
                           std::to_string(s.src.size()) + " and " + std::to_string(s.tgt.size());
            }

    // Every pairwise composite is again a valid strategy; the interaction
    // never deadlocks.
    long long composites = 0, deadlocks = 0;
    for (int m = 0; m < W; ++m)
        for (int a = 0; a < W; ++a) {
            const auto& left = table[static_cast<std::size_t>(a)][static_cast<std::size_t>(m)];
            if (left.empty()) continue;
            for (int b = 0; b < W; ++b) {
                const auto& right = table[static_cast<std::size_t>(m)][static_cast<std::size_t>(b)];
                for (const Strategy& s : left)
                    for (const Strategy& t : right) {
                        ++composites;
                        try {
                            Strategy c = compose_strategies(s, t);
                            validate_strategy(c);
                        } catch (const CycleDetectedError&) {
                            ++deadlocks;
                        }
                    }
            }
        }
    if (deadlocks != 0)
        return std::to_string(deadlocks) + " of " + std::to_string(composites) +
               " composites deadlocked";

    // Associativity on every composable triple over games of at most 2 moves.
    int w2 = 0;
    while (w2 < W && words[static_cast<std::size_t>(w2)].size() <= 2) ++w2;
    long long triples = 0;
    for (int a = 0; a < w2; ++a)
        for (int b = 0; b < w2; ++b)
            for (int c = 0; c < w2; ++c)
                for (int d = 0; d < w2; ++d)
                    for (const Strategy& s :
                         table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)])
                        for (const Strategy& t :
                             table[static_cast<std::size_t>(b)][static_cast<std::size_t>(c)])
                            for (const Strategy& u :
                                 table[static_cast<std::size_t>(c)][static_cast<std::size_t>(d)]) {
                                ++triples;
                                Strategy lt = compose_strategies(compose_strategies(s, t), u);
                                Strategy rt = compose_strategies(s, compose_strategies(t, u));
                                if (!(lt == rt)) return "composition is not associative";
                            }

    detail = std::to_string(nstrat) + " strategies, " + std::to_string(composites) +
             " composites, " + std::to_string(triples) + " associativity triples";
    return "";
}

// ---------------------------------------------------------------------------
// 5. Random rewrite steps leave the semantic value unchanged.
// ---------------------------------------------------------------------------

std::string c5_rewrites(const AcceptanceOptions& opts, std::string& detail) {
    const long long total_target = opts.quick ? 600 : 10000;
    const char* names[] = {"B", "R", "G"};
    long long done = 0;
    for (int ti = 0; ti < 3; ++ti) {
        EquationalTheory th = builtin_theory(names[ti]);
        const int ntypes = static_cast<int>(th.sig.types.size());
        const int ngens = static_cast<int>(th.sig.gens.size());
        long long quota = total_target / 3 + (ti == 0 ? total_target % 3 : 0);
        std::mt19937 rng(987650 + ti);
        long long counted = 0, attempts = 0;
        while (counted < quota) {
            if (++attempts > quota * 64)
                return std::string("theory ") + names[ti] +
                       ": could not find enough applicable rewrite steps";

            // Random stack of at most 6 generator layers.
            ObjectWord w;
            int len = 1 + static_cast<int>(rng() % 4);
            for (int i = 0; i < len; ++i)
                w.types.push_back(static_cast<int>(rng() % static_cast<unsigned>(ntypes)));
            SliceForm sf{w, {}};
            ObjectWord cur = w;
            int layers = static_cast<int>(rng() % 7);
            for (int s = 0; s < layers; ++s) {
                std::vector<Slice> candidates;
                for (int gi = 0; gi < ngens; ++gi) {
                    const ObjectWord& gsrc = th.sig.gens[static_cast<std::size_t>(gi)].source;
                    for (int pos = 0; pos + gsrc.size() <= cur.size(); ++pos)
                        if (cur.sub(pos, gsrc.size()) == gsrc)
                            candidates.push_back(
                                Slice{cur.prefix(pos), gi, cur.suffix_from(pos + gsrc.size())});
                }
                if (candidates.empty()) break;
                Slice sl = candidates[rng() % candidates.size()];
                sf.slices.push_back(sl);
                cur = slice_target(th.sig, sl);
            }

            auto steps = all_steps(th, sf);
            if (steps.empty()) continue;
            RewriteStep step = steps[rng() % steps.size()];
            SliceForm rewritten = apply_step(th, sf, step);
            DiagramPtr before = from_slices(th.sig, sf);
            DiagramPtr after = from_slices(th.sig, rewritten);
            bool same = false;
            if (ti == 0) same = eval_mrel(th, *before) == eval_mrel(th, *after);
            else if (ti == 1) same = eval_rel(th, *before) == eval_rel(th, *after);
            else same = eval_games(th, *before) == eval_games(th, *after);
            if (!same)
                return std::string("theory ") + names[ti] + ": applying '" +
                       th.equations[static_cast<std::size_t>(step.equation)].name + "' " +
                       (step.forward ? "forward" : "backward") + " at layer " +
                       std::to_string(step.slice_pos) + ", wire " +
                       std::to_string(step.wire_pos) + " changed the semantics";
            ++counted;
            ++done;
        }
    }
    detail = std::to_string(done) + " random steps across B, R, G";
    return "";
}

// ---------------------------------------------------------------------------
// 6. Golden proof interpretations: move orders and dependency sets.
// ---------------------------------------------------------------------------

std::string c6_proof_goldens(const AcceptanceOptions&, std::string& detail) {
    using Links = std::vector<std::pair<int, int>>;
    int checks = 0;

    // Three proofs of the same sequent, distinguished by the order in which
    // the quantifiers are introduced.
    {
        FormulaPtr l = parse_formula("forall x. p");
        FormulaPtr r = parse_formula("forall y. exists z. p");
        const std::pair<const char*, std::vector<int>> cases[] = {
            {"(AllL (c) (AllR y (ExR (d y) (Ax))))", {0, 1, 2}},
            {"(AllR y (AllL (f y) (ExR (g y) (Ax))))", {1, 0, 2}},
            {"(AllR y (ExR (g y) (AllL (f y) (Ax))))", {1, 2, 0}},
        };
        for (const auto& [text, order] : cases) {
            ProofInterpretation out = interpret_proof(*l, *r, *parse_proof(text));
            if (!out.has_intro_order)
                return std::string("proof ") + text + " lost its introduction order";
            if (out.intro_order != order) {
                std::ostringstream os;
                os << "proof " << text << " introduced moves in order [";
                for (std::size_t i = 0; i < out.intro_order.size(); ++i)
                    os << (i ? ", " : "") << out.intro_order[i];
                os << "]";
                return os.str();
            }
            ++checks;
        }
    }

    // Four witness choices for the same sequent, distinguished by which
    // eigenvariables the witness mentions.
    {
        FormulaPtr l = parse_formula("exists x. exists y. p");
        FormulaPtr r = parse_formula("exists z. p");
        const std::pair<const char*, Links> cases[] = {
            {"(ExL x (ExL y (ExR (pair x y) (Ax))))", Links{{0, 2}, {1, 2}}},
            {"(ExL x (ExL y (ExR x (Ax))))", Links{{0, 2}}},
            {"(ExL x (ExL y (ExR y (Ax))))", Links{{1, 2}}},
            {"(ExL x (ExL y (ExR (c) (Ax))))", Links{}},
        };
        for (const auto& [text, links] : cases) {
            ProofInterpretation out = interpret_proof(*l, *r, *parse_proof(text));
            if (strategy_links(out.strategy) != links)
                return std::string("proof ") + text + " yields the wrong dependency set";
            ++checks;
        }
    }

    detail = std::to_string(checks) + " golden interpretations";
    return "";
}

// ---------------------------------------------------------------------------
// 7. Every strategy on quantifier-prefix formulas is the interpretation of
//    its synthesized proof.
// ---------------------------------------------------------------------------

std::string c7_synthesis(const AcceptanceOptions& opts, std::string& detail) {
    const int maxlen = opts.max_moves;
    auto words = polarization_words(maxlen);
    long long count = 0;
    for (const auto& wl : words)
        for (const auto& wr : words) {
            Game a = game_filiform(wl);
            Game b = game_filiform(wr);
            for (const Strategy& s : enumerate_strategies(a, b)) {
                SynthesisResult syn = synthesize_proof(s);
                check_proof(*syn.left, *syn.right, *syn.proof);
                ProofInterpretation back = interpret_proof(*syn.left, *syn.right, *syn.proof);
                if (!(back.strategy == s))
                    return "synthesized proof for a strategy between prefixes of sizes " +
                           std::to_string(s.src.size()) + " and " + std::to_string(s.tgt.size()) +
                           " interprets to a different strategy";
                ++count;
            }
        }
    detail = std::to_string(count) + " strategies synthesized and re-interpreted";
    return "";
}

// ---------------------------------------------------------------------------
// 8. Endpoint identities used by the canonical-form constructions.
// ---------------------------------------------------------------------------

// (copy the first input, run psi beside the fresh wire, walk the fresh wire
// down to position i, merge): the diagram form of the Link constructor.
DiagramPtr link_diagram(const EquationalTheory& th, int i, DiagramPtr psi) {
    const Signature& sig = th.sig;
    const int m = psi->src.size();
    const int n = psi->tgt.size();
    auto idw = [&](int k) { return Diagram::identity(ObjectWord::repeated(0, k)); };
    std::vector<DiagramPtr> layers;
    layers.push_back(Diagram::tensor(Diagram::generator(sig, "delta"), idw(m - 1)));
    layers.push_back(Diagram::tensor(idw(1), std::move(psi)));
    for (int j = 0; j < i; ++j)
        layers.push_back(
            Diagram::tensor_all({idw(j), Diagram::generator(sig, "gamma"), idw(n - j - 1)}));
    layers.push_back(
        Diagram::tensor_all({idw(i), Diagram::generator(sig, "mu"), idw(n - i - 1)}));
    return Diagram::compose_all(layers);
}

// (discard the first input, run psi on the rest): the diagram form of Drop.
DiagramPtr drop_diagram(const EquationalTheory& th, DiagramPtr psi) {
    const int m = psi->src.size();
    auto idw = [&](int k) { return Diagram::identity(ObjectWord::repeated(0, k)); };
    return Diagram::compose(Diagram::tensor(Diagram::generator(th.sig, "eps"), idw(m)),
                            std::move(psi));
}

// id_p (x) mu (x) id_{n-p-2}: merge outputs p and p+1 of an n-wire boundary.
DiagramPtr merge_at(const EquationalTheory& th, int p, int n) {
    auto idw = [&](int k) { return Diagram::identity(ObjectWord::repeated(0, k)); };
    return Diagram::tensor_all({idw(p), Diagram::generator(th.sig, "mu"), idw(n - p - 2)});
}

std::string c8_endpoints(const AcceptanceOptions&, std::string& detail) {
    EquationalTheory b = builtin_theory("B");
    EquationalTheory r = builtin_theory("R");
    int checks = 0;

    // A bare unit beside identity wires equals its canonical rebuild.
    {
        DiagramPtr lhs = parse_in(b, "eta * id 1 * id 1");
        DiagramPtr rhs = link_diagram(b, 1, drop_diagram(b, parse_in(b, "eta * eta * id 1")));
        if (!(eval_mrel(b, *lhs) == eval_mrel(b, *rhs))) return "unit-beside-wires identity fails";
        ++checks;
    }

    // The two ways of walking a wire across a two-step stair agree.
    {
        const std::string s2 = "(gamma * id 1) . (id 1 * gamma)";
        DiagramPtr lhs = parse_in(
            b, "(id 1 * (" + s2 + ")) . (gamma * id 1 1) . (id 1 * (" + s2 + "))");
        DiagramPtr rhs = parse_in(
            b, "((" + s2 + ") * id 1) . (id 1 1 * gamma) . ((" + s2 + ") * id 1)");
        if (!(eval_mrel(b, *lhs) == eval_mrel(b, *rhs))) return "stair exchange identity fails";
        ++checks;
    }

    // Merging two outputs of a canonical form re-canonicalizes to the
    // predicted shape, in all four structural positions.
    {
        RelCanonicalPtr zero13 = RelCanonical::drop(RelCanonical::nil(3));
        struct MergeCase {
            const char* what;
            DiagramPtr diagram;
            const char* expected;
        };
        const MergeCase cases[] = {
            {"merge below a single link",
             Diagram::compose(link_diagram(b, 2, flatten(b, *zero13)), merge_at(b, 0, 3)),
             "Link(1, Drop(Nil(2)))"},
            {"merge collapsing two links",
             Diagram::compose(
                 link_diagram(b, 2, flatten(b, *RelCanonical::link(1, zero13))),
                 merge_at(b, 1, 3)),
             "Link(1, Link(1, Drop(Nil(2))))"},
            {"merge sliding past a link",
             Diagram::compose(link_diagram(b, 0, flatten(b, *zero13)), merge_at(b, 1, 3)),
             "Link(0, Drop(Nil(2)))"},
            {"merge under a dropped input",
             Diagram::compose(drop_diagram(b, flatten(b, *zero13)), merge_at(b, 0, 3)),
             "Drop(Drop(Nil(2)))"},
        };
        for (const auto& c : cases) {
            Multirelation value = eval_mrel(b, *c.diagram);
            RelCanonicalPtr can = canonical_of_mrel(value);
            if (rc_to_string(*can) != c.expected)
                return std::string(c.what) + ": canonical form is " + rc_to_string(*can) +
                       ", expected " + c.expected;
            if (!(eval_mrel(b, *flatten(b, *can)) == value))
                return std::string(c.what) + ": canonical form evaluates differently";
            ++checks;
        }
    }

    // Doubling a link is invisible to the boolean semantics but not to the
    // counting semantics.
    {
        RelCanonicalPtr phi = RelCanonical::link(0, RelCanonical::drop(RelCanonical::nil(2)));
        RelCanonicalPtr once = RelCanonical::link(0, phi);
        RelCanonicalPtr twice = RelCanonical::link(0, once);
        DiagramPtr d1 = flatten(r, *once);
        DiagramPtr d2 = flatten(r, *twice);
        if (!decide_eq_R(r, *d1, *d2)) return "doubled link differs in the boolean semantics";
        if (eval_mrel(r, *d1) == eval_mrel(r, *d2))
            return "doubled link should differ in the counting semantics";
        ++checks;
    }

    detail = std::to_string(checks) + " endpoint identities";
    return "";
}

// ---------------------------------------------------------------------------
// 9. The one-type theory <p, q | p.q = id> realizes the bicyclic monoid:
//    rewriting decides word equality exactly as the (m, n)-pair model does.
// ---------------------------------------------------------------------------

std::string c9_bicyclic(const AcceptanceOptions& opts, std::string& detail) {
    EquationalTheory th;
    th.name = "bicyclic";
    th.sig.add_type("1");
    ObjectWord one{0};
    int gp = th.sig.add_gen("p", one, one);
    int gq = th.sig.add_gen("q", one, one);
    th.add_equation("cancel",
                    Diagram::compose(Diagram::generator(th.sig, gp), Diagram::generator(th.sig, gq)),
                    Diagram::identity(one));

    const int maxlen = opts.quick ? 4 : 6;
    std::vector<std::string> words;
    for (int len = 0; len <= maxlen; ++len)
        for (int code = 0; code < (1 << len); ++code) {
            std::string w;
            for (int i = 0; i < len; ++i) w += (code >> i & 1) ? 'q' : 'p';
            words.push_back(w);
        }

    // Normal form: apply the shrinking direction of the relation until no
    // occurrence of p.q remains.
    auto normalize = [&](const std::string& w) {
        SliceForm sf{one, {}};
        for (char ch : w)
            sf.slices.push_back(Slice{ObjectWord(), ch == 'p' ? gp : gq, ObjectWord()});
        for (;;) {
            auto steps = all_steps(th, sf);
            const RewriteStep* pick = nullptr;
            for (const auto& s : steps)
                if (s.forward) {
                    pick = &s;
                    break;
                }
            if (!pick) break;
            sf = apply_step(th, sf, *pick);
        }
        std::string out;
        for (const auto& sl : sf.slices) out += th.sig.gen(sl.gen).name;
        return out;
    };

    // phi(p) = (1, 0), phi(q) = (0, 1) in the pair model of the bicyclic
    // monoid; letters act on the accumulator in diagram order.
    auto image = [](const std::string& w) {
        std::pair<long, long> acc{0, 0};
        for (char ch : w) {
            std::pair<long, long> g = (ch == 'p') ? std::pair<long, long>{1, 0}
                                                  : std::pair<long, long>{0, 1};
            long t = std::min(g.second, acc.first);
            acc = {g.first + acc.first - t, g.second + acc.second - t};
        }
        return acc;
    };

    std::vector<std::string> normals(words.size());
    std::vector<std::pair<long, long>> images(words.size());
    for (std::size_t i = 0; i < words.size(); ++i) {
        normals[i] = normalize(words[i]);
        images[i] = image(words[i]);
        if (!(image(normals[i]) == images[i]))
            return "normalizing '" + words[i] + "' changed its pair-model image";
    }

    long long pairs = 0;
    for (std::size_t i = 0; i < words.size(); ++i)
        for (std::size_t j = 0; j < words.size(); ++j) {
            bool by_rewriting = normals[i] == normals[j];
            bool by_model = images[i] == images[j];
            if (by_rewriting != by_model)
                return "words '" + words[i] + "' and '" + words[j] + "' " +
                       (by_rewriting ? "rewrite equal but differ in the pair model"
                                     : "agree in the pair model but rewrite differently");
            ++pairs;
        }

    detail = std::to_string(words.size()) + " words, " + std::to_string(pairs) + " pairs";
    return "";
}

struct Criterion {
    int number;
    const char* title;
    double budget_seconds; // 0 = no budget
    std::function<std::string(const AcceptanceOptions&, std::string&)> body;
};

} // namespace

int run_acceptance(std::ostream& out, const AcceptanceOptions& opts) {
    const std::vector<Criterion> criteria = {
        {1, "axiom soundness in the four models", 1.0, c1_axioms},
        {2, "multirelation canonical-form round trip", 60.0, c2_mrel_roundtrip},
        {3, "relation canonical-form round trip and link idempotence", 30.0, c3_rel_roundtrip},
        {4, "strategy canonical forms, composition closure, associativity", 300.0, c4_strategies},
        {5, "rewrite steps preserve semantics", 0.0, c5_rewrites},
        {6, "golden proof interpretations", 0.0, c6_proof_goldens},
        {7, "strategy-to-proof synthesis round trip", 120.0, c7_synthesis},
        {8, "canonical-form endpoint identities", 0.0, c8_endpoints},
        {9, "bicyclic-monoid word problem via rewriting", 0.0, c9_bicyclic},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        auto t0 = Clock::now();
        std::string problem;
        std::string detail;
        try {
            problem = c.body(opts, detail);
        } catch (const std::exception& e) {
            problem = std::string("unexpected exception: ") + e.what();
        }
        double elapsed = seconds_since(t0);
        const bool full_scale = !opts.quick && opts.max_size == 3 && opts.max_moves == 3;
        if (problem.empty() && full_scale && c.budget_seconds > 0 && elapsed > c.budget_seconds) {
            std::ostringstream os;
            os << "exceeded time budget: " << std::fixed << std::setprecision(2) << elapsed
               << " s > " << c.budget_seconds << " s";
            problem = os.str();
        }
        std::ostringstream line;
        line << (problem.empty() ? "[PASS] " : "[FAIL] ") << c.number << ". " << c.title;
        if (problem.empty() && !detail.empty()) line << ": " << detail;
        line << " (" << std::fixed << std::setprecision(2) << elapsed << " s)";
        if (!problem.empty()) line << "\n       " << problem;
        out << line.str() << "\n";
        if (!problem.empty()) ++failed;
    }
    out << (failed == 0
                ? std::string("All 9 acceptance criteria passed.")
                : std::to_string(failed) + " of 9 acceptance criteria failed.")
        << "\n";
    return failed;
}

int run_acceptance(std::ostream& out, bool quick) {
    AcceptanceOptions opts;
    if (quick) {
        opts.max_size = 2;
        opts.max_moves = 2;
        opts.quick = true;
    }
    return run_acceptance(out, opts);
}

} // namespace moncat
