#include "moncat/strategy.hpp"

#include <string>

#include "moncat/error.hpp"

namespace moncat {

namespace {

// Transitive closure of an adjacency bitset; returns true if a strict cycle
// appears (some move reaches itself).
bool close_and_check_cycle(std::vector<std::uint64_t>& adj) {
    int n = static_cast<int>(adj.size());
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 0; i < n; ++i) {
            std::uint64_t row = adj[static_cast<std::size_t>(i)];
            std::uint64_t acc = row;
            for (int j = 0; j < n; ++j)
                if ((row >> j) & 1u) acc |= adj[static_cast<std::size_t>(j)];
            if (acc != row) {
                adj[static_cast<std::size_t>(i)] = acc;
                changed = true;
            }
        }
    }
    for (int i = 0; i < n; ++i)
        if ((adj[static_cast<std::size_t>(i)] >> i) & 1u) return true;
    return false;
}

} // namespace

Strategy make_strategy(Game src, Game tgt,
                       const std::vector<std::pair<int, int>>& link_pairs) {
    Strategy s;
    s.src = std::move(src);
    s.tgt = std::move(tgt);
    s.links.assign(static_cast<std::size_t>(s.moves()), 0);
    for (auto [i, j] : link_pairs) {
        if (i < 0 || j < 0 || i >= s.moves() || j >= s.moves())
            throw DomainError("strategy link index out of range");
        s.add_link(i, j);
    }
    return s;
}

std::vector<std::pair<int, int>> strategy_links(const Strategy& s) {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < s.moves(); ++i)
        for (int j = 0; j < s.moves(); ++j)
            if (s.has_link(i, j)) out.emplace_back(i, j);
    return out;
}

void validate_strategy(const Strategy& s) {
    if (static_cast<int>(s.links.size()) != s.moves())
        throw InvalidStrategyError("strategy link table has the wrong size");
    s.src.validate();
    s.tgt.validate();
    for (int i = 0; i < s.moves(); ++i) {
        for (int j = 0; j < s.moves(); ++j) {
            if (!s.has_link(i, j)) continue;
            if (s.ambient_pol(i) != -1 || s.ambient_pol(j) != +1)
                throw InvalidStrategyError(
                    "link from move " + std::to_string(i) + " to move " + std::to_string(j) +
                    " violates polarization");
        }
    }
    // Compatibility: links plus the arena order must stay acyclic.
    Game arena = game_arrow(s.src, s.tgt);
    std::vector<std::uint64_t> adj = s.links;
    for (int i = 0; i < s.moves(); ++i)
        adj[static_cast<std::size_t>(i)] |= arena.below[static_cast<std::size_t>(i)];
    if (close_and_check_cycle(adj))
        throw InvalidStrategyError("links are incompatible with the arena order");
}

Strategy identity_strategy(const Game& a) {
    Strategy s;
    s.src = a;
    s.tgt = a;
    s.links.assign(static_cast<std::size_t>(2 * a.size()), 0);
    for (int m = 0; m < a.size(); ++m) {
        if (a.pol[static_cast<std::size_t>(m)] == -1)
            s.add_link(a.size() + m, m); // the right copy justifies the left
        else
            s.add_link(m, a.size() + m); // the left copy justifies the right
    }
    return s;
}

Strategy compose_strategies(const Strategy& s, const Strategy& t) {
    if (!(s.tgt == t.src))
        throw TypeMismatchError("strategy composition: middle games differ");
    int a = s.src.size(), b = s.tgt.size(), c = t.tgt.size();
    int n = a + b + c;
    if (n > 64) throw DomainError("interaction exceeds the 64-move limit");

    // s occupies moves [0, a+b); t's moves shift up by a so its copy of the
    // middle game lands on s's.
    std::vector<std::uint64_t> adj(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < a + b; ++i) adj[static_cast<std::size_t>(i)] |= s.links[static_cast<std::size_t>(i)];
    for (int i = 0; i < b + c; ++i)
        adj[static_cast<std::size_t>(a + i)] |= t.links[static_cast<std::size_t>(i)] << a;

    if (close_and_check_cycle(adj))
        throw CycleDetectedError("strategy interaction deadlocked through the middle game");

    Strategy r;
    r.src = s.src;
    r.tgt = t.tgt;
    r.links.assign(static_cast<std::size_t>(a + c), 0);
    auto outer = [a, b, c](int i) -> int {
        if (i < a) return i;
        if (i >= a + b) return i - b;
        return -1;
    };
    (void)c;
    for (int i = 0; i < n; ++i) {
        int oi = outer(i);
        if (oi < 0) continue;
        for (int j = 0; j < n; ++j) {
            int oj = outer(j);
            if (oj < 0) continue;
            if ((adj[static_cast<std::size_t>(i)] >> j) & 1u) r.add_link(oi, oj);
        }
    }
    validate_strategy(r);
    return r;
}

Strategy before_strategies(const Strategy& s, const Strategy& t) {
    Strategy r;
    r.src = game_before(s.src, t.src);
    r.tgt = game_before(s.tgt, t.tgt);
    r.links.assign(static_cast<std::size_t>(r.moves()), 0);
    int sa = s.src.size(), ta = t.src.size(), sb = s.tgt.size();
    auto s_index = [sa, ta](int i) { return i < sa ? i : ta + i; };
    auto t_index = [sa, ta, sb](int i) { return i < ta ? sa + i : sa + sb + i; };
    for (auto [i, j] : strategy_links(s)) r.add_link(s_index(i), s_index(j));
    for (auto [i, j] : strategy_links(t)) r.add_link(t_index(i), t_index(j));
    return r;
}

Game game_of_word(const EquationalTheory& th, const ObjectWord& w) {
    int O = th.sig.type_index("O");
    int P = th.sig.type_index("P");
    if (O < 0 || P < 0)
        throw DomainError("game evaluation needs the polarized types O and P");
    std::vector<std::int8_t> pols;
    pols.reserve(static_cast<std::size_t>(w.size()));
    for (int t : w.types) {
        if (t == O) pols.push_back(-1);
        else if (t == P) pols.push_back(+1);
        else throw DomainError("word contains a type without a polarity");
    }
    return game_filiform(pols);
}

Strategy generator_strategy(const EquationalTheory& th, int gen) {
    const GenDecl& gd = th.sig.gen(gen);
    Game src = game_of_word(th, gd.source);
    Game tgt = game_of_word(th, gd.target);
    int a = src.size();
    std::vector<std::pair<int, int>> ls;
    const std::string& n = gd.name;
    if (n == "muO") ls = {{a + 0, 0}, {a + 0, 1}};
    else if (n == "etaO" || n == "epsO" || n == "etaP" || n == "epsP") ls = {};
    else if (n == "deltaO") ls = {{a + 0, 0}, {a + 1, 0}};
    else if (n == "gammaO") ls = {{a + 1, 0}, {a + 0, 1}};
    else if (n == "muP") ls = {{0, a + 0}, {1, a + 0}};
    else if (n == "deltaP") ls = {{0, a + 0}, {0, a + 1}};
    else if (n == "gammaP") ls = {{0, a + 1}, {1, a + 0}};
    else if (n == "etaOP") ls = {{a + 0, a + 1}};
    else if (n == "epsOP") ls = {{0, 1}};
    else if (n == "gammaOP") ls = {{0, a + 1}, {a + 0, 1}};
    else throw DomainError("generator '" + n + "' has no strategy interpretation");
    Strategy s = make_strategy(std::move(src), std::move(tgt), ls);
    validate_strategy(s);
    return s;
}

Strategy eval_games(const EquationalTheory& th, const Diagram& d) {
    switch (d.kind) {
    case DiagramKind::Identity:
        return identity_strategy(game_of_word(th, d.src));
    case DiagramKind::Generator:
        return generator_strategy(th, d.gen);
    case DiagramKind::Composite:
        return compose_strategies(eval_games(th, *d.lhs), eval_games(th, *d.rhs));
    case DiagramKind::TensorBlock:
        return before_strategies(eval_games(th, *d.lhs), eval_games(th, *d.rhs));
    }
    throw DomainError("unreachable diagram kind");
}

bool decide_eq_G(const EquationalTheory& th, const Diagram& a, const Diagram& b) {
    if (!(a.src == b.src) || !(a.tgt == b.tgt)) return false;
    return eval_games(th, a) == eval_games(th, b);
}

std::vector<Strategy> enumerate_strategies(const Game& src, const Game& tgt) {
    Strategy proto;
    proto.src = src;
    proto.tgt = tgt;
    proto.links.assign(static_cast<std::size_t>(proto.moves()), 0);

    std::vector<std::pair<int, int>> candidates;
    for (int i = 0; i < proto.moves(); ++i)
        for (int j = 0; j < proto.moves(); ++j)
            if (i != j && proto.ambient_pol(i) == -1 && proto.ambient_pol(j) == +1)
                candidates.emplace_back(i, j);
    if (candidates.size() > 24)
        throw DomainError("too many candidate links to enumerate");

    std::vector<Strategy> out;
    for (std::uint32_t mask = 0; mask < (1u << candidates.size()); ++mask) {
        Strategy s = proto;
        for (std::size_t k = 0; k < candidates.size(); ++k)
            if ((mask >> k) & 1u) s.add_link(candidates[k].first, candidates[k].second);
        try {
            validate_strategy(s);
        } catch (const InvalidStrategyError&) {
            continue;
        }
        out.push_back(std::move(s));
    }
    return out;
}

} // namespace moncat
