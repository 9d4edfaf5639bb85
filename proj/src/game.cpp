#include "moncat/game.hpp"

#include "moncat/error.hpp"

namespace moncat {

void Game::close() {
    int n = size();
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 0; i < n; ++i) {
            std::uint64_t row = below[static_cast<std::size_t>(i)];
            std::uint64_t acc = row;
            for (int j = 0; j < n; ++j)
                if ((row >> j) & 1u) acc |= below[static_cast<std::size_t>(j)];
            if (acc != row) {
                below[static_cast<std::size_t>(i)] = acc;
                changed = true;
            }
        }
    }
}

void Game::validate() const {
    int n = size();
    if (n > 64) throw DomainError("games are limited to 64 moves");
    if (static_cast<int>(below.size()) != n)
        throw DomainError("game order has the wrong number of rows");
    for (int i = 0; i < n; ++i) {
        if (before(i, i)) throw DomainError("game order is reflexive at a move");
        for (int j = 0; j < n; ++j)
            if (i != j && before(i, j) && before(j, i))
                throw DomainError("game order violates antisymmetry");
    }
}

Game game_filiform(const std::vector<std::int8_t>& pols) {
    Game g;
    g.pol = pols;
    g.below.assign(pols.size(), 0);
    int n = g.size();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.below[static_cast<std::size_t>(i)] |= 1ull << j;
    return g;
}

Game game_dual(Game g) {
    for (auto& p : g.pol) p = static_cast<std::int8_t>(-p);
    return g;
}

namespace {

Game disjoint_union(const Game& a, const Game& b, bool ordered) {
    if (a.size() + b.size() > 64) throw DomainError("games are limited to 64 moves");
    Game g;
    g.pol = a.pol;
    g.pol.insert(g.pol.end(), b.pol.begin(), b.pol.end());
    g.below.assign(g.pol.size(), 0);
    int na = a.size(), nb = b.size();
    std::uint64_t bmask = nb >= 64 ? ~0ull : ((1ull << nb) - 1) << na;
    for (int i = 0; i < na; ++i) {
        g.below[static_cast<std::size_t>(i)] = a.below[static_cast<std::size_t>(i)];
        if (ordered) g.below[static_cast<std::size_t>(i)] |= bmask;
    }
    for (int i = 0; i < nb; ++i)
        g.below[static_cast<std::size_t>(na + i)] = b.below[static_cast<std::size_t>(i)] << na;
    return g;
}

} // namespace

Game game_tensor(const Game& a, const Game& b) { return disjoint_union(a, b, false); }

Game game_before(const Game& a, const Game& b) { return disjoint_union(a, b, true); }

Game game_arrow(const Game& a, const Game& b) { return game_tensor(game_dual(a), b); }

} // namespace moncat
