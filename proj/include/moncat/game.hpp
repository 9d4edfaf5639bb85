#pragma once

#include <cstdint>
#include <vector>

#include "moncat/word.hpp"

namespace moncat {

// A finite polarized partial order of moves. Polarity +1 marks proponent
// moves, -1 opponent moves. The strict order is kept transitively closed in
// bitset rows (move count is capped at 64).
struct Game {
    std::vector<std::int8_t> pol;
    std::vector<std::uint64_t> below; // below[i] bit j set when i comes strictly before j

    int size() const { return static_cast<int>(pol.size()); }
    bool before(int i, int j) const { return (below[static_cast<std::size_t>(i)] >> j) & 1u; }

    void close();          // transitive closure of `below`
    void validate() const; // throws on reflexive/antisymmetry violations or size > 64

    bool operator==(const Game&) const = default;
};

// A total order of moves, in the order given.
Game game_filiform(const std::vector<std::int8_t>& pols);
// Reverses all polarities, keeps the order.
Game game_dual(Game g);
// Disjoint union, no order between the parts.
Game game_tensor(const Game& a, const Game& b);
// Disjoint union with every a-move before every b-move.
Game game_before(const Game& a, const Game& b);
// The arena a -> b: dual(a) next to b, no order between the parts.
Game game_arrow(const Game& a, const Game& b);

} // namespace moncat
