#pragma once

#include <utility>
#include <vector>

#include "moncat/diagram.hpp"
#include "moncat/game.hpp"
#include "moncat/theory.hpp"

namespace moncat {

// A strategy from game src to game tgt: a set of directed justification
// links on the moves of the arena src -> tgt. Moves are indexed with the
// src moves first, then the tgt moves. In the arena, a src move's polarity
// is reversed; links must run from an opponent-polarity move to a
// proponent-polarity one and be compatible with the arena order.
struct Strategy {
    Game src;
    Game tgt;
    std::vector<std::uint64_t> links; // links[i] bit j: move i justifies move j

    int moves() const { return src.size() + tgt.size(); }

    std::int8_t ambient_pol(int i) const {
        return i < src.size() ? static_cast<std::int8_t>(-src.pol[static_cast<std::size_t>(i)])
                              : tgt.pol[static_cast<std::size_t>(i - src.size())];
    }

    bool has_link(int i, int j) const { return (links[static_cast<std::size_t>(i)] >> j) & 1u; }
    void add_link(int i, int j) { links[static_cast<std::size_t>(i)] |= 1ull << j; }

    bool operator==(const Strategy&) const = default;
};

Strategy make_strategy(Game src, Game tgt,
                       const std::vector<std::pair<int, int>>& link_pairs);

// All links as sorted (from, to) pairs.
std::vector<std::pair<int, int>> strategy_links(const Strategy& s);

// Throws InvalidStrategyError on a polarization violation or when the links
// together with the arena order contain a cycle.
void validate_strategy(const Strategy& s);

// The copycat strategy on a: each negative move is justified right-to-left,
// each positive move left-to-right.
Strategy identity_strategy(const Game& a);

// Interaction followed by hiding: plays s and t through the shared middle
// game, closes the combined links transitively, and keeps the pairs between
// the outer boundaries. Throws CycleDetectedError if the interaction
// deadlocks, TypeMismatchError if the middle games differ.
Strategy compose_strategies(const Strategy& s, const Strategy& t);

// Places s before t on both boundaries (the tensor of diagrams).
Strategy before_strategies(const Strategy& s, const Strategy& t);

// The one-move-per-letter total order of a word over the polarized theory
// "G": type O gives an opponent move, type P a proponent move.
Game game_of_word(const EquationalTheory& th, const ObjectWord& w);

// The strategy denoted by one generator of theory "G".
Strategy generator_strategy(const EquationalTheory& th, int gen);

// Evaluates a diagram over theory "G" into strategies.
Strategy eval_games(const EquationalTheory& th, const Diagram& d);

// Equality of G-diagrams: equal boundaries and equal strategies.
bool decide_eq_G(const EquationalTheory& th, const Diagram& a, const Diagram& b);

// All valid strategies between two games, by enumerating link subsets over
// the polarized move pairs and keeping the compatible ones. Deterministic
// order. Throws DomainError when there are more than 24 candidate pairs.
std::vector<Strategy> enumerate_strategies(const Game& src, const Game& tgt);

} // namespace moncat
