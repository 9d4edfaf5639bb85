#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "moncat/strategy.hpp"
#include "moncat/theory.hpp"

namespace moncat {

class GameCanonical;
using GameCanonicalPtr = std::shared_ptr<const GameCanonical>;

// Canonical-form terms for strategies between filiform games over the
// polarized theory "G". A term consumes the source word one move (and one
// link) at a time:
//   Base{links}          no source moves remain; the residual links among
//                        target moves are listed explicitly
//   Unlinked[p](phi)     the first source move (polarity p) carries no links
//   TargetLink[p](j,phi) the first source move carries one more link with
//                        target move j; orientation follows the polarity
//                        (a positive move justifies j, a negative move is
//                        justified by j)
//   SourceLink(i,phi)    the first source move justifies the later source
//                        move at offset i (it is necessarily positive)
// Polarities are stored as +1/-1 and printed P/O.
class GameCanonical {
public:
    enum class Kind { Base, Unlinked, TargetLink, SourceLink };

    Kind kind;
    std::int8_t pol = 0; // polarity of the first source move (not for Base)
    int index = -1;      // TargetLink: target position; SourceLink: source offset
    std::vector<std::pair<int, int>> base_links; // Base only
    GameCanonicalPtr sub;
    std::vector<std::int8_t> source_pols, target_pols;

    static GameCanonicalPtr base(std::vector<std::int8_t> target_pols,
                                 std::vector<std::pair<int, int>> links);
    static GameCanonicalPtr unlinked(std::int8_t pol, GameCanonicalPtr sub);
    static GameCanonicalPtr target_link(int index, GameCanonicalPtr sub);
    static GameCanonicalPtr source_link(int index, GameCanonicalPtr sub);

private:
    GameCanonical() = default;
};

bool gc_equal(const GameCanonical& a, const GameCanonical& b);
std::string gc_to_string(const GameCanonical& c);

// The links the term denotes, over moves indexed source-first.
std::vector<std::pair<int, int>> gc_links(const GameCanonical& c);

// Decomposes a strategy between filiform games. Deterministic: the first
// source move's links are consumed target-side first (ascending target
// position), then source-side (ascending offset).
GameCanonicalPtr canonical_of_strategy(const Strategy& s);

// Rebuilds a diagram over theory "G" denoting the same strategy. The wiring
// is re-synthesized from the term's links by a deterministic weave: positive
// wires are kept in a staging zone between the finished target wires and
// the waiting source wires, one messenger wire per link, and only the legal
// crossings are emitted (both same-polarity swaps, and the mixed swap that
// moves a positive wire below a negative one).
DiagramPtr flatten(const EquationalTheory& th, const GameCanonical& c);

} // namespace moncat
