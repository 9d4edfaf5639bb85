#include "moncat/canonical_game.hpp"

#include <algorithm>
#include <sstream>

#include "moncat/error.hpp"

namespace moncat {

GameCanonicalPtr GameCanonical::base(std::vector<std::int8_t> target_pols,
                                     std::vector<std::pair<int, int>> links) {
    auto c = std::shared_ptr<GameCanonical>(new GameCanonical());
    c->kind = Kind::Base;
    c->target_pols = std::move(target_pols);
    c->base_links = std::move(links);
    std::sort(c->base_links.begin(), c->base_links.end());
    return c;
}

GameCanonicalPtr GameCanonical::unlinked(std::int8_t pol, GameCanonicalPtr sub) {
    auto c = std::shared_ptr<GameCanonical>(new GameCanonical());
    c->kind = Kind::Unlinked;
    c->pol = pol;
    c->source_pols.push_back(pol);
    c->source_pols.insert(c->source_pols.end(), sub->source_pols.begin(),
                          sub->source_pols.end());
    c->target_pols = sub->target_pols;
    c->sub = std::move(sub);
    return c;
}

GameCanonicalPtr GameCanonical::target_link(int index, GameCanonicalPtr sub) {
    if (sub->source_pols.empty())
        throw DomainError("TargetLink needs a first source move");
    if (index < 0 || index >= static_cast<int>(sub->target_pols.size()))
        throw DomainError("TargetLink target position out of range");
    auto c = std::shared_ptr<GameCanonical>(new GameCanonical());
    c->kind = Kind::TargetLink;
    c->pol = sub->source_pols[0];
    c->index = index;
    c->source_pols = sub->source_pols;
    c->target_pols = sub->target_pols;
    c->sub = std::move(sub);
    return c;
}

GameCanonicalPtr GameCanonical::source_link(int index, GameCanonicalPtr sub) {
    if (sub->source_pols.empty())
        throw DomainError("SourceLink needs a first source move");
    if (index < 1 || index >= static_cast<int>(sub->source_pols.size()))
        throw DomainError("SourceLink offset out of range");
    if (sub->source_pols[0] != +1)
        throw DomainError("SourceLink needs a positive first move");
    auto c = std::shared_ptr<GameCanonical>(new GameCanonical());
    c->kind = Kind::SourceLink;
    c->pol = sub->source_pols[0];
    c->index = index;
    c->source_pols = sub->source_pols;
    c->target_pols = sub->target_pols;
    c->sub = std::move(sub);
    return c;
}

bool gc_equal(const GameCanonical& a, const GameCanonical& b) {
    if (a.kind != b.kind || a.pol != b.pol || a.index != b.index ||
        a.base_links != b.base_links || a.source_pols != b.source_pols ||
        a.target_pols != b.target_pols)
        return false;
    if (!a.sub) return !b.sub;
    return b.sub && gc_equal(*a.sub, *b.sub);
}

std::string gc_to_string(const GameCanonical& c) {
    std::ostringstream os;
    auto pol_char = [](std::int8_t p) { return p == +1 ? 'P' : 'O'; };
    switch (c.kind) {
    case GameCanonical::Kind::Base:
        os << "Base{";
        for (std::size_t i = 0; i < c.base_links.size(); ++i) {
            if (i) os << ", ";
            os << '(' << c.base_links[i].first << ',' << c.base_links[i].second << ')';
        }
        os << '}';
        break;
    case GameCanonical::Kind::Unlinked:
        os << "Unlinked[" << pol_char(c.pol) << "](" << gc_to_string(*c.sub) << ')';
        break;
    case GameCanonical::Kind::TargetLink:
        os << "TargetLink[" << pol_char(c.pol) << "](" << c.index << ", "
           << gc_to_string(*c.sub) << ')';
        break;
    case GameCanonical::Kind::SourceLink:
        os << "SourceLink(" << c.index << ", " << gc_to_string(*c.sub) << ')';
        break;
    }
    return os.str();
}

namespace {

void gc_links_rec(const GameCanonical& c, int consumed, int root_a,
                  std::vector<std::pair<int, int>>& out) {
    switch (c.kind) {
    case GameCanonical::Kind::Base:
        for (auto [i, j] : c.base_links) out.emplace_back(root_a + i, root_a + j);
        return;
    case GameCanonical::Kind::Unlinked:
        gc_links_rec(*c.sub, consumed + 1, root_a, out);
        return;
    case GameCanonical::Kind::TargetLink:
        if (c.pol == +1)
            out.emplace_back(consumed, root_a + c.index);
        else
            out.emplace_back(root_a + c.index, consumed);
        gc_links_rec(*c.sub, consumed, root_a, out);
        return;
    case GameCanonical::Kind::SourceLink:
        out.emplace_back(consumed, consumed + c.index);
        gc_links_rec(*c.sub, consumed, root_a, out);
        return;
    }
}

} // namespace

std::vector<std::pair<int, int>> gc_links(const GameCanonical& c) {
    std::vector<std::pair<int, int>> out;
    int root_a = static_cast<int>(c.source_pols.size());
    gc_links_rec(c, 0, root_a, out);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

GameCanonicalPtr canonical_rec(std::vector<std::int8_t> src_pols,
                               const std::vector<std::int8_t>& tgt_pols,
                               std::vector<std::pair<int, int>> links) {
    int a = static_cast<int>(src_pols.size());
    if (a == 0) {
        std::vector<std::pair<int, int>> base;
        for (auto [i, j] : links) base.emplace_back(i, j);
        return GameCanonical::base(tgt_pols, std::move(base));
    }

    // Links incident to the first source move, split by where the partner
    // lives. Target partners are consumed first, in ascending position.
    int best_tgt = -1;
    std::size_t best_tgt_at = 0;
    int best_src = -1;
    std::size_t best_src_at = 0;
    for (std::size_t k = 0; k < links.size(); ++k) {
        auto [i, j] = links[k];
        int partner = -1;
        if (i == 0) partner = j;
        else if (j == 0) partner = i;
        else continue;
        if (partner >= a) {
            int t = partner - a;
            if (best_tgt < 0 || t < best_tgt) { best_tgt = t; best_tgt_at = k; }
        } else {
            if (best_src < 0 || partner < best_src) { best_src = partner; best_src_at = k; }
        }
    }

    if (best_tgt >= 0) {
        auto [i, j] = links[best_tgt_at];
        std::int8_t p = src_pols[0];
        // Orientation must agree with the move's polarity.
        if ((p == +1 && i != 0) || (p == -1 && j != 0))
            throw InvalidStrategyError("link orientation contradicts the move polarity");
        links.erase(links.begin() + static_cast<std::ptrdiff_t>(best_tgt_at));
        return GameCanonical::target_link(best_tgt,
                                          canonical_rec(std::move(src_pols), tgt_pols,
                                                        std::move(links)));
    }
    if (best_src >= 0) {
        auto [i, j] = links[best_src_at];
        if (i != 0 || src_pols[0] != +1)
            throw InvalidStrategyError("source-side link cannot start at a negative move");
        (void)j;
        links.erase(links.begin() + static_cast<std::ptrdiff_t>(best_src_at));
        return GameCanonical::source_link(best_src,
                                          canonical_rec(std::move(src_pols), tgt_pols,
                                                        std::move(links)));
    }

    // No link touches the first move: drop it and shift every index down.
    std::int8_t p = src_pols[0];
    src_pols.erase(src_pols.begin());
    for (auto& [i, j] : links) {
        i -= 1;
        j -= 1;
    }
    return GameCanonical::unlinked(p, canonical_rec(std::move(src_pols), tgt_pols,
                                                    std::move(links)));
}

} // namespace

GameCanonicalPtr canonical_of_strategy(const Strategy& s) {
    validate_strategy(s);
    return canonical_rec(s.src.pol, s.tgt.pol, strategy_links(s));
}

namespace {

// ------- weave: rebuild a diagram from (source pols, target pols, links) ----

struct WeaveWire {
    std::int8_t pol;
    int tag; // messenger: the move it will justify / be consumed by; else -1
};

struct Weaver {
    const Signature& sig;
    int type_o, type_p;
    int g_muO, g_etaO, g_epsO, g_gammaO;
    int g_muP, g_etaP, g_epsP, g_gammaP, g_deltaP;
    int g_etaOP, g_epsOP, g_gammaOP;

    std::vector<WeaveWire> cur;
    std::vector<Slice> slices;
    int parked = 0;  // finished target wires at the top
    int staging = 0; // positive wires in flight below them

    explicit Weaver(const Signature& s) : sig(s) {
        type_o = s.type_index("O");
        type_p = s.type_index("P");
        g_muO = s.gen_index("muO");
        g_etaO = s.gen_index("etaO");
        g_epsO = s.gen_index("epsO");
        g_gammaO = s.gen_index("gammaO");
        g_muP = s.gen_index("muP");
        g_etaP = s.gen_index("etaP");
        g_epsP = s.gen_index("epsP");
        g_gammaP = s.gen_index("gammaP");
        g_deltaP = s.gen_index("deltaP");
        g_etaOP = s.gen_index("etaOP");
        g_epsOP = s.gen_index("epsOP");
        g_gammaOP = s.gen_index("gammaOP");
        if (type_o < 0 || type_p < 0 || g_muO < 0 || g_gammaOP < 0)
            throw DomainError("weaving needs the full polarized signature");
    }

    int type_of(std::int8_t pol) const { return pol == +1 ? type_p : type_o; }

    ObjectWord word_of(int from, int to) const {
        ObjectWord w;
        for (int i = from; i < to; ++i) w.types.push_back(type_of(cur[static_cast<std::size_t>(i)].pol));
        return w;
    }

    // Emits one layer: the generator consumes `consumed` wires at `pos` and
    // leaves `produced` in their place.
    void emit(int pos, int gen, int consumed, std::vector<WeaveWire> produced) {
        Slice s{word_of(0, pos), gen, word_of(pos + consumed, static_cast<int>(cur.size()))};
        slices.push_back(std::move(s));
        cur.erase(cur.begin() + pos, cur.begin() + pos + consumed);
        cur.insert(cur.begin() + pos, produced.begin(), produced.end());
    }

    // Swaps adjacent wires with the legal symmetry for their polarities.
    void swap_at(int pos) {
        WeaveWire x = cur[static_cast<std::size_t>(pos)];
        WeaveWire y = cur[static_cast<std::size_t>(pos + 1)];
        int gen;
        if (x.pol == -1 && y.pol == -1) gen = g_gammaO;
        else if (x.pol == +1 && y.pol == +1) gen = g_gammaP;
        else if (x.pol == +1 && y.pol == -1) gen = g_gammaOP;
        else throw DomainError("weave attempted the illegal crossing");
        emit(pos, gen, 2, {y, x});
    }

    void move_down(int from, int to) {
        for (int p = from; p < to; ++p) swap_at(p);
    }
    void move_up(int from, int to) {
        for (int p = from; p > to; --p) swap_at(p - 1);
    }

    // Processes the next source move (the wire right below the staging zone).
    void step_source(std::int8_t pol, int move_id, const std::vector<int>& out_links,
                     const std::vector<int>& in_links) {
        int pos = parked + staging;
        if (pol == +1) {
            int k = static_cast<int>(out_links.size());
            if (k == 0) {
                emit(pos, g_epsP, 1, {});
                return;
            }
            for (int t = 0; t < k - 1; ++t)
                emit(pos, g_deltaP, 1, {{+1, -1}, {+1, -1}});
            for (int t = 0; t < k; ++t)
                cur[static_cast<std::size_t>(pos + t)] = {+1, out_links[static_cast<std::size_t>(t)]};
            staging += k;
        } else {
            int k = static_cast<int>(in_links.size());
            if (k == 0) {
                emit(pos, g_epsO, 1, {});
                return;
            }
            // Gather this move's messengers at the bottom of the staging
            // zone, bottom-most first.
            for (int t = 0; t < k; ++t) {
                int found = -1;
                for (int p = parked + staging - 1 - t; p >= parked; --p)
                    if (cur[static_cast<std::size_t>(p)].tag == move_id) { found = p; break; }
                if (found < 0) throw DomainError("weave lost a messenger wire");
                move_down(found, parked + staging - 1 - t);
            }
            int base = parked + staging - k;
            for (int t = 0; t < k - 1; ++t)
                emit(base, g_muP, 2, {{+1, move_id}});
            staging -= k;
            emit(parked + staging, g_epsOP, 2, {});
        }
    }

    // Processes the next target move; its wire is parked at the zone border.
    void step_target(std::int8_t pol, int move_id, const std::vector<int>& out_links,
                     const std::vector<int>& in_links) {
        if (pol == -1) {
            int k = static_cast<int>(out_links.size());
            if (k == 0) {
                emit(parked, g_etaO, 0, {{-1, -1}});
                parked += 1;
                return;
            }
            // One mixed unit per link; each fresh positive wire dives below
            // the negative wires already created for this move.
            for (int t = 0; t < k; ++t) {
                emit(parked, g_etaOP, 0, {{-1, -1}, {+1, -1}});
                move_down(parked + 1, parked + 1 + t);
            }
            for (int t = 0; t < k - 1; ++t)
                emit(parked, g_muO, 2, {{-1, -1}});
            for (int t = 0; t < k; ++t)
                cur[static_cast<std::size_t>(parked + 1 + t)] = {+1, out_links[static_cast<std::size_t>(t)]};
            parked += 1;
            staging += k;
        } else {
            int k = static_cast<int>(in_links.size());
            if (k == 0) {
                emit(parked, g_etaP, 0, {{+1, -1}});
                parked += 1;
                return;
            }
            // Bring the messengers to the top of the staging zone, topmost
            // first, then merge them into the parked wire.
            for (int t = 0; t < k; ++t) {
                int found = -1;
                for (int p = parked + t; p < parked + staging; ++p)
                    if (cur[static_cast<std::size_t>(p)].tag == move_id) { found = p; break; }
                if (found < 0) throw DomainError("weave lost a messenger wire");
                move_up(found, parked + t);
            }
            for (int t = 0; t < k - 1; ++t)
                emit(parked, g_muP, 2, {{+1, move_id}});
            cur[static_cast<std::size_t>(parked)].tag = -1;
            parked += 1;
            staging -= k;
        }
    }
};

} // namespace

DiagramPtr flatten(const EquationalTheory& th, const GameCanonical& c) {
    const std::vector<std::int8_t>& as = c.source_pols;
    const std::vector<std::int8_t>& bs = c.target_pols;
    int a = static_cast<int>(as.size());
    int b = static_cast<int>(bs.size());
    std::vector<std::pair<int, int>> links = gc_links(c);

    std::vector<std::vector<int>> out_links(static_cast<std::size_t>(a + b));
    std::vector<std::vector<int>> in_links(static_cast<std::size_t>(a + b));
    for (auto [i, j] : links) {
        out_links[static_cast<std::size_t>(i)].push_back(j);
        in_links[static_cast<std::size_t>(j)].push_back(i);
    }
    for (auto& v : out_links) std::sort(v.begin(), v.end());
    for (auto& v : in_links) std::sort(v.begin(), v.end());

    Weaver wv(th.sig);
    for (int i = 0; i < a; ++i) wv.cur.push_back({as[static_cast<std::size_t>(i)], -1});

    // Interleave the two boundary orders respecting every link, target side
    // first whenever it is ready.
    std::vector<bool> done(static_cast<std::size_t>(a + b), false);
    int next_src = 0, next_tgt = 0;
    auto ready = [&](int m) {
        for (int u : in_links[static_cast<std::size_t>(m)])
            if (!done[static_cast<std::size_t>(u)]) return false;
        return true;
    };
    for (int step = 0; step < a + b; ++step) {
        if (next_tgt < b && ready(a + next_tgt)) {
            int m = a + next_tgt;
            wv.step_target(bs[static_cast<std::size_t>(next_tgt)], m,
                           out_links[static_cast<std::size_t>(m)],
                           in_links[static_cast<std::size_t>(m)]);
            done[static_cast<std::size_t>(m)] = true;
            ++next_tgt;
        } else if (next_src < a && ready(next_src)) {
            int m = next_src;
            wv.step_source(as[static_cast<std::size_t>(m)], m,
                           out_links[static_cast<std::size_t>(m)],
                           in_links[static_cast<std::size_t>(m)]);
            done[static_cast<std::size_t>(m)] = true;
            ++next_src;
        } else {
            throw InvalidStrategyError("canonical term has cyclic link constraints");
        }
    }

    SliceForm sf;
    ObjectWord src_word;
    for (std::int8_t p : as) src_word.types.push_back(wv.type_of(p));
    sf.source = std::move(src_word);
    sf.slices = std::move(wv.slices);
    return from_slices(th.sig, sf);
}

} // namespace moncat
