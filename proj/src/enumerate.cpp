#include "moncat/enumerate.hpp"

namespace moncat {

namespace {

struct Enumerator {
    const Signature& sig;
    const ObjectWord& target;
    int max_slices;
    const std::function<bool(const SliceForm&)>& visit;
    SliceForm cur;
    bool stopped = false;

    // Extends the current stack whose output word is w.
    void run(const ObjectWord& w) {
        if (stopped) return;
        if (w == target) {
            if (!visit(cur)) { stopped = true; return; }
        }
        if (static_cast<int>(cur.slices.size()) >= max_slices) return;
        for (int g = 0; g < static_cast<int>(sig.gens.size()) && !stopped; ++g) {
            const GenDecl& gd = sig.gen(g);
            int k = gd.source.size();
            for (int pos = 0; pos + k <= w.size() && !stopped; ++pos) {
                if (!(w.sub(pos, k) == gd.source)) continue;
                Slice s{w.prefix(pos), g, w.suffix_from(pos + k)};
                ObjectWord next = slice_target(sig, s);
                cur.slices.push_back(std::move(s));
                run(next);
                cur.slices.pop_back();
            }
        }
    }
};

} // namespace

void enumerate_diagrams(const Signature& sig, const ObjectWord& source,
                        const ObjectWord& target, int max_slices,
                        const std::function<bool(const SliceForm&)>& visit) {
    Enumerator en{sig, target, max_slices, visit, SliceForm{source, {}}, false};
    en.run(source);
}

std::vector<SliceForm> enumerate_diagrams(const Signature& sig, const ObjectWord& source,
                                          const ObjectWord& target, int max_slices) {
    std::vector<SliceForm> out;
    enumerate_diagrams(sig, source, target, max_slices, [&out](const SliceForm& sf) {
        out.push_back(sf);
        return true;
    });
    return out;
}

} // namespace moncat
