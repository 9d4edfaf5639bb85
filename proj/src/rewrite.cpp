#include "moncat/rewrite.hpp"

#include "moncat/error.hpp"

namespace moncat {

namespace {

// Words between layers: boundary(i) is the input word of layer i,
// boundary(slices.size()) is the stack's output word.
std::vector<ObjectWord> boundaries(const Signature& sig, const SliceForm& sf) {
    std::vector<ObjectWord> ws;
    ws.reserve(sf.slices.size() + 1);
    ws.push_back(sf.source);
    for (const Slice& s : sf.slices) ws.push_back(slice_target(sig, s));
    return ws;
}

} // namespace

std::optional<SliceForm> try_apply_step(const EquationalTheory& th, const SliceForm& sf,
                                        const RewriteStep& step) {
    if (step.equation < 0 || step.equation >= static_cast<int>(th.equations.size()))
        return std::nullopt;
    const Equation& eq = th.equations[static_cast<std::size_t>(step.equation)];
    const Diagram& from = step.forward ? *eq.lhs : *eq.rhs;
    const Diagram& to = step.forward ? *eq.rhs : *eq.lhs;
    SliceForm pat = to_slices(th.sig, from);
    SliceForm rep = to_slices(th.sig, to);

    int win = static_cast<int>(pat.slices.size());
    int total = static_cast<int>(sf.slices.size());
    if (step.slice_pos < 0 || step.slice_pos + win > total) return std::nullopt;

    std::vector<ObjectWord> ws = boundaries(th.sig, sf);
    const ObjectWord& base = ws[static_cast<std::size_t>(step.slice_pos)];
    if (step.wire_pos < 0 || step.wire_pos + from.src.size() > base.size()) return std::nullopt;
    ObjectWord lam = base.prefix(step.wire_pos);
    if (!(base.sub(step.wire_pos, from.src.size()) == from.src)) return std::nullopt;
    ObjectWord rho = base.suffix_from(step.wire_pos + from.src.size());

    for (int k = 0; k < win; ++k) {
        const Slice& host = sf.slices[static_cast<std::size_t>(step.slice_pos + k)];
        const Slice& ps = pat.slices[static_cast<std::size_t>(k)];
        if (host.gen != ps.gen) return std::nullopt;
        if (!(host.left == lam + ps.left)) return std::nullopt;
        if (!(host.right == ps.right + rho)) return std::nullopt;
    }

    SliceForm out;
    out.source = sf.source;
    out.slices.assign(sf.slices.begin(), sf.slices.begin() + step.slice_pos);
    for (const Slice& rs : rep.slices)
        out.slices.push_back(Slice{lam + rs.left, rs.gen, rs.right + rho});
    out.slices.insert(out.slices.end(), sf.slices.begin() + step.slice_pos + win,
                      sf.slices.end());
    return out;
}

SliceForm apply_step(const EquationalTheory& th, const SliceForm& sf, const RewriteStep& step) {
    auto r = try_apply_step(th, sf, step);
    if (!r) throw DomainError("rewrite step does not apply at the given position");
    return *r;
}

std::vector<RewriteStep> all_steps(const EquationalTheory& th, const SliceForm& sf) {
    std::vector<RewriteStep> steps;
    std::vector<ObjectWord> ws = boundaries(th.sig, sf);
    int total = static_cast<int>(sf.slices.size());
    for (int e = 0; e < static_cast<int>(th.equations.size()); ++e) {
        for (int dir = 0; dir < 2; ++dir) {
            bool forward = dir == 0;
            const Equation& eq = th.equations[static_cast<std::size_t>(e)];
            const Diagram& from = forward ? *eq.lhs : *eq.rhs;
            int win = static_cast<int>(to_slices(th.sig, from).slices.size());
            for (int sp = 0; sp + win <= total; ++sp) {
                const ObjectWord& base = ws[static_cast<std::size_t>(sp)];
                for (int wp = 0; wp + from.src.size() <= base.size(); ++wp) {
                    RewriteStep st{e, forward, sp, wp};
                    if (try_apply_step(th, sf, st)) steps.push_back(st);
                }
            }
        }
    }
    return steps;
}

} // namespace moncat
