#include "moncat/diagram.hpp"

#include <sstream>

namespace moncat {

std::string Signature::word_to_string(const ObjectWord& w) const {
    if (w.empty()) return "I";
    std::ostringstream os;
    for (int i = 0; i < w.size(); ++i) {
        if (i) os << ' ';
        check_type(w[i]);
        os << types[static_cast<std::size_t>(w[i])];
    }
    return os.str();
}

DiagramPtr Diagram::identity(ObjectWord w) {
    auto d = std::shared_ptr<Diagram>(new Diagram());
    d->kind = DiagramKind::Identity;
    d->src = w;
    d->tgt = std::move(w);
    d->gen_count = 0;
    return d;
}

DiagramPtr Diagram::generator(const Signature& sig, int g) {
    if (g < 0 || g >= static_cast<int>(sig.gens.size()))
        throw DomainError("generator index out of range");
    auto d = std::shared_ptr<Diagram>(new Diagram());
    d->kind = DiagramKind::Generator;
    d->gen = g;
    d->src = sig.gen(g).source;
    d->tgt = sig.gen(g).target;
    d->gen_count = 1;
    return d;
}

DiagramPtr Diagram::generator(const Signature& sig, const std::string& name) {
    int g = sig.gen_index(name);
    if (g < 0) throw DomainError("unknown generator: " + name);
    return generator(sig, g);
}

DiagramPtr Diagram::compose(DiagramPtr f, DiagramPtr g) {
    if (!(f->tgt == g->src))
        throw TypeMismatchError("composition boundary mismatch");
    auto d = std::shared_ptr<Diagram>(new Diagram());
    d->kind = DiagramKind::Composite;
    d->src = f->src;
    d->tgt = g->tgt;
    d->gen_count = f->gen_count + g->gen_count;
    d->lhs = std::move(f);
    d->rhs = std::move(g);
    return d;
}

DiagramPtr Diagram::tensor(DiagramPtr f, DiagramPtr g) {
    auto d = std::shared_ptr<Diagram>(new Diagram());
    d->kind = DiagramKind::TensorBlock;
    d->src = f->src + g->src;
    d->tgt = f->tgt + g->tgt;
    d->gen_count = f->gen_count + g->gen_count;
    d->lhs = std::move(f);
    d->rhs = std::move(g);
    return d;
}

DiagramPtr Diagram::compose_all(const std::vector<DiagramPtr>& fs) {
    if (fs.empty()) throw DomainError("compose_all needs at least one factor");
    DiagramPtr acc = fs[0];
    for (std::size_t i = 1; i < fs.size(); ++i) acc = compose(acc, fs[i]);
    return acc;
}

DiagramPtr Diagram::tensor_all(const std::vector<DiagramPtr>& fs) {
    if (fs.empty()) return identity(ObjectWord{});
    DiagramPtr acc = fs[0];
    for (std::size_t i = 1; i < fs.size(); ++i) acc = tensor(acc, fs[i]);
    return acc;
}

bool structurally_equal(const Diagram& a, const Diagram& b) {
    if (a.kind != b.kind || !(a.src == b.src) || !(a.tgt == b.tgt)) return false;
    switch (a.kind) {
    case DiagramKind::Identity: return true;
    case DiagramKind::Generator: return a.gen == b.gen;
    case DiagramKind::Composite:
    case DiagramKind::TensorBlock:
        return structurally_equal(*a.lhs, *b.lhs) && structurally_equal(*a.rhs, *b.rhs);
    }
    return false;
}

ObjectWord slice_source(const Signature& sig, const Slice& s) {
    return s.left + sig.gen(s.gen).source + s.right;
}

ObjectWord slice_target(const Signature& sig, const Slice& s) {
    return s.left + sig.gen(s.gen).target + s.right;
}

ObjectWord slice_form_target(const Signature& sig, const SliceForm& sf) {
    if (sf.slices.empty()) return sf.source;
    return slice_target(sig, sf.slices.back());
}

void validate_slice_form(const Signature& sig, const SliceForm& sf) {
    ObjectWord w = sf.source;
    for (const Slice& s : sf.slices) {
        if (!(slice_source(sig, s) == w))
            throw TypeMismatchError("slice stack has a boundary mismatch");
        w = slice_target(sig, s);
    }
}

namespace {

void to_slices_rec(const Signature& sig, const Diagram& d, std::vector<Slice>& out) {
    switch (d.kind) {
    case DiagramKind::Identity:
        return;
    case DiagramKind::Generator:
        out.push_back(Slice{ObjectWord{}, d.gen, ObjectWord{}});
        return;
    case DiagramKind::Composite:
        to_slices_rec(sig, *d.lhs, out);
        to_slices_rec(sig, *d.rhs, out);
        return;
    case DiagramKind::TensorBlock: {
        std::size_t first = out.size();
        to_slices_rec(sig, *d.lhs, out);
        for (std::size_t i = first; i < out.size(); ++i)
            out[i].right = out[i].right + d.rhs->src;
        std::size_t second = out.size();
        to_slices_rec(sig, *d.rhs, out);
        for (std::size_t i = second; i < out.size(); ++i)
            out[i].left = d.lhs->tgt + out[i].left;
        return;
    }
    }
}

} // namespace

SliceForm to_slices(const Signature& sig, const Diagram& d) {
    SliceForm sf;
    sf.source = d.src;
    to_slices_rec(sig, d, sf.slices);
    return sf;
}

DiagramPtr from_slices(const Signature& sig, const SliceForm& sf) {
    validate_slice_form(sig, sf);
    DiagramPtr acc = Diagram::identity(sf.source);
    for (const Slice& s : sf.slices) {
        DiagramPtr layer = Diagram::tensor(
            Diagram::tensor(Diagram::identity(s.left), Diagram::generator(sig, s.gen)),
            Diagram::identity(s.right));
        acc = Diagram::compose(acc, layer);
    }
    return acc;
}

} // namespace moncat
