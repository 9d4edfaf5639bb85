#include "moncat/canonical_rel.hpp"

#include <sstream>

#include "moncat/error.hpp"

namespace moncat {

RelCanonicalPtr RelCanonical::nil(int n) {
    if (n < 0) throw DomainError("negative output count");
    auto c = std::shared_ptr<RelCanonical>(new RelCanonical());
    c->kind = Kind::Nil;
    c->arg = n;
    c->m = 0;
    c->n = n;
    return c;
}

RelCanonicalPtr RelCanonical::drop(RelCanonicalPtr phi) {
    auto c = std::shared_ptr<RelCanonical>(new RelCanonical());
    c->kind = Kind::Drop;
    c->m = phi->m + 1;
    c->n = phi->n;
    c->sub = std::move(phi);
    return c;
}

RelCanonicalPtr RelCanonical::link(int i, RelCanonicalPtr phi) {
    if (phi->m < 1) throw DomainError("Link needs a first input wire");
    if (i < 0 || i >= phi->n) throw DomainError("Link output index out of range");
    auto c = std::shared_ptr<RelCanonical>(new RelCanonical());
    c->kind = Kind::Link;
    c->arg = i;
    c->m = phi->m;
    c->n = phi->n;
    c->sub = std::move(phi);
    return c;
}

bool rc_equal(const RelCanonical& a, const RelCanonical& b) {
    if (a.kind != b.kind || a.arg != b.arg || a.m != b.m || a.n != b.n) return false;
    if (!a.sub) return !b.sub;
    return b.sub && rc_equal(*a.sub, *b.sub);
}

std::string rc_to_string(const RelCanonical& c) {
    std::ostringstream os;
    switch (c.kind) {
    case RelCanonical::Kind::Nil: os << "Nil(" << c.arg << ")"; break;
    case RelCanonical::Kind::Drop: os << "Drop(" << rc_to_string(*c.sub) << ")"; break;
    case RelCanonical::Kind::Link:
        os << "Link(" << c.arg << ", " << rc_to_string(*c.sub) << ")";
        break;
    }
    return os.str();
}

Multirelation rc_to_mrel(const RelCanonical& c) {
    switch (c.kind) {
    case RelCanonical::Kind::Nil:
        return Multirelation(0, c.arg);
    case RelCanonical::Kind::Drop: {
        Multirelation s = rc_to_mrel(*c.sub);
        Multirelation r(s.m + 1, s.n);
        for (int i = 0; i < s.m; ++i)
            for (int j = 0; j < s.n; ++j) r.at(i + 1, j) = s.at(i, j);
        return r;
    }
    case RelCanonical::Kind::Link: {
        Multirelation r = rc_to_mrel(*c.sub);
        r.at(0, c.arg) = checked_add(r.at(0, c.arg), 1);
        return r;
    }
    }
    throw DomainError("unreachable canonical kind");
}

RelCanonicalPtr canonical_of_mrel(const Multirelation& r) {
    if (r.m == 0) return RelCanonical::nil(r.n);
    for (int j = 0; j < r.n; ++j) {
        if (r.at(0, j) > 0) {
            Multirelation rest = r;
            rest.at(0, j) -= 1;
            return RelCanonical::link(j, canonical_of_mrel(rest));
        }
    }
    Multirelation rest(r.m - 1, r.n);
    for (int i = 1; i < r.m; ++i)
        for (int j = 0; j < r.n; ++j) rest.at(i - 1, j) = r.at(i, j);
    return RelCanonical::drop(canonical_of_mrel(rest));
}

RelCanonicalPtr canonical_of_rel(const Relation& r) {
    Multirelation as_mrel(r.m, r.n);
    for (int i = 0; i < r.m; ++i)
        for (int j = 0; j < r.n; ++j) as_mrel.at(i, j) = r.at(i, j) ? 1 : 0;
    return canonical_of_mrel(as_mrel);
}

namespace {

struct BialgSig {
    int type, mu, eta, delta, eps, gamma;
};

BialgSig bialg_sig(const EquationalTheory& th) {
    BialgSig s;
    s.mu = th.sig.gen_index("mu");
    s.eta = th.sig.gen_index("eta");
    s.delta = th.sig.gen_index("delta");
    s.eps = th.sig.gen_index("eps");
    s.gamma = th.sig.gen_index("gamma");
    if (s.mu < 0 || s.eta < 0 || s.delta < 0 || s.eps < 0 || s.gamma < 0)
        throw DomainError("theory lacks the bialgebra generators mu/eta/delta/eps/gamma");
    s.type = th.sig.gen(s.mu).target[0];
    return s;
}

using D = Diagram;

DiagramPtr flatten_rec(const EquationalTheory& th, const BialgSig& g, const RelCanonical& c) {
    ObjectWord one{g.type};
    switch (c.kind) {
    case RelCanonical::Kind::Nil: {
        std::vector<DiagramPtr> units(static_cast<std::size_t>(c.arg),
                                      D::generator(th.sig, g.eta));
        return D::tensor_all(units);
    }
    case RelCanonical::Kind::Drop:
        return D::compose(
            D::tensor(D::generator(th.sig, g.eps),
                      D::identity(ObjectWord::repeated(g.type, c.sub->m))),
            flatten_rec(th, g, *c.sub));
    case RelCanonical::Kind::Link: {
        int m = c.sub->m, n = c.sub->n, i = c.arg;
        std::vector<DiagramPtr> stages;
        // Copy the first wire; keep one copy on top.
        stages.push_back(D::tensor(D::generator(th.sig, g.delta),
                                   D::identity(ObjectWord::repeated(g.type, m - 1))));
        // Run the rest of the term below the saved copy.
        stages.push_back(D::tensor(D::identity(one), flatten_rec(th, g, *c.sub)));
        // Walk the copy down to position i with a stair of swaps.
        for (int j = 0; j < i; ++j)
            stages.push_back(D::tensor_all(
                {D::identity(ObjectWord::repeated(g.type, j)),
                 D::generator(th.sig, g.gamma),
                 D::identity(ObjectWord::repeated(g.type, n + 1 - j - 2))}));
        // Merge it into output i.
        stages.push_back(D::tensor_all(
            {D::identity(ObjectWord::repeated(g.type, i)),
             D::generator(th.sig, g.mu),
             D::identity(ObjectWord::repeated(g.type, n - i - 1))}));
        return D::compose_all(stages);
    }
    }
    throw DomainError("unreachable canonical kind");
}

} // namespace

DiagramPtr flatten(const EquationalTheory& th, const RelCanonical& c) {
    return flatten_rec(th, bialg_sig(th), c);
}

bool decide_eq_B(const EquationalTheory& th, const Diagram& a, const Diagram& b) {
    if (!(a.src == b.src) || !(a.tgt == b.tgt)) return false;
    return eval_mrel(th, a) == eval_mrel(th, b);
}

bool decide_eq_R(const EquationalTheory& th, const Diagram& a, const Diagram& b) {
    if (!(a.src == b.src) || !(a.tgt == b.tgt)) return false;
    return eval_rel(th, a) == eval_rel(th, b);
}

} // namespace moncat
