#include "moncat/multirel.hpp"

#include <limits>

#include "moncat/error.hpp"

namespace moncat {

std::uint64_t checked_add(std::uint64_t x, std::uint64_t y) {
    if (x > std::numeric_limits<std::uint64_t>::max() - y)
        throw ArithmeticOverflowError("addition overflow in multirelation arithmetic");
    return x + y;
}

std::uint64_t checked_mul(std::uint64_t x, std::uint64_t y) {
    if (x != 0 && y > std::numeric_limits<std::uint64_t>::max() / x)
        throw ArithmeticOverflowError("multiplication overflow in multirelation arithmetic");
    return x * y;
}

Multirelation mr_identity(int m) {
    Multirelation r(m, m);
    for (int i = 0; i < m; ++i) r.at(i, i) = 1;
    return r;
}

Multirelation mr_compose(const Multirelation& f, const Multirelation& g) {
    if (f.n != g.m) throw TypeMismatchError("multirelation composition mismatch");
    Multirelation r(f.m, g.n);
    for (int i = 0; i < f.m; ++i)
        for (int j = 0; j < f.n; ++j) {
            std::uint64_t fij = f.at(i, j);
            if (fij == 0) continue;
            for (int k = 0; k < g.n; ++k)
                r.at(i, k) = checked_add(r.at(i, k), checked_mul(fij, g.at(j, k)));
        }
    return r;
}

Multirelation mr_tensor(const Multirelation& f, const Multirelation& g) {
    Multirelation r(f.m + g.m, f.n + g.n);
    for (int i = 0; i < f.m; ++i)
        for (int j = 0; j < f.n; ++j) r.at(i, j) = f.at(i, j);
    for (int i = 0; i < g.m; ++i)
        for (int j = 0; j < g.n; ++j) r.at(f.m + i, f.n + j) = g.at(i, j);
    return r;
}

std::uint64_t mr_cardinal(const Multirelation& r) {
    std::uint64_t total = 0;
    for (std::uint64_t v : r.a) total = checked_add(total, v);
    return total;
}

Relation rel_identity(int m) {
    Relation r(m, m);
    for (int i = 0; i < m; ++i) r.at(i, i) = 1;
    return r;
}

Relation rel_compose(const Relation& f, const Relation& g) {
    if (f.n != g.m) throw TypeMismatchError("relation composition mismatch");
    Relation r(f.m, g.n);
    for (int i = 0; i < f.m; ++i)
        for (int j = 0; j < f.n; ++j) {
            if (!f.at(i, j)) continue;
            for (int k = 0; k < g.n; ++k)
                if (g.at(j, k)) r.at(i, k) = 1;
        }
    return r;
}

Relation rel_tensor(const Relation& f, const Relation& g) {
    Relation r(f.m + g.m, f.n + g.n);
    for (int i = 0; i < f.m; ++i)
        for (int j = 0; j < f.n; ++j) r.at(i, j) = f.at(i, j);
    for (int i = 0; i < g.m; ++i)
        for (int j = 0; j < g.n; ++j) r.at(f.m + i, f.n + j) = g.at(i, j);
    return r;
}

Relation booleanize(const Multirelation& r) {
    Relation b(r.m, r.n);
    for (int i = 0; i < r.m; ++i)
        for (int j = 0; j < r.n; ++j) b.at(i, j) = r.at(i, j) > 0 ? 1 : 0;
    return b;
}

namespace {

// Shared generator table for the bialgebra signature. Returns false if the
// generator is not one of mu/eta/delta/eps/gamma with the expected arities.
bool bialgebra_matrix(const std::string& name, int m, int n, Multirelation& out) {
    if (name == "mu" && m == 2 && n == 1) {
        out = Multirelation(2, 1);
        out.at(0, 0) = 1;
        out.at(1, 0) = 1;
        return true;
    }
    if (name == "eta" && m == 0 && n == 1) {
        out = Multirelation(0, 1);
        return true;
    }
    if (name == "delta" && m == 1 && n == 2) {
        out = Multirelation(1, 2);
        out.at(0, 0) = 1;
        out.at(0, 1) = 1;
        return true;
    }
    if (name == "eps" && m == 1 && n == 0) {
        out = Multirelation(1, 0);
        return true;
    }
    if (name == "gamma" && m == 2 && n == 2) {
        out = Multirelation(2, 2);
        out.at(0, 1) = 1;
        out.at(1, 0) = 1;
        return true;
    }
    return false;
}

} // namespace

Multirelation eval_mrel(const EquationalTheory& th, const Diagram& d) {
    switch (d.kind) {
    case DiagramKind::Identity:
        return mr_identity(d.src.size());
    case DiagramKind::Generator: {
        Multirelation r;
        const std::string& name = th.sig.gen(d.gen).name;
        if (!bialgebra_matrix(name, d.src.size(), d.tgt.size(), r))
            throw DomainError("generator '" + name + "' has no multirelation interpretation");
        return r;
    }
    case DiagramKind::Composite:
        return mr_compose(eval_mrel(th, *d.lhs), eval_mrel(th, *d.rhs));
    case DiagramKind::TensorBlock:
        return mr_tensor(eval_mrel(th, *d.lhs), eval_mrel(th, *d.rhs));
    }
    throw DomainError("unreachable diagram kind");
}

Relation eval_rel(const EquationalTheory& th, const Diagram& d) {
    switch (d.kind) {
    case DiagramKind::Identity:
        return rel_identity(d.src.size());
    case DiagramKind::Generator: {
        Multirelation r;
        const std::string& name = th.sig.gen(d.gen).name;
        if (!bialgebra_matrix(name, d.src.size(), d.tgt.size(), r))
            throw DomainError("generator '" + name + "' has no relational interpretation");
        return booleanize(r);
    }
    case DiagramKind::Composite:
        return rel_compose(eval_rel(th, *d.lhs), eval_rel(th, *d.rhs));
    case DiagramKind::TensorBlock:
        return rel_tensor(eval_rel(th, *d.lhs), eval_rel(th, *d.rhs));
    }
    throw DomainError("unreachable diagram kind");
}

} // namespace moncat
