#include "moncat/monotone.hpp"

#include "moncat/error.hpp"

namespace moncat {

void MonotoneMap::validate() const {
    if (m < 0 || n < 0 || static_cast<int>(table.size()) != m)
        throw DomainError("monotone map has a malformed table");
    for (int i = 0; i < m; ++i) {
        if (table[static_cast<std::size_t>(i)] < 0 || table[static_cast<std::size_t>(i)] >= n)
            throw DomainError("monotone map value out of range");
        if (i > 0 && table[static_cast<std::size_t>(i - 1)] > table[static_cast<std::size_t>(i)])
            throw DomainError("map table is not monotone");
    }
}

MonotoneMap mm_identity(int m) {
    MonotoneMap f;
    f.m = f.n = m;
    f.table.resize(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) f.table[static_cast<std::size_t>(i)] = i;
    return f;
}

MonotoneMap mm_compose(const MonotoneMap& f, const MonotoneMap& g) {
    if (f.n != g.m) throw TypeMismatchError("monotone map composition mismatch");
    MonotoneMap h;
    h.m = f.m;
    h.n = g.n;
    h.table.resize(static_cast<std::size_t>(f.m));
    for (int i = 0; i < f.m; ++i)
        h.table[static_cast<std::size_t>(i)] =
            g.table[static_cast<std::size_t>(f.table[static_cast<std::size_t>(i)])];
    return h;
}

MonotoneMap mm_tensor(const MonotoneMap& f, const MonotoneMap& g) {
    MonotoneMap h;
    h.m = f.m + g.m;
    h.n = f.n + g.n;
    h.table = f.table;
    for (int v : g.table) h.table.push_back(v + f.n);
    return h;
}

MonotoneMap eval_monoid(const EquationalTheory& th, const Diagram& d) {
    switch (d.kind) {
    case DiagramKind::Identity:
        return mm_identity(d.src.size());
    case DiagramKind::Generator: {
        const std::string& name = th.sig.gen(d.gen).name;
        if (name == "mu" && d.src.size() == 2 && d.tgt.size() == 1)
            return MonotoneMap{2, 1, {0, 0}};
        if (name == "eta" && d.src.size() == 0 && d.tgt.size() == 1)
            return MonotoneMap{0, 1, {}};
        throw DomainError("generator '" + name + "' has no ordinal interpretation");
    }
    case DiagramKind::Composite:
        return mm_compose(eval_monoid(th, *d.lhs), eval_monoid(th, *d.rhs));
    case DiagramKind::TensorBlock:
        return mm_tensor(eval_monoid(th, *d.lhs), eval_monoid(th, *d.rhs));
    }
    throw DomainError("unreachable diagram kind");
}

} // namespace moncat
