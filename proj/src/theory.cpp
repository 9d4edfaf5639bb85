#include "moncat/theory.hpp"

#include "moncat/error.hpp"

namespace moncat {

void EquationalTheory::add_equation(const std::string& eq_name, DiagramPtr l, DiagramPtr r) {
    if (!(l->src == r->src) || !(l->tgt == r->tgt))
        throw TypeMismatchError("equation " + eq_name + " relates non-parallel diagrams");
    equations.push_back(Equation{eq_name, std::move(l), std::move(r)});
}

void validate_theory(const EquationalTheory& th) {
    for (const Equation& e : th.equations) {
        if (!e.lhs || !e.rhs)
            throw DomainError("equation " + e.name + " is missing a side");
        if (!(e.lhs->src == e.rhs->src) || !(e.lhs->tgt == e.rhs->tgt))
            throw TypeMismatchError("equation " + e.name + " relates non-parallel diagrams");
    }
}

namespace {

using D = Diagram;

// Generator bundle for one commutative-bialgebra structure on a single type.
struct BialgGens {
    int type;
    int mu, eta, delta, eps, gamma;
};

// Appends the monoid third of the bialgebra axioms.
void add_monoid_equations(EquationalTheory& th, int type, int mu, int eta,
                          const std::string& prefix) {
    const Signature& s = th.sig;
    DiagramPtr id1 = D::identity(ObjectWord{type});
    DiagramPtr m = D::generator(s, mu), u = D::generator(s, eta);
    th.add_equation(prefix + "assoc",
                    D::compose(D::tensor(m, id1), m),
                    D::compose(D::tensor(id1, m), m));
    th.add_equation(prefix + "unit-left", D::compose(D::tensor(u, id1), m), id1);
    th.add_equation(prefix + "unit-right", D::compose(D::tensor(id1, u), m), id1);
}

// Appends the comonoid third.
void add_comonoid_equations(EquationalTheory& th, int type, int delta, int eps,
                            const std::string& prefix) {
    const Signature& s = th.sig;
    DiagramPtr id1 = D::identity(ObjectWord{type});
    DiagramPtr d = D::generator(s, delta), c = D::generator(s, eps);
    th.add_equation(prefix + "coassoc",
                    D::compose(d, D::tensor(d, id1)),
                    D::compose(d, D::tensor(id1, d)));
    th.add_equation(prefix + "counit-left", D::compose(d, D::tensor(c, id1)), id1);
    th.add_equation(prefix + "counit-right", D::compose(d, D::tensor(id1, c)), id1);
}

// Appends the full 22-axiom commutative-bialgebra presentation (plus the
// absorption law when requested): monoid, comonoid, symmetry coherence and
// naturality, commutativity and cocommutativity, and the four
// bialgebra-compatibility squares.
void add_bialgebra_equations(EquationalTheory& th, const BialgGens& g, bool absorption,
                             const std::string& prefix) {
    const Signature& s = th.sig;
    DiagramPtr id1 = D::identity(ObjectWord{g.type});
    DiagramPtr id2 = D::identity(ObjectWord{g.type, g.type});
    DiagramPtr m = D::generator(s, g.mu), u = D::generator(s, g.eta);
    DiagramPtr d = D::generator(s, g.delta), c = D::generator(s, g.eps);
    DiagramPtr sw = D::generator(s, g.gamma);

    add_monoid_equations(th, g.type, g.mu, g.eta, prefix);
    th.add_equation(prefix + "comm", D::compose(sw, m), m);

    th.add_equation(prefix + "sym-invol", D::compose(sw, sw), id2);
    th.add_equation(prefix + "sym-hexagon",
                    D::compose_all({D::tensor(sw, id1), D::tensor(id1, sw), D::tensor(sw, id1)}),
                    D::compose_all({D::tensor(id1, sw), D::tensor(sw, id1), D::tensor(id1, sw)}));
    th.add_equation(prefix + "sym-nat-mult-left",
                    D::compose(D::tensor(m, id1), sw),
                    D::compose_all({D::tensor(id1, sw), D::tensor(sw, id1), D::tensor(id1, m)}));
    th.add_equation(prefix + "sym-nat-mult-right",
                    D::compose(D::tensor(id1, m), sw),
                    D::compose_all({D::tensor(sw, id1), D::tensor(id1, sw), D::tensor(m, id1)}));
    th.add_equation(prefix + "sym-nat-unit-left",
                    D::compose(D::tensor(u, id1), sw), D::tensor(id1, u));
    th.add_equation(prefix + "sym-nat-unit-right",
                    D::compose(D::tensor(id1, u), sw), D::tensor(u, id1));

    add_comonoid_equations(th, g.type, g.delta, g.eps, prefix);
    th.add_equation(prefix + "cocomm", D::compose(d, sw), d);

    th.add_equation(prefix + "sym-nat-comult-left",
                    D::compose(sw, D::tensor(d, id1)),
                    D::compose_all({D::tensor(id1, d), D::tensor(sw, id1), D::tensor(id1, sw)}));
    th.add_equation(prefix + "sym-nat-comult-right",
                    D::compose(sw, D::tensor(id1, d)),
                    D::compose_all({D::tensor(d, id1), D::tensor(id1, sw), D::tensor(sw, id1)}));
    th.add_equation(prefix + "sym-nat-counit-left",
                    D::compose(sw, D::tensor(c, id1)), D::tensor(id1, c));
    th.add_equation(prefix + "sym-nat-counit-right",
                    D::compose(sw, D::tensor(id1, c)), D::tensor(c, id1));

    th.add_equation(prefix + "bialg-mult-comult",
                    D::compose(m, d),
                    D::compose_all({D::tensor(d, d),
                                    D::tensor(D::tensor(id1, sw), id1),
                                    D::tensor(m, m)}));
    th.add_equation(prefix + "bialg-unit-counit",
                    D::compose(u, c), D::identity(ObjectWord{}));
    th.add_equation(prefix + "bialg-mult-counit", D::compose(m, c), D::tensor(c, c));
    th.add_equation(prefix + "bialg-unit-comult", D::compose(u, d), D::tensor(u, u));

    if (absorption)
        th.add_equation(prefix + "absorption", D::compose(d, m), id1);
}

EquationalTheory make_M() {
    EquationalTheory th;
    th.name = "M";
    int t = th.sig.add_type("1");
    int mu = th.sig.add_gen("mu", ObjectWord{t, t}, ObjectWord{t});
    int eta = th.sig.add_gen("eta", ObjectWord{}, ObjectWord{t});
    add_monoid_equations(th, t, mu, eta, "");
    return th;
}

EquationalTheory make_CoM() {
    EquationalTheory th;
    th.name = "CoM";
    int t = th.sig.add_type("1");
    int delta = th.sig.add_gen("delta", ObjectWord{t}, ObjectWord{t, t});
    int eps = th.sig.add_gen("eps", ObjectWord{t}, ObjectWord{});
    add_comonoid_equations(th, t, delta, eps, "");
    return th;
}

EquationalTheory make_B(bool absorption) {
    EquationalTheory th;
    th.name = absorption ? "R" : "B";
    int t = th.sig.add_type("1");
    BialgGens g;
    g.type = t;
    g.mu = th.sig.add_gen("mu", ObjectWord{t, t}, ObjectWord{t});
    g.eta = th.sig.add_gen("eta", ObjectWord{}, ObjectWord{t});
    g.delta = th.sig.add_gen("delta", ObjectWord{t}, ObjectWord{t, t});
    g.eps = th.sig.add_gen("eps", ObjectWord{t}, ObjectWord{});
    g.gamma = th.sig.add_gen("gamma", ObjectWord{t, t}, ObjectWord{t, t});
    add_bialgebra_equations(th, g, absorption, "");
    return th;
}

EquationalTheory make_D() {
    EquationalTheory th;
    th.name = "D";
    int L = th.sig.add_type("L");
    int R = th.sig.add_type("R");
    int eta = th.sig.add_gen("eta", ObjectWord{}, ObjectWord{R, L});
    int eps = th.sig.add_gen("eps", ObjectWord{L, R}, ObjectWord{});
    DiagramPtr idL = D::identity(ObjectWord{L});
    DiagramPtr idR = D::identity(ObjectWord{R});
    DiagramPtr u = D::generator(th.sig, eta), c = D::generator(th.sig, eps);
    th.add_equation("zigzag-left",
                    D::compose(D::tensor(idL, u), D::tensor(c, idL)), idL);
    th.add_equation("zigzag-right",
                    D::compose(D::tensor(u, idR), D::tensor(idR, c)), idR);
    return th;
}

// eta_m : I -> O^m P^m, nested pairs of the mixed unit.
DiagramPtr nested_eta(const Signature& s, int O, int P, int m) {
    if (m == 0) return D::identity(ObjectWord{});
    DiagramPtr inner = nested_eta(s, O, P, m - 1);
    DiagramPtr e1 = D::generator(s, s.gen_index("etaOP"));
    if (m == 1) return e1;
    return D::compose(e1, D::tensor(D::tensor(D::identity(ObjectWord{O}), inner),
                                    D::identity(ObjectWord{P})));
}

// eps_n : P^n O^n -> I, nested pairs of the mixed counit.
DiagramPtr nested_eps(const Signature& s, int O, int P, int n) {
    if (n == 0) return D::identity(ObjectWord{});
    DiagramPtr inner = nested_eps(s, O, P, n - 1);
    DiagramPtr e1 = D::generator(s, s.gen_index("epsOP"));
    if (n == 1) return e1;
    return D::compose(D::tensor(D::tensor(D::identity(ObjectWord{P}), inner),
                                D::identity(ObjectWord{O})),
                      e1);
}

// The adjoint mate of g : O^m -> O^n, a map P^n -> P^m.
DiagramPtr mate(const Signature& s, int O, int P, DiagramPtr g) {
    int m = g->src.size(), n = g->tgt.size();
    DiagramPtr idPn = D::identity(ObjectWord::repeated(P, n));
    DiagramPtr idPm = D::identity(ObjectWord::repeated(P, m));
    return D::compose_all({D::tensor(idPn, nested_eta(s, O, P, m)),
                           D::tensor(idPn, D::tensor(g, idPm)),
                           D::tensor(nested_eps(s, O, P, n), idPm)});
}

EquationalTheory make_G() {
    EquationalTheory th;
    th.name = "G";
    int O = th.sig.add_type("O");
    int P = th.sig.add_type("P");

    BialgGens go;
    go.type = O;
    go.mu = th.sig.add_gen("muO", ObjectWord{O, O}, ObjectWord{O});
    go.eta = th.sig.add_gen("etaO", ObjectWord{}, ObjectWord{O});
    go.delta = th.sig.add_gen("deltaO", ObjectWord{O}, ObjectWord{O, O});
    go.eps = th.sig.add_gen("epsO", ObjectWord{O}, ObjectWord{});
    go.gamma = th.sig.add_gen("gammaO", ObjectWord{O, O}, ObjectWord{O, O});
    th.sig.add_gen("muP", ObjectWord{P, P}, ObjectWord{P});
    th.sig.add_gen("etaP", ObjectWord{}, ObjectWord{P});
    th.sig.add_gen("deltaP", ObjectWord{P}, ObjectWord{P, P});
    th.sig.add_gen("epsP", ObjectWord{P}, ObjectWord{});
    th.sig.add_gen("gammaP", ObjectWord{P, P}, ObjectWord{P, P});
    th.sig.add_gen("etaOP", ObjectWord{}, ObjectWord{O, P});
    th.sig.add_gen("epsOP", ObjectWord{P, O}, ObjectWord{});
    th.sig.add_gen("gammaOP", ObjectWord{P, O}, ObjectWord{O, P});

    add_bialgebra_equations(th, go, true, "O-");

    const Signature& s = th.sig;
    auto gen = [&s](const char* n) { return D::generator(s, s.gen_index(n)); };
    th.add_equation("P-mult-mate", gen("muP"), mate(s, O, P, gen("deltaO")));
    th.add_equation("P-comult-mate", gen("deltaP"), mate(s, O, P, gen("muO")));
    th.add_equation("P-unit-mate", gen("etaP"), mate(s, O, P, gen("epsO")));
    th.add_equation("P-counit-mate", gen("epsP"), mate(s, O, P, gen("etaO")));
    th.add_equation("P-sym-mate", gen("gammaP"), mate(s, O, P, gen("gammaO")));

    DiagramPtr idP = D::identity(ObjectWord{P});
    DiagramPtr idPO = D::identity(ObjectWord{P, O});
    DiagramPtr idOP = D::identity(ObjectWord{O, P});
    th.add_equation("mixed-sym-mate",
                    gen("gammaOP"),
                    D::compose_all({D::tensor(idPO, gen("etaOP")),
                                    D::tensor(D::tensor(idP, gen("gammaO")), idP),
                                    D::tensor(gen("epsOP"), idOP)}));
    return th;
}

} // namespace

bool is_builtin_theory_name(const std::string& name) {
    return name == "M" || name == "CoM" || name == "B" || name == "R" ||
           name == "D" || name == "G";
}

EquationalTheory builtin_theory(const std::string& name) {
    if (name == "M") return make_M();
    if (name == "CoM") return make_CoM();
    if (name == "B") return make_B(false);
    if (name == "R") return make_B(true);
    if (name == "D") return make_D();
    if (name == "G") return make_G();
    throw DomainError("unknown built-in theory: " + name);
}

} // namespace moncat
