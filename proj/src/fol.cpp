#include "moncat/fol.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "moncat/error.hpp"

namespace moncat {

namespace {

FormulaPtr make_formula(Formula f) { return std::make_shared<const Formula>(std::move(f)); }

[[noreturn]] void proof_fail(const std::string& msg) { throw ProofError(msg); }

} // namespace

FormulaPtr Formula::atom(std::string pred, std::vector<Term> args) {
    return make_formula(Formula{Kind::Atom, std::move(pred), std::move(args), nullptr});
}

FormulaPtr Formula::forall(std::string var, FormulaPtr body) {
    if (!body) throw DomainError("forall: missing body");
    return make_formula(Formula{Kind::Forall, std::move(var), {}, std::move(body)});
}

FormulaPtr Formula::exists(std::string var, FormulaPtr body) {
    if (!body) throw DomainError("exists: missing body");
    return make_formula(Formula{Kind::Exists, std::move(var), {}, std::move(body)});
}

ProofPtr Proof::ax() { return std::make_shared<const Proof>(Proof{Rule::Ax, {}, {}, nullptr, nullptr, nullptr}); }

ProofPtr Proof::cut(FormulaPtr mid, ProofPtr left, ProofPtr right) {
    if (!mid || !left || !right) throw DomainError("cut: missing component");
    return std::make_shared<const Proof>(
        Proof{Rule::Cut, {}, {}, std::move(mid), std::move(left), std::move(right)});
}

ProofPtr Proof::all_l(Term witness, ProofPtr sub) {
    if (!sub) throw DomainError("all_l: missing subproof");
    return std::make_shared<const Proof>(
        Proof{Rule::AllL, std::move(witness), {}, nullptr, std::move(sub), nullptr});
}

ProofPtr Proof::all_r(std::string var, ProofPtr sub) {
    if (!sub) throw DomainError("all_r: missing subproof");
    return std::make_shared<const Proof>(
        Proof{Rule::AllR, {}, std::move(var), nullptr, std::move(sub), nullptr});
}

ProofPtr Proof::ex_l(std::string var, ProofPtr sub) {
    if (!sub) throw DomainError("ex_l: missing subproof");
    return std::make_shared<const Proof>(
        Proof{Rule::ExL, {}, std::move(var), nullptr, std::move(sub), nullptr});
}

ProofPtr Proof::ex_r(Term witness, ProofPtr sub) {
    if (!sub) throw DomainError("ex_r: missing subproof");
    return std::make_shared<const Proof>(
        Proof{Rule::ExR, std::move(witness), {}, nullptr, std::move(sub), nullptr});
}

// ---- free variables, substitution, alpha equivalence ----

namespace {

void collect_fv(const Term& t, std::set<std::string>& out) {
    if (!t.is_app) {
        out.insert(t.head);
        return;
    }
    for (const Term& a : t.args) collect_fv(a, out);
}

void collect_fv(const Formula& f, std::set<std::string>& out) {
    switch (f.kind) {
    case Formula::Kind::Atom:
        for (const Term& a : f.args) collect_fv(a, out);
        return;
    case Formula::Kind::Forall:
    case Formula::Kind::Exists: {
        std::set<std::string> inner;
        collect_fv(*f.body, inner);
        inner.erase(f.name);
        out.insert(inner.begin(), inner.end());
        return;
    }
    }
}

Term subst_term(const Term& s, const std::string& x, const Term& t) {
    if (!s.is_app) return s.head == x ? t : s;
    std::vector<Term> args;
    args.reserve(s.args.size());
    for (const Term& a : s.args) args.push_back(subst_term(a, x, t));
    return Term::app(s.head, std::move(args));
}

std::string fresh_name(const std::string& base, const std::set<std::string>& avoid) {
    std::string cand = base;
    int i = 0;
    while (avoid.count(cand) != 0) cand = base + "_" + std::to_string(i++);
    return cand;
}

} // namespace

std::set<std::string> free_vars(const Term& t) {
    std::set<std::string> out;
    collect_fv(t, out);
    return out;
}

std::set<std::string> free_vars(const Formula& f) {
    std::set<std::string> out;
    collect_fv(f, out);
    return out;
}

FormulaPtr substitute(const Formula& f, const std::string& x, const Term& t) {
    switch (f.kind) {
    case Formula::Kind::Atom: {
        std::vector<Term> args;
        args.reserve(f.args.size());
        for (const Term& a : f.args) args.push_back(subst_term(a, x, t));
        return Formula::atom(f.name, std::move(args));
    }
    case Formula::Kind::Forall:
    case Formula::Kind::Exists: {
        const bool is_all = f.kind == Formula::Kind::Forall;
        if (f.name == x) return make_formula(f); // x is shadowed here
        std::set<std::string> fv_t = free_vars(t);
        std::string bound = f.name;
        FormulaPtr body = f.body;
        if (fv_t.count(bound) != 0) {
            // The binder would capture a variable of t; rename it first.
            std::set<std::string> avoid = fv_t;
            collect_fv(*f.body, avoid);
            avoid.insert(x);
            std::string renamed = fresh_name(bound, avoid);
            body = substitute(*body, bound, Term::var(renamed));
            bound = renamed;
        }
        FormulaPtr new_body = substitute(*body, x, t);
        return is_all ? Formula::forall(bound, std::move(new_body))
                      : Formula::exists(bound, std::move(new_body));
    }
    }
    throw DomainError("substitute: unreachable");
}

namespace {

bool alpha_term(const Term& a, const Term& b, const std::map<std::string, std::string>& la,
                const std::map<std::string, std::string>& lb) {
    if (a.is_app != b.is_app) return false;
    if (a.is_app) {
        if (a.head != b.head || a.args.size() != b.args.size()) return false;
        for (std::size_t i = 0; i < a.args.size(); ++i)
            if (!alpha_term(a.args[i], b.args[i], la, lb)) return false;
        return true;
    }
    auto ia = la.find(a.head);
    auto ib = lb.find(b.head);
    if ((ia != la.end()) != (ib != lb.end())) return false;
    if (ia != la.end()) return ia->second == ib->second;
    return a.head == b.head;
}

bool alpha_rec(const Formula& a, const Formula& b, std::map<std::string, std::string>& la,
               std::map<std::string, std::string>& lb, int depth) {
    if (a.kind != b.kind) return false;
    if (a.kind == Formula::Kind::Atom) {
        if (a.name != b.name || a.args.size() != b.args.size()) return false;
        for (std::size_t i = 0; i < a.args.size(); ++i)
            if (!alpha_term(a.args[i], b.args[i], la, lb)) return false;
        return true;
    }
    const std::string tag = "#" + std::to_string(depth);
    auto sa = la.find(a.name);
    auto sb = lb.find(b.name);
    std::string olda = sa != la.end() ? sa->second : std::string();
    std::string oldb = sb != lb.end() ? sb->second : std::string();
    bool hada = sa != la.end(), hadb = sb != lb.end();
    la[a.name] = tag;
    lb[b.name] = tag;
    bool ok = alpha_rec(*a.body, *b.body, la, lb, depth + 1);
    if (hada) la[a.name] = olda; else la.erase(a.name);
    if (hadb) lb[b.name] = oldb; else lb.erase(b.name);
    return ok;
}

} // namespace

bool alpha_equal(const Formula& a, const Formula& b) {
    std::map<std::string, std::string> la, lb;
    return alpha_rec(a, b, la, lb, 0);
}

// ---- printing ----

std::string term_to_string(const Term& t) {
    if (!t.is_app) return t.head;
    std::string out = t.head + "(";
    for (std::size_t i = 0; i < t.args.size(); ++i) {
        if (i) out += ", ";
        out += term_to_string(t.args[i]);
    }
    return out + ")";
}

std::string formula_to_string(const Formula& f) {
    switch (f.kind) {
    case Formula::Kind::Atom: {
        std::string out = f.name;
        if (!f.args.empty()) {
            out += "(";
            for (std::size_t i = 0; i < f.args.size(); ++i) {
                if (i) out += ", ";
                out += term_to_string(f.args[i]);
            }
            out += ")";
        }
        return out;
    }
    case Formula::Kind::Forall:
        return "forall " + f.name + ". " + formula_to_string(*f.body);
    case Formula::Kind::Exists:
        return "exists " + f.name + ". " + formula_to_string(*f.body);
    }
    throw DomainError("formula_to_string: unreachable");
}

namespace {

std::string sterm_to_string(const Term& t) {
    if (!t.is_app) return t.head;
    std::string out = "(" + t.head;
    for (const Term& a : t.args) out += " " + sterm_to_string(a);
    return out + ")";
}

} // namespace

std::string proof_to_string(const Proof& p) {
    switch (p.rule) {
    case Proof::Rule::Ax:
        return "(Ax)";
    case Proof::Rule::Cut:
        return "(Cut {" + formula_to_string(*p.cut_formula) + "} " + proof_to_string(*p.sub1) +
               " " + proof_to_string(*p.sub2) + ")";
    case Proof::Rule::AllL:
        return "(AllL " + sterm_to_string(p.witness) + " " + proof_to_string(*p.sub1) + ")";
    case Proof::Rule::AllR:
        return "(AllR " + p.var + " " + proof_to_string(*p.sub1) + ")";
    case Proof::Rule::ExL:
        return "(ExL " + p.var + " " + proof_to_string(*p.sub1) + ")";
    case Proof::Rule::ExR:
        return "(ExR " + sterm_to_string(p.witness) + " " + proof_to_string(*p.sub1) + ")";
    }
    throw DomainError("proof_to_string: unreachable");
}

// ---- proof checking ----

namespace {

bool syntactic_equal_term(const Term& a, const Term& b) { return a == b; }

bool syntactic_equal_atom(const Formula& a, const Formula& b) {
    if (a.kind != Formula::Kind::Atom || b.kind != Formula::Kind::Atom) return false;
    if (a.name != b.name || a.args.size() != b.args.size()) return false;
    for (std::size_t i = 0; i < a.args.size(); ++i)
        if (!syntactic_equal_term(a.args[i], b.args[i])) return false;
    return true;
}

} // namespace

void check_proof(const Formula& left, const Formula& right, const Proof& p) {
    switch (p.rule) {
    case Proof::Rule::Ax:
        if (!syntactic_equal_atom(left, right))
            proof_fail("Ax: sides are not the same atom: " + formula_to_string(left) + " vs " +
                       formula_to_string(right));
        return;
    case Proof::Rule::Cut:
        check_proof(left, *p.cut_formula, *p.sub1);
        check_proof(*p.cut_formula, right, *p.sub2);
        return;
    case Proof::Rule::AllL: {
        if (left.kind != Formula::Kind::Forall)
            proof_fail("AllL: left formula is not universal: " + formula_to_string(left));
        FormulaPtr inst = substitute(*left.body, left.name, p.witness);
        check_proof(*inst, right, *p.sub1);
        return;
    }
    case Proof::Rule::AllR: {
        if (right.kind != Formula::Kind::Forall)
            proof_fail("AllR: right formula is not universal: " + formula_to_string(right));
        if (free_vars(left).count(p.var) != 0 || free_vars(right).count(p.var) != 0)
            proof_fail("AllR: eigenvariable " + p.var + " occurs free in the sequent");
        FormulaPtr inst = substitute(*right.body, right.name, Term::var(p.var));
        check_proof(left, *inst, *p.sub1);
        return;
    }
    case Proof::Rule::ExL: {
        if (left.kind != Formula::Kind::Exists)
            proof_fail("ExL: left formula is not existential: " + formula_to_string(left));
        if (free_vars(left).count(p.var) != 0 || free_vars(right).count(p.var) != 0)
            proof_fail("ExL: eigenvariable " + p.var + " occurs free in the sequent");
        FormulaPtr inst = substitute(*left.body, left.name, Term::var(p.var));
        check_proof(*inst, right, *p.sub1);
        return;
    }
    case Proof::Rule::ExR: {
        if (right.kind != Formula::Kind::Exists)
            proof_fail("ExR: right formula is not existential: " + formula_to_string(right));
        FormulaPtr inst = substitute(*right.body, right.name, p.witness);
        check_proof(left, *inst, *p.sub1);
        return;
    }
    }
    throw DomainError("check_proof: unreachable");
}

bool is_valid_proof(const Formula& left, const Formula& right, const Proof& p) {
    try {
        check_proof(left, right, p);
        return true;
    } catch (const ProofError&) {
        return false;
    }
}

// ---- game interpretation ----

Game interpret_formula(const Formula& f) {
    std::vector<std::int8_t> pols;
    const Formula* cur = &f;
    while (cur->kind != Formula::Kind::Atom) {
        pols.push_back(cur->kind == Formula::Kind::Forall ? std::int8_t{-1} : std::int8_t{1});
        cur = cur->body.get();
    }
    return game_filiform(pols);
}

namespace {

struct InterpretWalk {
    std::vector<std::pair<int, int>> links;
    std::vector<int> order;
    bool saw_cut = false;

    // Walks a checked proof. base_src / base_tgt are the ambient move indices
    // of the outermost remaining quantifier on each side; scope maps each
    // in-scope eigenvariable to the move that introduced it. Witnesses inside
    // a cut's subproofs are interpreted against their own sub-sequent only,
    // so links never cross a cut boundary except through composition.
    void walk(const Formula& left, const Formula& right, const Proof& p,
              std::map<std::string, int> scope, int base_src, int base_tgt) {
        switch (p.rule) {
        case Proof::Rule::Ax:
            return;
        case Proof::Rule::Cut: {
            saw_cut = true;
            ProofInterpretation a = interpret_proof(left, *p.cut_formula, *p.sub1);
            ProofInterpretation b = interpret_proof(*p.cut_formula, right, *p.sub2);
            Strategy composed = compose_strategies(a.strategy, b.strategy);
            const int sub_src = composed.src.size();
            for (auto [i, j] : strategy_links(composed)) {
                auto embed = [&](int idx) {
                    return idx < sub_src ? base_src + idx : base_tgt + (idx - sub_src);
                };
                links.emplace_back(embed(i), embed(j));
            }
            return;
        }
        case Proof::Rule::AllL: {
            const int move = base_src;
            order.push_back(move);
            for (const std::string& v : free_vars(p.witness)) {
                auto it = scope.find(v);
                if (it != scope.end()) links.emplace_back(it->second, move);
            }
            FormulaPtr inst = substitute(*left.body, left.name, p.witness);
            walk(*inst, right, *p.sub1, std::move(scope), base_src + 1, base_tgt);
            return;
        }
        case Proof::Rule::AllR: {
            const int move = base_tgt;
            order.push_back(move);
            scope[p.var] = move;
            FormulaPtr inst = substitute(*right.body, right.name, Term::var(p.var));
            walk(left, *inst, *p.sub1, std::move(scope), base_src, base_tgt + 1);
            return;
        }
        case Proof::Rule::ExL: {
            const int move = base_src;
            order.push_back(move);
            scope[p.var] = move;
            FormulaPtr inst = substitute(*left.body, left.name, Term::var(p.var));
            walk(*inst, right, *p.sub1, std::move(scope), base_src + 1, base_tgt);
            return;
        }
        case Proof::Rule::ExR: {
            const int move = base_tgt;
            order.push_back(move);
            for (const std::string& v : free_vars(p.witness)) {
                auto it = scope.find(v);
                if (it != scope.end()) links.emplace_back(it->second, move);
            }
            FormulaPtr inst = substitute(*right.body, right.name, p.witness);
            walk(left, *inst, *p.sub1, std::move(scope), base_src, base_tgt + 1);
            return;
        }
        }
        throw DomainError("interpret_proof: unreachable");
    }
};

} // namespace

ProofInterpretation interpret_proof(const Formula& left, const Formula& right, const Proof& p) {
    check_proof(left, right, p);
    Game src = interpret_formula(left);
    Game tgt = interpret_formula(right);
    InterpretWalk w;
    w.walk(left, right, p, {}, 0, src.size());
    ProofInterpretation out{make_strategy(std::move(src), std::move(tgt), w.links),
                            std::move(w.order), !w.saw_cut};
    if (!out.has_intro_order) out.intro_order.clear();
    validate_strategy(out.strategy);
    return out;
}

Strategy interpret_cut(const Strategy& s, const Strategy& t) { return compose_strategies(s, t); }

// ---- synthesis ----

namespace {

bool is_filiform(const Game& g) {
    for (int i = 0; i < g.size(); ++i)
        for (int j = 0; j < g.size(); ++j)
            if (g.before(i, j) != (i < j)) return false;
    return true;
}

} // namespace

SynthesisResult synthesize_proof(const Strategy& s) {
    if (!is_filiform(s.src) || !is_filiform(s.tgt))
        throw DomainError("synthesize_proof: both games must be total orders of moves");
    validate_strategy(s);
    const int a = s.src.size();
    const int b = s.tgt.size();
    const int total = a + b;

    auto var_name = [&](int move) {
        return move < a ? "x" + std::to_string(move) : "y" + std::to_string(move - a);
    };

    // Formulas: the quantifier prefixes spell the two chains over a shared
    // nullary atom, so every eigenvariable choice below is automatically
    // fresh and substitution never touches the formulas.
    FormulaPtr left = Formula::atom("p");
    for (int i = a - 1; i >= 0; --i)
        left = s.src.pol[static_cast<std::size_t>(i)] < 0 ? Formula::forall(var_name(i), left)
                                                          : Formula::exists(var_name(i), left);
    FormulaPtr right = Formula::atom("p");
    for (int j = b - 1; j >= 0; --j)
        right = s.tgt.pol[static_cast<std::size_t>(j)] < 0 ? Formula::forall(var_name(a + j), right)
                                                           : Formula::exists(var_name(a + j), right);

    std::vector<std::vector<int>> in_links(static_cast<std::size_t>(total));
    for (auto [i, j] : strategy_links(s)) in_links[static_cast<std::size_t>(j)].push_back(i);
    for (auto& v : in_links) std::sort(v.begin(), v.end());

    // Linearize the rules: each side is introduced outside-in, a positive
    // move waits for its justifiers, and the right side goes first whenever
    // it is ready. Validity of s guarantees progress.
    std::vector<bool> done(static_cast<std::size_t>(total), false);
    auto ready = [&](int move) {
        for (int j : in_links[static_cast<std::size_t>(move)])
            if (!done[static_cast<std::size_t>(j)]) return false;
        return true;
    };
    std::vector<int> rule_order;
    int next_src = 0, next_tgt = 0;
    while (next_src < a || next_tgt < b) {
        int move;
        if (next_tgt < b && ready(a + next_tgt)) {
            move = a + next_tgt++;
        } else if (next_src < a && ready(next_src)) {
            move = next_src++;
        } else {
            throw InvalidStrategyError("synthesize_proof: no introducible move (cyclic links)");
        }
        done[static_cast<std::size_t>(move)] = true;
        rule_order.push_back(move);
    }

    ProofPtr proof = Proof::ax();
    for (auto it = rule_order.rbegin(); it != rule_order.rend(); ++it) {
        const int move = *it;
        const bool on_left = move < a;
        const std::int8_t pol = on_left ? s.src.pol[static_cast<std::size_t>(move)]
                                        : s.tgt.pol[static_cast<std::size_t>(move - a)];
        const bool positive_move = on_left ? pol < 0 : pol > 0; // ambient proponent move
        if (positive_move) {
            std::vector<Term> args;
            for (int j : in_links[static_cast<std::size_t>(move)])
                args.push_back(Term::var(var_name(j)));
            Term w = Term::app("w" + std::to_string(move), std::move(args));
            proof = on_left ? Proof::all_l(std::move(w), std::move(proof))
                            : Proof::ex_r(std::move(w), std::move(proof));
        } else {
            proof = on_left ? Proof::ex_l(var_name(move), std::move(proof))
                            : Proof::all_r(var_name(move), std::move(proof));
        }
    }
    return SynthesisResult{std::move(left), std::move(right), std::move(proof)};
}

// ---- parsing ----

namespace {

struct Cursor {
    const std::string& text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size()) {
            if (std::isspace(static_cast<unsigned char>(text[pos]))) {
                ++pos;
            } else if (text[pos] == '#') {
                while (pos < text.size() && text[pos] != '\n') ++pos;
            } else {
                break;
            }
        }
    }

    bool at_end() {
        skip_ws();
        return pos >= text.size();
    }

    char peek() {
        skip_ws();
        if (pos >= text.size()) throw ParseError("unexpected end of input");
        return text[pos];
    }

    void expect(char c) {
        if (peek() != c)
            throw ParseError(std::string("expected '") + c + "', found '" + text[pos] + "'");
        ++pos;
    }

    bool accept(char c) {
        if (at_end() || text[pos] != c) return false;
        ++pos;
        return true;
    }

    static bool name_char(char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
    }

    std::string name() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && name_char(text[pos])) ++pos;
        if (pos == start) throw ParseError("expected a name at position " + std::to_string(pos));
        return text.substr(start, pos - start);
    }
};

Term parse_term_infix(Cursor& c) {
    std::string head = c.name();
    if (head == "forall" || head == "exists")
        throw ParseError("'" + head + "' cannot be used as a term");
    if (!c.at_end() && c.accept('(')) {
        std::vector<Term> args;
        if (!c.accept(')')) {
            args.push_back(parse_term_infix(c));
            while (c.accept(',')) args.push_back(parse_term_infix(c));
            c.expect(')');
        }
        return Term::app(std::move(head), std::move(args));
    }
    return Term::var(std::move(head));
}

FormulaPtr parse_formula_at(Cursor& c) {
    std::string head = c.name();
    if (head == "forall" || head == "exists") {
        std::string var = c.name();
        if (var == "forall" || var == "exists")
            throw ParseError("'" + var + "' cannot be used as a variable");
        c.expect('.');
        FormulaPtr body = parse_formula_at(c);
        return head == "forall" ? Formula::forall(std::move(var), std::move(body))
                                : Formula::exists(std::move(var), std::move(body));
    }
    std::vector<Term> args;
    if (!c.at_end() && c.accept('(')) {
        if (!c.accept(')')) {
            args.push_back(parse_term_infix(c));
            while (c.accept(',')) args.push_back(parse_term_infix(c));
            c.expect(')');
        }
    }
    return Formula::atom(std::move(head), std::move(args));
}

Term parse_sterm(Cursor& c) {
    if (c.peek() == '(') {
        c.expect('(');
        std::string head = c.name();
        std::vector<Term> args;
        while (c.peek() != ')') args.push_back(parse_sterm(c));
        c.expect(')');
        return Term::app(std::move(head), std::move(args));
    }
    return Term::var(c.name());
}

ProofPtr parse_proof_at(Cursor& c) {
    c.expect('(');
    std::string rule = c.name();
    ProofPtr out;
    if (rule == "Ax") {
        out = Proof::ax();
    } else if (rule == "Cut") {
        c.expect('{');
        std::size_t start = c.pos;
        while (c.pos < c.text.size() && c.text[c.pos] != '}') ++c.pos;
        if (c.pos >= c.text.size()) throw ParseError("Cut: unterminated '{'");
        std::string inner = c.text.substr(start, c.pos - start);
        ++c.pos; // consume '}'
        FormulaPtr mid = parse_formula(inner);
        ProofPtr p1 = parse_proof_at(c);
        ProofPtr p2 = parse_proof_at(c);
        out = Proof::cut(std::move(mid), std::move(p1), std::move(p2));
    } else if (rule == "AllL") {
        Term w = parse_sterm(c);
        out = Proof::all_l(std::move(w), parse_proof_at(c));
    } else if (rule == "AllR") {
        std::string v = c.name();
        out = Proof::all_r(std::move(v), parse_proof_at(c));
    } else if (rule == "ExL") {
        std::string v = c.name();
        out = Proof::ex_l(std::move(v), parse_proof_at(c));
    } else if (rule == "ExR") {
        Term w = parse_sterm(c);
        out = Proof::ex_r(std::move(w), parse_proof_at(c));
    } else {
        throw ParseError("unknown proof rule '" + rule + "'");
    }
    c.expect(')');
    return out;
}

} // namespace

FormulaPtr parse_formula(const std::string& text) {
    Cursor c{text};
    FormulaPtr f = parse_formula_at(c);
    if (!c.at_end()) throw ParseError("trailing input after formula: '" + text.substr(c.pos) + "'");
    return f;
}

ProofPtr parse_proof(const std::string& text) {
    Cursor c{text};
    ProofPtr p = parse_proof_at(c);
    if (!c.at_end()) throw ParseError("trailing input after proof: '" + text.substr(c.pos) + "'");
    return p;
}

ProofFile parse_proof_file(const std::string& text) {
    std::map<std::string, std::string> sections;
    std::string current;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        bool labeled = false;
        for (const char* label : {"left:", "right:", "proof:"}) {
            std::string l = label;
            if (line.compare(first, l.size(), l) == 0) {
                current = l.substr(0, l.size() - 1);
                if (sections.count(current) != 0)
                    throw ParseError("duplicate section '" + current + "'");
                sections[current] = line.substr(first + l.size());
                labeled = true;
                break;
            }
        }
        if (labeled) continue;
        if (current.empty())
            throw ParseError("proof file must start with a 'left:', 'right:' or 'proof:' line");
        sections[current] += "\n" + line;
    }
    for (const char* required : {"left", "right", "proof"})
        if (sections.count(required) == 0)
            throw ParseError(std::string("proof file is missing the '") + required + ":' section");
    return ProofFile{parse_formula(sections["left"]), parse_formula(sections["right"]),
                     parse_proof(sections["proof"])};
}

std::string proof_file_to_string(const Formula& left, const Formula& right, const Proof& p) {
    return "left: " + formula_to_string(left) + "\nright: " + formula_to_string(right) +
           "\nproof: " + proof_to_string(p) + "\n";
}

} // namespace moncat
