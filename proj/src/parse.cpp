#include "moncat/parse.hpp"

#include <cctype>
#include <sstream>
#include <vector>

#include "moncat/error.hpp"

namespace moncat {

namespace {

bool is_name_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

struct Tokenizer {
    std::vector<std::string> toks;
    std::size_t pos = 0;

    explicit Tokenizer(const std::string& text) {
        std::size_t i = 0;
        while (i < text.size()) {
            char c = text[i];
            if (c == '#') {
                while (i < text.size() && text[i] != '\n') ++i;
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                ++i;
            } else if (is_name_char(c)) {
                std::size_t j = i;
                while (j < text.size() && is_name_char(text[j])) ++j;
                toks.push_back(text.substr(i, j - i));
                i = j;
            } else if (c == '-' && i + 1 < text.size() && text[i + 1] == '>') {
                toks.push_back("->");
                i += 2;
            } else if (c == '.' || c == '*' || c == '(' || c == ')' || c == ':' ||
                       c == ';' || c == '=') {
                toks.push_back(std::string(1, c));
                ++i;
            } else {
                throw ParseError(std::string("unexpected character '") + c + "'");
            }
        }
    }

    bool done() const { return pos >= toks.size(); }
    const std::string& peek() const {
        static const std::string kEnd = "<end>";
        return done() ? kEnd : toks[pos];
    }
    std::string next() {
        if (done()) throw ParseError("unexpected end of input");
        return toks[pos++];
    }
    void expect(const std::string& t) {
        if (done() || toks[pos] != t)
            throw ParseError("expected '" + t + "', found '" + peek() + "'");
        ++pos;
    }
    bool accept(const std::string& t) {
        if (!done() && toks[pos] == t) { ++pos; return true; }
        return false;
    }
};

bool is_reserved(const std::string& t) {
    return t == "I" || t == "id" || t == "type" || t == "gen" || t == "eq";
}

// Consumes type-name tokens (or I) greedily and returns the word they spell.
ObjectWord read_word_greedy(Tokenizer& tz, const Signature& sig) {
    ObjectWord w;
    while (!tz.done()) {
        const std::string& t = tz.peek();
        if (t == "I") {
            tz.next();
            continue; // the empty word contributes nothing
        }
        int ty = sig.type_index(t);
        if (ty < 0) break;
        tz.next();
        w.types.push_back(ty);
    }
    return w;
}

DiagramPtr parse_expr(Tokenizer& tz, const Signature& sig);

DiagramPtr parse_atom(Tokenizer& tz, const Signature& sig) {
    if (tz.accept("(")) {
        DiagramPtr d = parse_expr(tz, sig);
        tz.expect(")");
        return d;
    }
    std::string t = tz.next();
    if (t == "id")
        return Diagram::identity(read_word_greedy(tz, sig));
    int g = sig.gen_index(t);
    if (g < 0) throw ParseError("unknown generator '" + t + "'");
    return Diagram::generator(sig, g);
}

DiagramPtr parse_ten(Tokenizer& tz, const Signature& sig) {
    DiagramPtr d = parse_atom(tz, sig);
    while (tz.accept("*"))
        d = Diagram::tensor(d, parse_atom(tz, sig));
    return d;
}

DiagramPtr parse_expr(Tokenizer& tz, const Signature& sig) {
    DiagramPtr d = parse_ten(tz, sig);
    while (tz.accept("."))
        d = Diagram::compose(d, parse_ten(tz, sig));
    return d;
}

} // namespace

DiagramPtr parse_diagram(const Signature& sig, const std::string& expr) {
    Tokenizer tz(expr);
    DiagramPtr d = parse_expr(tz, sig);
    if (!tz.done())
        throw ParseError("trailing input after expression: '" + tz.peek() + "'");
    return d;
}

ObjectWord parse_object_word(const Signature& sig, const std::string& text) {
    Tokenizer tz(text);
    ObjectWord w = read_word_greedy(tz, sig);
    if (!tz.done())
        throw ParseError("unknown type name '" + tz.peek() + "'");
    return w;
}

EquationalTheory parse_theory(const std::string& text, const std::string& theory_name) {
    Tokenizer tz(text);
    EquationalTheory th;
    th.name = theory_name;
    int anon_eqs = 0;
    while (!tz.done()) {
        std::string kw = tz.next();
        if (kw == "type") {
            std::string name = tz.next();
            if (is_reserved(name))
                throw ParseError("'" + name + "' is reserved and cannot name a type");
            th.sig.add_type(name);
            tz.expect(";");
        } else if (kw == "gen") {
            std::string name = tz.next();
            if (is_reserved(name))
                throw ParseError("'" + name + "' is reserved and cannot name a generator");
            if (th.sig.type_index(name) >= 0)
                throw ParseError("'" + name + "' already names a type");
            tz.expect(":");
            ObjectWord src = read_word_greedy(tz, th.sig);
            tz.expect("->");
            ObjectWord tgt = read_word_greedy(tz, th.sig);
            tz.expect(";");
            th.sig.add_gen(name, std::move(src), std::move(tgt));
        } else if (kw == "eq") {
            std::string name;
            if (!tz.accept(":")) {
                name = tz.next();
                tz.expect(":");
            }
            if (name.empty())
                name = "eq" + std::to_string(++anon_eqs);
            DiagramPtr lhs = parse_expr(tz, th.sig);
            tz.expect("=");
            DiagramPtr rhs = parse_expr(tz, th.sig);
            tz.expect(";");
            try {
                th.add_equation(name, std::move(lhs), std::move(rhs));
            } catch (const TypeMismatchError& e) {
                throw ParseError(e.what());
            }
        } else {
            throw ParseError("expected 'type', 'gen' or 'eq', found '" + kw + "'");
        }
    }
    return th;
}

namespace {

// Precedence levels for printing: 0 = composition chain, 1 = tensor chain,
// 2 = atom. A child printed at a level below its own gets parentheses.
void print_expr(std::ostringstream& os, const Signature& sig, const Diagram& d, int level) {
    switch (d.kind) {
    case DiagramKind::Identity:
        // "id w" reparses unambiguously: an atom is always followed by an
        // operator or a closing paren, never by a bare type name.
        os << "id " << sig.word_to_string(d.src);
        return;
    case DiagramKind::Generator:
        os << sig.gen(d.gen).name;
        return;
    case DiagramKind::Composite:
        if (level >= 1) os << '(';
        print_expr(os, sig, *d.lhs, 0);
        os << " . ";
        print_expr(os, sig, *d.rhs, 0);
        if (level >= 1) os << ')';
        return;
    case DiagramKind::TensorBlock:
        if (level >= 2) os << '(';
        print_expr(os, sig, *d.lhs, 1);
        os << " * ";
        print_expr(os, sig, *d.rhs, 1);
        if (level >= 2) os << ')';
        return;
    }
}

} // namespace

std::string diagram_to_expr(const Signature& sig, const Diagram& d) {
    std::ostringstream os;
    print_expr(os, sig, d, 0);
    return os.str();
}

} // namespace moncat
