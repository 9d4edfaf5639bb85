#pragma once

#include <memory>
#include <set>
#include <string>
#include <vector>

#include "moncat/game.hpp"
#include "moncat/strategy.hpp"

namespace moncat {

// First-order terms: a variable, or a function symbol applied to arguments
// (constants are zero-argument applications).
struct Term {
    std::string head;
    bool is_app = false;
    std::vector<Term> args;

    static Term var(std::string name) { return Term{std::move(name), false, {}}; }
    static Term app(std::string fn, std::vector<Term> as) {
        return Term{std::move(fn), true, std::move(as)};
    }

    bool operator==(const Term&) const = default;
};

// Formulas of the quantifier fragment: an atom under a prefix of universal
// and existential quantifiers.
struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

struct Formula {
    enum class Kind { Atom, Forall, Exists };

    Kind kind;
    std::string name;       // Atom: predicate symbol; quantifier: bound variable
    std::vector<Term> args; // Atom only
    FormulaPtr body;        // quantifier only

    static FormulaPtr atom(std::string pred, std::vector<Term> args = {});
    static FormulaPtr forall(std::string var, FormulaPtr body);
    static FormulaPtr exists(std::string var, FormulaPtr body);
};

std::set<std::string> free_vars(const Term& t);
std::set<std::string> free_vars(const Formula& f);
// Capture-avoiding substitution of t for the free variable x.
FormulaPtr substitute(const Formula& f, const std::string& x, const Term& t);
bool alpha_equal(const Formula& a, const Formula& b);

std::string term_to_string(const Term& t);
std::string formula_to_string(const Formula& f);

// Sequent proofs for two-formula sequents L |- R.
struct Proof;
using ProofPtr = std::shared_ptr<const Proof>;

struct Proof {
    enum class Rule { Ax, Cut, AllL, AllR, ExL, ExR };

    Rule rule;
    Term witness;           // AllL, ExR
    std::string var;        // AllR, ExL (the eigenvariable)
    FormulaPtr cut_formula; // Cut
    ProofPtr sub1, sub2;    // sub2 only for Cut

    static ProofPtr ax();
    static ProofPtr cut(FormulaPtr mid, ProofPtr left, ProofPtr right);
    static ProofPtr all_l(Term witness, ProofPtr sub);
    static ProofPtr all_r(std::string var, ProofPtr sub);
    static ProofPtr ex_l(std::string var, ProofPtr sub);
    static ProofPtr ex_r(Term witness, ProofPtr sub);
};

// Validates a proof of L |- R; throws ProofError naming the failing rule or
// side condition. Eigenvariables must be fresh for both current formulas.
void check_proof(const Formula& left, const Formula& right, const Proof& p);
bool is_valid_proof(const Formula& left, const Formula& right, const Proof& p);

// The polarized game of a formula: one move per quantifier, universals
// negative, existentials positive, ordered outside-in. The atom contributes
// nothing.
Game interpret_formula(const Formula& f);

struct ProofInterpretation {
    Strategy strategy;
    // Moves in rule-application order, for cut-free proofs only.
    std::vector<int> intro_order;
    bool has_intro_order = false;
};

// Interprets a checked proof of L |- R as a strategy on the arena
// interpret_formula(L) -> interpret_formula(R): each witness links the
// moves of the eigenvariables it mentions to the move it instantiates; a
// cut composes the two interpretations through the cut formula's game.
ProofInterpretation interpret_proof(const Formula& left, const Formula& right,
                                    const Proof& p);

// The semantics of a cut in isolation: interaction through the shared game.
Strategy interpret_cut(const Strategy& s, const Strategy& t);

struct SynthesisResult {
    FormulaPtr left;
    FormulaPtr right;
    ProofPtr proof;
};

// Builds a sequent and proof denoting the given strategy between filiform
// games: quantifier prefixes spell the two games over a shared nullary atom,
// each positive move gets a fresh function symbol applied to exactly the
// eigenvariables that justify it. interpret_proof inverts this exactly.
SynthesisResult synthesize_proof(const Strategy& s);

// ---- text formats ----

// formula  ::= ("forall" | "exists") <var> "." formula | atom
// atom     ::= <pred> [ "(" term ("," term)* ")" ]
// term     ::= <var> | <fn> "(" [term ("," term)*] ")"
FormulaPtr parse_formula(const std::string& text);

// proof    ::= "(Ax)" | "(Cut" "{" formula "}" proof proof ")"
//            | "(AllL" sterm proof ")" | "(AllR" <var> proof ")"
//            | "(ExL" <var> proof ")"  | "(ExR" sterm proof ")"
// sterm    ::= <var> | "(" <fn> sterm* ")"
ProofPtr parse_proof(const std::string& text);

std::string proof_to_string(const Proof& p);

// A proof file holds three labeled sections:
//   left: <formula>
//   right: <formula>
//   proof: <proof>
struct ProofFile {
    FormulaPtr left;
    FormulaPtr right;
    ProofPtr proof;
};

ProofFile parse_proof_file(const std::string& text);
std::string proof_file_to_string(const Formula& left, const Formula& right, const Proof& p);

} // namespace moncat
