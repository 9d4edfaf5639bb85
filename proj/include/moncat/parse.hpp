#pragma once

#include <string>

#include "moncat/theory.hpp"

namespace moncat {

// Parses a theory description:
//   type <name> ;
//   gen <name> : <word> -> <word> ;
//   eq [<name>] : <expr> = <expr> ;
// Words are whitespace-separated type names, or the reserved letter I for the
// empty word. `#` starts a comment that runs to the end of the line.
EquationalTheory parse_theory(const std::string& text, const std::string& theory_name = "");

// Parses a diagram expression over a signature.
//   <expr> ::= <ten> ( "." <ten> )*         left-to-right composition (f then g)
//   <ten>  ::= <atom> ( "*" <atom> )*       tensor
//   <atom> ::= <generator-name> | "id" <word-tokens> | "(" <expr> ")"
// After `id`, type-name tokens (or I) are consumed greedily.
DiagramPtr parse_diagram(const Signature& sig, const std::string& expr);

// Parses a standalone word ("I", or type names separated by spaces).
ObjectWord parse_object_word(const Signature& sig, const std::string& text);

// Prints a diagram back in the expression grammar above.
std::string diagram_to_expr(const Signature& sig, const Diagram& d);

} // namespace moncat
