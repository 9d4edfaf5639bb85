#pragma once

#include <cstdint>
#include <vector>

#include "moncat/diagram.hpp"
#include "moncat/theory.hpp"

namespace moncat {

// A multirelation from an m-element set to an n-element set: an m-by-n
// matrix of natural numbers (row index = source element). Arithmetic is
// checked and throws ArithmeticOverflowError past the uint64 range.
struct Multirelation {
    int m = 0;
    int n = 0;
    std::vector<std::uint64_t> a; // row-major, size m*n

    Multirelation() = default;
    Multirelation(int m_, int n_) : m(m_), n(n_), a(static_cast<std::size_t>(m_) * n_, 0) {}

    std::uint64_t& at(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
    std::uint64_t at(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }

    bool operator==(const Multirelation&) const = default;
};

std::uint64_t checked_add(std::uint64_t x, std::uint64_t y);
std::uint64_t checked_mul(std::uint64_t x, std::uint64_t y);

Multirelation mr_identity(int m);
// f followed by g: entry (i,k) = sum_j f(i,j) * g(j,k).
Multirelation mr_compose(const Multirelation& f, const Multirelation& g);
// Block-diagonal sum.
Multirelation mr_tensor(const Multirelation& f, const Multirelation& g);
// Sum of all entries (checked).
std::uint64_t mr_cardinal(const Multirelation& r);

// A boolean relation, as a 0/1 matrix.
struct Relation {
    int m = 0;
    int n = 0;
    std::vector<std::uint8_t> a;

    Relation() = default;
    Relation(int m_, int n_) : m(m_), n(n_), a(static_cast<std::size_t>(m_) * n_, 0) {}

    std::uint8_t& at(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
    std::uint8_t at(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }

    bool operator==(const Relation&) const = default;
};

Relation rel_identity(int m);
Relation rel_compose(const Relation& f, const Relation& g);
Relation rel_tensor(const Relation& f, const Relation& g);
// Forgets multiplicities.
Relation booleanize(const Multirelation& r);

// Evaluates a diagram whose generators are named mu/eta/delta/eps/gamma on a
// single type (the bialgebra signature shared by theories "B" and "R"):
// mu sums two tokens into one, delta copies, gamma swaps, eta/eps are the
// empty maps. Throws DomainError on any other generator.
Multirelation eval_mrel(const EquationalTheory& th, const Diagram& d);
// Same interpretation with boolean entries.
Relation eval_rel(const EquationalTheory& th, const Diagram& d);

} // namespace moncat
