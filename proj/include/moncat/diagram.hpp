#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "moncat/signature.hpp"
#include "moncat/word.hpp"

namespace moncat {

class Diagram;
using DiagramPtr = std::shared_ptr<const Diagram>;

enum class DiagramKind {
    Identity,   // id_w for a word w
    Generator,  // a single generator box
    Composite,  // lhs followed by rhs (lhs' target = rhs' source)
    TensorBlock // lhs stacked above rhs
};

// An immutable term describing a string diagram. Boundaries and the number
// of generator occurrences are cached on construction.
class Diagram {
public:
    DiagramKind kind;
    ObjectWord src;
    ObjectWord tgt;
    std::size_t gen_count; // number of generator occurrences in the term
    int gen = -1;          // Generator only
    DiagramPtr lhs, rhs;   // Composite / TensorBlock only

    static DiagramPtr identity(ObjectWord w);
    static DiagramPtr generator(const Signature& sig, int g);
    static DiagramPtr generator(const Signature& sig, const std::string& name);
    // f followed by g; throws TypeMismatchError unless f's target equals g's source.
    static DiagramPtr compose(DiagramPtr f, DiagramPtr g);
    static DiagramPtr tensor(DiagramPtr f, DiagramPtr g);

    static DiagramPtr compose_all(const std::vector<DiagramPtr>& fs);
    static DiagramPtr tensor_all(const std::vector<DiagramPtr>& fs);

private:
    Diagram() = default;
};

bool structurally_equal(const Diagram& a, const Diagram& b);

// One layer of a sliced diagram: a single generator with identity wires on
// both sides. The layer maps left+gen.source+right to left+gen.target+right.
struct Slice {
    ObjectWord left;
    int gen;
    ObjectWord right;

    bool operator==(const Slice&) const = default;
};

// A diagram normalized to a vertical stack of single-generator layers.
struct SliceForm {
    ObjectWord source;
    std::vector<Slice> slices;

    bool operator==(const SliceForm&) const = default;
};

// The input word of one slice.
ObjectWord slice_source(const Signature& sig, const Slice& s);
// The output word of one slice.
ObjectWord slice_target(const Signature& sig, const Slice& s);
// Output word of the whole stack.
ObjectWord slice_form_target(const Signature& sig, const SliceForm& sf);
// Throws unless consecutive layers agree on their boundary words.
void validate_slice_form(const Signature& sig, const SliceForm& sf);

// Interleave a term into layers. Composition concatenates layer stacks; a
// tensor runs the upper factor first (padded below by the lower factor's
// source) and then the lower factor (padded above by the upper's target).
SliceForm to_slices(const Signature& sig, const Diagram& d);

// Rebuild a term from layers: a left-to-right composite of whiskered generators.
DiagramPtr from_slices(const Signature& sig, const SliceForm& sf);

} // namespace moncat
