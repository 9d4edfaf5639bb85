#pragma once

#include <initializer_list>
#include <vector>

namespace moncat {

// A finite sequence of type indices (indices into Signature::types).
// The monoidal unit is the empty word.
struct ObjectWord {
    std::vector<int> types;

    ObjectWord() = default;
    explicit ObjectWord(std::vector<int> ts) : types(std::move(ts)) {}
    ObjectWord(std::initializer_list<int> ts) : types(ts) {}

    int size() const { return static_cast<int>(types.size()); }
    bool empty() const { return types.empty(); }
    int operator[](int i) const { return types[static_cast<std::size_t>(i)]; }

    bool operator==(const ObjectWord&) const = default;

    // Concatenation (the tensor on objects).
    friend ObjectWord operator+(const ObjectWord& a, const ObjectWord& b) {
        ObjectWord r = a;
        r.types.insert(r.types.end(), b.types.begin(), b.types.end());
        return r;
    }

    // Contiguous subword [from, from+len).
    ObjectWord sub(int from, int len) const {
        ObjectWord r;
        r.types.assign(types.begin() + from, types.begin() + from + len);
        return r;
    }
    ObjectWord prefix(int len) const { return sub(0, len); }
    ObjectWord suffix_from(int from) const { return sub(from, size() - from); }

    // n copies of a single type.
    static ObjectWord repeated(int type, int n) {
        ObjectWord r;
        r.types.assign(static_cast<std::size_t>(n), type);
        return r;
    }
};

} // namespace moncat
