#pragma once

#include <string>
#include <vector>

#include "moncat/error.hpp"
#include "moncat/word.hpp"

namespace moncat {

// A generating morphism: a name plus its boundary words.
struct GenDecl {
    std::string name;
    ObjectWord source;
    ObjectWord target;
};

// A monoidal signature: named object types plus typed generators.
struct Signature {
    std::vector<std::string> types;
    std::vector<GenDecl> gens;

    int type_index(const std::string& name) const {
        for (std::size_t i = 0; i < types.size(); ++i)
            if (types[i] == name) return static_cast<int>(i);
        return -1;
    }

    int gen_index(const std::string& name) const {
        for (std::size_t i = 0; i < gens.size(); ++i)
            if (gens[i].name == name) return static_cast<int>(i);
        return -1;
    }

    int add_type(const std::string& name) {
        if (type_index(name) >= 0)
            throw ParseError("duplicate type name: " + name);
        types.push_back(name);
        return static_cast<int>(types.size()) - 1;
    }

    int add_gen(const std::string& name, ObjectWord source, ObjectWord target) {
        if (gen_index(name) >= 0)
            throw ParseError("duplicate generator name: " + name);
        for (int t : source.types) check_type(t);
        for (int t : target.types) check_type(t);
        gens.push_back(GenDecl{name, std::move(source), std::move(target)});
        return static_cast<int>(gens.size()) - 1;
    }

    const GenDecl& gen(int g) const { return gens[static_cast<std::size_t>(g)]; }

    void check_type(int t) const {
        if (t < 0 || t >= static_cast<int>(types.size()))
            throw DomainError("type index out of range");
    }

    // Render a word using the signature's type names; the empty word prints as "I".
    std::string word_to_string(const ObjectWord& w) const;
};

} // namespace moncat
