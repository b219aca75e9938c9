#pragma once

#include "hfk/builtin_data.hpp"
#include "hfk/cover.hpp"
#include "hfk/json_io.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hfk {

struct BuiltinExample {
    std::string name;
    HeegaardDiagram diagram;
    std::optional<EquivariantDiagram> equivariant;  // set for covers
};

inline const std::vector<std::pair<std::string, const char*>>& builtin_texts() {
    static const std::vector<std::pair<std::string, const char*>> texts = {
        {"unknot-quotient", builtin_text::unknot_quotient},
        {"unknot-cover", builtin_text::unknot_cover},
        {"trefoil-quotient", builtin_text::trefoil_quotient},
        {"trefoil-cover", builtin_text::trefoil_cover},
    };
    return texts;
}

inline std::vector<std::string> builtin_names() {
    std::vector<std::string> out;
    for (auto& [n, t] : builtin_texts()) out.push_back(n);
    return out;
}

inline HeegaardDiagram builtin_diagram(const std::string& name) {
    for (auto& [n, t] : builtin_texts())
        if (n == name) return parse_diagram(t);
    fail("UnknownExample", name);
}

// The hand-labelled cover of a family ("unknot" or "trefoil") with its projection to the
// quotient, branched over z0 and w0.
inline EquivariantDiagram builtin_equivariant(const std::string& family) {
    auto quotient = builtin_diagram(family + "-quotient");
    auto cover = builtin_diagram(family + "-cover");
    return attach_cover(branched_double_cover(quotient, "z0", "w0"), cover);
}

// Stored summary of a family's pipeline, used by `examples run`.
inline std::string builtin_expected(const std::string& family) {
    if (family == "unknot") return builtin_text::expected_unknot;
    if (family == "trefoil") return builtin_text::expected_trefoil;
    fail("UnknownExample", family);
}

inline std::vector<std::string> builtin_families() { return {"unknot", "trefoil"}; }

inline std::vector<BuiltinExample> builtin_examples() {
    std::vector<BuiltinExample> out;
    for (auto& name : builtin_names()) {
        BuiltinExample ex{name, builtin_diagram(name), std::nullopt};
        const std::string suffix = "-cover";
        if (name.size() > suffix.size() && name.compare(name.size() - suffix.size(), suffix.size(), suffix) == 0)
            ex.equivariant = builtin_equivariant(name.substr(0, name.size() - suffix.size()));
        out.push_back(std::move(ex));
    }
    return out;
}

}  // namespace hfk
