#pragma once

#include "qtoric/charmap.hpp"
#include "qtoric/cyclic.hpp"
#include "qtoric/document.hpp"
#include "qtoric/fixtures.hpp"

#include <string>
#include <vector>

namespace testing_support {

/// A fixture reduced to polytope, orientation and (if any) characteristic map.
struct View {
    qtoric::SimplePolytope polytope;
    qtoric::OrientationData orientation;
    std::optional<qtoric::CharacteristicMap> map;
};

inline View view(const std::string& name) {
    using namespace qtoric;
    const Fixture f = fixture(name);
    View v;
    if (const auto* p = find_payload<SimplePolytope>(f.documents)) {
        v.polytope = *p;
        v.orientation = *find_payload<OrientationData>(f.documents);
    } else if (const auto* a = find_payload<AngleSpec>(f.documents)) {
        const auto polar = build_polar(caratheodory_realization(*a));
        v.polytope = polar.combinatorics;
        v.orientation = vertex_orientation_tuples(polar);
    } else {
        const auto& k = *find_payload<SimplicialComplex>(f.documents);
        v.polytope = dualize(k);
        v.orientation = std::get<OrientationData>(coherent_orientation(k));
    }
    if (const auto* m = find_payload<CharacteristicMap>(f.documents)) v.map = *m;
    return v;
}

inline const std::vector<std::string>& mapped_fixtures() {
    static const std::vector<std::string> names{"pentagon", "triangle", "square", "d47", "barnette"};
    return names;
}

}  // namespace testing_support
