#pragma once

#include "qtoric/document.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qtoric {

/// Built-in named inputs.
struct Fixture {
    std::string name;
    std::string provenance;
    std::vector<Document> documents;
    /// Published vertex tuples to compare computed orientations against.
    std::optional<OrientationData> reference_orientation;
};

/// pentagon, triangle, square, d47, barnette, rp2_6, cross4, simplex4.
const std::vector<std::string>& fixture_names();

/// Throws ValidationError for an unknown name.
Fixture fixture(const std::string& name);

}  // namespace qtoric
