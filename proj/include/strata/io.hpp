#pragma once

// JSON and DOT serialization of the artifacts.  Key order is fixed so that
// identical configs produce byte-identical files.

#include <nlohmann/json.hpp>

#include <string>

#include "strata/homology.hpp"
#include "strata/poset.hpp"
#include "strata/simplicial.hpp"

namespace strata::io {

using Json = nlohmann::ordered_json;

/// {"tool": {...}, "config": {...}} header embedded in every artifact.
Json artifact_header(const Json& config);

Json cells_json(const FacePoset& poset);
Json poset_json(const FacePoset& poset);
Json complex_json(const simplicial::SimplicialComplex& c);
Json complex_json(const simplicial::OrbitComplex& c);
Json complex_json(const simplicial::NerveComplex& c);
Json homology_json(const homology::HomologyGroups& h);

/// Hasse diagram with one rank layer per cell dimension.
std::string poset_dot(const FacePoset& poset);

}  // namespace strata::io
