#pragma once

// Face poset of the braid stratification of (S^k)^n restricted to the
// configuration space, and the Σ_n action on it.

#include <vector>

#include "strata/arrangement.hpp"
#include "strata/poset.hpp"
#include "strata/sphere_cell.hpp"

namespace strata::sphere {

/// Elements: TypeB cells (configuration cells of A_{n-1} at depth k) followed
/// by TypeA cells (ell ascending, then enumeration order on n-1 points).
/// TypeB/TypeB and same-ell TypeA/TypeA are ordered by face_leq; TypeA < TypeB
/// is decided by the geometric oracle; nothing else is comparable.
/// `jobs` caps the worker threads used for the cross-type oracle sweep.
FacePoset sphere_poset(int n, int k, const arrangement::ResourceLimits& limits = {}, int jobs = 1);

/// Relabel a cell through sigma (TypeA basepoints move along).
SphereCell act(const Permutation& sigma, const SphereCell& c);

/// Action on any poset cell (euclidean cells just relabel their tree).
FacePoset::Cell act(const Permutation& sigma, const FacePoset::Cell& c);

/// Id-level action table: maps[g][id] = image id under the g-th permutation of
/// symmetric_group(n).  Throws if the action does not permute the cells.
std::vector<std::vector<int>> action_tables(const FacePoset& poset);

struct OrbitReport {
    std::vector<std::vector<int>> orbits;  // each sorted ascending; sorted by first element
    bool free = false;
    /// (cell id, permutation index) pairs witnessing non-freeness, empty when free.
    std::vector<std::pair<int, int>> fixed_cells;
};

OrbitReport orbits(const FacePoset& poset);

}  // namespace strata::sphere
