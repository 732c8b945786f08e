#pragma once

// Order complexes of face posets, f-vectors, Euler characteristics, and
// quotients by free permutation actions.

#include <vector>

#include "strata/poset.hpp"

namespace strata::simplicial {

using Chain = std::vector<int>;  // cell ids, ascending in the poset order

struct SimplicialComplex {
    int vertex_count = 0;
    /// simplices[d] = all (d+1)-chains, each listed in poset order; the list
    /// itself is sorted lexicographically.
    std::vector<std::vector<Chain>> simplices;

    int dim() const { return static_cast<int>(simplices.size()) - 1; }
};

/// Vertices = poset elements, d-simplices = (d+1)-chains.
SimplicialComplex order_complex(const FacePoset& poset);

std::vector<long long> f_vector(const SimplicialComplex& c);
long long euler_char(const SimplicialComplex& c);

/// Quotient of a complex by a free simplicial action, stored semi-simplicially:
/// orbit representatives with a face table (quotients of simplicial complexes
/// need not be simplicial, but their ordered chain complexes still compute the
/// quotient's homology because vertex orders are action-invariant).
struct OrbitComplex {
    int group_order = 1;
    /// reps[d] = lexicographically minimal chain of each orbit, sorted.
    std::vector<std::vector<Chain>> reps;
    /// face_table[d][s][i] = index in reps[d-1] of the orbit of the i-th face
    /// of reps[d][s] (delete the i-th vertex); face_table[0] is empty.
    std::vector<std::vector<std::vector<int>>> face_table;

    int dim() const { return static_cast<int>(reps.size()) - 1; }
};

std::vector<long long> f_vector(const OrbitComplex& c);
long long euler_char(const OrbitComplex& c);

/// vertex_maps[g][v] = image of vertex v under group element g (the identity
/// must be included; use sphere::action_tables for Σ_n).  Throws when the
/// action fails to be simplicial or fixes a simplex nontrivially (the offender
/// is named in the message).
OrbitComplex quotient(const SimplicialComplex& c, const std::vector<std::vector<int>>& vertex_maps);

/// One simplex of the face-structure nerve: a chain of cells together with a
/// choice of boundary attachment for every consecutive pair.
struct NerveSimplex {
    Chain cells;
    std::vector<int> branches;  // branches[i] indexes attachments(cells[i], cells[i+1])

    bool operator==(const NerveSimplex&) const = default;
    bool operator<(const NerveSimplex& o) const {
        if (cells != o.cells) return cells < o.cells;
        return branches < o.branches;
    }
};

/// Nerve of the face structure.  Identical to the order complex when every
/// attachment is unique; with parallel attachments it is semi-simplicial
/// (parallel edges), so faces are kept as an explicit table.  Dropping an
/// inner cell of a chain composes the two adjacent attachments.
struct NerveComplex {
    std::vector<std::vector<NerveSimplex>> simplices;           // per dim, sorted
    std::vector<std::vector<std::vector<int>>> face_table;      // [d][s][i] -> dim d-1 index
    int group_order = 1;                                        // 1 for un-quotiented nerves

    int dim() const { return static_cast<int>(simplices.size()) - 1; }
};

std::vector<long long> f_vector(const NerveComplex& c);
long long euler_char(const NerveComplex& c);

NerveComplex nerve_complex(const FacePoset& poset);

/// Quotient of the nerve by the free cell action (attachment labels are
/// relabeling-invariant, so the action permutes nerve simplices).
NerveComplex quotient(const NerveComplex& c, const std::vector<std::vector<int>>& vertex_maps);

}  // namespace strata::simplicial
