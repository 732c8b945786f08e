#pragma once

// Cells of the depth-k stratification of the braid arrangement A_{n-1} and the
// k-th order Salvetti poset (configuration cells only).

#include <vector>

#include "strata/combinat.hpp"
#include "strata/poset.hpp"

namespace strata::arrangement {

enum class CellFilter { All, Configuration };

struct ResourceLimits {
    int max_n = 6;
    int max_k = 4;
    BigInt max_cells = 200000;
};

/// Closed recursion for the cell count; cross-checks enumerate_cells without
/// materializing anything.
BigInt count_cells(int n, int k, CellFilter filter);

/// Every depth-k tree on {1..n} (filter All) or only those with singleton
/// coincidence classes (filter Configuration), in a fixed deterministic order.
/// Throws ResourceError when the projected count exceeds the limits.
std::vector<combinat::PartitionTree> enumerate_cells(int n, int k, CellFilter filter,
                                                     const ResourceLimits& limits = {});

/// Closure order: componentwise symbol order on the sign vectors.  The trees
/// must share index set and depth.
bool face_leq(const combinat::PartitionTree& a, const combinat::PartitionTree& b);

/// Face poset of the configuration cells of A_{n-1} ⊗ R^k.  Its order complex
/// is Sal^(k)(A_{n-1}).
FacePoset salvetti_poset(int n, int k, const ResourceLimits& limits = {});

/// Face poset of the full stratification (all cells).
FacePoset full_poset(int n, int k, const ResourceLimits& limits = {});

}  // namespace strata::arrangement
