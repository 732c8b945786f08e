#pragma once

// Integral simplicial homology via Smith normal form.  Arbitrary-precision
// integers throughout; pivoting prefers minimum absolute value to contain
// coefficient growth.

#include <optional>
#include <string>
#include <vector>

#include "strata/combinat.hpp"  // BigInt
#include "strata/simplicial.hpp"

namespace strata::homology {

class IntegerMatrix {
public:
    IntegerMatrix() = default;
    IntegerMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols) {}
    static IntegerMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    BigInt& at(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
    const BigInt& at(int r, int c) const { return data_[static_cast<size_t>(r) * cols_ + c]; }

    IntegerMatrix multiply(const IntegerMatrix& rhs) const;
    bool is_zero() const;
    bool operator==(const IntegerMatrix&) const = default;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<BigInt> data_;
};

struct SmithTransforms {
    // row_ops * M * col_ops = diagonal, and M = row_ops_inv * D * col_ops_inv.
    IntegerMatrix row_ops, col_ops, row_ops_inv, col_ops_inv;
};

struct SmithResult {
    std::vector<BigInt> factors;  // positive, d_1 | d_2 | ...
    int rank = 0;                 // == factors.size()
    std::optional<SmithTransforms> transforms;

    IntegerMatrix diagonal(int rows, int cols) const;
};

SmithResult smith_normal_form(const IntegerMatrix& m, bool with_transforms = false);

/// Ordered-simplicial boundary with alternating signs; rows are the
/// (d-1)-simplices, columns the d-simplices.
IntegerMatrix boundary_matrix(const simplicial::SimplicialComplex& c, int d);
/// Face-table boundary (orbit complexes and nerves; signs may cancel or stack).
IntegerMatrix boundary_matrix(const simplicial::OrbitComplex& c, int d);
IntegerMatrix boundary_matrix(const simplicial::NerveComplex& c, int d);

/// ∂∘∂ = 0, checked combinatorially (no matrices materialized).
bool boundaries_compose_to_zero(const simplicial::SimplicialComplex& c);
bool boundaries_compose_to_zero(const simplicial::OrbitComplex& c);
bool boundaries_compose_to_zero(const simplicial::NerveComplex& c);

struct DegreeHomology {
    int d = 0;
    long long betti = 0;
    std::vector<BigInt> torsion;  // invariant factors > 1, divisibility order

    bool operator==(const DegreeHomology&) const = default;
};

struct HomologyGroups {
    std::vector<DegreeHomology> degrees;

    std::string to_string() const;  // e.g. "(Z, Z/2, 0, Z)"
    bool operator==(const HomologyGroups&) const = default;
};

/// Convenience builder for expected values in tests/reports: each entry is a
/// betti rank plus torsion factors.
HomologyGroups make_homology(std::vector<std::pair<long long, std::vector<long long>>> groups);

/// Unreduced homology: betti_d = f_d - rank ∂_d - rank ∂_{d+1}; torsion_d from
/// the invariant factors of ∂_{d+1}.
HomologyGroups homology(const simplicial::SimplicialComplex& c);
HomologyGroups homology(const simplicial::OrbitComplex& c);
HomologyGroups homology(const simplicial::NerveComplex& c);

}  // namespace strata::homology
