#pragma once

#include <string>
#include <vector>

#include "strata/combinat.hpp"

namespace strata::sphere {

/// Cell of the braid stratification of (S^k)^n restricted to the configuration
/// space.  TypeB cells live in the open top product cell; TypeA cells put one
/// point at the basepoint.  Cells with two or more basepoint coordinates lie
/// in the fat diagonal and never enter the poset.
struct SphereCell {
    enum class Variant { TypeA, TypeB };

    Variant variant = Variant::TypeB;
    int ell = 0;  // basepoint position, TypeA only
    combinat::PartitionTree tree;

    static SphereCell type_b(combinat::PartitionTree t);
    static SphereCell type_a(int ell, combinat::PartitionTree t);

    /// The basepoint factor contributes nothing to the dimension.
    int dimension() const { return tree.dimension(); }

    std::string to_string() const;
    bool operator==(const SphereCell&) const;
};

class Permutation {
public:
    explicit Permutation(std::vector<int> images);  // images[i-1] = sigma(i), 1-based values
    static Permutation identity(int n);

    int n() const { return static_cast<int>(images_.size()); }
    int operator()(int i) const;
    Permutation inverse() const;
    Permutation compose(const Permutation& first) const;  // this ∘ first
    bool is_identity() const;

    /// Relabel map usable with PartitionTree::relabeled.
    std::vector<int> as_relabel_map() const;

    bool operator==(const Permutation&) const = default;

private:
    std::vector<int> images_;
};

/// All n! permutations in lexicographic order of their image words.
std::vector<Permutation> symmetric_group(int n);

}  // namespace strata::sphere
