#pragma once

// Sign symbols, sign vectors, and partition trees: the combinatorial encoding of
// the cells of the depth-k stratification of the braid arrangement.
//
// Conventions fixed here and used everywhere else:
//   * Points are labelled by positive integers.  A tree on {1..n} describes a
//     cell of n points in R^k; trees on subsets appear as boundary data.
//   * entry(i,j) = Plus(m) means the block of i precedes the block of j at the
//     topmost level m separating them, i.e. p_i[m] < p_j[m] while the
//     coordinates at all levels above m agree.  Equivalently entry(i,j) is the
//     sign symbol of the difference vector p_j - p_i.
//   * Block sequences are ordered by increasing coordinate value; elements
//     inside a block are listed increasingly.  This makes serialization
//     canonical and equality structural.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "strata/errors.hpp"

namespace strata {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

namespace combinat {

enum class SignTag : std::uint8_t { Zero, Plus, Minus };

struct SignSymbol {
    SignTag tag = SignTag::Zero;
    int level = 0;  // 1..k for Plus/Minus, 0 for Zero

    static SignSymbol zero() { return {SignTag::Zero, 0}; }
    static SignSymbol plus(int level);
    static SignSymbol minus(int level);

    SignSymbol negated() const;
    bool is_zero() const { return tag == SignTag::Zero; }

    bool operator==(const SignSymbol&) const = default;
    // Arbitrary strict order for use as container key (level first, Zero < Plus < Minus).
    bool operator<(const SignSymbol& o) const;
};

std::string to_string(const SignSymbol& s);

/// Sign symbol of an exact vector: the sign of the topmost nonzero coordinate.
/// Rejects empty input.
SignSymbol sign_of(std::span<const Rational> x);

/// Closure order on sign symbols: t <= s iff t == s, or s = ±e_j and t is Zero
/// or ±e_i with i < j.  (The closure of a level-j sign class is cut out by
/// equalities above level j and a weak inequality at level j.)
bool symbol_leq(const SignSymbol& t, const SignSymbol& s);

/// Value of sign_{A⊗R^k} on a cell: one symbol per point pair.
class SignVector {
public:
    SignVector(int n, int k);  // all entries Zero

    int n() const { return n_; }
    int k() const { return k_; }

    /// 1-based indices, i != j.  Reversed pairs return the negated symbol.
    SignSymbol entry(int i, int j) const;
    void set_entry(int i, int j, SignSymbol s);

    bool operator==(const SignVector&) const = default;

private:
    int pair_index(int i, int j) const;  // requires i < j

    int n_ = 0, k_ = 0;
    std::vector<SignSymbol> entries_;  // pairs (i,j), i<j, lexicographic
};

/// Depth-k nested ordered set partition: one cell of the Björner-Ziegler
/// stratification.  Depth-0 nodes are coincidence classes; every block of a
/// deeper node recursively carries a tree one level down (singletons carry the
/// trivial chain).
class PartitionTree {
public:
    /// Coincidence class (depth 0).
    static PartitionTree leaf(std::vector<int> elements);
    /// Depth >= 1 node from its ordered blocks (each of depth-1 less).
    PartitionTree(int depth, std::vector<PartitionTree> blocks);

    int depth() const { return depth_; }
    const std::vector<int>& elements() const { return elements_; }  // sorted
    const std::vector<PartitionTree>& blocks() const { return blocks_; }
    int size() const { return static_cast<int>(elements_.size()); }

    /// True when every coincidence class is a singleton (cell avoids all
    /// hyperplanes, i.e. the points are pairwise distinct).
    bool is_configuration() const;

    /// Cell dimension: per level, each cluster contributes its block count.
    int dimension() const;

    /// Sign symbol of the pair (i,j) of elements of this tree (any labels).
    SignSymbol pair_symbol(int i, int j) const;

    /// Canonical nested-bracket text form, e.g. "[[{2}],[{1},{3}]]".
    std::string to_string() const;
    static PartitionTree parse(std::string_view text);

    /// Relabel elements through the given map (block order is preserved; the
    /// order is about coordinate values, not labels).
    PartitionTree relabeled(const std::vector<int>& image_of) const;  // image_of[i] for label i

    bool operator==(const PartitionTree&) const;

private:
    PartitionTree() = default;

    int depth_ = 0;
    std::vector<int> elements_;        // sorted union of the blocks
    std::vector<PartitionTree> blocks_;  // empty iff depth 0
};

/// Sign vector of a tree on {1..n}.  Throws if the index set is not {1..n}.
SignVector tree_to_signvector(const PartitionTree& t);

/// Inverse of tree_to_signvector; nullopt when the sign vector is not
/// realizable by any configuration (order contradictions).
std::optional<PartitionTree> signvector_to_tree(const SignVector& sv);

}  // namespace combinat
}  // namespace strata
