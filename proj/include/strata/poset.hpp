#pragma once

// Face poset of a finite stratification.  The strict relation is stored
// transitively closed as a bit matrix; covers are the transitive reduction.

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "strata/combinat.hpp"
#include "strata/sphere_cell.hpp"

namespace strata {

enum class Space { Euclidean, Sphere };

class BitMatrix {
public:
    BitMatrix() = default;
    explicit BitMatrix(int n) : n_(n), words_((n + 63) / 64), bits_(static_cast<size_t>(n) * words_, 0) {}

    int size() const { return n_; }
    bool get(int r, int c) const {
        return (bits_[row_offset(r) + static_cast<size_t>(c / 64)] >> (c % 64)) & 1u;
    }
    void set(int r, int c) { bits_[row_offset(r) + static_cast<size_t>(c / 64)] |= (uint64_t{1} << (c % 64)); }

    /// row(r) |= row(s)
    void or_row(int r, int s) {
        const size_t ro = row_offset(r), so = row_offset(s);
        for (size_t w = 0; w < words_; ++w) bits_[ro + w] |= bits_[so + w];
    }
    bool rows_intersect(int r, int s) const {
        const size_t ro = row_offset(r), so = row_offset(s);
        for (size_t w = 0; w < words_; ++w)
            if (bits_[ro + w] & bits_[so + w]) return true;
        return false;
    }
    /// row(r) of *this against row(s) of `other` (same size required).
    bool rows_intersect_with(const BitMatrix& other, int r, int s) const {
        const size_t ro = row_offset(r), so = other.row_offset(s);
        for (size_t w = 0; w < words_; ++w)
            if (bits_[ro + w] & other.bits_[so + w]) return true;
        return false;
    }
    /// Warshall closure treating set bits as strict relations.
    void transitive_close();

    bool operator==(const BitMatrix&) const = default;

private:
    size_t row_offset(int r) const { return static_cast<size_t>(r) * words_; }

    int n_ = 0;
    size_t words_ = 0;
    std::vector<uint64_t> bits_;
};

/// How a cell sits in the boundary of a bigger one.  A basepoint cell can
/// reach a top cell through several disjoint pieces of the collapsed cube
/// boundary; each piece is a separate attachment.  `disjuncts` lists one
/// witness facet (level, sign) per attachment, minus before plus.
///
/// When the touched facets cover both signs of two or more levels (and no
/// level is touched one-sidedly), the attachment region is a sphere of
/// positive dimension rather than a discrete set; `hom_dim` records that
/// dimension.  Chain-level models are only built while every hom_dim is 0.
struct Attachments {
    std::vector<std::pair<int, int>> disjuncts;
    int hom_dim = 0;

    int count() const { return static_cast<int>(disjuncts.size()); }
};

class FacePoset {
public:
    using Cell = std::variant<combinat::PartitionTree, sphere::SphereCell>;

    /// `less` is the strict order (need not be closed; it is closed here).
    /// Dimensions must strictly increase along the relation.
    FacePoset(Space space, int n, int k, std::vector<Cell> cells, BitMatrix less);

    Space space() const { return space_; }
    int n() const { return n_; }
    int k() const { return k_; }
    int size() const { return static_cast<int>(cells_.size()); }

    const Cell& cell(int id) const { return cells_[static_cast<size_t>(id)]; }
    const combinat::PartitionTree& tree(int id) const;
    int dim(int id) const { return dims_[static_cast<size_t>(id)]; }
    std::string cell_label(int id) const;

    bool less(int a, int b) const { return less_.get(a, b); }
    bool leq(int a, int b) const { return a == b || less_.get(a, b); }

    /// Covering relation (transitive reduction), sorted by (lo, hi).
    const std::vector<std::pair<int, int>>& covers() const { return covers_; }

    /// Longest chain cardinality; the order complex has dimension height()-1.
    int height() const;

    /// Covers whose dimension gap differs from 1 (expected empty for the
    /// stratifications built here; deviations are surfaced, not hidden).
    std::vector<std::pair<int, int>> cover_dimension_violations() const;

    /// Ids of elements strictly above `id`, ascending.
    const std::vector<int>& upset(int id) const { return upsets_[static_cast<size_t>(id)]; }

    /// Boundary attachments of a < b.  Defaults to a single unlabeled
    /// attachment; the sphere builder records the multi-component cases.
    const Attachments& attachments(int a, int b) const;
    void set_attachments(int a, int b, Attachments m);
    /// True when some comparable pair has more than one attachment (then the
    /// homotopy model is the nerve, a proper refinement of the order complex).
    bool has_multiple_attachments() const;
    /// True when some attachment region is a positive-dimensional sphere
    /// (chain-level models are not available then).
    bool has_positive_dimensional_attachments() const;

private:
    Space space_;
    int n_, k_;
    std::vector<Cell> cells_;
    std::vector<int> dims_;
    BitMatrix less_;
    std::vector<std::pair<int, int>> covers_;
    std::vector<std::vector<int>> upsets_;
    std::map<std::pair<int, int>, Attachments> attachments_;  // only multi/labelled entries
    static const Attachments default_attachments_;
};

}  // namespace strata
