#include "strata/poset.hpp"

#include <algorithm>

namespace strata {

void BitMatrix::transitive_close() {
    // Warshall sweep: anything reaching j also reaches what j reaches.
    for (int j = 0; j < n_; ++j)
        for (int i = 0; i < n_; ++i)
            if (get(i, j)) or_row(i, j);
}

FacePoset::FacePoset(Space space, int n, int k, std::vector<Cell> cells, BitMatrix less)
    : space_(space), n_(n), k_(k), cells_(std::move(cells)), less_(std::move(less)) {
    const int sz = static_cast<int>(cells_.size());
    if (less_.size() != sz) throw ValidationError("FacePoset: relation size mismatch");

    dims_.reserve(cells_.size());
    for (const Cell& c : cells_)
        dims_.push_back(std::visit([](const auto& x) { return x.dimension(); }, c));

    less_.transitive_close();
    for (int a = 0; a < sz; ++a) {
        if (less_.get(a, a)) throw ValidationError("FacePoset: relation has a cycle");
        for (int b = 0; b < sz; ++b)
            if (less_.get(a, b) && dims_[static_cast<size_t>(a)] >= dims_[static_cast<size_t>(b)])
                throw ValidationError("FacePoset: dimensions must increase strictly along the order");
    }

    BitMatrix greater(sz);
    for (int a = 0; a < sz; ++a)
        for (int b = 0; b < sz; ++b)
            if (less_.get(a, b)) greater.set(b, a);

    // Covers: a<b with successors(a) ∩ predecessors(b) empty.
    for (int a = 0; a < sz; ++a)
        for (int b = 0; b < sz; ++b)
            if (less_.get(a, b) && !less_.rows_intersect_with(greater, a, b)) covers_.emplace_back(a, b);
    std::sort(covers_.begin(), covers_.end());

    upsets_.assign(cells_.size(), {});
    for (int a = 0; a < sz; ++a)
        for (int b = 0; b < sz; ++b)
            if (less_.get(a, b)) upsets_[static_cast<size_t>(a)].push_back(b);
}

const combinat::PartitionTree& FacePoset::tree(int id) const {
    const Cell& c = cells_[static_cast<size_t>(id)];
    if (std::holds_alternative<combinat::PartitionTree>(c))
        return std::get<combinat::PartitionTree>(c);
    return std::get<sphere::SphereCell>(c).tree;
}

std::string FacePoset::cell_label(int id) const {
    return std::visit([](const auto& x) { return x.to_string(); }, cells_[static_cast<size_t>(id)]);
}

int FacePoset::height() const {
    const int sz = size();
    if (sz == 0) return 0;
    std::vector<int> order(static_cast<size_t>(sz));
    for (int i = 0; i < sz; ++i) order[static_cast<size_t>(i)] = i;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return dims_[static_cast<size_t>(a)] < dims_[static_cast<size_t>(b)];
    });
    std::vector<std::vector<int>> above(cells_.size());
    for (auto [lo, hi] : covers_) above[static_cast<size_t>(lo)].push_back(hi);
    std::vector<int> longest(cells_.size(), 1);
    int best = 1;
    for (int idx : order) {
        for (int hi : above[static_cast<size_t>(idx)]) {
            longest[static_cast<size_t>(hi)] =
                std::max(longest[static_cast<size_t>(hi)], longest[static_cast<size_t>(idx)] + 1);
            best = std::max(best, longest[static_cast<size_t>(hi)]);
        }
    }
    return best;
}

std::vector<std::pair<int, int>> FacePoset::cover_dimension_violations() const {
    std::vector<std::pair<int, int>> bad;
    for (auto [lo, hi] : covers_)
        if (dims_[static_cast<size_t>(hi)] - dims_[static_cast<size_t>(lo)] != 1) bad.emplace_back(lo, hi);
    return bad;
}

const Attachments FacePoset::default_attachments_{{{0, 0}}};

const Attachments& FacePoset::attachments(int a, int b) const {
    if (!less(a, b)) throw ValidationError("attachments: cells are not related");
    auto it = attachments_.find({a, b});
    return it == attachments_.end() ? default_attachments_ : it->second;
}

void FacePoset::set_attachments(int a, int b, Attachments m) {
    if (!less(a, b)) throw ValidationError("set_attachments: cells are not related");
    if (m.disjuncts.empty()) throw ValidationError("set_attachments: empty attachment set");
    attachments_[{a, b}] = std::move(m);
}

bool FacePoset::has_multiple_attachments() const {
    for (const auto& [pair, m] : attachments_) {
        (void)pair;
        if (m.count() > 1) return true;
    }
    return false;
}

bool FacePoset::has_positive_dimensional_attachments() const {
    for (const auto& [pair, m] : attachments_) {
        (void)pair;
        if (m.hom_dim > 0) return true;
    }
    return false;
}

}  // namespace strata
