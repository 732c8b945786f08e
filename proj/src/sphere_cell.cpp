#include "strata/sphere_cell.hpp"

#include <algorithm>
#include <numeric>

namespace strata::sphere {

SphereCell SphereCell::type_b(combinat::PartitionTree t) {
    if (!t.is_configuration()) throw ValidationError("SphereCell: configuration tree required");
    return {Variant::TypeB, 0, std::move(t)};
}

SphereCell SphereCell::type_a(int ell, combinat::PartitionTree t) {
    if (!t.is_configuration()) throw ValidationError("SphereCell: configuration tree required");
    if (ell < 1) throw ValidationError("SphereCell: ell must be >= 1");
    const auto& el = t.elements();
    if (std::binary_search(el.begin(), el.end(), ell))
        throw ValidationError("SphereCell: basepoint index must be outside the tree");
    return {Variant::TypeA, ell, std::move(t)};
}

std::string SphereCell::to_string() const {
    if (variant == Variant::TypeB) return "B:" + tree.to_string();
    return "A" + std::to_string(ell) + ":" + tree.to_string();
}

bool SphereCell::operator==(const SphereCell& o) const {
    return variant == o.variant && ell == o.ell && tree == o.tree;
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (int v : images_) {
        if (v < 1 || v > static_cast<int>(images_.size()) || seen[static_cast<size_t>(v - 1)])
            throw ValidationError("Permutation: images must be a bijection of 1..n");
        seen[static_cast<size_t>(v - 1)] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> im(static_cast<size_t>(n));
    std::iota(im.begin(), im.end(), 1);
    return Permutation(std::move(im));
}

int Permutation::operator()(int i) const {
    if (i < 1 || i > n()) throw ValidationError("Permutation: index out of range");
    return images_[static_cast<size_t>(i - 1)];
}

Permutation Permutation::inverse() const {
    std::vector<int> im(images_.size());
    for (int i = 1; i <= n(); ++i) im[static_cast<size_t>(images_[static_cast<size_t>(i - 1)] - 1)] = i;
    return Permutation(std::move(im));
}

Permutation Permutation::compose(const Permutation& first) const {
    if (first.n() != n()) throw ValidationError("Permutation: size mismatch");
    std::vector<int> im(images_.size());
    for (int i = 1; i <= n(); ++i) im[static_cast<size_t>(i - 1)] = (*this)(first(i));
    return Permutation(std::move(im));
}

bool Permutation::is_identity() const {
    for (int i = 1; i <= n(); ++i)
        if ((*this)(i) != i) return false;
    return true;
}

std::vector<int> Permutation::as_relabel_map() const {
    std::vector<int> map(images_.size() + 1, 0);
    for (int i = 1; i <= n(); ++i) map[static_cast<size_t>(i)] = images_[static_cast<size_t>(i - 1)];
    return map;
}

std::vector<Permutation> symmetric_group(int n) {
    if (n < 1) throw ValidationError("symmetric_group: n must be >= 1");
    std::vector<int> word(static_cast<size_t>(n));
    std::iota(word.begin(), word.end(), 1);
    std::vector<Permutation> out;
    do {
        out.emplace_back(word);
    } while (std::next_permutation(word.begin(), word.end()));
    return out;
}

}  // namespace strata::sphere
