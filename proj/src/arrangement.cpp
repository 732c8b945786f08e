#include "strata/arrangement.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace strata::arrangement {

using combinat::PartitionTree;

namespace {

void check_nk(int n, int k) {
    if (n < 1) throw ValidationError("n must be >= 1");
    if (k < 1) throw ValidationError("k must be >= 1");
}

BigInt binomial(int n, int r) {
    BigInt b = 1;
    for (int i = 0; i < r; ++i) b = b * (n - i) / (i + 1);
    return b;
}

// W(d, m): trees of depth d on an m-element set (m=0 allowed for the sequence
// recursion over ordered partitions); first block of size j chosen C(m,j) ways.
BigInt count_rec(int d, int m, CellFilter filter, std::map<std::pair<int, int>, BigInt>& memo) {
    if (d == 0) return filter == CellFilter::Configuration ? BigInt(m == 1 ? 1 : 0) : BigInt(1);
    if (m == 0) return 1;  // empty tail of an ordered partition
    auto key = std::make_pair(d, m);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    BigInt total = 0;
    for (int j = 1; j <= m; ++j) {
        BigInt block = count_rec(d - 1, j, filter, memo);
        if (block == 0) continue;
        total += binomial(m, j) * block * count_rec(d, m - j, filter, memo);
    }
    memo[key] = total;
    return total;
}

void enumerate_rec(const std::vector<int>& set, int depth, CellFilter filter,
                   std::vector<PartitionTree>& out);

// All ordered partitions of `set`, first block scanned over nonempty subsets
// in increasing bitmask order (bit i = i-th smallest element).
void partitions_rec(const std::vector<int>& set, int depth, CellFilter filter,
                    std::vector<PartitionTree>& prefix, std::vector<std::vector<PartitionTree>>& out) {
    if (set.empty()) {
        out.push_back(prefix);
        return;
    }
    const int m = static_cast<int>(set.size());
    for (unsigned mask = 1; mask < (1u << m); ++mask) {
        std::vector<int> block, rest;
        for (int i = 0; i < m; ++i)
            ((mask >> i) & 1u ? block : rest).push_back(set[static_cast<size_t>(i)]);
        std::vector<PartitionTree> subtrees;
        enumerate_rec(block, depth - 1, filter, subtrees);
        for (const PartitionTree& sub : subtrees) {
            prefix.push_back(sub);
            partitions_rec(rest, depth, filter, prefix, out);
            prefix.pop_back();
        }
    }
}

void enumerate_rec(const std::vector<int>& set, int depth, CellFilter filter,
                   std::vector<PartitionTree>& out) {
    if (depth == 0) {
        if (filter == CellFilter::Configuration && set.size() != 1) return;
        out.push_back(PartitionTree::leaf(set));
        return;
    }
    std::vector<PartitionTree> prefix;
    std::vector<std::vector<PartitionTree>> blockings;
    partitions_rec(set, depth, filter, prefix, blockings);
    for (auto& blocks : blockings) out.push_back(PartitionTree(depth, std::move(blocks)));
}

}  // namespace

BigInt count_cells(int n, int k, CellFilter filter) {
    check_nk(n, k);
    std::map<std::pair<int, int>, BigInt> memo;
    return count_rec(k, n, filter, memo);
}

std::vector<PartitionTree> enumerate_cells(int n, int k, CellFilter filter,
                                           const ResourceLimits& limits) {
    check_nk(n, k);
    BigInt projected = count_cells(n, k, filter);
    if (n > 30 || k > 30 || n > limits.max_n || k > limits.max_k || projected > limits.max_cells) {
        std::ostringstream msg;
        msg << "enumeration refused for n=" << n << ", k=" << k << ": projected " << projected
            << " cells against limits (n<=" << limits.max_n << ", k<=" << limits.max_k
            << ", cells<=" << limits.max_cells << ")";
        throw ResourceError(msg.str(), projected.str());
    }
    std::vector<int> set(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) set[static_cast<size_t>(i)] = i + 1;
    std::vector<PartitionTree> out;
    enumerate_rec(set, k, filter, out);
    return out;
}

bool face_leq(const PartitionTree& a, const PartitionTree& b) {
    if (a.elements() != b.elements() || a.depth() != b.depth())
        throw ValidationError("face_leq: trees must share index set and depth");
    const auto& el = a.elements();
    for (size_t i = 0; i < el.size(); ++i)
        for (size_t j = i + 1; j < el.size(); ++j)
            if (!combinat::symbol_leq(a.pair_symbol(el[i], el[j]), b.pair_symbol(el[i], el[j])))
                return false;
    return true;
}

namespace {

FacePoset build_poset(int n, int k, CellFilter filter, const ResourceLimits& limits) {
    std::vector<PartitionTree> cells = enumerate_cells(n, k, filter, limits);
    const int sz = static_cast<int>(cells.size());
    BitMatrix lt(sz);
    for (int a = 0; a < sz; ++a)
        for (int b = 0; b < sz; ++b)
            if (a != b && face_leq(cells[static_cast<size_t>(a)], cells[static_cast<size_t>(b)]) &&
                !(cells[static_cast<size_t>(a)] == cells[static_cast<size_t>(b)]))
                lt.set(a, b);
    std::vector<FacePoset::Cell> payload(cells.begin(), cells.end());
    return FacePoset(Space::Euclidean, n, k, std::move(payload), std::move(lt));
}

}  // namespace

FacePoset salvetti_poset(int n, int k, const ResourceLimits& limits) {
    return build_poset(n, k, CellFilter::Configuration, limits);
}

FacePoset full_poset(int n, int k, const ResourceLimits& limits) {
    return build_poset(n, k, CellFilter::All, limits);
}

}  // namespace strata::arrangement
