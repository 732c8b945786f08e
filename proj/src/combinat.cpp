#include "strata/combinat.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

namespace strata::combinat {

SignSymbol SignSymbol::plus(int level) {
    if (level < 1) throw ValidationError("sign symbol level must be >= 1");
    return {SignTag::Plus, level};
}

SignSymbol SignSymbol::minus(int level) {
    if (level < 1) throw ValidationError("sign symbol level must be >= 1");
    return {SignTag::Minus, level};
}

SignSymbol SignSymbol::negated() const {
    switch (tag) {
        case SignTag::Zero: return *this;
        case SignTag::Plus: return {SignTag::Minus, level};
        case SignTag::Minus: return {SignTag::Plus, level};
    }
    return *this;
}

bool SignSymbol::operator<(const SignSymbol& o) const {
    if (level != o.level) return level < o.level;
    return static_cast<int>(tag) < static_cast<int>(o.tag);
}

std::string to_string(const SignSymbol& s) {
    switch (s.tag) {
        case SignTag::Zero: return "0";
        case SignTag::Plus: return "+e" + std::to_string(s.level);
        case SignTag::Minus: return "-e" + std::to_string(s.level);
    }
    return "?";
}

SignSymbol sign_of(std::span<const Rational> x) {
    if (x.empty()) throw ValidationError("sign_of: empty vector (k=0)");
    for (int j = static_cast<int>(x.size()); j >= 1; --j) {
        const Rational& c = x[static_cast<size_t>(j - 1)];
        if (c > 0) return SignSymbol::plus(j);
        if (c < 0) return SignSymbol::minus(j);
    }
    return SignSymbol::zero();
}

bool symbol_leq(const SignSymbol& t, const SignSymbol& s) {
    if (t == s) return true;
    if (s.tag == SignTag::Zero) return false;
    return t.level < s.level;  // Zero has level 0
}

SignVector::SignVector(int n, int k) : n_(n), k_(k) {
    if (n < 1) throw ValidationError("SignVector: n must be >= 1");
    if (k < 1) throw ValidationError("SignVector: k must be >= 1");
    entries_.assign(static_cast<size_t>(n) * (n - 1) / 2, SignSymbol::zero());
}

int SignVector::pair_index(int i, int j) const {
    // pairs (1,2),(1,3),...,(1,n),(2,3),... ; i < j, 1-based
    return (i - 1) * n_ - (i - 1) * i / 2 + (j - i - 1);
}

SignSymbol SignVector::entry(int i, int j) const {
    if (i < 1 || j < 1 || i > n_ || j > n_ || i == j)
        throw ValidationError("SignVector::entry: bad pair");
    if (i < j) return entries_[static_cast<size_t>(pair_index(i, j))];
    return entries_[static_cast<size_t>(pair_index(j, i))].negated();
}

void SignVector::set_entry(int i, int j, SignSymbol s) {
    if (i < 1 || j < 1 || i > n_ || j > n_ || i == j)
        throw ValidationError("SignVector::set_entry: bad pair");
    if (s.level > k_) throw ValidationError("SignVector::set_entry: symbol level exceeds k");
    if (i < j)
        entries_[static_cast<size_t>(pair_index(i, j))] = s;
    else
        entries_[static_cast<size_t>(pair_index(j, i))] = s.negated();
}

PartitionTree PartitionTree::leaf(std::vector<int> elements) {
    if (elements.empty()) throw ValidationError("PartitionTree: empty coincidence class");
    std::sort(elements.begin(), elements.end());
    if (std::adjacent_find(elements.begin(), elements.end()) != elements.end())
        throw ValidationError("PartitionTree: repeated element");
    if (elements.front() < 1) throw ValidationError("PartitionTree: elements must be >= 1");
    PartitionTree t;
    t.depth_ = 0;
    t.elements_ = std::move(elements);
    return t;
}

PartitionTree::PartitionTree(int depth, std::vector<PartitionTree> blocks)
    : depth_(depth), blocks_(std::move(blocks)) {
    if (depth < 1) throw ValidationError("PartitionTree: depth must be >= 1 for a block node");
    if (blocks_.empty()) throw ValidationError("PartitionTree: node needs at least one block");
    for (const PartitionTree& b : blocks_) {
        if (b.depth_ != depth - 1)
            throw ValidationError("PartitionTree: block depth mismatch");
        elements_.insert(elements_.end(), b.elements_.begin(), b.elements_.end());
    }
    std::sort(elements_.begin(), elements_.end());
    if (std::adjacent_find(elements_.begin(), elements_.end()) != elements_.end())
        throw ValidationError("PartitionTree: blocks overlap");
}

bool PartitionTree::is_configuration() const {
    if (depth_ == 0) return elements_.size() == 1;
    return std::all_of(blocks_.begin(), blocks_.end(),
                       [](const PartitionTree& b) { return b.is_configuration(); });
}

int PartitionTree::dimension() const {
    if (depth_ == 0) return 0;
    int d = static_cast<int>(blocks_.size());
    for (const PartitionTree& b : blocks_) d += b.dimension();
    return d;
}

SignSymbol PartitionTree::pair_symbol(int i, int j) const {
    if (i == j) throw ValidationError("pair_symbol: i == j");
    const PartitionTree* node = this;
    while (node->depth_ > 0) {
        int bi = -1, bj = -1;
        for (size_t b = 0; b < node->blocks_.size(); ++b) {
            const auto& el = node->blocks_[b].elements_;
            if (std::binary_search(el.begin(), el.end(), i)) bi = static_cast<int>(b);
            if (std::binary_search(el.begin(), el.end(), j)) bj = static_cast<int>(b);
        }
        if (bi < 0 || bj < 0) throw ValidationError("pair_symbol: element not in tree");
        if (bi != bj)
            return bi < bj ? SignSymbol::plus(node->depth_) : SignSymbol::minus(node->depth_);
        node = &node->blocks_[static_cast<size_t>(bi)];
    }
    const auto& el = node->elements_;
    if (!std::binary_search(el.begin(), el.end(), i) ||
        !std::binary_search(el.begin(), el.end(), j))
        throw ValidationError("pair_symbol: element not in tree");
    return SignSymbol::zero();
}

std::string PartitionTree::to_string() const {
    std::ostringstream out;
    if (depth_ == 0) {
        out << '{';
        for (size_t i = 0; i < elements_.size(); ++i) {
            if (i) out << ',';
            out << elements_[i];
        }
        out << '}';
    } else {
        out << '[';
        for (size_t b = 0; b < blocks_.size(); ++b) {
            if (b) out << ',';
            out << blocks_[b].to_string();
        }
        out << ']';
    }
    return out.str();
}

namespace {

PartitionTree parse_node(std::string_view text, size_t& pos) {
    if (pos >= text.size()) throw ValidationError("tree parse: unexpected end of input");
    if (text[pos] == '{') {
        ++pos;
        std::vector<int> elements;
        while (pos < text.size() && text[pos] != '}') {
            if (text[pos] == ',') { ++pos; continue; }
            size_t start = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            if (pos == start) throw ValidationError("tree parse: expected element index");
            elements.push_back(std::stoi(std::string(text.substr(start, pos - start))));
        }
        if (pos >= text.size()) throw ValidationError("tree parse: unterminated '{'");
        ++pos;  // '}'
        return PartitionTree::leaf(std::move(elements));
    }
    if (text[pos] == '[') {
        ++pos;
        std::vector<PartitionTree> blocks;
        while (pos < text.size() && text[pos] != ']') {
            if (text[pos] == ',') { ++pos; continue; }
            blocks.push_back(parse_node(text, pos));
        }
        if (pos >= text.size()) throw ValidationError("tree parse: unterminated '['");
        ++pos;  // ']'
        if (blocks.empty()) throw ValidationError("tree parse: empty block list");
        const int depth = blocks.front().depth() + 1;
        return PartitionTree(depth, std::move(blocks));
    }
    throw ValidationError("tree parse: expected '[' or '{'");
}

}  // namespace

PartitionTree PartitionTree::parse(std::string_view text) {
    size_t pos = 0;
    PartitionTree t = parse_node(text, pos);
    if (pos != text.size()) throw ValidationError("tree parse: trailing input");
    return t;
}

PartitionTree PartitionTree::relabeled(const std::vector<int>& image_of) const {
    auto map_label = [&](int x) {
        if (x < 0 || static_cast<size_t>(x) >= image_of.size() || image_of[static_cast<size_t>(x)] < 1)
            throw ValidationError("relabeled: label outside map domain");
        return image_of[static_cast<size_t>(x)];
    };
    if (depth_ == 0) {
        std::vector<int> el;
        el.reserve(elements_.size());
        for (int x : elements_) el.push_back(map_label(x));
        return leaf(std::move(el));
    }
    std::vector<PartitionTree> blocks;
    blocks.reserve(blocks_.size());
    for (const PartitionTree& b : blocks_) blocks.push_back(b.relabeled(image_of));
    return PartitionTree(depth_, std::move(blocks));
}

bool PartitionTree::operator==(const PartitionTree& o) const {
    return depth_ == o.depth_ && elements_ == o.elements_ && blocks_ == o.blocks_;
}

namespace {

void fill_entries(const PartitionTree& node, SignVector& sv) {
    if (node.depth() == 0) return;
    const auto& blocks = node.blocks();
    for (size_t a = 0; a < blocks.size(); ++a) {
        for (size_t b = a + 1; b < blocks.size(); ++b) {
            for (int i : blocks[a].elements())
                for (int j : blocks[b].elements())
                    sv.set_entry(i, j, SignSymbol::plus(node.depth()));
        }
        fill_entries(blocks[a], sv);
    }
}

}  // namespace

SignVector tree_to_signvector(const PartitionTree& t) {
    const auto& el = t.elements();
    const int n = static_cast<int>(el.size());
    for (int i = 0; i < n; ++i)
        if (el[static_cast<size_t>(i)] != i + 1)
            throw ValidationError("tree_to_signvector: index set must be {1..n}");
    if (t.depth() < 1) throw ValidationError("tree_to_signvector: depth must be >= 1");
    SignVector sv(n, t.depth());
    fill_entries(t, sv);
    return sv;
}

namespace {

// Builds the level-m node on `set`, or nullopt when the sign data is contradictory.
std::optional<PartitionTree> build_tree(const SignVector& sv, const std::vector<int>& set, int m) {
    if (m == 0) return PartitionTree::leaf(set);

    const int sz = static_cast<int>(set.size());
    // Group elements that stay together below level m.
    std::vector<int> cls(static_cast<size_t>(sz));
    std::iota(cls.begin(), cls.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (cls[static_cast<size_t>(x)] != x) {
            cls[static_cast<size_t>(x)] = cls[static_cast<size_t>(cls[static_cast<size_t>(x)])];
            x = cls[static_cast<size_t>(x)];
        }
        return x;
    };
    for (int a = 0; a < sz; ++a)
        for (int b = a + 1; b < sz; ++b)
            if (sv.entry(set[static_cast<size_t>(a)], set[static_cast<size_t>(b)]).level < m)
                cls[static_cast<size_t>(find(a))] = find(b);

    std::map<int, std::vector<int>> groups;  // root -> members (ascending)
    for (int a = 0; a < sz; ++a) groups[find(a)].push_back(set[static_cast<size_t>(a)]);

    // Transitivity of "together": a merged pair must itself be below level m.
    for (const auto& [root, members] : groups) {
        (void)root;
        for (size_t a = 0; a < members.size(); ++a)
            for (size_t b = a + 1; b < members.size(); ++b)
                if (sv.entry(members[a], members[b]).level >= m) return std::nullopt;
    }

    std::vector<std::vector<int>> classes;
    classes.reserve(groups.size());
    for (auto& [root, members] : groups) {
        (void)root;
        classes.push_back(std::move(members));
    }

    // Order the classes: i before j iff entry(i,j) = Plus(m).  All cross pairs
    // must agree and the resulting tournament must be a total order.
    const int r = static_cast<int>(classes.size());
    std::vector<int> wins(static_cast<size_t>(r), 0);
    std::vector<std::vector<bool>> before(static_cast<size_t>(r),
                                          std::vector<bool>(static_cast<size_t>(r), false));
    for (int a = 0; a < r; ++a) {
        for (int b = a + 1; b < r; ++b) {
            bool a_first = false, b_first = false;
            for (int i : classes[static_cast<size_t>(a)]) {
                for (int j : classes[static_cast<size_t>(b)]) {
                    SignSymbol s = sv.entry(i, j);
                    if (s.level != m) return std::nullopt;  // unreachable after grouping, kept as guard
                    (s.tag == SignTag::Plus ? a_first : b_first) = true;
                }
            }
            if (a_first == b_first) return std::nullopt;  // mixed directions
            before[static_cast<size_t>(a)][static_cast<size_t>(b)] = a_first;
            before[static_cast<size_t>(b)][static_cast<size_t>(a)] = b_first;
            ++wins[static_cast<size_t>(a_first ? a : b)];
        }
    }
    std::vector<int> order(static_cast<size_t>(r));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return wins[static_cast<size_t>(a)] > wins[static_cast<size_t>(b)];
    });
    for (int a = 0; a < r; ++a)
        for (int b = a + 1; b < r; ++b)
            if (!before[static_cast<size_t>(order[static_cast<size_t>(a)])]
                       [static_cast<size_t>(order[static_cast<size_t>(b)])])
                return std::nullopt;  // 3-cycle in the class tournament

    std::vector<PartitionTree> blocks;
    blocks.reserve(static_cast<size_t>(r));
    for (int a = 0; a < r; ++a) {
        auto sub = build_tree(sv, classes[static_cast<size_t>(order[static_cast<size_t>(a)])], m - 1);
        if (!sub) return std::nullopt;
        blocks.push_back(std::move(*sub));
    }
    return PartitionTree(m, std::move(blocks));
}

}  // namespace

std::optional<PartitionTree> signvector_to_tree(const SignVector& sv) {
    std::vector<int> set(static_cast<size_t>(sv.n()));
    std::iota(set.begin(), set.end(), 1);
    return build_tree(sv, set, sv.k());
}

}  // namespace strata::combinat
