#include "strata/sphere.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <thread>

#include "strata/oracle.hpp"

namespace strata::sphere {

using combinat::PartitionTree;

FacePoset sphere_poset(int n, int k, const arrangement::ResourceLimits& limits, int jobs) {
    if (n < 2) throw ValidationError("sphere_poset: n must be >= 2");
    if (k < 1) throw ValidationError("sphere_poset: k must be >= 1");

    const BigInt projected =
        arrangement::count_cells(n, k, arrangement::CellFilter::Configuration) +
        n * arrangement::count_cells(n - 1, k, arrangement::CellFilter::Configuration);
    if (projected > limits.max_cells) {
        std::ostringstream msg;
        msg << "sphere poset refused for n=" << n << ", k=" << k << ": projected " << projected
            << " cells against limit " << limits.max_cells;
        throw ResourceError(msg.str(), projected.str());
    }

    std::vector<PartitionTree> type_b =
        arrangement::enumerate_cells(n, k, arrangement::CellFilter::Configuration, limits);

    // TypeA trees on {1..n}\{ell}: enumerate on n-1 points and shift past ell.
    std::vector<std::vector<PartitionTree>> type_a(static_cast<size_t>(n));
    {
        std::vector<PartitionTree> base =
            arrangement::enumerate_cells(n - 1, k, arrangement::CellFilter::Configuration, limits);
        for (int ell = 1; ell <= n; ++ell) {
            std::vector<int> shift(static_cast<size_t>(n), 0);
            for (int i = 1; i <= n - 1; ++i) shift[static_cast<size_t>(i)] = i < ell ? i : i + 1;
            auto& bucket = type_a[static_cast<size_t>(ell - 1)];
            bucket.reserve(base.size());
            for (const PartitionTree& t : base) bucket.push_back(t.relabeled(shift));
        }
    }

    const int nb = static_cast<int>(type_b.size());
    const int per_ell = static_cast<int>(type_a[0].size());
    const int total = nb + n * per_ell;

    std::vector<FacePoset::Cell> cells;
    cells.reserve(static_cast<size_t>(total));
    for (PartitionTree& t : type_b) cells.emplace_back(SphereCell::type_b(std::move(t)));
    for (int ell = 1; ell <= n; ++ell)
        for (PartitionTree& t : type_a[static_cast<size_t>(ell - 1)])
            cells.emplace_back(SphereCell::type_a(ell, std::move(t)));

    auto cell_at = [&](int id) -> const SphereCell& { return std::get<SphereCell>(cells[static_cast<size_t>(id)]); };

    BitMatrix lt(total);
    for (int a = 0; a < nb; ++a)
        for (int b = 0; b < nb; ++b)
            if (a != b && arrangement::face_leq(cell_at(a).tree, cell_at(b).tree) &&
                !(cell_at(a).tree == cell_at(b).tree))
                lt.set(a, b);
    for (int ell = 0; ell < n; ++ell) {
        const int base = nb + ell * per_ell;
        for (int a = 0; a < per_ell; ++a)
            for (int b = 0; b < per_ell; ++b)
                if (a != b && arrangement::face_leq(cell_at(base + a).tree, cell_at(base + b).tree))
                    lt.set(base + a, base + b);
    }

    // Cross-type verdicts from the oracle; rows are independent, workers write
    // disjoint slices of a preallocated table, so the result is deterministic.
    // Per pair we keep one canonical facet disjunct per boundary component:
    // disjuncts across two or more levels connect around the cube corners
    // into a single component, same-level disjuncts stay separated by sign.
    // f levels touched on both signs, with no one-sided level, make the
    // region a sphere S^{f-1}; hom_dim flags the non-discrete cases.
    const int na = n * per_ell;
    std::vector<Attachments> below(static_cast<size_t>(na) * static_cast<size_t>(nb));
    auto sweep = [&](int lo, int hi) {
        for (int ai = lo; ai < hi; ++ai) {
            const SphereCell& a = cell_at(nb + ai);
            for (int b = 0; b < nb; ++b) {
                auto raw = oracle::feasible_disjuncts(cell_at(b).tree, a.ell, a.tree);
                Attachments& m = below[static_cast<size_t>(ai) * nb + static_cast<size_t>(b)];
                if (raw.empty()) continue;
                std::map<int, int> signs_per_level;
                for (const auto& [level, sign] : raw) {
                    (void)sign;
                    ++signs_per_level[level];
                }
                const bool single_level = signs_per_level.size() == 1;
                const bool one_sided_level =
                    std::any_of(signs_per_level.begin(), signs_per_level.end(),
                                [](const auto& e) { return e.second == 1; });
                if (single_level) {
                    m.disjuncts = raw;  // one component per sign
                } else if (one_sided_level) {
                    m.disjuncts = {raw.front()};  // connected around a cube corner
                } else {
                    m.disjuncts = {raw.front()};
                    m.hom_dim = static_cast<int>(signs_per_level.size()) - 1;
                }
            }
        }
    };
    const int workers = std::max(1, std::min(jobs, na));
    if (workers == 1) {
        sweep(0, na);
    } else {
        std::vector<std::thread> pool;
        const int chunk = (na + workers - 1) / workers;
        for (int w = 0; w < workers; ++w) {
            int lo = w * chunk, hi = std::min(na, lo + chunk);
            if (lo < hi) pool.emplace_back(sweep, lo, hi);
        }
        for (auto& t : pool) t.join();
    }
    for (int ai = 0; ai < na; ++ai)
        for (int b = 0; b < nb; ++b)
            if (below[static_cast<size_t>(ai) * nb + static_cast<size_t>(b)].count() > 0)
                lt.set(nb + ai, b);

    // The oracle verdicts must already be transitively consistent with the
    // combinatorial part of the order; anything else is a defect worth a stop.
    {
        BitMatrix closed = lt;
        closed.transitive_close();
        if (!(closed == lt))
            throw std::logic_error("sphere_poset: oracle verdicts are not transitive");
    }

    FacePoset poset(Space::Sphere, n, k, std::move(cells), std::move(lt));
    for (int ai = 0; ai < na; ++ai)
        for (int b = 0; b < nb; ++b) {
            Attachments& m = below[static_cast<size_t>(ai) * nb + static_cast<size_t>(b)];
            if (m.count() > 0) poset.set_attachments(nb + ai, b, std::move(m));
        }
    return poset;
}

SphereCell act(const Permutation& sigma, const SphereCell& c) {
    const auto map = sigma.as_relabel_map();
    if (c.variant == SphereCell::Variant::TypeB) return SphereCell::type_b(c.tree.relabeled(map));
    return SphereCell::type_a(sigma(c.ell), c.tree.relabeled(map));
}

FacePoset::Cell act(const Permutation& sigma, const FacePoset::Cell& c) {
    if (std::holds_alternative<PartitionTree>(c))
        return std::get<PartitionTree>(c).relabeled(sigma.as_relabel_map());
    return act(sigma, std::get<SphereCell>(c));
}

std::vector<std::vector<int>> action_tables(const FacePoset& poset) {
    std::map<std::string, int> id_of;
    for (int i = 0; i < poset.size(); ++i) id_of[poset.cell_label(i)] = i;

    std::vector<std::vector<int>> tables;
    for (const Permutation& sigma : symmetric_group(poset.n())) {
        std::vector<int> table(static_cast<size_t>(poset.size()), -1);
        for (int i = 0; i < poset.size(); ++i) {
            FacePoset::Cell image = act(sigma, poset.cell(i));
            std::string key = std::visit([](const auto& x) { return x.to_string(); }, image);
            auto it = id_of.find(key);
            if (it == id_of.end())
                throw ValidationError("action_tables: the action does not permute the cells");
            table[static_cast<size_t>(i)] = it->second;
        }
        tables.push_back(std::move(table));
    }
    return tables;
}

OrbitReport orbits(const FacePoset& poset) {
    const auto tables = action_tables(poset);
    OrbitReport report;
    report.free = true;

    for (size_t g = 0; g < tables.size(); ++g) {
        bool is_id = true;
        for (int i = 0; i < poset.size(); ++i)
            if (tables[g][static_cast<size_t>(i)] != i) { is_id = false; break; }
        if (is_id) continue;
        for (int i = 0; i < poset.size(); ++i)
            if (tables[g][static_cast<size_t>(i)] == i) {
                report.free = false;
                report.fixed_cells.emplace_back(i, static_cast<int>(g));
            }
    }

    std::vector<int> root(static_cast<size_t>(poset.size()));
    for (int i = 0; i < poset.size(); ++i) root[static_cast<size_t>(i)] = i;
    std::function<int(int)> find = [&](int x) {
        while (root[static_cast<size_t>(x)] != x) {
            root[static_cast<size_t>(x)] = root[static_cast<size_t>(root[static_cast<size_t>(x)])];
            x = root[static_cast<size_t>(x)];
        }
        return x;
    };
    for (const auto& table : tables)
        for (int i = 0; i < poset.size(); ++i) {
            int a = find(i), b = find(table[static_cast<size_t>(i)]);
            if (a != b) root[static_cast<size_t>(std::max(a, b))] = std::min(a, b);
        }
    std::map<int, std::vector<int>> buckets;
    for (int i = 0; i < poset.size(); ++i) buckets[find(i)].push_back(i);
    for (auto& [r, members] : buckets) {
        (void)r;
        report.orbits.push_back(std::move(members));
    }
    return report;
}

}  // namespace strata::sphere
