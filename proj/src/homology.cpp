#include "strata/homology.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace strata::homology {

using simplicial::Chain;
using simplicial::OrbitComplex;
using simplicial::SimplicialComplex;

IntegerMatrix IntegerMatrix::identity(int n) {
    IntegerMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntegerMatrix IntegerMatrix::multiply(const IntegerMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw ValidationError("IntegerMatrix: dimension mismatch in multiply");
    IntegerMatrix out(rows_, rhs.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const BigInt& a = at(i, k);
            if (a == 0) continue;
            for (int j = 0; j < rhs.cols_; ++j) {
                const BigInt& b = rhs.at(k, j);
                if (b != 0) out.at(i, j) += a * b;
            }
        }
    return out;
}

bool IntegerMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const BigInt& v) { return v == 0; });
}

IntegerMatrix SmithResult::diagonal(int rows, int cols) const {
    IntegerMatrix d(rows, cols);
    for (size_t i = 0; i < factors.size(); ++i) d.at(static_cast<int>(i), static_cast<int>(i)) = factors[i];
    return d;
}

namespace {

BigInt round_quotient(const BigInt& a, const BigInt& b) {
    BigInt q = a / b;
    BigInt r = a - q * b;
    if (2 * abs(r) > abs(b)) q += ((r > 0) == (b > 0)) ? 1 : -1;
    return q;
}

/// d_1 | d_2 | ... closure of a diagonal by pairwise gcd/lcm replacement.
void normalize_chain(std::vector<BigInt>& d) {
    for (BigInt& v : d) v = abs(v);
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < d.size(); ++i) {
            for (size_t j = i + 1; j < d.size(); ++j) {
                if (d[j] % d[i] == 0) continue;
                BigInt g = gcd(d[i], d[j]);
                d[j] = d[i] / g * d[j];
                d[i] = g;
                changed = true;
            }
        }
    }
}

}  // namespace

SmithResult smith_normal_form(const IntegerMatrix& input, bool with_transforms) {
    IntegerMatrix m = input;
    const int R = m.rows(), C = m.cols();

    IntegerMatrix U, V, Ui, Vi;
    if (with_transforms) {
        U = IntegerMatrix::identity(R);
        Ui = IntegerMatrix::identity(R);
        V = IntegerMatrix::identity(C);
        Vi = IntegerMatrix::identity(C);
    }

    auto row_sub = [&](int i, int t, const BigInt& q) {  // row_i -= q * row_t
        for (int j = 0; j < C; ++j) m.at(i, j) -= q * m.at(t, j);
        if (with_transforms) {
            for (int j = 0; j < R; ++j) U.at(i, j) -= q * U.at(t, j);
            for (int j = 0; j < R; ++j) Ui.at(j, t) += q * Ui.at(j, i);
        }
    };
    auto col_sub = [&](int j, int t, const BigInt& q) {  // col_j -= q * col_t
        for (int i = 0; i < R; ++i) m.at(i, j) -= q * m.at(i, t);
        if (with_transforms) {
            for (int i = 0; i < C; ++i) V.at(i, j) -= q * V.at(i, t);
            for (int i = 0; i < C; ++i) Vi.at(t, i) += q * Vi.at(j, i);
        }
    };
    auto row_swap = [&](int i, int t) {
        if (i == t) return;
        for (int j = 0; j < C; ++j) std::swap(m.at(i, j), m.at(t, j));
        if (with_transforms) {
            for (int j = 0; j < R; ++j) std::swap(U.at(i, j), U.at(t, j));
            for (int j = 0; j < R; ++j) std::swap(Ui.at(j, i), Ui.at(j, t));
        }
    };
    auto col_swap = [&](int j, int t) {
        if (j == t) return;
        for (int i = 0; i < R; ++i) std::swap(m.at(i, j), m.at(i, t));
        if (with_transforms) {
            for (int i = 0; i < C; ++i) std::swap(V.at(i, j), V.at(i, t));
            for (int i = 0; i < C; ++i) std::swap(Vi.at(j, i), Vi.at(t, i));
        }
    };
    auto row_negate = [&](int t) {
        for (int j = 0; j < C; ++j) m.at(t, j) = -m.at(t, j);
        if (with_transforms) {
            for (int j = 0; j < R; ++j) U.at(t, j) = -U.at(t, j);
            for (int j = 0; j < R; ++j) Ui.at(j, t) = -Ui.at(j, t);
        }
    };

    SmithResult result;
    int t = 0;
    while (t < R && t < C) {
        // Minimum-absolute-value pivot in the trailing submatrix.
        int pr = -1, pc = -1;
        for (int i = t; i < R; ++i)
            for (int j = t; j < C; ++j)
                if (m.at(i, j) != 0 &&
                    (pr < 0 || abs(m.at(i, j)) < abs(m.at(pr, pc))))
                    pr = i, pc = j;
        if (pr < 0) break;
        row_swap(pr, t);
        col_swap(pc, t);

        while (true) {
            bool dirty = false;
            for (int i = t + 1; i < R; ++i) {
                if (m.at(i, t) == 0) continue;
                row_sub(i, t, round_quotient(m.at(i, t), m.at(t, t)));
                if (m.at(i, t) != 0) {  // remainder strictly smaller than pivot
                    row_swap(i, t);
                    dirty = true;
                    break;
                }
            }
            if (dirty) continue;
            for (int j = t + 1; j < C; ++j) {
                if (m.at(t, j) == 0) continue;
                col_sub(j, t, round_quotient(m.at(t, j), m.at(t, t)));
                if (m.at(t, j) != 0) {
                    col_swap(j, t);
                    dirty = true;
                    break;
                }
            }
            if (dirty) continue;
            // Pivot must divide the trailing block for the divisibility chain.
            int bi = -1;
            for (int i = t + 1; i < R && bi < 0; ++i)
                for (int j = t + 1; j < C; ++j)
                    if (m.at(i, j) % m.at(t, t) != 0) {
                        bi = i;
                        break;
                    }
            if (bi < 0) break;
            row_sub(t, bi, BigInt(-1));  // row_t += row_bi, reopens the clearing loop
        }
        if (m.at(t, t) < 0) row_negate(t);
        result.factors.push_back(m.at(t, t));
        ++t;
    }

    result.rank = static_cast<int>(result.factors.size());
    if (with_transforms) result.transforms = SmithTransforms{U, V, Ui, Vi};
    return result;
}

namespace {

/// Row-major sparse matrix supporting the elimination moves; used for the big
/// boundary matrices where dense storage would be wasteful.
class SparseEliminator {
public:
    SparseEliminator(int rows, int cols)
        : rows_(static_cast<size_t>(rows)), col_rows_(static_cast<size_t>(cols)) {}

    void add_entry(int r, int c, long long v) {
        if (v == 0) return;
        BigInt& slot = rows_[static_cast<size_t>(r)][c];
        slot += v;
        if (slot == 0)
            erase(r, c);
        else
            col_insert(r, c);
    }

    /// Diagonal entries of an equivalent diagonal matrix (not yet normalized).
    std::vector<BigInt> eliminate() {
        by_size_.clear();
        for (size_t c = 0; c < col_rows_.size(); ++c)
            if (!col_rows_[c].empty()) by_size_.insert({static_cast<int>(col_rows_[c].size()), static_cast<int>(c)});
        std::vector<BigInt> diag;
        while (true) {
            auto [pr, pc] = pick_pivot();
            if (pr < 0) break;
            reduce_at(pr, pc, diag);
        }
        return diag;
    }

private:
    void erase(int r, int c) {
        rows_[static_cast<size_t>(r)].erase(c);
        col_erase(r, c);
    }

    void col_insert(int r, int c) {
        auto& col = col_rows_[static_cast<size_t>(c)];
        const int before = static_cast<int>(col.size());
        if (col.insert(r).second) {
            if (before) by_size_.erase({before, c});
            by_size_.insert({before + 1, c});
        }
    }

    void col_erase(int r, int c) {
        auto& col = col_rows_[static_cast<size_t>(c)];
        const int before = static_cast<int>(col.size());
        if (col.erase(r)) {
            by_size_.erase({before, c});
            if (before > 1) by_size_.insert({before - 1, c});
        }
    }

    void set_value(int r, int c, BigInt v) {
        if (v == 0) {
            erase(r, c);
            return;
        }
        rows_[static_cast<size_t>(r)][c] = std::move(v);
        col_insert(r, c);
    }

    // Scan columns sparsest-first; a ±1 entry is globally minimal, so the
    // first one ends the search (minimum-absolute-value pivoting in the
    // common case without a full sweep).
    std::pair<int, int> pick_pivot() const {
        int pr = -1, pc = -1;
        BigInt best_val;
        size_t best_fill = 0;
        for (const auto& [size, c] : by_size_) {
            (void)size;
            for (int r : col_rows_[static_cast<size_t>(c)]) {
                const BigInt a = abs(rows_[static_cast<size_t>(r)].at(c));
                const size_t fill =
                    (rows_[static_cast<size_t>(r)].size() - 1) * (col_rows_[static_cast<size_t>(c)].size() - 1);
                bool better = pr < 0 || a < best_val || (a == best_val && fill < best_fill);
                if (better) {
                    pr = r;
                    pc = c;
                    best_val = a;
                    best_fill = fill;
                }
            }
            if (pr >= 0 && best_val == 1) return {pr, pc};
        }
        return {pr, pc};
    }

    // row_i -= q * row_r
    void row_combine(int i, int r, const BigInt& q) {
        if (q == 0) return;
        for (const auto& [c, v] : rows_[static_cast<size_t>(r)]) {
            BigInt& slot = rows_[static_cast<size_t>(i)][c];
            slot -= q * v;
            if (slot == 0)
                erase(i, c);
            else
                col_rows_[static_cast<size_t>(c)].insert(i);
        }
    }

    void reduce_at(int pr, int pc, std::vector<BigInt>& diag) {
        while (true) {
            BigInt pivot = rows_[static_cast<size_t>(pr)].at(pc);
            // Clear the pivot column with row operations (Euclid descent; a
            // nonzero remainder becomes the new, strictly smaller pivot).
            while (col_rows_[static_cast<size_t>(pc)].size() > 1) {
                int other = -1;
                for (int r : col_rows_[static_cast<size_t>(pc)])
                    if (r != pr) {
                        other = r;
                        break;
                    }
                BigInt val = rows_[static_cast<size_t>(other)].at(pc);
                row_combine(other, pr, round_quotient(val, pivot));
                auto it = rows_[static_cast<size_t>(other)].find(pc);
                if (it != rows_[static_cast<size_t>(other)].end()) {
                    pr = other;
                    pivot = it->second;
                }
            }
            // Column clean: clearing the pivot row via column ops only touches
            // row pr, since the pivot column has a single entry left.
            int bad_col = -1;
            std::vector<std::pair<int, BigInt>> row_copy(rows_[static_cast<size_t>(pr)].begin(),
                                                         rows_[static_cast<size_t>(pr)].end());
            for (const auto& [c, v] : row_copy) {
                if (c == pc) continue;
                BigInt rem = v - round_quotient(v, pivot) * pivot;
                set_value(pr, c, rem);
                if (rem != 0 && bad_col < 0) bad_col = c;
            }
            if (bad_col >= 0) {
                pc = bad_col;  // smaller entry; loop back and re-clear its column
                continue;
            }
            diag.push_back(abs(pivot));
            erase(pr, pc);
            return;
        }
    }

    std::vector<std::map<int, BigInt>> rows_;
    std::vector<std::set<int>> col_rows_;
    std::set<std::pair<int, int>> by_size_;  // (column size, column)
};

int sign_of_position(size_t i) { return (i % 2 == 0) ? 1 : -1; }

}  // namespace

IntegerMatrix boundary_matrix(const SimplicialComplex& c, int d) {
    if (d < 1 || d > c.dim()) throw ValidationError("boundary_matrix: degree out of range");
    const auto& faces = c.simplices[static_cast<size_t>(d - 1)];
    const auto& cells = c.simplices[static_cast<size_t>(d)];
    std::map<Chain, int> face_index;
    for (size_t i = 0; i < faces.size(); ++i) face_index[faces[i]] = static_cast<int>(i);

    IntegerMatrix m(static_cast<int>(faces.size()), static_cast<int>(cells.size()));
    for (size_t s = 0; s < cells.size(); ++s) {
        const Chain& cell = cells[s];
        for (size_t i = 0; i < cell.size(); ++i) {
            Chain face = cell;
            face.erase(face.begin() + static_cast<long>(i));
            m.at(face_index.at(face), static_cast<int>(s)) += sign_of_position(i);
        }
    }
    return m;
}

namespace {

IntegerMatrix face_table_boundary(const std::vector<std::vector<std::vector<int>>>& face_table,
                                  long long faces, int d) {
    const auto& table = face_table[static_cast<size_t>(d)];
    IntegerMatrix m(static_cast<int>(faces), static_cast<int>(table.size()));
    for (size_t s = 0; s < table.size(); ++s)
        for (size_t i = 0; i < table[s].size(); ++i)
            m.at(table[s][i], static_cast<int>(s)) += sign_of_position(i);
    return m;
}

}  // namespace

IntegerMatrix boundary_matrix(const OrbitComplex& c, int d) {
    if (d < 1 || d > c.dim()) throw ValidationError("boundary_matrix: degree out of range");
    return face_table_boundary(c.face_table, static_cast<long long>(c.reps[static_cast<size_t>(d - 1)].size()), d);
}

IntegerMatrix boundary_matrix(const simplicial::NerveComplex& c, int d) {
    if (d < 1 || d > c.dim()) throw ValidationError("boundary_matrix: degree out of range");
    return face_table_boundary(c.face_table,
                               static_cast<long long>(c.simplices[static_cast<size_t>(d - 1)].size()), d);
}

bool boundaries_compose_to_zero(const SimplicialComplex& c) {
    for (int d = 2; d <= c.dim(); ++d) {
        for (const Chain& cell : c.simplices[static_cast<size_t>(d)]) {
            std::map<Chain, long long> acc;
            for (size_t i = 0; i < cell.size(); ++i) {
                Chain face = cell;
                face.erase(face.begin() + static_cast<long>(i));
                for (size_t j = 0; j < face.size(); ++j) {
                    Chain ff = face;
                    ff.erase(ff.begin() + static_cast<long>(j));
                    acc[ff] += sign_of_position(i) * sign_of_position(j);
                }
            }
            for (const auto& [ff, v] : acc)
                if (v != 0) return false;
        }
    }
    return true;
}

namespace {

bool face_table_dd_zero(const std::vector<std::vector<std::vector<int>>>& face_table, int dim) {
    for (int d = 2; d <= dim; ++d) {
        const auto& table = face_table[static_cast<size_t>(d)];
        const auto& lower = face_table[static_cast<size_t>(d - 1)];
        for (const auto& faces : table) {
            std::map<int, long long> acc;
            for (size_t i = 0; i < faces.size(); ++i)
                for (size_t j = 0; j < lower[static_cast<size_t>(faces[i])].size(); ++j)
                    acc[lower[static_cast<size_t>(faces[i])][j]] +=
                        sign_of_position(i) * sign_of_position(j);
            for (const auto& [ff, v] : acc)
                if (v != 0) return false;
        }
    }
    return true;
}

}  // namespace

bool boundaries_compose_to_zero(const OrbitComplex& c) {
    return face_table_dd_zero(c.face_table, c.dim());
}

bool boundaries_compose_to_zero(const simplicial::NerveComplex& c) {
    return face_table_dd_zero(c.face_table, c.dim());
}

std::string HomologyGroups::to_string() const {
    std::ostringstream out;
    out << '(';
    for (size_t d = 0; d < degrees.size(); ++d) {
        if (d) out << ", ";
        const auto& g = degrees[d];
        bool empty = true;
        if (g.betti > 0) {
            out << 'Z';
            if (g.betti > 1) out << '^' << g.betti;
            empty = false;
        }
        for (const BigInt& t : g.torsion) {
            if (!empty) out << '+';
            out << "Z/" << t;
            empty = false;
        }
        if (empty) out << '0';
    }
    out << ')';
    return out.str();
}

HomologyGroups make_homology(std::vector<std::pair<long long, std::vector<long long>>> groups) {
    HomologyGroups h;
    for (size_t d = 0; d < groups.size(); ++d) {
        DegreeHomology g;
        g.d = static_cast<int>(d);
        g.betti = groups[d].first;
        for (long long t : groups[d].second) g.torsion.emplace_back(t);
        h.degrees.push_back(std::move(g));
    }
    return h;
}

namespace {

struct RankFactors {
    int rank = 0;
    std::vector<BigInt> torsion;  // factors > 1
};

template <typename FillFn>
RankFactors sparse_rank_factors(int rows, int cols, FillFn&& fill) {
    SparseEliminator elim(rows, cols);
    fill(elim);
    std::vector<BigInt> diag = elim.eliminate();
    normalize_chain(diag);
    RankFactors rf;
    rf.rank = static_cast<int>(diag.size());
    for (BigInt& v : diag)
        if (v > 1) rf.torsion.push_back(std::move(v));
    return rf;
}

template <typename FillBoundary>
HomologyGroups homology_impl(const std::vector<long long>& f, FillBoundary&& fb) {
    HomologyGroups h;
    const int dim = static_cast<int>(f.size()) - 1;
    if (dim < 0) return h;

    std::vector<RankFactors> bd(static_cast<size_t>(dim) + 2);  // bd[d] = data of ∂_d
    for (int d = 1; d <= dim; ++d)
        bd[static_cast<size_t>(d)] = sparse_rank_factors(
            static_cast<int>(f[static_cast<size_t>(d - 1)]), static_cast<int>(f[static_cast<size_t>(d)]),
            [&](SparseEliminator& e) { fb(e, d); });

    for (int d = 0; d <= dim; ++d) {
        DegreeHomology g;
        g.d = d;
        g.betti = f[static_cast<size_t>(d)] - bd[static_cast<size_t>(d)].rank -
                  bd[static_cast<size_t>(d + 1)].rank;
        g.torsion = bd[static_cast<size_t>(d + 1)].torsion;
        h.degrees.push_back(std::move(g));
    }
    return h;
}

}  // namespace

HomologyGroups homology(const SimplicialComplex& c) {
    std::vector<std::map<Chain, int>> index(c.simplices.size());
    for (size_t d = 0; d < c.simplices.size(); ++d)
        for (size_t i = 0; i < c.simplices[d].size(); ++i)
            index[d][c.simplices[d][i]] = static_cast<int>(i);

    return homology_impl(f_vector(c), [&](SparseEliminator& e, int d) {
        const auto& cells = c.simplices[static_cast<size_t>(d)];
        for (size_t s = 0; s < cells.size(); ++s) {
            const Chain& cell = cells[s];
            for (size_t i = 0; i < cell.size(); ++i) {
                Chain face = cell;
                face.erase(face.begin() + static_cast<long>(i));
                e.add_entry(index[static_cast<size_t>(d - 1)].at(face), static_cast<int>(s),
                            sign_of_position(i));
            }
        }
    });
}

HomologyGroups homology(const OrbitComplex& c) {
    return homology_impl(f_vector(c), [&](SparseEliminator& e, int d) {
        const auto& table = c.face_table[static_cast<size_t>(d)];
        for (size_t s = 0; s < table.size(); ++s)
            for (size_t i = 0; i < table[s].size(); ++i)
                e.add_entry(table[s][i], static_cast<int>(s), sign_of_position(i));
    });
}

HomologyGroups homology(const simplicial::NerveComplex& c) {
    return homology_impl(f_vector(c), [&](SparseEliminator& e, int d) {
        const auto& table = c.face_table[static_cast<size_t>(d)];
        for (size_t s = 0; s < table.size(); ++s)
            for (size_t i = 0; i < table[s].size(); ++i)
                e.add_entry(table[s][i], static_cast<int>(s), sign_of_position(i));
    });
}

}  // namespace strata::homology
