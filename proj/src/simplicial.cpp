#include "strata/simplicial.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace strata::simplicial {

SimplicialComplex order_complex(const FacePoset& poset) {
    SimplicialComplex c;
    c.vertex_count = poset.size();
    if (poset.size() == 0) return c;

    c.simplices.emplace_back();
    for (int v = 0; v < poset.size(); ++v) c.simplices[0].push_back({v});

    // Extend every (d+1)-chain by elements above its top; chain lists stay
    // lexicographically sorted because upsets are ascending.
    while (true) {
        const auto& prev = c.simplices.back();
        std::vector<Chain> next;
        for (const Chain& ch : prev) {
            for (int w : poset.upset(ch.back())) {
                Chain longer = ch;
                longer.push_back(w);
                next.push_back(std::move(longer));
            }
        }
        if (next.empty()) break;
        c.simplices.push_back(std::move(next));
    }
    return c;
}

std::vector<long long> f_vector(const SimplicialComplex& c) {
    std::vector<long long> f;
    for (const auto& level : c.simplices) f.push_back(static_cast<long long>(level.size()));
    return f;
}

long long euler_char(const SimplicialComplex& c) {
    long long chi = 0;
    int sign = 1;
    for (const auto& level : c.simplices) {
        chi += sign * static_cast<long long>(level.size());
        sign = -sign;
    }
    return chi;
}

std::vector<long long> f_vector(const OrbitComplex& c) {
    std::vector<long long> f;
    for (const auto& level : c.reps) f.push_back(static_cast<long long>(level.size()));
    return f;
}

long long euler_char(const OrbitComplex& c) {
    long long chi = 0;
    int sign = 1;
    for (const auto& level : c.reps) {
        chi += sign * static_cast<long long>(level.size());
        sign = -sign;
    }
    return chi;
}

namespace {

std::string chain_str(const Chain& ch) {
    std::ostringstream out;
    out << '(';
    for (size_t i = 0; i < ch.size(); ++i) {
        if (i) out << ',';
        out << ch[i];
    }
    out << ')';
    return out.str();
}

}  // namespace

OrbitComplex quotient(const SimplicialComplex& c, const std::vector<std::vector<int>>& vertex_maps) {
    if (vertex_maps.empty()) throw ValidationError("quotient: empty group");
    for (const auto& m : vertex_maps)
        if (static_cast<int>(m.size()) != c.vertex_count)
            throw ValidationError("quotient: vertex map size mismatch");

    OrbitComplex q;
    q.group_order = static_cast<int>(vertex_maps.size());
    q.reps.resize(c.simplices.size());
    q.face_table.resize(c.simplices.size());

    std::vector<bool> map_is_identity(vertex_maps.size());
    for (size_t g = 0; g < vertex_maps.size(); ++g) {
        bool ident = true;
        for (int v = 0; v < c.vertex_count && ident; ++v)
            ident = vertex_maps[g][static_cast<size_t>(v)] == v;
        map_is_identity[g] = ident;
    }

    // Orbit canonicalization: the image of a chain under every group element,
    // lexicographically minimal one wins.  The action preserves the poset
    // order, so images are taken entrywise.
    std::vector<std::map<Chain, int>> rep_index(c.simplices.size());

    auto orbit_min = [&](const Chain& ch, int dim) {
        Chain best;
        for (size_t g = 0; g < vertex_maps.size(); ++g) {
            Chain image(ch.size());
            for (size_t i = 0; i < ch.size(); ++i)
                image[i] = vertex_maps[g][static_cast<size_t>(ch[i])];
            if (!map_is_identity[g] && image == ch)
                throw ValidationError("quotient: action fixes simplex " + chain_str(ch));
            if (best.empty() || image < best) best = std::move(image);
        }
        // Verify the image really is a simplex of c (simplicial action).
        const auto& level = c.simplices[static_cast<size_t>(dim)];
        if (!std::binary_search(level.begin(), level.end(), best))
            throw ValidationError("quotient: action is not simplicial at " + chain_str(ch));
        return best;
    };

    for (int d = 0; d <= c.dim(); ++d) {
        for (const Chain& ch : c.simplices[static_cast<size_t>(d)]) {
            Chain rep = orbit_min(ch, d);
            if (!rep_index[static_cast<size_t>(d)].count(rep))
                rep_index[static_cast<size_t>(d)].emplace(rep, 0);
        }
        auto& level_reps = q.reps[static_cast<size_t>(d)];
        for (auto& [rep, idx] : rep_index[static_cast<size_t>(d)]) {
            idx = static_cast<int>(level_reps.size());
            level_reps.push_back(rep);
        }
    }

    for (int d = 1; d <= q.dim(); ++d) {
        auto& table = q.face_table[static_cast<size_t>(d)];
        for (const Chain& rep : q.reps[static_cast<size_t>(d)]) {
            std::vector<int> faces;
            faces.reserve(rep.size());
            for (size_t i = 0; i < rep.size(); ++i) {
                Chain face = rep;
                face.erase(face.begin() + static_cast<long>(i));
                Chain face_rep = orbit_min(face, d - 1);
                faces.push_back(rep_index[static_cast<size_t>(d - 1)].at(face_rep));
            }
            table.push_back(std::move(faces));
        }
    }
    return q;
}

std::vector<long long> f_vector(const NerveComplex& c) {
    std::vector<long long> f;
    for (const auto& level : c.simplices) f.push_back(static_cast<long long>(level.size()));
    return f;
}

long long euler_char(const NerveComplex& c) {
    long long chi = 0;
    int sign = 1;
    for (const auto& level : c.simplices) {
        chi += sign * static_cast<long long>(level.size());
        sign = -sign;
    }
    return chi;
}

namespace {

bool is_type_b(const FacePoset& poset, int id) {
    if (poset.space() != Space::Sphere) return true;
    return std::get<sphere::SphereCell>(poset.cell(id)).variant ==
           sphere::SphereCell::Variant::TypeB;
}

/// Attachment of the composite chain a < x < b with the inner cell dropped.
/// The attachment region of the skipped pair contains the one that carried
/// the section (the basepoint coordinate keeps sitting on the same facet), so
/// the carrier's facet identifies the component of the composite.
int compose_branch(const FacePoset& poset, int a, int x, int b, int branch_ax, int branch_xb) {
    const Attachments& target = poset.attachments(a, b);
    if (target.count() == 1) return 0;
    const std::pair<int, int> carrier =
        is_type_b(poset, x) ? poset.attachments(a, x).disjuncts[static_cast<size_t>(branch_ax)]
                            : poset.attachments(x, b).disjuncts[static_cast<size_t>(branch_xb)];
    for (size_t i = 0; i < target.disjuncts.size(); ++i)
        if (target.disjuncts[i] == carrier) return static_cast<int>(i);
    throw std::logic_error("nerve: composite attachment does not match any boundary component");
}

}  // namespace

NerveComplex nerve_complex(const FacePoset& poset) {
    if (poset.has_positive_dimensional_attachments())
        throw ValidationError(
            "nerve: some boundary attachments form positive-dimensional spheres "
            "(happens from n >= 3 points at depth k >= 3); no chain-level model is "
            "available for this range");

    NerveComplex c;
    if (poset.size() == 0) return c;

    c.simplices.emplace_back();
    for (int v = 0; v < poset.size(); ++v) c.simplices[0].push_back({{v}, {}});

    while (true) {
        const auto& prev = c.simplices.back();
        std::vector<NerveSimplex> next;
        for (const NerveSimplex& s : prev) {
            for (int w : poset.upset(s.cells.back())) {
                const Attachments& m = poset.attachments(s.cells.back(), w);
                for (int branch = 0; branch < m.count(); ++branch) {
                    NerveSimplex longer = s;
                    longer.cells.push_back(w);
                    longer.branches.push_back(branch);
                    next.push_back(std::move(longer));
                }
            }
        }
        if (next.empty()) break;
        c.simplices.push_back(std::move(next));
    }

    std::vector<std::map<NerveSimplex, int>> index(c.simplices.size());
    for (size_t d = 0; d < c.simplices.size(); ++d)
        for (size_t i = 0; i < c.simplices[d].size(); ++i)
            index[d][c.simplices[d][i]] = static_cast<int>(i);

    c.face_table.resize(c.simplices.size());
    for (int d = 1; d <= c.dim(); ++d) {
        auto& table = c.face_table[static_cast<size_t>(d)];
        for (const NerveSimplex& s : c.simplices[static_cast<size_t>(d)]) {
            std::vector<int> faces;
            faces.reserve(s.cells.size());
            for (size_t i = 0; i < s.cells.size(); ++i) {
                NerveSimplex face;
                face.cells = s.cells;
                face.cells.erase(face.cells.begin() + static_cast<long>(i));
                face.branches = s.branches;
                if (i == 0) {
                    face.branches.erase(face.branches.begin());
                } else if (i == s.cells.size() - 1) {
                    face.branches.pop_back();
                } else {
                    int composed = compose_branch(poset, s.cells[i - 1], s.cells[i], s.cells[i + 1],
                                                  s.branches[i - 1], s.branches[i]);
                    face.branches.erase(face.branches.begin() + static_cast<long>(i));
                    face.branches[i - 1] = composed;
                }
                faces.push_back(index[static_cast<size_t>(d - 1)].at(face));
            }
            table.push_back(std::move(faces));
        }
    }
    return c;
}

NerveComplex quotient(const NerveComplex& c, const std::vector<std::vector<int>>& vertex_maps) {
    if (vertex_maps.empty()) throw ValidationError("quotient: empty group");
    const size_t vertices = c.simplices.empty() ? 0 : c.simplices[0].size();
    for (const auto& m : vertex_maps)
        if (m.size() != vertices) throw ValidationError("quotient: vertex map size mismatch");

    std::vector<bool> map_is_identity(vertex_maps.size());
    for (size_t g = 0; g < vertex_maps.size(); ++g) {
        bool ident = true;
        for (size_t v = 0; v < vertex_maps[g].size() && ident; ++v)
            ident = vertex_maps[g][v] == static_cast<int>(v);
        map_is_identity[g] = ident;
    }

    std::vector<std::map<NerveSimplex, int>> index(c.simplices.size());
    for (size_t d = 0; d < c.simplices.size(); ++d)
        for (size_t i = 0; i < c.simplices[d].size(); ++i)
            index[d][c.simplices[d][i]] = static_cast<int>(i);

    // Attachment labels are invariant under relabeling, so branches carry over.
    auto orbit_min = [&](const NerveSimplex& s, int d) {
        NerveSimplex best;
        bool first = true;
        for (size_t g = 0; g < vertex_maps.size(); ++g) {
            NerveSimplex image;
            image.cells.resize(s.cells.size());
            for (size_t i = 0; i < s.cells.size(); ++i)
                image.cells[i] = vertex_maps[g][static_cast<size_t>(s.cells[i])];
            image.branches = s.branches;
            if (!map_is_identity[g] && image == s)
                throw ValidationError("quotient: action fixes a nerve simplex");
            if (!index[static_cast<size_t>(d)].count(image))
                throw ValidationError("quotient: action does not permute the nerve");
            if (first || image < best) {
                best = std::move(image);
                first = false;
            }
        }
        return best;
    };

    NerveComplex q;
    q.group_order = static_cast<int>(vertex_maps.size());
    q.simplices.resize(c.simplices.size());
    q.face_table.resize(c.simplices.size());

    std::vector<std::map<NerveSimplex, int>> rep_index(c.simplices.size());
    for (int d = 0; d <= c.dim(); ++d) {
        for (const NerveSimplex& s : c.simplices[static_cast<size_t>(d)]) {
            NerveSimplex rep = orbit_min(s, d);
            rep_index[static_cast<size_t>(d)].emplace(rep, 0);
        }
        for (auto& [rep, idx] : rep_index[static_cast<size_t>(d)]) {
            idx = static_cast<int>(q.simplices[static_cast<size_t>(d)].size());
            q.simplices[static_cast<size_t>(d)].push_back(rep);
        }
    }

    for (int d = 1; d <= q.dim(); ++d) {
        for (const NerveSimplex& rep : q.simplices[static_cast<size_t>(d)]) {
            const int src = index[static_cast<size_t>(d)].at(rep);
            const auto& faces = c.face_table[static_cast<size_t>(d)][static_cast<size_t>(src)];
            std::vector<int> orbit_faces;
            orbit_faces.reserve(faces.size());
            for (int f : faces) {
                NerveSimplex face_rep =
                    orbit_min(c.simplices[static_cast<size_t>(d - 1)][static_cast<size_t>(f)], d - 1);
                orbit_faces.push_back(rep_index[static_cast<size_t>(d - 1)].at(face_rep));
            }
            q.face_table[static_cast<size_t>(d)].push_back(std::move(orbit_faces));
        }
    }
    return q;
}

}  // namespace strata::simplicial
