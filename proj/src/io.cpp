#include "strata/io.hpp"

#include <map>
#include <sstream>

#include "strata/version.hpp"

namespace strata::io {

Json artifact_header(const Json& config) {
    Json j;
    j["tool"] = {{"name", kToolName}, {"version", kToolVersion}};
    j["config"] = config;
    return j;
}

namespace {

Json cell_record(const FacePoset& poset, int id) {
    Json rec;
    rec["id"] = id;
    if (poset.space() == Space::Sphere) {
        const auto& cell = std::get<sphere::SphereCell>(poset.cell(id));
        rec["variant"] = cell.variant == sphere::SphereCell::Variant::TypeA ? "A" : "B";
        if (cell.variant == sphere::SphereCell::Variant::TypeA)
            rec["ell"] = cell.ell;
        else
            rec["ell"] = nullptr;
        rec["tree"] = cell.tree.to_string();
    } else {
        rec["tree"] = poset.tree(id).to_string();
    }
    rec["dim"] = poset.dim(id);
    return rec;
}

}  // namespace

Json cells_json(const FacePoset& poset) {
    Json cells = Json::array();
    for (int id = 0; id < poset.size(); ++id) cells.push_back(cell_record(poset, id));
    Json j;
    j["n"] = poset.n();
    j["k"] = poset.k();
    j["space"] = poset.space() == Space::Sphere ? "sphere" : "euclidean";
    j["cells"] = cells;
    return j;
}

Json poset_json(const FacePoset& poset) {
    Json j = cells_json(poset);
    Json covers = Json::array();
    for (auto [lo, hi] : poset.covers()) covers.push_back(Json::array({lo, hi}));
    j["covers"] = covers;
    return j;
}

Json complex_json(const simplicial::SimplicialComplex& c) {
    Json j;
    j["dims"] = simplicial::f_vector(c);
    Json levels = Json::array();
    for (const auto& level : c.simplices) {
        Json chains = Json::array();
        for (const auto& ch : level) chains.push_back(ch);
        levels.push_back(chains);
    }
    j["simplices"] = levels;
    return j;
}

Json complex_json(const simplicial::OrbitComplex& c) {
    Json j;
    j["dims"] = simplicial::f_vector(c);
    Json levels = Json::array();
    for (const auto& level : c.reps) {
        Json chains = Json::array();
        for (const auto& ch : level) chains.push_back(ch);
        levels.push_back(chains);
    }
    j["simplices"] = levels;
    j["group_order"] = c.group_order;
    Json table = Json::array();
    for (const auto& level : c.face_table) {
        Json rows = Json::array();
        for (const auto& faces : level) rows.push_back(faces);
        table.push_back(rows);
    }
    j["face_table"] = table;
    return j;
}

Json complex_json(const simplicial::NerveComplex& c) {
    Json j;
    j["dims"] = simplicial::f_vector(c);
    Json levels = Json::array();
    Json branch_levels = Json::array();
    for (const auto& level : c.simplices) {
        Json chains = Json::array();
        Json branches = Json::array();
        for (const auto& s : level) {
            chains.push_back(s.cells);
            branches.push_back(s.branches);
        }
        levels.push_back(chains);
        branch_levels.push_back(branches);
    }
    j["simplices"] = levels;
    j["branches"] = branch_levels;
    if (c.group_order > 1) j["group_order"] = c.group_order;
    Json table = Json::array();
    for (const auto& level : c.face_table) {
        Json rows = Json::array();
        for (const auto& faces : level) rows.push_back(faces);
        table.push_back(rows);
    }
    j["face_table"] = table;
    return j;
}

Json homology_json(const homology::HomologyGroups& h) {
    Json degrees = Json::array();
    for (const auto& g : h.degrees) {
        Json rec;
        rec["d"] = g.d;
        rec["betti"] = g.betti;
        Json torsion = Json::array();
        for (const BigInt& t : g.torsion) torsion.push_back(t.str());
        rec["torsion"] = torsion;
        degrees.push_back(rec);
    }
    Json j;
    j["degrees"] = degrees;
    return j;
}

std::string poset_dot(const FacePoset& poset) {
    std::ostringstream out;
    out << "digraph hasse {\n  rankdir=BT;\n  node [shape=box];\n";
    std::map<int, std::vector<int>> by_dim;
    for (int id = 0; id < poset.size(); ++id) by_dim[poset.dim(id)].push_back(id);
    for (const auto& [dim, ids] : by_dim) {
        out << "  { rank=same;";
        for (int id : ids) out << " c" << id << ";";
        out << " }  // dim " << dim << "\n";
    }
    for (int id = 0; id < poset.size(); ++id)
        out << "  c" << id << " [label=\"" << poset.cell_label(id) << "\\ndim " << poset.dim(id)
            << "\"];\n";
    for (auto [lo, hi] : poset.covers()) out << "  c" << lo << " -> c" << hi << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace strata::io
