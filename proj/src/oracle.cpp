#include "strata/oracle.hpp"

#include <algorithm>
#include <sstream>

namespace strata::oracle {

std::string to_string(const EpsRational& v) {
    std::ostringstream out;
    out << v.finite;
    if (v.eps != 0) out << (v.eps > 0 ? "+" : "") << v.eps << "*eps";
    return out.str();
}

namespace {

std::string term_str(const Term& t) {
    if (t.is_const) return t.value > 0 ? "+1" : "-1";
    return "p[" + std::to_string(t.var.point) + "][" + std::to_string(t.var.level) + "]";
}

}  // namespace

std::string to_string(const Constraint& c) {
    const char* rel = c.rel == Rel::Less ? " < " : c.rel == Rel::LessEq ? " <= " : " = ";
    return term_str(c.lhs) + rel + term_str(c.rhs);
}

int DiffConstraintSystem::add(Term lhs, Rel rel, Term rhs) {
    if (lhs.is_const && rhs.is_const)
        throw ValidationError("constraint compares two constants");
    for (const Term* t : {&lhs, &rhs}) {
        if (t->is_const) {
            if (t->value != 1 && t->value != -1)
                throw ValidationError("bound constants must be ±1");
        } else if (t->var.point < 1 || t->var.level < 1) {
            throw ValidationError("variable indices must be >= 1");
        }
    }
    if (!lhs.is_const && !rhs.is_const && lhs.var.level != rhs.var.level)
        throw ValidationError("variable comparisons must stay within one level");
    for (const Term* t : {&lhs, &rhs}) {
        if (!t->is_const && std::find(variables_.begin(), variables_.end(), t->var) == variables_.end())
            variables_.push_back(t->var);
    }
    constraints_.push_back({lhs, rel, rhs});
    return static_cast<int>(constraints_.size()) - 1;
}

namespace {

// All constants are ±1, so every weight is a small integer plus an integer
// multiple of the infinitesimal; shortest paths stay within |finite| <= 2n,
// |eps| <= n.  Exact integer arithmetic, no rounding anywhere.
struct Edge {
    int from = 0, to = 0;
    long long wf = 0, we = 0;
    CycleStep step;
};

// Difference form of "lhs rel rhs": value(lhs) - value(rhs) <= w, where a
// constant term contributes its offset against the ground node of its level.
// One ground node per level keeps the level subsystems fully disjoint, so the
// joint run equals solving each level independently and merging.
struct Graph {
    std::vector<Edge> edges;
    std::vector<int> var_nodes;     // node of sys.variables()[i]
    std::vector<int> ground_nodes;  // ground node of sys.variables()[i]'s level
    int nodes = 0;
};

Graph build_graph(const DiffConstraintSystem& sys) {
    Graph g;
    const auto& vars = sys.variables();
    std::map<int, int> ground_of_level;
    for (const VarId& v : vars)
        if (!ground_of_level.count(v.level)) {
            int node = g.nodes++;
            ground_of_level[v.level] = node;
        }
    g.var_nodes.reserve(vars.size());
    g.ground_nodes.reserve(vars.size());
    for (const VarId& v : vars) {
        g.var_nodes.push_back(g.nodes++);
        g.ground_nodes.push_back(ground_of_level.at(v.level));
    }

    auto node_of = [&](const Term& t, int level) -> std::pair<int, long long> {
        if (t.is_const) return {ground_of_level.at(level), t.value};
        auto it = std::find(vars.begin(), vars.end(), t.var);
        return {g.var_nodes[static_cast<size_t>(it - vars.begin())], 0};
    };
    const auto& cs = sys.constraints();
    for (int ci = 0; ci < static_cast<int>(cs.size()); ++ci) {
        const Constraint& c = cs[static_cast<size_t>(ci)];
        const int level = c.lhs.is_const ? c.rhs.var.level : c.lhs.var.level;
        auto [ln, loff] = node_of(c.lhs, level);
        auto [rn, roff] = node_of(c.rhs, level);
        // lhs - rhs <= w: edge rhs_node -> lhs_node of weight w (+ offsets).
        g.edges.push_back({rn, ln, roff - loff, c.rel == Rel::Less ? -1LL : 0LL, {ci, true}});
        if (c.rel == Rel::Eq) g.edges.push_back({ln, rn, loff - roff, 0, {ci, false}});
    }
    return g;
}

}  // namespace

SolveResult solve(const DiffConstraintSystem& sys) {
    const Graph g = build_graph(sys);
    const int n = std::max(g.nodes, 1);

    struct W {
        long long f = 0, e = 0;
        bool operator<(const W& o) const { return f != o.f ? f < o.f : e < o.e; }
    };
    std::vector<W> dist(static_cast<size_t>(n));          // implicit 0-weight super source
    std::vector<int> parent(static_cast<size_t>(n), -1);  // edge index

    int relaxed_node = -1;
    for (int pass = 0; pass < n; ++pass) {
        relaxed_node = -1;
        for (int ei = 0; ei < static_cast<int>(g.edges.size()); ++ei) {
            const Edge& e = g.edges[static_cast<size_t>(ei)];
            W cand{dist[static_cast<size_t>(e.from)].f + e.wf,
                   dist[static_cast<size_t>(e.from)].e + e.we};
            if (cand < dist[static_cast<size_t>(e.to)]) {
                dist[static_cast<size_t>(e.to)] = cand;
                parent[static_cast<size_t>(e.to)] = ei;
                relaxed_node = e.to;
            }
        }
        if (relaxed_node < 0) break;
    }

    if (relaxed_node >= 0) {
        // A relaxation in pass n means a negative cycle; back up into it.
        int x = relaxed_node;
        for (int i = 0; i < n; ++i) x = g.edges[static_cast<size_t>(parent[static_cast<size_t>(x)])].from;
        std::vector<CycleStep> cycle;
        int cur = x;
        do {
            const Edge& e = g.edges[static_cast<size_t>(parent[static_cast<size_t>(cur)])];
            cycle.push_back(e.step);
            cur = e.from;
        } while (cur != x);
        std::reverse(cycle.begin(), cycle.end());
        return Infeasible{std::move(cycle)};
    }

    Feasible result;
    const auto& vars = sys.variables();
    for (size_t i = 0; i < vars.size(); ++i) {
        const W& dv = dist[static_cast<size_t>(g.var_nodes[i])];
        const W& dg = dist[static_cast<size_t>(g.ground_nodes[i])];
        result.witness[vars[i]] = EpsRational{Rational(dv.f - dg.f), Rational(dv.e - dg.e)};
    }
    return result;
}

namespace {

EpsRational term_value(const Term& t, const Witness& w) {
    if (t.is_const) return {Rational(t.value), Rational(0)};
    auto it = w.find(t.var);
    if (it == w.end()) throw ValidationError("witness is missing a variable");
    return it->second;
}

}  // namespace

Rational epsilon_bound(const DiffConstraintSystem& sys, const Witness& w) {
    Rational bound(1);
    bool limited = false;
    for (const Constraint& c : sys.constraints()) {
        // Slack d = rhs - lhs (+ε for strict constraints already folded into order).
        EpsRational d = term_value(c.rhs, w) - term_value(c.lhs, w);
        if (d.eps < 0 && d.finite > 0) {
            Rational cand = d.finite / -d.eps;
            if (!limited || cand < bound) bound = cand;
            limited = true;
        }
    }
    return bound / 2;
}

bool check_witness(const DiffConstraintSystem& sys, const Witness& w, const Rational& eps_value) {
    if (eps_value <= 0) return false;
    for (const Constraint& c : sys.constraints()) {
        Rational l = term_value(c.lhs, w).instantiate(eps_value);
        Rational r = term_value(c.rhs, w).instantiate(eps_value);
        switch (c.rel) {
            case Rel::Less: if (!(l < r)) return false; break;
            case Rel::LessEq: if (!(l <= r)) return false; break;
            case Rel::Eq: if (l != r) return false; break;
        }
    }
    return true;
}

EpsRational certificate_slack(const DiffConstraintSystem& sys, const std::vector<CycleStep>& cycle) {
    EpsRational total;
    for (const CycleStep& step : cycle) {
        const Constraint& c = sys.constraints().at(static_cast<size_t>(step.constraint));
        Rational loff = c.lhs.is_const ? Rational(c.lhs.value) : Rational(0);
        Rational roff = c.rhs.is_const ? Rational(c.rhs.value) : Rational(0);
        if (step.forward)
            total = total + EpsRational{roff - loff, c.rel == Rel::Less ? Rational(-1) : Rational(0)};
        else
            total = total + EpsRational{loff - roff, Rational(0)};
    }
    return total;
}

namespace {

// Conditions of one pair symbol on points (i, j): equalities above the level,
// the level itself strictly or weakly signed; Zero means equal on all levels.
void add_pair_conditions(DiffConstraintSystem& sys, int i, int j, combinat::SignSymbol s, int k,
                         bool strict) {
    using combinat::SignTag;
    const int level = s.is_zero() ? 0 : s.level;
    for (int l = level + 1; l <= k; ++l)
        sys.add(VarId{i, l}, Rel::Eq, VarId{j, l});
    if (s.is_zero()) return;
    const Rel rel = strict ? Rel::Less : Rel::LessEq;
    if (s.tag == SignTag::Plus)
        sys.add(VarId{i, level}, rel, VarId{j, level});
    else
        sys.add(VarId{j, level}, rel, VarId{i, level});
}

void add_signvector_conditions(DiffConstraintSystem& sys, const combinat::SignVector& sv,
                               bool strict) {
    for (int i = 1; i <= sv.n(); ++i)
        for (int j = i + 1; j <= sv.n(); ++j)
            add_pair_conditions(sys, i, j, sv.entry(i, j), sv.k(), strict);
}

void add_tree_conditions(DiffConstraintSystem& sys, const combinat::PartitionTree& t, bool strict) {
    const auto& el = t.elements();
    for (size_t a = 0; a < el.size(); ++a)
        for (size_t b = a + 1; b < el.size(); ++b)
            add_pair_conditions(sys, el[a], el[b], t.pair_symbol(el[a], el[b]), t.depth(), strict);
}

}  // namespace

void add_exact_conditions(DiffConstraintSystem& sys, const combinat::SignVector& sv) {
    add_signvector_conditions(sys, sv, true);
}

void add_closure_conditions(DiffConstraintSystem& sys, const combinat::SignVector& sv) {
    add_signvector_conditions(sys, sv, false);
}

bool realizable(const combinat::SignVector& sv) {
    DiffConstraintSystem sys;
    add_exact_conditions(sys, sv);
    return std::holds_alternative<Feasible>(solve(sys));
}

bool closure_leq_geometric(const combinat::SignVector& sub, const combinat::SignVector& sup) {
    if (sub.n() != sup.n() || sub.k() != sup.k())
        throw ValidationError("closure_leq_geometric: mismatched (n,k)");
    DiffConstraintSystem sys;
    add_exact_conditions(sys, sub);
    add_closure_conditions(sys, sup);
    return std::holds_alternative<Feasible>(solve(sys));
}

namespace {

void validate_boundary_face_inputs(const combinat::PartitionTree& lambda, int ell,
                                   const combinat::PartitionTree& mu) {
    const int k = lambda.depth();
    if (k < 1 || mu.depth() != k)
        throw ValidationError("boundary_face_feasible: depth mismatch");
    if (!lambda.is_configuration() || !mu.is_configuration())
        throw ValidationError("boundary_face_feasible: configuration trees required");
    const auto& full = lambda.elements();
    if (!std::binary_search(full.begin(), full.end(), ell))
        throw ValidationError("boundary_face_feasible: ell not in lambda's index set");
    std::vector<int> rest;
    for (int x : full)
        if (x != ell) rest.push_back(x);
    if (mu.elements() != rest)
        throw ValidationError("boundary_face_feasible: mu must live on lambda's set minus ell");
}

DiffConstraintSystem boundary_face_system(const combinat::PartitionTree& lambda, int ell,
                                          const combinat::PartitionTree& mu, int jstar, int sign) {
    const int k = lambda.depth();
    DiffConstraintSystem sys;
    sys.add(Term::v(VarId{ell, jstar}), Rel::Eq, Term::c(sign));
    for (int j = 1; j <= k; ++j) {
        if (j != jstar) {
            sys.add(Term::c(-1), Rel::LessEq, Term::v(VarId{ell, j}));
            sys.add(Term::v(VarId{ell, j}), Rel::LessEq, Term::c(1));
        }
    }
    for (int i : lambda.elements()) {
        if (i == ell) continue;
        for (int j = 1; j <= k; ++j) {
            sys.add(Term::c(-1), Rel::Less, Term::v(VarId{i, j}));
            sys.add(Term::v(VarId{i, j}), Rel::Less, Term::c(1));
        }
    }
    add_tree_conditions(sys, mu, true);       // exact conditions away from ell
    add_tree_conditions(sys, lambda, false);  // closure conditions on all pairs
    return sys;
}

}  // namespace

std::vector<std::pair<int, int>> feasible_disjuncts(const combinat::PartitionTree& lambda, int ell,
                                                    const combinat::PartitionTree& mu) {
    validate_boundary_face_inputs(lambda, ell, mu);
    std::vector<std::pair<int, int>> feasible;
    for (int jstar = 1; jstar <= lambda.depth(); ++jstar)
        for (int sign : {-1, +1})
            if (std::holds_alternative<Feasible>(solve(boundary_face_system(lambda, ell, mu, jstar, sign))))
                feasible.emplace_back(jstar, sign);
    return feasible;
}

bool boundary_face_feasible(const combinat::PartitionTree& lambda, int ell,
                            const combinat::PartitionTree& mu) {
    validate_boundary_face_inputs(lambda, ell, mu);
    for (int jstar = 1; jstar <= lambda.depth(); ++jstar)
        for (int sign : {-1, +1})
            if (std::holds_alternative<Feasible>(solve(boundary_face_system(lambda, ell, mu, jstar, sign))))
                return true;
    return false;
}

}  // namespace strata::oracle
