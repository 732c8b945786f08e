#pragma once

// Exact geometric ground truth.  Cells of the stratifications at hand are cut
// out by equalities and strict/weak inequalities between single coordinates
// (same level) or against the cube bounds ±1, so feasibility reduces to
// difference constraints solved by shortest-path relaxation.  Strictness is
// handled with a symbolic positive infinitesimal, never a fixed epsilon.

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "strata/combinat.hpp"

namespace strata::oracle {

/// finite + eps·ε with ε an infinitesimal > 0; ordered lexicographically.
struct EpsRational {
    Rational finite;
    Rational eps;

    EpsRational() = default;
    EpsRational(Rational f, Rational e) : finite(std::move(f)), eps(std::move(e)) {}

    EpsRational operator+(const EpsRational& o) const { return {finite + o.finite, eps + o.eps}; }
    EpsRational operator-(const EpsRational& o) const { return {finite - o.finite, eps - o.eps}; }
    EpsRational operator-() const { return {-finite, -eps}; }

    bool operator==(const EpsRational&) const = default;
    bool operator<(const EpsRational& o) const {
        if (finite != o.finite) return finite < o.finite;
        return eps < o.eps;
    }
    bool operator<=(const EpsRational& o) const { return *this == o || *this < o; }

    /// Plain rational obtained by substituting a concrete value for ε.
    Rational instantiate(const Rational& eps_value) const { return finite + eps * eps_value; }
};

std::string to_string(const EpsRational& v);

/// Coordinate symbol p[point][level]; 1-based on both axes.
struct VarId {
    int point = 0;
    int level = 0;
    auto operator<=>(const VarId&) const = default;
};

enum class Rel { Less, LessEq, Eq };

/// One side of a constraint: a coordinate or a cube bound ±1.
struct Term {
    bool is_const = false;
    VarId var;
    int value = 0;  // -1 or +1 when is_const

    static Term v(VarId id) { return {false, id, 0}; }
    static Term c(int value) { return {true, {}, value}; }
};

struct Constraint {
    Term lhs;
    Rel rel = Rel::LessEq;
    Term rhs;
};

std::string to_string(const Constraint& c);

class DiffConstraintSystem {
public:
    /// lhs rel rhs.  Validation: no constant-vs-constant comparisons, variable
    /// pairs must share a level, constants must be ±1.
    int add(Term lhs, Rel rel, Term rhs);

    int add(VarId a, Rel rel, VarId b) { return add(Term::v(a), rel, Term::v(b)); }

    const std::vector<Constraint>& constraints() const { return constraints_; }
    const std::vector<VarId>& variables() const { return variables_; }

private:
    std::vector<Constraint> constraints_;
    std::vector<VarId> variables_;  // first-use order, deduplicated
};

using Witness = std::map<VarId, EpsRational>;

struct Feasible {
    Witness witness;
};

/// One traversed edge of the contradiction: the constraint read either as
/// written (lhs − rhs bounded) or reversed (only equalities run both ways).
struct CycleStep {
    int constraint = 0;
    bool forward = true;
};

struct Infeasible {
    std::vector<CycleStep> cycle;
};

using SolveResult = std::variant<Feasible, Infeasible>;

/// Deterministic for a fixed constraint order.
SolveResult solve(const DiffConstraintSystem& sys);

/// Positive rational below every strict-constraint slack of the witness; the
/// witness instantiated at any 0 < eps <= this value satisfies the system over
/// plain rationals.
Rational epsilon_bound(const DiffConstraintSystem& sys, const Witness& w);

/// Substitution check over plain rationals (used to validate witnesses).
bool check_witness(const DiffConstraintSystem& sys, const Witness& w, const Rational& eps_value);

/// Telescoped slack of the cycle; sound certificates compose to "0 <= negative".
EpsRational certificate_slack(const DiffConstraintSystem& sys, const std::vector<CycleStep>& cycle);

/// Exact sign conditions of a sign vector: equalities above each symbol's
/// level, strict inequality at the level, all-equal for Zero.
void add_exact_conditions(DiffConstraintSystem& sys, const combinat::SignVector& sv);

/// Weak (closure) conditions: the level inequality becomes weak.
void add_closure_conditions(DiffConstraintSystem& sys, const combinat::SignVector& sv);

/// Nonemptiness of the sign class.
bool realizable(const combinat::SignVector& sv);

/// cell(sub) lies in the closure of cell(sup): exact(sub) ∧ weak(sup) feasible.
bool closure_leq_geometric(const combinat::SignVector& sub, const combinat::SignVector& sup);

/// Membership of the basepoint cell (ell, mu) in the closure of the top cell
/// lambda inside (S^k)^n.  Runs the 2k facet disjuncts p_ell[j*] = ±1 in
/// deterministic order (level ascending, minus before plus) and short-circuits
/// on the first feasible one.
bool boundary_face_feasible(const combinat::PartitionTree& lambda, int ell,
                            const combinat::PartitionTree& mu);

/// All feasible facet disjuncts (level, sign) with sign in {-1,+1}, in the
/// same deterministic order.  Empty means the basepoint cell is not in the
/// closure.  The disjuncts also classify the components of the region swept
/// by the collapsed coordinate on the cube boundary: disjuncts on two or more
/// distinct levels connect through cube corners into a single component,
/// while disjuncts confined to one level are separated by the open facets.
std::vector<std::pair<int, int>> feasible_disjuncts(const combinat::PartitionTree& lambda, int ell,
                                                    const combinat::PartitionTree& mu);

}  // namespace strata::oracle
