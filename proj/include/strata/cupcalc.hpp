#pragma once

// Graded-commutative ring calculator for H*(X^n; Z) where X is a product of
// spheres or a space with truncated polynomial cohomology.  Basis monomials
// assign a monomial in the generators of H*(X) to each tensor slot; products
// carry Koszul signs.  All verdicts are exact integer statements.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "strata/errors.hpp"

namespace strata::cupcalc {

struct Generator {
    enum class Kind { Sphere, Trunc };

    Kind kind = Kind::Sphere;
    int degree = 1;  // Trunc generators must have even degree
    int height = 1;  // g^{height+1} = 0 (spheres are square-zero)
    std::string name = "v";

    bool operator==(const Generator&) const = default;
};

struct RingDescriptor {
    std::vector<Generator> factors;  // generators of H*(X)
    int tensor_power = 1;            // n

    /// H*(S^{k_1} x ... x S^{k_m})^{⊗n}, generators named v,w,x,...
    static RingDescriptor spheres(const std::vector<int>& degrees, int n);
    /// H*(X)^{⊗n} for a single truncated generator u of the given degree/height.
    static RingDescriptor truncated(int degree, int height, int n);

    bool operator==(const RingDescriptor&) const = default;
};

/// exps[slot][gen]; slots 0-based internally, 1-based in the API.
using Monomial = std::vector<std::vector<int>>;

class RingElement {
public:
    explicit RingElement(RingDescriptor desc);  // zero element

    static RingElement unit(const RingDescriptor& d);
    /// Generator `gen` placed in tensor slot `slot` (1-based), unit elsewhere.
    static RingElement slot_class(const RingDescriptor& d, int gen, int slot);

    const RingDescriptor& descriptor() const { return desc_; }
    const std::map<Monomial, long long>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    long long coefficient(const Monomial& m) const;
    /// Homogeneous degree, nullopt for 0 or mixed elements.
    std::optional<int> degree() const;

    RingElement operator+(const RingElement& o) const;
    RingElement operator-(const RingElement& o) const;
    RingElement operator*(const RingElement& o) const;
    RingElement scaled(long long c) const;
    RingElement pow(int e) const;

    bool operator==(const RingElement& o) const { return desc_ == o.desc_ && terms_ == o.terms_; }

    std::string to_string() const;

private:
    void insert_term(Monomial m, long long coeff);

    friend RingElement diagonal_pullback(const RingElement& a);

    RingDescriptor desc_;
    std::map<Monomial, long long> terms_;
};

/// d_n^*: multiply the slot monomials together inside H*(X) (Koszul signs),
/// extended linearly; the result lives in the tensor_power-1 descriptor.
RingElement diagonal_pullback(const RingElement& a);

struct WitnessReport {
    bool nonzero = false;
    std::string witness;           // description of the product evaluated
    std::string leading_monomial;  // basis monomial whose coefficient is reported
    long long coefficient = 0;
    int factors = 0;  // number of zero-divisor factors in the product
    std::string conclusion;
};

/// (v_2-v_1)...(v_n-v_1) over S^k, plus (v_1+...+v_{n-1}-(n-1)v_n)^n when k is
/// even; the second product is the stronger witness when it applies.
struct MultBySphereReport {
    WitnessReport difference_product;
    std::optional<WitnessReport> even_power_product;
    int cl_lower_bound = 0;
};
MultBySphereReport verify_multbysphere(int n, int k);

/// (u_2-u_1)^{2m}(u_3-u_1)^m...(u_n-u_1)^m for a truncated class u of even
/// degree d and height m; reports the coefficient of u_1^m...u_n^m.
WitnessReport verify_cohom(int n, int m, int d);

struct SpheresProductReport {
    bool certified = false;  // product nonzero and every factor a zero divisor
    bool all_factors_zero_divisors = false;
    int cl_lower_bound = 0;  // m(n-1) + (number of even spheres)
    WitnessReport product;
};
SpheresProductReport verify_spheres_product(const std::vector<int>& ks, int n);

/// Longest nonzero product of degree-k zero divisors with coefficients in
/// [-2,2], single sphere only, n <= 3.  Matches cl(S^k, n) on this family.
int search_cl_single_sphere(int k, int n);

}  // namespace strata::cupcalc
