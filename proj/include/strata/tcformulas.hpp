#pragma once

// Closed-form calculators for higher topological complexity values and the
// symmetric upper bounds for spheres.  Reduced normalization throughout: a
// trivial fibration has genus 0 (the classical TC is the n=2 value plus one).

#include <optional>
#include <string>
#include <vector>

#include "strata/combinat.hpp"  // Rational

namespace strata::tcformulas {

struct TCReport {
    std::string family;
    int n = 2;
    std::string params;
    long long lower = 0;
    long long upper = 0;
    std::optional<long long> value;  // present iff lower == upper
    std::optional<Rational> rational_bound;
    std::string provenance;
};

/// TC_n of a product of spheres: m(n-1) + l with m factors, l of them
/// even-dimensional.
TCReport tc_sphere_product(const std::vector<int>& ks, int n);

/// TC_n(T^k) = k(n-1).
TCReport tc_torus(int k, int n);

/// TC_n(M^{2m}) = nm for a closed simply connected symplectic manifold.
TCReport tc_symplectic(int m, int n);

/// TC_n(HP^m) = nm.
TCReport tc_quaternionic(int m, int n);

struct GenusBound {
    Rational rational;  // i - 1 - (i-2)/k
    long long floored;  // floor(((i-1)k - (i-2)) / k)
};

/// Upper bound for the genus of the i-th unordered-configuration fibration
/// over S^k: homotopy dimension (k-1)(i-1)+1 of the unordered configuration
/// space over connectivity degree k, i.e. i-1-(i-2)/k.
GenusBound genus_eps_upper(int i, int k);

/// TC^S_n(S^k): rational bound [(n+2)(k-1)+4](n-1)/(2k), integral upper bound
/// (n-1) + sum of floored genus bounds, and the exact value 2(n-1) whenever
/// the lower bound meets it (n=2 any k; n=3 with k odd; k=1).
TCReport tcs_sphere_upper(int n, int k);

std::string to_string(const TCReport& r, bool classical = false);

}  // namespace strata::tcformulas
