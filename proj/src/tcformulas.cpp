#include "strata/tcformulas.hpp"

#include <sstream>

#include "strata/errors.hpp"

namespace strata::tcformulas {

namespace {

TCReport exact(std::string family, int n, std::string params, long long value, std::string provenance) {
    TCReport r;
    r.family = std::move(family);
    r.n = n;
    r.params = std::move(params);
    r.lower = r.upper = value;
    r.value = value;
    r.provenance = std::move(provenance);
    return r;
}

}  // namespace

TCReport tc_sphere_product(const std::vector<int>& ks, int n) {
    if (ks.empty()) throw ValidationError("tc_sphere_product: at least one sphere");
    if (n < 2) throw ValidationError("tc_sphere_product: n must be >= 2");
    int even = 0;
    std::ostringstream params;
    params << "ks=[";
    for (size_t i = 0; i < ks.size(); ++i) {
        if (ks[i] < 1) throw ValidationError("tc_sphere_product: sphere dimensions must be >= 1");
        if (ks[i] % 2 == 0) ++even;
        params << (i ? "," : "") << ks[i];
    }
    params << "]";
    const long long m = static_cast<long long>(ks.size());
    return exact("sphere-product", n, params.str(), m * (n - 1) + even,
                 "m(n-1)+l, l = number of even-dimensional sphere factors");
}

TCReport tc_torus(int k, int n) {
    if (k < 1) throw ValidationError("tc_torus: k must be >= 1");
    if (n < 2) throw ValidationError("tc_torus: n must be >= 2");
    return exact("torus", n, "k=" + std::to_string(k), static_cast<long long>(k) * (n - 1),
                 "k(n-1); equals the category of the (n-1)-fold power, the general lower bound "
                 "cat(X^{n-1}) <= TC_n(X) <= cat(X^n)");
}

TCReport tc_symplectic(int m, int n) {
    if (m < 1) throw ValidationError("tc_symplectic: m must be >= 1");
    if (n < 2) throw ValidationError("tc_symplectic: n must be >= 2");
    return exact("symplectic", n, "m=" + std::to_string(m), static_cast<long long>(n) * m,
                 "nm for a closed simply connected symplectic 2m-manifold");
}

TCReport tc_quaternionic(int m, int n) {
    if (m < 1) throw ValidationError("tc_quaternionic: m must be >= 1");
    if (n < 2) throw ValidationError("tc_quaternionic: n must be >= 2");
    return exact("quaternionic", n, "m=" + std::to_string(m), static_cast<long long>(n) * m,
                 "nm for the quaternionic projective m-space");
}

GenusBound genus_eps_upper(int i, int k) {
    if (i < 2) throw ValidationError("genus_eps_upper: i must be >= 2");
    if (k < 1) throw ValidationError("genus_eps_upper: k must be >= 1");
    GenusBound g;
    g.rational = Rational(i - 1) - Rational(i - 2, k);
    g.floored = static_cast<long long>((static_cast<long long>(i - 1) * k - (i - 2)) / k);
    return g;
}

TCReport tcs_sphere_upper(int n, int k) {
    if (n < 2) throw ValidationError("tcs_sphere_upper: n must be >= 2");
    if (k < 1) throw ValidationError("tcs_sphere_upper: k must be >= 1");

    TCReport r;
    r.family = "tcs-sphere";
    r.n = n;
    r.params = "k=" + std::to_string(k);
    r.rational_bound = Rational((n + 2) * (k - 1) + 4) * (n - 1) / (2 * k);

    long long upper = n - 1;
    for (int i = 2; i <= n; ++i) upper += genus_eps_upper(i, k).floored;
    r.upper = upper;

    // genus of the 2-stage fibration is exactly 1 over every sphere; for k odd
    // every stage has genus at least 1.
    long long lower = (n - 1) + 1 + (k % 2 != 0 ? (n - 2) : 0);
    r.lower = lower;
    if (r.lower == r.upper) r.value = r.lower;
    r.provenance =
        "upper: (n-1) + sum of floored per-stage genus bounds; displayed rational form "
        "[(n+2)(k-1)+4](n-1)/2k; exact value 2(n-1) when the bounds meet";
    return r;
}

std::string to_string(const TCReport& r, bool classical) {
    std::ostringstream out;
    const long long shift = classical ? 1 : 0;
    out << r.family << " n=" << r.n;
    if (!r.params.empty()) out << " " << r.params;
    if (r.value)
        out << " value=" << *r.value + shift;
    else
        out << " lower=" << r.lower + shift << " upper=" << r.upper + shift;
    if (r.rational_bound) {
        Rational rb = *r.rational_bound + shift;
        out << " rational_bound=" << rb;
    }
    if (classical) out << " (classical normalization: +1)";
    return out.str();
}

}  // namespace strata::tcformulas
