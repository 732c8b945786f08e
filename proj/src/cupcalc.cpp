#include "strata/cupcalc.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace strata::cupcalc {

RingDescriptor RingDescriptor::spheres(const std::vector<int>& degrees, int n) {
    if (degrees.empty()) throw ValidationError("RingDescriptor: at least one sphere required");
    if (n < 1) throw ValidationError("RingDescriptor: tensor power must be >= 1");
    RingDescriptor d;
    d.tensor_power = n;
    const std::string names = "vwxyzabc";
    for (size_t i = 0; i < degrees.size(); ++i) {
        if (degrees[i] < 1) throw ValidationError("RingDescriptor: sphere dimension must be >= 1");
        std::string name = i < names.size() ? std::string(1, names[i]) : "g" + std::to_string(i);
        d.factors.push_back({Generator::Kind::Sphere, degrees[i], 1, name});
    }
    return d;
}

RingDescriptor RingDescriptor::truncated(int degree, int height, int n) {
    if (degree < 2 || degree % 2 != 0)
        throw ValidationError("RingDescriptor: truncated generator degree must be positive even");
    if (height < 1) throw ValidationError("RingDescriptor: height must be >= 1");
    if (n < 1) throw ValidationError("RingDescriptor: tensor power must be >= 1");
    RingDescriptor d;
    d.tensor_power = n;
    d.factors.push_back({Generator::Kind::Trunc, degree, height, "u"});
    return d;
}

RingElement::RingElement(RingDescriptor desc) : desc_(std::move(desc)) {}

RingElement RingElement::unit(const RingDescriptor& d) {
    RingElement e(d);
    Monomial one(static_cast<size_t>(d.tensor_power),
                 std::vector<int>(d.factors.size(), 0));
    e.terms_[one] = 1;
    return e;
}

RingElement RingElement::slot_class(const RingDescriptor& d, int gen, int slot) {
    if (gen < 0 || gen >= static_cast<int>(d.factors.size()))
        throw ValidationError("slot_class: generator index out of range");
    if (slot < 1 || slot > d.tensor_power) throw ValidationError("slot_class: slot out of range");
    RingElement e = unit(d);
    Monomial m = e.terms_.begin()->first;
    e.terms_.clear();
    m[static_cast<size_t>(slot - 1)][static_cast<size_t>(gen)] = 1;
    e.terms_[m] = 1;
    return e;
}

long long RingElement::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? 0 : it->second;
}

namespace {

int monomial_degree(const RingDescriptor& d, const Monomial& m) {
    int deg = 0;
    for (const auto& slot : m)
        for (size_t g = 0; g < slot.size(); ++g) deg += slot[g] * d.factors[g].degree;
    return deg;
}

bool monomial_valid(const RingDescriptor& d, const Monomial& m) {
    for (const auto& slot : m)
        for (size_t g = 0; g < slot.size(); ++g)
            if (slot[g] > d.factors[g].height) return false;
    return true;
}

/// Positions (slot, gen) of the odd-degree factor instances, normal order.
std::vector<std::pair<int, int>> odd_positions(const RingDescriptor& d, const Monomial& m) {
    std::vector<std::pair<int, int>> out;
    for (size_t s = 0; s < m.size(); ++s)
        for (size_t g = 0; g < m[s].size(); ++g)
            if (d.factors[g].degree % 2 != 0)
                for (int rep = 0; rep < m[s][g]; ++rep)
                    out.emplace_back(static_cast<int>(s), static_cast<int>(g));
    return out;
}

/// Koszul sign of sorting the concatenation a·b into normal order: each odd
/// factor of b passes the odd factors of a with larger position.
int koszul_sign(const std::vector<std::pair<int, int>>& a, const std::vector<std::pair<int, int>>& b) {
    long long inversions = 0;
    for (const auto& y : b)
        for (const auto& x : a)
            if (y < x) ++inversions;
    return inversions % 2 == 0 ? 1 : -1;
}

}  // namespace

std::optional<int> RingElement::degree() const {
    std::optional<int> deg;
    for (const auto& [m, c] : terms_) {
        (void)c;
        int d = monomial_degree(desc_, m);
        if (deg && *deg != d) return std::nullopt;
        deg = d;
    }
    return deg;
}

void RingElement::insert_term(Monomial m, long long coeff) {
    if (coeff == 0) return;
    auto [it, fresh] = terms_.emplace(std::move(m), coeff);
    if (!fresh) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

RingElement RingElement::operator+(const RingElement& o) const {
    if (!(desc_ == o.desc_)) throw ValidationError("RingElement: descriptor mismatch");
    RingElement out = *this;
    for (const auto& [m, c] : o.terms_) out.insert_term(m, c);
    return out;
}

RingElement RingElement::operator-(const RingElement& o) const { return *this + o.scaled(-1); }

RingElement RingElement::scaled(long long c) const {
    RingElement out(desc_);
    if (c == 0) return out;
    for (const auto& [m, v] : terms_) out.terms_[m] = v * c;
    return out;
}

RingElement RingElement::operator*(const RingElement& o) const {
    if (!(desc_ == o.desc_)) throw ValidationError("RingElement: descriptor mismatch");
    RingElement out(desc_);
    for (const auto& [ma, ca] : terms_) {
        const auto odd_a = odd_positions(desc_, ma);
        for (const auto& [mb, cb] : o.terms_) {
            Monomial prod = ma;
            bool dead = false;
            for (size_t s = 0; s < prod.size() && !dead; ++s)
                for (size_t g = 0; g < prod[s].size(); ++g) {
                    prod[s][g] += mb[s][g];
                    if (prod[s][g] > desc_.factors[g].height) {
                        dead = true;
                        break;
                    }
                }
            if (dead) continue;
            const int sign = koszul_sign(odd_a, odd_positions(desc_, mb));
            out.insert_term(std::move(prod), sign * ca * cb);
        }
    }
    return out;
}

RingElement RingElement::pow(int e) const {
    if (e < 0) throw ValidationError("RingElement: negative power");
    RingElement out = unit(desc_);
    for (int i = 0; i < e; ++i) out = out * (*this);
    return out;
}

namespace {

std::string monomial_str(const RingDescriptor& d, const Monomial& m) {
    std::ostringstream out;
    bool any = false;
    for (size_t s = 0; s < m.size(); ++s)
        for (size_t g = 0; g < m[s].size(); ++g)
            if (m[s][g] > 0) {
                if (any) out << '*';
                out << d.factors[g].name << s + 1;
                if (m[s][g] > 1) out << '^' << m[s][g];
                any = true;
            }
    return any ? out.str() : "1";
}

}  // namespace

std::string RingElement::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) out << (c >= 0 ? " + " : " - ");
        else if (c < 0) out << "-";
        long long a = c < 0 ? -c : c;
        if (a != 1)
            out << a << "*" << monomial_str(desc_, m);
        else
            out << monomial_str(desc_, m);
        first = false;
    }
    return out.str();
}

RingElement diagonal_pullback(const RingElement& a) {
    const RingDescriptor& d = a.descriptor();
    RingDescriptor target = d;
    target.tensor_power = 1;
    RingElement out(target);

    for (const auto& [m, c] : a.terms()) {
        // Concatenate the slot monomials and re-sort by generator: odd-odd
        // pairs out of order contribute the sign.
        std::vector<std::pair<int, int>> odd;  // (slot, gen) in slot order
        Monomial merged(1, std::vector<int>(d.factors.size(), 0));
        for (size_t s = 0; s < m.size(); ++s)
            for (size_t g = 0; g < m[s].size(); ++g) {
                merged[0][g] += m[s][g];
                if (d.factors[g].degree % 2 != 0)
                    for (int rep = 0; rep < m[s][g]; ++rep)
                        odd.emplace_back(static_cast<int>(s), static_cast<int>(g));
            }
        if (!monomial_valid(target, merged)) continue;
        long long inversions = 0;
        for (size_t i = 0; i < odd.size(); ++i)
            for (size_t j = i + 1; j < odd.size(); ++j)
                if (odd[j].second < odd[i].second) ++inversions;
        out.insert_term(std::move(merged), inversions % 2 == 0 ? c : -c);
    }
    return out;
}

MultBySphereReport verify_multbysphere(int n, int k) {
    if (n < 2) throw ValidationError("verify_multbysphere: n must be >= 2");
    if (k < 1) throw ValidationError("verify_multbysphere: k must be >= 1");
    if (n * k > 256) throw ValidationError("verify_multbysphere: degree overflow");

    RingDescriptor d = RingDescriptor::spheres({k}, n);
    auto v = [&](int i) { return RingElement::slot_class(d, 0, i); };

    MultBySphereReport report;
    {
        RingElement prod = RingElement::unit(d);
        for (int i = 2; i <= n; ++i) prod = prod * (v(i) - v(1));
        Monomial lead(static_cast<size_t>(n), std::vector<int>(1, 1));
        lead[0][0] = 0;  // v_2*...*v_n
        WitnessReport& w = report.difference_product;
        w.witness = "(v2-v1)(v3-v1)...(vn-v1)";
        w.factors = n - 1;
        w.leading_monomial = monomial_str(d, lead);
        w.coefficient = prod.coefficient(lead);
        w.nonzero = !prod.is_zero();
        w.conclusion = "cl(S^" + std::to_string(k) + ", " + std::to_string(n) +
                       ") >= " + std::to_string(n - 1);
    }
    report.cl_lower_bound = n - 1;
    if (k % 2 == 0) {
        RingElement sum(d);
        for (int i = 1; i <= n - 1; ++i) sum = sum + RingElement::slot_class(d, 0, i);
        sum = sum - RingElement::slot_class(d, 0, n).scaled(n - 1);
        RingElement prod = sum.pow(n);
        Monomial lead(static_cast<size_t>(n), std::vector<int>(1, 1));  // v_1*...*v_n
        WitnessReport w;
        w.witness = "(v1+...+v(n-1)-(n-1)vn)^n";
        w.factors = n;
        w.leading_monomial = monomial_str(d, lead);
        w.coefficient = prod.coefficient(lead);
        w.nonzero = !prod.is_zero();
        w.conclusion = "cl(S^" + std::to_string(k) + ", " + std::to_string(n) +
                       ") >= " + std::to_string(n);
        report.even_power_product = std::move(w);
        report.cl_lower_bound = n;
    }
    return report;
}

WitnessReport verify_cohom(int n, int m, int d) {
    if (n < 2) throw ValidationError("verify_cohom: n must be >= 2");
    if (m < 1) throw ValidationError("verify_cohom: m must be >= 1");
    if (d < 2 || d % 2 != 0) throw ValidationError("verify_cohom: d must be positive even");
    if (n * m * d > 512) throw ValidationError("verify_cohom: degree overflow");

    RingDescriptor desc = RingDescriptor::truncated(d, m, n);
    auto u = [&](int i) { return RingElement::slot_class(desc, 0, i); };

    RingElement prod = (u(2) - u(1)).pow(2 * m);
    for (int i = 3; i <= n; ++i) prod = prod * (u(i) - u(1)).pow(m);

    Monomial lead(static_cast<size_t>(n), std::vector<int>(1, m));  // u_1^m*...*u_n^m
    WitnessReport w;
    w.witness = "(u2-u1)^" + std::to_string(2 * m) + " * prod_{i>=3} (ui-u1)^" + std::to_string(m);
    w.factors = m * n;
    w.leading_monomial = monomial_str(desc, lead);
    w.coefficient = prod.coefficient(lead);
    w.nonzero = !prod.is_zero();
    w.conclusion = w.nonzero ? "TC_" + std::to_string(n) + "(X) >= " + std::to_string(m * n)
                             : "witness vanished";
    return w;
}

SpheresProductReport verify_spheres_product(const std::vector<int>& ks, int n) {
    if (ks.empty()) throw ValidationError("verify_spheres_product: at least one sphere");
    if (n < 2) throw ValidationError("verify_spheres_product: n must be >= 2");
    long long degree_cap = 0;
    for (int k : ks) {
        if (k < 1) throw ValidationError("verify_spheres_product: sphere dimensions must be >= 1");
        degree_cap += static_cast<long long>(k) * n;
    }
    if (degree_cap > 512) throw ValidationError("verify_spheres_product: degree overflow");

    RingDescriptor d = RingDescriptor::spheres(ks, n);
    const int m = static_cast<int>(ks.size());
    int even = 0;

    SpheresProductReport report;
    report.all_factors_zero_divisors = true;

    std::vector<RingElement> factors;
    for (int g = 0; g < m; ++g) {
        auto cls = [&](int slot) { return RingElement::slot_class(d, g, slot); };
        if (ks[static_cast<size_t>(g)] % 2 == 0) {
            ++even;
            RingElement sum(d);
            for (int i = 1; i <= n - 1; ++i) sum = sum + cls(i);
            sum = sum - cls(n).scaled(n - 1);
            for (int rep = 0; rep < n; ++rep) factors.push_back(sum);
        } else {
            for (int i = 2; i <= n; ++i) factors.push_back(cls(i) - cls(1));
        }
    }

    RingElement prod = RingElement::unit(d);
    for (const RingElement& f : factors) {
        if (!diagonal_pullback(f).is_zero()) report.all_factors_zero_divisors = false;
        prod = prod * f;
    }

    WitnessReport& w = report.product;
    w.witness = "product of per-sphere zero-divisor witnesses";
    w.factors = static_cast<int>(factors.size());
    w.nonzero = !prod.is_zero();
    if (!prod.is_zero()) {
        const auto& [lm, lc] = *prod.terms().begin();
        w.leading_monomial = monomial_str(d, lm);
        w.coefficient = lc;
    }
    report.cl_lower_bound = m * (n - 1) + even;
    report.certified = w.nonzero && report.all_factors_zero_divisors &&
                       w.factors == report.cl_lower_bound;
    w.conclusion = report.certified
                       ? "cl >= " + std::to_string(report.cl_lower_bound)
                       : "not certified";
    return report;
}

int search_cl_single_sphere(int k, int n) {
    if (n < 2 || n > 3) throw ValidationError("search_cl_single_sphere: n must be 2 or 3");
    if (k < 1 || k > 8) throw ValidationError("search_cl_single_sphere: k must be in 1..8");

    RingDescriptor d = RingDescriptor::spheres({k}, n);
    // Degree-k zero divisors sum a_i v_i with sum a_i = 0; coefficients in [-2,2].
    std::vector<RingElement> divisors;
    std::vector<int> coeff(static_cast<size_t>(n - 1), -2);
    while (true) {
        bool all_zero = std::all_of(coeff.begin(), coeff.end(), [](int c) { return c == 0; });
        if (!all_zero) {
            RingElement e(d);
            for (int i = 0; i < n - 1; ++i) {
                RingElement basis =
                    RingElement::slot_class(d, 0, i + 2) - RingElement::slot_class(d, 0, 1);
                e = e + basis.scaled(coeff[static_cast<size_t>(i)]);
            }
            divisors.push_back(std::move(e));
        }
        int pos = 0;
        while (pos < n - 1 && coeff[static_cast<size_t>(pos)] == 2) {
            coeff[static_cast<size_t>(pos)] = -2;
            ++pos;
        }
        if (pos == n - 1) break;
        ++coeff[static_cast<size_t>(pos)];
    }

    // Longest nonzero product over multisets, longest length first.
    for (int len = n; len >= 1; --len) {
        std::vector<int> pick;
        std::function<bool(int, const RingElement&)> rec = [&](int start, const RingElement& acc) {
            if (acc.is_zero()) return false;
            if (static_cast<int>(pick.size()) == len) return true;
            for (int i = start; i < static_cast<int>(divisors.size()); ++i) {
                pick.push_back(i);
                if (rec(i, acc * divisors[static_cast<size_t>(i)])) return true;
                pick.pop_back();
            }
            return false;
        };
        if (rec(0, RingElement::unit(d))) return len;
    }
    return 0;
}

}  // namespace strata::cupcalc
