#pragma once

#include <map>
#include <utility>
#include <vector>

#include "polyspec/exact.hpp"
#include "polyspec/fanbox.hpp"
#include "polyspec/polytope.hpp"

namespace polyspec {

// Polynomial with exact rational exponents and integer coefficients; houses
// spectra, delta-vectors and alpha-slices.  No zero coefficients are stored
// and iteration is in ascending exponent order.
class FractionalPolynomial {
public:
    FractionalPolynomial() = default;

    static FractionalPolynomial one() {
        FractionalPolynomial f;
        f.add_term(0, 1);
        return f;
    }

    static FractionalPolynomial monomial(const Rat& exponent, const Int& coeff = 1) {
        FractionalPolynomial f;
        f.add_term(exponent, coeff);
        return f;
    }

    void add_term(const Rat& exponent, const Int& coeff) {
        if (coeff == 0) return;
        auto [it, inserted] = terms_.emplace(exponent, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second == 0) terms_.erase(it);
        }
    }

    const std::map<Rat, Int>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    Int coefficient(const Rat& exponent) const {
        auto it = terms_.find(exponent);
        return it == terms_.end() ? Int(0) : it->second;
    }

    Int eval_at_one() const {
        Int s = 0;
        for (const auto& [e, c] : terms_) s += c;
        return s;
    }

    bool operator==(const FractionalPolynomial& other) const { return terms_ == other.terms_; }

private:
    std::map<Rat, Int> terms_;
};

inline FractionalPolynomial fp_mul(const FractionalPolynomial& a, const FractionalPolynomial& b) {
    FractionalPolynomial p;
    for (const auto& [ea, ca] : a.terms())
        for (const auto& [eb, cb] : b.terms()) p.add_term(ea + eb, ca * cb);
    return p;
}

inline FractionalPolynomial operator*(const FractionalPolynomial& a, const FractionalPolynomial& b) {
    return fp_mul(a, b);
}

// exponent alpha -> n - alpha; coefficients preserved
inline FractionalPolynomial reciprocal_transform(const FractionalPolynomial& f, const Int& n) {
    FractionalPolynomial out;
    for (const auto& [e, c] : f.terms()) {
        if (e < 0 || e > Rat(n))
            throw range_error("reciprocal_transform: exponent outside [0, n]");
        out.add_term(Rat(n) - e, c);
    }
    return out;
}

inline bool is_symmetric(const FractionalPolynomial& f, const Int& n) {
    return reciprocal_transform(f, n) == f;
}

inline bool is_polynomial(const FractionalPolynomial& f) {
    for (const auto& [e, c] : f.terms())
        if (e < 0 || !is_integer(e)) return false;
    return true;
}

// Coefficient list a_0 .. a_n of an integer-exponent spectrum supported in
// [0, n]; missing exponents contribute zero.
inline std::vector<Int> coefficient_list(const FractionalPolynomial& f, const Int& n) {
    if (!is_polynomial(f)) throw domain_error("coefficient_list: non-integral exponents");
    std::vector<Int> out(n.convert_to<std::size_t>() + 1, Int(0));
    for (const auto& [e, c] : f.terms()) {
        if (e > Rat(n)) throw range_error("coefficient_list: exponent exceeds n");
        out[rat_num(e).convert_to<std::size_t>()] = c;
    }
    return out;
}

// Rises then falls (a single peak, plateaus allowed).
inline bool is_unimodal(const std::vector<Int>& coeffs) {
    bool descending = false;
    for (std::size_t i = 0; i + 1 < coeffs.size(); ++i) {
        if (coeffs[i + 1] < coeffs[i]) descending = true;
        else if (coeffs[i + 1] > coeffs[i] && descending) return false;
    }
    return true;
}

// Coefficients read in ascending exponent order over exponents <= n/2 must
// be nondecreasing.  Input must be symmetric about n/2; this is a diagnostic
// flag, not an invariant.
inline bool lower_half_nondecreasing(const FractionalPolynomial& f, const Int& n) {
    if (!is_symmetric(f, n))
        throw domain_error("lower_half_nondecreasing: spectrum not symmetric about n/2");
    const Rat half(n, 2);
    bool have_prev = false;
    Int prev = 0;
    for (const auto& [e, c] : f.terms()) {
        if (e > half) break;
        if (have_prev && c < prev) return false;
        prev = c;
        have_prev = true;
    }
    return true;
}

// 1 <= d(1) and d(1) <= d(i) for 2 <= i <= floor(n/2).
inline bool hibi_inequalities(const FractionalPolynomial& f, const Int& n) {
    if (!is_polynomial(f)) throw domain_error("hibi_inequalities: non-integral exponents");
    if (f.coefficient(0) != 1)
        throw domain_error("hibi_inequalities: constant coefficient must be 1");
    const Int d1 = f.coefficient(1);
    if (d1 < 1) return false;
    for (Int i = 2; 2 * i <= n; ++i)
        if (f.coefficient(Rat(i)) < d1) return false;
    return true;
}

// Groups terms by the fractional part of the exponent.  Slice alpha is the
// integer-coefficient polynomial Spec^alpha with z^alpha factored out,
// returned as a coefficient list indexed by the integer part.
inline std::map<Rat, std::vector<Int>> alpha_slices(const FractionalPolynomial& f) {
    std::map<Rat, std::vector<Int>> slices;
    for (const auto& [e, c] : f.terms()) {
        if (e < 0) throw domain_error("alpha_slices: negative exponent");
        const Rat alpha = rat_frac(e);
        const std::size_t k = rat_floor(e).convert_to<std::size_t>();
        auto& v = slices[alpha];
        if (v.size() <= k) v.resize(k + 1, Int(0));
        v[k] = c;
    }
    return slices;
}

// Newton spectrum Spec_P(z) = (1-z)^n sum_v z^{nu(v)}, computed by exact
// truncated summation: only lattice points with nu(v) <= n can contribute to
// exponents <= n, because multiplying by (1-z)^n never lowers exponents.
// Points are enumerated cone by cone as v = sum (q_i + k_i) b_i with q a box
// coordinate vector and k nonnegative integers, and deduplicated across
// cones.
inline FractionalPolynomial spectrum_direct(const FaceFan& fan) {
    const LatticePolytope& p = fan.polytope();
    const Int n(p.dim());
    std::map<IntVec, Rat> points;  // v -> nu(v)

    for (const MaximalCone& cone : fan.maximal_cones()) {
        fan.for_each_box_element(cone, [&](const BoxElement& e) {
            if (e.nu > Rat(n)) return;
            const Int budget = rat_floor(Rat(n) - e.nu);
            // odometer over k with sum k_i <= budget
            const std::size_t m = e.coords.size();
            IntVec k(m, Int(0));
            Int used = 0;
            for (;;) {
                IntVec v = e.point;
                for (std::size_t i = 0; i < m; ++i)
                    if (k[i] != 0)
                        for (std::size_t r = 0; r < m; ++r)
                            v[r] += k[i] * cone.generator_matrix(r, i);
                points.emplace(std::move(v), e.nu + Rat(used));
                std::size_t i = 0;
                for (;;) {
                    if (i == m) return;
                    if (used < budget) {
                        ++k[i];
                        ++used;
                        break;
                    }
                    used -= k[i];
                    k[i] = 0;
                    ++i;
                }
            }
        });
    }

    FractionalPolynomial sum;
    for (const auto& [v, nu] : points) sum.add_term(nu, 1);

    FractionalPolynomial one_minus_z_n = FractionalPolynomial::one();
    FractionalPolynomial base;
    base.add_term(0, 1);
    base.add_term(1, -1);
    for (Int i = 0; i < n; ++i) one_minus_z_n = one_minus_z_n * base;

    FractionalPolynomial spec;
    for (const auto& [e, c] : fp_mul(sum, one_minus_z_n).terms())
        if (e <= Rat(n)) spec.add_term(e, c);

    for (const auto& [e, c] : spec.terms()) {
        check_internal(c > 0 && e >= 0 && e <= Rat(n),
                       "spectrum_direct: coefficient/exponent out of range");
    }
    check_internal(is_symmetric(spec, n), "spectrum_direct: spectrum not symmetric");
    check_internal(spec.eval_at_one() == p.normalized_volume(),
                   "spectrum_direct: Spec(1) != normalized volume");
    return spec;
}

inline FractionalPolynomial spectrum_direct(const LatticePolytope& p) {
    return spectrum_direct(FaceFan(p));
}

}  // namespace polyspec
