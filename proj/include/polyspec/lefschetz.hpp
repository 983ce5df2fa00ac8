#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "polyspec/exact.hpp"
#include "polyspec/fanbox.hpp"
#include "polyspec/polytope.hpp"
#include "polyspec/weights.hpp"

namespace polyspec {

// Outcome of a hard Lefschetz check.  Witnesses name the data violating the
// criterion; their collection stops after a small cap so that massively
// failing inputs stay cheap.
struct HLVerdict {
    enum class Method { box_criterion, weight_criterion };

    struct BoxWitness {
        BoxElement element;
    };

    // sector index i with the violated equality lhs ?= rhs
    struct SectorWitness {
        std::size_t index;
        Rat lhs;
        Rat rhs;
        bool integral_case;
    };

    bool holds = true;
    Method method = Method::box_criterion;
    std::vector<BoxWitness> box_witnesses;
    std::vector<SectorWitness> sector_witnesses;
};

inline constexpr std::size_t kMaxWitnesses = 8;

// The age condition on a box element: floor(nu) = (dim sigma - 1)/2 when nu
// is fractional, nu = dim sigma / 2 when nu is integral.
inline bool hl_element_passes(const BoxElement& e) {
    const Int support(e.support_dim);
    if (is_integer(e.nu)) return 2 * rat_num(e.nu) == support;
    return support % 2 == 1 && 2 * rat_floor(e.nu) == support - 1;
}

// Box criterion over the union of the box sets of all maximal cones.
// Enumeration stops once enough witnesses are collected.
inline HLVerdict hl_box_criterion(const FaceFan& fan) {
    HLVerdict verdict;
    verdict.method = HLVerdict::Method::box_criterion;
    struct stop_enumeration {};
    try {
        for (const MaximalCone& cone : fan.maximal_cones()) {
            fan.for_each_box_element(cone, [&](BoxElement e) {
                if (hl_element_passes(e)) return;
                verdict.holds = false;
                verdict.box_witnesses.push_back(HLVerdict::BoxWitness{std::move(e)});
                if (verdict.box_witnesses.size() >= kMaxWitnesses) throw stop_enumeration{};
            });
        }
    } catch (const stop_enumeration&) {
    }
    return verdict;
}

inline HLVerdict hl_box_criterion(const LatticePolytope& p) {
    return hl_box_criterion(FaceFan(p));
}

// Weight-system criterion for a reduced simplex: per sector i >= 2, with
// a = -mu f_i + d_1 + ... + d_{i-1}, require floor(a) = (d_1 - d_i - 1)/2
// when a is fractional (which needs d_1 - d_i - 1 even) and
// a = (d_1 - d_i)/2 when a is integral.  The all-ones weight is the smooth
// case: there are no twisted sectors and the criterion is vacuous.
inline HLVerdict hl_weight_criterion(const WeightSystem& w) {
    require_reduced(w);
    HLVerdict verdict;
    verdict.method = HLVerdict::Method::weight_criterion;
    const Int d1(w.n + 1);
    scan_sectors(w, [&](std::size_t i, const Rat& f, const Int& d, const Int& d_before) {
        if (i == 1) return true;
        const Rat a = Rat(d_before) - Rat(w.mu) * f;
        bool ok;
        bool integral = is_integer(a);
        Rat rhs;
        if (integral) {
            rhs = Rat(d1 - d, 2);
            ok = (a == rhs);
        } else {
            rhs = Rat(d1 - d - 1, 2);
            ok = ((d1 - d - 1) % 2 == 0) && Rat(rat_floor(a)) == rhs;
        }
        if (!ok) {
            verdict.holds = false;
            verdict.sector_witnesses.push_back(
                HLVerdict::SectorWitness{i, integral ? a : Rat(rat_floor(a)), rhs, integral});
        }
        return verdict.sector_witnesses.size() < kMaxWitnesses;
    });
    return verdict;
}

// Necessary condition for a reflexive simplex with q_n >= 2:
// 2 mu / q_n = n + 1 + m(q_n).
inline bool hl_necessary_condition(const WeightSystem& w) {
    require_reduced(w);
    if (!is_reflexive_weights(w)) throw domain_error("hl_necessary_condition: weights not reflexive");
    if (w.q.back() == 1)
        throw not_applicable_error("hl_necessary_condition: smooth case (q_n = 1)");
    return Rat(2 * w.mu, w.q.back()) == Rat(Int(w.n + 1) + max_weight_multiplicity(w));
}

// KKP conjecture for a reflexive simplex, via its equivalence with the
// integral-case sector equality d_1 + ... + d_{i-1} - mu f_i = (d_1 - d_i)/2
// for every i >= 2.  Vacuously true in the smooth case.
inline bool kkp_check(const WeightSystem& w) {
    require_reduced(w);
    if (!is_reflexive_weights(w)) throw domain_error("kkp_check: weights not reflexive");
    const Int d1(w.n + 1);
    bool ok = true;
    scan_sectors(w, [&](std::size_t i, const Rat& f, const Int& d, const Int& d_before) {
        if (i == 1) return true;
        if (Rat(d_before) - Rat(w.mu) * f != Rat(d1 - d, 2)) {
            ok = false;
            return false;
        }
        return true;
    });
    return ok;
}

}  // namespace polyspec
