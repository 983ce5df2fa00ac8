#pragma once

#include <algorithm>
#include <queue>
#include <utility>
#include <vector>

#include "polyspec/exact.hpp"
#include "polyspec/intmat.hpp"
#include "polyspec/polytope.hpp"
#include "polyspec/spectrum.hpp"

namespace polyspec {

// Weight system of a simplex: the absolute maximal minors of its vertex
// matrix, canonicalized ascending.
struct WeightSystem {
    IntVec q;  // ascending, all >= 1
    Int mu;    // sum of the weights
    std::size_t n;  // dimension: q has n+1 entries

    bool operator==(const WeightSystem& other) const { return q == other.q; }
    bool operator<(const WeightSystem& other) const { return q < other.q; }
};

inline WeightSystem make_weight_system(IntVec q) {
    if (q.size() < 2) throw dimension_error("weight system needs at least two weights");
    for (const Int& x : q)
        if (x < 1) throw domain_error("weights must be positive");
    std::sort(q.begin(), q.end());
    Int mu = 0;
    for (const Int& x : q) mu += x;
    const std::size_t n = q.size() - 1;
    return WeightSystem{std::move(q), std::move(mu), n};
}

// Sector data of a weighted simplex: the set F = { l/q_i : 0 <= l < q_i },
// the counts d_i = card{ j : q_j f_i in Z }, and the ages/beta values
// beta_i = d_1 + ... + d_{i-1} - mu f_i (beta_1 = 0).
struct SectorData {
    RatVec f;
    std::vector<Int> d;
    RatVec beta;
    RatVec ages;
};

inline bool is_reduced(const WeightSystem& w) { return vec_gcd(w.q) == 1; }

inline void require_reduced(const WeightSystem& w) {
    if (!is_reduced(w)) throw reducedness_error("weight system is not reduced");
}

// Reflexive iff every weight divides mu.
inline bool is_reflexive_weights(const WeightSystem& w) {
    require_reduced(w);
    for (const Int& x : w.q)
        if (w.mu % x != 0) return false;
    return true;
}

inline Int max_weight_multiplicity(const WeightSystem& w) {
    Int m = 0;
    for (const Int& x : w.q)
        if (x == w.q.back()) ++m;
    return m;
}

inline WeightSystem weight_of_simplex(const LatticePolytope& p) {
    if (!p.is_simplex()) throw shape_error("weight_of_simplex: polytope is not a simplex");
    const std::size_t n = p.dim();
    IntVec q;
    for (std::size_t drop = 0; drop <= n; ++drop) {
        std::vector<IntVec> cols;
        for (std::size_t i = 0; i <= n; ++i)
            if (i != drop) cols.push_back(p.vertices()[i]);
        q.push_back(abs(det(IntMatrix::from_columns(cols))));
    }
    return make_weight_system(std::move(q));
}

// Lazily walks the sectors in ascending f order, merging the n+1 arithmetic
// progressions l/q_i.  d_i falls out of the merge: it is the number of
// progressions hitting f_i.  fn(i, f_i, d_i, sum_{l<i} d_l) returns false to
// stop early.
template <class Fn>
void scan_sectors(const WeightSystem& w, Fn&& fn) {
    require_reduced(w);
    using Entry = std::pair<Rat, std::size_t>;  // (value, progression index)
    auto cmp = [](const Entry& a, const Entry& b) { return a.first > b.first; };
    std::priority_queue<Entry, std::vector<Entry>, decltype(cmp)> heap(cmp);
    for (std::size_t i = 0; i < w.q.size(); ++i) heap.emplace(Rat(0), i);

    std::size_t sector = 0;
    Int d_sum = 0;
    while (!heap.empty()) {
        const Rat f = heap.top().first;
        Int d = 0;
        while (!heap.empty() && heap.top().first == f) {
            const std::size_t j = heap.top().second;
            heap.pop();
            ++d;
            const Rat next = f + Rat(1, w.q[j]);
            if (next < 1) heap.emplace(next, j);
        }
        ++sector;
        if (!fn(sector, f, d, d_sum)) return;
        d_sum += d;
    }
}

inline SectorData sector_data(const WeightSystem& w) {
    SectorData s;
    scan_sectors(w, [&](std::size_t, const Rat& f, const Int& d, const Int& d_before) {
        s.f.push_back(f);
        s.d.push_back(d);
        const Rat beta = Rat(d_before) - Rat(w.mu) * f;
        s.beta.push_back(beta);
        s.ages.push_back(beta);
        return true;
    });
    check_internal(!s.f.empty() && s.f[0] == 0 && s.d[0] == Int(w.n + 1),
                   "sector_data: f_1 = 0, d_1 = n+1 violated");
    return s;
}

// Spectrum at infinity from the sector data: the multiset union over sectors
// of { beta_i, beta_i + 1, ..., beta_i + d_i - 1 }.
inline FractionalPolynomial spectrum_from_weights(const WeightSystem& w) {
    FractionalPolynomial spec;
    scan_sectors(w, [&](std::size_t, const Rat& f, const Int& d, const Int& d_before) {
        const Rat beta = Rat(d_before) - Rat(w.mu) * f;
        for (Int t = 0; t < d; ++t) spec.add_term(beta + Rat(t), 1);
        return true;
    });
    return spec;
}

// The unique (up to unimodular transformation) reduced simplex with the
// given weight.  Vertices come from a unimodular completion of q: with
// U q = e_{n+1}, the i-th vertex is the first n coordinates of column i of
// U, so that sum q_i v_i = 0 with all q_i > 0.  A Hermite row reduction then
// shrinks the coordinates, and the weight is re-verified.
inline LatticePolytope construct_simplex(const WeightSystem& w) {
    require_reduced(w);
    const std::size_t n = w.n;
    IntMatrix u = unimodular_completion(w.q);
    std::vector<IntVec> verts(n + 1, IntVec(n));
    for (std::size_t i = 0; i <= n; ++i)
        for (std::size_t r = 0; r < n; ++r) verts[i][r] = u(r, i);

    // Coordinate reduction: Hermite-reduce the matrix of the vertices other
    // than the smallest-weight one (its minor is the smallest), then map all
    // vertices through the transform.
    IntMatrix b = IntMatrix::from_columns(std::vector<IntVec>(verts.begin() + 1, verts.end()));
    IntMatrix t = hermite_row_transform(b);
    for (IntVec& v : verts) v = t * v;

    IntVec minors;
    for (std::size_t drop = 0; drop <= n; ++drop) {
        std::vector<IntVec> cols;
        for (std::size_t i = 0; i <= n; ++i)
            if (i != drop) cols.push_back(verts[i]);
        minors.push_back(abs(det(IntMatrix::from_columns(cols))));
    }
    std::sort(minors.begin(), minors.end());
    check_internal(minors == w.q, "construct_simplex: recomputed weight mismatch");
    return LatticePolytope::from_vertices(n, std::move(verts));
}

// All reduced reflexive weight systems of length n+1, each exactly once,
// sorted lexicographically.  Enumerates the multisets k_0 >= ... >= k_n of
// positive integers with sum 1/k_i = 1 (k_i = mu / q_i) by bounded recursive
// search.
inline std::vector<WeightSystem> enumerate_reflexive(std::size_t n) {
    if (n < 1) throw domain_error("enumerate_reflexive: dimension must be >= 1");
    std::vector<WeightSystem> out;
    IntVec ks;

    // k_i = mu / q_i; map the multiset back through q_i = (lcm(k)/k_i) / g.
    auto emit = [&] {
        Int l = 1;
        for (const Int& k : ks) l = boost::multiprecision::lcm(l, k);
        IntVec q;
        for (const Int& k : ks) q.push_back(l / k);
        const Int g = vec_gcd(q);
        for (Int& x : q) x /= g;
        WeightSystem w = make_weight_system(std::move(q));
        check_internal(is_reduced(w) && is_reflexive_weights(w),
                       "enumerate_reflexive: produced system not reduced reflexive");
        out.push_back(std::move(w));
    };

    // remaining terms to place, target sum, nondecreasing k values
    auto rec = [&](auto&& self, std::size_t remaining, const Rat& target, const Int& min_k) -> void {
        if (remaining == 1) {
            if (rat_num(target) == 1 && rat_den(target) >= min_k) {
                ks.push_back(rat_den(target));
                emit();
                ks.pop_back();
            }
            return;
        }
        // need 1/k < target (strictly: later terms are positive) and
        // remaining/k >= target
        Int lo = (rat_den(target) + rat_num(target) - 1) / rat_num(target);  // ceil(1/target)
        if (lo < min_k) lo = min_k;
        const Int hi = rat_floor(Rat(Int(remaining)) / target);
        for (Int k = lo; k <= hi; ++k) {
            const Rat rest = target - Rat(1, k);
            if (rest <= 0) continue;
            ks.push_back(k);
            self(self, remaining - 1, rest, k);
            ks.pop_back();
        }
    };
    rec(rec, n + 1, Rat(1), Int(1));
    std::sort(out.begin(), out.end());
    return out;
}

// Payne family: weight (1, ..., 1, s) with s*k ones.  Returns the weight
// system together with the closed-form spectrum
// 1 + z + ... + z^{sk} + z^k + z^{2k} + ... + z^{(s-1)k}.
inline std::pair<WeightSystem, FractionalPolynomial> payne_weights(const Int& s, const Int& k) {
    if (s < 2 || k < 2) throw domain_error("payne_weights: need s >= 2 and k >= 2");
    const Int n = s * k;
    IntVec q(n.convert_to<std::size_t>(), Int(1));
    q.push_back(s);
    WeightSystem w = make_weight_system(std::move(q));
    FractionalPolynomial spec;
    for (Int e = 0; e <= n; ++e) spec.add_term(Rat(e), 1);
    for (Int i = 1; i < s; ++i) spec.add_term(Rat(i * k), 1);
    return {std::move(w), std::move(spec)};
}

}  // namespace polyspec
