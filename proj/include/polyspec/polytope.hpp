#pragma once

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "polyspec/boxenum.hpp"
#include "polyspec/exact.hpp"
#include "polyspec/intmat.hpp"

namespace polyspec {

// A facet of a simplicial polytope: n vertices spanning a supporting
// hyperplane.  The normal is stored with the normalization <u, v> = 1 for
// every vertex v on the facet (possible since the origin is interior), so
// the Newton function is max_F <u_F, .> and reflexivity is an integrality
// test on the normals.
struct Facet {
    std::vector<std::size_t> vertex_indices;  // sorted, exactly n of them
    RatVec normal;
};

struct DeltaVector {
    std::vector<Int> entries;  // delta_0 .. delta_n
};

namespace detail {

// Rank of the span of the given integer vectors, by rational elimination.
inline std::size_t rational_rank(std::vector<IntVec> rows, std::size_t width) {
    std::vector<RatVec> a;
    a.reserve(rows.size());
    for (const IntVec& r : rows) {
        RatVec q(width);
        for (std::size_t j = 0; j < width; ++j) q[j] = Rat(r[j]);
        a.push_back(std::move(q));
    }
    std::size_t rank = 0;
    for (std::size_t col = 0; col < width && rank < a.size(); ++col) {
        std::size_t p = rank;
        while (p < a.size() && a[p][col] == 0) ++p;
        if (p == a.size()) continue;
        std::swap(a[rank], a[p]);
        for (std::size_t i = rank + 1; i < a.size(); ++i) {
            if (a[i][col] == 0) continue;
            const Rat f = a[i][col] / a[rank][col];
            for (std::size_t j = col; j < width; ++j) a[i][j] -= f * a[rank][j];
        }
        ++rank;
    }
    return rank;
}

// Nullspace vector of the row span when the rank is exactly n-1; empty
// otherwise.  Rows are n-vectors.
inline RatVec hyperplane_through_origin(const std::vector<IntVec>& rows, std::size_t n) {
    std::vector<RatVec> a;
    for (const IntVec& r : rows) {
        RatVec q(n);
        for (std::size_t j = 0; j < n; ++j) q[j] = Rat(r[j]);
        a.push_back(std::move(q));
    }
    std::vector<std::size_t> pivot_col;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < n && rank < a.size(); ++col) {
        std::size_t p = rank;
        while (p < a.size() && a[p][col] == 0) ++p;
        if (p == a.size()) continue;
        std::swap(a[rank], a[p]);
        const Rat piv = a[rank][col];
        for (std::size_t j = 0; j < n; ++j) a[rank][j] /= piv;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i == rank || a[i][col] == 0) continue;
            const Rat f = a[i][col];
            for (std::size_t j = 0; j < n; ++j) a[i][j] -= f * a[rank][j];
        }
        pivot_col.push_back(col);
        ++rank;
    }
    if (rank != n - 1) return {};
    std::vector<bool> is_pivot(n, false);
    for (std::size_t c : pivot_col) is_pivot[c] = true;
    std::size_t free_col = 0;
    while (is_pivot[free_col]) ++free_col;
    RatVec null(n, Rat(0));
    null[free_col] = 1;
    for (std::size_t i = 0; i < rank; ++i) null[pivot_col[i]] = -a[i][free_col];
    return null;
}

}  // namespace detail

// A full-dimensional simplicial lattice polytope with the origin strictly
// interior, given by its vertices.  Facets are computed on construction and
// every invariant is validated there.
class LatticePolytope {
public:
    static LatticePolytope from_vertices(std::size_t dim, std::vector<IntVec> vertices) {
        return LatticePolytope(dim, std::move(vertices));
    }

    std::size_t dim() const { return dim_; }
    const std::vector<IntVec>& vertices() const { return vertices_; }
    const std::vector<Facet>& facets() const { return facets_; }
    bool is_simplex() const { return vertices_.size() == dim_ + 1; }

    bool is_reflexive() const {
        for (const Facet& f : facets_)
            for (const Rat& u : f.normal)
                if (!is_integer(u)) return false;
        return true;
    }

    // n! vol(P): sum of |det| over the facet cones through the origin.
    Int normalized_volume() const {
        Int total = 0;
        for (const Facet& f : facets_) total += abs(det(facet_vertex_matrix(f)));
        return total;
    }

    // <u_F, v> <= ell for every facet F, as integers after clearing the
    // normal's denominators.
    bool contains_in_dilate(const IntVec& v, const Int& ell) const {
        for (const auto& [a, c] : int_facets_)
            if (dot(a, v) > ell * c) return false;
        return true;
    }

    // All lattice points of ell * P, in lexicographic order, by scanning the
    // integer bounding box.  Simple and correct; the benchmark oracle for
    // any faster kernel.
    std::vector<IntVec> lattice_points(const Int& ell) const {
        if (ell < 1) throw domain_error("lattice_points: dilation factor must be >= 1");
        IntVec lo(dim_), hi(dim_);
        for (std::size_t j = 0; j < dim_; ++j) {
            Int mn = vertices_[0][j], mx = vertices_[0][j];
            for (const IntVec& v : vertices_) {
                mn = std::min(mn, v[j]);
                mx = std::max(mx, v[j]);
            }
            lo[j] = mn * ell;
            hi[j] = mx * ell;
        }
        std::vector<IntVec> out;
        IntVec p = lo;
        for (;;) {
            if (contains_in_dilate(p, ell)) out.push_back(p);
            std::size_t k = dim_;
            while (k > 0) {
                --k;
                if (++p[k] <= hi[k]) break;
                p[k] = lo[k];
                if (k == 0) return out;
            }
            if (dim_ == 0) return out;
        }
    }

    Int lattice_point_count(const Int& ell) const {
        return Int(lattice_points(ell).size());
    }

    // Ehrhart delta-vector.  For a simplex this counts box points of the
    // homogenized cone by height; otherwise it inverts the Ehrhart series
    // from the counts L_P(1..n).  Both routes are cross-checked in the test
    // suite.
    DeltaVector delta_vector() const {
        std::vector<Int> d;
        if (is_simplex()) {
            d.assign(dim_ + 1, Int(0));
            std::vector<IntVec> cols;
            for (const IntVec& v : vertices_) {
                IntVec c = v;
                c.push_back(1);
                cols.push_back(std::move(c));
            }
            for_each_box_point(IntMatrix::from_columns(cols),
                               [&](const IntVec& p, const RatVec&) {
                                   const Int& height = p[dim_];
                                   check_internal(height >= 0 && height <= Int(dim_),
                                                  "delta_vector: box height out of range");
                                   ++d[height.convert_to<std::size_t>()];
                               });
        } else {
            // delta_j = sum_{i=0..j} (-1)^i C(n+1, i) L_P(j - i), L_P(0) = 1.
            std::vector<Int> counts(dim_ + 1);
            counts[0] = 1;
            for (std::size_t ell = 1; ell <= dim_; ++ell)
                counts[ell] = lattice_point_count(Int(ell));
            std::vector<Int> binom(dim_ + 2);
            binom[0] = 1;
            for (std::size_t i = 1; i <= dim_ + 1; ++i)
                binom[i] = binom[i - 1] * Int(dim_ + 2 - i) / Int(i);
            d.assign(dim_ + 1, Int(0));
            for (std::size_t j = 0; j <= dim_; ++j)
                for (std::size_t i = 0; i <= j; ++i) {
                    Int term = binom[i] * counts[j - i];
                    d[j] += (i % 2 == 0) ? term : -term;
                }
        }
        check_internal(d[0] == 1, "delta_vector: delta_0 != 1");
        Int sum = 0;
        for (const Int& x : d) {
            check_internal(x >= 0, "delta_vector: negative entry");
            sum += x;
        }
        check_internal(sum == normalized_volume(), "delta_vector: sum != normalized volume");
        return DeltaVector{std::move(d)};
    }

    IntMatrix facet_vertex_matrix(const Facet& f) const {
        std::vector<IntVec> cols;
        for (std::size_t i : f.vertex_indices) cols.push_back(vertices_[i]);
        return IntMatrix::from_columns(cols);
    }

private:
    LatticePolytope(std::size_t dim, std::vector<IntVec> vertices)
        : dim_(dim), vertices_(std::move(vertices)) {
        validate_basics();
        compute_facets();
        validate_vertices_extremal();
    }

    void validate_basics() const {
        if (dim_ == 0) throw dimension_error("polytope dimension must be positive");
        if (vertices_.size() < dim_ + 1)
            throw dimension_error("not full-dimensional: fewer than dim+1 vertices");
        for (const IntVec& v : vertices_)
            if (v.size() != dim_) throw dimension_error("vertex length does not match dim");
        for (std::size_t i = 0; i < vertices_.size(); ++i)
            for (std::size_t j = i + 1; j < vertices_.size(); ++j)
                if (vertices_[i] == vertices_[j])
                    throw validation_error("vertices not pairwise distinct");
        std::vector<IntVec> diffs;
        for (std::size_t i = 1; i < vertices_.size(); ++i) {
            IntVec d(dim_);
            for (std::size_t j = 0; j < dim_; ++j) d[j] = vertices_[i][j] - vertices_[0][j];
            diffs.push_back(std::move(d));
        }
        if (detail::rational_rank(diffs, dim_) != dim_)
            throw dimension_error("not full-dimensional");
    }

    // Brute force over all n-subsets of vertices with a supporting
    // hyperplane test.  Vertex counts at desk scale are tiny.
    void compute_facets() {
        const std::size_t m = vertices_.size();
        std::vector<std::size_t> idx(dim_);
        for (std::size_t i = 0; i < dim_; ++i) idx[i] = i;
        for (;;) {
            consider_subset(idx);
            // next combination in lexicographic order
            std::size_t k = dim_;
            while (k > 0) {
                --k;
                if (idx[k] + (dim_ - k) < m) {
                    ++idx[k];
                    for (std::size_t j = k + 1; j < dim_; ++j) idx[j] = idx[j - 1] + 1;
                    break;
                }
                if (k == 0) {
                    finalize_facets();
                    return;
                }
            }
        }
    }

    void consider_subset(const std::vector<std::size_t>& idx) {
        std::vector<IntVec> rows;
        for (std::size_t i : idx) rows.push_back(vertices_[i]);
        const IntMatrix vm = IntMatrix::from_rows(rows);
        if (det(vm) != 0) {
            IntVec ones(dim_, Int(1));
            RatVec u = solve_rational(vm, ones);
            std::size_t below = 0, on = 0, above = 0;
            for (std::size_t i = 0; i < vertices_.size(); ++i) {
                if (std::find(idx.begin(), idx.end(), i) != idx.end()) continue;
                const Rat val = dot(u, vertices_[i]);
                if (val < 1) ++below;
                else if (val == 1) ++on;
                else ++above;
            }
            if (above > 0 && below > 0) return;  // not supporting
            if (above > 0) throw validation_error("origin not strictly interior");
            if (on > 0) throw simpliciality_error("vertex on facet hyperplane outside the facet");
            facets_.push_back(Facet{idx, std::move(u)});
        } else {
            // The subset may span a hyperplane through the origin; if that
            // hyperplane supports the polytope, the origin sits on the
            // boundary or outside.
            RatVec a = detail::hyperplane_through_origin(rows, dim_);
            if (a.empty()) return;  // affinely degenerate subset
            bool nonneg = true, nonpos = true;
            for (const IntVec& v : vertices_) {
                const Rat val = dot(a, v);
                if (val > 0) nonpos = false;
                if (val < 0) nonneg = false;
            }
            if (nonneg || nonpos)
                throw validation_error("origin not strictly interior");
        }
    }

    void finalize_facets() {
        if (facets_.empty()) throw validation_error("no facets found");
        for (const Facet& f : facets_) {
            IntVec a(dim_);
            Int den = 1;
            for (const Rat& u : f.normal) den = boost::multiprecision::lcm(den, rat_den(u));
            for (std::size_t j = 0; j < dim_; ++j)
                a[j] = rat_num(f.normal[j]) * (den / rat_den(f.normal[j]));
            int_facets_.emplace_back(std::move(a), den);
        }
    }

    void validate_vertices_extremal() const {
        for (const IntVec& v : vertices_) {
            bool on_some_facet = false;
            for (const Facet& f : facets_)
                if (dot(f.normal, v) == 1) { on_some_facet = true; break; }
            if (!on_some_facet)
                throw validation_error("listed point is not a vertex of the hull");
        }
    }

    std::size_t dim_;
    std::vector<IntVec> vertices_;
    std::vector<Facet> facets_;
    // normals with cleared denominators: <a, x> <= c
    std::vector<std::pair<IntVec, Int>> int_facets_;
};

}  // namespace polyspec
