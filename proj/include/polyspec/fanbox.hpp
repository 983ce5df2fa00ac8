#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "polyspec/boxenum.hpp"
#include "polyspec/exact.hpp"
#include "polyspec/intmat.hpp"
#include "polyspec/polytope.hpp"

namespace polyspec {

// A maximal cone of the face fan: the cone over one facet, generated by that
// facet's vertices.
struct MaximalCone {
    std::size_t facet_index;
    std::vector<std::size_t> generator_indices;
    IntMatrix generator_matrix;  // columns are the generators b_i
    Int index;                   // |det(generator_matrix)| = lattice index
};

// A lattice point v = sum q_i b_i with 0 <= q_i < 1 in some maximal cone.
// support_dim is the dimension of the smallest cone containing v (the count
// of strictly positive coordinates); nu is the Newton function value, which
// is also the age of the corresponding sector.
struct BoxElement {
    IntVec point;
    std::size_t cone;  // facet index of a maximal cone containing the point
    RatVec coords;
    std::size_t support_dim;
    Rat nu;
};

struct AgePair {
    BoxElement element;
    BoxElement inverse;
    Rat age;
    Rat inverse_age;
};

// The face fan of a polytope with the origin interior, together with box
// element enumeration over its maximal cones.
class FaceFan {
public:
    explicit FaceFan(LatticePolytope polytope) : poly_(std::move(polytope)) {
        const auto& facets = poly_.facets();
        for (std::size_t fi = 0; fi < facets.size(); ++fi) {
            IntMatrix gen = poly_.facet_vertex_matrix(facets[fi]);
            Int idx = abs(det(gen));
            check_internal(idx >= 1, "face fan: degenerate maximal cone");
            cones_.push_back(MaximalCone{fi, facets[fi].vertex_indices, std::move(gen), std::move(idx)});
        }
    }

    const LatticePolytope& polytope() const { return poly_; }
    const std::vector<MaximalCone>& maximal_cones() const { return cones_; }

    // Newton function: 1 at the vertices, linear on each cone of the fan;
    // evaluates as the max of the facet functionals.
    Rat newton_nu(const IntVec& v) const {
        Rat best = dot(poly_.facets()[0].normal, v);
        for (std::size_t fi = 1; fi < poly_.facets().size(); ++fi) {
            Rat val = dot(poly_.facets()[fi].normal, v);
            if (val > best) best = val;
        }
        return best;
    }

    // Streams the box elements of one maximal cone; exactly cone.index of
    // them, the origin included.
    template <class Fn>
    Int for_each_box_element(const MaximalCone& cone, Fn&& fn) const {
        return for_each_box_point(cone.generator_matrix, [&](const IntVec& p, const RatVec& q) {
            fn(make_element(cone, p, q));
        });
    }

    std::vector<BoxElement> box_elements(const MaximalCone& cone) const {
        std::vector<BoxElement> out;
        for_each_box_element(cone, [&](BoxElement e) { out.push_back(std::move(e)); });
        check_internal(Int(out.size()) == cone.index, "box_elements: count != cone index");
        return out;
    }

    // Union over all maximal cones, deduplicated by lattice point, in
    // lexicographic point order.  nu and support_dim must agree between the
    // cones sharing a point.
    std::vector<BoxElement> box_union() const {
        std::map<IntVec, BoxElement> seen;
        for (const MaximalCone& cone : cones_) {
            for_each_box_element(cone, [&](BoxElement e) {
                auto it = seen.find(e.point);
                if (it == seen.end()) {
                    seen.emplace(e.point, std::move(e));
                } else {
                    check_internal(it->second.nu == e.nu && it->second.support_dim == e.support_dim,
                                   "box_union: inconsistent nu/support_dim across cones");
                }
            });
        }
        std::vector<BoxElement> out;
        out.reserve(seen.size());
        for (auto& [p, e] : seen) out.push_back(std::move(e));
        return out;
    }

    // The inertia involution, coordinatewise on box coordinates:
    // q_i -> 0 if q_i = 0, else 1 - q_i.  Stays in the same cone and
    // preserves the support dimension.
    BoxElement box_inverse(const BoxElement& e) const {
        const MaximalCone& cone = cone_by_facet(e.cone);
        RatVec q(e.coords.size());
        for (std::size_t i = 0; i < q.size(); ++i)
            q[i] = (e.coords[i] == 0) ? Rat(0) : Rat(1) - e.coords[i];
        IntVec point(q.size(), Int(0));
        for (std::size_t r = 0; r < q.size(); ++r) {
            Rat acc = 0;
            for (std::size_t c = 0; c < q.size(); ++c)
                if (q[c] != 0) acc += Rat(cone.generator_matrix(r, c)) * q[c];
            check_internal(is_integer(acc), "box_inverse: non-integral point");
            point[r] = rat_num(acc);
        }
        return make_element(cone, point, q);
    }

    static Rat age(const BoxElement& e) { return e.nu; }

    AgePair age_pair(const BoxElement& e) const {
        BoxElement inv = box_inverse(e);
        AgePair pair{e, std::move(inv), e.nu, Rat()};
        pair.inverse_age = pair.inverse.nu;
        check_internal(pair.age + pair.inverse_age == Rat(Int(e.support_dim)),
                       "age_pair: ages do not sum to the support dimension");
        return pair;
    }

    const MaximalCone& cone_by_facet(std::size_t facet_index) const {
        for (const MaximalCone& c : cones_)
            if (c.facet_index == facet_index) return c;
        throw internal_error("no maximal cone for facet index");
    }

private:
    BoxElement make_element(const MaximalCone& cone, IntVec point, RatVec coords) const {
        std::size_t support = 0;
        Rat nu = 0;
        for (const Rat& q : coords) {
            check_internal(q >= 0 && q < 1, "box element coordinate outside [0,1)");
            if (q != 0) ++support;
            nu += q;
        }
        bool zero_point = true;
        for (const Int& x : point)
            if (x != 0) { zero_point = false; break; }
        check_internal((nu == 0) == zero_point, "box element: nu = 0 iff point = 0 violated");
        return BoxElement{std::move(point), cone.facet_index, std::move(coords), support, std::move(nu)};
    }

    LatticePolytope poly_;
    std::vector<MaximalCone> cones_;
};

}  // namespace polyspec
