#pragma once

#include <utility>
#include <vector>

#include "polyspec/exact.hpp"
#include "polyspec/intmat.hpp"

namespace polyspec {

// Streams the lattice points of the half-open parallelepiped of a simplicial
// cone: all v in Z^n with v = gen * x, x in [0,1)^n, where the columns of
// `gen` generate the cone.  There are exactly |det gen| of them, one per
// coset of Z^n modulo the column lattice.
//
// Enumeration goes through the Smith normal form u * gen * v = d: the cosets
// are represented by u^{-1} y for y in prod [0, d_i), and the cone
// coordinates of such a representative are simply v * (y_i / d_i).  The
// fractional-part map then lands each representative in the parallelepiped.
//
// fn(point, coords) is called once per element; enumeration order is fixed
// by the odometer over y.  Returns the number of elements visited.
template <class Fn>
Int for_each_box_point(const IntMatrix& gen, Fn&& fn) {
    if (!gen.square()) throw dimension_error("box enumeration: generator matrix not square");
    const std::size_t n = gen.rows();
    SmithNormalForm s = snf(gen);
    for (std::size_t i = 0; i < n; ++i)
        if (s.d(i, i) == 0) throw singular_matrix_error("box enumeration: generators not independent");

    IntVec diag(n);
    for (std::size_t i = 0; i < n; ++i) diag[i] = s.d(i, i);

    IntVec y(n, Int(0));
    Int count = 0;
    for (;;) {
        RatVec x(n, Rat(0));
        for (std::size_t i = 0; i < n; ++i) {
            if (y[i] == 0) continue;
            const Rat yi(y[i], diag[i]);
            for (std::size_t r = 0; r < n; ++r) x[r] += Rat(s.v(r, i)) * yi;
        }
        RatVec coords(n);
        for (std::size_t i = 0; i < n; ++i) coords[i] = rat_frac(x[i]);
        IntVec point(n, Int(0));
        for (std::size_t r = 0; r < n; ++r) {
            Rat acc = 0;
            for (std::size_t c = 0; c < n; ++c)
                if (coords[c] != 0) acc += Rat(gen(r, c)) * coords[c];
            check_internal(is_integer(acc), "box enumeration: non-integral point");
            point[r] = rat_num(acc);
        }
        ++count;
        fn(point, coords);

        std::size_t k = 0;
        while (k < n) {
            if (++y[k] < diag[k]) break;
            y[k] = 0;
            ++k;
        }
        if (k == n) break;
    }
    return count;
}

inline std::vector<std::pair<IntVec, RatVec>> box_points(const IntMatrix& gen) {
    std::vector<std::pair<IntVec, RatVec>> out;
    for_each_box_point(gen, [&](const IntVec& p, const RatVec& c) { out.emplace_back(p, c); });
    return out;
}

}  // namespace polyspec
