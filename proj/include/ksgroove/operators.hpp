#pragma once

#include <array>
#include <cmath>

#include "ksgroove/field.hpp"

namespace ksgroove {

// Second-order centered stencils on the tensor grid. Periodic axes
// wrap; on clamped axes the wall plane carries the value 0 and the
// biharmonic additionally sees the odd reflection behind the wall
// (see GhostExtension). With that rule the direct biharmonic stencil
// coincides with laplacian(laplacian(.)), so the operator inherits the
// symmetry of the Laplacian under the discrete inner product.

namespace detail {

// Neighbor value along one axis at logical offset -1/+1, with wall
// zeros and periodic wrap resolved at the loop level by the callers.
struct AxisPlan {
    int m;          // stored nodes along the axis
    bool periodic;  // wrap instead of wall zeros
    double inv_h2;  // 1/h^2
    double inv_2h;  // 1/(2h)
};

inline AxisPlan plan_axis(const Grid& g, int axis) {
    switch (axis) {
        case 0: return {g.m1(), g.bc1 == Bc::periodic, 1.0 / (g.h1 * g.h1), 0.5 / g.h1};
        case 1: return {g.m2(), g.bc2 == Bc::periodic, 1.0 / (g.h2 * g.h2), 0.5 / g.h2};
        default: return {g.m3(), g.bc3 == Bc::periodic, 1.0 / (g.h3 * g.h3), 0.5 / g.h3};
    }
}

}  // namespace detail

// 7-point Laplacian, second order on smooth fields.
inline ScalarField laplacian(const ScalarField& f) {
    const Grid& g = f.grid();
    ScalarField out(g);
    const int m1 = g.m1(), m2 = g.m2(), m3 = g.m3();
    const auto a1 = detail::plan_axis(g, 0);
    const auto a2 = detail::plan_axis(g, 1);
    const auto a3 = detail::plan_axis(g, 2);
    const double* v = f.values().data();
    double* o = out.values().data();
    const std::size_t s1 = static_cast<std::size_t>(m2) * m3;
    const std::size_t s2 = m3;

    for (int i1 = 0; i1 < m1; ++i1) {
        const double* plane = v + i1 * s1;
        const double* plane_p =
            (i1 + 1 < m1) ? plane + s1 : (a1.periodic ? v : nullptr);
        const double* plane_m =
            (i1 > 0) ? plane - s1 : (a1.periodic ? v + (m1 - 1) * s1 : nullptr);
        for (int i2 = 0; i2 < m2; ++i2) {
            const double* row = plane + i2 * s2;
            const double* row_2p =
                (i2 + 1 < m2) ? row + s2 : (a2.periodic ? plane : nullptr);
            const double* row_2m =
                (i2 > 0) ? row - s2 : (a2.periodic ? plane + (m2 - 1) * s2 : nullptr);
            const double* row_1p = plane_p ? plane_p + i2 * s2 : nullptr;
            const double* row_1m = plane_m ? plane_m + i2 * s2 : nullptr;
            double* orow = o + i1 * s1 + i2 * s2;
            for (int i3 = 0; i3 < m3; ++i3) {
                const double c = row[i3];
                const double n3p =
                    (i3 + 1 < m3) ? row[i3 + 1] : (a3.periodic ? row[0] : 0.0);
                const double n3m =
                    (i3 > 0) ? row[i3 - 1] : (a3.periodic ? row[m3 - 1] : 0.0);
                const double n1p = row_1p ? row_1p[i3] : 0.0;
                const double n1m = row_1m ? row_1m[i3] : 0.0;
                const double n2p = row_2p ? row_2p[i3] : 0.0;
                const double n2m = row_2m ? row_2m[i3] : 0.0;
                orow[i3] = a1.inv_h2 * (n1p + n1m - 2.0 * c) +
                           a2.inv_h2 * (n2p + n2m - 2.0 * c) +
                           a3.inv_h2 * (n3p + n3m - 2.0 * c);
            }
        }
    }
    return out;
}

// Biharmonic as the composed Laplacian. The intermediate field is
// treated with the same boundary rule (the ghost refill), which makes
// this identical to the direct 25-point stencil below.
inline ScalarField bilaplacian(const ScalarField& f) {
    return laplacian(laplacian(f));
}

// Direct 25-point biharmonic through materialized ghost layers:
// one-axis fourth differences plus cross terms. Kept as the reference
// route; must agree with the composed form to round-off.
inline ScalarField bilaplacian_direct(const ScalarField& f) {
    const Grid& g = f.grid();
    const GhostExtension e(f);
    ScalarField out(g);
    const double c1 = 1.0 / (g.h1 * g.h1), c2 = 1.0 / (g.h2 * g.h2),
                 c3 = 1.0 / (g.h3 * g.h3);
    for (int i1 = 0; i1 < g.m1(); ++i1) {
        for (int i2 = 0; i2 < g.m2(); ++i2) {
            for (int i3 = 0; i3 < g.m3(); ++i3) {
                const double f4_1 = c1 * c1 *
                    (e(i1 - 2, i2, i3) - 4.0 * e(i1 - 1, i2, i3) + 6.0 * e(i1, i2, i3) -
                     4.0 * e(i1 + 1, i2, i3) + e(i1 + 2, i2, i3));
                const double f4_2 = c2 * c2 *
                    (e(i1, i2 - 2, i3) - 4.0 * e(i1, i2 - 1, i3) + 6.0 * e(i1, i2, i3) -
                     4.0 * e(i1, i2 + 1, i3) + e(i1, i2 + 2, i3));
                const double f4_3 = c3 * c3 *
                    (e(i1, i2, i3 - 2) - 4.0 * e(i1, i2, i3 - 1) + 6.0 * e(i1, i2, i3) -
                     4.0 * e(i1, i2, i3 + 1) + e(i1, i2, i3 + 2));
                const double x12 = c1 * c2 *
                    (e(i1 + 1, i2 + 1, i3) + e(i1 + 1, i2 - 1, i3) + e(i1 - 1, i2 + 1, i3) +
                     e(i1 - 1, i2 - 1, i3) -
                     2.0 * (e(i1 + 1, i2, i3) + e(i1 - 1, i2, i3) + e(i1, i2 + 1, i3) +
                            e(i1, i2 - 1, i3)) +
                     4.0 * e(i1, i2, i3));
                const double x13 = c1 * c3 *
                    (e(i1 + 1, i2, i3 + 1) + e(i1 + 1, i2, i3 - 1) + e(i1 - 1, i2, i3 + 1) +
                     e(i1 - 1, i2, i3 - 1) -
                     2.0 * (e(i1 + 1, i2, i3) + e(i1 - 1, i2, i3) + e(i1, i2, i3 + 1) +
                            e(i1, i2, i3 - 1)) +
                     4.0 * e(i1, i2, i3));
                const double x23 = c2 * c3 *
                    (e(i1, i2 + 1, i3 + 1) + e(i1, i2 + 1, i3 - 1) + e(i1, i2 - 1, i3 + 1) +
                     e(i1, i2 - 1, i3 - 1) -
                     2.0 * (e(i1, i2 + 1, i3) + e(i1, i2 - 1, i3) + e(i1, i2, i3 + 1) +
                            e(i1, i2, i3 - 1)) +
                     4.0 * e(i1, i2, i3));
                out(i1, i2, i3) = f4_1 + f4_2 + f4_3 + x12 + x13 + x23;
            }
        }
    }
    return out;
}

// Centered first derivative along one axis (0-based).
inline ScalarField axis_derivative(const ScalarField& f, int axis) {
    const Grid& g = f.grid();
    ScalarField out(g);
    const int m[3] = {g.m1(), g.m2(), g.m3()};
    const auto ap = detail::plan_axis(g, axis);
    const std::size_t stride[3] = {static_cast<std::size_t>(m[1]) * m[2],
                                   static_cast<std::size_t>(m[2]), 1};
    const double* v = f.values().data();
    double* o = out.values().data();
    const std::size_t sa = stride[axis];
    const int ma = m[axis];

    for (int i1 = 0; i1 < m[0]; ++i1) {
        for (int i2 = 0; i2 < m[1]; ++i2) {
            for (int i3 = 0; i3 < m[2]; ++i3) {
                const int idx_axis = (axis == 0) ? i1 : (axis == 1 ? i2 : i3);
                const std::size_t base = (static_cast<std::size_t>(i1) * m[1] + i2) * m[2] + i3;
                double plus, minus;
                if (idx_axis + 1 < ma) {
                    plus = v[base + sa];
                } else {
                    plus = ap.periodic ? v[base - static_cast<std::size_t>(ma - 1) * sa] : 0.0;
                }
                if (idx_axis > 0) {
                    minus = v[base - sa];
                } else {
                    minus = ap.periodic ? v[base + static_cast<std::size_t>(ma - 1) * sa] : 0.0;
                }
                o[base] = ap.inv_2h * (plus - minus);
            }
        }
    }
    return out;
}

inline VectorField3 gradient(const ScalarField& f) {
    return VectorField3(axis_derivative(f, 0), axis_derivative(f, 1), axis_derivative(f, 2));
}

// K-S coupling term: component j is (1/2) d/dx_j of (u1^2+u2^2+u3^2).
// Computing it as the gradient of the pointwise speed-squared scalar
// makes the output an exact discrete gradient, so it cannot inject
// curl into the state.
inline VectorField3 nonlinearity(const VectorField3& u) {
    ScalarField s(u.grid());
    const std::size_t n = s.size();
    const double* a = u.u1.values().data();
    const double* b = u.u2.values().data();
    const double* c = u.u3.values().data();
    double* t = s.values().data();
    for (std::size_t i = 0; i < n; ++i) t[i] = a[i] * a[i] + b[i] * b[i] + c[i] * c[i];
    VectorField3 out = gradient(s);
    out.u1 *= 0.5;
    out.u2 *= 0.5;
    out.u3 *= 0.5;
    return out;
}

}  // namespace ksgroove
