#pragma once

#include <cstddef>
#include <cstdint>

#include "ksgroove/errors.hpp"
#include "ksgroove/groove.hpp"

namespace ksgroove {

enum class Bc : std::uint8_t { periodic = 0, clamped = 1 };

// Tensor-product grid over the computational groove. n_k counts cells
// per axis, so h_k * n_k equals the axis extent. Stored samples live on
// interior nodes only:
//   periodic axis: nodes k*h, k = 0..n-1         (n values)
//   clamped axis:  nodes k*h, k = 1..n-1         (n-1 values; the wall
//                  planes k = 0 and k = n carry the value 0 implicitly)
struct Grid {
    int n1 = 0, n2 = 0, n3 = 0;
    double h1 = 0.0, h2 = 0.0, h3 = 0.0;
    Bc bc1 = Bc::periodic, bc2 = Bc::clamped, bc3 = Bc::clamped;

    static Grid groove_grid(const GrooveSpec& spec, int n1, int n2, int n3) {
        spec.validate();
        require_resolution(n1, n2, n3);
        Grid g;
        g.n1 = n1; g.n2 = n2; g.n3 = n3;
        g.h1 = spec.trunc_x1 / n1;
        g.h2 = spec.width_b / n2;
        g.h3 = spec.trunc_x3 / n3;
        g.bc1 = Bc::periodic; g.bc2 = Bc::clamped; g.bc3 = Bc::clamped;
        return g;
    }

    // All-periodic box. Exists for oracle tests where the discrete
    // operator symbols are closed-form; excluded from physics runs.
    static Grid periodic_box(double l1, double l2, double l3, int n1, int n2, int n3) {
        require_resolution(n1, n2, n3);
        Grid g;
        g.n1 = n1; g.n2 = n2; g.n3 = n3;
        g.h1 = l1 / n1; g.h2 = l2 / n2; g.h3 = l3 / n3;
        g.bc1 = g.bc2 = g.bc3 = Bc::periodic;
        return g;
    }

    int m1() const { return bc1 == Bc::periodic ? n1 : n1 - 1; }
    int m2() const { return bc2 == Bc::periodic ? n2 : n2 - 1; }
    int m3() const { return bc3 == Bc::periodic ? n3 : n3 - 1; }

    std::size_t node_count() const {
        return static_cast<std::size_t>(m1()) * m2() * m3();
    }

    std::size_t index(int i1, int i2, int i3) const {
        return (static_cast<std::size_t>(i1) * m2() + i2) * m3() + i3;
    }

    // Physical coordinate of stored node index along each axis.
    double x1(int i) const { return bc1 == Bc::periodic ? i * h1 : (i + 1) * h1; }
    double x2(int i) const { return bc2 == Bc::periodic ? i * h2 : (i + 1) * h2; }
    double x3(int i) const { return bc3 == Bc::periodic ? i * h3 : (i + 1) * h3; }

    double extent1() const { return h1 * n1; }
    double extent2() const { return h2 * n2; }
    double extent3() const { return h3 * n3; }

    double cell_volume() const { return h1 * h2 * h3; }
    double min_spacing() const {
        double h = h1;
        if (h2 < h) h = h2;
        if (h3 < h) h = h3;
        return h;
    }

    bool operator==(const Grid& other) const = default;

private:
    static void require_resolution(int n1, int n2, int n3) {
        // 5-wide biharmonic stencil plus ghost layers needs this much.
        if (n1 < 8 || n2 < 8 || n3 < 8) {
            throw InvalidSpecError("grid needs at least 8 cells per axis");
        }
    }
};

}  // namespace ksgroove
