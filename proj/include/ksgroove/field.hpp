#pragma once

#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

#include "ksgroove/errors.hpp"
#include "ksgroove/grid.hpp"

namespace ksgroove {

// Real samples at the interior nodes of a grid, axis-ordered with axis 3
// fastest. Value semantics; operators return fresh fields.
class ScalarField {
public:
    ScalarField() = default;

    explicit ScalarField(const Grid& grid)
        : grid_(grid), values_(grid.node_count(), 0.0) {}

    template <typename Fn>
    static ScalarField sample(const Grid& grid, Fn&& fn) {
        ScalarField f(grid);
        for (int i1 = 0; i1 < grid.m1(); ++i1)
            for (int i2 = 0; i2 < grid.m2(); ++i2)
                for (int i3 = 0; i3 < grid.m3(); ++i3)
                    f(i1, i2, i3) = fn(grid.x1(i1), grid.x2(i2), grid.x3(i3));
        return f;
    }

    const Grid& grid() const { return grid_; }

    double operator()(int i1, int i2, int i3) const {
        return values_[grid_.index(i1, i2, i3)];
    }
    double& operator()(int i1, int i2, int i3) {
        return values_[grid_.index(i1, i2, i3)];
    }

    const std::vector<double>& values() const { return values_; }
    std::vector<double>& values() { return values_; }
    std::size_t size() const { return values_.size(); }

    bool all_finite() const {
        for (double v : values_)
            if (!std::isfinite(v)) return false;
        return true;
    }

    ScalarField& operator+=(const ScalarField& other) {
        for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += other.values_[i];
        return *this;
    }
    ScalarField& operator-=(const ScalarField& other) {
        for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= other.values_[i];
        return *this;
    }
    ScalarField& operator*=(double c) {
        for (double& v : values_) v *= c;
        return *this;
    }

private:
    Grid grid_;
    std::vector<double> values_;
};

// The state u = (u1, u2, u3) sampled on one shared grid.
struct VectorField3 {
    ScalarField u1, u2, u3;

    VectorField3() = default;
    explicit VectorField3(const Grid& grid) : u1(grid), u2(grid), u3(grid) {}
    VectorField3(ScalarField a, ScalarField b, ScalarField c)
        : u1(std::move(a)), u2(std::move(b)), u3(std::move(c)) {
        if (!(u1.grid() == u2.grid()) || !(u1.grid() == u3.grid())) {
            throw InvalidSpecError("VectorField3 components must share one grid");
        }
    }

    const Grid& grid() const { return u1.grid(); }

    const ScalarField& component(int j) const {
        return j == 0 ? u1 : (j == 1 ? u2 : u3);
    }
    ScalarField& component(int j) {
        return j == 0 ? u1 : (j == 1 ? u2 : u3);
    }

    bool all_finite() const {
        return u1.all_finite() && u2.all_finite() && u3.all_finite();
    }
};

// A scalar field padded with two ghost planes per axis end, filled by
// the boundary rule: periodic axes wrap; clamped axes put 0 on the wall
// plane and the odd reflection of interior values behind it
// (g_{-1} = -g_1 with g_0 = 0), so value and normal derivative both
// vanish at the wall. Only the biharmonic stencil needs the second
// layer; the Laplacian sees just the zero wall plane.
class GhostExtension {
public:
    static constexpr int pad = 2;

    explicit GhostExtension(const ScalarField& f) : grid_(f.grid()) {
        const int e1 = grid_.m1() + 2 * pad;
        const int e2 = grid_.m2() + 2 * pad;
        const int e3 = grid_.m3() + 2 * pad;
        s2_ = e3;
        s1_ = static_cast<std::size_t>(e2) * e3;
        data_.assign(static_cast<std::size_t>(e1) * e2 * e3, 0.0);
        for (int i1 = 0; i1 < grid_.m1(); ++i1)
            for (int i2 = 0; i2 < grid_.m2(); ++i2)
                for (int i3 = 0; i3 < grid_.m3(); ++i3)
                    at(i1, i2, i3) = f(i1, i2, i3);
        fill_axis(0);
        fill_axis(1);
        fill_axis(2);
    }

    // Accepts indices in [-pad, m+pad).
    double operator()(int i1, int i2, int i3) const {
        return data_[offset(i1, i2, i3)];
    }

    const Grid& grid() const { return grid_; }

private:
    std::size_t offset(int i1, int i2, int i3) const {
        return static_cast<std::size_t>(i1 + pad) * s1_ +
               static_cast<std::size_t>(i2 + pad) * s2_ +
               static_cast<std::size_t>(i3 + pad);
    }
    double& at(int i1, int i2, int i3) { return data_[offset(i1, i2, i3)]; }

    void fill_axis(int axis) {
        const int m[3] = {grid_.m1(), grid_.m2(), grid_.m3()};
        const Bc bc[3] = {grid_.bc1, grid_.bc2, grid_.bc3};
        const int ma = m[axis];
        const int mb = axis == 0 ? m[1] : m[0];
        const int mc = axis == 2 ? m[1] : m[2];
        // Fill ghosts along `axis` for every already-valid transverse
        // index; axes are processed in order so earlier ghosts propagate.
        const int blo = axis == 0 ? 0 : -pad;
        const int bhi = axis == 0 ? mb : mb + pad;
        const int clo = axis == 2 ? 0 : -pad;
        const int chi = axis == 2 ? mc : mc + pad;
        for (int b = blo; b < bhi; ++b) {
            for (int c = clo; c < chi; ++c) {
                for (int g = 1; g <= pad; ++g) {
                    double lo, hi;
                    if (bc[axis] == Bc::periodic) {
                        lo = get(axis, ma - g, b, c);
                        hi = get(axis, g - 1, b, c);
                    } else {
                        // wall plane at -1 resp. ma; odd reflection past it
                        lo = g == 1 ? 0.0 : -get(axis, g - 2, b, c);
                        hi = g == 1 ? 0.0 : -get(axis, ma - g + 1, b, c);
                    }
                    set(axis, -g, b, c, lo);
                    set(axis, ma + g - 1, b, c, hi);
                }
            }
        }
    }

    double get(int axis, int a, int b, int c) const {
        switch (axis) {
            case 0: return (*this)(a, b, c);
            case 1: return (*this)(b, a, c);
            default: return (*this)(b, c, a);
        }
    }
    void set(int axis, int a, int b, int c, double v) {
        switch (axis) {
            case 0: at(a, b, c) = v; break;
            case 1: at(b, a, c) = v; break;
            default: at(b, c, a) = v; break;
        }
    }

    Grid grid_;
    std::size_t s1_ = 0, s2_ = 0;
    std::vector<double> data_;
};

}  // namespace ksgroove
