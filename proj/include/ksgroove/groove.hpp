#pragma once

#include <cmath>
#include <numbers>
#include <string>

#include "ksgroove/errors.hpp"

namespace ksgroove {

// Which physical axis carries the bounded width of the groove. All
// computation happens in canonical orientation (bounded axis = x2);
// other orientations are a relabeling of axes, not a separate code path.
enum class Orientation { x1, x2, x3 };

inline std::string to_string(Orientation o) {
    switch (o) {
        case Orientation::x1: return "x1";
        case Orientation::x2: return "x2";
        case Orientation::x3: return "x3";
    }
    return "?";
}

// Continuous domain description. The groove is bounded in one direction
// (width B) and unbounded in the other two; computationally the
// unbounded directions are replaced by a periodic cell of length
// trunc_x1 and a clamped interval (0, trunc_x3).
struct GrooveSpec {
    double width_b = 2.0;
    double trunc_x1 = 2.0 * std::numbers::pi;
    double trunc_x3 = 16.0;
    Orientation orientation = Orientation::x2;

    bool admissible() const { return width_b < std::numbers::pi; }

    void validate() const {
        if (!(width_b > 0.0)) throw InvalidSpecError("groove width_B must be positive");
        if (!(trunc_x1 > 0.0)) throw InvalidSpecError("groove trunc_x1 must be positive");
        if (!(trunc_x3 > 0.0)) throw InvalidSpecError("groove trunc_x3 must be positive");
    }
};

// Closed-form constants of the decay theory: a = pi^2/B^2,
// theta = 1 - 1/a, and the L2 decay exponent a^2*theta/2. Only defined
// for admissible widths (B < pi), where all three are positive.
struct GrooveConstants {
    double a;
    double theta;
    double decay_rate;
};

inline double steklov_constant(const GrooveSpec& spec) {
    if (!(spec.width_b > 0.0)) {
        throw InvalidSpecError("steklov_constant: width_B must be positive");
    }
    const double pi = std::numbers::pi;
    return pi * pi / (spec.width_b * spec.width_b);
}

inline GrooveConstants constants(const GrooveSpec& spec) {
    spec.validate();
    if (!spec.admissible()) {
        throw InadmissibleDomainError(spec.width_b, "admissibility requires width_B < pi");
    }
    const double a = steklov_constant(spec);
    const double theta = 1.0 - 1.0 / a;
    return GrooveConstants{a, theta, a * a * theta / 2.0};
}

// Same formulas without the admissibility gate. Used only for reporting
// (stability maps include inadmissible cells); theta and decay_rate come
// out non-positive there and carry no guarantee semantics.
inline GrooveConstants raw_constants(double width_b) {
    const double pi = std::numbers::pi;
    const double a = pi * pi / (width_b * width_b);
    const double theta = 1.0 - 1.0 / a;
    return GrooveConstants{a, theta, a * a * theta / 2.0};
}

// Smallness hypothesis margin (48-coefficient form):
//   theta - (48 / (theta a^{3/2})) * energy0.
// Positive means the global-decay hypothesis holds for that data.
inline double smallness_margin(const GrooveConstants& c, double energy0) {
    if (!(energy0 >= 0.0)) {
        throw std::invalid_argument("smallness_margin: energy0 must be nonnegative");
    }
    return c.theta - 48.0 / (c.theta * std::pow(c.a, 1.5)) * energy0;
}

// Along-the-flow bracket (24-coefficient form). Weaker than the
// 48-coefficient hypothesis; both are logged, acceptance uses 48.
inline double estimate1_margin(const GrooveConstants& c, double energy) {
    if (!(energy >= 0.0)) {
        throw std::invalid_argument("estimate1_margin: energy must be nonnegative");
    }
    return c.theta - 24.0 / (c.theta * std::pow(c.a, 1.5)) * energy;
}

// Unique root of smallness_margin in energy0.
inline double smallness_root(const GrooveConstants& c) {
    return c.theta * c.theta * std::pow(c.a, 1.5) / 48.0;
}

// Axis transpositions used for relabeling grooves into canonical
// orientation. Transpositions are involutions: relabeling twice with
// the same swap round-trips every field.
enum class AxisSwap { none, swap12, swap23 };

inline Orientation permute(AxisSwap s, Orientation o) {
    switch (s) {
        case AxisSwap::none:
            return o;
        case AxisSwap::swap12:
            if (o == Orientation::x1) return Orientation::x2;
            if (o == Orientation::x2) return Orientation::x1;
            return o;
        case AxisSwap::swap23:
            if (o == Orientation::x2) return Orientation::x3;
            if (o == Orientation::x3) return Orientation::x2;
            return o;
    }
    return o;
}

// The swap that brings this orientation's bounded axis onto x2.
inline AxisSwap canonical_swap(Orientation o) {
    switch (o) {
        case Orientation::x1: return AxisSwap::swap12;
        case Orientation::x2: return AxisSwap::none;
        case Orientation::x3: return AxisSwap::swap23;
    }
    return AxisSwap::none;
}

// The numeric fields of GrooveSpec name roles (width, periodic extent,
// clamped extent), which a relabeling preserves; only the orientation
// label moves.
inline GrooveSpec relabel(const GrooveSpec& spec, AxisSwap s) {
    GrooveSpec out = spec;
    out.orientation = permute(s, spec.orientation);
    return out;
}

inline GrooveSpec to_canonical(const GrooveSpec& spec) {
    return relabel(spec, canonical_swap(spec.orientation));
}

}  // namespace ksgroove
