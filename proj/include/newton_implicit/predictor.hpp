#pragma once

#include <string>
#include <utility>
#include <vector>

#include "newton_implicit/curves.hpp"
#include "newton_implicit/geometry.hpp"

namespace ni {

struct Candidate {
    LatticePoint point;
    std::string label;  // the rule that produced the point
};

// Corner breakpoint of a different-denominator polygon.
struct Breakpoint {
    std::string corner;  // "upper_right", "upper_left", "lower_right", "lower_left"
    LatticePoint p;
    long long delta = 0;
};

struct PredictedPolygon {
    LatticePolygon polygon;
    std::vector<Candidate> candidates;
    CurveClass cls = CurveClass::Polynomial;
    Classification classification;  // same-denominator only
    std::vector<Breakpoint> breakpoints;
    // Envelopes of the polygon, different denominators only.
    MonotoneChain upper, lower;
};

// Supports of the numerators P0, P1 of a polynomial parameterization.
PredictedPolygon predict_polynomial(const Support& P0, const Support& P1);

// Coefficients of x^{deg P1} and y^{deg P0} in the implicit equation, up to one shared sign.
std::pair<Rat, Rat> extreme_coefficients(const SparsePoly& P0, const SparsePoly& P1);

LatticePoint same_corners_vertex(const SameDenomData& d, int i, int j);
// Variants 1..3 in order; the third is omitted when its left endpoint exceeds its right one.
std::vector<LatticePoint> c0_points(const SameDenomData& d, int i, int j);
PredictedPolygon predict_same_denom(const SameDenomData& d);

// Enumeration is authoritative; the closed-form corners must agree or ChainMismatch is thrown.
PredictedPolygon predict_diff_denom(const DiffDenomData& d);
// Closed-form corners only.
PredictedPolygon predict_diff_denom_fast(const DiffDenomData& d);

struct DegreeBounds {
    long long total = 0, deg_x = 0, deg_y = 0;
};
DegreeBounds degree_bounds(const ParametricCurve& c);
// {e0 <= deg_x, e1 <= deg_y, e0 + e1 <= total} in the positive quadrant.
LatticePolygon degree_bound_polygon(const DegreeBounds& b);

// Normalizes, classifies and dispatches on the curve class.
PredictedPolygon predict(const ParametricCurve& c);

}  // namespace ni
