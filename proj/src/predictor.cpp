#include "newton_implicit/predictor.hpp"

#include <algorithm>
#include <optional>

#include "newton_implicit/errors.hpp"
#include "newton_implicit/subdivisions.hpp"

namespace ni {

namespace {

void finish(PredictedPolygon& out) {
    std::vector<LatticePoint> pts;
    for (const auto& c : out.candidates) pts.push_back(c.point);
    out.polygon = convex_hull(pts);
}

}  // namespace

// ---------------------------------------------------------------------------
// Polynomial parameterizations

PredictedPolygon predict_polynomial(const Support& P0, const Support& P1) {
    if (P0.empty() || P1.empty()) throw Error(ErrorKind::ZeroPolynomial, "empty numerator support");
    PredictedPolygon out;
    out.cls = CurveClass::Polynomial;
    long long n = P0.back(), m = P1.back();
    bool constant = P0.front() == 0 || P1.front() == 0;
    if (constant) {
        out.candidates = {{{0, 0}, "constant term"}, {{m, 0}, "x-degree"}, {{0, n}, "y-degree"}};
    } else {
        long long a01 = P0.front(), a11 = P1.front();
        out.candidates = {{{a11, 0}, "lowest x-power"},
                          {{m, 0}, "x-degree"},
                          {{0, n}, "y-degree"},
                          {{0, a01}, "lowest y-power"}};
    }
    finish(out);
    return out;
}

std::pair<Rat, Rat> extreme_coefficients(const SparsePoly& P0, const SparsePoly& P1) {
    if (P0.empty() || P1.empty()) throw Error(ErrorKind::ZeroPolynomial, "zero numerator");
    auto [n, c0n] = *P0.rbegin();
    auto [m, c1m] = *P1.rbegin();
    auto power = [](Rat b, int e) {
        Rat r = 1;
        for (int i = 0; i < e; ++i) r *= b;
        return r;
    };
    Rat cx = power(-c1m, n), cy = power(-c0n, m);
    // Relative sign between the two extreme terms.
    if ((static_cast<long long>(n) * m) % 2) cx = -cx;
    return {cx, cy};
}

// ---------------------------------------------------------------------------
// Same denominator

namespace {

LatticePoint construct_vertex(const SameDenomData& d, int i, int j, int t, int m) {
    long long e[3] = {0, 0, 0};
    int lambda = 3 - i - j;
    long long left = d.bL[t], right = d.bR[m];
    e[lambda] = right - left;
    for (int tau : {i, j})
        if (tau != t) e[tau] += left;
    for (int mu : {i, j})
        if (mu != m) e[mu] += d.u - right;
    return {e[0], e[1]};
}

LatticePoint lift_to_01(const SameDenomData& d, const Classification& c, long long ei, long long ej) {
    long long e[3];
    e[c.i] = ei;
    e[c.j] = ej;
    e[c.k] = d.u - ei - ej;
    return {e[0], e[1]};
}

}  // namespace

LatticePoint same_corners_vertex(const SameDenomData& d, int i, int j) {
    int t = d.bL[j] < d.bL[i] ? j : i;
    int m = d.bR[j] > d.bR[i] ? j : i;
    return construct_vertex(d, i, j, t, m);
}

std::vector<LatticePoint> c0_points(const SameDenomData& d, int i, int j) {
    int minL = d.bL[j] < d.bL[i] ? j : i, maxL = d.bL[j] > d.bL[i] ? j : i;
    int minR = d.bR[j] < d.bR[i] ? j : i, maxR = d.bR[j] > d.bR[i] ? j : i;
    std::vector<LatticePoint> out{construct_vertex(d, i, j, minL, minR), construct_vertex(d, i, j, maxL, maxR)};
    if (d.bL[maxL] <= d.bR[minR]) out.push_back(construct_vertex(d, i, j, maxL, minR));
    return out;
}

PredictedPolygon predict_same_denom(const SameDenomData& input) {
    PredictedPolygon out;
    out.cls = CurveClass::SameDenominator;
    out.classification = input.cls;
    const Classification& c = input.cls;
    // The reversed segments describe the same curve under t -> 1/t.
    const SameDenomData d = c.reversed ? input.reversed() : input;
    const long long u = d.u;
    auto add = [&](long long ei, long long ej, const std::string& label) {
        out.candidates.push_back({lift_to_01(d, c, ei, ej), label});
    };
    const int i = c.i, j = c.j, k = c.k;
    switch (c.tag) {
        case CaseTag::A1:
            out.candidates = {{{0, 0}, "1A origin"}, {{u, 0}, "1A x^u"}, {{0, u}, "1A y^u"}};
            break;
        case CaseTag::A2:
            add(u, 0, "2A (u,0)");
            add(0, u, "2A (0,u)");
            add(0, u - d.bR[i] + d.bL[i], "2A (0,u-biR+biL)");
            add(d.bL[j], u - d.bR[i], "2A (bjL,u-biR)");
            add(u - d.bR[j] + d.bL[j], 0, "2A (u-bjR+bjL,0)");
            break;
        case CaseTag::B2:
            add(d.bR[j], 0, "2B (bjR,0)");
            add(d.bR[k], u - d.bR[k], "2B (bkR,u-bkR)");
            add(0, u, "2B (0,u)");
            add(0, 0, "2B (0,0)");
            break;
        case CaseTag::B3:
            add(d.bR[j], 0, "3B (bjR,0)");
            add(d.bR[k], u - d.bR[k], "3B (bkR,u-bkR)");
            add(d.bL[k], u - d.bL[k], "3B (bkL,u-bkL)");
            add(0, u - d.bL[i], "3B (0,u-biL)");
            add(0, 0, "3B (0,0)");
            break;
        case CaseTag::None:
            throw Error(ErrorKind::UnclassifiableConfiguration, "same-denominator data is not classified");
    }
    finish(out);
    return out;
}

// ---------------------------------------------------------------------------
// Different denominators

namespace {

struct Corner {
    std::vector<Candidate> points;
    std::optional<Breakpoint> breakpoint;
};

// Points maximizing e0 then e1, and e1 then e0, over all staircases with
// selection flags sx on A0 and sy on A1; plus the breakpoint cutting that corner.
Corner max_max_corner(const Support& A0, const Support& A1, const std::vector<bool>& sx, const std::vector<bool>& sy) {
    Corner c;
    const long long N = A0.back(), M = A1.back();
    auto extreme = [](const Support& A, const std::vector<bool>& s, bool left) -> std::optional<long long> {
        std::optional<long long> r;
        for (std::size_t p = 0; p < A.size(); ++p)
            if (s[p] && (!r || !left)) r = A[p];
        return r;
    };
    auto L = extreme(A0, sx, true), R = extreme(A0, sx, false);
    auto L1 = extreme(A1, sy, true), R1 = extreme(A1, sy, false);
    if (!L && !L1) {
        c.points.push_back({{0, 0}, "nothing selected"});
        return c;
    }
    if (!L) {
        c.points.push_back({{0, N}, "no selected x-point"});
        return c;
    }
    if (!L1) {
        c.points.push_back({{M, 0}, "no selected y-point"});
        return c;
    }
    const bool x0 = sx.front(), xN = sx.back(), y0 = sy.front(), yM = sy.back();
    long long y1 = (*R - *L) + (y0 ? *L : 0) + (yM ? N - *R : 0);
    long long x2 = (*R1 - *L1) + (x0 ? *L1 : 0) + (xN ? M - *R1 : 0);
    c.points.push_back({{M, y1}, "x-max, then y-max"});
    c.points.push_back({{x2, N}, "y-max, then x-max"});
    if (!x0 && !y0 && !xN && !yM) {
        long long delta = (N - *R) * *L1 - *L * (M - *R1);
        Breakpoint b;
        b.delta = delta;
        if (delta < 0) b.p = {M - *L1, *R};
        else if (delta > 0) b.p = {*R1, N - *L};
        if (delta != 0) {
            c.points.push_back({b.p, "corner breakpoint"});
            c.breakpoint = b;
        }
    }
    return c;
}

std::vector<bool> complement(std::vector<bool> v) {
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = !v[i];
    return v;
}

}  // namespace

PredictedPolygon predict_diff_denom_fast(const DiffDenomData& d) {
    PredictedPolygon out;
    out.cls = CurveClass::DifferentDenominators;
    Selection s1 = make_selection(d, SelectionKind::Selection1);
    Selection s2 = make_selection(d, SelectionKind::Selection2);
    const long long N = d.A0.back(), M = d.A1.back();
    struct Q {
        int sx, sy;
        const char* name;
    };
    for (Q q : {Q{1, 1, "upper_right"}, Q{-1, 1, "upper_left"}, Q{1, -1, "lower_right"}, Q{-1, -1, "lower_left"}}) {
        // Minimizing a coordinate under Selection2 is maximizing it under the
        // complementary flags, reflected through the coordinate's range.
        auto fx = q.sx > 0 ? s1.selected[0] : complement(s2.selected[0]);
        auto fy = q.sy > 0 ? s1.selected[1] : complement(s2.selected[1]);
        Corner c = max_max_corner(d.A0, d.A1, fx, fy);
        auto map = [&](LatticePoint p) { return LatticePoint{q.sx > 0 ? p.x : M - p.x, q.sy > 0 ? p.y : N - p.y}; };
        for (auto& cand : c.points) out.candidates.push_back({map(cand.point), std::string(q.name) + ": " + cand.label});
        if (c.breakpoint) {
            Breakpoint b = *c.breakpoint;
            b.corner = q.name;
            b.p = map(b.p);
            out.breakpoints.push_back(b);
        }
    }
    finish(out);
    out.upper = upper_chain(out.polygon.vertices);
    out.lower = lower_chain(out.polygon.vertices);
    return out;
}

PredictedPolygon predict_diff_denom(const DiffDenomData& d) {
    PredictedPolygon fast = predict_diff_denom_fast(d);
    Selection s1 = make_selection(d, SelectionKind::Selection1);
    Selection s2 = make_selection(d, SelectionKind::Selection2);
    LatticePolygon exact = corner_hull(s1, s2);
    if (exact != fast.polygon)
        throw Error(ErrorKind::ChainMismatch,
                    "closed-form corners " + to_string(fast.polygon) + " disagree with enumeration " + to_string(exact));
    return fast;
}

// ---------------------------------------------------------------------------

DegreeBounds degree_bounds(const ParametricCurve& c) {
    auto lo = [](const Support& s) { return static_cast<long long>(s.front()); };
    auto hi = [](const Support& s) { return static_cast<long long>(s.back()); };
    auto len = [&](const Support& s) { return hi(s) - lo(s); };
    Support p0 = support_of(c.P0), p1 = support_of(c.P1), q0 = support_of(c.Q0), q1 = support_of(c.Q1);
    DegreeBounds b;
    Support A0 = support_union(p0, q0), A1 = support_union(p1, q1);
    b.deg_x = len(A1);
    b.deg_y = len(A0);
    if (c.cls == CurveClass::DifferentDenominators) {
        // Hull of (P0 + Q1) u (P1 + Q0) u (Q0 + Q1).
        long long mn = std::min({lo(p0) + lo(q1), lo(p1) + lo(q0), lo(q0) + lo(q1)});
        long long mx = std::max({hi(p0) + hi(q1), hi(p1) + hi(q0), hi(q0) + hi(q1)});
        b.total = mx - mn;
    } else {
        b.total = len(support_union(A0, A1));
    }
    return b;
}

LatticePolygon degree_bound_polygon(const DegreeBounds& b) {
    const long long X = b.deg_x, Y = b.deg_y, T = b.total;
    std::vector<LatticePoint> pts{{0, 0}, {std::min(X, T), 0}, {0, std::min(Y, T)}};
    if (T >= X) pts.push_back({X, std::min(Y, T - X)});
    if (T >= Y) pts.push_back({std::min(X, T - Y), Y});
    return convex_hull(pts);
}

PredictedPolygon predict(const ParametricCurve& input) {
    ParametricCurve c = normalize(input);
    switch (c.cls) {
        case CurveClass::Polynomial:
            return predict_polynomial(support_of(c.P0), support_of(c.P1));
        case CurveClass::SameDenominator:
            return predict_same_denom(derive_same_denom(c));
        case CurveClass::DifferentDenominators:
            return predict_diff_denom(derive_diff_denom(c));
    }
    throw Error(ErrorKind::InvariantViolation, "unknown curve class");
}

}  // namespace ni
