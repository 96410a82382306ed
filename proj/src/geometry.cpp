#include "newton_implicit/geometry.hpp"

#include <algorithm>
#include <sstream>

#include "newton_implicit/errors.hpp"

namespace ni {

long long cross(const LatticePoint& o, const LatticePoint& a, const LatticePoint& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

LatticePolygon convex_hull(std::vector<LatticePoint> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    LatticePolygon poly;
    if (pts.size() <= 2) {
        poly.vertices = pts;
        return poly;
    }
    std::vector<LatticePoint> h(2 * pts.size());
    std::size_t k = 0;
    for (const auto& p : pts) {
        while (k >= 2 && cross(h[k - 2], h[k - 1], p) <= 0) --k;
        h[k++] = p;
    }
    for (std::size_t i = pts.size() - 1, lo = k + 1; i-- > 0;) {
        while (k >= lo && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
        h[k++] = pts[i];
    }
    h.resize(k - 1);
    poly.vertices = h;
    return poly;
}

bool contains_point(const LatticePolygon& poly, const LatticePoint& p) {
    const auto& v = poly.vertices;
    if (v.empty()) return false;
    if (v.size() == 1) return v[0] == p;
    if (v.size() == 2) {
        return cross(v[0], v[1], p) == 0 && std::min(v[0].x, v[1].x) <= p.x && p.x <= std::max(v[0].x, v[1].x) &&
               std::min(v[0].y, v[1].y) <= p.y && p.y <= std::max(v[0].y, v[1].y);
    }
    for (std::size_t i = 0; i < v.size(); ++i)
        if (cross(v[i], v[(i + 1) % v.size()], p) < 0) return false;
    return true;
}

bool contains(const LatticePolygon& outer, const LatticePolygon& inner) {
    for (const auto& p : inner.vertices)
        if (!contains_point(outer, p)) return false;
    return true;
}

long long double_area(const LatticePolygon& poly) {
    const auto& v = poly.vertices;
    long long a = 0;
    for (std::size_t i = 0; v.size() > 2 && i < v.size(); ++i) {
        const auto& p = v[i];
        const auto& q = v[(i + 1) % v.size()];
        a += p.x * q.y - p.y * q.x;
    }
    return a;
}

std::vector<LatticePoint> lattice_points(const LatticePolygon& poly) {
    std::vector<LatticePoint> out;
    if (poly.empty()) return out;
    long long x0 = poly.vertices[0].x, x1 = x0, y0 = poly.vertices[0].y, y1 = y0;
    for (const auto& p : poly.vertices) {
        x0 = std::min(x0, p.x);
        x1 = std::max(x1, p.x);
        y0 = std::min(y0, p.y);
        y1 = std::max(y1, p.y);
    }
    for (long long x = x0; x <= x1; ++x)
        for (long long y = y0; y <= y1; ++y)
            if (contains_point(poly, {x, y})) out.push_back({x, y});
    return out;
}

namespace {

// Envelope from left to right; keeps the extreme y at repeated x.
MonotoneChain envelope(std::vector<LatticePoint> pts, bool upper) {
    MonotoneChain c;
    c.role = upper ? ChainRole::UpperHull : ChainRole::LowerHull;
    std::sort(pts.begin(), pts.end(), [upper](const LatticePoint& a, const LatticePoint& b) {
        if (a.x != b.x) return a.x < b.x;
        return upper ? a.y > b.y : a.y < b.y;
    });
    for (const auto& p : pts) {
        if (!c.points.empty() && c.points.back().x == p.x) continue;
        while (c.points.size() >= 2) {
            long long cr = cross(c.points[c.points.size() - 2], c.points.back(), p);
            if (upper ? cr >= 0 : cr <= 0)
                c.points.pop_back();
            else
                break;
        }
        c.points.push_back(p);
    }
    return c;
}

struct Frac2 {
    long long num, den;
};

// Height of a chain at abscissa x, held constant beyond its ends.
Frac2 chain_at(const MonotoneChain& c, long long x) {
    const auto& p = c.points;
    if (x <= p.front().x) return {p.front().y, 1};
    if (x >= p.back().x) return {p.back().y, 1};
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
        if (p[i].x <= x && x <= p[i + 1].x) {
            long long dx = p[i + 1].x - p[i].x;
            return {p[i].y * dx + (p[i + 1].y - p[i].y) * (x - p[i].x), dx};
        }
    }
    return {p.back().y, 1};
}

}  // namespace

MonotoneChain upper_chain(const std::vector<LatticePoint>& pts) { return envelope(pts, true); }
MonotoneChain lower_chain(const std::vector<LatticePoint>& pts) { return envelope(pts, false); }

LatticePolygon region_between(const MonotoneChain& upper, const MonotoneChain& lower) {
    if (upper.points.empty() || lower.points.empty()) throw Error(ErrorKind::InconsistentChains, "empty chain");
    std::vector<LatticePoint> xs;
    for (const auto& p : upper.points) xs.push_back(p);
    for (const auto& p : lower.points) xs.push_back(p);
    for (const auto& p : xs) {
        Frac2 lo = chain_at(lower, p.x), up = chain_at(upper, p.x);
        if (lo.num * up.den > up.num * lo.den)
            throw Error(ErrorKind::InconsistentChains, "lower chain exceeds upper chain at x=" + std::to_string(p.x));
    }
    long long xmin = std::min(upper.points.front().x, lower.points.front().x);
    long long xmax = std::max(upper.points.back().x, lower.points.back().x);
    // Vertical closure: each chain is continued horizontally to the common x-range.
    xs.push_back({xmin, upper.points.front().y});
    xs.push_back({xmin, lower.points.front().y});
    xs.push_back({xmax, upper.points.back().y});
    xs.push_back({xmax, lower.points.back().y});
    return convex_hull(xs);
}

ShapeReport shape_check(const LatticePolygon& poly, CurveClass cls) {
    ShapeReport r;
    const auto& v = poly.vertices;
    if (v.empty()) return {false, "empty polygon", 0};
    long long X = 0, Y = 0, S = 0, mx = v[0].x, my = v[0].y;
    for (const auto& p : v) {
        if (p.x < 0 || p.y < 0) return {false, "negative exponent", 0};
        X = std::max(X, p.x);
        Y = std::max(Y, p.y);
        S = std::max(S, p.x + p.y);
        mx = std::min(mx, p.x);
        my = std::min(my, p.y);
    }
    if (mx != 0 || my != 0) return {false, "polygon does not touch both axes", 0};

    // Enclosing shape: right triangle with legs X, Y (polynomial), isosceles
    // right triangle of degree S (same denominator), rectangle (different).
    auto on_side = [&](const LatticePoint& a, const LatticePoint& b) {
        if (a.x == 0 && b.x == 0) return true;
        if (a.y == 0 && b.y == 0) return true;
        switch (cls) {
            case CurveClass::Polynomial:
                return a.x * Y + a.y * X == X * Y && b.x * Y + b.y * X == X * Y;
            case CurveClass::SameDenominator:
                return a.x + a.y == S && b.x + b.y == S;
            case CurveClass::DifferentDenominators:
                return (a.x == X && b.x == X) || (a.y == Y && b.y == Y);
        }
        return false;
    };
    for (const auto& p : v) {
        bool inside = cls == CurveClass::Polynomial ? p.x * Y + p.y * X <= X * Y : true;
        if (!inside) return {false, "vertex outside the enclosing right triangle", 0};
    }
    if (v.size() <= 2) return r;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!on_side(v[i], v[(i + 1) % v.size()])) ++r.cuts;

    switch (cls) {
        case CurveClass::Polynomial: {
            bool has_x = std::find(v.begin(), v.end(), LatticePoint{X, 0}) != v.end();
            bool has_y = std::find(v.begin(), v.end(), LatticePoint{0, Y}) != v.end();
            if (r.cuts > 1) r = {false, "polynomial curve: more than one corner cut", r.cuts};
            else if (!has_x || !has_y) r = {false, "polynomial curve: corner cut away from the origin", r.cuts};
            break;
        }
        case CurveClass::SameDenominator:
            if (r.cuts > 2) r = {false, "same-denominator curve: more than two cuts", r.cuts};
            break;
        case CurveClass::DifferentDenominators:
            if (r.cuts > 2) r = {false, "different-denominator curve: more than two cuts", r.cuts};
            break;
    }
    return r;
}

std::string to_string(const LatticePolygon& poly) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < poly.vertices.size(); ++i)
        os << (i ? "," : "") << "(" << poly.vertices[i].x << "," << poly.vertices[i].y << ")";
    os << "]";
    return os.str();
}

}  // namespace ni
