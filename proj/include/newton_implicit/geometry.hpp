#pragma once

#include <compare>
#include <string>
#include <vector>

#include "newton_implicit/curves.hpp"

namespace ni {

// Exponent pair (e0, e1) of a monomial x^e0 y^e1.
struct LatticePoint {
    long long x = 0, y = 0;
    auto operator<=>(const LatticePoint&) const = default;
};

// Convex lattice polygon: counter-clockwise, starting at the lexicographically
// smallest vertex, no collinear triples. One vertex is a point, two a segment.
struct LatticePolygon {
    std::vector<LatticePoint> vertices;

    bool operator==(const LatticePolygon&) const = default;
    bool empty() const { return vertices.empty(); }
    std::size_t size() const { return vertices.size(); }
};

enum class ChainRole { UpperHull, LowerHull };

// x-monotone convex chain: the upper (max y over x) or lower envelope of a point set.
struct MonotoneChain {
    std::vector<LatticePoint> points;
    ChainRole role = ChainRole::UpperHull;
};

long long cross(const LatticePoint& o, const LatticePoint& a, const LatticePoint& b);

LatticePolygon convex_hull(std::vector<LatticePoint> pts);
bool contains_point(const LatticePolygon& poly, const LatticePoint& p);
bool contains(const LatticePolygon& outer, const LatticePolygon& inner);
// Twice the area.
long long double_area(const LatticePolygon& poly);
std::vector<LatticePoint> lattice_points(const LatticePolygon& poly);

MonotoneChain upper_chain(const std::vector<LatticePoint>& pts);
MonotoneChain lower_chain(const std::vector<LatticePoint>& pts);
LatticePolygon region_between(const MonotoneChain& upper, const MonotoneChain& lower);

struct ShapeReport {
    bool pass = true;
    std::string clause;  // violated clause, empty on pass
    int cuts = 0;        // corners cut from the enclosing right triangle or rectangle
};

// Shape taxonomy of implicit polygons: polynomial curves give a right triangle
// with at most one corner cut (not at the origin), same-denominator curves a
// right triangle with at most two cuts, different-denominator curves a
// quadrilateral with at most two cuts.
ShapeReport shape_check(const LatticePolygon& poly, CurveClass cls);

std::string to_string(const LatticePolygon& poly);

}  // namespace ni
