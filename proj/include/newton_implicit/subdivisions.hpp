#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "newton_implicit/curves.hpp"
#include "newton_implicit/geometry.hpp"

namespace ni {

// ---------------------------------------------------------------------------
// Staircase triangulations of the Cayley configuration of two 1-d supports.

struct CayleyTriangle {
    bool base_in_A0 = true;
    // Index of the apex point in the other support, and the base indices.
    int apex = 0, base_lo = 0, base_hi = 0;
    long long volume = 0;  // exponent difference along the base
};

struct Staircase {
    // Monotone index path from (0,0) to (n,m); consecutive pairs differ in one coordinate.
    std::vector<std::pair<int, int>> path;

    std::vector<CayleyTriangle> triangles(const Support& A0, const Support& A1) const;
};

inline constexpr int kDefaultStaircaseCap = 24;

// Number of triangulations of the Cayley configuration (interior points may be skipped).
std::uint64_t count_staircases(std::size_t size0, std::size_t size1);

// Visits every staircase once in lexicographic path order; the visitor returns
// false to stop. Throws CapExceeded when n+m exceeds cap.
void enumerate_staircases(const Support& A0, const Support& A1, const std::function<bool(const Staircase&)>& visit,
                          int cap = kDefaultStaircaseCap);

// e0 sums the volumes of A1-based triangles whose apex is selected in A0; e1 likewise.
LatticePoint exponents_from_staircase(const Staircase& s, const Selection& sel);
// Same with independent selections for the two coordinates.
LatticePoint exponents_from_staircase(const Staircase& s, const Support& A0, const Support& A1,
                                      const std::vector<bool>& selX, const std::vector<bool>& selY);

// Exact set of exponent points over all staircases, by dynamic programming over
// the index grid. selX flags points of A0 (drives e0), selY points of A1 (drives e1).
std::vector<LatticePoint> reachable_exponents(const Support& A0, const Support& A1, const std::vector<bool>& selX,
                                              const std::vector<bool>& selY);

// Upper or lower envelope of all staircase exponents under one selection.
MonotoneChain hull_of_exponents(const Support& A0, const Support& A1, const Selection& sel, ChainRole role);

// Hull of the exponents obtained by reading e0 and e1 each under either
// selection, over all staircases.
LatticePolygon corner_hull(const Selection& sel1, const Selection& sel2);

// ---------------------------------------------------------------------------
// Lifting-induced mixed subdivisions of C0+C1+C2 for same-denominator data.
// Support i consists of the point (0,1) (index 0) followed by (b,0) for b in B_i.

struct Lifting {
    std::array<std::vector<long long>, 3> values;
};

enum class CellKind { MixedTypeI, MixedTypeII, MixedOther, Unmixed };
const char* cell_kind_name(CellKind k);

struct MixedCell {
    // Point indices of each face summand.
    std::array<std::vector<int>, 3> faces;
    CellKind kind = CellKind::Unmixed;
    int vertex_support = -1;  // support giving the vertex summand of a mixed cell
    long long double_area = 0;
};

struct MixedSubdivision {
    std::array<std::vector<LatticePoint>, 3> points;
    std::vector<MixedCell> cells;
    int u = 0;
};

std::array<std::vector<LatticePoint>, 3> lifting_supports(const SameDenomData& d);

// Throws NonGenericLifting if the induced subdivision is not tight.
MixedSubdivision subdivision_from_lifting(const SameDenomData& d, const Lifting& w);

// (e0, e1, e2); throws DegreeInvariantViolated unless they sum to u.
std::array<long long, 3> exponent_from_subdivision(const MixedSubdivision& s);

struct LiftingHull {
    LatticePolygon polygon;
    // One lifting realizing each polygon vertex.
    std::vector<std::pair<LatticePoint, Lifting>> witnesses;
    // Every exponent point reached, with the first lifting that reached it.
    std::vector<std::pair<LatticePoint, Lifting>> realized;
    int structured = 0, random = 0;
    std::vector<LatticePoint> random_points;
};

// Structured liftings linear on each segment, then `trials` random liftings.
LiftingHull sample_lifting_hull(const SameDenomData& d, int trials, std::uint64_t seed, bool structured = true);

}  // namespace ni
