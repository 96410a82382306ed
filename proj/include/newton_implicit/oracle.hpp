#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "newton_implicit/curves.hpp"
#include "newton_implicit/geometry.hpp"
#include "newton_implicit/poly.hpp"
#include "newton_implicit/subdivisions.hpp"

namespace ni {

// Sparse bivariate polynomial in x, y with rational coefficients.
struct ImplicitPolynomial {
    std::map<std::pair<long long, long long>, Rat> terms;

    bool empty() const { return terms.empty(); }
    // Integer coefficients with gcd 1 and a positive leading (largest exponent) term.
    ImplicitPolynomial normalized() const;
    Rat eval(const Rat& x, const Rat& y) const;
    std::string to_json() const;
    std::string to_text() const;
    static ImplicitPolynomial from_json(const std::string& text);
    static ImplicitPolynomial from_mpoly(const MPoly& p);
};

bool same_up_to_scale(const ImplicitPolynomial& a, const ImplicitPolynomial& b);
LatticePolygon newton_polygon(const ImplicitPolynomial& p);

using BigRationalMatrix = std::vector<std::vector<Rat>>;

struct Nullspace {
    std::vector<std::vector<Rat>> basis;
    std::size_t rank = 0;
};
// Exact Gaussian elimination, pivoting on the entry of smallest bit size.
Nullspace exact_nullspace(BigRationalMatrix m);

// The curve's supports with fresh nonzero integer coefficients in [-bound, bound],
// redrawn until the class gcd conditions hold and interpolation on the
// degree-bound polygon has a one-dimensional kernel.
ParametricCurve random_generic_coefficients(const ParametricCurve& supports, int bound, std::uint64_t seed);

// Points at distinct rational parameters t = p/q with |p|, q <= max_height.
std::vector<std::pair<Rat, Rat>> sample_curve_points(const ParametricCurve& c, int count, std::uint64_t seed,
                                                     int max_height = 1000);

// Kernel of the evaluation matrix on candidate monomials. Throws
// KernelDimensionNotOne(d) unless the kernel is a line.
ImplicitPolynomial implicitize_interpolation(const ParametricCurve& c, const std::vector<LatticePoint>& candidate,
                                             std::uint64_t seed = 1);
// Candidate support: lattice points of the degree-bound polygon.
ImplicitPolynomial implicitize_interpolation(const ParametricCurve& c, std::uint64_t seed = 1);

// Resultant of x Q0 - P0 and y Q1 - P1 in t, reduced to its curve-vanishing factor.
ImplicitPolynomial implicitize_sylvester(const ParametricCurve& c, std::uint64_t seed = 1);

// True when phi(P0/Q0, P1/Q1) vanishes identically.
bool vanishes_on_curve(const ImplicitPolynomial& phi, const ParametricCurve& c);

// Sylvester matrix of two univariate polynomials given as coefficient lists
// (index = power of t) over a polynomial ring.
std::vector<std::vector<MPoly>> sylvester_matrix(const std::vector<MPoly>& f, const std::vector<MPoly>& g);
// Fraction-free (Bareiss) determinant.
MPoly bareiss_determinant(std::vector<std::vector<MPoly>> m);

// Generic resultant Res_t(x0 Q - x2 P0, x1 Q - x2 P1) with every coefficient a
// variable. Variables: x0, x1, x2, then the coefficients of P0, P1, Q in support order.
struct SymbolicResultant {
    MPoly poly;
    std::array<std::vector<int>, 3> coeff_vars;  // variable index per point (b,0) of B_i
};
SymbolicResultant symbolic_sylvester(const SameDenomData& d);
// Exponents of (x0, x1, x2) in the unique monomial minimizing the lifting
// weight; throws NonGenericLifting on ties.
std::array<long long, 3> omega_extreme_exponent(const SymbolicResultant& r, const Lifting& w);

}  // namespace ni
