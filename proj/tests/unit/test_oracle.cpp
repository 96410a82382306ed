#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "newton_implicit/errors.hpp"
#include "newton_implicit/oracle.hpp"
#include "newton_implicit/predictor.hpp"

using namespace ni;
using P = LatticePoint;

namespace {

ImplicitPolynomial poly(std::initializer_list<std::pair<std::pair<long long, long long>, long long>> terms) {
    ImplicitPolynomial p;
    for (const auto& [e, c] : terms) p.terms[e] = Rat(static_cast<long>(c));
    return p;
}

const ImplicitPolynomial kCircleEq = poly({{{2, 0}, 1}, {{0, 2}, 1}, {{0, 0}, -1}});
const ImplicitPolynomial kFoliumEq = poly({{{3, 0}, 1}, {{0, 3}, 1}, {{1, 1}, -3}});

Rat eval_t(const SparsePoly& p, const Rat& t) {
    Rat r = 0, pw = 1;
    int e = 0;
    for (const auto& [k, c] : p) {
        while (e < k) {
            pw *= t;
            ++e;
        }
        r += c * pw;
    }
    return r;
}

}  // namespace

TEST_CASE("curve samples") {
    auto circle = normalize(parse_curve(fx::kCircle));
    auto pts = sample_curve_points(circle, 30, 5);
    CHECK(pts.size() == 30);
    for (const auto& [x, y] : pts) CHECK(x * x + y * y == 1);
    CHECK(eval_t(circle.P0, 1) / eval_t(circle.Q0, 1) == 1);
    CHECK(eval_t(circle.P1, 1) / eval_t(circle.Q1, 1) == 0);
    CHECK(eval_t(circle.P1, 0) / eval_t(circle.Q1, 0) == 1);
    auto fol = parse_curve(fx::kFolium);
    CHECK(eval_t(fol.P0, 2) / eval_t(fol.Q0, 2) == Rat(4, 3));
    CHECK(eval_t(fol.P1, 2) / eval_t(fol.Q1, 2) == Rat(2, 3));
}

TEST_CASE("exact nullspace") {
    BigRationalMatrix m{{Rat(1), Rat(2), Rat(3)}, {Rat(2), Rat(4), Rat(6)}, {Rat(1, 2), Rat(0), Rat(-1)}};
    auto ns = exact_nullspace(m);
    CHECK(ns.rank == 2);
    REQUIRE(ns.basis.size() == 1);
    for (const auto& row : m) {
        Rat s = 0;
        for (std::size_t j = 0; j < row.size(); ++j) s += row[j] * ns.basis[0][j];
        CHECK(s == 0);
    }
    auto full = exact_nullspace({{Rat(1), Rat(0)}, {Rat(0), Rat(1)}});
    CHECK(full.basis.empty());
    CHECK(full.rank == 2);
}

TEST_CASE("interpolation on known curves") {
    auto circle = normalize(parse_curve(fx::kCircle));
    auto tri = lattice_points(convex_hull({{0, 0}, {2, 0}, {0, 2}}));
    CHECK(same_up_to_scale(implicitize_interpolation(circle, tri), kCircleEq));
    CHECK(same_up_to_scale(implicitize_interpolation(parse_curve(fx::kFolium)), kFoliumEq));
}

TEST_CASE("interpolation with too small a support has an empty kernel") {
    auto circle = normalize(parse_curve(fx::kCircle));
    try {
        implicitize_interpolation(circle, {{0, 0}, {1, 0}, {0, 1}});
        FAIL("expected KernelDimensionNotOne");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::KernelDimensionNotOne);
        CHECK(e.value() == 0);
    }
}

TEST_CASE("sylvester on known curves") {
    CHECK(same_up_to_scale(implicitize_sylvester(parse_curve(fx::kCircle)), kCircleEq));
    CHECK(same_up_to_scale(implicitize_sylvester(parse_curve(fx::kPolyB)),
                           poly({{{1, 0}, -6}, {{0, 1}, 3}, {{2, 0}, 1}, {{1, 1}, 2}, {{0, 2}, 1}})));
    CHECK(same_up_to_scale(implicitize_sylvester(parse_curve(fx::kFolium)), kFoliumEq));
}

TEST_CASE("both oracles agree and vanish on the curve") {
    for (const char* s : {fx::kFolium, fx::kCircle, fx::kCircleDiff, fx::kRationalSame, fx::kPolyA, fx::kPolyB,
                          fx::kDAndrea, fx::kIdentity, fx::kFiveVertex}) {
        CAPTURE(s);
        auto c = parse_curve(s);
        auto a = implicitize_sylvester(c);
        auto b = implicitize_interpolation(c);
        CHECK(same_up_to_scale(a, b));
        CHECK(vanishes_on_curve(a, c));
        CHECK(contains(degree_bound_polygon(degree_bounds(normalize(c))), newton_polygon(a)));
    }
}

TEST_CASE("interpolation is scale invariant") {
    auto c = normalize(parse_curve(fx::kDAndrea));
    auto base = newton_polygon(implicitize_interpolation(c));
    ParametricCurve s = c;
    for (auto* p : {&s.P0, &s.Q0})
        for (auto& [e, v] : *p) v *= Rat(7, 3);
    for (auto* p : {&s.P1, &s.Q1})
        for (auto& [e, v] : *p) v *= Rat(-2, 5);
    CHECK(newton_polygon(implicitize_interpolation(s)) == base);
}

TEST_CASE("newton polygons") {
    CHECK(newton_polygon(kCircleEq).vertices == std::vector<P>{{0, 0}, {2, 0}, {0, 2}});
    CHECK(fx::verts(newton_polygon(kFoliumEq)) == fx::sorted({{3, 0}, {0, 3}, {1, 1}}));
    auto phi = implicitize_sylvester(parse_curve(fx::kDAndrea));
    CHECK(fx::verts(newton_polygon(phi)) == fx::sorted({{0, 1}, {0, 3}, {3, 0}, {1, 3}, {2, 0}, {3, 2}}));
}

TEST_CASE("implicit polynomial serialization") {
    auto phi = kFoliumEq.normalized();
    CHECK(same_up_to_scale(ImplicitPolynomial::from_json(phi.to_json()), phi));
    CHECK(ImplicitPolynomial::from_json(phi.to_json()).terms == phi.terms);
    CHECK_FALSE(phi.to_text().empty());
    CHECK(phi.eval(Rat(4, 3), Rat(2, 3)) == 0);
}

TEST_CASE("random generic coefficients") {
    auto fol = parse_curve(fx::kFolium);
    fol.supports_only = true;
    auto c = random_generic_coefficients(fol, 16, 3);
    CHECK_FALSE(c.supports_only);
    CHECK(support_of(c.P0) == support_of(fol.P0));
    CHECK(support_of(c.Q0) == support_of(fol.Q0));
    CHECK(c.Q0 == c.Q1);
    for (const auto* p : {&c.P0, &c.P1, &c.Q0})
        for (const auto& [e, v] : *p) {
            CHECK(v != 0);
            CHECK(abs(v) <= 16);
        }
    CHECK_NOTHROW(implicitize_interpolation(c));

    auto unit = random_generic_coefficients(parse_curve(fx::kBigDiff), 1, 4);
    for (const auto* p : {&unit.P0, &unit.P1, &unit.Q0, &unit.Q1})
        for (const auto& [e, v] : *p) CHECK(abs(v) == 1);
}

TEST_CASE("random generic coefficients reject draws with a common factor") {
    // With unit coefficients, half of all draws make 1 +- t proportional to the denominator.
    auto c = parse_curve("x=(1+t)/(1+t); y=(t^2)/(1+t)");
    c.supports_only = true;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        auto d = random_generic_coefficients(c, 1, seed);
        CHECK(d.P0.at(0) * d.Q0.at(1) != d.P0.at(1) * d.Q0.at(0));
    }
}

TEST_CASE("sylvester resultant helpers") {
    // Res_t(t - a, t - b) = b - a with a, b the variables 0 and 1.
    MPoly a = MPoly::variable(2, 0), b = MPoly::variable(2, 1), one = MPoly::constant(2, 1);
    auto m = sylvester_matrix({-a, one}, {-b, one});
    CHECK(m.size() == 2);
    auto det = bareiss_determinant(m);
    CHECK((det == b - a || det == a - b));
}
