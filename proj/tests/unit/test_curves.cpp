#include <algorithm>
#include <array>
#include <functional>
#include <vector>

#include "doctest.h"
#include "fixtures.hpp"
#include "newton_implicit/curves.hpp"
#include "newton_implicit/errors.hpp"

using namespace ni;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("no error thrown");
    return ErrorKind::InvariantViolation;
}

// Euclid over Q on coefficient vectors, low degree first; returns a monic gcd.
std::vector<Rat> gcd_oracle(std::vector<Rat> a, std::vector<Rat> b) {
    auto trim = [](std::vector<Rat>& p) {
        while (!p.empty() && p.back() == 0) p.pop_back();
    };
    trim(a);
    trim(b);
    while (!b.empty()) {
        while (a.size() >= b.size() && !a.empty()) {
            Rat f = a.back() / b.back();
            std::size_t shift = a.size() - b.size();
            for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= f * b[i];
            trim(a);
        }
        std::swap(a, b);
    }
    Rat lead = a.back();
    for (auto& c : a) c /= lead;
    return a;
}

}  // namespace

TEST_CASE("parse: class inference and coefficients") {
    auto id = parse_curve(fx::kIdentity);
    CHECK(id.cls == CurveClass::Polynomial);
    CHECK(id.P0 == SparsePoly{{1, Rat(1)}});
    CHECK(id.P1 == SparsePoly{{1, Rat(1)}});

    auto fol = parse_curve(fx::kFolium);
    CHECK(fol.cls == CurveClass::SameDenominator);
    CHECK(fol.Q0 == SparsePoly{{0, Rat(1)}, {3, Rat(1)}});
    CHECK(fol.P0 == SparsePoly{{2, Rat(3)}});

    auto lau = parse_curve(fx::kLaurent);
    CHECK(lau.cls == CurveClass::DifferentDenominators);
    CHECK(lau.supports_only);
    CHECK(support_of(lau.Q0) == Support{1});
    CHECK(support_of(lau.Q1) == Support{1});
    CHECK(support_of(lau.P0) == Support{0, 2});
}

TEST_CASE("parse: fractions and json round trip") {
    auto c = parse_curve("x=(1/2 t^2 - 3)/(t+1); y=(t)/(t^2-2/3)");
    CHECK(c.cls == CurveClass::DifferentDenominators);
    CHECK(c.P0.at(2) == Rat(1, 2));
    CHECK(c.Q1.at(0) == Rat(-2, 3));
    for (const char* s : {fx::kFolium, fx::kBigDiff, fx::kPolyA, fx::kCircleDiff, fx::kLaurent}) {
        auto a = parse_curve(s);
        CHECK(parse_curve(curve_to_json(a)) == a);
    }
}

TEST_CASE("parse: errors") {
    CHECK(kind_of([] { parse_curve("x=(3t^2/(1+t^3); y=t"); }) == ErrorKind::Syntax);
    CHECK(kind_of([] { parse_curve("x=t; y=t-t"); }) == ErrorKind::ZeroPolynomial);
    CHECK(kind_of([] { parse_curve("x=t/(t-t); y=t"); }) == ErrorKind::ZeroPolynomial);
    CHECK(kind_of([] { parse_curve("x=1.5t; y=t"); }) == ErrorKind::BadCoefficient);
}

TEST_CASE("normalize: shifts, substitution check and gcd reroute") {
    auto c = normalize(parse_curve("x=(1+t^2)/t; y=1/t"));
    CHECK(support_of(c.P0) == Support{0, 2});
    CHECK(support_of(c.Q0) == Support{1});

    CHECK(kind_of([] { normalize(parse_curve("x=t^2; y=t^4")); }) == ErrorKind::DegreeSubstitutionDetected);
    try {
        normalize(parse_curve("x=t^2; y=t^4"));
    } catch (const Error& e) {
        CHECK(e.value() == 2);
    }

    auto raw = parse_curve("x=(t^2+t)/(t^2+2t); y=t");
    auto g = gcd_oracle({0, 1, 1}, {0, 2, 1});
    CHECK(g == std::vector<Rat>{0, 1});  // the common factor is t
    auto r = normalize(raw);
    CHECK(r.cls == CurveClass::DifferentDenominators);
    CHECK(r.P0 == SparsePoly{{0, Rat(1)}, {1, Rat(1)}});
    CHECK(r.Q0 == SparsePoly{{0, Rat(2)}, {1, Rat(1)}});
}

TEST_CASE("normalize: same denominator with a shared factor leaves the class") {
    // t^6 - t^2 and t^7 + 1 share t + 1.
    auto c = normalize(parse_curve(fx::kFiveVertexFlipped));
    CHECK(c.cls == CurveClass::DifferentDenominators);
    auto g = gcd_oracle({0, 0, -1, 0, 0, 0, 1}, {1, 0, 0, 0, 0, 0, 0, 1});
    CHECK(g == std::vector<Rat>{1, 1});
    CHECK(support_of(c.Q0).back() == 6);
}

TEST_CASE("normalize: constant shared denominator becomes polynomial") {
    auto c = normalize(parse_curve("x=(t^2+1)/(2); y=(t)/(2)"));
    CHECK(c.cls == CurveClass::Polynomial);
}

TEST_CASE("normalize is idempotent") {
    for (const char* s : {fx::kFolium, fx::kCircle, fx::kBigDiff, fx::kPolyA, fx::kLaurent, fx::kDAndrea,
                          fx::kFiveVertexFlipped, "x=(1+t^2)/t; y=1/t", "x=(t^-2+1)/(t^3); y=t^-1"}) {
        auto a = normalize(parse_curve(s));
        CHECK(normalize(a) == a);
    }
}

TEST_CASE("derive_same_denom on the reference fixtures") {
    auto f = derive_same_denom(normalize(parse_curve(fx::kFolium)));
    CHECK(f.B[0] == Support{2});
    CHECK(f.B[1] == Support{1});
    CHECK(f.B[2] == Support{0, 3});
    CHECK(f.u == 3);

    auto v = derive_same_denom(normalize(parse_curve(fx::kFiveVertex)));
    CHECK(v.B[0] == Support{2, 6});
    CHECK(v.B[1] == Support{3, 4});
    CHECK(v.B[2] == Support{0, 7});
    CHECK(v.u == 7);

    auto c = derive_same_denom(normalize(parse_curve(fx::kCircle)));
    CHECK(c.B[0] == Support{1});
    CHECK(c.B[1] == Support{0, 2});
    CHECK(c.B[2] == Support{0, 2});
    CHECK(c.u == 2);
    for (const auto& d : {f, v, c}) {
        Support all = support_union(support_union(d.B[0], d.B[1]), d.B[2]);
        CHECK(all.front() == 0);
        CHECK(all.back() == d.u);
        CHECK(d.origin_condition());
    }
}

TEST_CASE("classify: circle is 1A by interval hulls") {
    auto d = derive_same_denom(normalize(parse_curve(fx::kCircle)));
    for (int a = 0; a < 3; ++a)
        for (int b = a + 1; b < 3; ++b) {
            int lo = std::min(d.B[a].front(), d.B[b].front()), hi = std::max(d.B[a].back(), d.B[b].back());
            CHECK(lo == 0);
            CHECK(hi == d.u);
        }
    CHECK(d.cls.tag == CaseTag::A1);
}

TEST_CASE("classify: 5-vertex example is 2A with k=2, i=0, j=1") {
    auto d = derive_same_denom(normalize(parse_curve(fx::kFiveVertex)));
    CHECK(d.cls.tag == CaseTag::A2);
    CHECK(d.cls.k == 2);
    CHECK(d.cls.i == 0);
    CHECK(d.cls.j == 1);
    CHECK_FALSE(d.cls.reversed);
}

TEST_CASE("classify: folium is 2A") {
    auto d = derive_same_denom(normalize(parse_curve(fx::kFolium)));
    CHECK(d.cls.tag == CaseTag::A2);
    CHECK(d.cls.k == 2);
}

TEST_CASE("classify: case B normal form found by brute force") {
    auto d = SameDenomData::from_supports({1, 4}, {0, 2}, {1, 3});
    CHECK(d.u == 4);
    // Every permutation satisfying 0 < biL <= biR = u and 0 = bjL <= bjR < u.
    std::vector<std::array<int, 3>> matches;
    std::array<int, 3> p{0, 1, 2};
    do {
        int i = p[0], j = p[1];
        if (0 < d.bL[i] && d.bR[i] == d.u && d.bL[j] == 0 && d.bR[j] < d.u) matches.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    REQUIRE(matches.size() == 1);
    CHECK(d.cls.i == matches[0][0]);
    CHECK(d.cls.j == matches[0][1]);
    CHECK(d.cls.k == matches[0][2]);
    CHECK(d.cls.tag == (d.bL[d.cls.k] == 0 ? CaseTag::B2 : CaseTag::B3));
    CHECK(d.cls.tag == CaseTag::B3);
}

TEST_CASE("classify: matched case satisfies its inequalities") {
    for (const char* s : {fx::kFolium, fx::kFiveVertex, fx::kRationalSame, fx::kCircle,
                          "x=(t^2)/(1+t); y=(t^3)/(1+t)"}) {
        auto d = derive_same_denom(normalize(parse_curve(s)));
        auto e = d.cls.reversed ? d.reversed() : d;
        int i = d.cls.i, j = d.cls.j, k = d.cls.k;
        switch (d.cls.tag) {
            case CaseTag::A2:
                CHECK(e.bL[k] == 0);
                CHECK(e.bR[k] == e.u);
                CHECK((long long)e.bL[i] * (e.u - e.bR[j]) >= (long long)e.bL[j] * (e.u - e.bR[i]));
                break;
            case CaseTag::B2:
            case CaseTag::B3:
                CHECK(0 < e.bL[i]);
                CHECK(e.bR[i] == e.u);
                CHECK(e.bL[j] == 0);
                CHECK(e.bR[j] < e.u);
                break;
            default: break;
        }
    }
}

TEST_CASE("classify: unclassifiable supports are rejected") {
    CHECK(kind_of([] { SameDenomData::from_supports({1}, {1}, {1, 2}); }) ==
          ErrorKind::UnclassifiableConfiguration);
}

TEST_CASE("selections of the big different-denominator example") {
    auto d = derive_diff_denom(normalize(parse_curve(fx::kBigDiff)));
    CHECK(d.A0 == Support{0, 2, 3, 4, 7});
    CHECK(d.A1 == Support{0, 1, 2, 4, 5});
    auto s1 = make_selection(d, SelectionKind::Selection1);
    CHECK(s1.describe(0) == "{0+,2-,3+,4-,7-}");
    CHECK(s1.describe(1) == "{0+,1-,2+,4-,5+}");
    auto s2 = make_selection(d, SelectionKind::Selection2);
    CHECK(s2.describe(0) == "{0+,2-,3-,4-,7-}");
    CHECK(s2.describe(1) == "{0+,1-,2+,4-,5-}");
}

TEST_CASE("selection sets equal direct set computation") {
    for (const char* s : {fx::kBigDiff, fx::kDAndrea, fx::kCircleDiff, fx::kLaurent}) {
        auto c = normalize(parse_curve(s));
        auto d = derive_diff_denom(c);
        auto s1 = make_selection(d, SelectionKind::Selection1);
        auto s2 = make_selection(d, SelectionKind::Selection2);
        for (int i = 0; i < 2; ++i) {
            Support q = support_of(c.den(i)), p = support_of(c.num(i)), diff;
            std::set_difference(q.begin(), q.end(), p.begin(), p.end(), std::back_inserter(diff));
            CHECK(s1.selected_set(i) == q);
            CHECK(s2.selected_set(i) == diff);
        }
    }
}

TEST_CASE("circle under the second selection has no selected point in A1") {
    auto d = derive_diff_denom(normalize(parse_curve(fx::kCircleDiff)));
    auto s2 = make_selection(d, SelectionKind::Selection2);
    CHECK(s2.describe(0) == "{0+,1-,2+}");
    CHECK(s2.describe(1) == "{0-,2-}");
    CHECK_FALSE(s2.any_selected(1));
    CHECK(s2.leftmost(0, true) == 0);
    CHECK(s2.rightmost(0, true) == 2);
    CHECK(s2.leftmost(0, false) == 1);
    CHECK(s2.chi(0, 1) == 0);
    CHECK(s2.chi_nonselected(1) == 1);
}
