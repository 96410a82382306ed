#pragma once

// Dense univariate polynomials over a gcd domain, used recursively as
// Z[x] and Z[x][y] for bivariate gcd computations.

#include <gmpxx.h>

#include <algorithm>
#include <utility>
#include <vector>

namespace ni::detail {

inline bool is_zero(const mpz_class& a) { return a == 0; }
inline mpz_class gcd_r(const mpz_class& a, const mpz_class& b) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}
inline mpz_class divexact_r(const mpz_class& a, const mpz_class& b) {
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}
inline bool divides_r(const mpz_class& b, const mpz_class& a) { return mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()); }
inline int sign_r(const mpz_class& a) { return sgn(a); }

template <class R>
struct UPoly {
    std::vector<R> c;

    int deg() const { return static_cast<int>(c.size()) - 1; }
    const R& lead() const { return c.back(); }
    void trim() {
        while (!c.empty() && is_zero(c.back())) c.pop_back();
    }
};

template <class R>
bool is_zero(const UPoly<R>& p) { return p.c.empty(); }

template <class R>
bool operator==(const UPoly<R>& a, const UPoly<R>& b) { return a.c == b.c; }

template <class R>
UPoly<R> operator+(const UPoly<R>& a, const UPoly<R>& b) {
    UPoly<R> r;
    r.c.resize(std::max(a.c.size(), b.c.size()));
    for (std::size_t i = 0; i < r.c.size(); ++i) {
        if (i < a.c.size() && i < b.c.size())
            r.c[i] = a.c[i] + b.c[i];
        else
            r.c[i] = i < a.c.size() ? a.c[i] : b.c[i];
    }
    r.trim();
    return r;
}

template <class R>
UPoly<R> operator-(const UPoly<R>& a) {
    UPoly<R> r = a;
    for (auto& x : r.c) x = -x;
    return r;
}

template <class R>
UPoly<R> operator-(const UPoly<R>& a, const UPoly<R>& b) { return a + (-b); }

template <class R>
UPoly<R> operator*(const UPoly<R>& a, const UPoly<R>& b) {
    UPoly<R> r;
    if (a.c.empty() || b.c.empty()) return r;
    r.c.assign(a.c.size() + b.c.size() - 1, R{});
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (is_zero(a.c[i])) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] = r.c[i + j] + a.c[i] * b.c[j];
    }
    r.trim();
    return r;
}

template <class R>
UPoly<R> scale(const UPoly<R>& a, const R& s) {
    UPoly<R> r = a;
    for (auto& x : r.c) x = x * s;
    r.trim();
    return r;
}

template <class R>
int sign_r(const UPoly<R>& p) { return p.c.empty() ? 0 : sign_r(p.lead()); }

template <class R>
UPoly<R> divexact_r(const UPoly<R>& a, const R& s) {
    UPoly<R> r = a;
    for (auto& x : r.c) x = divexact_r(x, s);
    return r;
}

// Exact division a / b with exact leading-coefficient division at each step.
// Returns false if the division is not exact.
template <class R>
bool try_divexact(const UPoly<R>& a, const UPoly<R>& b, UPoly<R>& q) {
    UPoly<R> r = a;
    q.c.clear();
    if (r.c.empty()) return true;
    if (r.deg() < b.deg()) return false;
    q.c.assign(r.deg() - b.deg() + 1, R{});
    while (!r.c.empty() && r.deg() >= b.deg()) {
        if (!divides_r(b.lead(), r.lead())) return false;
        R t = divexact_r(r.lead(), b.lead());
        int shift = r.deg() - b.deg();
        q.c[shift] = t;
        for (int i = 0; i <= b.deg(); ++i) r.c[i + shift] = r.c[i + shift] - t * b.c[i];
        r.trim();
    }
    q.trim();
    return r.c.empty();
}

template <class R>
bool divides_r(const UPoly<R>& b, const UPoly<R>& a) {
    UPoly<R> q;
    return try_divexact(a, b, q);
}

template <class R>
UPoly<R> divexact_r(const UPoly<R>& a, const UPoly<R>& b) {
    UPoly<R> q;
    try_divexact(a, b, q);
    return q;
}

template <class R>
UPoly<R> pseudo_rem(UPoly<R> a, const UPoly<R>& b) {
    while (!a.c.empty() && a.deg() >= b.deg()) {
        R la = a.lead();
        int shift = a.deg() - b.deg();
        a = scale(a, b.lead());
        for (int i = 0; i <= b.deg(); ++i) a.c[i + shift] = a.c[i + shift] - la * b.c[i];
        a.trim();
    }
    return a;
}

template <class R>
R content(const UPoly<R>& p) {
    R g{};
    bool first = true;
    for (const auto& x : p.c) {
        if (is_zero(x)) continue;
        g = first ? x : gcd_r(g, x);
        first = false;
    }
    if (!first && sign_r(g) < 0) g = -g;
    return g;
}

template <class R>
UPoly<R> primitive(const UPoly<R>& p) {
    if (p.c.empty()) return p;
    UPoly<R> r = divexact_r(p, content(p));
    if (sign_r(r) < 0) r = -r;
    return r;
}

// Primitive PRS gcd; result primitive with positive leading coefficient,
// multiplied by the gcd of the contents.
template <class R>
UPoly<R> gcd_r(const UPoly<R>& a, const UPoly<R>& b) {
    if (a.c.empty()) return b.c.empty() ? b : scale(primitive(b), content(b));
    if (b.c.empty()) return scale(primitive(a), content(a));
    R cg = gcd_r(content(a), content(b));
    UPoly<R> f = primitive(a), g = primitive(b);
    if (f.deg() < g.deg()) std::swap(f, g);
    while (!g.c.empty()) {
        UPoly<R> r = pseudo_rem(f, g);
        f = std::move(g);
        g = primitive(r);
    }
    UPoly<R> res = primitive(f);
    return scale(res, cg);
}

}  // namespace ni::detail
