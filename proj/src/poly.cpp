#include "newton_implicit/poly.hpp"

#include <algorithm>
#include <sstream>

#include "newton_implicit/errors.hpp"
#include "upoly.hpp"

namespace ni {

QPoly to_dense(const SparsePoly& p) {
    QPoly r;
    for (const auto& [e, c] : p) {
        if (e < 0) throw Error(ErrorKind::InvariantViolation, "negative exponent in dense conversion");
        if (static_cast<int>(r.size()) <= e) r.resize(e + 1);
        r[e] = c;
    }
    trim(r);
    return r;
}

SparsePoly to_sparse(const QPoly& p) {
    SparsePoly r;
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] != 0) r[static_cast<int>(i)] = p[i];
    return r;
}

void trim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

int degree(const QPoly& p) { return static_cast<int>(p.size()) - 1; }

QPoly qpoly_mul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly r(a.size() + b.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

std::pair<QPoly, QPoly> qpoly_divmod(const QPoly& a, const QPoly& b) {
    if (b.empty()) throw Error(ErrorKind::InvariantViolation, "division by zero polynomial");
    QPoly r = a, q;
    trim(r);
    if (degree(r) < degree(b)) return {q, r};
    q.assign(r.size() - b.size() + 1, Rat(0));
    while (!r.empty() && degree(r) >= degree(b)) {
        int shift = degree(r) - degree(b);
        Rat t = r.back() / b.back();
        q[shift] = t;
        for (std::size_t i = 0; i < b.size(); ++i) r[i + shift] -= t * b[i];
        trim(r);
    }
    trim(q);
    return {q, r};
}

QPoly qpoly_gcd(QPoly a, QPoly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        QPoly r = qpoly_divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        Rat lc = a.back();
        for (auto& c : a) c /= lc;
    }
    return a;
}

Rat qpoly_eval(const QPoly& p, const Rat& t) {
    Rat r = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) r = r * t + *it;
    return r;
}

Rat sparse_eval(const SparsePoly& p, const Rat& t) {
    Rat r = 0;
    for (const auto& [e, c] : p) {
        Rat pw = 1;
        mpz_pow_ui(pw.get_num_mpz_t(), t.get_num_mpz_t(), std::abs(e));
        mpz_pow_ui(pw.get_den_mpz_t(), t.get_den_mpz_t(), std::abs(e));
        if (e < 0) pw = 1 / pw;
        pw.canonicalize();
        r += c * pw;
    }
    return r;
}

// ---------------------------------------------------------------------------

MPoly MPoly::constant(int nvars, const Int& c) {
    MPoly p(nvars);
    if (c != 0) p.terms_.emplace_back(0, c);
    return p;
}

MPoly MPoly::variable(int nvars, int v) {
    std::vector<int> e(nvars, 0);
    e[v] = 1;
    return monomial(nvars, e, 1);
}

MPoly MPoly::monomial(int nvars, const std::vector<int>& exps, const Int& c) {
    MPoly p(nvars);
    if (c != 0) p.terms_.emplace_back(pack(exps, nvars), c);
    return p;
}

std::uint64_t MPoly::pack(const std::vector<int>& exps, int nvars) {
    if (static_cast<int>(exps.size()) > nvars || nvars > kMaxVars)
        throw Error(ErrorKind::InvariantViolation, "too many variables to pack");
    std::uint64_t k = 0;
    for (std::size_t v = 0; v < exps.size(); ++v) {
        if (exps[v] < 0 || exps[v] > max_exp(nvars))
            throw Error(ErrorKind::InvariantViolation, "exponent out of packing range");
        k |= static_cast<std::uint64_t>(exps[v]) << ((nvars - 1 - static_cast<int>(v)) * bits(nvars));
    }
    return k;
}

int MPoly::exponent(std::uint64_t key, int v, int nvars) {
    return static_cast<int>((key >> ((nvars - 1 - v) * bits(nvars))) & static_cast<std::uint64_t>(max_exp(nvars)));
}

std::vector<int> MPoly::unpack(std::uint64_t key) const {
    std::vector<int> e(nvars_);
    for (int v = 0; v < nvars_; ++v) e[v] = exponent(key, v);
    return e;
}

int MPoly::degree(int v) const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, exponent(t.first, v));
    return d;
}

Int MPoly::content() const {
    Int g = 0;
    for (const auto& t : terms_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.second.get_mpz_t());
    return g;
}

Int MPoly::coeff(const std::vector<int>& exps) const {
    std::uint64_t k = pack(exps, nvars_);
    for (const auto& t : terms_)
        if (t.first == k) return t.second;
    return 0;
}

MPoly MPoly::from_terms(int nvars, std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.first > b.first; });
    MPoly p(nvars);
    for (auto& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().first == t.first)
            p.terms_.back().second += t.second;
        else
            p.terms_.push_back(std::move(t));
        if (p.terms_.back().second == 0) p.terms_.pop_back();
    }
    return p;
}

namespace {

// Keys of different variable counts use different layouts; only constants mix.
int common_nvars(const MPoly& a, const MPoly& b) {
    auto constant = [](const MPoly& p) { return p.is_zero() || (p.size() == 1 && p.terms()[0].first == 0); };
    if (a.nvars() != b.nvars() && !constant(a) && !constant(b))
        throw Error(ErrorKind::InvariantViolation, "polynomials over different variable counts");
    return std::max(a.nvars(), b.nvars());
}

}  // namespace

MPoly MPoly::operator+(const MPoly& o) const {
    MPoly r(common_nvars(*this, o));
    auto i = terms_.begin(), j = o.terms_.begin();
    while (i != terms_.end() || j != o.terms_.end()) {
        if (j == o.terms_.end() || (i != terms_.end() && i->first > j->first)) {
            r.terms_.push_back(*i++);
        } else if (i == terms_.end() || j->first > i->first) {
            r.terms_.push_back(*j++);
        } else {
            Int s = i->second + j->second;
            if (s != 0) r.terms_.emplace_back(i->first, std::move(s));
            ++i;
            ++j;
        }
    }
    return r;
}

MPoly MPoly::operator-() const {
    MPoly r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
}

MPoly MPoly::operator-(const MPoly& o) const { return *this + (-o); }

MPoly MPoly::operator*(const Int& c) const {
    if (c == 0) return MPoly(nvars_);
    MPoly r = *this;
    for (auto& t : r.terms_) t.second *= c;
    return r;
}

MPoly MPoly::operator*(const MPoly& o) const {
    int nv = common_nvars(*this, o);
    if (is_zero() || o.is_zero()) return MPoly(nv);
    for (int v = 0; v < nv; ++v)
        if (degree(v) + o.degree(v) > max_exp(nv)) throw Error(ErrorKind::InvariantViolation, "exponent overflow in product");
    std::vector<Term> prod;
    prod.reserve(terms_.size() * o.terms_.size());
    for (const auto& a : terms_)
        for (const auto& b : o.terms_) prod.emplace_back(a.first + b.first, a.second * b.second);
    return from_terms(nv, std::move(prod));
}

MPoly divexact(const MPoly& a, const MPoly& b) {
    if (b.is_zero()) throw Error(ErrorKind::InvariantViolation, "division by zero polynomial");
    int nv = common_nvars(a, b);
    std::map<std::uint64_t, Int, std::greater<>> rem;
    for (const auto& t : a.terms_) rem.emplace(t.first, t.second);
    const auto& lead = b.terms_.front();
    std::vector<MPoly::Term> q;
    while (!rem.empty()) {
        auto it = rem.begin();
        std::uint64_t k = it->first;
        for (int v = 0; v < nv; ++v)
            if (MPoly::exponent(k, v, nv) < MPoly::exponent(lead.first, v, nv))
                throw Error(ErrorKind::InvariantViolation, "inexact polynomial division");
        if (!mpz_divisible_p(it->second.get_mpz_t(), lead.second.get_mpz_t()))
            throw Error(ErrorKind::InvariantViolation, "inexact polynomial division");
        std::uint64_t qk = k - lead.first;
        Int qc;
        mpz_divexact(qc.get_mpz_t(), it->second.get_mpz_t(), lead.second.get_mpz_t());
        for (const auto& t : b.terms_) {
            auto& slot = rem[qk + t.first];
            slot -= qc * t.second;
            if (slot == 0) rem.erase(qk + t.first);
        }
        q.emplace_back(qk, std::move(qc));
    }
    return MPoly::from_terms(nv, std::move(q));
}

MPoly MPoly::divexact(const Int& c) const {
    MPoly r = *this;
    for (auto& t : r.terms_) mpz_divexact(t.second.get_mpz_t(), t.second.get_mpz_t(), c.get_mpz_t());
    return r;
}

MPoly MPoly::derivative(int v) const {
    std::vector<Term> out;
    std::uint64_t unit = std::uint64_t(1) << ((nvars_ - 1 - v) * bits(nvars_));
    for (const auto& t : terms_) {
        int e = exponent(t.first, v);
        if (e > 0) out.emplace_back(t.first - unit, t.second * e);
    }
    return from_terms(nvars_, std::move(out));
}

MPoly MPoly::normalized_sign() const {
    if (!terms_.empty() && terms_.front().second < 0) return -*this;
    return *this;
}

// ---------------------------------------------------------------------------

namespace {

using detail::UPoly;
using ZX = UPoly<Int>;
using ZXY = UPoly<ZX>;

ZXY to_zxy(const MPoly& p) {
    ZXY r;
    for (const auto& [k, c] : p.terms()) {
        int ex = p.exponent(k, 0), ey = p.exponent(k, 1);
        if (static_cast<int>(r.c.size()) <= ey) r.c.resize(ey + 1);
        if (static_cast<int>(r.c[ey].c.size()) <= ex) r.c[ey].c.resize(ex + 1);
        r.c[ey].c[ex] = c;
    }
    for (auto& cx : r.c) cx.trim();
    r.trim();
    return r;
}

MPoly from_zxy(const ZXY& p) {
    std::vector<MPoly::Term> t;
    for (std::size_t ey = 0; ey < p.c.size(); ++ey)
        for (std::size_t ex = 0; ex < p.c[ey].c.size(); ++ex)
            if (p.c[ey].c[ex] != 0)
                t.emplace_back(MPoly::pack({static_cast<int>(ex), static_cast<int>(ey)}, 2), p.c[ey].c[ex]);
    return MPoly::from_terms(2, std::move(t));
}

}  // namespace

MPoly bivariate_gcd(const MPoly& a, const MPoly& b) {
    ZXY g = detail::gcd_r(to_zxy(a), to_zxy(b));
    MPoly r = from_zxy(g);
    if (r.is_zero()) return r;
    return r.divexact(r.content()).normalized_sign();
}

Rat eval2(const MPoly& p, const Rat& x, const Rat& y) {
    int dx = std::max(0, p.degree(0)), dy = std::max(0, p.degree(1));
    std::vector<Rat> px(dx + 1), py(dy + 1);
    px[0] = 1;
    py[0] = 1;
    for (int i = 1; i <= dx; ++i) px[i] = px[i - 1] * x;
    for (int i = 1; i <= dy; ++i) py[i] = py[i - 1] * y;
    Rat s = 0;
    for (const auto& [k, c] : p.terms()) s += Rat(c) * px[p.exponent(k, 0)] * py[p.exponent(k, 1)];
    return s;
}

std::string to_string(const MPoly& p, const std::vector<std::string>& names) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : p.terms()) {
        Int a = abs(c);
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        first = false;
        bool any = false;
        std::ostringstream mono;
        for (int v = 0; v < p.nvars(); ++v) {
            int e = p.exponent(k, v);
            if (e == 0) continue;
            if (any) mono << "*";
            mono << names.at(v);
            if (e > 1) mono << "^" << e;
            any = true;
        }
        if (!any)
            os << a.get_str();
        else if (a == 1)
            os << mono.str();
        else
            os << a.get_str() << "*" << mono.str();
    }
    return os.str();
}

}  // namespace ni
