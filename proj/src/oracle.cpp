#include "newton_implicit/oracle.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "json.hpp"
#include "newton_implicit/errors.hpp"
#include "newton_implicit/predictor.hpp"

namespace ni {

using json = nlohmann::json;

// ---------------------------------------------------------------------------
// ImplicitPolynomial

ImplicitPolynomial ImplicitPolynomial::normalized() const {
    ImplicitPolynomial out;
    if (terms.empty()) return out;
    Int l = 1, g = 0;
    for (const auto& [e, c] : terms) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    for (const auto& [e, c] : terms) {
        Int v = c.get_num() * (l / c.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    }
    Rat scale(l, g);
    if (terms.rbegin()->second < 0) scale = -scale;
    for (const auto& [e, c] : terms) out.terms[e] = c * scale;
    return out;
}

Rat ImplicitPolynomial::eval(const Rat& x, const Rat& y) const {
    Rat s = 0;
    for (const auto& [e, c] : terms) {
        Rat m = c;
        for (long long i = 0; i < e.first; ++i) m *= x;
        for (long long i = 0; i < e.second; ++i) m *= y;
        s += m;
    }
    return s;
}

std::string ImplicitPolynomial::to_json() const {
    json t = json::object();
    for (const auto& [e, c] : terms) t[std::to_string(e.first) + "," + std::to_string(e.second)] = c.get_str();
    return json{{"terms", t}}.dump();
}

std::string ImplicitPolynomial::to_text() const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        const auto& [e, c] = *it;
        Rat a = abs(c);
        os << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
        bool mono = e.first || e.second;
        if (a != 1 || !mono) os << a.get_str() << (mono ? "*" : "");
        if (e.first) os << "x" << (e.first > 1 ? "^" + std::to_string(e.first) : "");
        if (e.first && e.second) os << "*";
        if (e.second) os << "y" << (e.second > 1 ? "^" + std::to_string(e.second) : "");
        first = false;
    }
    return os.str();
}

ImplicitPolynomial ImplicitPolynomial::from_json(const std::string& text) {
    ImplicitPolynomial p;
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw Error(ErrorKind::Syntax, e.what());
    }
    if (!j.contains("terms") || !j["terms"].is_object()) throw Error(ErrorKind::Syntax, "missing \"terms\" object");
    for (const auto& [k, v] : j["terms"].items()) {
        auto comma = k.find(',');
        if (comma == std::string::npos) throw Error(ErrorKind::Syntax, "bad exponent key " + k);
        Rat c;
        try {
            c = Rat(v.get<std::string>());
        } catch (const std::exception&) {
            throw Error(ErrorKind::BadCoefficient, "bad coefficient for " + k);
        }
        c.canonicalize();
        if (c != 0) p.terms[{std::stoll(k.substr(0, comma)), std::stoll(k.substr(comma + 1))}] = c;
    }
    return p;
}

ImplicitPolynomial ImplicitPolynomial::from_mpoly(const MPoly& p) {
    ImplicitPolynomial out;
    for (const auto& [key, c] : p.terms()) out.terms[{p.exponent(key, 0), p.exponent(key, 1)}] = Rat(c);
    return out;
}

bool same_up_to_scale(const ImplicitPolynomial& a, const ImplicitPolynomial& b) {
    return a.normalized().terms == b.normalized().terms;
}

LatticePolygon newton_polygon(const ImplicitPolynomial& p) {
    std::vector<LatticePoint> pts;
    for (const auto& [e, c] : p.terms) pts.push_back({e.first, e.second});
    return convex_hull(pts);
}

// ---------------------------------------------------------------------------
// Exact linear algebra

Nullspace exact_nullspace(BigRationalMatrix m) {
    Nullspace out;
    if (m.empty()) return out;
    const std::size_t rows = m.size(), cols = m[0].size();
    // Rows scaled to integers, then fraction-free elimination to echelon form.
    std::vector<std::vector<Int>> a(rows, std::vector<Int>(cols));
    for (std::size_t i = 0; i < rows; ++i) {
        Int l = 1;
        for (const auto& q : m[i]) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
        for (std::size_t j = 0; j < cols; ++j) a[i][j] = m[i][j].get_num() * (l / m[i][j].get_den());
    }
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    Int prev = 1;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t best = rows;
        for (std::size_t i = r; i < rows; ++i)
            if (a[i][c] != 0 &&
                (best == rows || mpz_sizeinbase(a[i][c].get_mpz_t(), 2) < mpz_sizeinbase(a[best][c].get_mpz_t(), 2)))
                best = i;
        if (best == rows) continue;
        std::swap(a[r], a[best]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                a[i][j] = a[r][c] * a[i][j] - a[i][c] * a[r][j];
                mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        pivot_col.push_back(c);
        ++r;
    }
    out.rank = r;
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivot_col) is_pivot[c] = true;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rat> v(cols, Rat(0));
        v[f] = 1;
        for (std::size_t i = r; i-- > 0;) {
            Rat s = 0;
            for (std::size_t j = pivot_col[i] + 1; j < cols; ++j)
                if (v[j] != 0 && a[i][j] != 0) s += Rat(a[i][j]) * v[j];
            v[pivot_col[i]] = -s / Rat(a[i][pivot_col[i]]);
        }
        out.basis.push_back(std::move(v));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Sampling

namespace {

constexpr std::uint64_t kPrime = (std::uint64_t(1) << 61) - 1;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % kPrime);
}
std::uint64_t powmod(std::uint64_t a, std::uint64_t e) {
    std::uint64_t r = 1;
    for (; e; e >>= 1, a = mulmod(a, a))
        if (e & 1) r = mulmod(r, a);
    return r;
}
std::uint64_t inv_mod(std::uint64_t a) { return powmod(a, kPrime - 2); }
std::uint64_t int_mod(const Int& z) {
    Int r = z % Int(static_cast<unsigned long>(kPrime));
    if (r < 0) r += Int(static_cast<unsigned long>(kPrime));
    return r.get_ui();
}
std::uint64_t rat_mod(const Rat& q) { return mulmod(int_mod(q.get_num()), inv_mod(int_mod(q.get_den()))); }
std::uint64_t eval_mod(const SparsePoly& p, std::uint64_t t) {
    std::uint64_t s = 0;
    for (const auto& [e, c] : p) s = (s + mulmod(rat_mod(c), powmod(t, static_cast<std::uint64_t>(e)))) % kPrime;
    return s;
}

std::size_t rank_mod(std::vector<std::vector<std::uint64_t>> m) {
    std::size_t r = 0;
    if (m.empty()) return 0;
    const std::size_t cols = m[0].size();
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t p = r;
        while (p < m.size() && m[p][c] == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[r], m[p]);
        std::uint64_t inv = inv_mod(m[r][c]);
        for (std::size_t i = r + 1; i < m.size(); ++i) {
            if (!m[i][c]) continue;
            std::uint64_t f = mulmod(m[i][c], inv);
            for (std::size_t j = c; j < cols; ++j) m[i][j] = (m[i][j] + kPrime - mulmod(f, m[r][j])) % kPrime;
        }
        ++r;
    }
    return r;
}

std::vector<LatticePoint> bound_candidates(const ParametricCurve& c) {
    return lattice_points(degree_bound_polygon(degree_bounds(c)));
}

// Corank of the evaluation matrix on the candidate monomials, modulo a large prime.
std::size_t corank_mod(const ParametricCurve& c, const std::vector<LatticePoint>& cand, std::mt19937_64& rng) {
    std::vector<std::vector<std::uint64_t>> m;
    std::uniform_int_distribution<std::uint64_t> dist(1, kPrime - 1);
    long long X = 0, Y = 0;
    for (const auto& p : cand) {
        X = std::max(X, p.x);
        Y = std::max(Y, p.y);
    }
    while (m.size() < cand.size() + 5) {
        std::uint64_t t = dist(rng);
        std::uint64_t q0 = eval_mod(c.Q0, t), q1 = eval_mod(c.Q1, t);
        if (!q0 || !q1) continue;
        std::uint64_t x = mulmod(eval_mod(c.P0, t), inv_mod(q0)), y = mulmod(eval_mod(c.P1, t), inv_mod(q1));
        std::vector<std::uint64_t> xp(X + 1, 1), yp(Y + 1, 1);
        for (long long i = 1; i <= X; ++i) xp[i] = mulmod(xp[i - 1], x);
        for (long long i = 1; i <= Y; ++i) yp[i] = mulmod(yp[i - 1], y);
        std::vector<std::uint64_t> row;
        for (const auto& p : cand) row.push_back(mulmod(xp[p.x], yp[p.y]));
        m.push_back(std::move(row));
    }
    return cand.size() - rank_mod(std::move(m));
}

// Common powers of t are ignored: normalization divides them out whatever the coefficients.
bool coprime(const SparsePoly& a, const SparsePoly& b) {
    QPoly da = to_dense(a), db = to_dense(b);
    int k = std::min(a.begin()->first, b.begin()->first);
    da.erase(da.begin(), da.begin() + k);
    db.erase(db.begin(), db.begin() + k);
    return degree(qpoly_gcd(da, db)) == 0;
}

}  // namespace

ParametricCurve random_generic_coefficients(const ParametricCurve& supports, int bound, std::uint64_t seed) {
    if (bound < 1) throw Error(ErrorKind::InvariantViolation, "coefficient bound must be positive");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> dist(-bound, bound - 1);
    auto draw = [&](const SparsePoly& s) {
        SparsePoly p;
        for (const auto& [e, c] : s) {
            int v = dist(rng);
            p[e] = Rat(v >= 0 ? v + 1 : v);
        }
        return p;
    };
    constexpr int kBudget = 200;
    for (int attempt = 0; attempt < kBudget; ++attempt) {
        ParametricCurve c = supports;
        c.supports_only = false;
        c.P0 = draw(supports.P0);
        c.P1 = draw(supports.P1);
        switch (supports.cls) {
            case CurveClass::Polynomial:
                break;
            case CurveClass::SameDenominator:
                c.Q0 = draw(supports.Q0);
                c.Q1 = c.Q0;
                if (!coprime(c.P0, c.Q0) || !coprime(c.P1, c.Q0)) continue;
                break;
            case CurveClass::DifferentDenominators:
                c.Q0 = draw(supports.Q0);
                c.Q1 = draw(supports.Q1);
                if (!coprime(c.P0, c.Q0) || !coprime(c.P1, c.Q1)) continue;
                break;
        }
        ParametricCurve n = normalize(c);
        if (corank_mod(n, bound_candidates(n), rng) != 1) continue;
        return c;
    }
    throw Error(ErrorKind::ResamplingExhausted, "no generic coefficients found in " + std::to_string(kBudget) + " draws",
                kBudget);
}

std::vector<std::pair<Rat, Rat>> sample_curve_points(const ParametricCurve& c, int count, std::uint64_t seed,
                                                     int max_height) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> num(-max_height, max_height), den(1, max_height);
    std::set<Rat> used;
    std::vector<std::pair<Rat, Rat>> out;
    // Guard against a tiny height exhausting the available parameters.
    for (int guard = 0; static_cast<int>(out.size()) < count && guard < 100 * count + 1000; ++guard) {
        Rat t(num(rng), den(rng));
        t.canonicalize();
        if (!used.insert(t).second) continue;
        Rat q0 = sparse_eval(c.Q0, t), q1 = sparse_eval(c.Q1, t);
        if (q0 == 0 || q1 == 0) continue;
        out.push_back({sparse_eval(c.P0, t) / q0, sparse_eval(c.P1, t) / q1});
    }
    if (static_cast<int>(out.size()) < count) throw Error(ErrorKind::ResamplingExhausted, "not enough sample points");
    return out;
}

// ---------------------------------------------------------------------------
// Interpolation

namespace {

void check_concrete(const ParametricCurve& c) {
    if (c.supports_only) throw Error(ErrorKind::InvariantViolation, "oracle needs concrete coefficients");
}

std::vector<std::vector<Rat>> monomial_rows(const std::vector<std::pair<Rat, Rat>>& pts,
                                            const std::vector<LatticePoint>& cand) {
    long long X = 0, Y = 0;
    for (const auto& p : cand) {
        X = std::max(X, p.x);
        Y = std::max(Y, p.y);
    }
    std::vector<std::vector<Rat>> rows;
    for (const auto& [x, y] : pts) {
        std::vector<Rat> xp(X + 1, Rat(1)), yp(Y + 1, Rat(1));
        for (long long i = 1; i <= X; ++i) xp[i] = xp[i - 1] * x;
        for (long long i = 1; i <= Y; ++i) yp[i] = yp[i - 1] * y;
        std::vector<Rat> row;
        for (const auto& p : cand) row.push_back(xp[p.x] * yp[p.y]);
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

ImplicitPolynomial implicitize_interpolation(const ParametricCurve& curve, const std::vector<LatticePoint>& candidate,
                                             std::uint64_t seed) {
    check_concrete(curve);
    if (candidate.empty()) throw Error(ErrorKind::KernelDimensionNotOne, "empty candidate support", 0);
    // Small parameters keep the evaluation matrix entries short.
    auto pts = sample_curve_points(curve, static_cast<int>(candidate.size()) + 5, seed, 40);
    Nullspace ns = exact_nullspace(monomial_rows(pts, candidate));
    if (ns.basis.size() != 1)
        throw Error(ErrorKind::KernelDimensionNotOne,
                    "interpolation kernel has dimension " + std::to_string(ns.basis.size()),
                    static_cast<long long>(ns.basis.size()));
    ImplicitPolynomial phi;
    for (std::size_t i = 0; i < candidate.size(); ++i)
        if (ns.basis[0][i] != 0) phi.terms[{candidate[i].x, candidate[i].y}] = ns.basis[0][i];
    phi = phi.normalized();
    for (const auto& [x, y] : sample_curve_points(curve, 20, seed ^ 0x9e3779b97f4a7c15ULL))
        if (phi.eval(x, y) != 0)
            throw Error(ErrorKind::InvariantViolation, "interpolated polynomial fails on a held-out sample");
    return phi;
}

ImplicitPolynomial implicitize_interpolation(const ParametricCurve& c, std::uint64_t seed) {
    ParametricCurve n = normalize(c);
    return implicitize_interpolation(n, bound_candidates(n), seed);
}

bool vanishes_on_curve(const ImplicitPolynomial& phi, const ParametricCurve& curve) {
    ParametricCurve c = normalize(curve);
    long long X = 0, Y = 0;
    for (const auto& [e, v] : phi.terms) {
        X = std::max(X, e.first);
        Y = std::max(Y, e.second);
    }
    QPoly P0 = to_dense(c.P0), Q0 = to_dense(c.Q0), P1 = to_dense(c.P1), Q1 = to_dense(c.Q1);
    auto power = [](const QPoly& p, long long k) {
        QPoly r{Rat(1)};
        for (long long i = 0; i < k; ++i) r = qpoly_mul(r, p);
        return r;
    };
    QPoly sum;
    for (const auto& [e, v] : phi.terms) {
        QPoly term = qpoly_mul(qpoly_mul(power(P0, e.first), power(Q0, X - e.first)),
                               qpoly_mul(power(P1, e.second), power(Q1, Y - e.second)));
        if (sum.size() < term.size()) sum.resize(term.size(), Rat(0));
        for (std::size_t i = 0; i < term.size(); ++i) sum[i] += term[i] * v;
    }
    trim(sum);
    return sum.empty();
}

// ---------------------------------------------------------------------------
// Resultants

std::vector<std::vector<MPoly>> sylvester_matrix(const std::vector<MPoly>& f, const std::vector<MPoly>& g) {
    const int m = static_cast<int>(f.size()) - 1, n = static_cast<int>(g.size()) - 1;
    const int nv = f.empty() ? 0 : f[0].nvars();
    const int size = m + n;
    std::vector<std::vector<MPoly>> s(size, std::vector<MPoly>(size, MPoly(nv)));
    for (int r = 0; r < n; ++r)
        for (int k = 0; k <= m; ++k) s[r][r + m - k] = f[k];
    for (int r = 0; r < m; ++r)
        for (int k = 0; k <= n; ++k) s[n + r][r + n - k] = g[k];
    return s;
}

MPoly bareiss_determinant(std::vector<std::vector<MPoly>> a) {
    const std::size_t n = a.size();
    if (n == 0) return MPoly::constant(0, 1);
    const int nv = a[0][0].nvars();
    MPoly prev = MPoly::constant(nv, 1);
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k].is_zero()) {
            std::size_t p = k + 1;
            while (p < n && a[p][k].is_zero()) ++p;
            if (p == n) return MPoly(nv);
            std::swap(a[k], a[p]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) a[i][j] = divexact(a[k][k] * a[i][j] - a[i][k] * a[k][j], prev);
            a[i][k] = MPoly(nv);
        }
        prev = a[k][k];
    }
    return negate ? -a[n - 1][n - 1] : a[n - 1][n - 1];
}

namespace {

// Integer coefficient lists of x*Q - P in t over Z[x, y]; var selects x (0) or y (1).
std::vector<MPoly> implicit_factor(const SparsePoly& P, const SparsePoly& Q, int var) {
    Int l = 1;
    for (const auto* s : {&P, &Q})
        for (const auto& [e, c] : *s) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    int deg = std::max(P.rbegin()->first, Q.rbegin()->first);
    std::vector<MPoly> out(deg + 1, MPoly(2));
    MPoly v = MPoly::variable(2, var);
    for (const auto& [e, c] : Q) out[e] = out[e] + v * Int(c * l);
    for (const auto& [e, c] : P) out[e] = out[e] - MPoly::constant(2, Int(c * l));
    return out;
}

// Gcd of the coefficients of p viewed as a polynomial in variable `outer`.
MPoly univariate_content(const MPoly& p, int outer) {
    std::map<int, std::vector<MPoly::Term>> groups;
    for (const auto& [key, c] : p.terms()) {
        std::vector<int> e{p.exponent(key, 0), p.exponent(key, 1)};
        e[outer] = 0;
        groups[p.exponent(key, outer)].push_back({MPoly::pack(e, 2), c});
    }
    MPoly g(2);
    bool first = true;
    for (auto& [k, terms] : groups) {
        MPoly q = MPoly::from_terms(2, terms);
        g = first ? q : bivariate_gcd(g, q);
        first = false;
    }
    return g;
}

bool is_constant(const MPoly& p) { return p.size() == 1 && p.terms()[0].first == 0; }

using ModPoly = std::vector<std::uint64_t>;

void trim_mod(ModPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

ModPoly gcd_mod(ModPoly a, ModPoly b) {
    trim_mod(a);
    trim_mod(b);
    while (!b.empty()) {
        std::uint64_t inv = inv_mod(b.back());
        while (a.size() >= b.size()) {
            std::uint64_t q = mulmod(a.back(), inv);
            std::size_t shift = a.size() - b.size();
            for (std::size_t i = 0; i < b.size(); ++i)
                a[shift + i] = (a[shift + i] + kPrime - mulmod(q, b[i])) % kPrime;
            trim_mod(a);
        }
        std::swap(a, b);
    }
    return a;
}

// A repeated factor H with deg_x H > 0 would survive in gcd(R, dR/dx) at any y0
// where the x-leading coefficient of R does not vanish mod p, so a constant gcd
// there proves there is none.
bool no_repeated_x_factor(const MPoly& R, std::mt19937_64& rng) {
    int dx = R.degree(0);
    if (dx <= 0) return false;
    for (int attempt = 0; attempt < 3; ++attempt) {
        std::uint64_t y0 = rng() % kPrime;
        ModPoly a(dx + 1, 0);
        for (const auto& [k, c] : R.terms()) {
            int ex = R.exponent(k, 0), ey = R.exponent(k, 1);
            a[ex] = (a[ex] + mulmod(int_mod(c), powmod(y0, ey))) % kPrime;
        }
        if (a[dx] == 0) continue;
        ModPoly da(dx, 0);
        for (int i = 1; i <= dx; ++i) da[i - 1] = mulmod(a[i], i);
        if (gcd_mod(a, da).size() == 1) return true;
    }
    return false;
}

}  // namespace

ImplicitPolynomial implicitize_sylvester(const ParametricCurve& curve, std::uint64_t seed) {
    check_concrete(curve);
    ParametricCurve c = normalize(curve);
    MPoly R = bareiss_determinant(sylvester_matrix(implicit_factor(c.P0, c.Q0, 0), implicit_factor(c.P1, c.Q1, 1)));
    if (R.is_zero()) throw Error(ErrorKind::ZeroResultant, "resultant vanishes identically");
    R = R.divexact(R.content());
    // Factors in x alone or y alone cannot vanish on a curve with both coordinates non-constant.
    for (int outer : {1, 0}) {
        MPoly g = univariate_content(R, outer);
        if (!is_constant(g)) R = divexact(R, g);
    }
    std::mt19937_64 rng(seed);
    if (!no_repeated_x_factor(R, rng)) {
        MPoly g = bivariate_gcd(R, R.derivative(0));
        g = bivariate_gcd(g, R.derivative(1));
        if (!is_constant(g)) R = divexact(R, g);
    }
    R = R.normalized_sign();
    for (const auto& [x, y] : sample_curve_points(c, 10, seed))
        if (eval2(R, x, y) != 0)
            throw Error(ErrorKind::FactorSelectionAmbiguous, "square-free resultant part does not vanish on the curve");
    return ImplicitPolynomial::from_mpoly(R).normalized();
}

SymbolicResultant symbolic_sylvester(const SameDenomData& d) {
    SymbolicResultant out;
    int next = 3;
    for (int i = 0; i < 3; ++i)
        for (std::size_t p = 0; p < d.B[i].size(); ++p) out.coeff_vars[i].push_back(next++);
    if (next > MPoly::kMaxVars) throw Error(ErrorKind::CapExceeded, "too many symbolic coefficients", next);
    const int nv = next;
    int deg = std::max({d.bR[0], d.bR[1], d.bR[2]});
    std::vector<MPoly> f(deg + 1, MPoly(nv)), g(deg + 1, MPoly(nv));
    MPoly x0 = MPoly::variable(nv, 0), x1 = MPoly::variable(nv, 1), x2 = MPoly::variable(nv, 2);
    for (std::size_t p = 0; p < d.B[2].size(); ++p) {
        MPoly q = MPoly::variable(nv, out.coeff_vars[2][p]);
        f[d.B[2][p]] = f[d.B[2][p]] + x0 * q;
        g[d.B[2][p]] = g[d.B[2][p]] + x1 * q;
    }
    for (std::size_t p = 0; p < d.B[0].size(); ++p) f[d.B[0][p]] = f[d.B[0][p]] - x2 * MPoly::variable(nv, out.coeff_vars[0][p]);
    for (std::size_t p = 0; p < d.B[1].size(); ++p) g[d.B[1][p]] = g[d.B[1][p]] - x2 * MPoly::variable(nv, out.coeff_vars[1][p]);
    auto trim_top = [](std::vector<MPoly>& v) {
        while (v.size() > 1 && v.back().is_zero()) v.pop_back();
    };
    trim_top(f);
    trim_top(g);
    out.poly = bareiss_determinant(sylvester_matrix(f, g));
    return out;
}

std::array<long long, 3> omega_extreme_exponent(const SymbolicResultant& r, const Lifting& w) {
    if (r.poly.is_zero()) throw Error(ErrorKind::ZeroResultant, "symbolic resultant is zero");
    std::vector<__int128> weight(r.poly.nvars(), 0);
    for (int i = 0; i < 3; ++i) {
        weight[i] = w.values[i][0];
        for (std::size_t p = 0; p < r.coeff_vars[i].size(); ++p) weight[r.coeff_vars[i][p]] = w.values[i][p + 1];
    }
    __int128 best = 0;
    std::uint64_t arg = 0;
    bool tie = false, first = true;
    for (const auto& [key, c] : r.poly.terms()) {
        __int128 s = 0;
        for (int v = 0; v < r.poly.nvars(); ++v) s += weight[v] * r.poly.exponent(key, v);
        if (first || s < best) {
            best = s;
            arg = key;
            tie = false;
            first = false;
        } else if (s == best) {
            tie = true;
        }
    }
    if (tie) throw Error(ErrorKind::NonGenericLifting, "several resultant monomials share the minimal weight");
    return {r.poly.exponent(arg, 0), r.poly.exponent(arg, 1), r.poly.exponent(arg, 2)};
}

}  // namespace ni
