#include "newton_implicit/subdivisions.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "newton_implicit/errors.hpp"

namespace ni {

// ---------------------------------------------------------------------------
// Staircases

std::vector<CayleyTriangle> Staircase::triangles(const Support& A0, const Support& A1) const {
    std::vector<CayleyTriangle> out;
    for (std::size_t s = 0; s + 1 < path.size(); ++s) {
        auto [i, j] = path[s];
        auto [i2, j2] = path[s + 1];
        CayleyTriangle t;
        if (i2 != i) {
            t.base_in_A0 = true;
            t.apex = j;
            t.base_lo = i;
            t.base_hi = i2;
            t.volume = A0[i2] - A0[i];
        } else {
            t.base_in_A0 = false;
            t.apex = i;
            t.base_lo = j;
            t.base_hi = j2;
            t.volume = A1[j2] - A1[j];
        }
        out.push_back(t);
    }
    return out;
}

namespace {

std::uint64_t binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) { return a + b < a ? UINT64_MAX : a + b; }
std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
    if (a && b > UINT64_MAX / a) return UINT64_MAX;
    return a * b;
}

}  // namespace

std::uint64_t count_staircases(std::size_t size0, std::size_t size1) {
    if (size0 == 0 || size1 == 0) return 0;
    int n = static_cast<int>(size0) - 1, m = static_cast<int>(size1) - 1;
    std::uint64_t total = 0;
    // k0, k1 = interior points used; s0, s1 = steps along each support.
    for (int k0 = 0; k0 <= std::max(n - 1, 0); ++k0) {
        for (int k1 = 0; k1 <= std::max(m - 1, 0); ++k1) {
            int s0 = n == 0 ? 0 : k0 + 1, s1 = m == 0 ? 0 : k1 + 1;
            std::uint64_t c = sat_mul(sat_mul(n ? binom(n - 1, k0) : 1, m ? binom(m - 1, k1) : 1), binom(s0 + s1, s0));
            total = sat_add(total, c);
        }
    }
    return total;
}

void enumerate_staircases(const Support& A0, const Support& A1, const std::function<bool(const Staircase&)>& visit,
                          int cap) {
    if (A0.empty() || A1.empty()) throw Error(ErrorKind::InvariantViolation, "empty support");
    int n = static_cast<int>(A0.size()) - 1, m = static_cast<int>(A1.size()) - 1;
    if (n + m > cap) {
        auto c = count_staircases(A0.size(), A1.size());
        throw Error(ErrorKind::CapExceeded,
                    "enumeration would generate " + std::to_string(c) + " staircases (n+m=" + std::to_string(n + m) +
                        " > " + std::to_string(cap) + ")",
                    static_cast<long long>(std::min<std::uint64_t>(c, INT64_MAX)));
    }
    Staircase s;
    s.path.push_back({0, 0});
    bool stop = false;
    std::function<void(int, int)> rec = [&](int i, int j) {
        if (stop) return;
        if (i == n && j == m) {
            if (!visit(s)) stop = true;
            return;
        }
        for (int j2 = j + 1; j2 <= m && !stop; ++j2) {
            s.path.push_back({i, j2});
            rec(i, j2);
            s.path.pop_back();
        }
        for (int i2 = i + 1; i2 <= n && !stop; ++i2) {
            s.path.push_back({i2, j});
            rec(i2, j);
            s.path.pop_back();
        }
    };
    rec(0, 0);
}

LatticePoint exponents_from_staircase(const Staircase& s, const Support& A0, const Support& A1,
                                      const std::vector<bool>& selX, const std::vector<bool>& selY) {
    LatticePoint e;
    for (const auto& t : s.triangles(A0, A1)) {
        if (t.base_in_A0) {
            if (selY[t.apex]) e.y += t.volume;
        } else {
            if (selX[t.apex]) e.x += t.volume;
        }
    }
    return e;
}

LatticePoint exponents_from_staircase(const Staircase& s, const Selection& sel) {
    return exponents_from_staircase(s, sel.A0, sel.A1, sel.selected[0], sel.selected[1]);
}

std::vector<LatticePoint> reachable_exponents(const Support& A0, const Support& A1, const std::vector<bool>& selX,
                                              const std::vector<bool>& selY) {
    int n = static_cast<int>(A0.size()) - 1, m = static_cast<int>(A1.size()) - 1;
    long long X = A1.back() - A1.front(), Y = A0.back() - A0.front();
    std::size_t W = static_cast<std::size_t>(Y + 1);
    auto idx = [W](long long x, long long y) { return static_cast<std::size_t>(x) * W + static_cast<std::size_t>(y); };
    std::vector<std::vector<std::vector<char>>> R(n + 1, std::vector<std::vector<char>>(m + 1));
    for (auto& row : R)
        for (auto& cell : row) cell.assign(static_cast<std::size_t>(X + 1) * W, 0);
    R[0][0][idx(0, 0)] = 1;
    for (int i = 0; i <= n; ++i) {
        for (int j = 0; j <= m; ++j) {
            const auto& cur = R[i][j];
            for (long long x = 0; x <= X; ++x) {
                for (long long y = 0; y <= Y; ++y) {
                    if (!cur[idx(x, y)]) continue;
                    for (int j2 = j + 1; j2 <= m; ++j2) {
                        long long dx = selX[i] ? A1[j2] - A1[j] : 0;
                        R[i][j2][idx(x + dx, y)] = 1;
                    }
                    for (int i2 = i + 1; i2 <= n; ++i2) {
                        long long dy = selY[j] ? A0[i2] - A0[i] : 0;
                        R[i2][j][idx(x, y + dy)] = 1;
                    }
                }
            }
        }
    }
    std::vector<LatticePoint> out;
    const auto& fin = R[n][m];
    for (long long x = 0; x <= X; ++x)
        for (long long y = 0; y <= Y; ++y)
            if (fin[idx(x, y)]) out.push_back({x, y});
    return out;
}

MonotoneChain hull_of_exponents(const Support& A0, const Support& A1, const Selection& sel, ChainRole role) {
    std::vector<LatticePoint> pts;
    if (!sel.any_selected(0) && !sel.any_selected(1)) {
        // Nothing selected: every staircase gives the constant term.
        pts = {{0, 0}};
    } else {
        pts = reachable_exponents(A0, A1, sel.selected[0], sel.selected[1]);
    }
    return role == ChainRole::UpperHull ? upper_chain(pts) : lower_chain(pts);
}

LatticePolygon corner_hull(const Selection& sel1, const Selection& sel2) {
    std::vector<LatticePoint> all;
    for (const Selection* sx : {&sel1, &sel2}) {
        for (const Selection* sy : {&sel1, &sel2}) {
            auto pts = reachable_exponents(sel1.A0, sel1.A1, sx->selected[0], sy->selected[1]);
            all.insert(all.end(), pts.begin(), pts.end());
        }
    }
    return convex_hull(all);
}

// ---------------------------------------------------------------------------
// Lifting subdivisions

const char* cell_kind_name(CellKind k) {
    switch (k) {
        case CellKind::MixedTypeI: return "mixed_type_I";
        case CellKind::MixedTypeII: return "mixed_type_II";
        case CellKind::MixedOther: return "mixed_other";
        case CellKind::Unmixed: return "unmixed";
    }
    return "?";
}

std::array<std::vector<LatticePoint>, 3> lifting_supports(const SameDenomData& d) {
    std::array<std::vector<LatticePoint>, 3> pts;
    for (int i = 0; i < 3; ++i) {
        pts[i].push_back({0, 1});
        for (int b : d.B[i]) pts[i].push_back({b, 0});
    }
    return pts;
}

namespace {

using i128 = __int128;

// Supporting direction (gx, gy) / den with den > 0.
struct Direction {
    i128 gx, gy, den;
};

int affine_dim(const std::vector<LatticePoint>& pts, const std::vector<int>& ids) {
    if (ids.size() <= 1) return 0;
    const auto& o = pts[ids[0]];
    std::size_t k = 1;
    while (k < ids.size() && pts[ids[k]] == o) ++k;
    if (k == ids.size()) return 0;
    for (std::size_t t = k + 1; t < ids.size(); ++t)
        if (cross(o, pts[ids[k]], pts[ids[t]]) != 0) return 2;
    return 1;
}

struct Certifier {
    const std::array<std::vector<LatticePoint>, 3>& pts;
    const Lifting& w;

    i128 value(int s, int p, const Direction& g) const {
        return g.den * static_cast<i128>(w.values[s][p]) + g.gx * pts[s][p].x + g.gy * pts[s][p].y;
    }

    std::array<std::vector<int>, 3> faces(const Direction& g) const {
        std::array<std::vector<int>, 3> F;
        for (int s = 0; s < 3; ++s) {
            i128 best = 0;
            for (int p = 0; p < static_cast<int>(pts[s].size()); ++p) {
                i128 v = value(s, p, g);
                if (F[s].empty() || v < best) {
                    best = v;
                    F[s] = {p};
                } else if (v == best) {
                    F[s].push_back(p);
                }
            }
        }
        return F;
    }

    // Solve g . d1 = r1, g . d2 = r2.
    static bool solve(const LatticePoint& d1, i128 r1, const LatticePoint& d2, i128 r2, Direction& g) {
        i128 det = static_cast<i128>(d1.x) * d2.y - static_cast<i128>(d1.y) * d2.x;
        if (det == 0) return false;
        g.gx = r1 * d2.y - r2 * d1.y;
        g.gy = static_cast<i128>(d1.x) * r2 - static_cast<i128>(d2.x) * r1;
        g.den = det;
        if (det < 0) {
            g.gx = -g.gx;
            g.gy = -g.gy;
            g.den = -g.den;
        }
        return true;
    }
};

bool has(const std::vector<int>& v, int x) { return std::find(v.begin(), v.end(), x) != v.end(); }

// Extreme points of a collinear face.
std::pair<LatticePoint, LatticePoint> extent(const std::vector<LatticePoint>& pts, const std::vector<int>& ids) {
    LatticePoint lo = pts[ids[0]], hi = lo;
    for (int p : ids) {
        lo = std::min(lo, pts[p]);
        hi = std::max(hi, pts[p]);
    }
    return {lo, hi};
}

}  // namespace

MixedSubdivision subdivision_from_lifting(const SameDenomData& d, const Lifting& w) {
    MixedSubdivision sub;
    sub.points = lifting_supports(d);
    sub.u = d.u;
    const auto& pts = sub.points;
    for (int s = 0; s < 3; ++s)
        if (w.values[s].size() != pts[s].size()) throw Error(ErrorKind::InvariantViolation, "lifting size mismatch");
    Certifier cert{pts, w};
    std::set<std::array<std::vector<int>, 3>> seen;

    auto record = [&](const std::array<std::vector<int>, 3>& F) {
        int dims[3], total = 0;
        for (int s = 0; s < 3; ++s) total += dims[s] = affine_dim(pts[s], F[s]);
        if (total > 2) throw Error(ErrorKind::NonGenericLifting, "lifting induces a non-tight cell");
        if (total < 2 || !seen.insert(F).second) return;
        MixedCell c;
        c.faces = F;
        int two = -1;
        for (int s = 0; s < 3; ++s)
            if (dims[s] == 2) two = s;
        if (two >= 0) {
            std::vector<LatticePoint> face;
            for (int p : F[two]) face.push_back(pts[two][p]);
            c.kind = CellKind::Unmixed;
            c.double_area = double_area(convex_hull(face));
        } else {
            int v = dims[0] == 0 ? 0 : dims[1] == 0 ? 1 : 2;
            int a = (v + 1) % 3, b = (v + 2) % 3;
            auto [a0, a1] = extent(pts[a], F[a]);
            auto [b0, b1] = extent(pts[b], F[b]);
            long long det = (a1.x - a0.x) * (b1.y - b0.y) - (a1.y - a0.y) * (b1.x - b0.x);
            c.vertex_support = v;
            c.double_area = 2 * std::abs(det);
            if (F[v][0] != 0) {
                c.kind = CellKind::MixedOther;
            } else {
                int through_r = has(F[a], 0) + has(F[b], 0);
                c.kind = through_r == 2 ? CellKind::MixedTypeI : CellKind::MixedTypeII;
            }
        }
        sub.cells.push_back(std::move(c));
    };

    auto lift = [&](int s, int p) { return static_cast<i128>(w.values[s][p]); };
    auto diff = [](const LatticePoint& a, const LatticePoint& b) { return LatticePoint{a.x - b.x, a.y - b.y}; };

    // Mixed candidates: an edge of support a and an edge of support b.
    for (int a = 0; a < 3; ++a) {
        for (int b = a + 1; b < 3; ++b) {
            int na = static_cast<int>(pts[a].size()), nb = static_cast<int>(pts[b].size());
            for (int p = 0; p < na; ++p)
                for (int q = p + 1; q < na; ++q)
                    for (int r = 0; r < nb; ++r)
                        for (int s = r + 1; s < nb; ++s) {
                            Direction g;
                            if (!Certifier::solve(diff(pts[a][q], pts[a][p]), lift(a, p) - lift(a, q),
                                                  diff(pts[b][s], pts[b][r]), lift(b, r) - lift(b, s), g))
                                continue;
                            auto F = cert.faces(g);
                            if (!has(F[a], p) || !has(F[a], q) || !has(F[b], r) || !has(F[b], s)) continue;
                            record(F);
                        }
        }
    }
    // Unmixed candidates: a triangle of one support.
    for (int a = 0; a < 3; ++a) {
        int na = static_cast<int>(pts[a].size());
        for (int p = 0; p < na; ++p)
            for (int q = p + 1; q < na; ++q)
                for (int r = q + 1; r < na; ++r) {
                    Direction g;
                    if (!Certifier::solve(diff(pts[a][q], pts[a][p]), lift(a, p) - lift(a, q), diff(pts[a][r], pts[a][p]),
                                          lift(a, p) - lift(a, r), g))
                        continue;
                    auto F = cert.faces(g);
                    if (!has(F[a], p) || !has(F[a], q) || !has(F[a], r)) continue;
                    record(F);
                }
    }

    std::vector<LatticePoint> sum;
    for (const auto& p0 : pts[0])
        for (const auto& p1 : pts[1])
            for (const auto& p2 : pts[2]) sum.push_back({p0.x + p1.x + p2.x, p0.y + p1.y + p2.y});
    long long want = double_area(convex_hull(sum)), got = 0;
    for (const auto& c : sub.cells) got += c.double_area;
    if (got != want)
        throw Error(ErrorKind::NonGenericLifting,
                    "cells cover area " + std::to_string(got) + "/2 of " + std::to_string(want) + "/2");
    return sub;
}

std::array<long long, 3> exponent_from_subdivision(const MixedSubdivision& s) {
    std::array<long long, 3> e{0, 0, 0};
    for (const auto& c : s.cells)
        if (c.vertex_support >= 0 && c.faces[c.vertex_support][0] == 0) e[c.vertex_support] += c.double_area / 2;
    if (e[0] + e[1] + e[2] != s.u)
        throw Error(ErrorKind::DegreeInvariantViolated,
                    "exponents sum to " + std::to_string(e[0] + e[1] + e[2]) + ", expected " + std::to_string(s.u));
    return e;
}

namespace {

constexpr long long kScale = 1000000;

std::vector<long long> perturb(const std::vector<long long>& v, std::mt19937_64& rng) {
    std::uniform_int_distribution<long long> jitter(-500, 500);
    std::vector<long long> out;
    for (long long x : v) out.push_back(x * kScale + jitter(rng));
    return out;
}

}  // namespace

LiftingHull sample_lifting_hull(const SameDenomData& d, int trials, std::uint64_t seed, bool structured) {
    LiftingHull out;
    std::mt19937_64 rng(seed);
    std::map<LatticePoint, Lifting> found;

    // Returns false when no perturbation of w is tight.
    auto run = [&](Lifting w, bool is_random) {
        for (int attempt = 0; attempt < 6; ++attempt) {
            try {
                auto e = exponent_from_subdivision(subdivision_from_lifting(d, w));
                LatticePoint p{e[0], e[1]};
                found.emplace(p, w);
                if (is_random) out.random_points.push_back(p);
                return true;
            } catch (const Error& err) {
                if (err.kind() != ErrorKind::NonGenericLifting) throw;
                for (auto& v : w.values) v = perturb(v, rng);
            }
        }
        return false;
    };

    if (structured) {
        // Relative slopes and r-offsets of supports 0 and 1 against support 2;
        // interior points are raised so only segment endpoints carry faces.
        std::uniform_int_distribution<long long> jitter(-1000, 1000);
        for (int s0 = -3; s0 <= 3; ++s0)
            for (int s1 = -3; s1 <= 3; ++s1)
                for (int r0 = -3; r0 <= 3; ++r0)
                    for (int r1 = -3; r1 <= 3; ++r1) {
                        int slope[3] = {s0, s1, 0}, off[3] = {r0, r1, 0};
                        Lifting w;
                        for (int i = 0; i < 3; ++i) {
                            w.values[i].push_back(off[i] * kScale + jitter(rng));
                            for (int b : d.B[i]) {
                                long long bump = static_cast<long long>(b - d.bL[i]) * (d.bR[i] - b);
                                long long v = slope[i] * b * kScale + bump * kScale;
                                if (bump == 0) v += jitter(rng);
                                w.values[i].push_back(v);
                            }
                        }
                        if (run(w, false)) ++out.structured;
                    }
    }

    std::uniform_int_distribution<long long> uni(-10000, 10000);
    for (int t = 0; t < trials; ++t) {
        Lifting w;
        for (int i = 0; i < 3; ++i)
            for (std::size_t p = 0; p <= d.B[i].size(); ++p) w.values[i].push_back(uni(rng));
        if (run(w, true)) ++out.random;
    }

    std::vector<LatticePoint> pts;
    for (const auto& [p, w] : found) {
        pts.push_back(p);
        out.realized.push_back({p, w});
    }
    out.polygon = convex_hull(pts);
    for (const auto& v : out.polygon.vertices) out.witnesses.push_back({v, found.at(v)});
    return out;
}

}  // namespace ni
