#include "newton_implicit/curves.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "newton_implicit/errors.hpp"

namespace ni {

using json = nlohmann::json;

const char* class_name(CurveClass c) {
    switch (c) {
        case CurveClass::Polynomial: return "polynomial";
        case CurveClass::SameDenominator: return "same_denominator";
        case CurveClass::DifferentDenominators: return "different_denominators";
    }
    return "?";
}

CurveClass class_from_name(const std::string& s) {
    if (s == "polynomial") return CurveClass::Polynomial;
    if (s == "same_denominator") return CurveClass::SameDenominator;
    if (s == "different_denominators") return CurveClass::DifferentDenominators;
    throw Error(ErrorKind::Syntax, "unknown curve class '" + s + "'");
}

const char* case_name(CaseTag t) {
    switch (t) {
        case CaseTag::None: return "none";
        case CaseTag::A1: return "1A";
        case CaseTag::A2: return "2A";
        case CaseTag::B2: return "2B";
        case CaseTag::B3: return "3B";
    }
    return "?";
}

Support support_of(const SparsePoly& p) {
    Support s;
    for (const auto& [e, c] : p) s.push_back(e);
    return s;
}

Support support_union(const Support& a, const Support& b) {
    Support r;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return r;
}

bool operator==(const ParametricCurve& a, const ParametricCurve& b) {
    return a.cls == b.cls && a.P0 == b.P0 && a.P1 == b.P1 && a.Q0 == b.Q0 && a.Q1 == b.Q1 &&
           a.supports_only == b.supports_only;
}

// ---------------------------------------------------------------------------
// Laurent polynomial helpers

namespace {

SparsePoly add(const SparsePoly& a, const SparsePoly& b) {
    SparsePoly r = a;
    for (const auto& [e, c] : b) {
        Rat s = r[e] + c;
        if (s == 0)
            r.erase(e);
        else
            r[e] = s;
    }
    return r;
}

SparsePoly neg(const SparsePoly& a) {
    SparsePoly r;
    for (const auto& [e, c] : a) r[e] = -c;
    return r;
}

SparsePoly mul(const SparsePoly& a, const SparsePoly& b) {
    SparsePoly r;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) r[ea + eb] += ca * cb;
    for (auto it = r.begin(); it != r.end();) it = it->second == 0 ? r.erase(it) : std::next(it);
    return r;
}

SparsePoly shift(const SparsePoly& a, int s) {
    SparsePoly r;
    for (const auto& [e, c] : a) r[e + s] = c;
    return r;
}

SparsePoly scale(const SparsePoly& a, const Rat& k) {
    SparsePoly r;
    for (const auto& [e, c] : a) r[e] = c * k;
    return r;
}

SparsePoly one() { return SparsePoly{{0, Rat(1)}}; }

bool is_constant(const SparsePoly& p) { return p.size() == 1 && p.begin()->first == 0; }

// ---------------------------------------------------------------------------
// Shorthand parser: rational expressions in t with integer/fraction literals.

struct Frac {
    SparsePoly num, den;
};

Frac reduce_constant_den(Frac f) {
    if (f.den.empty()) throw Error(ErrorKind::ZeroPolynomial, "division by zero");
    if (is_constant(f.den)) {
        f.num = scale(f.num, 1 / f.den.begin()->second);
        f.den = one();
    }
    return f;
}

Frac fadd(const Frac& a, const Frac& b) {
    if (a.den == b.den) return {add(a.num, b.num), a.den};
    return reduce_constant_den({add(mul(a.num, b.den), mul(b.num, a.den)), mul(a.den, b.den)});
}

Frac fmul(const Frac& a, const Frac& b) { return reduce_constant_den({mul(a.num, b.num), mul(a.den, b.den)}); }

Frac fdiv(const Frac& a, const Frac& b) {
    if (b.num.empty()) throw Error(ErrorKind::ZeroPolynomial, "division by zero polynomial");
    return reduce_constant_den({mul(a.num, b.den), mul(a.den, b.num)});
}

Frac fpow(const Frac& a, int k) {
    Frac r{one(), one()};
    Frac base = a;
    if (k < 0) {
        if (a.num.empty()) throw Error(ErrorKind::ZeroPolynomial, "negative power of zero");
        base = {a.den, a.num};
        k = -k;
    }
    for (int i = 0; i < k; ++i) r = {mul(r.num, base.num), mul(r.den, base.den)};
    return reduce_constant_den(r);
}

class Parser {
public:
    Parser(const std::string& s, std::map<char, int>& symbols) : s_(s), symbols_(symbols) {}

    Frac parse() {
        Frac f = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return f;
    }

private:
    const std::string& s_;
    std::size_t pos_ = 0;
    std::map<char, int>& symbols_;

    [[noreturn]] void fail(const std::string& msg) const {
        throw Error(ErrorKind::Syntax, msg + " at position " + std::to_string(pos_) + " in '" + s_ + "'");
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    char peek() {
        skip();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    bool starts_primary() {
        char c = peek();
        return std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c)) || c == '(';
    }

    Frac expr() {
        Frac acc{{}, one()};
        bool first = true;
        for (;;) {
            char c = peek();
            int sign = 1;
            if (c == '+' || c == '-') {
                sign = c == '-' ? -1 : 1;
                ++pos_;
            } else if (!first) {
                break;
            }
            Frac t = term();
            if (sign < 0) t.num = neg(t.num);
            acc = first ? t : fadd(acc, t);
            first = false;
        }
        return acc;
    }

    Frac term() {
        Frac acc = factor();
        for (;;) {
            char c = peek();
            if (c == '*') {
                ++pos_;
                acc = fmul(acc, factor());
            } else if (c == '/') {
                ++pos_;
                acc = fdiv(acc, factor());
            } else if (starts_primary()) {
                acc = fmul(acc, factor());
            } else {
                break;
            }
        }
        return acc;
    }

    int integer_exponent() {
        char c = peek();
        bool paren = false;
        if (c == '(') {
            paren = true;
            ++pos_;
            c = peek();
        }
        int sign = 1;
        if (c == '-' || c == '+') {
            sign = c == '-' ? -1 : 1;
            ++pos_;
            skip();
        }
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected integer exponent");
        int v = std::stoi(s_.substr(start, pos_ - start));
        if (paren) {
            if (peek() != ')') fail("expected ')'");
            ++pos_;
        }
        return sign * v;
    }

    Frac factor() {
        Frac base = primary();
        if (peek() == '^') {
            ++pos_;
            base = fpow(base, integer_exponent());
        }
        return base;
    }

    Frac primary() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            Frac f = expr();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
            return f;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (pos_ < s_.size() && (s_[pos_] == '.' || s_[pos_] == 'e' || s_[pos_] == 'E') &&
                pos_ + 1 < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_ + 1])))
                throw Error(ErrorKind::BadCoefficient, "only integer and fraction literals are accepted: '" + s_ + "'");
            Rat v(s_.substr(start, pos_ - start));
            return {SparsePoly{{0, v}}, one()};
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            ++pos_;
            if (c == 't') return {SparsePoly{{1, Rat(1)}}, one()};
            if (c == 'x' || c == 'y') fail("unexpected variable");
            auto it = symbols_.find(c);
            if (it == symbols_.end()) {
                static const int primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67,
                                             71, 73, 79, 83, 89, 97, 101};
                int idx = static_cast<int>(symbols_.size());
                it = symbols_.emplace(c, primes[idx % 26]).first;
            }
            return {SparsePoly{{0, Rat(it->second)}}, one()};
        }
        if (c == '\0') fail("unexpected end of input");
        fail("unexpected '" + std::string(1, c) + "'");
    }
};

std::string strip(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n"), b = s.find_last_not_of(" \t\r\n");
    return a == std::string::npos ? "" : s.substr(a, b - a + 1);
}

CurveClass infer_class(const ParametricCurve& c) {
    if (is_constant(c.Q0) && is_constant(c.Q1)) return CurveClass::Polynomial;
    if (c.Q0 == c.Q1) return CurveClass::SameDenominator;
    return CurveClass::DifferentDenominators;
}

void check_nonzero(const ParametricCurve& c) {
    for (int i = 0; i < 2; ++i) {
        if (c.num(i).empty()) throw Error(ErrorKind::ZeroPolynomial, std::string("zero numerator for ") + (i ? "y" : "x"));
        if (c.den(i).empty()) throw Error(ErrorKind::ZeroPolynomial, std::string("zero denominator for ") + (i ? "y" : "x"));
    }
}

}  // namespace

ParametricCurve parse_shorthand(const std::string& text) {
    std::map<char, int> symbols;
    std::optional<Frac> fx, fy;
    std::string buf;
    std::stringstream ss(text);
    std::vector<std::string> parts;
    for (std::string line; std::getline(ss, line, ';');) {
        std::stringstream ls(line);
        for (std::string piece; std::getline(ls, piece, '\n');)
            if (!strip(piece).empty()) parts.push_back(strip(piece));
    }
    for (const auto& p : parts) {
        auto eq = p.find('=');
        if (eq == std::string::npos) throw Error(ErrorKind::Syntax, "expected 'x=...' or 'y=...' in '" + p + "'");
        std::string lhs = strip(p.substr(0, eq)), rhs = p.substr(eq + 1);
        Parser parser(rhs, symbols);
        Frac f = parser.parse();
        if (lhs == "x")
            fx = f;
        else if (lhs == "y")
            fy = f;
        else
            throw Error(ErrorKind::Syntax, "unknown coordinate '" + lhs + "'");
    }
    if (!fx || !fy) throw Error(ErrorKind::Syntax, "both x and y must be given");
    ParametricCurve c;
    c.P0 = fx->num;
    c.Q0 = fx->den;
    c.P1 = fy->num;
    c.Q1 = fy->den;
    c.supports_only = !symbols.empty();
    check_nonzero(c);
    c.cls = infer_class(c);
    return c;
}

namespace {

Rat parse_rat(const json& v) {
    std::string s;
    if (v.is_string())
        s = v.get<std::string>();
    else if (v.is_number_integer())
        s = std::to_string(v.get<long long>());
    else
        throw Error(ErrorKind::BadCoefficient, "coefficient must be a \"p/q\" string: " + v.dump());
    s = strip(s);
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    bool digits = false, slash = false;
    for (; i < s.size(); ++i) {
        if (std::isdigit(static_cast<unsigned char>(s[i])))
            digits = true;
        else if (s[i] == '/' && !slash && digits)
            slash = true, digits = false;
        else
            throw Error(ErrorKind::BadCoefficient, "non-rational coefficient literal '" + s + "'");
    }
    if (!digits) throw Error(ErrorKind::BadCoefficient, "non-rational coefficient literal '" + s + "'");
    if (s[0] == '+') s = s.substr(1);
    Rat r;
    try {
        r = Rat(s);
    } catch (const std::invalid_argument&) {
        throw Error(ErrorKind::BadCoefficient, "non-rational coefficient literal '" + s + "'");
    }
    if (r.get_den() == 0) throw Error(ErrorKind::BadCoefficient, "zero denominator in literal '" + s + "'");
    r.canonicalize();
    return r;
}

SparsePoly parse_poly_json(const json& j) {
    if (!j.is_object()) throw Error(ErrorKind::Syntax, "polynomial must be an object {exp: \"p/q\"}");
    SparsePoly p;
    for (auto it = j.begin(); it != j.end(); ++it) {
        int e;
        try {
            std::size_t used = 0;
            e = std::stoi(it.key(), &used);
            if (used != it.key().size()) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw Error(ErrorKind::Syntax, "exponent key must be a decimal integer: '" + it.key() + "'");
        }
        Rat c = parse_rat(it.value());
        if (c != 0) p[e] += c;
        if (p.count(e) && p[e] == 0) p.erase(e);
    }
    return p;
}

json poly_to_json(const SparsePoly& p) {
    json j = json::object();
    for (const auto& [e, c] : p) j[std::to_string(e)] = c.get_str();
    return j;
}

}  // namespace

ParametricCurve parse_curve_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(ErrorKind::Syntax, std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("x") || !j.contains("y"))
        throw Error(ErrorKind::Syntax, "curve JSON needs \"x\" and \"y\" objects");
    ParametricCurve c;
    for (int i = 0; i < 2; ++i) {
        const json& coord = j[i == 0 ? "x" : "y"];
        if (!coord.is_object() || !coord.contains("num")) throw Error(ErrorKind::Syntax, "coordinate needs a \"num\" object");
        SparsePoly num = parse_poly_json(coord["num"]);
        SparsePoly den = coord.contains("den") ? parse_poly_json(coord["den"]) : one();
        (i == 0 ? c.P0 : c.P1) = num;
        (i == 0 ? c.Q0 : c.Q1) = den;
    }
    check_nonzero(c);
    c.supports_only = j.value("supports_only", false);
    c.cls = infer_class(c);
    if (j.contains("class")) {
        if (!j["class"].is_string()) throw Error(ErrorKind::Syntax, "\"class\" must be a string");
        CurveClass declared = class_from_name(j["class"].get<std::string>());
        if (declared == CurveClass::SameDenominator && c.Q0 != c.Q1)
            throw Error(ErrorKind::Syntax, "class same_denominator needs identical denominators");
        if (declared == CurveClass::Polynomial && !(is_constant(c.Q0) && is_constant(c.Q1)))
            throw Error(ErrorKind::Syntax, "class polynomial needs constant denominators");
        c.cls = declared;
    }
    return c;
}

ParametricCurve parse_curve(const std::string& text) {
    std::string t = strip(text);
    if (!t.empty() && t[0] == '{') return parse_curve_json(t);
    return parse_shorthand(t);
}

std::string curve_to_json(const ParametricCurve& c) {
    json j;
    j["class"] = class_name(c.cls);
    for (int i = 0; i < 2; ++i) {
        json coord;
        coord["num"] = poly_to_json(c.num(i));
        coord["den"] = poly_to_json(c.den(i));
        j[i == 0 ? "x" : "y"] = coord;
    }
    if (c.supports_only) j["supports_only"] = true;
    return j.dump();
}

namespace {

std::string poly_text(const SparsePoly& p) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : p) {
        Rat a = abs(c);
        os << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
        first = false;
        if (e == 0) {
            os << a.get_str();
            continue;
        }
        if (a != 1) os << a.get_str();
        os << "t";
        if (e != 1) os << "^" << e;
    }
    return os.str();
}

}  // namespace

std::string curve_to_string(const ParametricCurve& c) {
    std::ostringstream os;
    for (int i = 0; i < 2; ++i) {
        os << (i == 0 ? "x=" : "; y=");
        if (is_constant(c.den(i)) && c.den(i).begin()->second == 1)
            os << poly_text(c.num(i));
        else
            os << "(" << poly_text(c.num(i)) << ")/(" << poly_text(c.den(i)) << ")";
    }
    return os.str();
}

// ---------------------------------------------------------------------------

namespace {

int min_exp(const SparsePoly& p) { return p.begin()->first; }

// Divide num and den by their common factor; returns true if it was nontrivial.
bool reduce_pair(SparsePoly& num, SparsePoly& den, bool supports_only) {
    int k = std::min(min_exp(num), min_exp(den));
    bool changed = false;
    if (k > 0) {
        num = shift(num, -k);
        den = shift(den, -k);
        changed = true;
    }
    if (supports_only) return changed;
    QPoly g = qpoly_gcd(to_dense(num), to_dense(den));
    if (degree(g) > 0) {
        num = to_sparse(qpoly_divmod(to_dense(num), g).first);
        den = to_sparse(qpoly_divmod(to_dense(den), g).first);
        changed = true;
    }
    return changed;
}

void shift_to_origin(ParametricCurve& c) {
    if (c.cls == CurveClass::SameDenominator) {
        int m = std::min({min_exp(c.P0), min_exp(c.P1), min_exp(c.Q0)});
        c.P0 = shift(c.P0, -m);
        c.P1 = shift(c.P1, -m);
        c.Q0 = shift(c.Q0, -m);
        c.Q1 = c.Q0;
        return;
    }
    for (int i = 0; i < 2; ++i) {
        SparsePoly& num = i == 0 ? c.P0 : c.P1;
        SparsePoly& den = i == 0 ? c.Q0 : c.Q1;
        int m = std::min(min_exp(num), min_exp(den));
        num = shift(num, -m);
        den = shift(den, -m);
    }
}

}  // namespace

ParametricCurve normalize(const ParametricCurve& in) {
    check_nonzero(in);
    ParametricCurve c = in;
    shift_to_origin(c);

    bool rerouted = false;
    if (c.cls == CurveClass::SameDenominator) {
        SparsePoly q0 = c.Q0, q1 = c.Q1;
        bool r0 = reduce_pair(c.P0, q0, c.supports_only);
        bool r1 = reduce_pair(c.P1, q1, c.supports_only);
        c.Q0 = q0;
        c.Q1 = q1;
        rerouted = (r0 || r1) && q0 != q1;
    } else {
        // Only monomial factors; other common factors stay and are treated as non-generic coefficients.
        reduce_pair(c.P0, c.Q0, true);
        reduce_pair(c.P1, c.Q1, true);
    }

    if (is_constant(c.Q0) && is_constant(c.Q1)) {
        c.P0 = scale(c.P0, 1 / c.Q0.begin()->second);
        c.P1 = scale(c.P1, 1 / c.Q1.begin()->second);
        c.Q0 = c.Q1 = one();
        c.cls = CurveClass::Polynomial;
    } else if (c.cls == CurveClass::SameDenominator && rerouted) {
        c.cls = CurveClass::DifferentDenominators;
    } else if (c.cls == CurveClass::Polynomial) {
        c.cls = CurveClass::DifferentDenominators;  // Laurent numerators moved into a denominator
    }
    shift_to_origin(c);

    for (int i = 0; i < 2; ++i)
        if (is_constant(c.num(i)) && is_constant(c.den(i)))
            throw Error(ErrorKind::EmptyAfterReduction,
                        std::string("coordinate ") + (i ? "y" : "x") + " is constant after reduction");

    int g = 0;
    for (int i = 0; i < 2; ++i) {
        Support s = support_union(support_of(c.num(i)), support_of(c.den(i)));
        for (int e : s) g = std::gcd(g, e - s.front());
    }
    if (g > 1)
        throw Error(ErrorKind::DegreeSubstitutionDetected,
                    "all exponents are multiples of " + std::to_string(g) + " (substitution t -> t^" + std::to_string(g) + ")",
                    g);
    return c;
}

// ---------------------------------------------------------------------------

SameDenomData SameDenomData::from_supports(const Support& B0, const Support& B1, const Support& B2) {
    SameDenomData d;
    d.B = {B0, B1, B2};
    for (int i = 0; i < 3; ++i) {
        if (d.B[i].empty()) throw Error(ErrorKind::InvariantViolation, "empty support");
        d.bL[i] = d.B[i].front();
        d.bR[i] = d.B[i].back();
    }
    d.u = std::max({d.bR[0], d.bR[1], d.bR[2]});
    d.cls = classify_same_denom(d);
    return d;
}

bool SameDenomData::origin_condition() const { return bL[2] == 0 || (bL[0] == 0 && bL[1] == 0); }

SameDenomData SameDenomData::reversed() const {
    SameDenomData r = *this;
    for (int i = 0; i < 3; ++i) {
        Support s;
        for (auto it = B[i].rbegin(); it != B[i].rend(); ++it) s.push_back(u - *it);
        r.B[i] = s;
        r.bL[i] = u - bR[i];
        r.bR[i] = u - bL[i];
    }
    return r;
}

SameDenomData derive_same_denom(const ParametricCurve& c) {
    if (c.cls != CurveClass::SameDenominator) throw Error(ErrorKind::InvariantViolation, "curve is not same-denominator");
    return SameDenomData::from_supports(support_of(c.P0), support_of(c.P1), support_of(c.Q0));
}

namespace {

std::optional<Classification> match_cases(const SameDenomData& d) {
    const int u = d.u;
    auto& L = d.bL;
    auto& R = d.bR;
    auto hull_full = [&](int i, int j) { return std::min(L[i], L[j]) == 0 && std::max(R[i], R[j]) == u; };
    if (hull_full(0, 1) && hull_full(0, 2) && hull_full(1, 2)) return Classification{CaseTag::A1, 0, 1, 2, false};

    for (int k = 0; k < 3; ++k) {
        if (!(L[k] == 0 && R[k] == u)) continue;
        int i = k == 0 ? 1 : 0;
        int j = 3 - k - i;
        long long lhs = static_cast<long long>(L[i]) * (u - R[j]);
        long long rhs = static_cast<long long>(L[j]) * (u - R[i]);
        if (lhs < rhs) std::swap(i, j);
        return Classification{CaseTag::A2, i, j, k, false};
    }

    static const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    for (const auto& p : perms) {
        int i = p[0], j = p[1], k = p[2];
        bool normal = 0 < L[i] && L[i] <= R[i] && R[i] == u && L[j] == 0 && R[j] < u && R[k] < u;
        if (!normal) continue;
        if (L[k] == 0) {
            if (R[j] > R[k]) std::swap(j, k);
            return Classification{CaseTag::B2, i, j, k, false};
        }
        return Classification{CaseTag::B3, i, j, k, false};
    }
    return std::nullopt;
}

}  // namespace

Classification classify_same_denom(const SameDenomData& d) {
    if (auto m = match_cases(d)) return *m;
    if (auto m = match_cases(d.reversed())) {
        m->reversed = true;
        return *m;
    }
    std::ostringstream os;
    os << "no case matches segments";
    for (int i = 0; i < 3; ++i) os << " B" << i << "=[" << d.bL[i] << "," << d.bR[i] << "]";
    throw Error(ErrorKind::UnclassifiableConfiguration, os.str());
}

// ---------------------------------------------------------------------------

DiffDenomData diff_denom_from_supports(const Support& P0, const Support& Q0, const Support& P1, const Support& Q1) {
    DiffDenomData d;
    d.P0 = P0;
    d.Q0 = Q0;
    d.P1 = P1;
    d.Q1 = Q1;
    d.A0 = support_union(P0, Q0);
    d.A1 = support_union(P1, Q1);
    if (d.A0.front() != 0 || d.A1.front() != 0)
        throw Error(ErrorKind::InvariantViolation, "supports of f0, f1 must start at exponent 0");
    return d;
}

DiffDenomData derive_diff_denom(const ParametricCurve& c) {
    return diff_denom_from_supports(support_of(c.P0), support_of(c.Q0), support_of(c.P1), support_of(c.Q1));
}

Selection custom_selection(const DiffDenomData& d, const Support& sel0, const Support& sel1, SelectionKind kind) {
    Selection s;
    s.kind = kind;
    s.A0 = d.A0;
    s.A1 = d.A1;
    for (int i = 0; i < 2; ++i) {
        const Support& sel = i == 0 ? sel0 : sel1;
        for (int a : s.A(i)) s.selected[i].push_back(std::binary_search(sel.begin(), sel.end(), a));
    }
    return s;
}

Selection make_selection(const DiffDenomData& d, SelectionKind kind) {
    Support s0, s1;
    if (kind == SelectionKind::Selection1) {
        s0 = d.Q0;
        s1 = d.Q1;
        if (s0.empty() || s1.empty()) throw Error(ErrorKind::InvariantViolation, "Selection1 has an empty selected set");
    } else {
        std::set_difference(d.Q0.begin(), d.Q0.end(), d.P0.begin(), d.P0.end(), std::back_inserter(s0));
        std::set_difference(d.Q1.begin(), d.Q1.end(), d.P1.begin(), d.P1.end(), std::back_inserter(s1));
    }
    return custom_selection(d, s0, s1, kind);
}

bool Selection::is_selected(int i, int exponent) const {
    const Support& a = A(i);
    auto it = std::lower_bound(a.begin(), a.end(), exponent);
    if (it == a.end() || *it != exponent) return false;
    return selected[i][it - a.begin()];
}

int Selection::chi_nonselected(int i) const {
    for (bool b : selected[i])
        if (!b) return 1;
    return 0;
}

bool Selection::any_selected(int i) const {
    for (bool b : selected[i])
        if (b) return true;
    return false;
}

std::optional<int> Selection::leftmost(int i, bool sel) const {
    for (std::size_t p = 0; p < A(i).size(); ++p)
        if (selected[i][p] == sel) return A(i)[p];
    return std::nullopt;
}

std::optional<int> Selection::rightmost(int i, bool sel) const {
    for (std::size_t p = A(i).size(); p-- > 0;)
        if (selected[i][p] == sel) return A(i)[p];
    return std::nullopt;
}

Support Selection::selected_set(int i) const {
    Support r;
    for (std::size_t p = 0; p < A(i).size(); ++p)
        if (selected[i][p]) r.push_back(A(i)[p]);
    return r;
}

std::string Selection::describe(int i) const {
    std::ostringstream os;
    os << "{";
    for (std::size_t p = 0; p < A(i).size(); ++p) os << (p ? "," : "") << A(i)[p] << (selected[i][p] ? "+" : "-");
    os << "}";
    return os.str();
}

}  // namespace ni
