#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace ni {

using Int = mpz_class;
using Rat = mpq_class;

// Sparse univariate Laurent polynomial: exponent -> nonzero coefficient.
using SparsePoly = std::map<int, Rat>;

// Dense univariate polynomials over Q, index = exponent, trimmed (no trailing zeros).
using QPoly = std::vector<Rat>;

QPoly to_dense(const SparsePoly& p);  // requires non-negative exponents
SparsePoly to_sparse(const QPoly& p);
void trim(QPoly& p);
int degree(const QPoly& p);  // -1 for zero
QPoly qpoly_mul(const QPoly& a, const QPoly& b);
// Quotient and remainder of Euclidean division; b must be nonzero.
std::pair<QPoly, QPoly> qpoly_divmod(const QPoly& a, const QPoly& b);
// Monic gcd; gcd(0,0) = 0.
QPoly qpoly_gcd(QPoly a, QPoly b);
Rat qpoly_eval(const QPoly& p, const Rat& t);
Rat sparse_eval(const SparsePoly& p, const Rat& t);

// Sparse multivariate polynomial over Z. Exponent vectors are packed into a
// 64-bit key, 60/nvars bits per variable (at most 30), whose integer order is
// lex order with variable 0 most significant. Terms are kept sorted by
// descending key. Polynomials combined together must share nvars.
class MPoly {
public:
    static constexpr int kMaxVars = 12;
    static constexpr int bits(int nvars) { return nvars <= 2 ? 30 : 60 / nvars; }
    static constexpr int max_exp(int nvars) { return (1 << bits(nvars)) - 1; }

    using Term = std::pair<std::uint64_t, Int>;

    explicit MPoly(int nvars = 0) : nvars_(nvars) {}

    static MPoly constant(int nvars, const Int& c);
    static MPoly variable(int nvars, int v);
    static MPoly monomial(int nvars, const std::vector<int>& exps, const Int& c);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }

    static std::uint64_t pack(const std::vector<int>& exps, int nvars);
    static int exponent(std::uint64_t key, int v, int nvars);
    int exponent(std::uint64_t key, int v) const { return exponent(key, v, nvars_); }
    std::vector<int> unpack(std::uint64_t key) const;

    int degree(int v) const;
    Int content() const;  // non-negative gcd of coefficients
    Int coeff(const std::vector<int>& exps) const;

    MPoly operator+(const MPoly& o) const;
    MPoly operator-(const MPoly& o) const;
    MPoly operator-() const;
    MPoly operator*(const MPoly& o) const;
    MPoly operator*(const Int& c) const;
    bool operator==(const MPoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

    // Exact quotient; throws InvariantViolation if b does not divide a.
    friend MPoly divexact(const MPoly& a, const MPoly& b);
    MPoly divexact(const Int& c) const;
    MPoly derivative(int v) const;
    // Flip the overall sign so that the leading coefficient is positive.
    MPoly normalized_sign() const;

    static MPoly from_terms(int nvars, std::vector<Term> terms);

private:
    int nvars_;
    std::vector<Term> terms_;
};

MPoly divexact(const MPoly& a, const MPoly& b);

// Bivariate gcd over Z[x,y] (variables 0 and 1), primitive and sign-normalized.
MPoly bivariate_gcd(const MPoly& a, const MPoly& b);

// Evaluate a bivariate integer polynomial at rational (x, y).
Rat eval2(const MPoly& p, const Rat& x, const Rat& y);

std::string to_string(const MPoly& p, const std::vector<std::string>& names);

}  // namespace ni
