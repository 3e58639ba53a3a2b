#ifndef PARTALG_POLY_HPP
#define PARTALG_POLY_HPP

#include <string>
#include <utility>
#include <vector>

#include "partalg/mp.hpp"

namespace partalg {

// Univariate polynomial in delta over exact rationals. Coefficients are
// stored dense, constant term first, with no trailing zeros (the zero
// polynomial is the empty list).
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly zero() { return Poly(); }
    static Poly constant(const Rat& v);
    static Poly delta() { return monomial(1); }
    static Poly monomial(int degree, const Rat& coeff = 1);
    // delta - root
    static Poly linear_root(const Rat& root);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    bool is_integral() const;
    bool is_monomial() const;

    Rat coeff(int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : Rat(0); }
    const std::vector<Rat>& coeffs() const { return c_; }
    Rat leading() const { return c_.empty() ? Rat(0) : c_.back(); }

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    Poly scaled(const Rat& s) const;
    Poly pow(int e) const;
    bool operator==(const Poly& o) const { return c_ == o.c_; }

    Rat eval(const Rat& x) const;
    Int eval_int(const Int& x) const;  // requires integral coefficients

    Poly derivative() const;

    // Quotient and remainder of division by (delta - root).
    std::pair<Poly, Rat> synthetic_divide(const Rat& root) const;

    // Euclidean division by a nonzero divisor; throws on zero divisor.
    static std::pair<Poly, Poly> div_rem(const Poly& num, const Poly& den);
    // Division known to be exact; throws internal error on nonzero remainder.
    static Poly div_exact(const Poly& num, const Poly& den);

    Poly monic() const;

    // Unique polynomial of degree < #points through the given points.
    static Poly interpolate(const std::vector<std::pair<Rat, Rat>>& points);

    std::string to_string() const;  // human form, e.g. "d^3 - 2*d + 1"

private:
    void trim();
    std::vector<Rat> c_;
};

struct LinearFactor {
    Rat root;
    int multiplicity = 0;
};

// p = unit * prod (delta - root)^multiplicity * residual, residual monic with
// no roots in the searched range.
struct Factorization {
    Rat unit = 1;
    std::vector<LinearFactor> factors;
    Poly residual = Poly::constant(1);

    Poly reconstruct() const;
    int total_multiplicity() const;
};

Factorization factor_integer_roots(const Poly& p, long root_lo, long root_hi);

// Exhaustive rational-root test (candidates p/q over divisors of the constant
// and leading coefficients). Only valid when those coefficients are small
// enough to factor by trial division; callers guard the magnitude.
bool has_rational_root(const Poly& p);

}  // namespace partalg

#endif
