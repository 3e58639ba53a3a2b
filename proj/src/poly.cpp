#include "partalg/poly.hpp"

#include <algorithm>

#include "partalg/error.hpp"

namespace partalg {

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::constant(const Rat& v) {
    Poly p;
    if (v != 0) p.c_ = {v};
    return p;
}

Poly Poly::monomial(int degree, const Rat& coeff) {
    Poly p;
    if (coeff != 0) {
        p.c_.assign(degree + 1, Rat(0));
        p.c_[degree] = coeff;
    }
    return p;
}

Poly Poly::linear_root(const Rat& root) { return Poly({-root, Rat(1)}); }

bool Poly::is_integral() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rat& v) { return is_integer(v); });
}

bool Poly::is_monomial() const {
    if (c_.empty()) return false;
    for (std::size_t i = 0; i + 1 < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return Poly(std::move(r));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator-() const {
    std::vector<Rat> r(c_);
    for (auto& v : r) v = -v;
    return Poly(std::move(r));
}

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly();
    std::vector<Rat> r(c_.size() + o.c_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    }
    return Poly(std::move(r));
}

Poly Poly::scaled(const Rat& s) const {
    std::vector<Rat> r(c_);
    for (auto& v : r) v *= s;
    return Poly(std::move(r));
}

Poly Poly::pow(int e) const {
    if (e < 0) fail("range", "negative polynomial power");
    Poly r = Poly::constant(1);
    Poly base = *this;
    while (e > 0) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

Rat Poly::eval(const Rat& x) const {
    Rat acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Int Poly::eval_int(const Int& x) const {
    Int acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        if (!is_integer(*it)) fail("internal", "eval_int on non-integral polynomial");
        acc = acc * x + it->get_num();
    }
    return acc;
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<Rat> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Rat(static_cast<long>(i));
    return Poly(std::move(r));
}

std::pair<Poly, Rat> Poly::synthetic_divide(const Rat& root) const {
    if (is_zero()) return {Poly(), Rat(0)};
    std::vector<Rat> q(c_.size() - 1, Rat(0));
    Rat carry = c_.back();
    for (int i = static_cast<int>(c_.size()) - 2; i >= 0; --i) {
        q[i] = carry;
        carry = c_[i] + carry * root;
    }
    return {Poly(std::move(q)), carry};
}

std::pair<Poly, Poly> Poly::div_rem(const Poly& num, const Poly& den) {
    if (den.is_zero()) fail("range", "division by the zero polynomial");
    Poly r = num;
    std::vector<Rat> q(std::max<int>(num.degree() - den.degree() + 1, 0), Rat(0));
    while (!r.is_zero() && r.degree() >= den.degree()) {
        int shift = r.degree() - den.degree();
        Rat factor = r.leading() / den.leading();
        q[shift] = factor;
        r -= den * Poly::monomial(shift, factor);
    }
    return {Poly(std::move(q)), r};
}

Poly Poly::div_exact(const Poly& num, const Poly& den) {
    auto [q, r] = div_rem(num, den);
    if (!r.is_zero()) fail("internal", "inexact polynomial division");
    return q;
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return scaled(Rat(1) / leading());
}

Poly Poly::interpolate(const std::vector<std::pair<Rat, Rat>>& points) {
    // Newton form with divided differences.
    std::size_t n = points.size();
    if (n == 0) return Poly();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (points[i].first == points[j].first)
                fail("range", "interpolate: duplicate abscissa " + dec_string(points[i].first));
    std::vector<Rat> dd(n);
    for (std::size_t i = 0; i < n; ++i) dd[i] = points[i].second;
    for (std::size_t level = 1; level < n; ++level)
        for (std::size_t i = n - 1; i >= level; --i)
            dd[i] = (dd[i] - dd[i - 1]) / (points[i].first - points[i - level].first);
    Poly result = Poly::constant(dd[n - 1]);
    for (int i = static_cast<int>(n) - 2; i >= 0; --i)
        result = result * Poly::linear_root(points[i].first) + Poly::constant(dd[i]);
    return result;
}

std::string Poly::to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (int i = degree(); i >= 0; --i) {
        Rat v = c_[i];
        if (v == 0) continue;
        bool neg = v < 0;
        Rat av = neg ? Rat(-v) : v;
        if (s.empty())
            s += neg ? "-" : "";
        else
            s += neg ? " - " : " + ";
        bool unit = av == 1;
        if (i == 0 || !unit) s += dec_string(av);
        if (i > 0) {
            if (!unit) s += "*";
            s += "d";
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s;
}

Poly Factorization::reconstruct() const {
    Poly p = Poly::constant(unit);
    for (const auto& f : factors) p *= Poly::linear_root(f.root).pow(f.multiplicity);
    return p * residual;
}

int Factorization::total_multiplicity() const {
    int t = 0;
    for (const auto& f : factors) t += f.multiplicity;
    return t;
}

Factorization factor_integer_roots(const Poly& p, long root_lo, long root_hi) {
    if (p.is_zero()) fail("range", "factor_integer_roots of the zero polynomial");
    Factorization f;
    Poly rest = p;
    for (long r = root_lo; r <= root_hi; ++r) {
        int mult = 0;
        while (rest.degree() >= 1) {
            auto [q, rem] = rest.synthetic_divide(Rat(r));
            if (rem != 0) break;
            rest = q;
            ++mult;
        }
        if (mult > 0) f.factors.push_back({Rat(r), mult});
    }
    f.unit = rest.is_zero() ? Rat(0) : rest.leading();
    f.residual = rest.monic();
    return f;
}

namespace {

std::vector<Int> positive_divisors(Int v) {
    v = abs(v);
    std::vector<Int> divs;
    for (Int d = 1; d * d <= v; ++d) {
        if (v % d == 0) {
            divs.push_back(d);
            if (d * d != v) divs.push_back(v / d);
        }
    }
    return divs;
}

}  // namespace

bool has_rational_root(const Poly& p) {
    if (p.is_zero()) return true;
    if (p.degree() == 0) return false;
    if (p.coeff(0) == 0) return true;
    // Clear denominators, then apply the rational root theorem.
    Int lcm(1);
    for (const auto& c : p.coeffs()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
    Poly q = p.scaled(Rat(lcm));
    Int a0 = q.coeff(0).get_num();
    Int an = q.leading().get_num();
    for (const Int& num : positive_divisors(a0))
        for (const Int& den : positive_divisors(an)) {
            Rat cand(num, den);
            cand.canonicalize();
            if (p.eval(cand) == 0 || p.eval(-cand) == 0) return true;
        }
    return false;
}

}  // namespace partalg
