#include "partalg/lincomb.hpp"

#include "partalg/error.hpp"

namespace partalg {

LinComb::LinComb(const Diagram& d, const Poly& coeff) : src_(d.source()), tgt_(d.target()) {
    add_term(d, coeff);
}

void LinComb::add_term(const Diagram& d, const Poly& coeff) {
    if (d.source() != src_ || d.target() != tgt_)
        fail("shape", "term shape does not match the linear combination");
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(d, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

LinComb LinComb::operator+(const LinComb& o) const {
    if (src_ != o.src_ || tgt_ != o.tgt_) fail("shape", "adding mismatched linear combinations");
    LinComb r = *this;
    for (const auto& [d, c] : o.terms_) r.add_term(d, c);
    return r;
}

LinComb LinComb::operator-(const LinComb& o) const { return *this + o.scaled(Poly::constant(-1)); }

LinComb LinComb::scaled(const Poly& s) const {
    LinComb r(src_, tgt_);
    if (s.is_zero()) return r;
    for (const auto& [d, c] : terms_) r.add_term(d, c * s);
    return r;
}

LinComb LinComb::eval_delta(const Rat& x) const {
    LinComb r(src_, tgt_);
    for (const auto& [d, c] : terms_) r.add_term(d, Poly::constant(c.eval(x)));
    return r;
}

LinComb compose_lin(const LinComb& a, const LinComb& b) {
    if (a.target() != b.source()) fail("shape", "compose_lin: mismatched shapes");
    LinComb r(a.source(), b.target());
    for (const auto& [da, ca] : a.terms())
        for (const auto& [db, cb] : b.terms()) {
            auto [d, power] = compose(da, db);
            r.add_term(d, ca * cb * Poly::monomial(power));
        }
    return r;
}

LinComb tensor_lin(const LinComb& a, const LinComb& b) {
    LinComb r(a.source() + b.source(), a.target() + b.target());
    for (const auto& [da, ca] : a.terms())
        for (const auto& [db, cb] : b.terms()) r.add_term(tensor(da, db), ca * cb);
    return r;
}

LinComb flip_lin(const LinComb& a) {
    LinComb r(a.target(), a.source());
    for (const auto& [d, c] : a.terms()) r.add_term(flip(d), c);
    return r;
}

LinComb compose_at_zero(const LinComb& a, const LinComb& b) {
    if (a.target() != b.source()) fail("shape", "compose_at_zero: mismatched shapes");
    LinComb r(a.source(), b.target());
    for (const auto& [da, ca] : a.terms())
        for (const auto& [db, cb] : b.terms()) {
            auto [d, power] = compose(da, db);
            if (power == 0) r.add_term(d, Poly::constant(ca.eval(0) * cb.eval(0)));
        }
    return r;
}

bool is_nilpotent_mod_delta0(const LinComb& x, int max_power) {
    if (x.source() != x.target()) fail("shape", "nilpotence needs a square element");
    LinComb acc = x.eval_delta(0);
    if (acc.is_zero()) return true;
    for (int p = 2; p <= max_power; ++p) {
        acc = compose_at_zero(acc, x);
        if (acc.is_zero()) return true;
    }
    return false;
}

}  // namespace partalg
