#ifndef PARTALG_LINCOMB_HPP
#define PARTALG_LINCOMB_HPP

#include <map>

#include "partalg/diagram.hpp"
#include "partalg/poly.hpp"

namespace partalg {

// Finite formal Poly-linear combination of diagrams with equal source/target.
class LinComb {
public:
    LinComb(int source, int target) : src_(source), tgt_(target) {}
    explicit LinComb(const Diagram& d, const Poly& coeff = Poly::constant(1));

    int source() const { return src_; }
    int target() const { return tgt_; }
    const std::map<Diagram, Poly>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Diagram& d, const Poly& coeff);

    LinComb operator+(const LinComb& o) const;
    LinComb operator-(const LinComb& o) const;
    LinComb scaled(const Poly& s) const;

    bool operator==(const LinComb& o) const {
        return src_ == o.src_ && tgt_ == o.tgt_ && terms_ == o.terms_;
    }

    // Substitute a rational value for delta in every coefficient.
    LinComb eval_delta(const Rat& x) const;

private:
    int src_, tgt_;
    std::map<Diagram, Poly> terms_;
};

// Bilinear extension of diagram composition; each diagram product carries a
// factor delta^{removed components}.
LinComb compose_lin(const LinComb& a, const LinComb& b);
LinComb tensor_lin(const LinComb& a, const LinComb& b);
LinComb flip_lin(const LinComb& a);

// Composition in the specialization delta = 0: a diagram product survives
// only when no interior component is removed.
LinComb compose_at_zero(const LinComb& a, const LinComb& b);

// True iff some power <= max_power of x vanishes after setting delta = 0.
bool is_nilpotent_mod_delta0(const LinComb& x, int max_power);

}  // namespace partalg

#endif
