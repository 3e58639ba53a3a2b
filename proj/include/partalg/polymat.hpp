#ifndef PARTALG_POLYMAT_HPP
#define PARTALG_POLYMAT_HPP

#include <vector>

#include "partalg/config.hpp"
#include "partalg/poly.hpp"

namespace partalg {

using IntMatrix = std::vector<std::vector<Int>>;
using PolyMatrix = std::vector<std::vector<Poly>>;

// Fraction-free Bareiss elimination with full pivoting; exact over Z.
Int bareiss_det(IntMatrix m);
int integer_rank(IntMatrix m);

// Exact determinant of a square polynomial matrix by evaluation at
// delta = 0..degree_bound and Newton interpolation, one fraction-free integer
// elimination per sample point (points run in parallel). Hard error if the
// result exceeds the degree bound or has a fractional coefficient.
Poly det_via_evaluation(const PolyMatrix& m, int degree_bound, const Config& cfg = {});

// Direct fraction-free elimination over Q[delta]; fine for small matrices,
// used as an independent route in tests.
Poly det_poly_direct(PolyMatrix m);

// Rank over Q of the entrywise evaluation at x.
int rank_at(const PolyMatrix& m, const Rat& x);

// Smith normal form over Q[delta]: monic invariant factors d_1 | d_2 | ...,
// padded with zeros up to min(rows, cols).
struct SmithForm {
    std::vector<Poly> invariant_factors;
};
SmithForm smith_form(PolyMatrix m);

}  // namespace partalg

#endif
