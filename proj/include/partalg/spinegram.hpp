#ifndef PARTALG_SPINEGRAM_HPP
#define PARTALG_SPINEGRAM_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "partalg/lincomb.hpp"
#include "partalg/polymat.hpp"

namespace partalg {

enum class Algebra { ordinary, tonal };

// Basis of the spine module: for the ordinary algebra all top-row partitions
// with the bottom row a separate single block; for the 2-tonal algebra the
// even top partitions (n even) or, for odd n, the diagrams with propagating
// vector (1,0) and all primed nodes in one part. `tops` holds the indexing
// partitions (for odd n: the even partitions of n+1 under the delete-last-
// node bijection), aligned with `elements`.
struct SpineBasis {
    Algebra algebra = Algebra::ordinary;
    int n = 0;
    bool odd_label = false;  // true: ((1), empty); false: (empty) / (empty, empty)
    std::vector<Diagram> elements;
    std::vector<SetPartition> tops;
    Diagram pivot;  // E0, or E1 for the odd spine

    int dim() const { return static_cast<int>(elements.size()); }
    std::string label_text() const;
};

SpineBasis spine_basis(Algebra algebra, int n, const Config& cfg = {});

struct GramMatrix {
    SpineBasis basis;
    PolyMatrix entries;
};

// Entry (i,j) is the delta power of compose(flip(x_i), x_j); the composite
// must be the pivot diagram, anything else is an internal error.
GramMatrix gram_matrix(const SpineBasis& basis);
// Same form on an explicitly ordered element list (used for golden-order
// fixtures). Elements must belong to the given algebra's spine.
GramMatrix gram_matrix_with_order(Algebra algebra, int n, const std::vector<Diagram>& elements);

// Counting shortcut for one entry: number of parts of the join of the two
// indexing top partitions (shifted by one for the odd spine). Kept as an
// independent oracle for the composition path.
int gram_entry_exponent_shortcut(const SpineBasis& basis, int i, int j);

// Exact determinant. Dimensions up to cfg.gram_pipeline_dim_limit run the
// evaluation/interpolation pipeline; larger ones use the verified
// join-congruence factorization. Both are exposed for cross-checking.
Poly gram_det(const GramMatrix& g, const Config& cfg = {});
Poly gram_det_pipeline(const GramMatrix& g, const Config& cfg = {});
Poly gram_det_factored(const GramMatrix& g);

// Degree of det predicted by the diagonal (degree-dominance) argument.
int gram_degree_bound(const GramMatrix& g);
// Closed-form predicted degree: sum_l l*S(n,l), sum_t t*T(n/2,t), or the
// even bound of rank n+1 minus the dimension for the odd spine.
int predicted_degree(Algebra algebra, int n);

struct GramReport {
    Algebra algebra;
    int n = 0;
    std::string label;
    int dim = 0;
    Poly det;
    Factorization factorization;
    int degree = 0;
    int predicted = 0;
    std::map<long, Int> head_dims;  // delta = k -> dim of the simple head
    bool degree_match = false;
    bool saturation = false;         // exponents match dim S - dim L^k, residual 1
    bool unexplained_factor = false; // residual nonconstant
    std::optional<SmithForm> smith;
};

GramReport gram_report(Algebra algebra, int n, const Config& cfg = {}, bool with_smith = false);

// Closed-form head dimension at delta = k >= 1.
Int head_dim_formula(Algebra algebra, int n, long k);

struct OddEvenResult {
    bool holds = false;
    int exponent = 0;  // Gamma_{n+1}(empty,empty) = delta^exponent * Gamma_n((1),empty)
    int dim = 0;
};
// n odd: aligns the two bases through the even-partition bijection and
// discovers the entrywise scalar relation, if any.
OddEvenResult odd_even_check(int n, const Config& cfg = {});

// E0 p E0 proportional to E0 for every diagram p of the algebra, and
// flip(E0) = E0.
bool verify_heredity(Algebra algebra, int n, const Config& cfg = {});

struct SimplicityRoots {
    std::set<long> computed;     // integer roots > 0 of the Gram determinant
    std::set<long> closed_form;  // {1..n-1} / {1..n/2-1} / {1..(n-1)/2}
    bool match = false;
};
SimplicityRoots spine_simplicity_roots(Algebra algebra, int n, const Config& cfg = {});

// Matrix of the left action of `a` on the spine basis: a * x_j =
// sum_i rho[i][j] x_i. Requires the action to preserve the spine span.
PolyMatrix left_action_matrix(const LinComb& a, const SpineBasis& basis);

}  // namespace partalg

#endif
