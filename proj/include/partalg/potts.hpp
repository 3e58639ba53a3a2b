#ifndef PARTALG_POTTS_HPP
#define PARTALG_POTTS_HPP

#include <tuple>
#include <vector>

#include "partalg/config.hpp"
#include "partalg/lincomb.hpp"
#include "partalg/spinegram.hpp"

namespace partalg {

// Sparse exact-integer matrix in coordinate form, sorted by (row, col),
// no duplicates, no stored zeros.
struct SparseIntMatrix {
    std::uint64_t rows = 0;
    std::uint64_t cols = 0;
    std::vector<std::tuple<std::uint64_t, std::uint64_t, Int>> coo;

    void normalize();  // sort, merge duplicates, drop zeros
    bool operator==(const SparseIntMatrix& o) const;
    std::vector<std::vector<Int>> dense() const;
};

SparseIntMatrix sparse_from_dense(const std::vector<std::vector<Int>>& d);
SparseIntMatrix sparse_mul(const SparseIntMatrix& a, const SparseIntMatrix& b);
SparseIntMatrix sparse_kron(const SparseIntMatrix& a, const SparseIntMatrix& b);
SparseIntMatrix sparse_scale(const SparseIntMatrix& a, const Int& s);
SparseIntMatrix sparse_add(const SparseIntMatrix& a, const SparseIntMatrix& b);

// Base-Q word index, first letter most significant; words are over {1..Q}.
struct WordIndex {
    int q = 2;
    int n = 0;
    std::uint64_t size() const;
    std::uint64_t index(const std::vector<int>& word) const;
    std::vector<int> word(std::uint64_t index) const;
};

// The Q^source x Q^target 0/1 matrix with entry 1 iff the combined colouring
// is constant on every block of p (the Potts rule).
SparseIntMatrix potts_image(const Diagram& p, int q, const Config& cfg = {});
// Linear extension with coefficients evaluated at delta = Q.
SparseIntMatrix potts_lin(const LinComb& x, int q, const Config& cfg = {});

// Rank over Q of the matrix whose columns are the images of the diagrams
// (all with target 0).
int potts_span_rank(const std::vector<Diagram>& diagrams, int q, const Config& cfg = {});

// Unsigned: number of S_Q-orbits on words of length n (= partitions of the
// positions into at most Q blocks). Signed: dimension of the signed-
// permutation invariant subspace (orbit enumeration over words with all
// letter multiplicities even).
Int orbit_count(int q, int n, bool with_signs, const Config& cfg = {});

// Dimension of { Z : Z g^{(x)n} = g^{(x)n} Z for every generator g }. The
// generators are q x q; with no generators the answer is the full matrix
// algebra on (Q^n)-space.
int commutant_dim(const std::vector<std::vector<std::vector<Int>>>& generators, int q, int n,
                  const Config& cfg = {});

// Rank of the Potts image of the spine basis; equals the head dimension of
// the spine module at delta = Q.
int head_dim_via_potts(Algebra algebra, int n, int q, const Config& cfg = {});

}  // namespace partalg

#endif
