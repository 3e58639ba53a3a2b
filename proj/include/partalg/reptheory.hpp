#ifndef PARTALG_REPTHEORY_HPP
#define PARTALG_REPTHEORY_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "partalg/spinegram.hpp"

namespace partalg {

// Weakly decreasing positive parts; empty = the partition of 0.
using IntPartition = std::vector<int>;

int partition_weight(const IntPartition& p);
std::string partition_text(const IntPartition& p);  // "(2,1)" or "()"
std::vector<IntPartition> partitions_of(int m);
std::vector<IntPartition> add_box(const IntPartition& p);
std::vector<IntPartition> remove_box(const IntPartition& p);

// Hook length formula.
Int specht_dim(const IntPartition& lambda);

// Simple/standard module label: lambda alone for the ordinary algebra,
// a pair (lambda, mu) of rank |lambda| + 2|mu| for the 2-tonal one.
struct Label {
    IntPartition lambda;
    std::optional<IntPartition> mu;

    int rank() const {
        return partition_weight(lambda) + (mu ? 2 * partition_weight(*mu) : 0);
    }
    bool operator==(const Label&) const = default;
    bool operator<(const Label& o) const;
    std::string text() const;  // "(2,1)" or "(2,1)|(1)"
};

struct GammaPoint {
    long l = 0;
    long m = 0;
    bool operator==(const GammaPoint&) const = default;
};

// Membership of gamma^{d,n}: l + d*m <= ... precisely (n - sum i*m_i)/d in N0.
bool gamma_member(const GammaPoint& p, int d, int n);
// a <= b iff a is reachable downward from b, i.e. a - b lies in the
// nonnegative integral span of X_d = { e_k - e_i - e_j : i + j = k mod d }.
bool gamma_leq(const GammaPoint& a, const GammaPoint& b, int d = 2);

// Labels of the simple modules at rank n. With delta_zero, the minimal label
// is dropped (tonal: (empty,empty) for even n; ordinary: empty for n >= 1).
std::vector<Label> index_set(Algebra algebra, int n, bool delta_zero = false);

// One-step restriction factors (level n -> n-1) as a multiset. Ordinary:
// paths through the half steps (remove a box or keep, then add a box or
// keep); tonal: one factor per valid box move in each of the four families
// (lambda+box, mu-box), (lambda+box, mu), (lambda-box, mu), (lambda-box,
// mu+box). Labels are not filtered by level here.
std::map<Label, int> restrict_label(const Label& label, Algebra algebra);

struct BratelliGraph {
    struct Node {
        Label label;
        Int dim;
    };
    struct Edge {
        int upper_level = 0;  // edge from (upper_level, upper_index) down one level
        int upper_index = 0;
        int lower_index = 0;
        int multiplicity = 0;
    };
    Algebra algebra = Algebra::ordinary;
    std::vector<std::vector<Node>> levels;  // levels[n]
    std::vector<Edge> edges;
};

BratelliGraph bratelli(Algebra algebra, int n_max);

// Dimension of the standard module labelled `label` at level n (computed by
// the Bratelli recursion from top-rank Specht data).
Int standard_dim(Algebra algebra, int n, const Label& label);

struct SemisimpleReport {
    Algebra algebra;
    Rat delta;
    bool delta_in_n0 = false;
    bool semisimple_all_n = false;
    std::string note;  // delta = 0 parity exception etc.
    // Fixed-n spine criterion (present when n was given).
    std::optional<int> n;
    std::set<long> spine_bad_set;
    bool spine_simple = false;
    bool fixed_n_semisimple_known = false;  // only the delta=0 tonal parity rule gives a full fixed-n verdict
    bool fixed_n_semisimple = false;
};

SemisimpleReport semisimplicity_verdict(Algebra algebra, const Rat& delta,
                                        std::optional<int> n = std::nullopt);

}  // namespace partalg

#endif
