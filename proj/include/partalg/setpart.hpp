#ifndef PARTALG_SETPART_HPP
#define PARTALG_SETPART_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "partalg/config.hpp"
#include "partalg/mp.hpp"

namespace partalg {

// Nodes of a two-row node set. The top row is 1..n, the bottom (primed) row
// 1'..m'. Internally node i (1-based) of the top row is stored as i-1 and
// primed node i' as n+i-1, giving a single integer keyspace for union-find.
struct NodeSet {
    int top = 0;
    int bottom = 0;
    int size() const { return top + bottom; }
    bool operator==(const NodeSet&) const = default;
};

// A set partition of a NodeSet into nonempty disjoint covering blocks.
// Canonical storage: every block sorted ascending (top nodes before primed
// ones by the encoding), blocks sorted by least element.
class SetPartition {
public:
    SetPartition() = default;
    SetPartition(NodeSet nodes, std::vector<std::vector<int>> blocks);

    const NodeSet& nodes() const { return nodes_; }
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }
    int block_count() const { return static_cast<int>(blocks_.size()); }
    // Index of the block containing `node`, by canonical block order.
    int block_of(int node) const;

    // Number of top-row / bottom-row nodes in block `b`.
    int top_count(int b) const;
    int bottom_count(int b) const;

    bool operator==(const SetPartition& o) const {
        return nodes_ == o.nodes_ && blocks_ == o.blocks_;
    }

    std::string key() const;  // compact canonical encoding, for hashing/maps

private:
    NodeSet nodes_;
    std::vector<std::vector<int>> blocks_;
};

// Canonical enumeration order: node-set sizes first, then decreasing block
// count, ties broken lexicographically on the canonical block list where an
// exhausted block compares high (so (12)(3) precedes (1)(23)).
bool canonical_less(const SetPartition& a, const SetPartition& b);

// All of P_{n,m} in canonical order; length B(n+m).
std::vector<SetPartition> enumerate_partitions(int n, int m, const Config& cfg = {});
// All partitions of the top row of n nodes with every block of even size.
std::vector<SetPartition> enumerate_even_partitions(int n, const Config& cfg = {});

// True iff every block has top-count - bottom-count == 0 mod d.
bool is_tonal(const SetPartition& p, int d);

// Counting sequences. bell(n) = |P_{n,0}|, stirling2(n,l) = |P_{n,0} with l
// blocks|, t_count(m,t) = even-block partitions of 2m nodes into t blocks
// (closed formula; t_count(0,0)=1, t_count(m,0)=0 for m>0).
Int bell(int n);
Int stirling2(int n, int l);
Int t_count(int m, int t);

// True iff every block of p is contained in a block of q (same node set).
bool refines(const SetPartition& p, const SetPartition& q);

// Weakly decreasing list of block sizes.
std::vector<int> shape(const SetPartition& p);

// Kernel partition of a word over {1..Q}: i ~ j iff w[i] == w[j].
SetPartition word_partition(const std::vector<int>& word, int q_alphabet);

// Join (smallest common coarsening) in the partition lattice.
SetPartition join(const SetPartition& a, const SetPartition& b);

}  // namespace partalg

#endif
