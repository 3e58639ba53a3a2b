#ifndef PARTALG_DIAGRAM_HPP
#define PARTALG_DIAGRAM_HPP

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "partalg/setpart.hpp"

namespace partalg {

// A basis morphism n -> m of the partition category: a set partition of the
// node set with n top and m bottom (primed) nodes.
class Diagram {
public:
    Diagram() = default;
    Diagram(int source, int target, std::vector<std::vector<int>> blocks)
        : part_(NodeSet{source, target}, std::move(blocks)) {}
    explicit Diagram(SetPartition p) : part_(std::move(p)) {}

    int source() const { return part_.nodes().top; }
    int target() const { return part_.nodes().bottom; }
    const SetPartition& partition() const { return part_; }
    bool is_tonal(int d) const { return partalg::is_tonal(part_, d); }

    bool operator==(const Diagram& o) const { return part_ == o.part_; }
    bool operator<(const Diagram& o) const { return canonical_less(part_, o.part_); }

private:
    SetPartition part_;
};

// Named generators. Positions are 1-based and constructions follow the
// left-to-right tensor convention (source object n is the set {1..n}).
namespace gens {
Diagram empty();                        // 0 -> 0
Diagram identity(int n);                // 1^n
Diagram sigma(int n, int i);            // transposition (i, i+1) in S_n
Diagram perm(const std::vector<int>& image);  // general permutation diagram
Diagram omega(int n);                   // longest word, i -> n+1-i
Diagram u_at(int n, int i);             // U acting on strands i, i+1
Diagram b(int l);                       // all 2l nodes one block, l -> l
Diagram b0(int l);                      // {1..l}, {1'..l'}, l -> l
Diagram w(int l);                       // {{1..l}}, l -> 0
Diagram w_star(int l);                  // {{1'..l'}}, 0 -> l
Diagram W(int n, int l);                // (w^l w^l*) tensor 1^{n-l}
Diagram Wb(int n, int l);               // b^{l+1} tensor 1^{n-l-1}
Diagram Wb_bar(int n, int l);           // 1^{n-l-1} tensor b^{l+1}
Diagram A1(int n);                      // {{1},{1'}} tensor 1^{n-1}
Diagram A12(int n);                     // b^2 tensor 1^{n-2}
Diagram E0(int n);                      // {{1..n},{1'..n'}}
Diagram E1(int n);                      // all 2n nodes one block
Diagram a_gen(int n, int m1, int m2);   // (b^1)^{m1} (x) (b^2)^{m2} (x) U^{(n-m1-2m2)/2}
}  // namespace gens

// Stack p atop q (p: n->m, q: m->k), identify p's bottom row with q's top
// row, return the outer partition and the number of components contained
// entirely in the identified middle row.
std::pair<Diagram, int> compose(const Diagram& p, const Diagram& q);

// Side-by-side concatenation; q's nodes are shifted past p's.
Diagram tensor(const Diagram& p, const Diagram& q);

// Toggle the prime label on every node.
Diagram flip(const Diagram& p);

// Propagating-vector entry i (1-based) counts propagating blocks whose
// top-row size is congruent to i mod d (class d encodes 0).
struct PropVector {
    std::vector<int> counts;
    bool operator==(const PropVector&) const = default;
};
PropVector prop_vector(const Diagram& p, int d);

// Textual notation, e.g. "P[2,2]: (1 2')(1' 2)".
Diagram parse_diagram(std::string_view text);
std::string print_diagram(const Diagram& p);

}  // namespace partalg

#endif
