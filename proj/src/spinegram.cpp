#include "partalg/spinegram.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "partalg/error.hpp"
#include "partalg/parallel.hpp"

namespace partalg {

std::string SpineBasis::label_text() const {
    if (algebra == Algebra::ordinary) return "()";
    return odd_label ? "((1),())" : "((),())";
}

namespace {

Diagram spine_element(const SetPartition& top, int n) {
    std::vector<std::vector<int>> blocks = top.blocks();
    std::vector<int> bottom(n);
    std::iota(bottom.begin(), bottom.end(), n);
    blocks.push_back(std::move(bottom));
    return Diagram(n, n, std::move(blocks));
}

Diagram odd_spine_element(const SetPartition& q, int n) {
    // q is an even partition of n+1 top nodes; delete node n from its block
    // and attach the full bottom row to what remains.
    std::vector<std::vector<int>> blocks;
    for (const auto& blk : q.blocks()) {
        if (std::binary_search(blk.begin(), blk.end(), n)) {
            std::vector<int> prop;
            for (int v : blk)
                if (v != n) prop.push_back(v);
            for (int j = 0; j < n; ++j) prop.push_back(n + j);
            blocks.push_back(std::move(prop));
        } else {
            blocks.push_back(blk);
        }
    }
    return Diagram(n, n, std::move(blocks));
}

}  // namespace

SpineBasis spine_basis(Algebra algebra, int n, const Config& cfg) {
    if (n < 1) fail("range", "spine basis needs n >= 1");
    SpineBasis b;
    b.algebra = algebra;
    b.n = n;
    if (algebra == Algebra::ordinary) {
        b.odd_label = false;
        b.tops = enumerate_partitions(n, 0, cfg);
        for (const auto& t : b.tops) b.elements.push_back(spine_element(t, n));
        b.pivot = gens::E0(n);
    } else if (n % 2 == 0) {
        b.odd_label = false;
        b.tops = enumerate_even_partitions(n, cfg);
        for (const auto& t : b.tops) b.elements.push_back(spine_element(t, n));
        b.pivot = gens::E0(n);
    } else {
        b.odd_label = true;
        b.tops = enumerate_even_partitions(n + 1, cfg);
        for (const auto& t : b.tops) b.elements.push_back(odd_spine_element(t, n));
        b.pivot = gens::E1(n);
        // Canonical diagram order, keeping the indexing partitions aligned.
        std::vector<std::size_t> perm(b.elements.size());
        std::iota(perm.begin(), perm.end(), 0);
        std::sort(perm.begin(), perm.end(),
                  [&](std::size_t x, std::size_t y) { return b.elements[x] < b.elements[y]; });
        std::vector<Diagram> elems;
        std::vector<SetPartition> tops;
        for (std::size_t i : perm) {
            elems.push_back(b.elements[i]);
            tops.push_back(b.tops[i]);
        }
        b.elements = std::move(elems);
        b.tops = std::move(tops);
    }
    return b;
}

namespace {

PolyMatrix gram_entries(const std::vector<Diagram>& elements, const Diagram& pivot) {
    std::size_t d = elements.size();
    std::vector<Diagram> flipped;
    flipped.reserve(d);
    for (const auto& e : elements) flipped.push_back(flip(e));
    PolyMatrix m(d, std::vector<Poly>(d));
    // Entry work items are tiny; threading them loses to allocator
    // contention here, so only the determinant pipeline parallelizes.
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i; j < d; ++j) {
            auto [res, power] = compose(flipped[i], elements[j]);
            if (!(res == pivot))
                fail("internal", "Gram composite is not a multiple of the pivot element");
            m[i][j] = Poly::monomial(power);
            m[j][i] = m[i][j];
        }
    return m;
}

}  // namespace

GramMatrix gram_matrix(const SpineBasis& basis) {
    return GramMatrix{basis, gram_entries(basis.elements, basis.pivot)};
}

GramMatrix gram_matrix_with_order(Algebra algebra, int n, const std::vector<Diagram>& elements) {
    SpineBasis canonical = spine_basis(algebra, n);
    if (elements.size() != canonical.elements.size())
        fail("range", "element list is not a full spine basis");
    std::unordered_map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < canonical.elements.size(); ++i)
        index.emplace(canonical.elements[i].partition().key(), i);
    SpineBasis reordered = canonical;
    reordered.elements.clear();
    reordered.tops.clear();
    std::vector<char> used(elements.size(), 0);
    for (const auto& e : elements) {
        auto it = index.find(e.partition().key());
        if (it == index.end() || used[it->second])
            fail("range", "element list does not match the spine basis");
        used[it->second] = 1;
        reordered.elements.push_back(e);
        reordered.tops.push_back(canonical.tops[it->second]);
    }
    return GramMatrix{reordered, gram_entries(reordered.elements, reordered.pivot)};
}

int gram_entry_exponent_shortcut(const SpineBasis& basis, int i, int j) {
    SetPartition jp = join(basis.tops[i], basis.tops[j]);
    return jp.block_count() - (basis.odd_label ? 1 : 0);
}

int gram_degree_bound(const GramMatrix& g) {
    std::size_t d = g.entries.size();
    int bound = 0;
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            if (!g.entries[i][j].is_monomial() && !g.entries[i][j].is_zero())
                fail("internal", "Gram entries must be monomials");
            if (g.entries[i][j].degree() > std::min(g.entries[i][i].degree(), g.entries[j][j].degree()))
                fail("internal", "diagonal degree dominance violated");
        }
        bound += g.entries[i][i].degree();
    }
    return bound;
}

Poly gram_det_pipeline(const GramMatrix& g, const Config& cfg) {
    return det_via_evaluation(g.entries, gram_degree_bound(g), cfg);
}

Poly gram_det_factored(const GramMatrix& g) {
    const SpineBasis& b = g.basis;
    std::size_t d = g.entries.size();
    if (d == 0) return Poly::constant(1);
    int shift = b.odd_label ? 1 : 0;
    // The tops must be join-closed and listed in a linear extension of the
    // coarsening order (block counts non-increasing down the list), and every
    // entry must equal the counting shortcut. All three are checked; they
    // make the congruence M = Z diag(g) Z^T with unitriangular Z an identity
    // rather than an assumption.
    std::unordered_map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < d; ++i) index.emplace(b.tops[i].key(), i);
    for (std::size_t i = 0; i + 1 < d; ++i)
        if (b.tops[i].block_count() < b.tops[i + 1].block_count())
            fail("internal", "spine basis is not ordered by decreasing block count");
    std::vector<std::vector<std::size_t>> strictly_coarser(d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            SetPartition jp = join(b.tops[i], b.tops[j]);
            auto it = index.find(jp.key());
            if (it == index.end()) fail("internal", "spine tops are not join-closed");
            int expected = jp.block_count() - shift;
            if (!(g.entries[i][j] == Poly::monomial(expected)))
                fail("internal", "Gram entry disagrees with the join-count oracle");
            if (i != j && it->second == j && !(b.tops[i] == b.tops[j]))
                strictly_coarser[i].push_back(j);  // tops[j] coarsens tops[i]
        }
    // Moebius-style recursion from the coarsest element down:
    //   delta^{|v| - shift} = sum over coarsenings z of v of gvals[z].
    std::vector<Poly> gvals(d);
    for (std::size_t ii = d; ii-- > 0;) {
        Poly f = Poly::monomial(b.tops[ii].block_count() - shift);
        for (std::size_t z : strictly_coarser[ii]) f -= gvals[z];
        gvals[ii] = f;
    }
    Poly det = Poly::constant(1);
    for (const auto& gv : gvals) det *= gv;
    return det;
}

Poly gram_det(const GramMatrix& g, const Config& cfg) {
    if (static_cast<int>(g.entries.size()) <= cfg.gram_pipeline_dim_limit)
        return gram_det_pipeline(g, cfg);
    return gram_det_factored(g);
}

int predicted_degree(Algebra algebra, int n) {
    if (algebra == Algebra::ordinary) {
        Int d = 0;
        for (int l = 1; l <= n; ++l) d += Int(l) * stirling2(n, l);
        return static_cast<int>(d.get_si());
    }
    if (n % 2 == 0) {
        Int d = 0;
        for (int t = 1; t <= n / 2; ++t) d += Int(t) * t_count(n / 2, t);
        return static_cast<int>(d.get_si());
    }
    // Odd spine: from the even rank-(n+1) bound through the scalar relation.
    Int d = 0, dim = 0;
    int m = (n + 1) / 2;
    for (int t = 1; t <= m; ++t) {
        d += Int(t) * t_count(m, t);
        dim += t_count(m, t);
    }
    Int diff = d - dim;
    return static_cast<int>(diff.get_si());
}

Int head_dim_formula(Algebra algebra, int n, long k) {
    if (k < 1) fail("range", "head dimension formula needs delta = k >= 1");
    Int acc = 0;
    if (algebra == Algebra::ordinary) {
        for (long l = 1; l <= std::min<long>(k, n); ++l) acc += stirling2(n, static_cast<int>(l));
        return acc;
    }
    int m = (n % 2 == 0) ? n / 2 : (n + 1) / 2;
    for (long t = 0; t <= std::min<long>(k, m); ++t) acc += t_count(m, static_cast<int>(t));
    return acc;
}

GramReport gram_report(Algebra algebra, int n, const Config& cfg, bool with_smith) {
    SpineBasis basis = spine_basis(algebra, n, cfg);
    GramMatrix gm = gram_matrix(basis);
    GramReport r;
    r.algebra = algebra;
    r.n = n;
    r.label = basis.label_text();
    r.dim = basis.dim();
    r.det = gram_det(gm, cfg);
    r.degree = r.det.degree();
    r.predicted = predicted_degree(algebra, n);
    r.degree_match = r.degree == r.predicted;
    r.factorization = factor_integer_roots(r.det, 0, n);
    r.unexplained_factor = r.factorization.residual.degree() > 0;

    long kmax;
    if (algebra == Algebra::ordinary)
        kmax = n - 1;
    else if (n % 2 == 0)
        kmax = n / 2 - 1;
    else
        kmax = (n - 1) / 2;
    for (long k = 1; k <= kmax; ++k) r.head_dims[k] = head_dim_formula(algebra, n, k);

    // Saturation: every root exponent equals dim S - dim L^k, the delta
    // exponent is dim S (0 for the odd spine), no roots beyond {0..kmax},
    // and nothing is left over.
    bool sat = !r.unexplained_factor && r.factorization.unit == 1;
    std::map<long, int> mults;
    for (const auto& f : r.factorization.factors) {
        if (!is_integer(f.root)) {
            sat = false;
            continue;
        }
        mults[f.root.get_num().get_si()] = f.multiplicity;
    }
    long expected_delta_exp = basis.odd_label ? 0 : r.dim;
    if (mults.count(0) ? mults[0] != expected_delta_exp : expected_delta_exp != 0) sat = false;
    for (const auto& [k, mult] : mults) {
        if (k == 0) continue;
        if (k < 1 || k > kmax) {
            sat = false;
            continue;
        }
        Int expected = Int(r.dim) - head_dim_formula(algebra, n, k);
        if (Int(mult) != expected) sat = false;
    }
    for (long k = 1; k <= kmax; ++k) {
        Int expected = Int(r.dim) - head_dim_formula(algebra, n, k);
        if (expected != 0 && !mults.count(k)) sat = false;
    }
    r.saturation = sat;

    if (with_smith) {
        if (r.dim > cfg.smith_dim_limit)
            fail("capacity", "Smith form limited to dimension <= " +
                                 std::to_string(cfg.smith_dim_limit));
        r.smith = smith_form(gm.entries);
    }
    return r;
}

OddEvenResult odd_even_check(int n, const Config& cfg) {
    if (n < 1 || n % 2 == 0) fail("parity", "odd_even_check needs odd n >= 1");
    SpineBasis odd = spine_basis(Algebra::tonal, n, cfg);
    SpineBasis even = spine_basis(Algebra::tonal, n + 1, cfg);
    if (odd.dim() != even.dim()) fail("internal", "spine basis size mismatch across the bijection");
    std::unordered_map<std::string, std::size_t> even_index;
    for (std::size_t i = 0; i < even.tops.size(); ++i) even_index.emplace(even.tops[i].key(), i);
    std::vector<std::size_t> perm(odd.tops.size());
    for (std::size_t i = 0; i < odd.tops.size(); ++i) {
        auto it = even_index.find(odd.tops[i].key());
        if (it == even_index.end()) fail("internal", "bijection misses an even partition");
        perm[i] = it->second;
    }
    GramMatrix godd = gram_matrix(odd);
    GramMatrix geven = gram_matrix(even);
    OddEvenResult res;
    res.dim = odd.dim();
    int e = geven.entries[perm[0]][perm[0]].degree() - godd.entries[0][0].degree();
    if (e < 0) return res;
    for (int i = 0; i < odd.dim(); ++i)
        for (int j = 0; j < odd.dim(); ++j)
            if (!(geven.entries[perm[i]][perm[j]] == godd.entries[i][j] * Poly::monomial(e)))
                return res;
    res.holds = true;
    res.exponent = e;
    return res;
}

bool verify_heredity(Algebra algebra, int n, const Config& cfg) {
    Diagram e0 = gens::E0(n);
    if (!(flip(e0) == e0)) return false;
    auto all = enumerate_partitions(n, n, cfg);
    for (const auto& p : all) {
        Diagram d(p);
        if (algebra == Algebra::tonal && !d.is_tonal(2)) continue;
        auto [left, pow1] = compose(e0, d);
        auto [res, pow2] = compose(left, e0);
        if (!(res == e0)) return false;
    }
    return true;
}

SimplicityRoots spine_simplicity_roots(Algebra algebra, int n, const Config& cfg) {
    GramReport rep = gram_report(algebra, n, cfg);
    SimplicityRoots s;
    for (const auto& f : rep.factorization.factors) {
        if (!is_integer(f.root)) continue;
        long r = f.root.get_num().get_si();
        if (r >= 1 && f.multiplicity > 0) s.computed.insert(r);
    }
    long hi;
    if (algebra == Algebra::ordinary)
        hi = n - 1;
    else if (n % 2 == 0)
        hi = n / 2 - 1;
    else
        hi = (n - 1) / 2;
    for (long k = 1; k <= hi; ++k) s.closed_form.insert(k);
    s.match = s.computed == s.closed_form;
    return s;
}

PolyMatrix left_action_matrix(const LinComb& a, const SpineBasis& basis) {
    if (a.source() != basis.n || a.target() != basis.n)
        fail("shape", "left action element must live in the algebra of the basis");
    std::unordered_map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < basis.elements.size(); ++i)
        index.emplace(basis.elements[i].partition().key(), i);
    std::size_t d = basis.elements.size();
    PolyMatrix rho(d, std::vector<Poly>(d));
    for (std::size_t j = 0; j < d; ++j) {
        LinComb image = compose_lin(a, LinComb(basis.elements[j]));
        for (const auto& [diag, coeff] : image.terms()) {
            auto it = index.find(diag.partition().key());
            if (it == index.end())
                fail("internal", "left action leaves the spine span");
            rho[it->second][j] += coeff;
        }
    }
    return rho;
}

}  // namespace partalg
