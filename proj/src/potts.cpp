#include "partalg/potts.hpp"

#include <algorithm>
#include <map>

#include "partalg/error.hpp"
#include "partalg/polymat.hpp"

namespace partalg {

void SparseIntMatrix::normalize() {
    std::sort(coo.begin(), coo.end(), [](const auto& a, const auto& b) {
        if (std::get<0>(a) != std::get<0>(b)) return std::get<0>(a) < std::get<0>(b);
        return std::get<1>(a) < std::get<1>(b);
    });
    std::vector<std::tuple<std::uint64_t, std::uint64_t, Int>> merged;
    for (auto& e : coo) {
        if (!merged.empty() && std::get<0>(merged.back()) == std::get<0>(e) &&
            std::get<1>(merged.back()) == std::get<1>(e))
            std::get<2>(merged.back()) += std::get<2>(e);
        else
            merged.push_back(std::move(e));
    }
    coo.clear();
    for (auto& e : merged)
        if (std::get<2>(e) != 0) coo.push_back(std::move(e));
}

bool SparseIntMatrix::operator==(const SparseIntMatrix& o) const {
    return rows == o.rows && cols == o.cols && coo == o.coo;
}

std::vector<std::vector<Int>> SparseIntMatrix::dense() const {
    std::vector<std::vector<Int>> d(rows, std::vector<Int>(cols, 0));
    for (const auto& [r, c, v] : coo) d[r][c] = v;
    return d;
}

SparseIntMatrix sparse_from_dense(const std::vector<std::vector<Int>>& d) {
    SparseIntMatrix m;
    m.rows = d.size();
    m.cols = d.empty() ? 0 : d[0].size();
    for (std::uint64_t i = 0; i < m.rows; ++i)
        for (std::uint64_t j = 0; j < m.cols; ++j)
            if (d[i][j] != 0) m.coo.emplace_back(i, j, d[i][j]);
    return m;
}

SparseIntMatrix sparse_mul(const SparseIntMatrix& a, const SparseIntMatrix& b) {
    if (a.cols != b.rows) fail("shape", "sparse product shape mismatch");
    std::map<std::pair<std::uint64_t, std::uint64_t>, Int> acc;
    // Group b by row for the middle index.
    std::map<std::uint64_t, std::vector<std::pair<std::uint64_t, Int>>> brows;
    for (const auto& [r, c, v] : b.coo) brows[r].emplace_back(c, v);
    for (const auto& [r, k, v] : a.coo) {
        auto it = brows.find(k);
        if (it == brows.end()) continue;
        for (const auto& [c, w] : it->second) acc[{r, c}] += v * w;
    }
    SparseIntMatrix out;
    out.rows = a.rows;
    out.cols = b.cols;
    for (auto& [rc, v] : acc)
        if (v != 0) out.coo.emplace_back(rc.first, rc.second, std::move(v));
    return out;
}

SparseIntMatrix sparse_kron(const SparseIntMatrix& a, const SparseIntMatrix& b) {
    SparseIntMatrix out;
    out.rows = a.rows * b.rows;
    out.cols = a.cols * b.cols;
    for (const auto& [ra, ca, va] : a.coo)
        for (const auto& [rb, cb, vb] : b.coo)
            out.coo.emplace_back(ra * b.rows + rb, ca * b.cols + cb, va * vb);
    out.normalize();
    return out;
}

SparseIntMatrix sparse_scale(const SparseIntMatrix& a, const Int& s) {
    SparseIntMatrix out = a;
    if (s == 0) {
        out.coo.clear();
        return out;
    }
    for (auto& e : out.coo) std::get<2>(e) *= s;
    return out;
}

SparseIntMatrix sparse_add(const SparseIntMatrix& a, const SparseIntMatrix& b) {
    if (a.rows != b.rows || a.cols != b.cols) fail("shape", "sparse sum shape mismatch");
    SparseIntMatrix out = a;
    out.coo.insert(out.coo.end(), b.coo.begin(), b.coo.end());
    out.normalize();
    return out;
}

std::uint64_t WordIndex::size() const {
    std::uint64_t s = 1;
    for (int i = 0; i < n; ++i) s *= static_cast<std::uint64_t>(q);
    return s;
}

std::uint64_t WordIndex::index(const std::vector<int>& word) const {
    if (static_cast<int>(word.size()) != n) fail("range", "word length mismatch");
    std::uint64_t idx = 0;
    for (int v : word) {
        if (v < 1 || v > q) fail("range", "word letter out of alphabet");
        idx = idx * q + static_cast<std::uint64_t>(v - 1);
    }
    return idx;
}

std::vector<int> WordIndex::word(std::uint64_t index) const {
    std::vector<int> w(n);
    for (int i = n - 1; i >= 0; --i) {
        w[i] = static_cast<int>(index % q) + 1;
        index /= q;
    }
    return w;
}

namespace {

std::uint64_t checked_pow(int q, int n, std::uint64_t cap, const char* what) {
    std::uint64_t s = 1;
    for (int i = 0; i < n; ++i) {
        s *= static_cast<std::uint64_t>(q);
        if (s > cap) fail("capacity", std::string(what) + " exceeds the Potts capacity");
    }
    return s;
}

}  // namespace

SparseIntMatrix potts_image(const Diagram& p, int q, const Config& cfg) {
    if (q < 1) fail("range", "Q must be a positive integer");
    int n = p.source(), m = p.target();
    std::uint64_t rows = checked_pow(q, n, cfg.potts_capacity, "Q^n");
    std::uint64_t cols = checked_pow(q, m, cfg.potts_capacity, "Q^m");
    if (rows > cfg.potts_capacity / cols) fail("capacity", "Q^n * Q^m exceeds the Potts capacity");
    int nblocks = p.partition().block_count();
    checked_pow(q, nblocks, cfg.potts_capacity, "Q^blocks");
    SparseIntMatrix out;
    out.rows = rows;
    out.cols = cols;
    // One nonzero per colouring of the blocks.
    std::vector<int> colour(nblocks, 1);
    // Precompute positional weights.
    std::vector<std::uint64_t> wtop(n), wbot(m);
    {
        std::uint64_t w = 1;
        for (int i = n - 1; i >= 0; --i) {
            wtop[i] = w;
            w *= q;
        }
        w = 1;
        for (int i = m - 1; i >= 0; --i) {
            wbot[i] = w;
            w *= q;
        }
    }
    while (true) {
        std::uint64_t r = 0, c = 0;
        for (int b = 0; b < nblocks; ++b)
            for (int v : p.partition().blocks()[b]) {
                if (v < n)
                    r += static_cast<std::uint64_t>(colour[b] - 1) * wtop[v];
                else
                    c += static_cast<std::uint64_t>(colour[b] - 1) * wbot[v - n];
            }
        out.coo.emplace_back(r, c, Int(1));
        int pos = nblocks - 1;
        while (pos >= 0 && colour[pos] == q) colour[pos--] = 1;
        if (pos < 0) break;
        ++colour[pos];
    }
    out.normalize();
    return out;
}

SparseIntMatrix potts_lin(const LinComb& x, int q, const Config& cfg) {
    SparseIntMatrix acc;
    acc.rows = checked_pow(q, x.source(), cfg.potts_capacity, "Q^n");
    acc.cols = checked_pow(q, x.target(), cfg.potts_capacity, "Q^m");
    for (const auto& [d, coeff] : x.terms()) {
        Rat v = coeff.eval(Rat(q));
        if (!is_integer(v)) fail("internal", "Potts coefficient is not an integer at delta=Q");
        acc = sparse_add(acc, sparse_scale(potts_image(d, q, cfg), v.get_num()));
    }
    return acc;
}

int potts_span_rank(const std::vector<Diagram>& diagrams, int q, const Config& cfg) {
    if (diagrams.empty()) return 0;
    std::uint64_t rows = checked_pow(q, diagrams[0].source(), cfg.potts_capacity, "Q^n");
    IntMatrix m(rows, std::vector<Int>(diagrams.size(), 0));
    for (std::size_t j = 0; j < diagrams.size(); ++j) {
        if (diagrams[j].target() != 0) fail("shape", "span rank expects diagrams with target 0");
        if (diagrams[j].source() != diagrams[0].source())
            fail("shape", "span rank expects a uniform source");
        for (const auto& [r, c, v] : potts_image(diagrams[j], q, cfg).coo) m[r][j] = v;
    }
    return integer_rank(std::move(m));
}

Int orbit_count(int q, int n, bool with_signs, const Config& cfg) {
    if (q < 1 || n < 0) fail("range", "orbit_count needs Q >= 1, n >= 0");
    if (!with_signs) {
        if (n == 0) return 1;
        Int acc = 0;
        for (int l = 1; l <= std::min(q, n); ++l) acc += stirling2(n, l);
        return acc;
    }
    if (n == 0) return 1;
    if (n % 2 != 0) return 0;
    // Direct orbit enumeration: canonical words (restricted growth over the
    // alphabet) with every letter multiplicity even.
    checked_pow(q, n, cfg.potts_capacity, "Q^n");
    WordIndex wi{q, n};
    Int count = 0;
    std::uint64_t total = wi.size();
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::vector<int> w = wi.word(idx);
        int maxseen = 0;
        bool canonical = true;
        std::vector<int> mult(q + 1, 0);
        for (int v : w) {
            if (v > maxseen + 1) {
                canonical = false;
                break;
            }
            maxseen = std::max(maxseen, v);
            ++mult[v];
        }
        if (!canonical) continue;
        bool even = true;
        for (int v = 1; v <= q; ++v)
            if (mult[v] % 2 != 0) {
                even = false;
                break;
            }
        if (even) count += 1;
    }
    // Closed form: sum_t T(n/2, t) over t <= Q.
    Int closed = 0;
    for (int t = 0; t <= q; ++t) closed += t_count(n / 2, t);
    if (count != closed)
        fail("internal", "signed orbit enumeration disagrees with the closed form");
    return count;
}

int commutant_dim(const std::vector<std::vector<std::vector<Int>>>& generators, int q, int n,
                  const Config& cfg) {
    if (q < 1 || n < 0) fail("range", "bad commutant arguments");
    for (const auto& g : generators)
        if (g.size() != static_cast<std::size_t>(q) || g.empty() || g.size() != g[0].size())
            fail("shape", "generators must be square of size Q");
    std::uint64_t dimv = 1;
    for (int i = 0; i < n; ++i) {
        dimv *= static_cast<std::uint64_t>(q);
        if (dimv * dimv > cfg.potts_capacity) fail("capacity", "Q^{2n} exceeds the capacity");
    }
    std::uint64_t vars = dimv * dimv;
    if (generators.empty()) return static_cast<int>(vars);
    // Z g - g Z = 0 for each generator g (g = gen^{(x) n}).
    IntMatrix system;
    for (const auto& gen : generators) {
        SparseIntMatrix g;
        g.rows = g.cols = 1;
        g.coo.emplace_back(0, 0, Int(1));
        SparseIntMatrix base = sparse_from_dense(gen);
        for (int i = 0; i < n; ++i) g = sparse_kron(g, base);
        std::vector<std::vector<Int>> gd = g.dense();
        for (std::uint64_t i = 0; i < dimv; ++i)
            for (std::uint64_t j = 0; j < dimv; ++j) {
                // Equation for entry (i,j) of Z g - g Z.
                std::vector<Int> row(vars, 0);
                for (std::uint64_t k = 0; k < dimv; ++k) {
                    row[i * dimv + k] += gd[k][j];
                    row[k * dimv + j] -= gd[i][k];
                }
                system.push_back(std::move(row));
            }
    }
    return static_cast<int>(vars) - integer_rank(std::move(system));
}

int head_dim_via_potts(Algebra algebra, int n, int q, const Config& cfg) {
    if (algebra == Algebra::tonal && n % 2 != 0)
        fail("parity", "tonal head dimension via Potts needs even n");
    std::vector<SetPartition> tops = algebra == Algebra::ordinary
                                         ? enumerate_partitions(n, 0, cfg)
                                         : enumerate_even_partitions(n, cfg);
    std::vector<Diagram> cols;
    cols.reserve(tops.size());
    for (const auto& t : tops) cols.emplace_back(t);
    return potts_span_rank(cols, q, cfg);
}

}  // namespace partalg
