#include "partalg/setpart.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>

#include "partalg/error.hpp"

namespace partalg {

SetPartition::SetPartition(NodeSet nodes, std::vector<std::vector<int>> blocks)
    : nodes_(nodes), blocks_(std::move(blocks)) {
    int total = nodes_.size();
    std::vector<char> seen(total, 0);
    int covered = 0;
    for (auto& b : blocks_) {
        if (b.empty()) fail("nodes", "empty block in set partition");
        std::sort(b.begin(), b.end());
        for (int v : b) {
            if (v < 0 || v >= total) fail("nodes", "node out of range in set partition");
            if (seen[v]) fail("nodes", "duplicate node in set partition");
            seen[v] = 1;
            ++covered;
        }
    }
    if (covered != total) fail("nodes", "set partition does not cover the node set");
    std::sort(blocks_.begin(), blocks_.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) { return a[0] < b[0]; });
}

int SetPartition::block_of(int node) const {
    for (int i = 0; i < block_count(); ++i)
        if (std::binary_search(blocks_[i].begin(), blocks_[i].end(), node)) return i;
    fail("nodes", "node not in partition");
}

int SetPartition::top_count(int b) const {
    const auto& blk = blocks_[b];
    return static_cast<int>(std::lower_bound(blk.begin(), blk.end(), nodes_.top) - blk.begin());
}

int SetPartition::bottom_count(int b) const {
    return static_cast<int>(blocks_[b].size()) - top_count(b);
}

std::string SetPartition::key() const {
    std::string k;
    k.reserve(static_cast<std::size_t>(nodes_.size()) * 3 + 8);
    k += std::to_string(nodes_.top);
    k += ':';
    k += std::to_string(nodes_.bottom);
    for (const auto& b : blocks_) {
        k += '|';
        for (int v : b) {
            k += std::to_string(v);
            k += ',';
        }
    }
    return k;
}

bool canonical_less(const SetPartition& a, const SetPartition& b) {
    if (a.nodes().top != b.nodes().top) return a.nodes().top < b.nodes().top;
    if (a.nodes().bottom != b.nodes().bottom) return a.nodes().bottom < b.nodes().bottom;
    if (a.block_count() != b.block_count()) return a.block_count() > b.block_count();
    const auto& ab = a.blocks();
    const auto& bb = b.blocks();
    for (std::size_t i = 0; i < ab.size(); ++i) {
        const auto& x = ab[i];
        const auto& y = bb[i];
        std::size_t len = std::max(x.size(), y.size());
        for (std::size_t j = 0; j < len; ++j) {
            // Exhausted block compares high: longer shared prefix sorts first.
            long xv = j < x.size() ? x[j] : std::numeric_limits<int>::max();
            long yv = j < y.size() ? y[j] : std::numeric_limits<int>::max();
            if (xv != yv) return xv < yv;
        }
    }
    return false;
}

std::vector<SetPartition> enumerate_partitions(int n, int m, const Config& cfg) {
    if (n < 0 || m < 0) fail("range", "negative node counts");
    int total = n + m;
    Int count = bell(total);
    if (count > Int(static_cast<unsigned long>(cfg.enumeration_cap)))
        fail("capacity", "B(" + std::to_string(total) + ") = " + dec_string(count) +
                             " exceeds enumeration cap " + std::to_string(cfg.enumeration_cap));
    std::vector<SetPartition> out;
    out.reserve(count.get_ui());
    NodeSet ns{n, m};
    if (total == 0) {
        out.emplace_back(ns, std::vector<std::vector<int>>{});
        return out;
    }
    // Restricted-growth strings: rgs[0] = 0, rgs[i] <= max(rgs[0..i-1]) + 1.
    std::vector<int> rgs(total, 0);
    auto emit = [&]() {
        int nblocks = *std::max_element(rgs.begin(), rgs.end()) + 1;
        std::vector<std::vector<int>> blocks(nblocks);
        for (int v = 0; v < total; ++v) blocks[rgs[v]].push_back(v);
        out.emplace_back(ns, std::move(blocks));
    };
    auto rec = [&](auto&& self, int i, int mx) -> void {
        if (i == total) {
            emit();
            return;
        }
        for (int v = 0; v <= mx + 1; ++v) {
            rgs[i] = v;
            self(self, i + 1, std::max(mx, v));
        }
    };
    rec(rec, 0, -1);
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
}

std::vector<SetPartition> enumerate_even_partitions(int n, const Config& cfg) {
    if (n < 0) fail("range", "negative node count");
    std::vector<SetPartition> out;
    NodeSet ns{n, 0};
    if (n % 2 != 0) return out;
    Int total = 0;
    for (int t = 0; t <= n / 2; ++t) total += t_count(n / 2, t);
    if (total > Int(static_cast<unsigned long>(cfg.enumeration_cap)))
        fail("capacity", "even partition count " + dec_string(total) +
                             " exceeds enumeration cap " + std::to_string(cfg.enumeration_cap));
    // Build blocks directly: the least unplaced node picks an odd number of
    // partners among the remaining nodes.
    std::vector<std::vector<int>> blocks;
    std::vector<int> free_nodes(n);
    std::iota(free_nodes.begin(), free_nodes.end(), 0);
    std::vector<int> chosen;
    auto rec = [&](auto&& self) -> void {
        if (free_nodes.empty()) {
            out.emplace_back(ns, blocks);
            return;
        }
        int head = free_nodes.front();
        std::vector<int> rest(free_nodes.begin() + 1, free_nodes.end());
        int r = static_cast<int>(rest.size());
        for (int k = 1; k <= r; k += 2) {
            // All k-subsets of rest.
            std::vector<int> idx(k);
            std::iota(idx.begin(), idx.end(), 0);
            while (true) {
                std::vector<int> block{head};
                std::vector<char> used(r, 0);
                for (int i : idx) {
                    block.push_back(rest[i]);
                    used[i] = 1;
                }
                std::vector<int> remaining;
                for (int i = 0; i < r; ++i)
                    if (!used[i]) remaining.push_back(rest[i]);
                blocks.push_back(std::move(block));
                std::swap(free_nodes, remaining);
                self(self);
                std::swap(free_nodes, remaining);
                blocks.pop_back();
                // next k-subset
                int pos = k - 1;
                while (pos >= 0 && idx[pos] == r - k + pos) --pos;
                if (pos < 0) break;
                ++idx[pos];
                for (int j = pos + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
            }
        }
    };
    if (n == 0) {
        out.emplace_back(ns, std::vector<std::vector<int>>{});
        return out;
    }
    rec(rec);
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
}

bool is_tonal(const SetPartition& p, int d) {
    if (d < 1) fail("range", "tonality must be a positive integer");
    for (int b = 0; b < p.block_count(); ++b)
        if ((p.top_count(b) - p.bottom_count(b)) % d != 0) return false;
    return true;
}

Int bell(int n) {
    if (n < 0) fail("range", "bell of negative argument");
    // Bell triangle.
    std::vector<Int> row{1};
    for (int i = 1; i <= n; ++i) {
        std::vector<Int> next(i + 1);
        next[0] = row.back();
        for (int j = 1; j <= i; ++j) next[j] = next[j - 1] + row[j - 1];
        row = std::move(next);
    }
    return row[0];
}

Int stirling2(int n, int l) {
    if (n < 0 || l < 0) fail("range", "stirling2 of negative argument");
    if (l > n) return 0;
    if (n == 0) return l == 0 ? 1 : 0;
    if (l == 0) return 0;
    std::vector<std::vector<Int>> s(n + 1, std::vector<Int>(l + 1, 0));
    s[0][0] = 1;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= std::min(i, l); ++j) s[i][j] = s[i - 1][j - 1] + Int(j) * s[i - 1][j];
    return s[n][l];
}

Int t_count(int m, int t) {
    if (m < 0 || t < 0) fail("range", "t_count of negative argument");
    if (m == 0) return t == 0 ? 1 : 0;
    if (t == 0) return 0;
    if (t > m) return 0;
    // T(m,t) = (1 / (t! 2^{t-1})) * sum_{j=1}^{t} (-1)^{t-j} C(2t, t-j) j^{2m}
    Int num = 0;
    for (int j = 1; j <= t; ++j) {
        Int term = binomial(2 * t, t - j) * pow_int(Int(j), 2u * static_cast<unsigned>(m));
        if ((t - j) % 2 != 0) term = -term;
        num += term;
    }
    Int den = factorial(t) * pow_int(2, static_cast<unsigned>(t - 1));
    Int q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (r != 0) fail("internal", "t_count formula produced a non-integer");
    return q;
}

bool refines(const SetPartition& p, const SetPartition& q) {
    if (!(p.nodes() == q.nodes())) fail("nodes", "refines: mismatched node sets");
    for (const auto& b : p.blocks()) {
        int home = q.block_of(b[0]);
        for (std::size_t i = 1; i < b.size(); ++i)
            if (q.block_of(b[i]) != home) return false;
    }
    return true;
}

std::vector<int> shape(const SetPartition& p) {
    std::vector<int> s;
    s.reserve(p.block_count());
    for (const auto& b : p.blocks()) s.push_back(static_cast<int>(b.size()));
    std::sort(s.rbegin(), s.rend());
    return s;
}

SetPartition word_partition(const std::vector<int>& word, int q_alphabet) {
    if (q_alphabet < 1) fail("range", "alphabet size must be positive");
    std::map<int, std::vector<int>> groups;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (word[i] < 1 || word[i] > q_alphabet) fail("range", "word letter out of alphabet");
        groups[word[i]].push_back(static_cast<int>(i));
    }
    std::vector<std::vector<int>> blocks;
    for (auto& [letter, nodes] : groups) blocks.push_back(std::move(nodes));
    return SetPartition(NodeSet{static_cast<int>(word.size()), 0}, std::move(blocks));
}

SetPartition join(const SetPartition& a, const SetPartition& b) {
    if (!(a.nodes() == b.nodes())) fail("nodes", "join: mismatched node sets");
    int total = a.nodes().size();
    std::vector<int> parent(total);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    auto unite = [&](int x, int y) { parent[find(x)] = find(y); };
    for (const auto& blk : a.blocks())
        for (std::size_t i = 1; i < blk.size(); ++i) unite(blk[0], blk[i]);
    for (const auto& blk : b.blocks())
        for (std::size_t i = 1; i < blk.size(); ++i) unite(blk[0], blk[i]);
    std::map<int, std::vector<int>> groups;
    for (int v = 0; v < total; ++v) groups[find(v)].push_back(v);
    std::vector<std::vector<int>> blocks;
    for (auto& [root, nodes] : groups) blocks.push_back(std::move(nodes));
    return SetPartition(a.nodes(), std::move(blocks));
}

}  // namespace partalg
