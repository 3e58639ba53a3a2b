#include "partalg/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>

#include "partalg/error.hpp"

namespace partalg {

namespace gens {

Diagram empty() { return Diagram(0, 0, {}); }

Diagram identity(int n) {
    std::vector<std::vector<int>> blocks;
    blocks.reserve(n);
    for (int i = 0; i < n; ++i) blocks.push_back({i, n + i});
    return Diagram(n, n, std::move(blocks));
}

Diagram sigma(int n, int i) {
    if (i < 1 || i >= n) fail("range", "sigma position out of range");
    std::vector<int> image(n);
    std::iota(image.begin(), image.end(), 1);
    std::swap(image[i - 1], image[i]);
    return perm(image);
}

Diagram perm(const std::vector<int>& image) {
    int n = static_cast<int>(image.size());
    std::vector<char> seen(n, 0);
    std::vector<std::vector<int>> blocks;
    blocks.reserve(n);
    for (int i = 0; i < n; ++i) {
        int v = image[i];
        if (v < 1 || v > n || seen[v - 1]) fail("range", "not a permutation");
        seen[v - 1] = 1;
        blocks.push_back({i, n + v - 1});
    }
    return Diagram(n, n, std::move(blocks));
}

Diagram omega(int n) {
    std::vector<int> image(n);
    for (int i = 0; i < n; ++i) image[i] = n - i;
    return perm(image);
}

Diagram u_at(int n, int i) {
    if (i < 1 || i >= n) fail("range", "U position out of range");
    std::vector<std::vector<int>> blocks;
    for (int j = 0; j < n; ++j) {
        if (j == i - 1)
            blocks.push_back({j, j + 1});
        else if (j == i)
            blocks.push_back({n + j - 1, n + j});
        else
            blocks.push_back({j, n + j});
    }
    return Diagram(n, n, std::move(blocks));
}

Diagram b(int l) {
    if (l < 1) fail("range", "b^l needs l >= 1");
    std::vector<int> all(2 * l);
    std::iota(all.begin(), all.end(), 0);
    return Diagram(l, l, {all});
}

Diagram b0(int l) {
    if (l < 1) fail("range", "b0^l needs l >= 1");
    std::vector<int> top(l), bottom(l);
    std::iota(top.begin(), top.end(), 0);
    std::iota(bottom.begin(), bottom.end(), l);
    return Diagram(l, l, {top, bottom});
}

Diagram w(int l) {
    if (l < 1) fail("range", "w^l needs l >= 1");
    std::vector<int> top(l);
    std::iota(top.begin(), top.end(), 0);
    return Diagram(l, 0, {top});
}

Diagram w_star(int l) { return flip(w(l)); }

Diagram W(int n, int l) {
    if (l < 1 || l > n) fail("range", "W^l needs 1 <= l <= n");
    return tensor(b0(l), identity(n - l));
}

Diagram Wb(int n, int l) {
    if (l < 1 || l + 1 > n) fail("range", "W_b^l needs l+1 <= n");
    return tensor(b(l + 1), identity(n - l - 1));
}

Diagram Wb_bar(int n, int l) {
    if (l < 1 || l + 1 > n) fail("range", "Wbar_b^l needs l+1 <= n");
    return tensor(identity(n - l - 1), b(l + 1));
}

Diagram A1(int n) {
    if (n < 1) fail("range", "A_1 needs n >= 1");
    return tensor(Diagram(1, 1, {{0}, {1}}), identity(n - 1));
}

Diagram A12(int n) {
    if (n < 2) fail("range", "A_12 needs n >= 2");
    return tensor(b(2), identity(n - 2));
}

Diagram E0(int n) {
    if (n < 1) fail("range", "E_0 needs n >= 1");
    return b0(n);
}

Diagram E1(int n) {
    if (n < 1) fail("range", "E_1 needs n >= 1");
    return b(n);
}

Diagram a_gen(int n, int m1, int m2) {
    if (m1 < 0 || m2 < 0) fail("range", "a^{(m1,m2)} needs nonnegative parts");
    int used = m1 + 2 * m2;
    if (used > n) fail("range", "a^{(m1,m2)} does not fit in n strands");
    if ((n - used) % 2 != 0) fail("parity", "a^{(m1,m2)} needs n = m1 + 2*m2 mod 2");
    Diagram d = empty();
    for (int i = 0; i < m1; ++i) d = tensor(d, b(1));
    for (int i = 0; i < m2; ++i) d = tensor(d, b(2));
    for (int i = 0; i < (n - used) / 2; ++i) d = tensor(d, b0(2));
    return d;
}

}  // namespace gens

std::pair<Diagram, int> compose(const Diagram& p, const Diagram& q) {
    if (p.target() != q.source())
        fail("shape", "compose: target " + std::to_string(p.target()) + " != source " +
                          std::to_string(q.source()));
    int n = p.source(), m = p.target(), k = q.target();
    // Node layout: 0..n-1 outer top, n..n+m-1 middle, n+m..n+m+k-1 outer bottom.
    int total = n + m + k;
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
    for (const auto& blk : p.partition().blocks()) {
        // p's bottom node n+i is middle node n+i already.
        for (std::size_t i = 1; i < blk.size(); ++i) unite(blk[0], blk[i]);
    }
    for (const auto& blk : q.partition().blocks()) {
        // q's top node i is middle node n+i and its bottom node m+j is
        // n+m+j, so both remap by the same shift of n.
        for (std::size_t i = 1; i < blk.size(); ++i) unite(n + blk[0], n + blk[i]);
    }
    std::map<int, std::vector<int>> comps;
    for (int v = 0; v < total; ++v) comps[find(v)].push_back(v);
    std::vector<std::vector<int>> blocks;
    int removed = 0;
    for (auto& [root, nodes] : comps) {
        std::vector<int> outer;
        for (int v : nodes) {
            if (v < n)
                outer.push_back(v);
            else if (v >= n + m)
                outer.push_back(v - m);  // outer bottom re-indexed to n..n+k-1
        }
        if (outer.empty())
            ++removed;
        else
            blocks.push_back(std::move(outer));
    }
    return {Diagram(n, k, std::move(blocks)), removed};
}

Diagram tensor(const Diagram& p, const Diagram& q) {
    int n = p.source() + q.source();
    int m = p.target() + q.target();
    std::vector<std::vector<int>> blocks;
    for (const auto& blk : p.partition().blocks()) {
        std::vector<int> b;
        for (int v : blk) b.push_back(v < p.source() ? v : n + (v - p.source()));
        blocks.push_back(std::move(b));
    }
    for (const auto& blk : q.partition().blocks()) {
        std::vector<int> b;
        for (int v : blk)
            b.push_back(v < q.source() ? p.source() + v : n + p.target() + (v - q.source()));
        blocks.push_back(std::move(b));
    }
    return Diagram(n, m, std::move(blocks));
}

Diagram flip(const Diagram& p) {
    int n = p.source(), m = p.target();
    std::vector<std::vector<int>> blocks;
    for (const auto& blk : p.partition().blocks()) {
        std::vector<int> b;
        for (int v : blk) b.push_back(v < n ? m + v : v - n);
        blocks.push_back(std::move(b));
    }
    return Diagram(m, n, std::move(blocks));
}

PropVector prop_vector(const Diagram& p, int d) {
    if (d < 1) fail("range", "tonality must be a positive integer");
    if (!p.is_tonal(d)) fail("parity", "prop_vector of a non-tonal diagram");
    PropVector v;
    v.counts.assign(d, 0);
    const auto& part = p.partition();
    for (int b = 0; b < part.block_count(); ++b) {
        int top = part.top_count(b);
        int bottom = part.bottom_count(b);
        if (top == 0 || bottom == 0) continue;  // not propagating
        int cls = top % d;
        if (cls == 0) cls = d;
        ++v.counts[cls - 1];
    }
    return v;
}

namespace {

struct Cursor {
    std::string_view text;
    std::size_t pos = 0;
    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!eat(c))
            fail("syntax", std::string("expected '") + c + "' at byte offset " + std::to_string(pos));
    }
    long integer() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) fail("syntax", "expected integer at byte offset " + std::to_string(start));
        return std::stol(std::string(text.substr(start, pos - start)));
    }
    bool peek_digit() {
        skip_ws();
        return pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]));
    }
};

}  // namespace

Diagram parse_diagram(std::string_view text) {
    Cursor c{text};
    c.expect('P');
    c.expect('[');
    long n = c.integer();
    c.expect(',');
    long m = c.integer();
    c.expect(']');
    c.expect(':');
    std::vector<std::vector<int>> blocks;
    c.skip_ws();
    while (c.pos < c.text.size()) {
        c.expect('(');
        std::vector<int> block;
        while (!c.eat(')')) {
            long v = c.integer();
            bool primed = false;
            if (c.pos < c.text.size() && c.text[c.pos] == '\'') {
                primed = true;
                ++c.pos;
            }
            long limit = primed ? m : n;
            if (v < 1 || v > limit)
                fail("syntax", "node " + std::to_string(v) + (primed ? "'" : "") +
                                   " out of range at byte offset " + std::to_string(c.pos));
            block.push_back(primed ? static_cast<int>(n + v - 1) : static_cast<int>(v - 1));
        }
        if (block.empty()) fail("syntax", "empty block at byte offset " + std::to_string(c.pos));
        blocks.push_back(std::move(block));
        c.skip_ws();
    }
    try {
        return Diagram(static_cast<int>(n), static_cast<int>(m), std::move(blocks));
    } catch (const DomainError& e) {
        fail("syntax", std::string(e.what()) + " (while parsing diagram)");
    }
}

std::string print_diagram(const Diagram& p) {
    std::string s = "P[" + std::to_string(p.source()) + "," + std::to_string(p.target()) + "]:";
    int n = p.source();
    for (const auto& blk : p.partition().blocks()) {
        s += " (";
        bool first = true;
        for (int v : blk) {
            if (!first) s += ' ';
            first = false;
            if (v < n)
                s += std::to_string(v + 1);
            else
                s += std::to_string(v - n + 1) + "'";
        }
        s += ')';
    }
    return s;
}

}  // namespace partalg
