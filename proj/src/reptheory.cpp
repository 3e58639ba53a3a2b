#include "partalg/reptheory.hpp"

#include <algorithm>
#include <functional>
#include <limits>

#include "partalg/error.hpp"

namespace partalg {

int partition_weight(const IntPartition& p) {
    int w = 0;
    for (int v : p) w += v;
    return w;
}

std::string partition_text(const IntPartition& p) {
    std::string s = "(";
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(p[i]);
    }
    return s + ")";
}

std::vector<IntPartition> partitions_of(int m) {
    std::vector<IntPartition> out;
    IntPartition cur;
    std::function<void(int, int)> rec = [&](int rest, int maxpart) {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (int v = std::min(rest, maxpart); v >= 1; --v) {
            cur.push_back(v);
            rec(rest - v, v);
            cur.pop_back();
        }
    };
    if (m < 0) fail("range", "partitions of a negative integer");
    rec(m, m == 0 ? 1 : m);
    return out;
}

std::vector<IntPartition> add_box(const IntPartition& p) {
    std::vector<IntPartition> out;
    for (std::size_t i = 0; i <= p.size(); ++i) {
        int cur = i < p.size() ? p[i] : 0;
        int above = i == 0 ? std::numeric_limits<int>::max() : p[i - 1];
        if (cur + 1 <= above) {
            IntPartition q = p;
            if (i < q.size())
                ++q[i];
            else
                q.push_back(1);
            out.push_back(std::move(q));
        }
    }
    return out;
}

std::vector<IntPartition> remove_box(const IntPartition& p) {
    std::vector<IntPartition> out;
    for (std::size_t i = 0; i < p.size(); ++i) {
        int below = i + 1 < p.size() ? p[i + 1] : 0;
        if (p[i] - 1 >= below) {
            IntPartition q = p;
            if (--q[i] == 0) q.pop_back();
            out.push_back(std::move(q));
        }
    }
    return out;
}

Int specht_dim(const IntPartition& lambda) {
    int n = partition_weight(lambda);
    if (n == 0) return 1;
    Int hooks = 1;
    std::vector<int> conj(lambda.empty() ? 0 : lambda[0], 0);
    for (int row : lambda)
        for (int c = 0; c < row; ++c) ++conj[c];
    for (std::size_t i = 0; i < lambda.size(); ++i)
        for (int j = 0; j < lambda[i]; ++j) {
            int arm = lambda[i] - j - 1;
            int leg = conj[j] - static_cast<int>(i) - 1;
            hooks *= Int(arm + leg + 1);
        }
    Int q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), factorial(n).get_mpz_t(), hooks.get_mpz_t());
    if (r != 0) fail("internal", "hook length formula failed");
    return q;
}

bool Label::operator<(const Label& o) const {
    if (rank() != o.rank()) return rank() < o.rank();
    if (lambda != o.lambda) return lambda < o.lambda;
    return mu < o.mu;
}

std::string Label::text() const {
    std::string s = partition_text(lambda);
    if (mu) s += "|" + partition_text(*mu);
    return s;
}

bool gamma_member(const GammaPoint& p, int d, int n) {
    if (p.l < 0 || p.m < 0) return false;
    long used = p.l + 2 * p.m;  // sum i*m_i for d = 2
    if (d != 2) fail("range", "gamma membership implemented for d = 2");
    long rest = n - used;
    return rest >= 0 && rest % d == 0;
}

bool gamma_leq(const GammaPoint& a, const GammaPoint& b, int d) {
    if (d != 2) fail("range", "gamma_leq implemented for d = 2");
    // X_2 = {(-2,1), (0,-1)}. Solve a - b = s*(-2,1) + t*(0,-1), s,t in N0.
    long dl = a.l - b.l;
    long dm = a.m - b.m;
    if (dl > 0 || dl % 2 != 0) return false;
    long s = -dl / 2;
    long t = s - dm;
    return t >= 0;
}

std::vector<Label> index_set(Algebra algebra, int n, bool delta_zero) {
    std::vector<Label> out;
    if (algebra == Algebra::ordinary) {
        for (int r = n; r >= 0; --r)
            for (auto& lam : partitions_of(r)) out.push_back(Label{lam, std::nullopt});
    } else {
        for (long m = 0; 2 * m <= n; ++m)
            for (long l = 0; l + 2 * m <= n; ++l) {
                if (!gamma_member(GammaPoint{l, m}, 2, n)) continue;
                for (auto& lam : partitions_of(static_cast<int>(l)))
                    for (auto& mu : partitions_of(static_cast<int>(m)))
                        out.push_back(Label{lam, mu});
            }
    }
    if (delta_zero) {
        // The minimal label overcounts the simples at delta = 0.
        std::erase_if(out, [&](const Label& lab) {
            if (algebra == Algebra::tonal)
                return n % 2 == 0 && lab.rank() == 0;
            return n >= 1 && lab.rank() == 0;
        });
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::map<Label, int> restrict_label(const Label& label, Algebra algebra) {
    std::map<Label, int> out;
    if (algebra == Algebra::ordinary) {
        if (label.mu) fail("shape", "ordinary labels carry no mu partition");
        // Half steps: mu in {lambda} u lambda-box, then nu in {mu} u mu+box.
        std::vector<IntPartition> mids = remove_box(label.lambda);
        mids.push_back(label.lambda);
        for (const auto& mid : mids) {
            ++out[Label{mid, std::nullopt}];
            for (auto& up : add_box(mid)) ++out[Label{up, std::nullopt}];
        }
    } else {
        if (!label.mu) fail("shape", "tonal labels need a mu partition");
        const auto& lam = label.lambda;
        const auto& mu = *label.mu;
        for (auto& lp : add_box(lam)) {
            for (auto& mm : remove_box(mu)) ++out[Label{lp, mm}];
            ++out[Label{lp, mu}];
        }
        for (auto& lm : remove_box(lam)) {
            ++out[Label{lm, mu}];
            for (auto& mp : add_box(mu)) ++out[Label{lm, mp}];
        }
    }
    return out;
}

namespace {

Int top_rank_dim(Algebra algebra, int n, const Label& label) {
    if (algebra == Algebra::ordinary) return specht_dim(label.lambda);
    int m1 = partition_weight(label.lambda);
    int m2 = partition_weight(*label.mu);
    // Ways to split the n nodes into m1 singletons and m2 pairs.
    Int placement = factorial(n) / (factorial(m1) * pow_int(2, m2) * factorial(m2));
    return specht_dim(label.lambda) * specht_dim(*label.mu) * placement;
}

}  // namespace

BratelliGraph bratelli(Algebra algebra, int n_max) {
    if (n_max < 0) fail("range", "bratelli needs n_max >= 0");
    BratelliGraph g;
    g.algebra = algebra;
    g.levels.resize(n_max + 1);
    std::vector<std::map<Label, std::size_t>> pos(n_max + 1);
    for (int n = 0; n <= n_max; ++n) {
        auto labels = index_set(algebra, n, false);
        for (auto& lab : labels) {
            pos[n].emplace(lab, g.levels[n].size());
            g.levels[n].push_back({lab, Int(0)});
        }
    }
    for (int n = 0; n <= n_max; ++n) {
        for (std::size_t i = 0; i < g.levels[n].size(); ++i) {
            auto& node = g.levels[n][i];
            if (node.label.rank() == n) {
                node.dim = top_rank_dim(algebra, n, node.label);
            } else {
                node.dim = 0;
            }
            if (n == 0) continue;
            for (const auto& [lower, mult] : restrict_label(node.label, algebra)) {
                auto it = pos[n - 1].find(lower);
                if (it == pos[n - 1].end()) continue;
                g.edges.push_back(
                    {n, static_cast<int>(i), static_cast<int>(it->second), mult});
                if (node.label.rank() != n)
                    node.dim += Int(mult) * g.levels[n - 1][it->second].dim;
            }
        }
    }
    return g;
}

Int standard_dim(Algebra algebra, int n, const Label& label) {
    BratelliGraph g = bratelli(algebra, n);
    for (const auto& node : g.levels[n])
        if (node.label == label) return node.dim;
    fail("range", "label " + label.text() + " is not in the level-" + std::to_string(n) +
                      " index set");
}

SemisimpleReport semisimplicity_verdict(Algebra algebra, const Rat& delta, std::optional<int> n) {
    SemisimpleReport r;
    r.algebra = algebra;
    r.delta = delta;
    r.delta_in_n0 = is_integer(delta) && delta >= 0;
    r.semisimple_all_n = !r.delta_in_n0;
    if (algebra == Algebra::tonal && delta == 0)
        r.note = "at delta=0 the fixed-n algebra is semisimple if and only if n is odd";
    if (n) {
        r.n = n;
        SimplicityRoots roots = spine_simplicity_roots(algebra, *n);
        r.spine_bad_set = roots.closed_form;
        // Spine criterion: necessary for semisimplicity, not a full fixed-n
        // block classification.
        r.spine_simple = true;
        if (is_integer(delta)) {
            long v = delta.get_num().get_si();
            if (r.spine_bad_set.count(v)) r.spine_simple = false;
        }
        if (algebra == Algebra::tonal && delta == 0) {
            r.fixed_n_semisimple_known = true;
            r.fixed_n_semisimple = (*n % 2 == 1);
        }
    }
    return r;
}

}  // namespace partalg
