#include "partalg/polymat.hpp"

#include <algorithm>
#include <utility>

#include "partalg/error.hpp"
#include "partalg/parallel.hpp"

namespace partalg {

namespace {

void check_rectangular(std::size_t rows, std::size_t cols, const auto& m) {
    for (const auto& row : m)
        if (row.size() != cols) fail("range", "matrix is not rectangular");
    (void)rows;
}

}  // namespace

Int bareiss_det(IntMatrix m) {
    std::size_t n = m.size();
    if (n == 0) return 1;
    check_rectangular(n, n, m);
    Int prev(1);
    int sign = 1;
    for (std::size_t k = 0; k < n; ++k) {
        // Full pivoting: any nonzero entry works for exactness.
        std::size_t pr = k, pc = k;
        bool found = false;
        for (std::size_t i = k; i < n && !found; ++i)
            for (std::size_t j = k; j < n; ++j)
                if (m[i][j] != 0) {
                    pr = i;
                    pc = j;
                    found = true;
                    break;
                }
        if (!found) return 0;
        if (pr != k) {
            std::swap(m[pr], m[k]);
            sign = -sign;
        }
        if (pc != k) {
            for (std::size_t i = 0; i < n; ++i) std::swap(m[i][pc], m[i][k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Int t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : Int(-m[n - 1][n - 1]);
}

int integer_rank(IntMatrix m) {
    std::size_t rows = m.size();
    if (rows == 0) return 0;
    std::size_t cols = m[0].size();
    check_rectangular(rows, cols, m);
    Int prev(1);
    std::size_t k = 0;
    std::size_t limit = std::min(rows, cols);
    while (k < limit) {
        std::size_t pr = k, pc = k;
        bool found = false;
        for (std::size_t i = k; i < rows && !found; ++i)
            for (std::size_t j = k; j < cols; ++j)
                if (m[i][j] != 0) {
                    pr = i;
                    pc = j;
                    found = true;
                    break;
                }
        if (!found) break;
        std::swap(m[pr], m[k]);
        if (pc != k)
            for (std::size_t i = 0; i < rows; ++i) std::swap(m[i][pc], m[i][k]);
        for (std::size_t i = k + 1; i < rows; ++i) {
            for (std::size_t j = k + 1; j < cols; ++j) {
                Int t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
        ++k;
    }
    return static_cast<int>(k);
}

Poly det_via_evaluation(const PolyMatrix& m, int degree_bound, const Config& cfg) {
    std::size_t n = m.size();
    if (n == 0) return Poly::constant(1);
    check_rectangular(n, n, m);
    for (const auto& row : m)
        for (const auto& e : row)
            if (!e.is_integral()) fail("range", "determinant pipeline expects integral entries");
    int points = degree_bound + 1;
    std::vector<Int> values(points);
    parallel_for(points, cfg.effective_threads(), [&](std::size_t idx) {
        Int x(static_cast<long>(idx));
        IntMatrix mx(n, std::vector<Int>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) mx[i][j] = m[i][j].eval_int(x);
        values[idx] = bareiss_det(std::move(mx));
    });
    std::vector<std::pair<Rat, Rat>> pts(points);
    for (int i = 0; i < points; ++i) pts[i] = {Rat(static_cast<long>(i)), Rat(values[i])};
    Poly det = Poly::interpolate(pts);
    if (det.degree() > degree_bound)
        fail("internal", "interpolated determinant exceeds the degree bound");
    if (!det.is_integral())
        fail("internal", "interpolated determinant has a fractional coefficient");
    return det;
}

Poly det_poly_direct(PolyMatrix m) {
    std::size_t n = m.size();
    if (n == 0) return Poly::constant(1);
    check_rectangular(n, n, m);
    Poly prev = Poly::constant(1);
    int sign = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pr = n;
        for (std::size_t i = k; i < n; ++i)
            if (!m[i][k].is_zero() && (pr == n || m[i][k].degree() < m[pr][k].degree())) pr = i;
        if (pr == n) return Poly();
        if (pr != k) {
            std::swap(m[pr], m[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = Poly::div_exact(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
            m[i][k] = Poly();
        }
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

int rank_at(const PolyMatrix& m, const Rat& x) {
    std::size_t rows = m.size();
    if (rows == 0) return 0;
    std::size_t cols = m[0].size();
    check_rectangular(rows, cols, m);
    // Clear denominators row by row; the rank is unchanged.
    IntMatrix im(rows, std::vector<Int>(cols));
    for (std::size_t i = 0; i < rows; ++i) {
        std::vector<Rat> vals(cols);
        Int lcm(1);
        for (std::size_t j = 0; j < cols; ++j) {
            vals[j] = m[i][j].eval(x);
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), vals[j].get_den().get_mpz_t());
        }
        for (std::size_t j = 0; j < cols; ++j) {
            Rat scaled = vals[j] * Rat(lcm);
            im[i][j] = scaled.get_num();
        }
    }
    return integer_rank(std::move(im));
}

SmithForm smith_form(PolyMatrix m) {
    std::size_t rows = m.size();
    std::size_t cols = rows == 0 ? 0 : m[0].size();
    check_rectangular(rows, cols, m);
    std::size_t limit = std::min(rows, cols);
    std::vector<Poly> diag;
    std::size_t k = 0;
    while (k < limit) {
        // Pivot: nonzero entry of minimal degree in the trailing submatrix.
        std::size_t pr = rows, pc = cols;
        for (std::size_t i = k; i < rows; ++i)
            for (std::size_t j = k; j < cols; ++j)
                if (!m[i][j].is_zero() &&
                    (pr == rows || m[i][j].degree() < m[pr][pc].degree())) {
                    pr = i;
                    pc = j;
                }
        if (pr == rows) break;
        std::swap(m[pr], m[k]);
        if (pc != k)
            for (std::size_t i = 0; i < rows; ++i) std::swap(m[i][pc], m[i][k]);
        bool clean = true;
        for (std::size_t i = k + 1; i < rows; ++i) {
            if (m[i][k].is_zero()) continue;
            auto [q, r] = Poly::div_rem(m[i][k], m[k][k]);
            for (std::size_t j = k; j < cols; ++j) m[i][j] -= q * m[k][j];
            if (!m[i][k].is_zero()) clean = false;  // degree dropped; re-pivot
        }
        for (std::size_t j = k + 1; j < cols; ++j) {
            if (m[k][j].is_zero()) continue;
            auto [q, r] = Poly::div_rem(m[k][j], m[k][k]);
            for (std::size_t i = k; i < rows; ++i) m[i][j] -= m[i][k] * q;
            if (!m[k][j].is_zero()) clean = false;
        }
        if (!clean) continue;
        // Pivot must divide every remaining entry; otherwise fold one in.
        bool divides_all = true;
        for (std::size_t i = k + 1; i < rows && divides_all; ++i)
            for (std::size_t j = k + 1; j < cols; ++j) {
                auto [q, r] = Poly::div_rem(m[i][j], m[k][k]);
                if (!r.is_zero()) {
                    for (std::size_t c = k; c < cols; ++c) m[k][c] += m[i][c];
                    divides_all = false;
                    break;
                }
            }
        if (!divides_all) continue;
        diag.push_back(m[k][k].monic());
        ++k;
    }
    SmithForm s;
    s.invariant_factors = std::move(diag);
    s.invariant_factors.resize(limit, Poly::zero());
    return s;
}

}  // namespace partalg
