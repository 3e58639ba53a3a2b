#include <doctest.h>

#include <random>

#include "partalg/polymat.hpp"

using namespace partalg;

namespace {

Poly rand_poly(std::mt19937& rng, int maxdeg) {
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::uniform_int_distribution<int> deg(0, maxdeg);
    std::vector<Rat> cs(deg(rng) + 1);
    for (auto& c : cs) c = coeff(rng);
    return Poly(std::move(cs));
}

PolyMatrix rand_matrix(std::mt19937& rng, int size, int maxdeg) {
    PolyMatrix m(size, std::vector<Poly>(size));
    for (auto& row : m)
        for (auto& e : row) e = rand_poly(rng, maxdeg);
    return m;
}

}  // namespace

TEST_CASE("integer determinants and ranks") {
    CHECK(bareiss_det({{Int(2), Int(1)}, {Int(1), Int(1)}}) == 1);
    CHECK(bareiss_det({{Int(0), Int(1)}, {Int(1), Int(0)}}) == -1);
    CHECK(bareiss_det({{Int(0), Int(0)}, {Int(0), Int(0)}}) == 0);
    CHECK(integer_rank({{Int(1), Int(1)}, {Int(1), Int(1)}}) == 1);
    CHECK(integer_rank({{Int(1), Int(2)}, {Int(2), Int(1)}}) == 2);
    CHECK(integer_rank({{Int(0)}}) == 0);
}

TEST_CASE("determinant pipeline matches direct elimination") {
    std::mt19937 rng(987);
    for (int trial = 0; trial < 12; ++trial) {
        int size = 1 + trial % 4;
        PolyMatrix m = rand_matrix(rng, size, 2);
        int bound = 0;
        for (int i = 0; i < size; ++i) {
            int rowmax = 0;
            for (int j = 0; j < size; ++j) rowmax = std::max(rowmax, m[i][j].degree());
            bound += std::max(rowmax, 0);
        }
        CHECK(det_via_evaluation(m, bound) == det_poly_direct(m));
    }
}

TEST_CASE("rank at a point") {
    PolyMatrix g2{{Poly({0, 0, 1}), Poly({0, 1})}, {Poly({0, 1}), Poly({0, 1})}};
    CHECK(rank_at(g2, 1) == 1);
    CHECK(rank_at(g2, 5) == 2);
    CHECK(rank_at(g2, Rat(1, 2)) == 2);
}

TEST_CASE("smith form basics") {
    Poly d = Poly::delta();
    SUBCASE("already diagonal") {
        PolyMatrix m{{d, Poly::zero()}, {Poly::zero(), d * (d - Poly::constant(1))}};
        SmithForm s = smith_form(m);
        REQUIRE(s.invariant_factors.size() == 2);
        CHECK(s.invariant_factors[0] == d);
        CHECK(s.invariant_factors[1] == d * (d - Poly::constant(1)));
    }
    SUBCASE("zero matrix") {
        PolyMatrix m{{Poly::zero(), Poly::zero()}, {Poly::zero(), Poly::zero()}};
        SmithForm s = smith_form(m);
        REQUIRE(s.invariant_factors.size() == 2);
        CHECK(s.invariant_factors[0].is_zero());
        CHECK(s.invariant_factors[1].is_zero());
    }
    SUBCASE("divisibility chain and determinant product on random matrices") {
        std::mt19937 rng(555);
        for (int trial = 0; trial < 12; ++trial) {
            int size = 2 + trial % 4;  // up to 5x5, entry degree <= 2
            PolyMatrix m = rand_matrix(rng, size, 2);
            SmithForm s = smith_form(m);
            Poly det = det_poly_direct(m);
            Poly prod = Poly::constant(1);
            bool zero = false;
            for (std::size_t i = 0; i + 1 < s.invariant_factors.size(); ++i) {
                if (s.invariant_factors[i].is_zero()) continue;
                if (!s.invariant_factors[i + 1].is_zero()) {
                    auto [q, r] =
                        Poly::div_rem(s.invariant_factors[i + 1], s.invariant_factors[i]);
                    CHECK(r.is_zero());
                }
            }
            for (const auto& f : s.invariant_factors) {
                if (f.is_zero()) zero = true;
                prod *= f;
            }
            if (zero) {
                CHECK(det.is_zero());
            } else {
                REQUIRE(!det.is_zero());
                // Product equals det up to a nonzero rational unit.
                CHECK(prod.monic() == det.monic());
            }
        }
    }
    SUBCASE("rank at a point equals surviving invariant factors") {
        std::mt19937 rng(777);
        for (int trial = 0; trial < 15; ++trial) {
            int size = 2 + trial % 5;  // up to 6x6
            PolyMatrix m = rand_matrix(rng, size, 1);
            SmithForm s = smith_form(m);
            for (long x : {0L, 1L, 2L}) {
                int surviving = 0;
                for (const auto& f : s.invariant_factors)
                    if (!f.is_zero() && f.eval(Rat(x)) != 0) ++surviving;
                CHECK(rank_at(m, Rat(x)) == surviving);
            }
        }
    }
}
