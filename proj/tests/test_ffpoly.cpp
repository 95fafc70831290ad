#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "combalg/ffpoly.hpp"
#include "combalg/rng.hpp"

using namespace combalg;
using namespace combalg::ffpoly;

namespace {

MultiPoly random_poly(Rng& rng, std::uint32_t p, std::uint32_t n, unsigned max_deg, unsigned terms) {
    MultiPoly f(p, n);
    for (unsigned t = 0; t < terms; ++t) {
        Exponents e(n);
        for (auto& ei : e) ei = static_cast<std::uint32_t>(rng.below(max_deg + 1));
        f.add_term(e, static_cast<std::uint32_t>(rng.below(p)));
    }
    return f;
}

}  // namespace

TEST_CASE("poly_eval") {
    MultiPoly f = MultiPoly::variable(3, 2, 0) + MultiPoly::variable(3, 2, 1);
    CHECK(f.eval({1, 2}) == 0);

    CHECK(MultiPoly::constant(5, 3, 4).eval({0, 1, 2}) == 4);

    // x1^2 x2 mod 5 at (2,3) -> 12 -> 2
    MultiPoly g(5, 2);
    g.add_term({2, 1}, 1);
    CHECK(g.eval({2, 3}) == 2);

    CHECK_THROWS_AS(g.eval({1}), std::invalid_argument);
}

TEST_CASE("multilinear_reduce") {
    MultiPoly f(3, 1);
    f.add_term({2}, 1);
    f.add_term({1}, 1);
    MultiPoly r = multilinear_reduce(f);
    CHECK(r.term_count() == 1);
    CHECK(r.coeff({1}) == 2);

    MultiPoly g(5, 2);
    g.add_term({1, 3}, 1);
    MultiPoly gr = multilinear_reduce(g);
    CHECK(gr.coeff({1, 1}) == 1);
    CHECK(gr.term_count() == 1);

    // agrees with the original on every 0/1 point
    Rng rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        MultiPoly h = random_poly(rng, 3, 3, 4, 6);
        MultiPoly hr = multilinear_reduce(h);
        std::vector<std::uint32_t> x(3, 0);
        do {
            CHECK(h.eval(x) == hr.eval(x));
        } while (next_tuple(x, 2));
    }
}

TEST_CASE("count_roots_brute") {
    MultiPoly f = MultiPoly::variable(3, 2, 0) * MultiPoly::variable(3, 2, 1);
    CHECK(count_roots_brute(f) == 5);  // x=0 or y=0: 3+3-1

    CHECK(count_roots_brute(MultiPoly::constant(7, 2, 3)) == 0);

    // x^2 + x mod 2 vanishes everywhere as a function; its count is q^n and
    // the bound 2 * 2^0 = 2 still holds at degree 2
    MultiPoly fermat(2, 1);
    fermat.add_term({2}, 1);
    fermat.add_term({1}, 1);
    CHECK(count_roots_brute(fermat) == 2);

    MultiPoly big(2, 1);
    CHECK_THROWS_AS(count_roots_brute(big, 1), std::invalid_argument);

    Rng rng(23);
    for (int trial = 0; trial < 60; ++trial) {
        std::uint32_t p = (trial % 2 == 0) ? 3 : 5;
        MultiPoly h = random_poly(rng, p, 2, 2, 4);
        if (h.is_zero()) continue;
        std::uint64_t zeros = count_roots_brute(h);
        CHECK(zeros <= static_cast<std::uint64_t>(h.total_degree()) * p);
    }
}

TEST_CASE("monomial_count matches enumeration") {
    CHECK(monomial_count(2, 2) == 6);
    CHECK(monomial_count(0, 7) == 1);
    CHECK(monomial_count(3, 3) == 20);
    for (unsigned d = 0; d <= 4; ++d)
        for (unsigned n = 1; n <= 4; ++n)
            CHECK(monomial_count(d, n) == Int(static_cast<unsigned long>(monomials_up_to(d, n).size())));
}

TEST_CASE("vanishing_poly") {
    // 5 points in F_3^2, degree-2 space has dimension 6 -> nonzero kernel
    PointSetFq pts{3, 2, {{0, 0}, {1, 0}, {0, 1}, {1, 1}, {2, 2}}};
    auto f = vanishing_poly(pts, 2);
    REQUIRE(f.has_value());
    CHECK_FALSE(f->is_zero());
    for (const auto& pt : pts.points) CHECK(f->eval(pt) == 0);

    // empty point set, D=0 -> the constant 1
    PointSetFq none{3, 2, {}};
    auto c = vanishing_poly(none, 0);
    REQUIRE(c.has_value());
    CHECK(c->total_degree() == 0);

    // all 9 points of F_3^2: degree <= 2 evaluates injectively, no kernel
    PointSetFq all{3, 2, {}};
    std::vector<std::uint32_t> x(2, 0);
    do {
        all.points.push_back(x);
    } while (next_tuple(x, 3));
    CHECK_FALSE(vanishing_poly(all, 2).has_value());
}

TEST_CASE("is_kakeya") {
    PointSetFq all{3, 2, {}};
    std::vector<std::uint32_t> x(2, 0);
    do {
        all.points.push_back(x);
    } while (next_tuple(x, 3));
    CHECK(is_kakeya(all).is_kakeya);

    PointSetFq one_line{3, 2, {{0, 0}, {0, 1}, {0, 2}}};
    auto r = is_kakeya(one_line);
    CHECK_FALSE(r.is_kakeya);
    REQUIRE(r.missing_direction.has_value());
    CHECK(*r.missing_direction == std::vector<std::uint32_t>{1, 0});

    // F_3^2 minus the origin still has a line in every direction
    PointSetFq punctured{3, 2, {}};
    for (const auto& pt : all.points)
        if (!(pt[0] == 0 && pt[1] == 0)) punctured.points.push_back(pt);
    CHECK(is_kakeya(punctured).is_kakeya);
}

TEST_CASE("is_kakeya agrees with the definition-literal oracle") {
    Rng rng(31);
    for (auto [p, n] : std::vector<std::pair<std::uint32_t, unsigned>>{{2, 2}, {3, 2}, {2, 3}, {3, 4}, {5, 2}}) {
        for (int trial = 0; trial < 40; ++trial) {
            PointSetFq a{p, n, {}};
            std::vector<std::uint32_t> x(n, 0);
            do {
                if (rng.below(3) != 0) a.points.push_back(x);
            } while (next_tuple(x, p));
            auto fast = is_kakeya(a);
            auto slow = is_kakeya_literal(a);
            CHECK(fast.is_kakeya == slow.is_kakeya);
        }
    }
}

TEST_CASE("kakeya_min_brute") {
    CHECK(kakeya_min_brute(2, 1) == 2);
    CHECK(kakeya_min_brute(2, 2) >= 3);
    std::size_t m32 = kakeya_min_brute(3, 2);
    CHECK(m32 >= 6);
    CHECK_THROWS_AS(kakeya_min_brute(5, 2), std::invalid_argument);
}

TEST_CASE("power_sum") {
    CHECK(power_sum(5, 2) == 0);
    CHECK(power_sum(3, 2) == 2);
    CHECK(power_sum(7, 3) == 0);
    for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u})
        for (std::uint64_t r = 1; r < 2 * p; ++r) {
            std::uint32_t expected = (r % (p - 1) == 0) ? p - 1 : 0;
            CHECK(power_sum(p, r) == expected);
        }
}

TEST_CASE("chevalley_warning_count") {
    MultiPoly f = MultiPoly::variable(3, 3, 0) + MultiPoly::variable(3, 3, 1) + MultiPoly::variable(3, 3, 2);
    CHECK(chevalley_warning_count(3, 3, {f}) == 9);

    CHECK(chevalley_warning_count(3, 2, {}) == 9);

    // x1 x2 - 1 mod 3 in three variables: (x1,x2) in {(1,1),(2,2)}, x3 free
    MultiPoly g(3, 3);
    g.add_term({1, 1, 0}, 1);
    g.add_term({0, 0, 0}, 2);
    CHECK(chevalley_warning_count(3, 3, {g}) == 6);

    MultiPoly other(5, 3);
    CHECK_THROWS_AS(chevalley_warning_count(3, 3, {f, other}), std::invalid_argument);
}

TEST_CASE("chevalley_warning invariant on random low-degree systems") {
    Rng rng(47);
    for (auto [p, n] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 4}, {3, 3}, {5, 2}}) {
        for (int trial = 0; trial < 40; ++trial) {
            std::vector<MultiPoly> sys;
            unsigned budget = n - 1;
            while (budget > 0) {
                unsigned d = 1 + static_cast<unsigned>(rng.below(budget));
                MultiPoly f(p, n);
                for (int t = 0; t < 4; ++t) {
                    Exponents e(n, 0);
                    unsigned rem = d;
                    for (std::uint32_t i = 0; i < n && rem > 0; ++i) {
                        unsigned k = static_cast<unsigned>(rng.below(rem + 1));
                        e[i] = k;
                        rem -= k;
                    }
                    f.add_term(e, static_cast<std::uint32_t>(rng.below(p)));
                }
                if (f.total_degree() < 1) continue;
                budget -= static_cast<unsigned>(f.total_degree());
                sys.push_back(f);
            }
            std::uint64_t count = chevalley_warning_count(p, n, sys);
            CHECK(count % p == 0);
        }
    }
}

TEST_CASE("lucas_binom") {
    CHECK(lucas_binom(5, 2, 3) == 1);
    CHECK(lucas_binom(123, 0, 7) == 1);
    CHECK(lucas_binom(4, 2, 2) == 0);
    for (std::uint32_t p : {2u, 3u, 5u, 7u})
        for (std::uint64_t a = 0; a <= 40; ++a)
            for (std::uint64_t b = 0; b <= a; ++b) {
                Int exact = binomial(a, b);
                CHECK(lucas_binom(a, b, p) == mpz_fdiv_ui(exact.get_mpz_t(), p));
            }
}

TEST_CASE("fermat_check") {
    CHECK(fermat_check(2, 5));
    CHECK(fermat_check(0, 7));
    CHECK(fermat_check(6, 7));
    for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u})
        for (std::uint64_t a = 0; a < 30; ++a) CHECK(fermat_check(a, p));
}
