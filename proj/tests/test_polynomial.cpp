#include "doctest.h"

#include <random>

#include "wp/polynomial.hpp"

using namespace wp;

TEST_CASE("arithmetic basics") {
    Polynomial p({1, 2});
    CHECK(p * p == Polynomial({1, 4, 4}));
    CHECK(p * Polynomial::one() == p);
    CHECK(Polynomial({1, 1}) * Polynomial({1, 1, 1}) == Polynomial({1, 2, 2, 1}));
    CHECK(p.pow(0) == Polynomial::one());
    CHECK(p.pow(3) == p * p * p);
    CHECK(Polynomial({1, 2}).text() == "1 2");
    CHECK(Polynomial::zero().text() == "0");
}

TEST_CASE("multiplication is commutative and associative") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 100; ++trial) {
        auto rand_poly = [&]() {
            std::vector<mpz_class> c(1 + rng() % 6);
            for (auto& x : c) x = long(rng() % 50);
            return Polynomial(std::move(c));
        };
        Polynomial a = rand_poly(), b = rand_poly(), c = rand_poly();
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
    }
}

TEST_CASE("compose_shifted computes p(q(x)-1)") {
    // 1 + m(q-1) for linear p
    Polynomial q({1, 9, 20, 8});
    Polynomial expected({0, 9 * 7, 20 * 7, 8 * 7});
    expected += Polynomial::one();
    CHECK(compose_shifted(Polynomial({1, 7}), q) == expected);

    // identity substitution
    Polynomial p({1, 3, 5, 2});
    CHECK(compose_shifted(p, Polynomial({1, 1})) == p);

    CHECK(compose_shifted(Polynomial({1, 2}), Polynomial({1, 2, 1})) == Polynomial({1, 4, 2}));

    CHECK_THROWS_AS(compose_shifted(p, Polynomial({2, 1})), std::invalid_argument);
}

TEST_CASE("compose_shifted agrees with evaluation") {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<mpz_class> pc(1 + rng() % 4), qc(1 + rng() % 4);
        for (auto& x : pc) x = long(rng() % 20);
        qc[0] = 1;
        for (size_t i = 1; i < qc.size(); ++i) qc[i] = long(rng() % 20);
        Polynomial p(std::move(pc)), q(std::move(qc));
        for (long t = 0; t <= 3; ++t) {
            mpz_class direct = p.eval(q.eval(t) - 1);
            CHECK(compose_shifted(p, q).eval(t) == direct);
        }
    }
}

TEST_CASE("log-concavity checks") {
    CHECK(is_log_concave(Polynomial({1, 9, 20, 8})).log_concave);
    auto bad = is_log_concave(Polynomial({1, 272, 1488, 8192, 20048}));
    CHECK(!bad.log_concave);
    CHECK(bad.violating_k == 2);
    CHECK(is_log_concave(Polynomial({1, 1, 1})).log_concave);
    CHECK(is_log_concave(Polynomial({5})).log_concave);
    // a zero between positives breaks the literal inequality
    CHECK(!is_log_concave(Polynomial({1, 0, 1})).log_concave);
}

TEST_CASE("unimodality checks") {
    auto r = is_unimodal(Polynomial({1, 5, 5}));
    CHECK(r.unimodal);
    CHECK(r.mode == 1);
    CHECK(!is_unimodal(Polynomial({1, 3, 2, 3})).unimodal);
    CHECK(is_unimodal(Polynomial({2, 1})).unimodal);
    CHECK(is_unimodal(Polynomial({2, 1})).mode == 0);
}

TEST_CASE("positive log-concave sequences are unimodal") {
    std::mt19937_64 rng(31);
    int generated = 0;
    while (generated < 500) {
        std::vector<mpz_class> c(2 + rng() % 7);
        for (auto& x : c) x = 1 + long(rng() % 1000);
        Polynomial p(std::move(c));
        if (!is_log_concave(p).log_concave) continue;
        ++generated;
        CHECK(is_unimodal(p).unimodal);
    }
}

TEST_CASE("product of positive log-concave polynomials is log-concave") {
    std::mt19937_64 rng(37);
    int generated = 0;
    while (generated < 300) {
        auto rand_lc = [&]() -> Polynomial {
            std::vector<mpz_class> c(1 + rng() % 5);
            for (auto& x : c) x = 1 + long(rng() % 30);
            return Polynomial(std::move(c));
        };
        Polynomial a = rand_lc(), b = rand_lc();
        if (!is_log_concave(a).log_concave || !is_log_concave(b).log_concave) continue;
        ++generated;
        CHECK(is_log_concave(a * b).log_concave);
    }
}

TEST_CASE("top coefficient bound") {
    CHECK(top_coefficient_bound_holds(Polynomial({1, 5, 5}), 5));       // 10 <= 25
    CHECK(top_coefficient_bound_holds(Polynomial({1, 7}), 7));          // 7 <= 7
    CHECK(top_coefficient_bound_holds(Polynomial({1, 9, 20, 8}), 9));   // 24 <= 180
    CHECK(!top_coefficient_bound_holds(Polynomial({1, 1, 9}), 2));      // 18 > 2
    CHECK_THROWS_AS(top_coefficient_bound_holds(Polynomial({3}), 5), std::invalid_argument);
}

TEST_CASE("quasi-regular coefficient upper bounds") {
    CHECK(quasireg_coefficient_bounds_hold(Polynomial({1, 5, 5}), 5, Rational(3, 2)));
    CHECK(quasireg_coefficient_bounds_hold(Polynomial({1, 7}), 7, Rational(6)));
    // figure-2 fixture at q=5: n=9, lambda*=3/2
    CHECK(quasireg_coefficient_bounds_hold(Polynomial({1, 9, 20, 8}), 9, Rational(3, 2)));
    // k=1 gives 2*s_2 = 8 > (2 - 2)*s_1 = 0
    CHECK(!quasireg_coefficient_bounds_hold(Polynomial({1, 2, 4}), 2, Rational(1)));
}

TEST_CASE("wp growth lower bounds") {
    CHECK(wp_coefficient_bounds_hold(Polynomial({1, 5, 5}), 2, 2));   // 2*1*5 <= 2*5
    CHECK(wp_coefficient_bounds_hold(Polynomial({1, 4}), 1, 4));      // vacuous
    CHECK(!wp_coefficient_bounds_hold(Polynomial({1, 5, 1}), 2, 2));  // 10 > 2
}

TEST_CASE("interval classification") {
    CHECK(log_concavity_interval(12, 3, 3) == IntervalCase::CaseA);
    CHECK(log_concavity_interval(9, 3, 1) == IntervalCase::Outside);
    CHECK(log_concavity_interval(10, 5, 1) == IntervalCase::Outside);

    // p=1, alpha=3: the CaseA window is exactly [6, 7]
    CHECK(log_concavity_interval(6, 3, 1) == IntervalCase::CaseA);
    CHECK(log_concavity_interval(7, 3, 1) == IntervalCase::CaseA);
    CHECK(log_concavity_interval(8, 3, 1) == IntervalCase::Outside);
    CHECK(log_concavity_interval(5, 3, 1) == IntervalCase::Outside);

    // p=3, alpha=2: CaseB window is (6+2*sqrt(8), (5*3+1)/1] = [12, 16]
    CHECK(log_concavity_interval(12, 2, 3) == IntervalCase::CaseB);
    CHECK(log_concavity_interval(16, 2, 3) == IntervalCase::CaseB);
    CHECK(log_concavity_interval(17, 2, 3) == IntervalCase::Outside);
    CHECK(log_concavity_interval(11, 2, 3) == IntervalCase::CaseA);  // 11 <= 6+2sqrt8

    // exact boundary where p*alpha + p is a perfect square: p=2, alpha=7
    // puts the root bound at 14 + 8 = 22, CaseA needs n >= 21
    CHECK(log_concavity_interval(21, 7, 2) == IntervalCase::CaseA);
    CHECK(log_concavity_interval(22, 7, 2) == IntervalCase::CaseA);
    CHECK(log_concavity_interval(23, 7, 2) == IntervalCase::Outside);  // B needs 42 <= 16
}
