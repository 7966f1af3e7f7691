#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "repfuse/heisenberg.hpp"

using namespace repfuse;

namespace {

HnElementQ hq(Rational p, Rational q, Rational t) { return {{p}, {q}, t}; }
HnElementR hr(double p, double q, double t) { return {{p}, {q}, t}; }

HnElementQ random_exact(std::mt19937& rng, size_t n) {
    std::uniform_int_distribution<long long> num(-8, 8);
    std::uniform_int_distribution<long long> den(1, 5);
    HnElementQ x;
    for (size_t i = 0; i < n; ++i) {
        x.p.push_back(Rational(num(rng), den(rng)));
        x.q.push_back(Rational(num(rng), den(rng)));
    }
    x.t = Rational(num(rng), den(rng));
    return x;
}

}  // namespace

TEST_CASE("group law on the printed example") {
    auto prod = hn_multiply(hq(1, 0, 0), hq(0, 1, 0));
    CHECK(prod.p[0] == Rational(1));
    CHECK(prod.q[0] == Rational(1));
    CHECK(prod.t == Rational(1));  // t + p.q' + t' = 0 + 1 + 0
}

TEST_CASE("identity and inverse") {
    auto e = hn_identity<Rational>(1);
    auto x = hq(Rational(5, 3), Rational(-2), Rational(7, 2));
    CHECK(hn_multiply(e, x).t == x.t);
    CHECK(hn_multiply(e, x).p == x.p);

    auto inv = hn_inverse(hq(1, 1, 0));
    CHECK(inv.p[0] == Rational(-1));
    CHECK(inv.q[0] == Rational(-1));
    CHECK(inv.t == Rational(1));

    auto central = hn_inverse(hq(0, 0, 5));
    CHECK(central.t == Rational(-5));

    auto zero = hn_inverse(hq(0, 0, 0));
    CHECK(zero.t == Rational(0));
}

TEST_CASE("inverse and associativity hold exactly for random rational elements") {
    std::mt19937 rng(12);
    for (size_t n : {1u, 2u, 3u}) {
        for (int trial = 0; trial < 100; ++trial) {
            auto a = random_exact(rng, n);
            auto b = random_exact(rng, n);
            auto c = random_exact(rng, n);
            auto e = hn_identity<Rational>(n);

            auto lhs = hn_multiply(hn_multiply(a, b), c);
            auto rhs = hn_multiply(a, hn_multiply(b, c));
            CHECK(lhs.p == rhs.p);
            CHECK(lhs.q == rhs.q);
            CHECK(lhs.t == rhs.t);

            auto prod = hn_multiply(a, hn_inverse(a));
            CHECK(prod.p == e.p);
            CHECK(prod.q == e.q);
            CHECK(prod.t == e.t);
        }
    }
}

TEST_CASE("the centre is exactly the kernel of the quotient projection") {
    std::mt19937 rng(13);
    for (int trial = 0; trial < 100; ++trial) {
        auto a = random_exact(rng, 2);
        HnElementQ z{{Rational(0), Rational(0)}, {Rational(0), Rational(0)}, Rational(trial - 50)};
        CHECK(hn_commutes(a, z));

        // quotient_project is a homomorphism onto R^{2n}
        auto b = random_exact(rng, 2);
        auto pab = quotient_project(hn_multiply(a, b));
        auto pa = quotient_project(a);
        auto pb = quotient_project(b);
        for (size_t i = 0; i < pab.size(); ++i) CHECK(pab[i] == pa[i] + pb[i]);

        // elements with nonzero projection are not central
        if (pa != std::vector<Rational>(4, Rational(0))) {
            bool central = true;
            for (int probe = 0; probe < 8 && central; ++probe)
                central = hn_commutes(a, random_exact(rng, 2));
            CHECK_FALSE(central);
        }
    }
    CHECK(quotient_project(hq(1, 2, 7)) == std::vector<Rational>{Rational(1), Rational(2)});
    CHECK(quotient_project(hq(0, 0, 9)) == std::vector<Rational>{Rational(0), Rational(0)});
}

TEST_CASE("characters are unimodular, multiplicative, and trivial on the centre") {
    CharacterParams zero{{0.0}, {0.0}};
    CHECK(character_eval(zero, hr(2.5, -3.0, 7.0)) == std::complex<double>(1.0, 0.0));

    CharacterParams ones{{1.0}, {1.0}};
    auto v = character_eval(ones, hr(std::numbers::pi, 0.0, 5.0));
    CHECK(std::abs(v - std::complex<double>(-1.0, 0.0)) < 1e-12);

    std::mt19937 rng(14);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    for (int trial = 0; trial < 50; ++trial) {
        CharacterParams c{{u(rng)}, {u(rng)}};
        CharacterParams c2{{u(rng)}, {u(rng)}};
        auto a = hr(u(rng), u(rng), u(rng));
        auto b = hr(u(rng), u(rng), u(rng));
        CHECK(std::abs(std::abs(character_eval(c, a)) - 1.0) < 1e-14);
        // multiplicative in the group argument
        CHECK(std::abs(character_eval(c, hn_multiply(a, b)) -
                       character_eval(c, a) * character_eval(c, b)) < 1e-12);
        // additive in the parameter
        CharacterParams sum{{c.xi[0] + c2.xi[0]}, {c.eta[0] + c2.eta[0]}};
        CHECK(std::abs(character_eval(sum, a) -
                       character_eval(c, a) * character_eval(c2, a)) < 1e-12);
        // trivial on the centre
        CHECK(std::abs(character_eval(c, hr(0.0, 0.0, u(rng))) - 1.0) < 1e-14);
    }
    CHECK_THROWS_AS(character_eval(ones, HnElementR{{1.0, 2.0}, {0.0, 0.0}, 0.0}),
                    std::invalid_argument);
}

TEST_CASE("dimension mismatch in the group law is rejected") {
    HnElementQ a{{Rational(1)}, {Rational(0)}, Rational(0)};
    HnElementQ b{{Rational(1), Rational(2)}, {Rational(0), Rational(0)}, Rational(0)};
    CHECK_THROWS_AS(hn_multiply(a, b), std::invalid_argument);
}

TEST_CASE("Haar residual vanishes identically for the identity shift") {
    auto box = default_haar_box(1);
    auto bump = haar_test_bump({4.0, 4.0, 4.0});
    CHECK(haar_invariance_residual(bump, hn_identity<double>(1), box) == 0.0);
}

TEST_CASE("left translation preserves the lattice sum of a smooth bump") {
    auto box = default_haar_box(1);
    auto bump = haar_test_bump({4.0, 4.0, 4.0});
    for (auto shift : {hr(1.0, 0.0, 0.0), hr(0.0, 1.0, 0.0), hr(0.0, 0.0, 3.0),
                       hr(0.5, -1.0, 2.0), hr(-1.0, 0.5, -1.5)}) {
        CHECK(haar_invariance_residual(bump, shift, box) <= 1e-6);
    }

    // a truncated Gaussian works as well: its boundary values sit far below
    // the support threshold
    auto gauss = [](const HnElementR& x) {
        return std::exp(-0.5 * (x.p[0] * x.p[0] + x.q[0] * x.q[0] + x.t * x.t));
    };
    CHECK(haar_invariance_residual(gauss, hr(1.0, 0.0, 0.0), box) <= 1e-6);
    CHECK(haar_invariance_residual(gauss, hr(0.0, 0.0, 3.0), box) <= 1e-6);
}

TEST_CASE("Haar residual decreases by at least half under one refinement") {
    auto box = default_haar_box(1);
    auto bump = haar_test_bump({4.0, 4.0, 4.0});
    auto fine = box;
    for (auto& n : fine.points) n *= 2;
    for (auto shift : {hr(1.0, 0.0, 0.0), hr(0.5, -1.0, 2.0)}) {
        double coarse = haar_invariance_residual(bump, shift, box);
        double refined = haar_invariance_residual(bump, shift, fine);
        CHECK(coarse > 0.0);
        CHECK(refined <= 0.5 * coarse);
    }
}

TEST_CASE("support leaving the box is detected") {
    auto box = default_haar_box(1);
    auto bump = haar_test_bump({4.0, 4.0, 4.0});
    CHECK_THROWS_AS(haar_invariance_residual(bump, hr(0.0, 0.0, 9.5), box),
                    std::invalid_argument);
    CHECK_THROWS_AS(haar_invariance_residual(bump, hr(0.0, 0.0, 40.0), box),
                    std::invalid_argument);
    CHECK_THROWS_AS(haar_invariance_residual(bump, hr(4.0, 0.0, 0.0), box),
                    std::invalid_argument);
}
