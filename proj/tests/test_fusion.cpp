#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "repfuse/fusion.hpp"

using namespace repfuse;

namespace {

Rational rq(long long n, long long d = 1) { return Rational(n, d); }

RuleSet heis_rules() {
    RuleSet r;
    r.group = GroupTag::Heisenberg;
    return r;
}

RuleSet sl2_rules(bool trivial_identity = true, bool regular_absorbs = true) {
    RuleSet r;
    r.group = GroupTag::SL2R;
    r.trivial_acts_as_identity = trivial_identity;
    r.regular_absorbs_all = regular_absorbs;
    return r;
}

bool fired(const FusionResult& r, const std::string& rule) {
    return std::any_of(r.provenance.begin(), r.provenance.end(),
                       [&](const RuleFiring& f) { return f.rule == rule; });
}

}  // namespace

TEST_CASE("character twist leaves a Schrodinger atom fixed") {
    auto r = fuse_atoms(CharacterRep{{rq(1)}, {rq(2)}}, SchrodingerRep{rq(3, 2)}, heis_rules());
    CHECK(format_component(r.result) == "rho(3/2)");
    CHECK(r.relation == Relation::Equality);
    CHECK(fired(r, "character-twist"));
}

TEST_CASE("Schrodinger parameters add") {
    auto r = fuse_atoms(SchrodingerRep{rq(1, 2)}, SchrodingerRep{rq(1, 2)}, heis_rules());
    CHECK(format_component(r.result) == "rho(1)");
    CHECK(r.relation == Relation::Equality);
    CHECK(fired(r, "schrodinger-sum"));
}

TEST_CASE("opposite Schrodinger parameters cancel into the quotient algebra") {
    auto r = fuse_atoms(SchrodingerRep{rq(1)}, SchrodingerRep{rq(-1)}, heis_rules());
    CHECK(format_component(r.result) == "A(G/Z)oq");
    CHECK(r.relation == Relation::Equality);
    CHECK(fired(r, "schrodinger-cancel"));
}

TEST_CASE("character products add parameters componentwise") {
    auto r = fuse_atoms(CharacterRep{{rq(1)}, {rq(0)}}, CharacterRep{{rq(1, 2)}, {rq(3)}},
                        heis_rules());
    CHECK(format_component(r.result) == "chi(3/2;3)");
    CHECK(r.relation == Relation::Equality);
}

TEST_CASE("quotient and compactification products") {
    auto qf = parse_component("A(G/Z)oq");
    auto af = parse_component("AF");
    auto rho2 = parse_component("rho(2)");
    auto rules = heis_rules();
    CHECK(format_component(fuse_components(af, rho2, rules).result) == "rho(2)");
    CHECK(format_component(fuse_components(qf, rho2, rules).result) == "rho(2)");
    CHECK(format_component(fuse_components(af, qf, rules).result) == "A(G/Z)oq");
    CHECK(format_component(fuse_components(qf, qf, rules).result) == "A(G/Z)oq");
    CHECK(format_component(fuse_components(af, af, rules).result) == "AF");
}

TEST_CASE("half-line family products take exact parameter images") {
    auto plus = parse_component("rho(h>0)");
    auto minus = parse_component("rho(h<0)");
    auto r = fuse_components(plus, minus, heis_rules());
    CHECK(format_component(r.result) == "rho(h!=0) \xE2\x8A\x95 A(G/Z)oq");
    CHECK(r.relation == Relation::Equality);

    auto rr = fuse_components(plus, plus, heis_rules());
    CHECK(format_component(rr.result) == "rho(h>0)");
    CHECK(rr.relation == Relation::Equality);
}

TEST_CASE("half-line times a point rounds up and flags quasi-containment") {
    auto plus = parse_component("rho(h>0)");
    auto r = fuse_components(plus, parse_component("rho(2)"), heis_rules());
    CHECK(format_component(r.result) == "rho(h>0)");
    CHECK(r.relation == Relation::QuasiContainment);
    CHECK(fired(r, "interval-upper-bound"));

    auto r2 = fuse_components(plus, parse_component("rho(-2)"), heis_rules());
    CHECK(format_component(r2.result) == "rho(h!=0) \xE2\x8A\x95 A(G/Z)oq");
    CHECK(r2.relation == Relation::QuasiContainment);
}

TEST_CASE("complementary series shift with exact rational arithmetic") {
    auto r = fuse_atoms(ComplementaryRep{rq(-9, 10)}, ComplementaryRep{rq(-4, 5)}, sl2_rules());
    // -9/10 - 4/5 = -17/10 < -1, s+t+1 = -7/10
    CHECK(format_component(r.result) ==
          "kappa(-7/10) \xE2\x8A\x95 Areg+ \xE2\x8A\x95 Areg- \xE2\x8A\x95 AregD");
    CHECK(r.relation == Relation::QuasiContainment);
    CHECK(fired(r, "complementary-shift"));
}

TEST_CASE("complementary series with s+t >= -1 lands in the regular part") {
    auto r = fuse_atoms(ComplementaryRep{rq(-3, 10)}, ComplementaryRep{rq(-2, 5)}, sl2_rules());
    CHECK(format_component(r.result) == "Areg+ \xE2\x8A\x95 Areg- \xE2\x8A\x95 AregD");
    CHECK(fired(r, "regular-part-fallback"));
}

TEST_CASE("generic nontrivial SL2 pairs land in the regular part") {
    auto r = fuse_atoms(DiscreteRep{+1, 2}, PrincipalRep{-1, rq(1)}, sl2_rules());
    CHECK(format_component(r.result) == "Areg+ \xE2\x8A\x95 Areg- \xE2\x8A\x95 AregD");
    CHECK(r.relation == Relation::QuasiContainment);
}

TEST_CASE("trivial representation acts as the identity when enabled") {
    auto r = fuse_atoms(TrivialRep{}, ComplementaryRep{rq(-1, 2)}, sl2_rules());
    CHECK(format_component(r.result) == "kappa(-1/2)");
    CHECK(r.relation == Relation::Equality);
    CHECK(fired(r, "trivial-identity"));

    auto skipped = fuse_atoms(TrivialRep{}, ComplementaryRep{rq(-1, 2)}, sl2_rules(false));
    CHECK(skipped.result.empty());
    CHECK(fired(skipped, "trivial-skipped"));

    auto c1 = fuse_atoms(TrivialRep{}, TrivialRep{}, sl2_rules(false));
    CHECK(format_component(c1.result) == "C1");
}

TEST_CASE("fusion is commutative") {
    std::vector<Component> pool = {
        parse_component("rho(h>0)"), parse_component("rho(-1/2,3)"), parse_component("chi(1;2)"),
        parse_component("A(G/Z)oq"), parse_component("AF"),
    };
    auto rules = heis_rules();
    for (const auto& a : pool)
        for (const auto& b : pool) {
            auto ab = fuse_components(a, b, rules);
            auto ba = fuse_components(b, a, rules);
            CHECK(ab.result == ba.result);
            CHECK(ab.provenance == ba.provenance);
        }

    std::vector<Component> sl2pool = {
        parse_component("kappa(all)"), parse_component("kappa(-9/10)"), parse_component("pi+(1)"),
        parse_component("M"),          parse_component("C1"),           parse_component("Areg+"),
    };
    auto srules = sl2_rules();
    for (const auto& a : sl2pool)
        for (const auto& b : sl2pool)
            CHECK(fuse_components(a, b, srules).result == fuse_components(b, a, srules).result);
}

TEST_CASE("mixed group products are rejected") {
    CHECK_THROWS_AS(fuse_atoms(SchrodingerRep{rq(1)}, TrivialRep{}, heis_rules()), EngineError);
    CHECK_THROWS_AS(
        fuse_components(parse_component("rho(1)"), parse_component("C1"), heis_rules()),
        EngineError);
    CHECK_THROWS_AS(
        fuse_components(parse_component("kappa(-1/2)"), parse_component("C1"), heis_rules()),
        EngineError);
}

TEST_CASE("documentation-only atoms have no products") {
    CHECK_THROWS_AS(
        fuse_components(parse_component("Aspine"), parse_component("C1"), sl2_rules()),
        EngineError);
    CHECK_THROWS_AS(
        fuse_components(parse_component("B0"), parse_component("kappa(-1/2)"), sl2_rules()),
        EngineError);
}

TEST_CASE("regular products require the absorption rule") {
    CHECK_THROWS_AS(
        fuse_components(parse_component("Areg+"), parse_component("kappa(-1/2)"),
                        sl2_rules(true, false)),
        EngineError);
}

TEST_CASE("generated algebra reproduces the Heisenberg decomposition") {
    auto a = generated_algebra({default_atoms(GroupTag::Heisenberg)}, heis_rules());
    CHECK(format_component(a) == "rho(h!=0) \xE2\x8A\x95 A(G/Z)oq \xE2\x8A\x95 AF");
}

TEST_CASE("generated algebra over the SL2 pure atoms adds the regular part") {
    auto a0 = default_atoms(GroupTag::SL2R);
    auto a = generated_algebra({a0}, sl2_rules());
    Component expected = a0;
    auto reg = regular_component();
    expected.atoms.insert(expected.atoms.end(), reg.atoms.begin(), reg.atoms.end());
    expected = normalize(expected);
    CHECK(a == expected);
}

TEST_CASE("generated algebra of a single complementary atom") {
    auto a = generated_algebra({parse_component("kappa(-1/2)")}, sl2_rules());
    CHECK(format_component(a) ==
          "kappa(-1/2) \xE2\x8A\x95 Areg+ \xE2\x8A\x95 Areg- \xE2\x8A\x95 AregD");
}

TEST_CASE("generated algebra is a closure operator") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<long long> num(1, 9);
    auto rules = sl2_rules();
    for (int trial = 0; trial < 20; ++trial) {
        Component s = parse_component("kappa(-" + std::to_string(num(rng)) + "/10)");
        Component bigger = s;
        bigger.atoms.push_back(make_finite_atom(Family::Discrete, {{rq(1), rq(2)}}));
        bigger = normalize(bigger);
        auto cs = generated_algebra({s}, rules);
        auto cb = generated_algebra({bigger}, rules);
        CHECK(component_leq(s, cs));                              // extensive
        CHECK(component_leq(cs, cb));                             // monotone
        CHECK(generated_algebra({cs}, rules) == cs);              // idempotent
        CHECK(component_leq(fuse_components(cs, cs, rules).result, cs));  // closed
    }
}

TEST_CASE("span of squares reproduces both published outcomes") {
    auto a0 = default_atoms(GroupTag::SL2R);
    auto alg = generated_algebra({a0}, sl2_rules());

    auto off = span_of_products(alg, alg, sl2_rules(false));
    CHECK(format_component(off.result) ==
          "kappa(all) \xE2\x8A\x95 C1 \xE2\x8A\x95 Areg+ \xE2\x8A\x95 Areg- \xE2\x8A\x95 AregD");

    auto on = span_of_products(alg, alg, sl2_rules(true));
    CHECK(on.result == alg);
    CHECK(on.flag_trivial_identity);
    CHECK_FALSE(off.flag_trivial_identity);
}

TEST_CASE("sigma additivity of the complementary shift") {
    std::mt19937 rng(2024);
    std::uniform_int_distribution<long long> den(2, 40);
    auto rules = sl2_rules();
    for (int trial = 0; trial < 100; ++trial) {
        long long d1 = den(rng), d2 = den(rng);
        std::uniform_int_distribution<long long> n1(1, d1 - 1), n2(1, d2 - 1);
        Rational s(-n1(rng), d1), t(-n2(rng), d2);
        auto r = fuse_atoms(ComplementaryRep{s}, ComplementaryRep{t}, rules);
        bool has_kappa = std::any_of(r.result.atoms.begin(), r.result.atoms.end(),
                                     [](const Atom& a) { return a.family == Family::Complementary; });
        if (s + t < rq(-1)) {
            REQUIRE(has_kappa);
            auto it = std::find_if(r.result.atoms.begin(), r.result.atoms.end(),
                                   [](const Atom& a) { return a.family == Family::Complementary; });
            Rational s_out = it->params.at(0).at(0);
            CHECK(s_out + rq(1) == (s + rq(1)) + (t + rq(1)));
        } else {
            CHECK_FALSE(has_kappa);
        }
    }
}

TEST_CASE("Heisenberg parameter additivity") {
    std::mt19937 rng(17);
    std::uniform_int_distribution<long long> num(-12, 12);
    auto rules = heis_rules();
    for (int trial = 0; trial < 100; ++trial) {
        long long a = num(rng), b = num(rng);
        if (a == 0 || b == 0) continue;
        Rational h(a, 4), hp(b, 4);
        auto r = fuse_atoms(SchrodingerRep{h}, SchrodingerRep{hp}, rules);
        if (h + hp == rq(0)) {
            CHECK(format_component(r.result) == "A(G/Z)oq");
        } else {
            CHECK(format_component(r.result) == "rho(" + format_rational(h + hp) + ")");
        }
    }
}

TEST_CASE("minimal power into the regular part: frozen oracle values") {
    auto rules = sl2_rules();
    CHECK(min_power_to_regular(parse_component("kappa(-1/2)"), rules).power == 2);
    CHECK(min_power_to_regular(parse_component("kappa(-3/4)"), rules).power == 4);
    CHECK(min_power_to_regular(parse_component("kappa(-9/10)"), rules).power == 10);
    CHECK(min_power_to_regular(parse_component("kappa(-99/100)"), rules).power == 100);
    // non-complementary atoms fall into the regular part at the second power
    auto mixed = parse_component("kappa(-9/10) delta+(2)");
    CHECK(min_power_to_regular(mixed, rules).power == 10);
    CHECK(min_power_to_regular(parse_component("pi+(1)"), rules).power == 2);
    CHECK(min_power_to_regular(parse_component("Areg+"), rules).power == 1);
}

TEST_CASE("minimal power agrees with the ceiling formula on random parameters") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<long long> den(2, 60);
    auto rules = sl2_rules();
    for (int trial = 0; trial < 40; ++trial) {
        long long d = den(rng);
        std::uniform_int_distribution<long long> numd(1, d - 1);
        Rational s(-numd(rng), d);
        auto got = min_power_to_regular(parse_component("kappa(" + format_rational(s) + ")"), rules);
        REQUIRE(got.power.has_value());
        CHECK(*got.power == ceil_rational(Rational(1) / (Rational(1) + s)));
        CHECK(got.squaring_bound.has_value());
    }
}

TEST_CASE("minimal power preconditions") {
    auto rules = sl2_rules();
    CHECK_THROWS_AS(min_power_to_regular(parse_component("C1"), rules), EngineError);
    CHECK_THROWS_AS(min_power_to_regular(parse_component("kappa(all)"), rules), EngineError);
    CHECK_THROWS_AS(min_power_to_regular(parse_component("rho(1)"), rules), EngineError);
}

TEST_CASE("ideal checks") {
    auto hrules = heis_rules();
    auto a_heis = generated_algebra({default_atoms(GroupTag::Heisenberg)}, hrules);
    CHECK(ideal_check(parse_component("rho(h!=0) A(G/Z)oq"), a_heis, hrules));
    CHECK_FALSE(ideal_check(parse_component("AF"), a_heis, hrules));
    CHECK(ideal_check(a_heis, a_heis, hrules));

    auto srules = sl2_rules();
    auto a_sl2 = generated_algebra({default_atoms(GroupTag::SL2R)}, srules);
    CHECK(ideal_check(regular_component(), a_sl2, srules));

    // not contained -> precondition failure
    CHECK_THROWS_AS(ideal_check(parse_component("rho(1)"), a_heis, hrules), EngineError);
    // not closed -> precondition failure
    CHECK_THROWS_AS(ideal_check(parse_component("kappa(-9/10)"), a_sl2, srules), EngineError);
}

TEST_CASE("randomized regular-part ideal property") {
    std::mt19937 rng(31);
    std::uniform_int_distribution<long long> den(3, 20);
    auto rules = sl2_rules();
    for (int trial = 0; trial < 20; ++trial) {
        long long d = den(rng);
        std::uniform_int_distribution<long long> numd(1, d - 1);
        Component seed = parse_component("kappa(-" + std::to_string(numd(rng)) + "/" +
                                         std::to_string(d) + ")");
        auto alg = generated_algebra({seed}, rules);
        CHECK(ideal_check(regular_component(), alg, rules));
    }
}
