#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dinv/errors.hpp"
#include "dinv/obstruction.hpp"

using namespace dinv;

TEST_CASE("combination parsing") {
    auto c = parse_combination("1*K3 + 2*K5 - 1*K8");
    CHECK(c.terms == std::map<long, long>{{3, 1}, {5, 2}, {8, -1}});
    CHECK(parse_combination("K3").terms == std::map<long, long>{{3, 1}});
    CHECK(parse_combination("-K3").terms == std::map<long, long>{{3, -1}});
    CHECK(parse_combination("2*K5").terms == std::map<long, long>{{5, 2}});
    CHECK(parse_combination("-3*K5").terms == std::map<long, long>{{5, -3}});
    CHECK(parse_combination("1*K3+2*K3").terms == std::map<long, long>{{3, 3}});
    CHECK(parse_combination("1*K3 - 1*K3").terms.empty()); // cancels away
    CHECK(parse_combination("").terms.empty());
    CHECK(parse_combination("  \t ").terms.empty());

    CHECK_THROWS_AS(parse_combination("0*K3"), ParseError);
    CHECK_THROWS_AS(parse_combination("+"), ParseError);
    CHECK_THROWS_AS(parse_combination("K"), ParseError);
    CHECK_THROWS_AS(parse_combination("3K"), ParseError);
    CHECK_THROWS_AS(parse_combination("1*Q3"), ParseError);
    CHECK_THROWS_AS(parse_combination("1*K3 ++ 2*K5"), ParseError);
    CHECK_THROWS_AS(parse_combination("1*K3 2*K5"), ParseError);
    CHECK_THROWS_AS(parse_combination("1.5*K3"), ParseError);
}

TEST_CASE("normalization") {
    auto n = normalize(parse_combination("1*K3 + 2*K5 - 1*K8"));
    CHECK_FALSE(n.empty);
    CHECK_FALSE(n.mirrored);
    CHECK(n.q == 3);
    CHECK(n.terms == std::map<long, long>{{3, 1}, {5, 2}, {8, -1}});

    // smallest positive index wins, and its coefficient is reduced to one
    auto m = normalize(parse_combination("-1*K3 + 2*K5"));
    CHECK_FALSE(m.mirrored);
    CHECK(m.q == 5);
    CHECK(m.terms == std::map<long, long>{{3, -1}, {5, 1}});

    // all-negative input is mirrored first
    auto f = normalize(parse_combination("-2*K3"));
    CHECK(f.mirrored);
    CHECK(f.q == 3);
    CHECK(f.terms == std::map<long, long>{{3, 1}});

    CHECK(normalize(parse_combination("")).empty);
}

TEST_CASE("witness certificate for a single summand") {
    auto r = witness(parse_combination("1*K3"));
    CHECK(r.obstructed);
    CHECK_FALSE(r.mirrored);
    CHECK(r.q == 3);
    CHECK(r.witness_element == 28); // (q+1)(2q+1)
    CHECK(r.witness_index == 3);
    CHECK(r.witness_label == 48);
    CHECK(r.witness_d == Rational(-2));
    CHECK(r.total_d == Rational(-2));
    REQUIRE(r.summands.size() == 1);
    CHECK(r.summands[0].p == 3);
    CHECK(r.summands[0].coefficient == 1);
    CHECK(r.summands[0].group_order == 49);
    CHECK(r.summands[0].label == 48);
    CHECK(r.summands[0].d_original == Rational(-2));
    CHECK(r.summands[0].d_normalized == Rational(-2));
    CHECK_FALSE(r.narrative.empty());
    CHECK_FALSE(r.scope.empty());
}

TEST_CASE("witness certificate for a mixed combination") {
    auto r = witness(parse_combination("2*K3 - 1*K5"));
    CHECK(r.obstructed);
    CHECK(r.q == 3);
    CHECK(r.total_d == Rational(-2));
    REQUIRE(r.summands.size() == 2);
    CHECK(r.summands[0].p == 3);
    CHECK(r.summands[0].coefficient == 1); // reduced from 2
    CHECK(r.summands[0].d_normalized == Rational(-2));
    CHECK(r.summands[1].p == 5);
    CHECK(r.summands[1].coefficient == -1);
    CHECK(r.summands[1].group_order == 121);
    CHECK(r.summands[1].d_normalized == Rational(0));
    CHECK(r.summands[1].d_original == Rational(0));
}

TEST_CASE("mirroring flips the orientation but not the verdict") {
    auto pos = witness(parse_combination("1*K3"));
    auto neg = witness(parse_combination("-1*K3"));
    CHECK(neg.obstructed);
    CHECK(neg.mirrored);
    CHECK(neg.q == pos.q);
    CHECK(neg.witness_element == pos.witness_element);
    CHECK(neg.witness_label == pos.witness_label);
    CHECK(neg.total_d == pos.total_d);
    CHECK(neg.summands[0].d_normalized == Rational(-2));
    CHECK(neg.summands[0].d_original == Rational(2));
}

TEST_CASE("alexander-one summand is carried but contributes nothing") {
    auto c = parse_combination("1*K5");
    c.alexander_one_summand = true;
    auto r = witness(c);
    CHECK(r.obstructed);
    CHECK(r.alexander_one_summand);
    CHECK(r.q == 5);
    CHECK(r.witness_element == 66); // (5+1)*11
    CHECK(r.total_d == Rational(-2));
    bool mentioned = false;
    for (const auto& line : r.narrative)
        if (line.find("homology") != std::string::npos) mentioned = true;
    CHECK(mentioned);
}

TEST_CASE("empty combination is not obstructed") {
    auto r = witness(parse_combination(""));
    CHECK_FALSE(r.obstructed);
    CHECK(r.total_d == Rational(0));
    CHECK(r.summands.empty());
}

TEST_CASE("witness values across the small family") {
    for (long p : {3, 5, 6, 8, 9}) {
        auto r = witness(parse_combination("1*K" + std::to_string(p)));
        CHECK(r.obstructed);
        CHECK(r.witness_element == Int(p + 1) * (2 * p + 1));
        CHECK(r.witness_d == Rational(-2));
        CHECK(r.summands[0].group_order == Int(2 * p + 1) * (2 * p + 1));
    }
}

TEST_CASE("invalid indices are rejected") {
    CHECK_THROWS_AS(witness(parse_combination("1*K4")), DomainError);  // 9 not prime
    CHECK_THROWS_AS(witness(parse_combination("1*K7")), DomainError);  // 15 not prime
    CHECK_THROWS_AS(witness(parse_combination("1*K2")), DomainError);  // below range
    // invalid index in a non-q slot still fails
    CHECK_THROWS_AS(witness(parse_combination("1*K3 + 1*K4")), DomainError);
}

TEST_CASE("predicate group assembly") {
    auto summands = predicate_summands(parse_combination("2*K3 - 1*K5"));
    REQUIRE(summands.size() == 3);
    CHECK(summands[0].sign == 1);
    CHECK(summands[1].sign == 1);
    CHECK(summands[2].sign == -1);
    LinkingGroup g({49, 49, 121},
                   {{Rational(-6, 49), Rational(0), Rational(0)},
                    {Rational(0), Rational(-6, 49), Rational(0)},
                    {Rational(0), Rational(0), Rational(10, 121)}});
    // the assembled group in check_predicate matches this one; spot-check by
    // running the predicate and confirming the shared verdict below
    CHECK(g.order() == Int(49) * 49 * 121);

    auto c = parse_combination("1*K3");
    c.alexander_one_summand = true;
    auto s = predicate_summands(c);
    REQUIRE(s.size() == 2);
    CHECK_FALSE(s[1].surgery.has_value()); // trivial-cover placeholder
}

TEST_CASE("exhaustive predicate agrees with the certificate") {
    // obstructed combinations: no metabolizer is everywhere nonnegative
    for (const std::string& combo : {"1*K3", "1*K5", "1*K6", "1*K8", "2*K3", "2*K3 - 1*K5"}) {
        auto c = parse_combination(combo);
        CHECK(witness(c).obstructed);
        CHECK_FALSE(check_predicate(predicate_summands(c)));
    }
}

TEST_CASE("reversed single summands pass the predicate") {
    // -K_p alone: d values along the forced metabolizer are 0 and +2
    for (long p : {3, 5, 6}) {
        auto c = parse_combination("-1*K" + std::to_string(p));
        CHECK(check_predicate(predicate_summands(c)));
    }
}

TEST_CASE("lens summand alone passes the predicate") {
    // 49/6 surgery on the unknot: d vanishes on the whole metabolizer
    std::vector<PredicateSummand> s{
        PredicateSummand{SurgeryDescription(unknot(), Rational(49, 6)), 1}};
    CHECK(check_predicate(s));
}

TEST_CASE("empty predicate is vacuously satisfied") {
    CHECK(check_predicate({}));
    // a lone homology-sphere placeholder behaves the same way
    LinearCombination c;
    c.alexander_one_summand = true;
    CHECK(check_predicate(predicate_summands(c)));
}

TEST_CASE("oversized predicates are refused") {
    auto c = parse_combination("1*K3 + 1*K5 + 1*K8");
    CHECK_THROWS_AS(check_predicate(predicate_summands(c)), TooLargeError);
    CHECK_NOTHROW(witness(c)); // the certificate path has no such limit
}
