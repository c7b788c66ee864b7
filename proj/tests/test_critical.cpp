#include "testutil.hpp"

#include <cohsys/critical.hpp>
#include <cohsys/numerics.hpp>
#include <cohsys/parallel.hpp>

#include <doctest.h>

#include <algorithm>
#include <stdexcept>

using namespace cohsys;
using testutil::pick;

namespace {

Rational rat(long long n, long long d) { return Rational(Int(n), Int(d)); }

const CSType kT{2, 13, 4};
const AlphaWindow kUnit{Rational(0), Rational(1)};

}  // namespace

TEST_CASE("alpha of subtype solves the slope equality") {
    CHECK(alpha_of_subtype(kT, SubTriple{1, 6, 3}) == rat(1, 2));
    CHECK(alpha_of_subtype(kT, SubTriple{1, 6, 4}) == rat(1, 4));
    CHECK(alpha_of_subtype(kT, SubTriple{1, 7, 1}) == rat(1, 2));
    CHECK(alpha_of_subtype(kT, SubTriple{1, 8, 0}) == rat(3, 4));
    for (long long dp = -5; dp <= 8; ++dp)  // n*t = m*k: no alpha dependence
        CHECK_FALSE(alpha_of_subtype(kT, SubTriple{1, dp, 2}).has_value());
}

TEST_CASE("window validation and defaults") {
    CHECK_THROWS_AS(check_window(AlphaWindow{Rational(-1), Rational(1)}), std::invalid_argument);
    CHECK_THROWS_AS(check_window(AlphaWindow{Rational(1), Rational(1)}), std::invalid_argument);
    CHECK_THROWS_AS(check_window(AlphaWindow{Rational(2), Rational(1)}), std::invalid_argument);
    check_window(AlphaWindow{Rational(0), std::nullopt});

    AlphaWindow w = default_alpha_window(CSType{3, 9, 2});
    CHECK(w.lo == Rational(0));
    CHECK(w.hi == rat(9, 1));
    CHECK(w.contains(Rational(5)));
    CHECK_FALSE(w.contains(Rational(9)));
    CHECK_FALSE(w.contains(Rational(0)));
    CHECK_THROWS_AS(default_alpha_window(kT), std::invalid_argument);          // k >= n
    CHECK_THROWS_AS(default_alpha_window(CSType{3, -6, 1}), std::invalid_argument);
}

TEST_CASE("virtual walls of (2,13,4) in (0,1)") {
    auto walls = enumerate_virtual_criticals(kT, kUnit);
    REQUIRE(walls.size() == 3);
    CHECK(walls[0].value == rat(1, 4));
    CHECK(walls[0].witnesses == std::vector<SubTriple>{{1, 7, 0}, {1, 6, 4}});
    CHECK(walls[1].value == rat(1, 2));
    CHECK(walls[1].witnesses == std::vector<SubTriple>{{1, 7, 1}, {1, 6, 3}});
    CHECK(walls[2].value == rat(3, 4));
    CHECK(walls[2].witnesses == std::vector<SubTriple>{{1, 8, 0}, {1, 5, 4}});
    for (const auto& w : walls) {
        CHECK(w.status == WallStatus::Virtual);
        for (const auto& wit : w.witnesses)  // round-trip through the closed form
            CHECK(alpha_of_subtype(kT, wit) == w.value);
    }
}

TEST_CASE("windows exclude endpoints and empty stretches have no walls") {
    CHECK(enumerate_virtual_criticals(kT, AlphaWindow{rat(2, 5), rat(9, 20)}).empty());
    auto inner = enumerate_virtual_criticals(kT, AlphaWindow{rat(1, 4), rat(3, 4)});
    REQUIRE(inner.size() == 1);  // both endpoints are walls, both excluded
    CHECK(inner[0].value == rat(1, 2));
    CHECK_THROWS_AS(enumerate_virtual_criticals(kT, AlphaWindow{Rational(0), std::nullopt}),
                    std::invalid_argument);
}

TEST_CASE("subdegree audit flag admits nonpositive witness degrees") {
    CSType T{2, -3, 2};
    AlphaWindow w{Rational(0), Rational(5)};
    auto strict = enumerate_virtual_criticals(T, w);
    WallOptions audit;
    audit.require_positive_subdegree = false;
    auto loose = enumerate_virtual_criticals(T, w, audit);
    // both subtriple families land on the same half-integer ladder here, so
    // the flag widens witness lists rather than adding walls
    REQUIRE(loose.size() == strict.size());
    std::size_t strict_wits = 0, loose_wits = 0;
    bool saw_nonpositive = false;
    for (std::size_t i = 0; i < loose.size(); ++i) {
        CHECK(loose[i].value == strict[i].value);
        strict_wits += strict[i].witnesses.size();
        loose_wits += loose[i].witnesses.size();
        for (const auto& wit : strict[i].witnesses)
            CHECK(std::find(loose[i].witnesses.begin(), loose[i].witnesses.end(), wit) !=
                  loose[i].witnesses.end());
        for (const auto& wit : loose[i].witnesses)
            if (wit.t >= 1 && wit.dprime <= 0) saw_nonpositive = true;
    }
    CHECK(loose_wits > strict_wits);
    CHECK(saw_nonpositive);
    for (const auto& wall : strict)
        for (const auto& wit : wall.witnesses) CHECK((wit.t == 0 || wit.dprime >= 1));
}

TEST_CASE("brill noether pruning on a general curve of genus 6") {
    CurveContext g6{6, true};
    auto walls = prune_by_brill_noether(g6, kT, enumerate_virtual_criticals(kT, kUnit));
    REQUIRE(walls.size() == 3);
    CHECK(walls[0].value == rat(1, 4));
    CHECK(walls[0].status == WallStatus::Pruned);
    CHECK(walls[0].witnesses == std::vector<SubTriple>{{1, 7, 0}, {1, 6, 4}});  // kept for the record
    CHECK(walls[1].value == rat(1, 2));
    CHECK(walls[1].status == WallStatus::CandidateActual);
    CHECK(walls[1].witnesses == std::vector<SubTriple>{{1, 7, 1}, {1, 6, 3}});
    CHECK(walls[2].value == rat(3, 4));
    CHECK(walls[2].status == WallStatus::Pruned);

    // the pruning arithmetic: the 1/4 witnesses die on beta(1,6,4) = -6
    CHECK(brill_noether_number(g6, CSType{1, 6, 4}) == -6);
    CHECK(brill_noether_number(g6, quotient_type(kT, SubTriple{1, 7, 0})) == -6);
    // 3/4 dies on beta(1,5,4) = -10 both as witness and as quotient
    CHECK(brill_noether_number(g6, CSType{1, 5, 4}) == -10);

    // pruning never adds witnesses and keeps the ascending wall order
    auto virt = enumerate_virtual_criticals(kT, kUnit);
    for (std::size_t i = 0; i < walls.size(); ++i) {
        CHECK(walls[i].value == virt[i].value);
        CHECK(walls[i].witnesses.size() <= virt[i].witnesses.size());
    }
}

TEST_CASE("pruning is disabled off the general locus") {
    CurveContext special{6, false};
    auto virt = enumerate_virtual_criticals(kT, kUnit);
    auto walls = prune_by_brill_noether(special, kT, virt);
    CHECK(walls == virt);
}

TEST_CASE("partial witness removal keeps candidate-actual walls") {
    // (2,5,3) at genus 2, wall alpha = 1: (1,3,1) and (1,2,2) survive
    // (beta 3 and 0, complementary pair) while (1,4,0) dies on its quotient
    // (1,1,3) with beta = -7 and (1,1,3) dies directly
    CSType T{2, 5, 3};
    CurveContext g2{2, true};
    auto walls = prune_by_brill_noether(g2, T, enumerate_virtual_criticals(
                                                    T, AlphaWindow{Rational(0), Rational(5)}));
    bool found = false;
    for (const auto& w : walls) {
        if (w.value != Rational(1)) continue;
        found = true;
        CHECK(w.status == WallStatus::CandidateActual);
        CHECK(w.witnesses == std::vector<SubTriple>{{1, 3, 1}, {1, 2, 2}});
    }
    CHECK(found);
    CHECK(brill_noether_number(g2, CSType{1, 1, 3}) == -7);
}

TEST_CASE("chamber partition labels the open intervals") {
    auto virt = enumerate_virtual_criticals(kT, kUnit);
    auto part = chamber_partition(kT, kUnit, virt);
    REQUIRE(part.chambers.size() == 4);
    CHECK(part.chambers[0] == Chamber{"G_0", Rational(0), rat(1, 4)});
    CHECK(part.chambers[1] == Chamber{"G_1", rat(1, 4), rat(1, 2)});
    CHECK(part.chambers[2] == Chamber{"G_2", rat(1, 2), rat(3, 4)});
    CHECK(part.chambers[3] == Chamber{"G_3", rat(3, 4), Rational(1)});

    CurveContext g6{6, true};
    auto pruned = prune_by_brill_noether(g6, kT, virt);
    std::vector<CriticalValue> retained;
    for (const auto& w : pruned)
        if (w.status == WallStatus::CandidateActual) retained.push_back(w);
    auto part2 = chamber_partition(kT, kUnit, retained);
    REQUIRE(part2.chambers.size() == 2);
    CHECK(part2.chambers[0] == Chamber{"G_0", Rational(0), rat(1, 2)});
    CHECK(part2.chambers[1] == Chamber{"G_1", rat(1, 2), Rational(1)});

    auto whole = chamber_partition(kT, kUnit, {});
    REQUIRE(whole.chambers.size() == 1);
    CHECK(whole.chambers[0] == Chamber{"G_0", Rational(0), Rational(1)});

    AlphaWindow open_ended{Rational(0), std::nullopt};
    auto unbounded = chamber_partition(kT, open_ended, retained);
    REQUIRE(unbounded.chambers.size() == 2);
    CHECK_FALSE(unbounded.chambers[1].hi.has_value());

    CriticalValue outside{Rational(2), {SubTriple{1, 3, 3}}, WallStatus::Virtual};
    CHECK_THROWS_AS(chamber_partition(kT, kUnit, {outside}), std::invalid_argument);
}

TEST_CASE("margin sign profile across a wall") {
    CHECK(margin_sign_profile(kT, SubTriple{1, 6, 3}, rat(1, 2)) ==
          MarginSignProfile{1, 0, -1});
    CHECK(margin_sign_profile(kT, SubTriple{1, 7, 1}, rat(1, 2)) ==
          MarginSignProfile{-1, 0, 1});
    // proportional subtype with zero margin reads (0,0,0) at any alpha
    CHECK(margin_sign_profile(CSType{2, 6, 2}, SubTriple{1, 3, 1}, rat(1, 3)) ==
          MarginSignProfile{0, 0, 0});
    // alpha-independent but nonzero margin: no wall exists
    CHECK_THROWS_AS(margin_sign_profile(CSType{2, 6, 2}, SubTriple{1, 2, 1}, rat(1, 3)),
                    std::invalid_argument);
    // wall mismatch rejected
    CHECK_THROWS_AS(margin_sign_profile(kT, SubTriple{1, 6, 3}, rat(1, 3)),
                    std::invalid_argument);

    // profile agrees with evaluating the margin a small step off the wall
    testutil::Rng rng(20260816);
    int checked = 0;
    while (checked < 400) {
        long long n = pick(rng, 2, 5);
        CSType T{n, pick(rng, -20, 20), pick(rng, 0, 6)};
        SubTriple sub{pick(rng, 1, n - 1), pick(rng, -20, 20), pick(rng, 0, T.k)};
        if (Int(n) * sub.t == Int(sub.m) * T.k) continue;
        auto wall = alpha_of_subtype(T, sub);
        if (!wall || wall->sign() <= 0) continue;
        auto prof = margin_sign_profile(T, sub, *wall);
        Rational eps(Int(1), Int(1000));
        CHECK(prof.at == 0);
        CHECK(slope_margin(T, sub, *wall - eps).sign() == prof.below);
        CHECK(slope_margin(T, sub, *wall + eps).sign() == prof.above);
        CHECK(prof.below == -prof.above);
        CHECK(prof.below != 0);
        ++checked;
    }
}

TEST_CASE("wall enumeration is identical across thread counts") {
    testutil::Rng rng(20260817);
    std::vector<CSType> types;
    for (int i = 0; i < 40; ++i)
        types.push_back(CSType{pick(rng, 2, 5), pick(rng, -25, 25), pick(rng, 0, 6)});
    AlphaWindow w{Rational(0), Rational(4)};
    CurveContext g5{5, true};

    std::vector<std::vector<CriticalValue>> serial, parallel;
    set_thread_count(1);
    for (const auto& T : types)
        serial.push_back(prune_by_brill_noether(g5, T, enumerate_virtual_criticals(T, w)));
    set_thread_count(4);
    for (const auto& T : types)
        parallel.push_back(prune_by_brill_noether(g5, T, enumerate_virtual_criticals(T, w)));
    set_thread_count(0);
    CHECK(serial == parallel);
}
