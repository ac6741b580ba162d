#include <doctest.h>

#include <algorithm>
#include <array>
#include <set>

#include "ydc/errors.hpp"
#include "ydc/progression.hpp"

using namespace ydc;

TEST_CASE("membership") {
    CHECK(Progression::residue(2, 3).contains(-1));
    CHECK_FALSE(Progression::empty().contains(5));
    CHECK(Progression::singleton(4).contains(4));
    CHECK_FALSE(Progression::singleton(4).contains(5));
    CHECK(Progression::residue(2, 3).contains(2));
    CHECK_FALSE(Progression::residue(2, 3).contains(3));
}

TEST_CASE("generated_by") {
    Progression g = Progression::generated_by(2, -1);
    CHECK(g == Progression::residue(2, 3));
    CHECK(Progression::generated_by(5, 5) == Progression::singleton(5));
    CHECK_THROWS_AS(Progression::generated_by(3, 4), WouldBeAllIntegers);
    CHECK_THROWS_AS(Progression::residue(0, 1), WouldBeAllIntegers);
}

TEST_CASE("generated_by contains its generators") {
    for (int x = -6; x <= 6; ++x)
        for (int y = -6; y <= 6; ++y) {
            if (std::abs(x - y) == 1) continue;
            Progression g = Progression::generated_by(x, y);
            CHECK(g.contains(x));
            CHECK(g.contains(y));
        }
}

TEST_CASE("transforms") {
    Progression r23 = Progression::residue(2, 3);
    CHECK(r23.negated() == Progression::residue(1, 3));
    CHECK(r23.shifted(2) == Progression::residue(1, 3));
    CHECK(r23.reflected(5) == Progression::residue(0, 3));
    CHECK(Progression::singleton(4).negated() == Progression::singleton(-4));
    CHECK(Progression::singleton(4).shifted(3) == Progression::singleton(7));
    CHECK(Progression::singleton(4).reflected(10) == Progression::singleton(6));
    CHECK(Progression::empty().negated() == Progression::empty());
}

TEST_CASE("transform involutions") {
    std::array<Progression, 4> samples = {
        Progression::empty(), Progression::singleton(-3),
        Progression::residue(2, 3), Progression::residue(4, 7)};
    for (const Progression& p : samples) {
        CHECK(p.negated().negated() == p);
        CHECK(p.shifted(5).shifted(-5) == p);
        CHECK(p.reflected(9).reflected(9) == p);
    }
}

TEST_CASE("text encoding") {
    CHECK(Progression::parse("empty") == Progression::empty());
    CHECK(Progression::parse("{4}") == Progression::singleton(4));
    CHECK(Progression::parse("{-2}") == Progression::singleton(-2));
    CHECK(Progression::parse("2 mod 3") == Progression::residue(2, 3));
    CHECK(Progression::parse("-1 mod 3") == Progression::residue(2, 3));
    CHECK(Progression::residue(2, 3).str() == "2 mod 3");
    CHECK(Progression::singleton(-5).str() == "{-5}");
    CHECK(Progression::empty().str() == "empty");
    CHECK_THROWS_AS(Progression::parse("2 mod 1"), WouldBeAllIntegers);
    CHECK_THROWS_AS(Progression::parse("nonsense"), DomainError);
}

TEST_CASE("relevant_progressions on sample windows") {
    auto traces = [](std::span<const int> window) {
        std::set<std::vector<int>> seen;
        for (const TracedProgression& tp : relevant_progressions(window))
            seen.insert(tp.trace);
        return seen;
    };

    std::vector<int> w1 = {2, 0, -2};
    auto t1 = traces(w1);
    CHECK(t1.size() == 6);
    CHECK(t1.count({}) == 1);
    CHECK(t1.count({2}) == 1);
    CHECK(t1.count({0}) == 1);
    CHECK(t1.count({-2}) == 1);
    CHECK(t1.count({-2, 2}) == 1);
    CHECK(t1.count({-2, 0, 2}) == 1);

    std::vector<int> w2 = {0};
    CHECK(traces(w2).size() == 2);

    std::vector<int> w3 = {3, -5};
    auto t3 = traces(w3);
    CHECK(t3.size() == 4);
    CHECK(t3.count({-5, 3}) == 1);
}

TEST_CASE("representatives reproduce their stored traces") {
    std::vector<int> window = {7, 3, 0, -2, -6};
    auto out = relevant_progressions(window);
    std::set<std::vector<int>> seen;
    std::vector<int> sorted_window = window;
    std::sort(sorted_window.begin(), sorted_window.end());
    for (const TracedProgression& tp : out) {
        std::vector<int> recomputed;
        for (int v : sorted_window)
            if (tp.rep.contains(v)) recomputed.push_back(v);
        CHECK(recomputed == tp.trace);
        CHECK(seen.insert(tp.trace).second);  // pairwise distinct
    }
}

TEST_CASE("relevant_progressions window limits") {
    std::vector<int> empty;
    CHECK_THROWS_AS(relevant_progressions(empty), DomainError);
    std::vector<int> big(257);
    for (int i = 0; i < 257; ++i) big[i] = i;
    CHECK_THROWS_AS(relevant_progressions(big), DomainError);
}
