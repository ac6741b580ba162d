#include <doctest.h>

#include "helpers.hpp"
#include "ydc/constructions.hpp"
#include "ydc/difficulty.hpp"
#include "ydc/errors.hpp"

using namespace ydc;

static const DifficultyEngine engine;

TEST_CASE("primitive construction on (3,1)") {
    ValidSequence seq = primitive_construction(Partition::parse("3,1"));
    REQUIRE(seq.steps.size() == 3);
    CHECK(seq.steps[0].partition == Partition::parse("1"));
    CHECK(seq.steps[0].lambda == Progression::singleton(0));
    CHECK(seq.steps[1].partition == Partition::parse("2"));
    CHECK(seq.steps[1].lambda == Progression::singleton(1));
    CHECK(seq.steps[2].partition == Partition::parse("3,1"));
    CHECK(seq.steps[2].lambda == Progression::residue(2, 3));
    CHECK(seq.steps[2].k == 2);
    CHECK(seq.cost() == 2);
    CHECK(verify_sequence(seq, Partition::parse("3,1")) == 2);
}

TEST_CASE("primitive construction base case is a singleton chain") {
    ValidSequence seq = primitive_construction(Partition::parse("5"));
    CHECK(seq.steps.size() == 5);
    CHECK(seq.cost() == 5);
    for (const Step& s : seq.steps) CHECK(s.k == 1);
    CHECK(verify_sequence(seq, Partition::parse("5")) == 5);
}

TEST_CASE("primitive construction on (4,1)") {
    ValidSequence seq = primitive_construction(Partition::parse("4,1"));
    CHECK(seq.cost() == 3);
    CHECK(seq.steps.back().lambda == Progression::residue(3, 4));
    CHECK(seq.steps.back().k == 2);
    CHECK(verify_sequence(seq, Partition::parse("4,1")) == 3);
}

TEST_CASE("primitive construction rejects bad inputs") {
    // (2,2): P_0 - P*_0 = 0 < 2 P_1 - 2 = 2
    CHECK_THROWS_AS(primitive_construction(Partition::parse("2,2")), PreconditionError);
    // (2,1): |P| = 3 > 2 P_0 - 2 = 2
    CHECK_THROWS_AS(primitive_construction(Partition::parse("2,1")), PreconditionError);
}

TEST_CASE("primitive construction cost matches the engine") {
    for (const Partition& p : ydc::testing::partitions_up_to(12)) {
        if (p.empty()) continue;
        bool hyp1 = p.part(0) - p.conjugate().part(0) >= 2 * p.part(1) - 2;
        bool hyp2 = p.weight() <= 2 * p.part(0) - 2;
        if (!hyp1 || !hyp2) continue;
        ValidSequence seq = primitive_construction(p);
        int expected = 2 * p.part(0) - p.weight();
        CHECK(seq.cost() == expected);
        CHECK(engine.difficulty(p).delta == expected);
    }
}

TEST_CASE("box construction (2,2)") {
    ValidSequence seq = box_construction(2, 2);
    REQUIRE(seq.steps.size() == 3);
    CHECK(seq.steps[0].partition == Partition::parse("1"));
    CHECK(seq.steps[1].partition == Partition::parse("2,1"));
    CHECK(seq.steps[1].lambda == Progression::residue(1, 2));
    CHECK(seq.steps[2].partition == Partition::parse("2,2"));
    CHECK(seq.cost() == 2);
}

TEST_CASE("box construction (3,2) pads odd widths with column steps") {
    ValidSequence seq = box_construction(3, 2);
    CHECK(seq.cost() == 4);  // a + 3b - 5
    CHECK(verify_sequence(seq, Partition::parse("3,3")) == 4);
}

TEST_CASE("box construction (4,3) repairs exactly one step") {
    ValidSequence seq = box_construction(4, 3);
    CHECK(seq.cost() == 6);
    CHECK(verify_sequence(seq, Partition::parse("4,4,4")) == 6);
    // the repaired pair appears as two consecutive single-box steps
    bool saw_repair = false;
    for (std::size_t i = 0; i + 1 < seq.steps.size(); ++i)
        if (seq.steps[i].partition == Partition::parse("4,2,1") &&
            seq.steps[i + 1].partition == Partition::parse("4,3,1"))
            saw_repair = true;
    CHECK(saw_repair);
}

TEST_CASE("box construction bounds and verification") {
    for (int a = 2; a <= 8; ++a)
        for (int b = 2; b <= 8; ++b) {
            ValidSequence seq = box_construction(a, b);
            Partition target = Partition::from_sorted(std::vector<int>(b, a));
            int cost = verify_sequence(seq, target);
            CHECK(cost == seq.cost());
            CHECK(cost <= a + 3 * b - 5);
            if (a % 2 == 0) CHECK(cost <= a + 2 * b - 4);
        }
    CHECK_THROWS_AS(box_construction(1, 2), PreconditionError);
    CHECK_THROWS_AS(box_construction(2, 1), PreconditionError);
}

TEST_CASE("engine difficulty never exceeds the box construction cost") {
    for (int a = 2; a <= 6; ++a)
        for (int b = 2; b <= 6; ++b) {
            Partition target = Partition::from_sorted(std::vector<int>(b, a));
            CHECK(engine.difficulty(target).delta <= box_construction(a, b).cost());
        }
}
