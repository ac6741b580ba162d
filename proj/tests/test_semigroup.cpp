#include <doctest.h>

#include "ydc/errors.hpp"
#include "ydc/semigroup.hpp"

using namespace ydc;

TEST_CASE("construction from generators and gaps") {
    CHECK(NumericalSemigroup::from_generators({2, 3}).gaps() == std::vector<int>{1});
    CHECK(NumericalSemigroup::from_generators({3, 5, 7}).gaps() ==
          std::vector<int>{1, 2, 4});

    NumericalSemigroup s = NumericalSemigroup::from_gaps({1, 3, 5});
    CHECK(s.contains(0));
    CHECK(s.contains(2));
    CHECK(s.contains(4));
    CHECK_FALSE(s.contains(5));
    CHECK(s.contains(6));
    CHECK(s.contains(7));

    CHECK_THROWS_AS(NumericalSemigroup::from_gaps({2}), DomainError);
    CHECK_THROWS_AS(NumericalSemigroup::from_gaps({0, 1}), DomainError);
    CHECK_THROWS_AS(NumericalSemigroup::from_generators({4, 6}), DomainError);
}

TEST_CASE("text encoding") {
    CHECK(NumericalSemigroup::parse("gaps:1,3,5").gaps() ==
          std::vector<int>{1, 3, 5});
    CHECK(NumericalSemigroup::parse("gens:2,3").gaps() == std::vector<int>{1});
    CHECK(NumericalSemigroup::parse("gaps:1,3,5").str() == "gaps:1,3,5");
    CHECK(NumericalSemigroup{}.str() == "gaps:none");
    CHECK(NumericalSemigroup::parse("gaps:none") == NumericalSemigroup{});
    CHECK_THROWS_AS(NumericalSemigroup::parse("nope"), DomainError);
}

TEST_CASE("genus, weight, primitivity") {
    NumericalSemigroup s135 = NumericalSemigroup::from_gaps({1, 3, 5});
    CHECK(s135.genus() == 3);
    CHECK(s135.weight() == 3);
    CHECK_FALSE(s135.primitive());

    NumericalSemigroup s23 = NumericalSemigroup::from_generators({2, 3});
    CHECK(s23.genus() == 1);
    CHECK(s23.weight() == 0);
    CHECK(s23.primitive());

    NumericalSemigroup ordinary = NumericalSemigroup::from_gaps({1, 2, 3, 4});
    CHECK(ordinary.genus() == 4);
    CHECK(ordinary.weight() == 0);
    CHECK(ordinary.primitive());
}

TEST_CASE("element enumeration") {
    NumericalSemigroup s = NumericalSemigroup::from_gaps({1, 3, 5});
    CHECK(s.element(0) == 0);
    CHECK(s.element(1) == 2);
    CHECK(s.element(2) == 4);
    CHECK(s.element(3) == 6);
    CHECK(s.element(4) == 7);
}

TEST_CASE("semigroup to partition") {
    CHECK(NumericalSemigroup::from_gaps({1, 3, 5}).to_partition() ==
          Partition::parse("3,2,1"));
    CHECK(NumericalSemigroup::from_gaps({1, 2, 3, 4}).to_partition() ==
          Partition::parse("4"));
    CHECK(NumericalSemigroup::from_generators({2, 3}).to_partition() ==
          Partition::parse("1"));
    CHECK(NumericalSemigroup{}.to_partition() == Partition{});
}

TEST_CASE("partition to twisted sequence") {
    CofiniteSequence s1 = partition_to_sequence(Partition::parse("3,2,1"), 3);
    CHECK(s1.prefix == std::vector<int>{0, 2, 4});
    CHECK(s1.threshold == 6);
    CHECK(s1.is_semigroup);

    CofiniteSequence s2 = partition_to_sequence(Partition::parse("2,2"), 2);
    CHECK(s2.prefix == std::vector<int>{0, 1});
    CHECK(s2.threshold == 4);
    CHECK_FALSE(s2.is_semigroup);  // 1 + 1 = 2 is missing

    CofiniteSequence s3 = partition_to_sequence(Partition::parse("5"), 5);
    CHECK(s3.prefix == std::vector<int>{0});
    CHECK(s3.threshold == 6);
    CHECK(s3.is_semigroup);

    CHECK_THROWS_AS(partition_to_sequence(Partition::parse("4"), 3), DomainError);
}

TEST_CASE("imprimitivity witnesses") {
    auto w1 = imprimitivity_witness(NumericalSemigroup::from_gaps({1, 3, 5}));
    REQUIRE(w1.has_value());
    CHECK(w1->f == 5);
    CHECK(w1->k == 1);

    // smallest non-element above 2 s_1 = 4 is the gap 5
    auto w2 = imprimitivity_witness(NumericalSemigroup::from_gaps({1, 3, 5, 7}));
    REQUIRE(w2.has_value());
    CHECK(w2->f == 5);
    CHECK(w2->k == 1);

    CHECK_FALSE(imprimitivity_witness(NumericalSemigroup::from_generators({2, 3}))
                    .has_value());
}

TEST_CASE("enumeration counts by genus") {
    const int counts[] = {1, 1, 2, 4, 7, 12, 23, 39, 67};
    for (int g = 0; g <= 8; ++g)
        CHECK(enumerate_semigroups(g).size() == static_cast<std::size_t>(counts[g]));
    CHECK_THROWS_AS(enumerate_semigroups(13), ResourceError);
}

TEST_CASE("partition dictionary invariants over all small semigroups") {
    for (int g = 0; g <= 7; ++g)
        for (const NumericalSemigroup& s : enumerate_semigroups(g)) {
            Partition p = s.to_partition();
            CHECK(p.weight() == s.weight() + s.genus());
            CHECK(p.part(0) == (g > 0 ? g : 0));

            // primitivity matches the partition-side inequality
            bool ineq = p.part(0) - p.conjugate().part(0) >= 2 * p.part(1) - 2;
            CHECK(s.primitive() == ineq);

            // round trip through the twisted sequence
            if (g > 0) {
                CofiniteSequence seq = partition_to_sequence(p, g);
                CHECK(seq.is_semigroup);
                for (int n = 0; n < static_cast<int>(seq.prefix.size()); ++n)
                    CHECK(seq.prefix[n] == s.element(n));
            }

            // every non-primitive semigroup yields a verified witness
            auto w = imprimitivity_witness(s);
            CHECK(w.has_value() == !s.primitive());
            if (w) {
                CHECK(w->f > 2 * s.element(1));
                CHECK_FALSE(s.contains(w->f));
                CHECK(w->k == w->f - 2 * s.element(1));
            }
        }
}
