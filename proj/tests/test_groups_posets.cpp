#include <doctest.h>

#include <random>

#include "confspace/group.hpp"
#include "confspace/partition.hpp"
#include "oracles.hpp"

using namespace confspace;

TEST_CASE("lattice sizes follow the Bell triangle") {
    const auto bell = oracle::bell_triangle(9);
    for (int n = 1; n <= 9; ++n) {
        CHECK(bell_number(n) == bell[static_cast<std::size_t>(n)]);
        CHECK(PartitionLattice::build(n).size() == bell[static_cast<std::size_t>(n)]);
    }
}

TEST_CASE("small lattices") {
    auto l3 = PartitionLattice::build(3);
    CHECK(l3.size() == 5);
    CHECK(l3[l3.bottom()].to_string() == "1|2|3");
    CHECK(l3[l3.top()].to_string() == "123");

    auto l1 = PartitionLattice::build(1);
    CHECK(l1.size() == 1);
    CHECK(l1.bottom() == l1.top());

    auto l4 = PartitionLattice::build(4);
    const auto counts = l4.rank_counts();
    CHECK(l4.size() == 15);
    CHECK(counts[2] == 7);
    CHECK(counts[3] == 6);

    std::map<int, std::size_t> brute;
    for (const auto& a : oracle::set_partitions(4))
        ++brute[oracle::block_count(a)];
    CHECK(brute[2] == 7);
    CHECK(brute[3] == 6);
}

TEST_CASE("size cap names the Bell number") {
    try {
        PartitionLattice::build(13);
        FAIL("expected a size-limit error");
    } catch (const SizeLimitError& e) {
        CHECK(std::string(e.what()).find(std::to_string(bell_number(13))) != std::string::npos);
    }
}

TEST_CASE("partition parsing and canonical form") {
    CHECK(Partition::parse("3|12").to_string() == "12|3");
    CHECK(Partition::parse("21|43") == Partition::parse("12|34"));
    CHECK(Partition::from_blocks(4, {{4, 1}, {3, 2}}).to_string() == "14|23");
    CHECK(Partition::parse("1,10|2,3,4,5,6,7,8,9").n() == 10);
}

TEST_CASE("refinement order against the brute-force predicate") {
    const auto all = oracle::set_partitions(5);
    auto lattice = PartitionLattice::build(5);
    for (const auto& a : all)
        for (const auto& b : all) {
            auto pa = Partition::from_labels(a), pb = Partition::from_labels(b);
            CHECK(pa.refines(pb) == oracle::refines(a, b));
        }
    CHECK(lattice.size() == all.size());
}

TEST_CASE("index order extends the lattice order") {
    auto l = PartitionLattice::build(5);
    for (std::size_t i = 0; i < l.size(); ++i)
        for (std::size_t j = 0; j < l.size(); ++j)
            if (i != j && l.leq(i, j))
                CHECK(i < j);
}

TEST_CASE("Möbius values") {
    auto l3 = PartitionLattice::build(3);
    auto l4 = PartitionLattice::build(4);
    CHECK(mobius(l3, l3[0], l3[0]) == 1);
    CHECK(mobius(l3, l3[l3.bottom()], l3[l3.top()]) == 2);
    CHECK(mobius(l4, l4[l4.bottom()], l4[l4.top()]) == -6);
    CHECK_THROWS_AS(mobius(l3, l3[l3.top()], l3[l3.bottom()]), OrderError);
}

TEST_CASE("Möbius agrees with the defining recursion and sums to a delta") {
    for (int n = 1; n <= 5; ++n) {
        const auto all = oracle::set_partitions(n);
        auto l = PartitionLattice::build(n);
        for (std::size_t x = 0; x < all.size(); ++x)
            for (std::size_t y = 0; y < all.size(); ++y) {
                if (!oracle::refines(all[x], all[y]))
                    continue;
                const auto px = Partition::from_labels(all[x]), py = Partition::from_labels(all[y]);
                CHECK(mobius(l, px, py) == oracle::mobius(all, x, y));
            }
    }
    auto l6 = PartitionLattice::build(6);
    std::mt19937 rng(6);
    std::uniform_int_distribution<std::size_t> pick(0, l6.size() - 1);
    for (int trial = 0; trial < 40; ++trial) {
        const auto x = pick(rng);
        const auto y = pick(rng);
        if (!l6.leq(x, y))
            continue;
        long long sum = 0;
        for (auto z : l6.interval(x, y, false))
            sum += mobius(l6, l6[x], l6[z]);
        CHECK(sum == (x == y ? 1 : 0));
    }
}

TEST_CASE("meet and join satisfy absorption") {
    std::mt19937 rng(42);
    for (int n = 2; n <= 6; ++n) {
        auto l = PartitionLattice::build(n);
        std::uniform_int_distribution<std::size_t> pick(0, l.size() - 1);
        for (int trial = 0; trial < 200; ++trial) {
            const auto a = pick(rng), b = pick(rng), c = pick(rng);
            CHECK(l.join(a, l.meet(a, b)) == a);
            CHECK(l.meet(a, l.join(a, b)) == a);
            CHECK(l.leq(l.meet(a, b), a));
            CHECK(l.leq(b, l.join(a, b)));
            CHECK(l.meet(a, l.meet(b, c)) == l.meet(l.meet(a, b), c));
        }
    }
}

TEST_CASE("group closure") {
    const auto c3 = group_from_generators(3, {Permutation::parse_cycles(3, "(1 2 3)")});
    CHECK(c3.order() == 3);
    CHECK(group_from_generators(3, {}).order() == 1);
    const auto s3 = group_from_generators(
        3, {Permutation::parse_cycles(3, "(1 2)"), Permutation::parse_cycles(3, "(1 2 3)")});
    CHECK(s3.order() == 6);
    const auto s7 = group_from_generators(
        7, {Permutation::parse_cycles(7, "(1 2)"), Permutation::parse_cycles(7, "(1 2 3 4 5 6 7)")});
    CHECK(s7.order() == 5040);
    CHECK_THROWS_AS(group_from_generators(7,
                                          {Permutation::parse_cycles(7, "(1 2)"),
                                           Permutation::parse_cycles(7, "(1 2 3 4 5 6 7)")},
                                          100),
                    SizeLimitError);
}

TEST_CASE("permutation basics") {
    const auto g = Permutation::parse_cycles(4, "(1 2 3)(4)");
    CHECK(g.order() == 3);
    CHECK(g.sign() == 1);
    CHECK((g * g.inverse()).is_identity());
    CHECK(Permutation::parse_cycles(4, "(1 2)").sign() == -1);
    CHECK(Permutation::from_images({2, 3, 1}) == Permutation::parse_cycles(3, "(1 2 3)"));
    CHECK(g.act(Partition::parse("12|34")).to_string() == "14|23");
}

TEST_CASE("regular embedding") {
    const auto v4 = regular_embedding(2, 2);
    CHECK(v4.order() == 4);
    const auto& gens = v4.generators();
    REQUIRE(gens.size() == 2);
    CHECK(gens[0] == Permutation::parse_cycles(4, "(1 2)(3 4)"));
    CHECK(gens[1] == Permutation::parse_cycles(4, "(1 3)(2 4)"));
    CHECK(regular_embedding(3, 1).generators().front() == Permutation::parse_cycles(3, "(1 2 3)"));

    const auto e8 = regular_embedding(2, 3);
    CHECK(e8.order() == 8);
    for (const auto& g : e8.elements()) {
        if (g.is_identity())
            continue;
        CHECK(g.order() == 2);
        for (int i = 0; i < 8; ++i)
            CHECK(g(i) != i);
    }
    for (auto [p, k] : {std::pair{3, 2}, std::pair{2, 4}, std::pair{5, 1}}) {
        const auto group = regular_embedding(p, k);
        for (const auto& g : group.elements())
            if (!g.is_identity())
                for (int i = 0; i < g.degree(); ++i)
                    CHECK(g(i) != i);
    }
    CHECK_THROWS_AS(regular_embedding(3, 3), SizeLimitError);
}

TEST_CASE("orbits and stabilizers") {
    auto l4 = PartitionLattice::build(4);
    const auto v4 = regular_embedding(2, 2);
    std::vector<std::string> full_size2;
    for (const auto& e : orbits_and_stabilizers(v4, l4)) {
        CHECK(e.orbit_size * e.stabilizer.order() == v4.order());
        if (e.representative.size() == 2 && e.stabilizer.order() == v4.order())
            full_size2.push_back(e.representative.to_string());
        if (e.representative_index == l4.top())
            CHECK(e.stabilizer.order() == v4.order());
    }
    std::sort(full_size2.begin(), full_size2.end());
    CHECK(full_size2 == std::vector<std::string>{"12|34", "13|24", "14|23"});

    auto l3 = PartitionLattice::build(3);
    const auto c3 = cyclic_group(3);
    std::size_t covered = 0;
    for (const auto& e : orbits_and_stabilizers(c3, l3)) {
        covered += e.orbit_size;
        if (e.representative.size() == 2) {
            CHECK(e.orbit_size == 3);
            CHECK(e.stabilizer.order() == 1);
        }
    }
    CHECK(covered == l3.size());
    CHECK_THROWS_AS(orbits_and_stabilizers(c3, l4), DomainError);
}
