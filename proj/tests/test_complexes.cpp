#include <doctest.h>

#include <algorithm>

#include <random>

#include "confspace/complex.hpp"
#include "confspace/homology.hpp"
#include "oracles.hpp"

using namespace confspace;

namespace {

SimplicialComplex hollow_triangle() {
    return SimplicialComplex::from_facets({"a", "b", "c"}, {{0, 1}, {1, 2}, {0, 2}});
}

} // namespace

TEST_CASE("order complexes of partition lattices") {
    auto l3 = PartitionLattice::build(3);
    auto pp3 = proper_part_complex(l3);
    CHECK(pp3.count(0) == 3);
    CHECK(pp3.dimension() == 0);

    auto l4 = PartitionLattice::build(4);
    auto pp4 = proper_part_complex(l4);
    CHECK(pp4.count(0) == 13);
    CHECK(pp4.count(1) == 18);
    CHECK(pp4.dimension() == 1);

    const auto atom = l3.index_of(Partition::parse("12|3"));
    auto empty = order_complex(l3, l3.bottom(), atom);
    CHECK(empty.empty());
    CHECK(empty.dimension() == -1);
    CHECK_THROWS_AS(order_complex(l3, atom, l3.bottom()), OrderError);
}

TEST_CASE("reduced Euler characteristic equals the Möbius function") {
    for (int n = 1; n <= 5; ++n) {
        auto l = PartitionLattice::build(n);
        for (std::size_t x = 0; x < l.size(); ++x)
            for (std::size_t y = x + 1; y < l.size(); ++y)
                if (l.leq(x, y))
                    CHECK(order_complex(l, x, y).reduced_euler_characteristic() == mobius(l, l[x], l[y]));
    }
}

TEST_CASE("chain complexes of small spaces") {
    auto h = homology(chain_complex(hollow_triangle(), Coefficients::integers()));
    CHECK(h.betti(0) == 0);
    CHECK(h.betti(1) == 1);

    auto with = homology(chain_complex(SimplicialComplex{}, Coefficients::integers(), true));
    CHECK(with.betti(-1) == 1);
    auto without = homology(chain_complex(SimplicialComplex{}, Coefficients::integers(), false));
    CHECK(without.betti(-1) == 0);

    auto point = SimplicialComplex::from_facets({"v"}, {{0}});
    for (auto d : homology(chain_complex(point, Coefficients::integers())).degrees)
        CHECK(d.betti == 0);
}

TEST_CASE("from_simplices rejects complexes that are not face-closed") {
    CHECK_THROWS_AS(SimplicialComplex::from_simplices({"a", "b"}, {{{0}}, {{0, 1}}}), StructuralError);
    CHECK_THROWS_AS(SimplicialComplex::from_simplices({"a", "b"}, {{{0}, {1}}, {{1, 0}}}), StructuralError);
}

TEST_CASE("boundary squares to zero on random subcomplexes of Π_n") {
    std::mt19937 rng(7);
    for (int n = 3; n <= 5; ++n) {
        auto full = proper_part_complex(PartitionLattice::build(n));
        const auto top = full.facets();
        for (int trial = 0; trial < 10; ++trial) {
            std::vector<SimplicialComplex::Simplex> chosen;
            for (const auto& f : top)
                if (rng() % 3 == 0)
                    chosen.push_back(f);
            auto sub = SimplicialComplex::from_facets(full.vertices(), chosen);
            CHECK(chain_complex(sub, Coefficients::integers()).boundary_squares_to_zero());
            CHECK(chain_complex(sub, Coefficients::field(3)).boundary_squares_to_zero());
        }
    }
}

TEST_CASE("induced chain maps") {
    auto tri = hollow_triangle();
    auto id = induced_chain_map(tri, {0, 1, 2});
    CHECK(id.is_identity());

    // swap a and b: the edge {a, b} keeps its vertex set but reverses orientation
    auto swap = induced_chain_map(tri, {1, 0, 2});
    const auto d1 = swap.at(1).to_dense();
    const auto ab = *tri.index_of({0, 1});
    CHECK(d1(static_cast<Eigen::Index>(ab), static_cast<Eigen::Index>(ab)) == -1);
    auto cc = chain_complex(tri, Coefficients::integers());
    CHECK(commutes_with_boundary(cc, cc, swap));

    auto l3 = PartitionLattice::build(3);
    auto pp = proper_part_complex(l3);
    const auto g = Permutation::parse_cycles(3, "(1 2 3)");
    auto f = induced_chain_map(pp, vertex_map_from_permutation(pp, g));
    const auto m0 = f.at(0).to_dense();
    CHECK(m0.rows() == 3);
    for (Eigen::Index j = 0; j < 3; ++j) {
        int ones = 0;
        for (Eigen::Index i = 0; i < 3; ++i)
            ones += m0(i, j) == 1 ? 1 : 0;
        CHECK(ones == 1);
    }
    // {12|3} -> {1|23}
    const auto vmap = vertex_map_from_permutation(pp, g);
    const auto& labels = pp.vertices();
    const auto v = static_cast<std::size_t>(std::find(labels.begin(), labels.end(), "12|3") - labels.begin());
    REQUIRE(v < labels.size());
    const auto w = static_cast<std::size_t>(vmap[v]);
    CHECK(labels[w] == "1|23");
    CHECK(m0(static_cast<Eigen::Index>(w), static_cast<Eigen::Index>(v)) == 1);

    CHECK_THROWS_AS(induced_chain_map(tri, {0, 0, 2}), StructuralError);
    auto path = SimplicialComplex::from_facets({"a", "b", "c"}, {{0, 1}, {1, 2}});
    try {
        induced_chain_map(path, {1, 2, 0});
        FAIL("expected a structural error");
    } catch (const StructuralError& e) {
        CHECK(std::string(e.what()).find('b') != std::string::npos);
    }
}

TEST_CASE("group elements induce chain automorphisms of finite order") {
    auto l = PartitionLattice::build(5);
    auto pp = proper_part_complex(l);
    auto cc = chain_complex(pp, Coefficients::integers());
    for (const char* cycles : {"(1 2 3 4 5)", "(1 2)(3 4)", "(1 2 3)"}) {
        const auto g = Permutation::parse_cycles(5, cycles);
        const auto f = induced_chain_map(pp, vertex_map_from_permutation(pp, g));
        CHECK(commutes_with_boundary(cc, cc, f));
        ChainMap power = f;
        for (int i = 1; i < g.order(); ++i)
            power = power * f;
        CHECK(power.is_identity());
    }
}
