#include <doctest.h>

#include <algorithm>
#include <functional>

#include <random>

#include "confspace/homology.hpp"
#include "confspace/modp.hpp"
#include "confspace/smith.hpp"
#include "oracles.hpp"

using namespace confspace;

namespace {

SparseIntMatrix dense(std::initializer_list<std::initializer_list<long long>> rows) {
    const auto m = static_cast<Eigen::Index>(rows.size());
    const auto n = static_cast<Eigen::Index>(rows.begin()->size());
    IntMatrix A(m, n);
    Eigen::Index i = 0;
    for (const auto& row : rows) {
        Eigen::Index j = 0;
        for (long long v : row)
            A(i, j++) = v;
        ++i;
    }
    return SparseIntMatrix::from_dense(A);
}

SparseIntMatrix random_sparse(std::mt19937& rng, int max_dim, int magnitude, double density) {
    std::uniform_int_distribution<int> dim(1, max_dim), val(-magnitude, magnitude);
    std::uniform_real_distribution<double> coin(0, 1);
    const int m = dim(rng), n = dim(rng);
    std::vector<IntTriplet> t;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j)
            if (coin(rng) < density)
                t.emplace_back(i, j, BigInt(val(rng)));
    return SparseIntMatrix::from_triplets(m, n, t);
}

std::vector<BigInt> diag(const SNFResult& s) { return s.diagonal; }

} // namespace

TEST_CASE("sparse matrix invariants") {
    auto A = SparseIntMatrix::from_triplets(2, 2, {{0, 0, BigInt(1)}, {0, 0, BigInt(2)}, {1, 1, BigInt(0)}});
    CHECK(A.nonzeros() == 1);
    CHECK(A.entries().front().value() == 3);
    CHECK_THROWS(SparseIntMatrix::from_triplets(2, 2, {{2, 0, BigInt(1)}}));
}

TEST_CASE("Smith normal form examples") {
    auto s1 = smith_normal_form(dense({{2, 0}, {0, 3}}));
    CHECK(diag(s1) == std::vector<BigInt>{1, 6});
    CHECK(verify_snf(dense({{2, 0}, {0, 3}}).to_dense(), s1));

    auto s0 = smith_normal_form(SparseIntMatrix(3, 2));
    CHECK(s0.diagonal.empty());

    auto A = dense({{2, 4}, {6, 8}});
    auto s2 = smith_normal_form(A);
    CHECK(diag(s2) == std::vector<BigInt>{2, 4});
    CHECK(verify_snf(A.to_dense(), s2));
    CHECK(determinant(A.to_dense()) == -8);
}

TEST_CASE("SNF identities on random matrices") {
    std::mt19937 rng(1234);
    for (int trial = 0; trial < 150; ++trial) {
        auto A = random_sparse(rng, 12, 9, 0.35);
        auto s = smith_normal_form(A);
        REQUIRE(verify_snf(A.to_dense(), s));
        CHECK(invariant_factors(A) == s.diagonal);
        for (std::int64_t p : {2, 3, 7})
            CHECK(rank_mod_p(to_fp(A, p), p) ==
                  static_cast<std::size_t>(std::count_if(s.diagonal.begin(), s.diagonal.end(),
                                                         [p](const BigInt& d) { return d % p != 0; })));
    }
}

TEST_CASE("SNF is deterministic and exact under entry growth") {
    IntMatrix A(4, 4);
    A << 1000003, 999983, 12, 7,
         -5, 1 << 20, 3, 0,
         17, 19, 23, 29,
         2, 4, 8, 16;
    const auto a = smith_normal_form(A), b = smith_normal_form(A);
    CHECK(a.diagonal == b.diagonal);
    CHECK(a.U == b.U);
    CHECK(verify_snf(A, a));
    BigInt prod = 1;
    for (const auto& d : a.diagonal)
        prod *= d;
    BigInt det = determinant(A);
    CHECK(prod == (det < 0 ? BigInt(-det) : det));
}

TEST_CASE("determinant against cofactor expansion") {
    std::mt19937 rng(5);
    std::function<BigInt(const IntMatrix&)> cofactor = [&](const IntMatrix& M) -> BigInt {
        if (M.rows() == 1)
            return M(0, 0);
        BigInt sum = 0;
        for (Eigen::Index j = 0; j < M.cols(); ++j) {
            IntMatrix minor(M.rows() - 1, M.cols() - 1);
            for (Eigen::Index r = 1; r < M.rows(); ++r)
                for (Eigen::Index c = 0, cc = 0; c < M.cols(); ++c)
                    if (c != j)
                        minor(r - 1, cc++) = M(r, c);
            sum += (j % 2 ? -1 : 1) * M(0, j) * cofactor(minor);
        }
        return sum;
    };
    std::uniform_int_distribution<int> val(-4, 4);
    for (int n = 1; n <= 5; ++n)
        for (int trial = 0; trial < 10; ++trial) {
            IntMatrix M(n, n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    M(i, j) = val(rng);
            CHECK(determinant(M) == cofactor(M));
        }
}

TEST_CASE("solve_integer examples") {
    auto r1 = solve_integer(dense({{1}}), IntVector::Constant(1, BigInt(7)));
    REQUIRE(std::holds_alternative<IntegerSolution>(r1));
    CHECK(std::get<IntegerSolution>(r1).x(0) == 7);

    auto A2 = dense({{2}});
    IntVector b2 = IntVector::Constant(1, BigInt(1));
    auto r2 = solve_integer(A2, b2);
    REQUIRE(std::holds_alternative<InfeasibilityCertificate>(r2));
    const auto& cert = std::get<InfeasibilityCertificate>(r2);
    CHECK(cert.modulus == 2);
    CHECK(verify_certificate(A2, b2, cert));

    auto A3 = dense({{2, 3}});
    auto r3 = solve_integer(A3, IntVector::Constant(1, BigInt(1)));
    REQUIRE(std::holds_alternative<IntegerSolution>(r3));
    CHECK(A3.multiply(std::get<IntegerSolution>(r3).x)(0) == 1);

    // outside the column space over Q
    auto A4 = dense({{1}, {1}});
    IntVector b4(2);
    b4 << 1, 2;
    auto r4 = solve_integer(A4, b4);
    REQUIRE(std::holds_alternative<InfeasibilityCertificate>(r4));
    CHECK(std::get<InfeasibilityCertificate>(r4).modulus == 0);
    CHECK(verify_certificate(A4, b4, std::get<InfeasibilityCertificate>(r4)));

    CHECK_THROWS_AS(solve_integer(A4, IntVector::Constant(3, BigInt(1))), DomainError);
}

TEST_CASE("solve_integer round trip and certificates") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> val(-6, 6);
    for (int trial = 0; trial < 100; ++trial) {
        auto A = random_sparse(rng, 10, 5, 0.4);
        IntVector x0(A.cols());
        for (Eigen::Index i = 0; i < x0.size(); ++i)
            x0(i) = val(rng);
        const IntVector b = A.multiply(x0);
        auto r = solve_integer(A, b);
        REQUIRE(std::holds_alternative<IntegerSolution>(r));
        CHECK(verify_solution(A, b, std::get<IntegerSolution>(r).x));

        IntVector noise(A.rows());
        for (Eigen::Index i = 0; i < noise.size(); ++i)
            noise(i) = val(rng);
        auto r2 = solve_integer(A, noise);
        if (auto* sol = std::get_if<IntegerSolution>(&r2))
            CHECK(verify_solution(A, noise, sol->x));
        else
            CHECK(verify_certificate(A, noise, std::get<InfeasibilityCertificate>(r2)));
    }
}

TEST_CASE("ranks mod p agree across elimination orders and with the oracle") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 60; ++trial) {
        auto A = random_sparse(rng, 25, 4, 0.2);
        for (std::int64_t p : {2, 3, 5}) {
            const auto by_cols = sparse_rank_mod_p(A, p, EliminationOrder::ByColumns);
            const auto by_rows = sparse_rank_mod_p(A, p, EliminationOrder::ByRows);
            std::vector<std::vector<long long>> rows(static_cast<std::size_t>(A.rows()),
                                                     std::vector<long long>(static_cast<std::size_t>(A.cols()), 0));
            for (const auto& t : A.entries())
                rows[static_cast<std::size_t>(t.row())][static_cast<std::size_t>(t.col())] =
                    static_cast<long long>(t.value());
            CHECK(by_cols == by_rows);
            CHECK(by_cols == oracle::rank_mod_p(rows, p));
            CHECK(by_cols == rank_mod_p(to_fp(A, p), p));
        }
    }
}

TEST_CASE("dense F_p helpers") {
    FpMatrix M(2, 2);
    M << 1, 2, 3, 4;
    const auto inv = inverse_mod_p(M, 5);
    CHECK(mul_mod_p(M, inv, 5) == FpMatrix::Identity(2, 2));
    FpMatrix S(2, 2);
    S << 1, 2, 2, 4;
    CHECK_THROWS_AS(inverse_mod_p(S, 5), DomainError);
    const auto N = nullspace_mod_p(S, 5);
    CHECK(N.cols() == 1);
    CHECK(mul_mod_p(S, N, 5).isZero());
    CHECK_THROWS_AS(require_field_prime(4), DomainError);
    CHECK_THROWS_AS(require_field_prime(32749), DomainError);
}

TEST_CASE("homology of partition lattices") {
    const long long factorials[] = {1, 1, 2, 6, 24, 120};
    for (int n = 3; n <= 6; ++n) {
        auto cc = chain_complex(proper_part_complex(PartitionLattice::build(n)), Coefficients::integers());
        auto h = homology(cc);
        for (const auto& d : h.degrees) {
            CHECK(d.torsion.empty());
            CHECK(d.betti == (d.degree == n - 3 ? static_cast<std::size_t>(factorials[n - 1]) : 0u));
        }
        auto cc2 = chain_complex(proper_part_complex(PartitionLattice::build(n)), Coefficients::field(2));
        auto a = homology(cc2, {.order = EliminationOrder::ByColumns});
        auto b = homology(cc2, {.order = EliminationOrder::ByRows});
        for (int r = -1; r <= n - 3; ++r)
            CHECK(a.betti(r) == b.betti(r));
    }
}

TEST_CASE("torsion of the real projective plane") {
    // 6-vertex triangulation of RP^2
    auto rp2 = SimplicialComplex::from_facets(
        {"1", "2", "3", "4", "5", "6"},
        {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5}, {1, 2, 4}, {2, 3, 5}, {1, 3, 4}, {2, 4, 5}, {1, 3, 5}});
    auto hz = homology(chain_complex(rp2, Coefficients::integers()));
    CHECK(hz.betti(1) == 0);
    CHECK(hz.torsion(1) == std::vector<BigInt>{2});
    CHECK(hz.betti(2) == 0);
    auto h2 = homology(chain_complex(rp2, Coefficients::field(2)));
    CHECK(h2.betti(1) == 1);
    CHECK(h2.betti(2) == 1);
}

TEST_CASE("cycle bases and projection") {
    auto tri = SimplicialComplex::from_facets({"a", "b", "c"}, {{0, 1}, {1, 2}, {0, 2}});
    auto cc = chain_complex(tri, Coefficients::field(2));
    auto h = homology(cc, {.with_basis = true});
    CHECK(h.betti(1) == 1);
    REQUIRE(h.bases.contains(1));
    const auto& basis = h.bases.at(1);
    CHECK(basis.size() == 1);
    FpVector z = FpVector::Ones(3);
    CHECK(basis.coordinates(z)(0) == 1);
    FpVector not_cycle = FpVector::Zero(3);
    not_cycle(0) = 1;
    CHECK_THROWS_AS(basis.coordinates(not_cycle), DomainError);
    CHECK_THROWS_AS(homology(chain_complex(tri, Coefficients::integers()), {.with_basis = true}), DomainError);
}
