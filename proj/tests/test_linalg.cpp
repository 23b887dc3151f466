#include "doctest.h"

#include "extpow/linalg.hpp"

#include <random>

using namespace extpow;

namespace {

Matrix mat(Ring ring, std::size_t r, std::size_t c, std::vector<int> v) {
    std::vector<Rat> e(v.begin(), v.end());
    return Matrix(ring, r, c, std::move(e));
}

Matrix random_matrix(Ring ring, std::size_t r, std::size_t c, std::mt19937_64& rng, int lo = -3, int hi = 3) {
    std::uniform_int_distribution<int> dist(lo, hi);
    Matrix m(ring, r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m.set(i, j, dist(rng));
    return m;
}

Matrix diag_of(const SmithForm& s, std::size_t rows, std::size_t cols, Ring ring) {
    Matrix d(ring, rows, cols);
    for (std::size_t i = 0; i < s.diag.size(); ++i) d.set(i, i, s.diag[i]);
    return d;
}

} // namespace

TEST_CASE("smith normal form on pinned examples") {
    Ring z = Ring::Z();
    SUBCASE("identity") {
        SmithForm s = smith_normal_form(Matrix::identity(z, 2));
        REQUIRE(s.diag.size() == 2);
        CHECK(s.diag[0] == 1);
        CHECK(s.diag[1] == 1);
    }
    SUBCASE("gcd 2, det 8 gives diag(2,4)") {
        // elementary divisors: d1 = gcd of entries = 2, d1*d2 = |det| = 8
        Matrix a = mat(z, 2, 2, {2, 4, 6, 8});
        SmithForm s = smith_normal_form(a);
        REQUIRE(s.diag.size() == 2);
        CHECK(s.diag[0] == 2);
        CHECK(s.diag[1] == 4);
        CHECK(s.left * a * s.right == diag_of(s, 2, 2, z));
    }
    SUBCASE("zero matrix has empty diagonal") {
        SmithForm s = smith_normal_form(Matrix::zero(z, 2, 3));
        CHECK(s.diag.empty());
    }
}

TEST_CASE("smith normal form invariants on random matrices") {
    std::mt19937_64 rng(20240811);
    for (const Ring& ring : {Ring::Z(), Ring::Q(), Ring::Fp(5)}) {
        for (int trial = 0; trial < 40; ++trial) {
            std::size_t r = 1 + (rng() % 4), c = 1 + (rng() % 4);
            Matrix a = random_matrix(ring, r, c, rng, -6, 6);
            SmithForm s = smith_normal_form(a);
            CHECK(s.left * a * s.right == diag_of(s, r, c, ring));
            CHECK(ring.is_unit(det(s.left)));
            CHECK(ring.is_unit(det(s.right)));
            CHECK(s.diag.size() == rank(a));
            if (!ring.is_field()) {
                for (std::size_t i = 0; i + 1 < s.diag.size(); ++i)
                    CHECK(num(s.diag[i + 1]) % num(s.diag[i]) == 0);
            } else {
                for (const auto& d : s.diag) CHECK(d == 1);
            }
        }
    }
}

TEST_CASE("kernel and image bases") {
    Ring z = Ring::Z();
    Ring q = Ring::Q();

    SUBCASE("identity has no kernel") {
        CHECK(kernel_basis(Matrix::identity(z, 3)).cols() == 0);
    }
    SUBCASE("image lattice of [[2]] is 2Z, not saturated") {
        Matrix b = image_basis(mat(z, 1, 1, {2}));
        REQUIRE(b.cols() == 1);
        CHECK(b(0, 0) == 2);
    }
    SUBCASE("rank-1 kernel and image over Q") {
        Matrix a = mat(q, 2, 2, {1, 1, 1, 1});
        CHECK(kernel_basis(a).cols() == 1);
        CHECK(image_basis(a).cols() == 1);
    }
    SUBCASE("kernel columns are killed and the kernel lattice is saturated") {
        std::mt19937_64 rng(7);
        for (int trial = 0; trial < 60; ++trial) {
            std::size_t r = 1 + (rng() % 4), c = 1 + (rng() % 4);
            Matrix a = random_matrix(z, r, c, rng);
            Matrix k = kernel_basis(a);
            CHECK((a * k).is_zero());
            CHECK(rank(a) + k.cols() == c);
            if (k.cols() > 0) {
                SmithForm s = smith_normal_form(k);
                for (const auto& d : s.diag) CHECK((d == 1 || d == -1));
            }
        }
    }
    SUBCASE("rank equals number of invariant factors equals image rank") {
        std::mt19937_64 rng(8);
        for (int trial = 0; trial < 40; ++trial) {
            std::size_t r = 1 + (rng() % 4), c = 1 + (rng() % 4);
            Matrix a = random_matrix(z, r, c, rng);
            SmithForm s = smith_normal_form(a);
            CHECK(s.diag.size() == image_basis(a).cols());
        }
    }
    SUBCASE("canonical image basis identifies equal lattices") {
        std::mt19937_64 rng(9);
        for (int trial = 0; trial < 30; ++trial) {
            Matrix a = random_matrix(z, 3, 3, rng);
            // appending integer combinations of existing columns keeps the lattice
            Matrix comb = a * random_matrix(z, 3, 2, rng);
            CHECK(image_basis(Matrix::hcat(a, comb)) == image_basis(a));
        }
    }
}

TEST_CASE("exterior power matrices") {
    Ring z = Ring::Z();
    SUBCASE("identity maps to identity of binomial size") {
        for (std::size_t n : {2, 3, 4})
            for (std::size_t k : {1, 2, 3})
                if (k <= n) CHECK(exterior_power_matrix(Matrix::identity(z, n), k) ==
                                  Matrix::identity(z, binomial(Int(n), k).convert_to<std::size_t>()));
    }
    SUBCASE("diagonal 2x2 at k=2 is the determinant") {
        Matrix a = mat(z, 2, 2, {3, 0, 0, 5});
        Matrix e = exterior_power_matrix(a, 2);
        REQUIRE(e.rows() == 1);
        CHECK(e(0, 0) == 15);
    }
    SUBCASE("3x3 at k=2 equals the signed-minor table") {
        // independent oracle: enumerate 2x2 minors directly
        Matrix a = mat(z, 3, 3, {1, 2, 3, 4, 5, 6, 7, 8, 10});
        Matrix e = exterior_power_matrix(a, 2);
        const std::size_t pair_rows[3][2] = {{0, 1}, {0, 2}, {1, 2}};
        for (std::size_t s = 0; s < 3; ++s)
            for (std::size_t t = 0; t < 3; ++t) {
                std::size_t r0 = pair_rows[s][0], r1 = pair_rows[s][1];
                std::size_t c0 = pair_rows[t][0], c1 = pair_rows[t][1];
                Rat minor = a(r0, c0) * a(r1, c1) - a(r0, c1) * a(r1, c0);
                CHECK(e(s, t) == minor);
            }
    }
    SUBCASE("functorial under composition") {
        std::mt19937_64 rng(11);
        for (int trial = 0; trial < 100; ++trial) {
            std::size_t n = 2 + (rng() % 3), m = 2 + (rng() % 3), p = 2 + (rng() % 3);
            Matrix a = random_matrix(z, n, m, rng);
            Matrix b = random_matrix(z, m, p, rng);
            for (std::size_t k : {2, 3})
                CHECK(exterior_power_matrix(a * b, k) ==
                      exterior_power_matrix(a, k) * exterior_power_matrix(b, k));
        }
    }
}

TEST_CASE("kronecker product") {
    Ring z = Ring::Z();
    CHECK(Matrix::kronecker(Matrix::identity(z, 2), Matrix::identity(z, 3)) == Matrix::identity(z, 6));
    CHECK(Matrix::kronecker(mat(z, 1, 1, {2}), mat(z, 1, 1, {3})) == mat(z, 1, 1, {6}));
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 50; ++trial) {
        Matrix a = random_matrix(z, 2, 2, rng), b = random_matrix(z, 2, 2, rng);
        Matrix c = random_matrix(z, 2, 2, rng), d = random_matrix(z, 2, 2, rng);
        CHECK(Matrix::kronecker(a, b) * Matrix::kronecker(c, d) == Matrix::kronecker(a * c, b * d));
    }
}

TEST_CASE("exact solving") {
    Ring z = Ring::Z();
    SUBCASE("integral system") {
        Matrix a = mat(z, 2, 1, {2, 4});
        Matrix b = mat(z, 2, 1, {6, 12});
        Matrix x = solve_or_throw(a, b);
        CHECK(a * x == b);
    }
    SUBCASE("no integral solution") {
        CHECK(!solve_exact(mat(z, 1, 1, {2}), mat(z, 1, 1, {3})).has_value());
    }
    SUBCASE("inconsistent system") {
        CHECK(!solve_exact(mat(z, 2, 1, {1, 1}), mat(z, 2, 1, {1, 2})).has_value());
    }
    SUBCASE("random consistent systems over three rings") {
        std::mt19937_64 rng(17);
        for (const Ring& ring : {Ring::Z(), Ring::Q(), Ring::Fp(2)}) {
            for (int trial = 0; trial < 30; ++trial) {
                Matrix a = random_matrix(ring, 3, 2, rng);
                Matrix x0 = random_matrix(ring, 2, 2, rng);
                Matrix x = solve_or_throw(a, a * x0);
                CHECK(a * x == a * x0);
            }
        }
    }
}

TEST_CASE("cokernel splitting of admissible monos") {
    std::mt19937_64 rng(19);
    for (const Ring& ring : {Ring::Z(), Ring::Fp(2)}) {
        for (int trial = 0; trial < 30; ++trial) {
            // U [I;0] is an admissible mono for invertible U
            std::size_t n = 3 + (rng() % 2), r = 1 + (rng() % 2);
            Matrix u = Matrix::identity(ring, n);
            for (int ops = 0; ops < 6; ++ops) {
                std::size_t i = rng() % n, j = rng() % n;
                if (i == j) continue;
                Matrix e = Matrix::identity(ring, n);
                e.set(i, j, int(rng() % 5) - 2);
                u = u * e;
            }
            Matrix incl(ring, n, r);
            for (std::size_t i = 0; i < r; ++i) incl.set(i, i, 1);
            Matrix a = u * incl;
            REQUIRE(is_admissible_mono(a));
            CokernelSplitting cs = cokernel_splitting(a);
            CHECK((cs.projection * a).is_zero());
            CHECK(cs.projection * cs.section == Matrix::identity(ring, n - r));
        }
    }
    CHECK(!is_admissible_mono(mat(Ring::Z(), 1, 1, {2})));
}

TEST_CASE("cokernel presentations") {
    Ring z = Ring::Z();
    AbelianPresentation p = cokernel_presentation(mat(z, 1, 1, {2}), 1);
    CHECK(p.free_rank == 0);
    REQUIRE(p.torsion.size() == 1);
    CHECK(p.torsion[0] == 2);
    AbelianPresentation q = cokernel_presentation(Matrix::zero(z, 2, 0), 2);
    CHECK(q.free_rank == 2);
    CHECK(q.torsion.empty());
}

TEST_CASE("binomial coefficients including negative upper index") {
    CHECK(binomial(Int(6), 2) == 15);
    CHECK(binomial(Int(4), 2) == 6);
    CHECK(binomial(Int(0), 0) == 1);
    CHECK(binomial(Int(-1), 2) == 1);
    CHECK(binomial(Int(-1), 3) == -1);
    CHECK(binomial(Int(2), 5) == 0);
}
