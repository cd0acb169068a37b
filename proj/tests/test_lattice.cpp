#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "tvar/lattice.hpp"

using namespace tvar;

namespace {

IntMat random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int bound) {
    std::uniform_int_distribution<int> dist(-bound, bound);
    IntMat m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = dist(rng);
    return m;
}

// random unimodular matrix as a product of elementary operations
IntMat random_unimodular(std::mt19937_64& rng, std::size_t n, int steps = 8) {
    std::uniform_int_distribution<int> coef(-2, 2);
    std::uniform_int_distribution<std::size_t> pick(0, n ? n - 1 : 0);
    IntMat u = IntMat::identity(n);
    for (int s = 0; s < steps && n > 1; ++s) {
        std::size_t i = pick(rng), j = pick(rng);
        if (i == j) continue;
        Int c(coef(rng));
        for (std::size_t k = 0; k < n; ++k) u.at(i, k) += c * u.at(j, k);
    }
    return u;
}

Int det3(const IntMat& m) {
    // bareiss just for small checks
    REQUIRE(m.rows() == m.cols());
    if (m.rows() == 0) return 1;
    if (m.rows() == 1) return m.at(0, 0);
    if (m.rows() == 2) return m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0);
    Int d = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) {
        IntMat minor(m.rows() - 1, m.cols() - 1);
        for (std::size_t r = 1; r < m.rows(); ++r) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < m.cols(); ++c) {
                if (c == j) continue;
                minor.at(r - 1, cc++) = m.at(r, c);
            }
        }
        Int term = m.at(0, j) * det3(minor);
        d += (j % 2 == 0) ? term : -term;
    }
    return d;
}

}  // namespace

TEST_CASE("smith normal form identities") {
    SUBCASE("identity") {
        IntMat a = IntMat::identity(2);
        auto d = smith_normal_form(a);
        CHECK(d.s == IntMat::identity(2));
        CHECK(d.u * a * d.v == d.s);
    }
    SUBCASE("tall embedding") {
        IntMat a{{1, 0}, {0, 1}, {1, 1}};
        auto d = smith_normal_form(a);
        CHECK(d.u * a * d.v == d.s);
        CHECK(d.s.at(0, 0) == 1);
        CHECK(d.s.at(1, 1) == 1);
        CHECK(d.s.at(2, 0) == 0);
        CHECK(d.s.at(2, 1) == 0);
    }
    SUBCASE("divisibility chain") {
        IntMat a{{2, 4}, {6, 8}};
        auto d = smith_normal_form(a);
        CHECK(d.u * a * d.v == d.s);
        CHECK(d.s.at(0, 0) == 2);
        CHECK(d.s.at(1, 1) == 4);
    }
    SUBCASE("randomized") {
        std::mt19937_64 rng(7);
        for (int trial = 0; trial < 200; ++trial) {
            std::uniform_int_distribution<std::size_t> size(1, 6);
            IntMat a = random_matrix(rng, size(rng), size(rng), 9);
            auto d = smith_normal_form(a);
            CHECK(d.u * a * d.v == d.s);
            CHECK(abs(det3(d.u)) == 1);
            CHECK(abs(det3(d.v)) == 1);
            std::size_t k = std::min(a.rows(), a.cols());
            for (std::size_t i = 0; i + 1 < k; ++i) {
                CHECK(d.s.at(i, i) >= 0);
                if (d.s.at(i + 1, i + 1) != 0) {
                    CHECK(d.s.at(i, i) != 0);
                    CHECK(d.s.at(i + 1, i + 1) % d.s.at(i, i) == 0);
                }
            }
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j)
                    if (i != j) CHECK(d.s.at(i, j) == 0);
        }
    }
}

TEST_CASE("hermite rows") {
    IntMat a{{-1, -1, 1}};
    IntMat h = hermite_rows(a);
    CHECK(h == IntMat{{1, 1, -1}});

    IntMat b{{2, 0}, {1, 1}};
    IntMat hb = hermite_rows(b);
    // pivots positive, reduced above
    CHECK(hb.at(0, 0) > 0);
    CHECK(hb.at(1, 0) == 0);
}

TEST_CASE("cokernel projection") {
    SUBCASE("paper projection for the A3 embedding") {
        IntMat f{{1, 0}, {0, 1}, {1, 1}};
        IntMat p = cokernel_projection(f);
        CHECK((p * f).is_zero());
        CHECK(p.rows() == 1);
        // equals [-1,-1,1] up to a unimodular (here: sign) left factor
        bool plus = (p == IntMat{{1, 1, -1}});
        bool minus = (p == IntMat{{-1, -1, 1}});
        CHECK((plus || minus));
    }
    SUBCASE("paper projection for the A4 embedding") {
        IntMat fstar{{1, 0, 1, 2}, {0, 1, 2, 1}};
        IntMat f = fstar.transpose();
        IntMat p = cokernel_projection(f);
        CHECK((p * f).is_zero());
        CHECK(p.rows() == 2);
        // rows must span the same lattice as the paper's projection
        IntMat paper{{-1, -2, 1, 0}, {-2, -1, 0, 1}};
        CHECK(hermite_rows(p) == hermite_rows(paper));
    }
    SUBCASE("identity has empty cokernel") {
        IntMat p = cokernel_projection(IntMat::identity(3));
        CHECK(p.rows() == 0);
        CHECK(p.cols() == 3);
    }
    SUBCASE("torsion rejected") {
        IntMat f{{2}, {0}};
        CHECK_THROWS_AS(cokernel_projection(f), Error);
        try {
            cokernel_projection(f);
        } catch (const Error& e) {
            CHECK(e.code == "NotSaturated");
        }
    }
}

TEST_CASE("cosection") {
    SUBCASE("A3 embedding") {
        IntMat f{{1, 0}, {0, 1}, {1, 1}};
        IntMat s = cosection(f);
        CHECK(s * f == IntMat::identity(2));
    }
    SUBCASE("diagonal Gm in Gm^2 lands on the paper's choice") {
        IntMat f{{1}, {1}};
        IntMat s = cosection(f);
        CHECK(s * f == IntMat::identity(1));
        CHECK(s == IntMat{{0, 1}});
    }
    SUBCASE("identity") {
        CHECK(cosection(IntMat::identity(3)) == IntMat::identity(3));
    }
}

TEST_CASE("equivariant cosection") {
    IntMat swap2{{0, 1}, {1, 0}};
    IntMat swap2_id{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}};
    SUBCASE("A3 embedding admits one") {
        IntMat f{{1, 0}, {0, 1}, {1, 1}};
        auto s = equivariant_cosection(f, LatticeInvolution::checked(swap2),
                                       LatticeInvolution::checked(swap2_id));
        REQUIRE(s.has_value());
        CHECK(*s * f == IntMat::identity(2));
        IntMat expected{{1, 0, 0}, {0, 1, 0}};
        CHECK(*s == expected);
    }
    SUBCASE("diagonal Gm has none") {
        IntMat f{{1}, {1}};
        auto s = equivariant_cosection(f, LatticeInvolution::checked(IntMat::identity(1)),
                                       LatticeInvolution::checked(swap2));
        CHECK(!s.has_value());
    }
    SUBCASE("identity map") {
        auto s = equivariant_cosection(IntMat::identity(2), LatticeInvolution::checked(swap2),
                                       LatticeInvolution::checked(swap2));
        REQUIRE(s.has_value());
        CHECK(*s == IntMat::identity(2));
    }
    SUBCASE("non-equivariant embedding errors") {
        IntMat f{{1}, {1}};
        bool threw = false;
        try {
            equivariant_cosection(f, LatticeInvolution::checked(-IntMat::identity(1)),
                                  LatticeInvolution::checked(swap2));
        } catch (const Error& e) {
            threw = true;
            CHECK(e.code == "NotEquivariantEmbedding");
        }
        CHECK(threw);
    }
}

TEST_CASE("classify involution") {
    auto type = [](const IntMat& m) { return classify_involution(LatticeInvolution::checked(m)); };
    CHECK(type(IntMat::identity(1)) == InvolutionType{1, 0, 0});
    CHECK(type(-IntMat::identity(1)) == InvolutionType{0, 1, 0});
    CHECK(type(IntMat{{0, 1}, {1, 0}}) == InvolutionType{0, 0, 1});
    CHECK(type(IntMat{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}) == InvolutionType{1, 0, 1});

    SUBCASE("conjugation invariance") {
        std::mt19937_64 rng(11);
        std::vector<IntMat> models = {
            IntMat{{0, 1}, {1, 0}},
            IntMat{{1, 0}, {0, -1}},
            IntMat{{0, 1, 0}, {1, 0, 0}, {0, 0, -1}},
            IntMat{{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}},
        };
        for (int trial = 0; trial < 50; ++trial) {
            for (const IntMat& m : models) {
                IntMat u = random_unimodular(rng, m.rows());
                auto uinv = right_inverse(u);
                REQUIRE(uinv.has_value());
                IntMat conj = u * m * (*uinv);
                CHECK(type(conj) == type(m));
            }
        }
    }
}

TEST_CASE("complement section identity") {
    IntMat f{{1, 0}, {0, 1}, {1, 1}};
    IntMat s = cosection(f);
    IntMat p = cokernel_projection(f);
    IntMat t = complement_section(f, s, p);
    CHECK(p * t == IntMat::identity(1));
    CHECK(f * s + t * p == IntMat::identity(3));

    SUBCASE("randomized saturated embeddings") {
        std::mt19937_64 rng(13);
        int done = 0;
        while (done < 60) {
            std::uniform_int_distribution<std::size_t> nn(1, 3);
            std::size_t n = nn(rng);
            std::size_t np = n + nn(rng);
            IntMat f2 = random_matrix(rng, np, n, 4);
            if (!is_saturated_embedding(f2)) continue;
            ++done;
            IntMat s2 = cosection(f2);
            IntMat p2 = cokernel_projection(f2);
            IntMat t2 = complement_section(f2, s2, p2);
            CHECK(s2 * f2 == IntMat::identity(n));
            CHECK((p2 * f2).is_zero());
            CHECK(p2 * t2 == IntMat::identity(np - n));
            CHECK(f2 * s2 + t2 * p2 == IntMat::identity(np));
        }
    }
}
