#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "brq/mod2.hpp"
#include "brq/verify.hpp"

using namespace brq;

namespace {

BitVec bits_of(std::size_t mask, std::size_t n) {
    BitVec v(n, 0);
    for (std::size_t i = 0; i < n; ++i) v[i] = (mask >> i) & 1;
    return v;
}

// Random even Gram matrix: A + A^T has an even diagonal by construction.
Lattice random_even_lattice(DetRng& rng, std::size_t n) {
    IntMat a(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a.at(i, j) = rng.range(-4, 4);
    IntMat g = a;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) g.at(i, j) += a.at(j, i);
    return Lattice("rand", g);
}

}  // namespace

TEST_CASE("BitMat arithmetic") {
    BitMat m(2, 3);
    m.at(0, 0) = 1;
    m.at(0, 2) = 1;
    m.at(1, 1) = 1;
    CHECK(m.rank() == 2);
    CHECK(m.apply(BitVec{1, 1, 1}) == BitVec{0, 1});

    auto ker = m.kernel();
    REQUIRE(ker.size() == 1);
    CHECK(ker[0] == BitVec{1, 0, 1});

    BitMat id = BitMat::identity(3);
    CHECK(m * id == m);
    CHECK(m.transposed().transposed() == m);

    BitMat s{2, 2};
    s.at(0, 1) = 1;
    s.at(1, 0) = 1;
    s.at(1, 1) = 1;
    CHECK(s * s.inverse() == BitMat::identity(2));
    CHECK_THROWS(BitMat(2, 2).inverse());
}

TEST_CASE("BitMat::from_integer reduces entries mod 2") {
    BitMat b = BitMat::from_integer(IntMat{{2, -3}, {5, 0}});
    CHECK(b.at(0, 0) == 0);
    CHECK(b.at(0, 1) == 1);
    CHECK(b.at(1, 0) == 1);
    CHECK(b.at(1, 1) == 0);
}

TEST_CASE("H mod 2 carries the odd quadratic refinement") {
    Mod2QuadraticSpace h2 = reduce_mod2(hyperbolic_h());
    CHECK(h2.dimension() == 2);
    CHECK(h2.q_value(BitVec{1, 0}) == 0);
    CHECK(h2.q_value(BitVec{0, 1}) == 0);
    CHECK(h2.q_value(BitVec{1, 1}) == 1);  // epsilon = e + f
    auto w = h2.find_q_one_witness();
    REQUIRE(w.has_value());
    CHECK(h2.q_value(*w) == 1);
}

TEST_CASE("H(2) mod 2 has identically vanishing q") {
    Mod2QuadraticSpace s = reduce_mod2(twist(hyperbolic_h(), 2));
    for (std::size_t mask = 0; mask < 4; ++mask) CHECK(s.q_value(bits_of(mask, 2)) == 0);
    CHECK(!s.find_q_one_witness().has_value());
}

TEST_CASE("zero-dimensional space") {
    Mod2QuadraticSpace s(BitMat(0, 0), BitVec{});
    CHECK(!s.find_q_one_witness().has_value());
    CHECK(s.q_value(BitVec{}) == 0);
}

TEST_CASE("reduce_mod2 rejects odd lattices") {
    CHECK_THROWS(reduce_mod2(Lattice("Z", IntMat{{1}})));
    CHECK_THROWS(pontryagin_even(Lattice("Z", IntMat{{1}}), BitVec{1}));
}

TEST_CASE("q is independent of the lift") {
    DetRng rng(31);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t n = 1 + static_cast<std::size_t>(rng.range(0, 5));
        Lattice l = random_even_lattice(rng, n);
        Mod2QuadraticSpace s = reduce_mod2(l);
        // Any integer vector v reduces to a class whose q is norm(v)/2 mod 2.
        for (int k = 0; k < 20; ++k) {
            Vec v = random_vector(rng, n, -7, 7);
            Int half = l.norm(v) / 2;
            CHECK(s.q_value(reduce_vec_mod2(v)) == static_cast<Bit>(abs(half) % 2));
        }
    }
}

TEST_CASE("polarization identity, exhaustively in low dimension") {
    DetRng rng(47);
    for (int trial = 0; trial < 20; ++trial) {
        std::size_t n = 1 + static_cast<std::size_t>(rng.range(0, 5));
        Mod2QuadraticSpace s = reduce_mod2(random_even_lattice(rng, n));
        for (std::size_t a = 0; a < (std::size_t(1) << n); ++a)
            for (std::size_t b = 0; b < (std::size_t(1) << n); ++b) {
                BitVec x = bits_of(a, n), y = bits_of(b, n);
                CHECK(s.q_value(bitvec_add(x, y)) ==
                      static_cast<Bit>(s.q_value(x) ^ s.q_value(y) ^ s.pair(x, y)));
            }
    }
}

TEST_CASE("witness decision matches exhaustive search") {
    DetRng rng(59);
    for (int trial = 0; trial < 80; ++trial) {
        std::size_t n = 1 + static_cast<std::size_t>(rng.range(0, 9));
        Mod2QuadraticSpace s = reduce_mod2(random_even_lattice(rng, n));
        bool any = false;
        for (std::size_t mask = 1; mask < (std::size_t(1) << n) && !any; ++mask)
            any = s.q_value(bits_of(mask, n)) == 1;
        auto w = s.find_q_one_witness();
        CHECK(w.has_value() == any);
        if (w) CHECK(s.q_value(*w) == 1);
    }
}

TEST_CASE("Pontryagin square shadow: norm mod 4 equals 2q") {
    DetRng rng(71);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t n = 1 + static_cast<std::size_t>(rng.range(0, 5));
        Lattice l = random_even_lattice(rng, n);
        Mod2QuadraticSpace s = reduce_mod2(l);
        for (std::size_t mask = 0; mask < (std::size_t(1) << n); ++mask) {
            BitVec x = bits_of(mask, n);
            int p = pontryagin_even(l, x);
            CHECK((p == 0 || p == 2));
            CHECK(p == 2 * s.q_value(x));
            // Cross-check against a direct lift.
            Vec lift(n);
            for (std::size_t i = 0; i < n; ++i) lift[i] = x[i];
            Int r = l.norm(lift) % 4;
            if (r < 0) r += 4;
            CHECK(Int(p) == r);
        }
    }
}
