#include <random>

#include "doctest.h"
#include "qh/catalog.hpp"
#include "qh/chains.hpp"

using namespace qh;

namespace {

Tuple random_tuple(std::mt19937& rng, int m, int degree, bool nondegenerate) {
    std::uniform_int_distribution<int> el(0, m - 1);
    Tuple t;
    t.xs.resize(degree);
    for (int i = 0; i < degree; ++i) {
        t.xs[i] = el(rng);
        if (nondegenerate && i > 0)
            while (t.xs[i] == t.xs[i - 1]) t.xs[i] = el(rng);
    }
    return t;
}

Chain random_chain(std::mt19937& rng, int m, int degree, int terms, bool nondegenerate) {
    std::uniform_int_distribution<int> coeff(-3, 3);
    Chain c(degree);
    for (int k = 0; k < terms; ++k) c.add(random_tuple(rng, m, degree, nondegenerate), coeff(rng));
    return c;
}

}  // namespace

TEST_SUITE("chains") {

TEST_CASE("boundary of boundary vanishes on seeded random chains") {
    std::mt19937 rng(424242);
    for (const auto& e : catalog_entries()) {
        FiniteQuandle q = catalog_quandle(e.key);
        CAPTURE(e.key);
        for (int degree = 2; degree <= 5; ++degree)
            for (int trial = 0; trial < 50; ++trial) {
                Chain c = random_chain(rng, q.size(), degree, 4, false);
                CHECK(boundary(q, boundary(q, c)).empty());
            }
    }
}

TEST_CASE("boundary is linear") {
    std::mt19937 rng(11);
    FiniteQuandle q = catalog_quandle("qs5");
    for (int trial = 0; trial < 50; ++trial) {
        Chain a = random_chain(rng, 5, 3, 3, false);
        Chain b = random_chain(rng, 5, 3, 3, false);
        CHECK(boundary(q, a + b) == boundary(q, a) + boundary(q, b));
        CHECK(boundary(q, a * Int(7)) == boundary(q, a) * Int(7));
    }
}

TEST_CASE("degenerate chains have degenerate boundaries") {
    // the degenerate tuples form a subcomplex
    std::mt19937 rng(12);
    FiniteQuandle q = dihedral(4);
    for (int trial = 0; trial < 100; ++trial) {
        Tuple t = random_tuple(rng, 4, 4, false);
        if (!is_degenerate(t)) continue;
        Chain c(4);
        c.add(t, 1);
        CHECK_NOTHROW(project(boundary(q, c), Variant::D));
    }
    // and project(-, D) rejects nondegenerate support
    Chain bad(2);
    bad.add(Tuple{{0, 1}}, 1);
    CHECK_THROWS_AS(project(bad, Variant::D), std::domain_error);
}

TEST_CASE("quotient boundary commutes with the projection") {
    std::mt19937 rng(13);
    FiniteQuandle q = dihedral(3);
    for (int trial = 0; trial < 100; ++trial) {
        Chain c = random_chain(rng, 3, 3, 4, true);  // nondegenerate support
        Chain lhs = project(boundary(q, c), Variant::Q);
        // computing through the Q boundary matrix gives the same answer
        auto x = coordinates(q, c, Variant::Q);
        auto y = boundary_matrix(q, Variant::Q, 3).mul(x);
        Chain rhs = from_coordinates(q, Variant::Q, 2, y);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("basis sizes") {
    FiniteQuandle r3 = dihedral(3);
    CHECK(basis_size(r3, Variant::R, 3) == 27);
    CHECK(basis_size(r3, Variant::Q, 3) == 12);
    CHECK(basis_size(r3, Variant::D, 3) == 15);
    CHECK(basis_size(r3, Variant::R, 1) == 3);
    CHECK(basis_size(r3, Variant::Q, 1) == 3);
    CHECK(basis_size(r3, Variant::D, 1) == 0);

    FiniteQuandle qs6 = catalog_quandle("qs6");
    CHECK(basis_size(qs6, Variant::Q, 3) == 150);
    CHECK(basis(qs6, Variant::Q, 3).size() == 150);
    CHECK(basis_size(qs6, Variant::R, 4) == 1296);
}

TEST_CASE("R basis size = D + Q and the bases are disjoint") {
    FiniteQuandle q = catalog_quandle("trivial:3");
    for (int n = 1; n <= 4; ++n)
        CHECK(basis_size(q, Variant::R, n) ==
              basis_size(q, Variant::D, n) + basis_size(q, Variant::Q, n));
}

TEST_CASE("coordinates round trip") {
    std::mt19937 rng(14);
    FiniteQuandle q = catalog_quandle("qs5");
    for (int trial = 0; trial < 30; ++trial) {
        Chain c = random_chain(rng, 5, 2, 5, true);
        auto x = coordinates(q, c, Variant::Q);
        CHECK(from_coordinates(q, Variant::Q, 2, x) == c);
    }
    // a degenerate term is outside the Q basis
    Chain d(2);
    d.add(Tuple{{1, 1}}, 1);
    CHECK_THROWS_AS(coordinates(q, d, Variant::Q), std::domain_error);
}

TEST_CASE("boundary matrix columns match boundary of basis tuples") {
    FiniteQuandle q = dihedral(3);
    auto b3 = basis(q, Variant::R, 3);
    IntMatrix d = boundary_matrix(q, Variant::R, 3);
    REQUIRE(d.cols() == b3.size());
    for (std::size_t j = 0; j < b3.size(); ++j) {
        Chain c = from_coordinates(q, Variant::R, 2, d.column(j));
        CHECK(c == boundary_tuple(q, b3[j]));
    }
    // degree 1 boundaries vanish
    CHECK(boundary_matrix(q, Variant::R, 1).is_zero());
}

TEST_CASE("chain file round trip") {
    FiniteQuandle r3 = dihedral(3);
    Chain c(2);
    c.add(Tuple{{0, 1}}, 1);
    c.add(Tuple{{1, 0}}, -1);
    c.add(Tuple{{1, 2}}, 12);
    Chain back = parse_chain(format_chain(c), r3);
    CHECK(back == c);

    Chain labeled = parse_chain("+1 α β\n# comment\n-1 β α\n+12 β γ\n", r3);
    CHECK(labeled == c);

    CHECK_THROWS_AS(parse_chain("1 0 1\n1 0 1 2\n", r3), std::invalid_argument);
    CHECK_THROWS_AS(parse_chain("1 0 7\n", r3), std::invalid_argument);
}

TEST_CASE("chain term normalization") {
    Chain c(2);
    c.add(Tuple{{0, 1}}, 2);
    c.add(Tuple{{0, 1}}, -2);
    CHECK(c.empty());
    c.add(Tuple{{0, 1}}, 3);
    CHECK(c.coefficient(Tuple{{0, 1}}) == 3);
    CHECK(c.coefficient(Tuple{{2, 1}}) == 0);
    CHECK((-c).coefficient(Tuple{{0, 1}}) == -3);
}

}  // TEST_SUITE
