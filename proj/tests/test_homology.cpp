#include <random>

#include "doctest.h"
#include "qh/catalog.hpp"
#include "qh/homology.hpp"

using namespace qh;

namespace {

Chain chain2(std::initializer_list<std::pair<std::vector<int>, int>> terms) {
    Chain c(static_cast<int>(terms.begin()->first.size()));
    for (const auto& [xs, k] : terms) c.add(Tuple{xs}, k);
    return c;
}

}  // namespace

TEST_SUITE("homology") {

TEST_CASE("low-degree quandle homology of dihedral:3") {
    FiniteQuandle r3 = dihedral(3);
    // one inner orbit, so degree 1 contributes a single free class
    CHECK(homology(r3, Variant::Q, 1).str() == "Z");
    CHECK(homology(r3, Variant::Q, 2).str() == "0");
    CHECK(homology(r3, Variant::Q, 3).str() == "Z_3");
}

TEST_CASE("quandle homology of the trivial quandle is free") {
    FiniteQuandle t = trivial_quandle(2);
    // for the trivial quandle every differential in C^Q vanishes
    CHECK(homology(t, Variant::Q, 1).str() == "Z^2");
    CHECK(homology(t, Variant::Q, 2).str() == "Z^2");
    CHECK(homology(t, Variant::Q, 3).str() == "Z^2");
}

TEST_CASE("H_3^Q of the 4-cycle quandle is Z_24") {
    FiniteQuandle qs6 = catalog_quandle("qs6");
    const HomologyGroup& h = homology(qs6, Variant::Q, 3);
    CHECK(h.free_rank() == 0);
    REQUIRE(h.torsion().size() == 1);
    CHECK(h.torsion()[0] == 24);
}

TEST_CASE("generators are cycles with unit class coordinates") {
    FiniteQuandle r3 = dihedral(3);
    for (Variant v : {Variant::R, Variant::Q})
        for (int degree = 1; degree <= 3; ++degree) {
            const HomologyGroup& h = homology(r3, v, degree);
            REQUIRE(h.generators().size() == h.free_rank() + h.torsion().size());
            for (std::size_t i = 0; i < h.generators().size(); ++i) {
                const Chain& g = h.generators()[i];
                REQUIRE(is_cycle(r3, g, v));
                ClassCoordinates cc = h.class_of(g);
                for (std::size_t j = 0; j < cc.free_part.size(); ++j)
                    CHECK(cc.free_part[j] == (i == j ? 1 : 0));
                for (std::size_t j = 0; j < cc.torsion_part.size(); ++j)
                    CHECK(cc.torsion_part[j] == (h.free_rank() + j == i ? 1 : 0));
            }
        }
}

TEST_CASE("the torsion generator of H_3^Q(R_3)") {
    FiniteQuandle r3 = dihedral(3);
    Chain c = chain2({{{0, 1, 2}, 1}, {{0, 2, 0}, 1}});
    CHECK(is_cycle(r3, c, Variant::Q));
    CHECK(!is_cycle(r3, c, Variant::R));
    CHECK(boundary(r3, c) == chain2({{{0, 0}, 1}, {{2, 2}, -1}}));
    CHECK(!is_boundary(r3, c, Variant::Q).has_value());
    ClassCoordinates cc = class_of(r3, c, Variant::Q);
    REQUIRE(cc.torsion_part.size() == 1);
    CHECK(cc.torsion_part[0] % 3 != 0);
    CHECK(!cc.is_zero());
    // three times a generator of Z_3 bounds
    Chain tripled = c * Int(3);
    auto w = is_boundary(r3, tripled, Variant::Q);
    REQUIRE(w.has_value());
    CHECK(project(boundary(r3, *w), Variant::Q) == project(tripled, Variant::Q));
}

TEST_CASE("2-cycles over dihedral:3 bound with verifiable witnesses") {
    FiniteQuandle r3 = dihedral(3);
    for (Chain c : {chain2({{{0, 1}, 1}, {{1, 2}, 1}, {{1, 0}, -1}}),
                    chain2({{{0, 1}, 1}, {{2, 0}, 1}, {{1, 2}, 1}})}) {
        REQUIRE(is_cycle(r3, c, Variant::Q));
        auto w = is_boundary(r3, c, Variant::Q);
        REQUIRE(w.has_value());
        CHECK(w->degree() == 3);
        CHECK(project(boundary(r3, *w), Variant::Q) == c);
    }
}

TEST_CASE("is_boundary rejects non-cycles and accepts actual boundaries") {
    FiniteQuandle r3 = dihedral(3);
    Chain notcycle(2);
    notcycle.add(Tuple{{0, 1}}, 1);
    CHECK_THROWS_AS(is_boundary(r3, notcycle, Variant::R), std::domain_error);

    std::mt19937 rng(515151);
    std::uniform_int_distribution<int> el(0, 2), coeff(-2, 2);
    for (int trial = 0; trial < 40; ++trial) {
        Chain u(3);
        for (int k = 0; k < 3; ++k)
            u.add(Tuple{{el(rng), el(rng), el(rng)}}, coeff(rng));
        for (Variant v : {Variant::R, Variant::Q}) {
            Chain b = project(boundary(r3, u), v);
            auto w = is_boundary(r3, b, v);
            REQUIRE(w.has_value());
            CHECK(project(boundary(r3, *w), v) == b);
        }
    }
}

TEST_CASE("kernel coordinates round trip") {
    FiniteQuandle r3 = dihedral(3);
    const HomologyGroup& h = homology(r3, Variant::Q, 3);
    Chain c = chain2({{{0, 1, 2}, 1}, {{0, 2, 0}, 1}});
    auto y = h.kernel_coordinates(c);
    CHECK(h.chain_from_kernel_coordinates(y) == c);
    ClassCoordinates a = h.class_of(c);
    ClassCoordinates b = h.class_of_kernel_coordinates(y);
    CHECK(a.free_part == b.free_part);
    CHECK(a.torsion_part == b.torsion_part);
}

TEST_CASE("identity homomorphism induces an isomorphism") {
    FiniteQuandle r3 = dihedral(3);
    std::vector<int> id = {0, 1, 2};
    InducedMap m = induced_map(QuandleHom(r3, r3, id), Variant::Q, 3);
    CHECK(m.surjective);
    CHECK(m.injective);
}

TEST_CASE("projection of the 4-cycle quandle induces a surjection in degree 3") {
    FiniteQuandle qs6 = catalog_quandle("qs6");
    FiniteQuandle r3 = dihedral(3);
    QuandleHom p(qs6, r3, {0, 1, 1, 2, 0, 2});
    InducedMap m = induced_map(p, Variant::Q, 3);
    CHECK(m.source->str() == "Z_24");
    CHECK(m.target->str() == "Z_3");
    CHECK(m.surjective);
    CHECK(!m.injective);  // Z_24 -> Z_3 cannot be injective
}

TEST_CASE("constant-ish maps induce non-surjective maps onto torsion") {
    // the map through a point kills the torsion class
    FiniteQuandle r3 = dihedral(3);
    FiniteQuandle t1 = trivial_quandle(1);
    std::vector<int> into = {0};
    InducedMap m = induced_map(QuandleHom(t1, r3, into), Variant::Q, 3);
    CHECK(!m.surjective);
}

TEST_CASE("connecting map vanishes for dihedral:3") {
    FiniteQuandle r3 = dihedral(3);
    for (int degree : {2, 3, 4}) {
        ConnectingMap m = les_boundary_map(r3, degree);
        CHECK(m.is_zero);
    }
}

TEST_CASE("long exact sequence is exact at the two computed spots") {
    for (const char* key : {"dihedral:3", "qs5", "trivial:2", "trivial:3"}) {
        FiniteQuandle q = catalog_quandle(key);
        CAPTURE(key);
        for (int degree : {2, 3}) {
            LesReport r = les_check(q, degree);
            CHECK(r.exact_at_r);
            CHECK(r.exact_at_q);
        }
    }
}

TEST_CASE("group shape formatting") {
    CHECK(GroupShape{0, {}}.str() == "0");
    CHECK(GroupShape{2, {}}.str() == "Z^2");
    CHECK(GroupShape{1, {Int(2), Int(24)}}.str() == "Z + Z_2 + Z_24");
}

}  // TEST_SUITE
