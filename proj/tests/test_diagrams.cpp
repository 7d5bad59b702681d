#include <fstream>
#include <random>
#include <sstream>

#include "doctest.h"
#include "qh/catalog.hpp"
#include "qh/diagrams.hpp"
#include "qh/homology.hpp"

using namespace qh;

namespace {

std::string slurp(const std::string& name) {
    std::ifstream in(std::string(FIXTURES_DIR) + "/" + name);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Chain chain2(std::initializer_list<std::pair<std::vector<int>, int>> terms) {
    Chain c(static_cast<int>(terms.begin()->first.size()));
    for (const auto& [xs, k] : terms) c.add(Tuple{xs}, k);
    return c;
}

}  // namespace

TEST_SUITE("diagrams") {

TEST_CASE("closed trefoil-style fixture: validation, colorings, extraction") {
    Diagram1 d = parse_diagram1(slurp("fig3.adk"));
    CHECK(validate(d).ok());
    CHECK(d.is_closed());

    FiniteQuandle r3 = dihedral(3);
    auto cols = enumerate_colorings(d, r3);
    CHECK(cols.size() == 9);

    // oracle: brute force over all 3^6 edge assignments
    std::size_t brute = 0;
    for (int mask = 0; mask < 729; ++mask) {
        Coloring c{&d, &r3, {}};
        int m = mask;
        for (const auto& e : d.edges) {
            c.edge_colors[e.name] = m % 3;
            m /= 3;
        }
        if (check_coloring(c).ok()) ++brute;
    }
    CHECK(brute == 9);

    Coloring c = make_coloring(d, r3, parse_assignments(slurp("fig3.col")));
    CHECK(check_coloring(c).ok());
    CHECK(extract_chain(c) == chain2({{{0, 1}, 1}, {{1, 2}, 1}, {{1, 0}, -1}}));
    CHECK(extract_chain(c) == parse_chain(slurp("fig3.chn"), r3));
}

TEST_CASE("shadow extension recovers the fixture region colors") {
    FiniteQuandle r3 = dihedral(3);
    Diagram1 d10 = parse_diagram1(slurp("fig10.adk"));
    Coloring c10 = make_coloring(d10, r3, parse_assignments(slurp("fig10.col")));
    auto s10 = shadow_extend(c10, "Ra", 0);
    REQUIRE(s10.has_value());
    CHECK(check_shadow(*s10).ok());
    CHECK(s10->region_colors.at("Ra") == 0);
    CHECK(s10->region_colors.at("Rb") == 1);
    CHECK(s10->region_colors.at("Rc") == 2);

    FiniteQuandle qs5 = catalog_quandle("qs5");
    Diagram1 d3 = parse_diagram1(slurp("fig3.adk"));
    Coloring c3 = make_coloring(d3, qs5, parse_assignments(slurp("fig3-qs5.col")));
    auto s3 = shadow_extend(c3, "R1", 3);  // seed (132) as in the fixture
    REQUIRE(s3.has_value());
    CHECK(check_shadow(*s3).ok());
    ShadowColoring fixture = make_shadow_coloring(d3, qs5, parse_assignments(slurp("fig3-qs5.col")));
    CHECK(s3->region_colors == fixture.region_colors);

    // over dihedral:3 the propagation relations around fig3 conflict
    Coloring cr3 = make_coloring(d3, r3, parse_assignments(slurp("fig3.col")));
    for (int seed = 0; seed < 3; ++seed) CHECK(!shadow_extend(cr3, "R1", seed).has_value());

    CHECK_THROWS_AS(shadow_extend(c10, "nope", 0), std::domain_error);
}

TEST_CASE("shadow coloring by the conjugation quandle on 5 permutations") {
    Diagram1 d = parse_diagram1(slurp("fig3.adk"));
    FiniteQuandle qs5 = catalog_quandle("qs5");
    ShadowColoring s = make_shadow_coloring(d, qs5, parse_assignments(slurp("fig3-qs5.col")));
    REQUIRE(check_shadow(s).ok());
    Chain t = extract_chain(s);
    CHECK(t == chain2({{{3, 1, 4}, 1}, {{3, 4, 0}, 1}, {{2, 4, 1}, -1}}));
    CHECK(is_cycle(qs5, t, Variant::Q));
    CHECK(!class_of(qs5, t, Variant::Q).is_zero());
    // the underlying 2-cycle, by contrast, bounds
    Coloring base = s.base;
    Chain two = extract_chain(base);
    CHECK(is_boundary(qs5, two, Variant::Q).has_value());
}

TEST_CASE("marked circle fixture extracts the expected 2-chain") {
    Diagram0 d = parse_diagram0(slurp("fig7.d0k"));
    CHECK(validate(d).ok());
    FiniteQuandle r3 = dihedral(3);
    ShadowColoring0 s = make_shadow_coloring(d, r3, parse_assignments(slurp("fig7.col")));
    REQUIRE(check_shadow(s).ok());
    Chain c = extract_chain(s);
    CHECK(c == chain2({{{0, 1}, 1}, {{2, 0}, 1}, {{1, 2}, 1}}));
    CHECK(c == parse_chain(slurp("fig7.chn"), r3));
    CHECK(is_cycle(r3, c, Variant::Q));
}

TEST_CASE("arc diagram fixture: 3-chain plus endpoint terms") {
    Diagram1 d = parse_diagram1(slurp("fig10.adk"));
    CHECK(validate(d).ok());
    CHECK(!d.is_closed());
    FiniteQuandle r3 = dihedral(3);
    ShadowColoring s = make_shadow_coloring(d, r3, parse_assignments(slurp("fig10.col")));
    REQUIRE(check_shadow(s).ok());
    Chain c = extract_chain(s);
    CHECK(c == chain2({{{0, 1, 2}, 1}, {{0, 2, 0}, 1}}));
    CHECK(c == parse_chain(slurp("fig10.chn"), r3));
    Chain ep = endpoint_chain(s);
    CHECK(ep == chain2({{{2, 2}, 1}, {{0, 0}, -1}}));
    // the endpoint terms cancel the boundary of the 3-chain
    CHECK((boundary(r3, c) + ep).empty());
    // so the chain is a quandle 3-cycle even though it is not a rack cycle
    CHECK(is_cycle(r3, c, Variant::Q));
    CHECK(!is_cycle(r3, c, Variant::R));
    CHECK_THROWS_AS(extract_chain(s.base), std::domain_error);  // open diagram
}

TEST_CASE("realize then extract is the identity on seeded kernel 2-cycles") {
    std::mt19937 rng(808080);
    std::uniform_int_distribution<int> coeff(-2, 2);
    for (const char* key : {"dihedral:3", "qs6"}) {
        FiniteQuandle q = catalog_quandle(key);
        CAPTURE(key);
        for (Variant v : {Variant::R, Variant::Q}) {
            SnfDecomposition snf = smith_normal_form(boundary_matrix(q, v, 2));
            IntMatrix k = kernel_basis(snf);
            for (int trial = 0; trial < 25; ++trial) {
                std::vector<Int> combo(k.cols());
                for (auto& x : combo) x = coeff(rng);
                Chain c = from_coordinates(q, v, 2, k.mul(combo));
                REQUIRE(is_cycle(q, c, v));
                Realized r = realize_two_cycle(q, c, v);
                CHECK(validate(*r.diagram).ok());
                CHECK(r.diagram->is_closed());
                REQUIRE(check_coloring(r.coloring).ok());
                CHECK(project(extract_chain(r.coloring), v) == project(c, v));
            }
        }
    }
}

TEST_CASE("realize rejects non-cycles") {
    FiniteQuandle r3 = dihedral(3);
    Chain c(2);
    c.add(Tuple{{0, 1}}, 1);
    CHECK_THROWS_AS(realize_two_cycle(r3, c, Variant::Q), std::domain_error);
}

TEST_CASE("fundamental presentation of the closed fixture") {
    Diagram1 d = parse_diagram1(slurp("fig3.adk"));
    Presentation p = fundamental_presentation(d);
    CHECK(p.generators.size() == 3);
    CHECK(p.relations.size() == 3);
    FiniteQuandle r3 = dihedral(3);
    CHECK(count_homs(p, r3) == 9);
    CHECK(count_homs(p, r3) == enumerate_colorings(d, r3).size());
    // hom count into the trivial quandle = one per generator choice collapsed
    CHECK(count_homs(p, trivial_quandle(2)) == 2);
    CHECK(!p.str().empty());

    Diagram1 open = parse_diagram1(slurp("fig10.adk"));
    CHECK_THROWS_AS(fundamental_presentation(open), std::domain_error);
}

TEST_CASE("coloring counts match hom counts on every closed fixture") {
    FiniteQuandle qs6 = catalog_quandle("qs6");
    Diagram1 d = parse_diagram1(slurp("fig3.adk"));
    Presentation p = fundamental_presentation(d);
    CHECK(count_homs(p, qs6) == enumerate_colorings(d, qs6).size());
}

TEST_CASE("validation catches malformed diagrams") {
    Diagram1 d = parse_diagram1(slurp("fig3.adk"));
    d.crossings[0].over_in = "e9";  // unknown edge
    CHECK(!validate(d).ok());

    Diagram1 d2 = parse_diagram1(slurp("fig3.adk"));
    d2.edges.push_back(d2.edges[0]);  // duplicate name
    CHECK(!validate(d2).ok());

    CHECK_THROWS_AS(parse_diagram1("edges:\ne1 R1"), std::invalid_argument);
}

TEST_CASE("diagram file round trips") {
    Diagram1 d = parse_diagram1(slurp("fig10.adk"));
    Diagram1 back = parse_diagram1(format_diagram1(d));
    CHECK(format_diagram1(back) == format_diagram1(d));
    CHECK(back.edges.size() == d.edges.size());
    CHECK(back.endpoints.size() == 2);

    Diagram0 d0 = parse_diagram0(slurp("fig7.d0k"));
    Diagram0 back0 = parse_diagram0(format_diagram0(d0));
    CHECK(format_diagram0(back0) == format_diagram0(d0));
}

TEST_CASE("coloring files survive formatting") {
    Diagram1 d = parse_diagram1(slurp("fig3.adk"));
    FiniteQuandle r3 = dihedral(3);
    Coloring c = make_coloring(d, r3, parse_assignments(slurp("fig3.col")));
    Coloring back = make_coloring(d, r3, parse_assignments(format_coloring(c)));
    CHECK(back.edge_colors == c.edge_colors);

    CHECK_THROWS_AS(make_coloring(d, r3, parse_assignments("e1 = α")),
                    std::invalid_argument);  // missing edges
}

}  // TEST_SUITE
