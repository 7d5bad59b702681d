// Acceptance checks: one line per criterion, exit status 0 only if all pass.

#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "qh/catalog.hpp"
#include "qh/chains.hpp"
#include "qh/diagrams.hpp"
#include "qh/homology.hpp"
#include "qh/intlin.hpp"
#include "qh/quandle.hpp"

using namespace qh;

namespace {

std::string slurp(const std::string& name) {
    std::ifstream in(std::string(FIXTURES_DIR) + "/" + name);
    if (!in) throw std::runtime_error("missing fixture " + name);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Chain mk(std::initializer_list<std::pair<std::vector<int>, int>> terms) {
    Chain c(static_cast<int>(terms.begin()->first.size()));
    for (const auto& [xs, k] : terms) c.add(Tuple{xs}, k);
    return c;
}

bool require(bool cond, const char* what) {
    if (!cond) throw std::runtime_error(what);
    return true;
}

}  // namespace

int main() {
    FiniteQuandle r3 = dihedral(3);
    const int A = 0, B = 1, G = 2;

    struct Criterion {
        std::string name;
        std::function<bool()> run;
    };
    std::vector<Criterion> criteria;

    criteria.push_back({"1: second quandle homology of dihedral:3 is trivial", [&] {
        return homology(r3, Variant::Q, 2).str() == "0";
    }});

    criteria.push_back({"2: third quandle homology of dihedral:3 is Z_3", [&] {
        const HomologyGroup& h = homology(r3, Variant::Q, 3);
        return h.free_rank() == 0 && h.torsion() == std::vector<Int>{Int(3)};
    }});

    criteria.push_back({"3: third quandle homology of the 4-cycle quandle is Z_24", [&] {
        const HomologyGroup& h = homology(catalog_quandle("qs6"), Variant::Q, 3);
        return h.free_rank() == 0 && h.torsion() == std::vector<Int>{Int(24)};
    }});

    criteria.push_back({"4: the two sample 2-cycles bound with recomputed witnesses", [&] {
        for (Chain c : {mk({{{A, B}, 1}, {{B, G}, 1}, {{B, A}, -1}}),
                        mk({{{A, B}, 1}, {{G, A}, 1}, {{B, G}, 1}})}) {
            require(is_cycle(r3, c, Variant::Q), "not a cycle");
            auto w = is_boundary(r3, c, Variant::Q);
            require(w.has_value(), "no witness");
            require(project(boundary(r3, *w), Variant::Q) == c, "witness boundary mismatch");
        }
        return true;
    }});

    criteria.push_back({"5: the sample 3-cycle generates Z_3 and is not a rack cycle", [&] {
        Chain c = mk({{{A, B, G}, 1}, {{A, G, A}, 1}});
        require(is_cycle(r3, c, Variant::Q), "not a quandle cycle");
        require(!is_cycle(r3, c, Variant::R), "unexpectedly a rack cycle");
        require(boundary(r3, c) == mk({{{A, A}, 1}, {{G, G}, -1}}), "rack boundary mismatch");
        require(!is_boundary(r3, c, Variant::Q).has_value(), "unexpectedly bounds");
        ClassCoordinates cc = class_of(r3, c, Variant::Q);
        require(cc.free_part.empty() && cc.torsion_part.size() == 1, "class shape");
        return cc.torsion_part[0] % 3 != 0;
    }});

    criteria.push_back({"6: induced degree-3 map from the 4-cycle quandle is surjective", [&] {
        FiniteQuandle qs6 = catalog_quandle("qs6");
        QuandleHom p(qs6, r3, {0, 1, 1, 2, 0, 2});
        require(check_hom(p.map, qs6, r3).ok, "not a homomorphism");
        return induced_map(p, Variant::Q, 3).surjective;
    }});

    criteria.push_back({"7: connecting map vanishes across the small catalog", [&] {
        require(les_boundary_map(r3, 3).is_zero, "dihedral:3 degree 3");
        require(les_boundary_map(r3, 4).is_zero, "dihedral:3 degree 4");
        require(les_boundary_map(catalog_quandle("qs5"), 3).is_zero, "qs5 degree 3");
        for (int n = 2; n <= 4; ++n)
            require(les_boundary_map(trivial_quandle(n), 3).is_zero, "trivial degree 3");
        for (const auto& e : catalog_entries()) {
            FiniteQuandle q = catalog_quandle(e.key);
            if (q.size() > 4) continue;
            require(les_boundary_map(q, 3).is_zero, e.key.c_str());
        }
        return true;
    }});

    criteria.push_back({"8: long exact sequence is exact at degrees 2 and 3", [&] {
        for (const char* key : {"dihedral:3", "qs5", "trivial:2", "trivial:3"})
            for (int degree : {2, 3})
                require(les_check(catalog_quandle(key), degree).exact(), key);
        return true;
    }});

    criteria.push_back({"9: diagram extraction matches fixtures and realize round-trips", [&] {
        Diagram1 d3 = parse_diagram1(slurp("fig3.adk"));
        Coloring c3 = make_coloring(d3, r3, parse_assignments(slurp("fig3.col")));
        require(check_coloring(c3).ok(), "fig3 coloring invalid");
        require(extract_chain(c3) == parse_chain(slurp("fig3.chn"), r3), "fig3 chain mismatch");

        Diagram0 d7 = parse_diagram0(slurp("fig7.d0k"));
        ShadowColoring0 s7 = make_shadow_coloring(d7, r3, parse_assignments(slurp("fig7.col")));
        require(check_shadow(s7).ok(), "fig7 shadow invalid");
        require(extract_chain(s7) == parse_chain(slurp("fig7.chn"), r3), "fig7 chain mismatch");

        std::mt19937 rng(909090);
        std::uniform_int_distribution<int> coeff(-2, 2);
        for (const char* key : {"dihedral:3", "qs6"}) {
            FiniteQuandle q = catalog_quandle(key);
            IntMatrix k = kernel_basis(smith_normal_form(boundary_matrix(q, Variant::Q, 2)));
            for (int trial = 0; trial < 25; ++trial) {
                std::vector<Int> combo(k.cols());
                for (auto& x : combo) x = coeff(rng);
                Chain c = from_coordinates(q, Variant::Q, 2, k.mul(combo));
                Realized r = realize_two_cycle(q, c, Variant::Q);
                require(check_coloring(r.coloring).ok(), "realized coloring invalid");
                require(project(extract_chain(r.coloring), Variant::Q) == c,
                        "realize round trip failed");
            }
        }
        return true;
    }});

    criteria.push_back({"10: conjugation-quandle shadow chain has nonzero class", [&] {
        FiniteQuandle qs5 = catalog_quandle("qs5");
        Diagram1 d = parse_diagram1(slurp("fig3.adk"));
        ShadowColoring s = make_shadow_coloring(d, qs5, parse_assignments(slurp("fig3-qs5.col")));
        require(check_shadow(s).ok(), "shadow coloring invalid");
        Chain t = extract_chain(s);
        require(is_cycle(qs5, t, Variant::Q), "extracted chain is not a cycle");
        require(!is_boundary(qs5, t, Variant::Q).has_value(), "extracted chain bounds");
        return !class_of(qs5, t, Variant::Q).is_zero();
    }});

    criteria.push_back({"11: property suites (boundary^2, axioms, SNF, hom counts)", [&] {
        std::mt19937 rng(123456);
        std::uniform_int_distribution<int> coeff(-3, 3);
        for (const auto& e : catalog_entries()) {
            FiniteQuandle q = catalog_quandle(e.key);
            std::uniform_int_distribution<int> el(0, q.size() - 1);
            for (int degree = 2; degree <= 5; ++degree)
                for (int trial = 0; trial < 50; ++trial) {  // 200 per quandle across degrees
                    Chain c(degree);
                    for (int t = 0; t < 4; ++t) {
                        Tuple tup;
                        for (int i = 0; i < degree; ++i) tup.xs.push_back(el(rng));
                        c.add(tup, coeff(rng));
                    }
                    require(boundary(q, boundary(q, c)).empty(), "boundary^2 != 0");
                }
            require(verify_axioms(q.table(), AxiomMode::Quandle).ok(), "axioms");
        }
        std::uniform_int_distribution<std::size_t> dim(0, 6);
        std::uniform_int_distribution<int> entry(-6, 6);
        for (int trial = 0; trial < 500; ++trial) {
            IntMatrix a(dim(rng), dim(rng));
            for (std::size_t i = 0; i < a.rows(); ++i)
                for (std::size_t j = 0; j < a.cols(); ++j) a.at(i, j) = entry(rng);
            SnfDecomposition s = smith_normal_form(a);
            require(s.u.mul(a).mul(s.v) == s.s, "SNF reconstruction");
        }
        Diagram1 d = parse_diagram1(slurp("fig3.adk"));
        Presentation p = fundamental_presentation(d);
        for (const char* key : {"dihedral:3", "qs5", "qs6", "trivial:2"}) {
            FiniteQuandle q = catalog_quandle(key);
            require(count_homs(p, q) == enumerate_colorings(d, q).size(), "hom count mismatch");
        }
        return true;
    }});

    int failures = 0;
    for (const auto& c : criteria) {
        bool pass = false;
        std::string detail;
        try {
            pass = c.run();
        } catch (const std::exception& e) {
            detail = e.what();
        }
        if (!pass) ++failures;
        std::cout << (pass ? "PASS" : "FAIL") << " criterion " << c.name;
        if (!detail.empty()) std::cout << " [" << detail << "]";
        std::cout << std::endl;
    }
    if (failures) std::cout << failures << " criterion(s) failed" << std::endl;
    return failures ? 1 : 0;
}
