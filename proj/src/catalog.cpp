#include "qh/catalog.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace qh {

namespace {

FiniteQuandle with_labels(FiniteQuandle q, std::vector<std::string> labels) {
    return FiniteQuandle(q.table(), std::move(labels));
}

FiniteQuandle make_qs5() {
    // the five non-identity permutations of degree 3
    FiniteQuandle q = conjugation({{0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}});
    return with_labels(q, {"(23)", "(12)", "(123)", "(132)", "(13)"});
}

FiniteQuandle make_qs6() {
    // the six 4-cycles of degree 4; labels follow the sorted one-line order
    FiniteQuandle q = conjugation({{1, 2, 3, 0},
                                   {1, 3, 0, 2},
                                   {2, 0, 3, 1},
                                   {2, 3, 1, 0},
                                   {3, 0, 1, 2},
                                   {3, 2, 0, 1}});
    return with_labels(q, {"a", "b", "B", "c", "A", "C"});
}

int parse_int(const std::string& s, const std::string& key) {
    try {
        std::size_t pos = 0;
        int v = std::stoi(s, &pos);
        if (pos != s.size()) throw std::invalid_argument("");
        return v;
    } catch (...) {
        throw std::invalid_argument("catalog: bad integer in key '" + key + "'");
    }
}

}  // namespace

const std::vector<CatalogEntry>& catalog_entries() {
    static const std::vector<CatalogEntry> entries = {
        {"trivial:1", "trivial quandle, 1 element"},
        {"trivial:2", "trivial quandle, 2 elements"},
        {"trivial:3", "trivial quandle, 3 elements"},
        {"trivial:4", "trivial quandle, 4 elements"},
        {"dihedral:3", "dihedral quandle R_3"},
        {"dihedral:4", "dihedral quandle R_4"},
        {"alexander:2:T^2+T+1", "Alexander quandle Z_2[T,1/T]/(T^2+T+1), 4 elements"},
        {"qs5", "conjugation quandle on the 5 non-identity permutations of S_3"},
        {"qs6", "conjugation quandle on the 6 four-cycles of S_4"},
        {"alexander:3:T+1", "Alexander quandle Z_3[T,1/T]/(T+1), equals dihedral:3"},
    };
    return entries;
}

FiniteQuandle catalog_quandle(const std::string& key) {
    if (key == "qs5") return make_qs5();
    if (key == "qs6") return make_qs6();
    auto colon = key.find(':');
    if (colon != std::string::npos) {
        std::string family = key.substr(0, colon);
        std::string rest = key.substr(colon + 1);
        if (family == "trivial") return trivial_quandle(parse_int(rest, key));
        if (family == "dihedral") return dihedral(parse_int(rest, key));
        if (family == "alexander") {
            auto colon2 = rest.find(':');
            if (colon2 == std::string::npos)
                throw std::invalid_argument("catalog: alexander key needs modulus and polynomial");
            int n = parse_int(rest.substr(0, colon2), key);
            return alexander(LaurentPolynomial::parse(n, rest.substr(colon2 + 1)));
        }
    }
    throw std::invalid_argument("catalog: unknown key '" + key + "'");
}

FiniteQuandle load_quandle(const std::string& source) {
    try {
        return catalog_quandle(source);
    } catch (const std::invalid_argument&) {
    }
    std::ifstream in(source);
    if (!in) throw std::invalid_argument("cannot open quandle source '" + source + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_quandle(buf.str());
}

}  // namespace qh
