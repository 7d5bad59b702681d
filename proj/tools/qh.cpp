// Command-line front end: quandle inspection, homology computation, cycle
// certification, diagram operations, and a reproduction suite.

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "qh/catalog.hpp"
#include "qh/chains.hpp"
#include "qh/diagrams.hpp"
#include "qh/homology.hpp"
#include "qh/intlin.hpp"
#include "qh/quandle.hpp"

using nlohmann::json;
using namespace qh;

namespace {

constexpr double kColumnGuard = 20000.0;

struct GuardExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write file '" + path + "'");
    out << content;
}

std::string fnv1a(const std::string& data) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

/// Largest chain-group dimension the command will touch.
void guard_dimensions(const FiniteQuandle& q, Variant v, int max_degree, bool force) {
    double m = q.size();
    double per = (v == Variant::R) ? m : m - 1;
    double cols = m;
    double worst = cols;
    for (int k = 2; k <= max_degree; ++k) {
        cols *= per;
        worst = std::max(worst, cols);
    }
    if (!force && worst > kColumnGuard)
        throw GuardExceeded("chain group dimension ~" + std::to_string((long long)worst) +
                            " exceeds the guard of 20000 columns; pass --force to override");
}

json group_json(std::size_t free_rank, const std::vector<Int>& torsion) {
    json t = json::array();
    for (const auto& d : torsion) t.push_back(d.get_str());
    return json{{"free_rank", free_rank},
                {"torsion", t},
                {"group", GroupShape{free_rank, torsion}.str()}};
}

json class_json(const ClassCoordinates& cc) {
    json f = json::array(), t = json::array();
    for (const auto& x : cc.free_part) f.push_back(x.get_str());
    for (const auto& x : cc.torsion_part) t.push_back(x.get_str());
    return json{{"free", f}, {"torsion", t}, {"zero", cc.is_zero()}};
}

std::string class_str(const ClassCoordinates& cc) {
    std::ostringstream os;
    os << "free coordinates: [";
    for (std::size_t i = 0; i < cc.free_part.size(); ++i)
        os << (i ? ", " : "") << cc.free_part[i];
    os << "], torsion coordinates: [";
    for (std::size_t i = 0; i < cc.torsion_part.size(); ++i)
        os << (i ? ", " : "") << cc.torsion_part[i];
    os << "]";
    return os.str();
}

void print_matrix(std::ostream& os, const IntMatrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << "  [";
        for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m.at(i, j);
        os << "]\n";
    }
    if (m.rows() == 0) os << "  (no rows)\n";
}

// ---------- quandle ----------

int cmd_quandle_show(const std::string& source, bool as_json) {
    FiniteQuandle q = load_quandle(source);
    if (as_json) {
        json orbs = json::array();
        for (const auto& o : orbits(q)) orbs.push_back(o);
        json labels = json::array();
        for (int a = 0; a < q.size(); ++a) labels.push_back(q.label(a));
        std::cout << json{{"size", q.size()},
                          {"table", q.table()},
                          {"labels", labels},
                          {"orbits", orbs},
                          {"is_quandle", q.is_quandle()}}
                         .dump(2)
                  << "\n";
        return 0;
    }
    std::cout << "size: " << q.size() << "\n";
    std::cout << "table (entry i,j = i*j):\n";
    for (int a = 0; a < q.size(); ++a) {
        std::cout << "  " << q.label(a) << " |";
        for (int b = 0; b < q.size(); ++b) std::cout << " " << q.label(q.op(a, b));
        std::cout << "\n";
    }
    std::cout << "orbits:";
    for (const auto& o : orbits(q)) {
        std::cout << " {";
        for (std::size_t i = 0; i < o.size(); ++i)
            std::cout << (i ? "," : "") << q.label(o[i]);
        std::cout << "}";
    }
    std::cout << "\n";
    return 0;
}

/// Raw table parse (same layout as the quandle file format) that does not
/// reject axiom violations, so `verify` can report them.
std::pair<std::vector<std::vector<int>>, std::vector<std::string>> parse_raw_table(
    const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<std::string> lines;
    while (std::getline(in, line)) {
        auto pos = line.find('#');
        if (pos != std::string::npos) line = line.substr(0, pos);
        if (line.find_first_not_of(" \t\r") != std::string::npos) lines.push_back(line);
    }
    if (lines.empty()) throw std::invalid_argument("quandle file: empty");
    int n = 0;
    if (!(std::istringstream(lines[0]) >> n) || n <= 0)
        throw std::invalid_argument("quandle file: bad size line");
    if (static_cast<int>(lines.size()) < n + 1)
        throw std::invalid_argument("quandle file: missing table rows");
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i) {
        std::istringstream row(lines[1 + i]);
        for (int j = 0; j < n; ++j)
            if (!(row >> table[i][j]))
                throw std::invalid_argument("quandle file: short row " + std::to_string(i));
    }
    std::vector<std::string> labels;
    if (static_cast<int>(lines.size()) > n + 1) {
        std::istringstream ls(lines[n + 1]);
        std::string head;
        ls >> head;
        if (head == "labels:") {
            std::string tok;
            while (ls >> tok) labels.push_back(tok);
        }
    }
    return {table, labels};
}

int cmd_quandle_verify(const std::string& source, bool rack, bool as_json) {
    std::vector<std::vector<int>> table;
    try {
        table = catalog_quandle(source).table();
    } catch (const std::invalid_argument&) {
        table = parse_raw_table(read_file(source)).first;
    }
    auto report = verify_axioms(table, rack ? AxiomMode::Rack : AxiomMode::Quandle);
    if (as_json) {
        json viols = json::array();
        for (const auto& v : report.violations) viols.push_back(v.describe());
        std::cout << json{{"ok", report.ok()}, {"violations", viols}}.dump(2) << "\n";
    } else if (report.ok()) {
        std::cout << "ok: table satisfies the " << (rack ? "rack" : "quandle") << " axioms\n";
    } else {
        for (const auto& v : report.violations) std::cout << v.describe() << "\n";
    }
    return report.ok() ? 0 : 4;
}

int cmd_quandle_list() {
    for (const auto& e : catalog_entries())
        std::cout << e.key << "  - " << e.description << "\n";
    return 0;
}

// ---------- homology ----------

int cmd_homology(const std::string& source, const std::string& variant, int degree,
                 const std::string& emit_prefix, bool force, bool as_json) {
    FiniteQuandle q = load_quandle(source);
    Variant v = parse_variant(variant);
    guard_dimensions(q, v, degree + 1, force);
    const HomologyGroup& h = homology(q, v, degree);
    if (!emit_prefix.empty()) {
        for (std::size_t i = 0; i < h.generators().size(); ++i)
            write_file(emit_prefix + "-" + std::to_string(i) + ".chn",
                       format_chain(h.generators()[i]));
    }
    if (as_json) {
        json gens = json::array();
        for (const auto& g : h.generators()) gens.push_back(format_chain(g));
        json out = group_json(h.free_rank(), h.torsion());
        out["generators"] = gens;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << h.str() << "\n";
    }
    return 0;
}

// ---------- chain ----------

Chain load_chain(const std::string& path, const FiniteQuandle& q) {
    return parse_chain(read_file(path), q);
}

int cmd_chain(const std::string& op, const std::string& source, const std::string& variant,
              const std::string& chain_path, const std::string& out_path, bool force,
              bool as_json) {
    FiniteQuandle q = load_quandle(source);
    Variant v = parse_variant(variant);
    Chain c = load_chain(chain_path, q);
    if (op == "boundary") {
        Chain b = project(boundary(q, project(c, v)), v == Variant::Q ? Variant::Q : Variant::R);
        if (as_json)
            std::cout << json{{"boundary", format_chain(b)}}.dump(2) << "\n";
        else
            std::cout << (b.empty() ? "0\n" : format_chain(b));
        return 0;
    }
    if (op == "is-cycle") {
        bool yes = is_cycle(q, c, v);
        if (as_json)
            std::cout << json{{"is_cycle", yes}}.dump(2) << "\n";
        else
            std::cout << (yes ? "yes" : "no") << "\n";
        return 0;
    }
    guard_dimensions(q, v, c.degree() + 1, force);
    if (op == "is-boundary") {
        auto w = is_boundary(q, c, v);  // throws domain_error if not a cycle
        if (as_json) {
            json out{{"is_boundary", w.has_value()}};
            if (w) out["witness"] = format_chain(*w);
            std::cout << out.dump(2) << "\n";
        } else if (w) {
            std::cout << "yes\n";
            if (!out_path.empty())
                write_file(out_path, format_chain(*w));
            else
                std::cout << "witness:\n" << format_chain(*w);
        } else {
            std::cout << "no\n";
        }
        return 0;
    }
    if (op == "class") {
        const HomologyGroup& h = homology(q, v, project(c, v).degree());
        ClassCoordinates cc = h.class_of(c);  // class_of checks the cycle condition
        if (as_json) {
            json out = class_json(cc);
            out["group"] = h.str();
            std::cout << out.dump(2) << "\n";
        } else {
            std::cout << "group: " << h.str() << "\n" << class_str(cc) << "\n";
        }
        return 0;
    }
    throw std::invalid_argument("unknown chain operation " + op);
}

// ---------- hom ----------

int cmd_hom_induced(const std::string& map_path, const std::string& variant, int degree,
                    bool force, bool as_json) {
    std::string text = read_file(map_path);
    std::istringstream in(text);
    std::string line, src_key, tgt_key;
    std::vector<std::pair<std::string, std::string>> pairs;
    while (std::getline(in, line)) {
        auto pos = line.find('#');
        if (pos != std::string::npos) line = line.substr(0, pos);
        std::istringstream ls(line);
        std::string a, b, c;
        if (!(ls >> a)) continue;
        if (a == "source:") {
            ls >> src_key;
        } else if (a == "target:") {
            ls >> tgt_key;
        } else if (ls >> b >> c && b == "=") {
            pairs.emplace_back(a, c);
        } else {
            throw std::invalid_argument("map file: bad line: " + line);
        }
    }
    if (src_key.empty() || tgt_key.empty())
        throw std::invalid_argument("map file: needs 'source:' and 'target:' lines");
    FiniteQuandle src = load_quandle(src_key), tgt = load_quandle(tgt_key);
    std::vector<int> map(src.size(), -1);
    for (const auto& [a, b] : pairs) {
        auto ea = src.element_of(a);
        auto eb = tgt.element_of(b);
        if (!ea || !eb) throw std::invalid_argument("map file: unknown element in " + a + " = " + b);
        map[*ea] = *eb;
    }
    for (int a = 0; a < src.size(); ++a)
        if (map[a] < 0)
            throw std::invalid_argument("map file: element " + src.label(a) + " unassigned");
    auto rep = check_hom(map, src, tgt);
    if (!rep.ok) {
        auto [a, b] = rep.witness_pairs.front();
        std::cerr << "not a homomorphism: f(" << src.label(a) << "*" << src.label(b)
                  << ") != f(" << src.label(a) << ")*f(" << src.label(b) << ")\n";
        return 4;
    }
    Variant v = parse_variant(variant);
    guard_dimensions(src, v, degree + 1, force);
    guard_dimensions(tgt, v, degree + 1, force);
    QuandleHom f(src, tgt, map);
    InducedMap im = induced_map(f, v, degree);
    if (as_json) {
        json m = json::array();
        for (std::size_t i = 0; i < im.matrix.rows(); ++i) {
            json row = json::array();
            for (std::size_t j = 0; j < im.matrix.cols(); ++j)
                row.push_back(im.matrix.at(i, j).get_str());
            m.push_back(row);
        }
        std::cout << json{{"source", im.source->str()},
                          {"target", im.target->str()},
                          {"matrix", m},
                          {"surjective", im.surjective},
                          {"injective", im.injective}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << "source: " << im.source->str() << "\n";
        std::cout << "target: " << im.target->str() << "\n";
        std::cout << "matrix (columns = source generators, rows = target coordinates):\n";
        print_matrix(std::cout, im.matrix);
        std::cout << "surjective: " << (im.surjective ? "yes" : "no") << "\n";
        std::cout << "injective: " << (im.injective ? "yes" : "no") << "\n";
    }
    return 0;
}

// ---------- diagram ----------

bool looks_like_diagram0(const std::string& text) {
    return text.find("circle:") != std::string::npos;
}

int cmd_diagram_colorings(const std::string& diag_path, const std::string& source, bool list,
                          bool as_json) {
    Diagram1 d = parse_diagram1(read_file(diag_path));
    auto rep = validate(d);
    if (!rep.ok()) {
        for (const auto& p : rep.problems) std::cerr << p << "\n";
        return 2;
    }
    FiniteQuandle q = load_quandle(source);
    auto cols = enumerate_colorings(d, q);
    if (as_json) {
        json arr = json::array();
        for (const auto& c : cols) arr.push_back(format_coloring(c));
        std::cout << json{{"count", cols.size()}, {"colorings", arr}}.dump(2) << "\n";
    } else {
        std::cout << cols.size() << "\n";
        if (list)
            for (const auto& c : cols) std::cout << "\n" << format_coloring(c);
    }
    return 0;
}

int cmd_diagram_shadow(const std::string& diag_path, const std::string& col_path,
                       const std::string& source, const std::string& seed_region,
                       const std::string& seed_element, bool as_json) {
    Diagram1 d = parse_diagram1(read_file(diag_path));
    FiniteQuandle q = load_quandle(source);
    Coloring c = make_coloring(d, q, parse_assignments(read_file(col_path)));
    auto rep = check_coloring(c);
    if (!rep.ok()) {
        for (const auto& p : rep.problems) std::cerr << p << "\n";
        return 2;
    }
    auto elem = q.element_of(seed_element);
    if (!elem) throw std::invalid_argument("unknown element " + seed_element);
    auto s = shadow_extend(c, seed_region, *elem);
    if (as_json) {
        json out{{"extends", s.has_value()}};
        if (s) out["shadow"] = format_coloring(*s);
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    if (!s) {
        std::cout << "no consistent shadow extension\n";
        return 0;
    }
    std::cout << format_coloring(*s);
    return 0;
}

int cmd_diagram_extract(const std::string& diag_path, const std::string& col_path,
                        const std::string& source, bool endpoints, bool as_json) {
    std::string text = read_file(diag_path);
    FiniteQuandle q = load_quandle(source);
    auto assignments = parse_assignments(read_file(col_path));
    Chain c, ep;
    bool have_ep = false;
    if (looks_like_diagram0(text)) {
        Diagram0 d = parse_diagram0(text);
        auto rep = validate(d);
        if (!rep.ok()) {
            for (const auto& p : rep.problems) std::cerr << p << "\n";
            return 2;
        }
        ShadowColoring0 s = make_shadow_coloring(d, q, assignments);
        auto srep = check_shadow(s);
        if (!srep.ok()) {
            for (const auto& p : srep.problems) std::cerr << p << "\n";
            return 2;
        }
        c = extract_chain(s);
    } else {
        Diagram1 d = parse_diagram1(text);
        auto rep = validate(d);
        if (!rep.ok()) {
            for (const auto& p : rep.problems) std::cerr << p << "\n";
            return 2;
        }
        bool shadow = false;
        for (const auto& r : d.regions)
            if (assignments.count(r)) shadow = true;
        if (shadow) {
            ShadowColoring s = make_shadow_coloring(d, q, assignments);
            auto srep = check_shadow(s);
            if (!srep.ok()) {
                for (const auto& p : srep.problems) std::cerr << p << "\n";
                return 2;
            }
            c = extract_chain(s);
            ep = endpoint_chain(s);
            have_ep = true;
        } else {
            Coloring col = make_coloring(d, q, assignments);
            auto crep = check_coloring(col);
            if (!crep.ok()) {
                for (const auto& p : crep.problems) std::cerr << p << "\n";
                return 2;
            }
            c = extract_chain(col);
        }
    }
    if (as_json) {
        json out{{"chain", format_chain(c)}};
        if (have_ep) out["endpoint_chain"] = format_chain(ep);
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << (c.empty() ? "" : format_chain(c));
        if (endpoints && have_ep) std::cout << "# endpoint chain\n" << format_chain(ep);
    }
    return 0;
}

int cmd_diagram_realize(const std::string& chain_path, const std::string& source,
                        const std::string& variant, const std::string& out_diag,
                        const std::string& out_col) {
    FiniteQuandle q = load_quandle(source);
    Chain c = load_chain(chain_path, q);
    Realized r = realize_two_cycle(q, c, parse_variant(variant));
    std::string dtext = format_diagram1(*r.diagram);
    std::string ctext = format_coloring(r.coloring);
    if (!out_diag.empty())
        write_file(out_diag, dtext);
    else
        std::cout << "# diagram\n" << dtext;
    if (!out_col.empty())
        write_file(out_col, ctext);
    else
        std::cout << "# coloring\n" << ctext;
    return 0;
}

int cmd_diagram_present(const std::string& diag_path, const std::string& source, bool as_json) {
    Diagram1 d = parse_diagram1(read_file(diag_path));
    auto rep = validate(d);
    if (!rep.ok()) {
        for (const auto& p : rep.problems) std::cerr << p << "\n";
        return 2;
    }
    Presentation p = fundamental_presentation(d);
    if (as_json) {
        json out{{"presentation", p.str()}};
        if (!source.empty()) out["hom_count"] = count_homs(p, load_quandle(source));
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    std::cout << p.str() << "\n";
    if (!source.empty())
        std::cout << "homomorphisms into " << source << ": "
                  << count_homs(p, load_quandle(source)) << "\n";
    return 0;
}

// ---------- les ----------

int cmd_les(const std::string& op, const std::string& source, int degree, bool force,
            bool as_json) {
    FiniteQuandle q = load_quandle(source);
    guard_dimensions(q, Variant::R, degree + 1, force);
    if (op == "boundary-map") {
        ConnectingMap m = les_boundary_map(q, degree);
        if (as_json) {
            std::cout << json{{"source", m.source->str()},
                              {"target", m.target->str()},
                              {"zero", m.is_zero}}
                             .dump(2)
                      << "\n";
        } else {
            std::cout << "H_" << degree << "^Q = " << m.source->str() << " -> H_" << degree - 1
                      << "^D = " << m.target->str() << "\n";
            print_matrix(std::cout, m.matrix);
            std::cout << "zero map: " << (m.is_zero ? "yes" : "no") << "\n";
        }
        return 0;
    }
    if (op == "check") {
        LesReport r = les_check(q, degree);
        if (as_json) {
            std::cout << json{{"hd_n", r.hd_n.str()},
                              {"hr_n", r.hr_n.str()},
                              {"hq_n", r.hq_n.str()},
                              {"hd_n_minus_1", r.hd_nm1.str()},
                              {"exact_at_r", r.exact_at_r},
                              {"exact_at_q", r.exact_at_q},
                              {"exact", r.exact()}}
                             .dump(2)
                      << "\n";
        } else {
            std::cout << "H_" << degree << "^D = " << r.hd_n.str() << ", H_" << degree
                      << "^R = " << r.hr_n.str() << ", H_" << degree << "^Q = " << r.hq_n.str()
                      << ", H_" << degree - 1 << "^D = " << r.hd_nm1.str() << "\n";
            std::cout << "exact at H^R: " << (r.exact_at_r ? "yes" : "no") << "\n";
            std::cout << "exact at H^Q: " << (r.exact_at_q ? "yes" : "no") << "\n";
        }
        return r.exact() ? 0 : 4;
    }
    throw std::invalid_argument("unknown les operation " + op);
}

// ---------- replay ----------

int cmd_replay(const std::string& fixtures, bool as_json) {
    struct Check {
        std::string name;
        std::function<bool()> run;
    };
    FiniteQuandle r3 = catalog_quandle("dihedral:3");
    FiniteQuandle qs5 = catalog_quandle("qs5");
    FiniteQuandle qs6 = catalog_quandle("qs6");
    auto chain2 = [](std::initializer_list<std::pair<std::vector<int>, int>> terms) {
        Chain c(static_cast<int>(terms.begin()->first.size()));
        for (const auto& [xs, k] : terms) c.add(Tuple{xs}, k);
        return c;
    };
    const int A = 0, B = 1, G = 2;  // alpha, beta, gamma in dihedral:3
    std::vector<Check> checks = {
        {"H_2^Q(R_3) = 0",
         [&] { return homology(r3, Variant::Q, 2).str() == "0"; }},
        {"H_3^Q(R_3) = Z_3",
         [&] { return homology(r3, Variant::Q, 3).str() == "Z_3"; }},
        {"H_3^Q(QS(6)) = Z_24",
         [&] { return homology(qs6, Variant::Q, 3).str() == "Z_24"; }},
        {"(a,b)+(b,g)-(b,a) bounds over R_3 with a checked witness",
         [&] {
             Chain c = chain2({{{A, B}, 1}, {{B, G}, 1}, {{B, A}, -1}});
             auto w = is_boundary(r3, c, Variant::Q);
             return w && project(boundary(r3, *w), Variant::Q) == c;
         }},
        {"(a,b)+(g,a)+(b,g) bounds over R_3 with a checked witness",
         [&] {
             Chain c = chain2({{{A, B}, 1}, {{G, A}, 1}, {{B, G}, 1}});
             auto w = is_boundary(r3, c, Variant::Q);
             return w && project(boundary(r3, *w), Variant::Q) == c;
         }},
        {"(a,b,g)+(a,g,a) generates H_3^Q(R_3) and is not a rack cycle",
         [&] {
             Chain c = chain2({{{A, B, G}, 1}, {{A, G, A}, 1}});
             if (!is_cycle(r3, c, Variant::Q)) return false;
             if (is_cycle(r3, c, Variant::R)) return false;
             Chain d = boundary(r3, c);
             if (d != chain2({{{A, A}, 1}, {{G, G}, -1}})) return false;
             if (is_boundary(r3, c, Variant::Q)) return false;
             ClassCoordinates cc = class_of(r3, c, Variant::Q);
             return cc.torsion_part.size() == 1 && cc.torsion_part[0] % 3 != 0;
         }},
        {"p: QS(6) -> R_3 induces a surjection Z_24 -> Z_3 in degree 3",
         [&] {
             QuandleHom p(qs6, r3, {0, 1, 1, 2, 0, 2});
             return induced_map(p, Variant::Q, 3).surjective;
         }},
        {"connecting map H_3^Q -> H_2^D is zero for R_3",
         [&] { return les_boundary_map(r3, 3).is_zero; }},
        {"connecting map H_4^Q -> H_3^D is zero for R_3",
         [&] { return les_boundary_map(r3, 4).is_zero; }},
        {"closed 3-crossing fixture extracts (a,b)+(b,g)-(b,a)",
         [&] {
             Diagram1 d = parse_diagram1(read_file(fixtures + "/fig3.adk"));
             Coloring c =
                 make_coloring(d, r3, parse_assignments(read_file(fixtures + "/fig3.col")));
             return check_coloring(c).ok() &&
                    extract_chain(c) == chain2({{{A, B}, 1}, {{B, G}, 1}, {{B, A}, -1}});
         }},
        {"marked-circle fixture extracts (a,b)+(g,a)+(b,g)",
         [&] {
             Diagram0 d = parse_diagram0(read_file(fixtures + "/fig7.d0k"));
             ShadowColoring0 s =
                 make_shadow_coloring(d, r3, parse_assignments(read_file(fixtures + "/fig7.col")));
             return check_shadow(s).ok() &&
                    extract_chain(s) == chain2({{{A, B}, 1}, {{G, A}, 1}, {{B, G}, 1}});
         }},
        {"arc-diagram fixture extracts a representative of [(a,b,g)+(a,g,a)]",
         [&] {
             Diagram1 d = parse_diagram1(read_file(fixtures + "/fig10.adk"));
             ShadowColoring s = make_shadow_coloring(
                 d, r3, parse_assignments(read_file(fixtures + "/fig10.col")));
             if (!check_shadow(s).ok()) return false;
             Chain c = extract_chain(s);
             Chain want = chain2({{{A, B, G}, 1}, {{A, G, A}, 1}});
             return project(c, Variant::Q) == want;
         }},
        {"QS(5) shadow 3-chain on the 3-crossing fixture is non-trivial",
         [&] {
             Diagram1 d = parse_diagram1(read_file(fixtures + "/fig3.adk"));
             ShadowColoring s = make_shadow_coloring(
                 d, qs5, parse_assignments(read_file(fixtures + "/fig3-qs5.col")));
             if (!check_shadow(s).ok()) return false;
             Chain c = extract_chain(s);
             return !class_of(qs5, c, Variant::Q).is_zero();
         }},
        {"3-crossing fixture has the knot presentation with 9 homs into R_3",
         [&] {
             Diagram1 d = parse_diagram1(read_file(fixtures + "/fig3.adk"));
             Presentation p = fundamental_presentation(d);
             return p.generators.size() == 3 && p.relations.size() == 3 &&
                    count_homs(p, r3) == 9 && enumerate_colorings(d, r3).size() == 9;
         }},
    };
    json results = json::array();
    bool all = true;
    std::vector<std::string> failed;
    for (const auto& check : checks) {
        bool pass = false;
        std::string error;
        try {
            pass = check.run();
        } catch (const std::exception& e) {
            error = e.what();
        }
        all = all && pass;
        if (!pass) failed.push_back(check.name);
        if (as_json) {
            json item{{"name", check.name}, {"pass", pass}};
            if (!error.empty()) item["error"] = error;
            results.push_back(item);
        } else {
            std::cout << (pass ? "PASS" : "FAIL") << "  " << check.name;
            if (!error.empty()) std::cout << "  (" << error << ")";
            std::cout << "\n";
        }
    }
    if (as_json) std::cout << json{{"checks", results}, {"all_pass", all}}.dump(2) << "\n";
    if (!all && !as_json) {
        std::cout << "failed:";
        for (const auto& f : failed) std::cout << " [" << f << "]";
        std::cout << "\n";
    }
    return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"integral rack/degenerate/quandle homology of finite quandles"};
    app.require_subcommand(1);
    bool as_json = false, force = false;
    app.add_flag("--json", as_json, "structured JSON output");
    app.add_flag("--force", force, "override the dimension guard");

    std::function<int()> action;

    // quandle
    auto* sq = app.add_subcommand("quandle", "inspect or verify quandle tables");
    sq->require_subcommand(1);
    {
        static std::string source;
        auto* show = sq->add_subcommand("show", "print table, labels, orbits");
        show->add_option("source", source, "catalog key or file")->required();
        show->callback([&] { action = [&] { return cmd_quandle_show(source, as_json); }; });
        static std::string vsource;
        static bool rack = false;
        auto* verify = sq->add_subcommand("verify", "check the axioms, report witnesses");
        verify->add_option("source", vsource, "catalog key or file")->required();
        verify->add_flag("--rack", rack, "check rack axioms only");
        verify->callback(
            [&] { action = [&] { return cmd_quandle_verify(vsource, rack, as_json); }; });
        auto* list = sq->add_subcommand("list", "list catalog keys");
        list->callback([&] { action = [&] { return cmd_quandle_list(); }; });
    }

    // homology
    {
        static std::string source, variant, emit;
        static int degree = 0;
        auto* sh = app.add_subcommand("homology", "compute H_n^R / H_n^D / H_n^Q");
        sh->add_option("quandle", source)->required();
        sh->add_option("variant", variant, "R, D or Q")->required();
        sh->add_option("degree", degree)->required();
        sh->add_option("--emit-generators", emit, "write generator chains with this prefix");
        sh->callback([&] {
            action = [&] { return cmd_homology(source, variant, degree, emit, force, as_json); };
        });
    }

    // chain
    {
        static std::string op, source, variant, chain_path, out;
        auto* sc = app.add_subcommand("chain", "boundary / is-cycle / is-boundary / class");
        sc->add_option("operation", op, "boundary|is-cycle|is-boundary|class")->required();
        sc->add_option("quandle", source)->required();
        sc->add_option("variant", variant)->required();
        sc->add_option("chain", chain_path, "chain file")->required();
        sc->add_option("--out", out, "write the witness chain here");
        sc->callback([&] {
            action = [&] { return cmd_chain(op, source, variant, chain_path, out, force, as_json); };
        });
    }

    // hom
    {
        static std::string map_path, variant;
        static int degree = 0;
        auto* sm = app.add_subcommand("hom", "induced maps on homology");
        auto* ind = sm->add_subcommand("induced", "induced map of a quandle homomorphism");
        ind->add_option("map", map_path, "map file")->required();
        ind->add_option("variant", variant)->required();
        ind->add_option("degree", degree)->required();
        ind->callback([&] {
            action = [&] { return cmd_hom_induced(map_path, variant, degree, force, as_json); };
        });
        sm->require_subcommand(1);
    }

    // diagram
    {
        auto* sd = app.add_subcommand("diagram", "diagram colorings and chain translation");
        sd->require_subcommand(1);
        static std::string diag, col, source, seed_region, seed_elem, variant = "Q";
        static std::string chain_path, out_diag, out_col, present_quandle;
        static bool list = false, endpoints = false;
        auto* c = sd->add_subcommand("colorings", "enumerate colorings");
        c->add_option("diagram", diag)->required();
        c->add_option("quandle", source)->required();
        c->add_flag("--list", list, "print every coloring");
        c->callback([&] {
            action = [&] { return cmd_diagram_colorings(diag, source, list, as_json); };
        });
        auto* s = sd->add_subcommand("shadow", "extend a coloring to a shadow coloring");
        s->add_option("diagram", diag)->required();
        s->add_option("coloring", col)->required();
        s->add_option("quandle", source)->required();
        s->add_option("region", seed_region)->required();
        s->add_option("element", seed_elem)->required();
        s->callback([&] {
            action = [&] {
                return cmd_diagram_shadow(diag, col, source, seed_region, seed_elem, as_json);
            };
        });
        auto* e = sd->add_subcommand("extract", "chain represented by a (shadow) coloring");
        e->add_option("diagram", diag)->required();
        e->add_option("coloring", col)->required();
        e->add_option("quandle", source)->required();
        e->add_flag("--endpoints", endpoints, "also print the endpoint 2-chain");
        e->callback([&] {
            action = [&] { return cmd_diagram_extract(diag, col, source, endpoints, as_json); };
        });
        auto* r = sd->add_subcommand("realize", "closed colored diagram for a 2-cycle");
        r->add_option("chain", chain_path)->required();
        r->add_option("quandle", source)->required();
        r->add_option("--variant", variant, "R or Q (default Q)");
        r->add_option("--out-diagram", out_diag);
        r->add_option("--out-coloring", out_col);
        r->callback([&] {
            action = [&] {
                return cmd_diagram_realize(chain_path, source, variant, out_diag, out_col);
            };
        });
        auto* p = sd->add_subcommand("present", "fundamental presentation of a closed diagram");
        p->add_option("diagram", diag)->required();
        p->add_option("--count", present_quandle, "count homomorphisms into this quandle");
        p->callback([&] {
            action = [&] { return cmd_diagram_present(diag, present_quandle, as_json); };
        });
    }

    // les
    {
        static std::string op, source;
        static int degree = 0;
        auto* sl = app.add_subcommand("les", "long exact sequence checks");
        sl->add_option("operation", op, "check|boundary-map")->required();
        sl->add_option("quandle", source)->required();
        sl->add_option("degree", degree)->required();
        sl->callback(
            [&] { action = [&] { return cmd_les(op, source, degree, force, as_json); }; });
    }

    // replay
    {
        static std::string fixtures = "fixtures";
        auto* sr = app.add_subcommand("replay", "re-run the recorded computations");
        sr->add_option("--fixtures", fixtures, "fixture directory (default ./fixtures)");
        sr->callback([&] { action = [&] { return cmd_replay(fixtures, as_json); }; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    try {
        return action ? action() : 2;
    } catch (const GuardExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
