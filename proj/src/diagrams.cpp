#include "qh/diagrams.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "qh/homology.hpp"

namespace qh {

int Diagram1::edge_index(const std::string& name) const {
    for (std::size_t i = 0; i < edges.size(); ++i)
        if (edges[i].name == name) return static_cast<int>(i);
    return -1;
}

namespace {

struct UnionFind {
    std::vector<std::size_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (a < b) std::swap(a, b);  // keep the smallest index as root
        parent[a] = b;
    }
};

}  // namespace

DiagramReport validate(const Diagram0& d) {
    DiagramReport rep;
    std::map<std::string, int> seen;
    for (std::size_t ci = 0; ci < d.circles.size(); ++ci) {
        const Circle0& c = d.circles[ci];
        std::string where = "circle " + std::to_string(ci + 1);
        if (c.vertices.size() != c.signs.size())
            rep.problems.push_back(where + ": vertex/sign count mismatch");
        if (c.vertices.empty()) {
            if (c.slots.size() != 1)
                rep.problems.push_back(where + ": a vertex-free circle needs exactly one slot");
        } else if (c.slots.size() != c.vertices.size()) {
            rep.problems.push_back(where + ": slot count must equal vertex count");
        }
        for (const auto& s : c.slots)
            if (++seen[s] > 1) rep.problems.push_back("duplicate slot name " + s);
        for (const auto& v : c.vertices)
            if (++seen[v] > 1) rep.problems.push_back("duplicate vertex name " + v);
        for (int s : c.signs)
            if (s != 1 && s != -1) rep.problems.push_back(where + ": vertex sign must be +1/-1");
    }
    return rep;
}

DiagramReport validate(const Diagram1& d) {
    DiagramReport rep;
    std::map<std::string, int> region_uses;
    for (const auto& r : d.regions) {
        if (region_uses.count(r)) rep.problems.push_back("duplicate region " + r);
        region_uses[r] = 0;
    }
    std::map<std::string, int> inbound, outbound;
    std::map<std::string, bool> edge_seen;
    for (const auto& e : d.edges) {
        if (edge_seen.count(e.name)) rep.problems.push_back("duplicate edge " + e.name);
        edge_seen[e.name] = true;
        inbound[e.name] = outbound[e.name] = 0;
        for (const auto& r : {e.right, e.left}) {
            auto it = region_uses.find(r);
            if (it == region_uses.end())
                rep.problems.push_back("edge " + e.name + " references unknown region " + r);
            else
                ++it->second;
        }
    }
    auto touch = [&](const std::string& name, bool in, const std::string& where) {
        if (!edge_seen.count(name)) {
            rep.problems.push_back(where + " references unknown edge " + name);
            return;
        }
        ++(in ? inbound : outbound)[name];
    };
    for (std::size_t i = 0; i < d.crossings.size(); ++i) {
        const Crossing1& x = d.crossings[i];
        std::string where = "crossing " + std::to_string(i + 1);
        if (x.sign != 1 && x.sign != -1) rep.problems.push_back(where + ": sign must be +1/-1");
        touch(x.over_in, true, where);
        touch(x.over_out, false, where);
        touch(x.under_in, true, where);
        touch(x.under_out, false, where);
        if (!region_uses.count(x.source_region))
            rep.problems.push_back(where + ": unknown source region " + x.source_region);
        for (const auto& o : {x.over_in, x.over_out})
            if (o == x.under_in || o == x.under_out)
                rep.problems.push_back(where + ": edge " + o + " is both over and under");
    }
    for (std::size_t i = 0; i < d.endpoints.size(); ++i) {
        touch(d.endpoints[i].edge, !d.endpoints[i].starts,
              "endpoint " + std::to_string(i + 1));
    }
    for (const auto& e : d.edges) {
        int in = inbound[e.name], out = outbound[e.name];
        if (!((in == 1 && out == 1) || (in == 0 && out == 0)))
            rep.problems.push_back("edge " + e.name + " has " + std::to_string(in) +
                                   " inbound and " + std::to_string(out) +
                                   " outbound incidences");
    }
    for (const auto& [r, uses] : region_uses)
        if (uses == 0 && !d.edges.empty()) rep.problems.push_back("region " + r + " unused");
    return rep;
}

namespace {

std::optional<int> edge_color(const Coloring& c, const std::string& edge) {
    auto it = c.edge_colors.find(edge);
    if (it == c.edge_colors.end()) return std::nullopt;
    return it->second;
}

}  // namespace

DiagramReport check_coloring(const Coloring& c) {
    DiagramReport rep;
    const FiniteQuandle& q = *c.quandle;
    for (const auto& e : c.diagram->edges) {
        auto col = edge_color(c, e.name);
        if (!col)
            rep.problems.push_back("edge " + e.name + " uncolored");
        else if (*col < 0 || *col >= q.size())
            rep.problems.push_back("edge " + e.name + " color out of range");
    }
    if (!rep.ok()) return rep;
    for (std::size_t i = 0; i < c.diagram->crossings.size(); ++i) {
        const Crossing1& x = c.diagram->crossings[i];
        std::string where = "crossing " + std::to_string(i + 1);
        int over_in = *edge_color(c, x.over_in), over_out = *edge_color(c, x.over_out);
        if (over_in != over_out)
            rep.problems.push_back(where + ": over color changes across the crossing");
        int us = *edge_color(c, x.under_source());
        int ut = *edge_color(c, x.under_target());
        if (ut != q.op(us, over_in))
            rep.problems.push_back(where + ": under colors violate the crossing relation");
    }
    return rep;
}

DiagramReport check_shadow(const ShadowColoring& s) {
    DiagramReport rep = check_coloring(s.base);
    const Diagram1& d = *s.base.diagram;
    const FiniteQuandle& q = *s.base.quandle;
    for (const auto& r : d.regions)
        if (!s.region_colors.count(r)) rep.problems.push_back("region " + r + " uncolored");
    if (!rep.ok()) return rep;
    for (const auto& e : d.edges) {
        int right = s.region_colors.at(e.right);
        int left = s.region_colors.at(e.left);
        if (left != q.op(right, *edge_color(s.base, e.name)))
            rep.problems.push_back("edge " + e.name + ": region colors violate left = right * edge");
    }
    for (const auto& ep : d.endpoints) {
        int i = d.edge_index(ep.edge);
        if (i < 0) continue;
        int a = *edge_color(s.base, ep.edge);
        if (s.region_colors.at(d.edges[i].right) != a || s.region_colors.at(d.edges[i].left) != a)
            rep.problems.push_back("endpoint on " + ep.edge +
                                   ": surrounding region color differs from the arc color");
    }
    return rep;
}

DiagramReport check_shadow(const ShadowColoring0& s) {
    DiagramReport rep;
    const FiniteQuandle& q = *s.quandle;
    for (const auto& c : s.diagram->circles) {
        for (const auto& sl : c.slots)
            if (!s.slot_colors.count(sl)) rep.problems.push_back("slot " + sl + " uncolored");
        for (const auto& v : c.vertices)
            if (!s.vertex_colors.count(v)) rep.problems.push_back("vertex " + v + " uncolored");
    }
    if (!rep.ok()) return rep;
    for (const auto& c : s.diagram->circles) {
        const std::size_t k = c.vertices.size();
        for (std::size_t i = 0; i < k; ++i) {
            int before = s.slot_colors.at(c.slots[i]);
            int after = s.slot_colors.at(c.slots[(i + 1) % k]);
            int v = s.vertex_colors.at(c.vertices[i]);
            bool ok = c.signs[i] > 0 ? after == q.op(before, v) : before == q.op(after, v);
            if (!ok)
                rep.problems.push_back("vertex " + c.vertices[i] +
                                       ": slot colors violate the vertex relation");
        }
    }
    return rep;
}

namespace {

/// Arc partition: edges merged through over-passes; arcs ordered by their
/// lowest edge index.
struct Arcs {
    std::vector<std::size_t> arc_of_edge;  // edge index -> arc index
    std::size_t count = 0;
};

Arcs compute_arcs(const Diagram1& d) {
    UnionFind uf(d.edges.size());
    for (const auto& x : d.crossings) {
        int a = d.edge_index(x.over_in), b = d.edge_index(x.over_out);
        if (a >= 0 && b >= 0) uf.unite(a, b);
    }
    Arcs arcs;
    arcs.arc_of_edge.resize(d.edges.size());
    std::map<std::size_t, std::size_t> order;
    for (std::size_t i = 0; i < d.edges.size(); ++i) {
        std::size_t root = uf.find(i);
        auto [it, inserted] = order.try_emplace(root, order.size());
        arcs.arc_of_edge[i] = it->second;
    }
    arcs.count = order.size();
    return arcs;
}

}  // namespace

std::vector<Coloring> enumerate_colorings(const Diagram1& d, const FiniteQuandle& q) {
    Arcs arcs = compute_arcs(d);
    // relation per crossing in arc indices: a(us) * a(over) = a(ut)
    struct Rel {
        std::size_t us, over, ut, latest;
    };
    std::vector<Rel> rels;
    for (const auto& x : d.crossings) {
        Rel r;
        r.us = arcs.arc_of_edge[d.edge_index(x.under_source())];
        r.over = arcs.arc_of_edge[d.edge_index(x.over_in)];
        r.ut = arcs.arc_of_edge[d.edge_index(x.under_target())];
        r.latest = std::max({r.us, r.over, r.ut});
        rels.push_back(r);
    }
    std::vector<Coloring> out;
    std::vector<int> assign(arcs.count, 0);
    auto emit = [&]() {
        Coloring c{&d, &q, {}};
        for (std::size_t i = 0; i < d.edges.size(); ++i)
            c.edge_colors[d.edges[i].name] = assign[arcs.arc_of_edge[i]];
        out.push_back(std::move(c));
    };
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
        if (k == arcs.count) {
            emit();
            return;
        }
        for (int v = 0; v < q.size(); ++v) {
            assign[k] = v;
            bool ok = true;
            for (const Rel& r : rels)
                if (r.latest == k && assign[r.ut] != q.op(assign[r.us], assign[r.over])) {
                    ok = false;
                    break;
                }
            if (ok) rec(k + 1);
        }
    };
    if (arcs.count == 0) {
        if (d.edges.empty()) out.push_back(Coloring{&d, &q, {}});
        return out;
    }
    rec(0);
    return out;
}

std::optional<ShadowColoring> shadow_extend(const Coloring& c, const std::string& seed_region,
                                            int seed_color) {
    const Diagram1& d = *c.diagram;
    if (std::find(d.regions.begin(), d.regions.end(), seed_region) == d.regions.end())
        throw std::domain_error("shadow_extend: unknown seed region " + seed_region);
    const FiniteQuandle& q = *c.quandle;
    std::map<std::string, int> colors;
    colors[seed_region] = seed_color;
    std::deque<std::string> queue{seed_region};
    while (!queue.empty()) {
        std::string r = queue.front();
        queue.pop_front();
        int rc = colors.at(r);
        for (const auto& e : d.edges) {
            int ec = c.edge_colors.at(e.name);
            // left = right * edge, in both directions
            auto propagate = [&](const std::string& to, int value) -> bool {
                auto [it, inserted] = colors.try_emplace(to, value);
                if (inserted) queue.push_back(to);
                return it->second == value;
            };
            if (e.right == r && !propagate(e.left, q.op(rc, ec))) return std::nullopt;
            if (e.left == r && !propagate(e.right, q.op_inv(rc, ec))) return std::nullopt;
        }
    }
    if (colors.size() != d.regions.size()) return std::nullopt;  // undetermined region
    ShadowColoring s{c, std::move(colors)};
    if (!check_shadow(s).ok()) return std::nullopt;
    return s;
}

Chain extract_chain(const Coloring& c) {
    if (!c.diagram->is_closed())
        throw std::domain_error("extract_chain: diagram has endpoints; shadow data required");
    Chain out(2);
    for (const auto& x : c.diagram->crossings) {
        int q1 = c.edge_colors.at(x.under_source());
        int q2 = c.edge_colors.at(x.over_in);
        out.add(Tuple{{q1, q2}}, x.sign);
    }
    return out;
}

Chain extract_chain(const ShadowColoring& s) {
    Chain out(3);
    for (const auto& x : s.base.diagram->crossings) {
        int q0 = s.region_colors.at(x.source_region);
        int q1 = s.base.edge_colors.at(x.under_source());
        int q2 = s.base.edge_colors.at(x.over_in);
        out.add(Tuple{{q0, q1, q2}}, x.sign);
    }
    return out;
}

Chain endpoint_chain(const ShadowColoring& s) {
    Chain out(2);
    for (const auto& ep : s.base.diagram->endpoints) {
        int a = s.base.edge_colors.at(ep.edge);
        out.add(Tuple{{a, a}}, ep.starts ? 1 : -1);
    }
    return out;
}

Chain extract_chain(const ShadowColoring0& s) {
    Chain out(2);
    for (const auto& c : s.diagram->circles) {
        const std::size_t k = c.vertices.size();
        for (std::size_t i = 0; i < k; ++i) {
            int v = s.vertex_colors.at(c.vertices[i]);
            if (c.signs[i] > 0)
                out.add(Tuple{{s.slot_colors.at(c.slots[i]), v}}, 1);
            else
                out.add(Tuple{{s.slot_colors.at(c.slots[(i + 1) % k]), v}}, -1);
        }
    }
    return out;
}

namespace {

enum Incidence { UnderIn, UnderOut, OverIn, OverOut };

/// Quadrants 0..3 around a crossing; 0 is the source quadrant (right of
/// both strands). Returns {right_quadrant, left_quadrant} for the edge end
/// meeting the given incidence.
std::pair<int, int> quadrants(int sign, Incidence inc) {
    if (sign > 0) {
        switch (inc) {
            case UnderIn: return {0, 2};
            case UnderOut: return {1, 3};
            case OverIn: return {2, 3};
            case OverOut: return {0, 1};
        }
    } else {
        switch (inc) {
            case UnderIn: return {2, 3};
            case UnderOut: return {0, 1};
            case OverIn: return {0, 2};
            case OverOut: return {1, 3};
        }
    }
    throw std::logic_error("unreachable");
}

}  // namespace

Realized realize_two_cycle(const FiniteQuandle& q, const Chain& c, Variant v) {
    if (v == Variant::D) throw std::domain_error("realize_two_cycle: variant must be R or Q");
    Chain rep = project(c, v);
    if (!rep.empty() && rep.degree() != 2)
        throw std::domain_error("realize_two_cycle: chain degree must be 2");
    if (!is_cycle(q, rep, v)) throw std::domain_error("realize_two_cycle: chain is not a cycle");

    struct Term {
        int sign, q1, q2;
    };
    std::vector<Term> terms;
    for (const auto& [t, coeff] : rep.terms()) {
        Int n = coeff > 0 ? coeff : -coeff;
        for (Int i = 0; i < n; ++i)
            terms.push_back({coeff > 0 ? 1 : -1, t.xs[0], t.xs[1]});
    }

    auto d = std::make_unique<Diagram1>();
    d->crossings.resize(terms.size());
    for (std::size_t j = 0; j < terms.size(); ++j) d->crossings[j].sign = terms[j].sign;

    std::map<std::string, int> edge_colors;
    int edge_counter = 0;
    auto new_edge = [&](int color) {
        std::string name = "e" + std::to_string(edge_counter++);
        edge_colors[name] = color;
        d->edges.push_back(Edge1{name, "", ""});
        return name;
    };

    // under strand: out slot of one crossing joins the in slot of another
    // with the same color (guaranteed to balance by the cycle condition)
    std::map<int, std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> under;
    std::map<int, std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> over;
    for (std::size_t j = 0; j < terms.size(); ++j) {
        int target = q.op(terms[j].q1, terms[j].q2);
        int out_color = terms[j].sign > 0 ? target : terms[j].q1;
        int in_color = terms[j].sign > 0 ? terms[j].q1 : target;
        under[out_color].first.push_back(j);
        under[in_color].second.push_back(j);
        over[terms[j].q2].first.push_back(j);
        over[terms[j].q2].second.push_back(j);
    }
    for (auto& [color, lists] : under) {
        auto& [outs, ins] = lists;
        if (outs.size() != ins.size())
            throw std::logic_error("realize_two_cycle: unbalanced under strands");
        for (std::size_t i = 0; i < outs.size(); ++i) {
            std::string e = new_edge(color);
            d->crossings[outs[i]].under_out = e;
            d->crossings[ins[i]].under_in = e;
        }
    }
    for (auto& [color, lists] : over) {
        auto& [outs, ins] = lists;
        for (std::size_t i = 0; i < outs.size(); ++i) {
            std::string e = new_edge(color);
            d->crossings[outs[i]].over_out = e;
            d->crossings[ins[i]].over_in = e;
        }
    }

    // regions: one node per crossing quadrant, merged along both edge sides
    UnionFind uf(4 * terms.size());
    auto incidences_of = [&](const std::string& edge) {
        std::vector<std::pair<std::size_t, Incidence>> found;
        for (std::size_t j = 0; j < d->crossings.size(); ++j) {
            const Crossing1& x = d->crossings[j];
            if (x.under_in == edge) found.push_back({j, UnderIn});
            if (x.under_out == edge) found.push_back({j, UnderOut});
            if (x.over_in == edge) found.push_back({j, OverIn});
            if (x.over_out == edge) found.push_back({j, OverOut});
        }
        return found;
    };
    for (const auto& e : d->edges) {
        auto inc = incidences_of(e.name);
        for (std::size_t i = 1; i < inc.size(); ++i) {
            auto [c0, k0] = inc[0];
            auto [c1, k1] = inc[i];
            auto [r0, l0] = quadrants(d->crossings[c0].sign, k0);
            auto [r1, l1] = quadrants(d->crossings[c1].sign, k1);
            uf.unite(4 * c0 + r0, 4 * c1 + r1);
            uf.unite(4 * c0 + l0, 4 * c1 + l1);
        }
    }
    std::map<std::size_t, std::string> region_name;
    auto region_of = [&](std::size_t node) -> std::string {
        std::size_t root = uf.find(node);
        auto [it, inserted] =
            region_name.try_emplace(root, "r" + std::to_string(region_name.size()));
        if (inserted) d->regions.push_back(it->second);
        return it->second;
    };
    for (std::size_t node = 0; node < 4 * terms.size(); ++node) region_of(node);
    for (auto& e : d->edges) {
        auto inc = incidences_of(e.name);
        auto [j, kind] = inc.front();
        auto [r, l] = quadrants(d->crossings[j].sign, kind);
        e.right = region_of(4 * j + r);
        e.left = region_of(4 * j + l);
    }
    for (std::size_t j = 0; j < d->crossings.size(); ++j)
        d->crossings[j].source_region = region_of(4 * j + 0);

    Realized out;
    out.diagram = std::move(d);
    out.quandle = std::make_unique<FiniteQuandle>(q);
    out.coloring = Coloring{out.diagram.get(), out.quandle.get(), std::move(edge_colors)};
    return out;
}

Presentation fundamental_presentation(const Diagram1& d) {
    if (!d.is_closed())
        throw std::domain_error("fundamental_presentation: diagram must be closed");
    Arcs arcs = compute_arcs(d);
    Presentation p;
    for (std::size_t i = 0; i < arcs.count; ++i)
        p.generators.push_back("x" + std::to_string(i + 1));
    for (std::size_t i = 0; i < d.edges.size(); ++i)
        p.arc_of_edge[d.edges[i].name] = arcs.arc_of_edge[i];
    for (const auto& x : d.crossings) {
        p.relations.push_back({arcs.arc_of_edge[d.edge_index(x.under_source())],
                               arcs.arc_of_edge[d.edge_index(x.over_in)],
                               arcs.arc_of_edge[d.edge_index(x.under_target())]});
    }
    return p;
}

std::string Presentation::str() const {
    std::ostringstream os;
    os << "<";
    for (std::size_t i = 0; i < generators.size(); ++i)
        os << (i ? ", " : "") << generators[i];
    os << " | ";
    for (std::size_t i = 0; i < relations.size(); ++i) {
        if (i) os << ", ";
        os << generators[relations[i].a] << "*" << generators[relations[i].b] << " = "
           << generators[relations[i].c];
    }
    os << ">";
    return os.str();
}

std::size_t count_homs(const Presentation& p, const FiniteQuandle& q) {
    std::vector<int> assign(p.generators.size(), 0);
    std::size_t count = 0;
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
        if (k == assign.size()) {
            ++count;
            return;
        }
        for (int v = 0; v < q.size(); ++v) {
            assign[k] = v;
            bool ok = true;
            for (const auto& r : p.relations) {
                if (std::max({r.a, r.b, r.c}) != k) continue;
                if (assign[r.c] != q.op(assign[r.a], assign[r.b])) {
                    ok = false;
                    break;
                }
            }
            if (ok) rec(k + 1);
        }
    };
    rec(0);
    return count;
}

// --- file formats ---

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::istringstream ls(line);
    std::vector<std::string> toks;
    std::string t;
    while (ls >> t) toks.push_back(t);
    return toks;
}

std::string strip_comment(const std::string& line) {
    auto pos = line.find('#');
    return pos == std::string::npos ? line : line.substr(0, pos);
}

}  // namespace

Diagram0 parse_diagram0(const std::string& text) {
    Diagram0 d;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        auto toks = tokenize(strip_comment(line));
        if (toks.empty()) continue;
        if (toks[0] != "circle:")
            throw std::invalid_argument("diagram0: expected 'circle:' line, got " + toks[0]);
        Circle0 c;
        for (std::size_t i = 1; i < toks.size(); ++i) {
            if (i % 2 == 1) {
                c.slots.push_back(toks[i]);
            } else {
                std::string v = toks[i];
                char flag = v.empty() ? '?' : v.back();
                if (flag != '+' && flag != '-')
                    throw std::invalid_argument("diagram0: vertex token needs +/- suffix: " + v);
                c.vertices.push_back(v.substr(0, v.size() - 1));
                c.signs.push_back(flag == '+' ? 1 : -1);
            }
        }
        if (c.slots.empty()) throw std::invalid_argument("diagram0: empty circle line");
        d.circles.push_back(std::move(c));
    }
    return d;
}

std::string format_diagram0(const Diagram0& d) {
    std::ostringstream os;
    for (const auto& c : d.circles) {
        os << "circle:";
        for (std::size_t i = 0; i < c.slots.size(); ++i) {
            os << " " << c.slots[i];
            if (i < c.vertices.size())
                os << " " << c.vertices[i] << (c.signs[i] > 0 ? "+" : "-");
        }
        os << "\n";
    }
    return os.str();
}

Diagram1 parse_diagram1(const std::string& text) {
    Diagram1 d;
    std::istringstream in(text);
    std::string line, section;
    while (std::getline(in, line)) {
        auto toks = tokenize(strip_comment(line));
        if (toks.empty()) continue;
        if (toks[0] == "regions:") {
            for (std::size_t i = 1; i < toks.size(); ++i) d.regions.push_back(toks[i]);
            section.clear();
            continue;
        }
        if (toks[0] == "edges:" || toks[0] == "crossings:" || toks[0] == "endpoints:") {
            section = toks[0];
            continue;
        }
        if (section == "edges:") {
            if (toks.size() != 3)
                throw std::invalid_argument("diagram1: edge line needs <name> <right> <left>");
            d.edges.push_back(Edge1{toks[0], toks[1], toks[2]});
        } else if (section == "crossings:") {
            if (toks.size() != 6)
                throw std::invalid_argument(
                    "diagram1: crossing line needs <sign> <over_in> <over_out> <under_in> "
                    "<under_out> <source_region>");
            Crossing1 x;
            if (toks[0] == "+" || toks[0] == "+1" || toks[0] == "1")
                x.sign = 1;
            else if (toks[0] == "-" || toks[0] == "-1")
                x.sign = -1;
            else
                throw std::invalid_argument("diagram1: bad crossing sign " + toks[0]);
            x.over_in = toks[1];
            x.over_out = toks[2];
            x.under_in = toks[3];
            x.under_out = toks[4];
            x.source_region = toks[5];
            d.crossings.push_back(std::move(x));
        } else if (section == "endpoints:") {
            if (toks.size() != 2 || (toks[1] != "starts" && toks[1] != "ends"))
                throw std::invalid_argument("diagram1: endpoint line needs <edge> starts|ends");
            d.endpoints.push_back(Endpoint1{toks[0], toks[1] == "starts"});
        } else {
            throw std::invalid_argument("diagram1: line outside any section: " + line);
        }
    }
    return d;
}

std::string format_diagram1(const Diagram1& d) {
    std::ostringstream os;
    os << "regions:";
    for (const auto& r : d.regions) os << " " << r;
    os << "\nedges:\n";
    for (const auto& e : d.edges) os << e.name << " " << e.right << " " << e.left << "\n";
    os << "crossings:\n";
    for (const auto& x : d.crossings)
        os << (x.sign > 0 ? "+1 " : "-1 ") << x.over_in << " " << x.over_out << " " << x.under_in
           << " " << x.under_out << " " << x.source_region << "\n";
    if (!d.endpoints.empty()) {
        os << "endpoints:\n";
        for (const auto& ep : d.endpoints)
            os << ep.edge << " " << (ep.starts ? "starts" : "ends") << "\n";
    }
    return os.str();
}

std::map<std::string, std::string> parse_assignments(const std::string& text) {
    std::map<std::string, std::string> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        auto toks = tokenize(strip_comment(line));
        if (toks.empty()) continue;
        if (toks.size() != 3 || toks[1] != "=")
            throw std::invalid_argument("coloring: expected '<id> = <element>': " + line);
        if (!out.emplace(toks[0], toks[2]).second)
            throw std::invalid_argument("coloring: duplicate assignment for " + toks[0]);
    }
    return out;
}

namespace {

int element_or_throw(const FiniteQuandle& q, const std::string& token) {
    auto e = q.element_of(token);
    if (!e) throw std::invalid_argument("coloring: unknown quandle element " + token);
    return *e;
}

}  // namespace

Coloring make_coloring(const Diagram1& d, const FiniteQuandle& q,
                       const std::map<std::string, std::string>& assignments) {
    Coloring c{&d, &q, {}};
    for (const auto& [id, value] : assignments) {
        if (d.edge_index(id) >= 0)
            c.edge_colors[id] = element_or_throw(q, value);
        else if (std::find(d.regions.begin(), d.regions.end(), id) == d.regions.end())
            throw std::invalid_argument("coloring: unknown identifier " + id);
    }
    for (const auto& e : d.edges)
        if (!c.edge_colors.count(e.name))
            throw std::invalid_argument("coloring: edge " + e.name + " unassigned");
    return c;
}

ShadowColoring make_shadow_coloring(const Diagram1& d, const FiniteQuandle& q,
                                    const std::map<std::string, std::string>& assignments) {
    ShadowColoring s{make_coloring(d, q, assignments), {}};
    for (const auto& [id, value] : assignments)
        if (std::find(d.regions.begin(), d.regions.end(), id) != d.regions.end())
            s.region_colors[id] = element_or_throw(q, value);
    for (const auto& r : d.regions)
        if (!s.region_colors.count(r))
            throw std::invalid_argument("coloring: region " + r + " unassigned");
    return s;
}

ShadowColoring0 make_shadow_coloring(const Diagram0& d, const FiniteQuandle& q,
                                     const std::map<std::string, std::string>& assignments) {
    ShadowColoring0 s{&d, &q, {}, {}};
    for (const auto& c : d.circles) {
        for (const auto& sl : c.slots) {
            auto it = assignments.find(sl);
            if (it == assignments.end())
                throw std::invalid_argument("coloring: slot " + sl + " unassigned");
            s.slot_colors[sl] = element_or_throw(q, it->second);
        }
        for (const auto& v : c.vertices) {
            auto it = assignments.find(v);
            if (it == assignments.end())
                throw std::invalid_argument("coloring: vertex " + v + " unassigned");
            s.vertex_colors[v] = element_or_throw(q, it->second);
        }
    }
    return s;
}

std::string format_coloring(const Coloring& c) {
    std::ostringstream os;
    for (const auto& [id, v] : c.edge_colors) os << id << " = " << c.quandle->label(v) << "\n";
    return os.str();
}

std::string format_coloring(const ShadowColoring& s) {
    std::ostringstream os;
    os << format_coloring(s.base);
    for (const auto& [id, v] : s.region_colors)
        os << id << " = " << s.base.quandle->label(v) << "\n";
    return os.str();
}

std::string format_coloring(const ShadowColoring0& s) {
    std::ostringstream os;
    for (const auto& [id, v] : s.slot_colors) os << id << " = " << s.quandle->label(v) << "\n";
    for (const auto& [id, v] : s.vertex_colors) os << id << " = " << s.quandle->label(v) << "\n";
    return os.str();
}

}  // namespace qh
