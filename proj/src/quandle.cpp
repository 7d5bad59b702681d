#include "qh/quandle.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace qh {

std::string AxiomViolation::describe() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::Idempotency:
            os << "idempotency fails at a=" << a;
            break;
        case Kind::RightInvertibility:
            os << "right-invertibility fails at column b=" << b;
            break;
        case Kind::SelfDistributivity:
            os << "self-distributivity fails at (a,b,c)=(" << a << "," << b << "," << c << ")";
            break;
        case Kind::OutOfRange:
            os << "table entry out of range at (a,b)=(" << a << "," << b << ")";
            break;
    }
    return os.str();
}

ValidationReport verify_axioms(const std::vector<std::vector<int>>& table, AxiomMode mode) {
    ValidationReport rep;
    const int n = static_cast<int>(table.size());
    for (int a = 0; a < n; ++a) {
        if (static_cast<int>(table[a].size()) != n) {
            rep.malformed = true;
            rep.violations.push_back({AxiomViolation::Kind::OutOfRange, a, -1, -1});
            return rep;
        }
        for (int b = 0; b < n; ++b)
            if (table[a][b] < 0 || table[a][b] >= n) {
                rep.malformed = true;
                rep.violations.push_back({AxiomViolation::Kind::OutOfRange, a, b, -1});
                return rep;
            }
    }
    if (mode == AxiomMode::Quandle)
        for (int a = 0; a < n; ++a)
            if (table[a][a] != a)
                rep.violations.push_back({AxiomViolation::Kind::Idempotency, a, -1, -1});
    for (int b = 0; b < n; ++b) {
        std::vector<bool> hit(n, false);
        for (int a = 0; a < n; ++a) hit[table[a][b]] = true;
        if (std::find(hit.begin(), hit.end(), false) != hit.end())
            rep.violations.push_back({AxiomViolation::Kind::RightInvertibility, -1, b, -1});
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (table[table[a][b]][c] != table[table[a][c]][table[b][c]])
                    rep.violations.push_back({AxiomViolation::Kind::SelfDistributivity, a, b, c});
    return rep;
}

FiniteQuandle::FiniteQuandle(std::vector<std::vector<int>> table, std::vector<std::string> labels,
                             AxiomMode mode)
    : table_(std::move(table)), labels_(std::move(labels)) {
    auto rep = verify_axioms(table_, mode);
    if (!rep.ok()) {
        std::string msg = "invalid operation table";
        if (!rep.violations.empty()) msg += ": " + rep.violations.front().describe();
        throw std::invalid_argument(msg);
    }
    if (!labels_.empty() && labels_.size() != table_.size())
        throw std::invalid_argument("label count does not match quandle size");
    const int n = size();
    quandle_ = true;
    for (int a = 0; a < n; ++a)
        if (table_[a][a] != a) quandle_ = false;
    inv_.assign(n, std::vector<int>(n, -1));
    for (int c = 0; c < n; ++c)
        for (int b = 0; b < n; ++b) inv_[table_[c][b]][b] = c;
}

std::string FiniteQuandle::label(int a) const {
    if (!labels_.empty()) return labels_[a];
    return std::to_string(a);
}

std::optional<int> FiniteQuandle::element_of(const std::string& token) const {
    for (int i = 0; i < static_cast<int>(labels_.size()); ++i)
        if (labels_[i] == token) return i;
    try {
        size_t pos = 0;
        int v = std::stoi(token, &pos);
        if (pos == token.size() && v >= 0 && v < size()) return v;
    } catch (...) {
    }
    return std::nullopt;
}

std::size_t FiniteQuandle::table_hash() const {
    std::size_t h = table_.size();
    for (const auto& row : table_)
        for (int x : row) h = h * 1000003u + static_cast<std::size_t>(x) + 0x9e3779b9u;
    return h;
}

FiniteQuandle dihedral(int n) {
    if (n <= 0) throw std::domain_error("dihedral: n must be positive");
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) t[i][j] = ((2 * j - i) % n + n) % n;
    std::vector<std::string> labels;
    if (n == 3) labels = {"α", "β", "γ"};
    return FiniteQuandle(std::move(t), std::move(labels));
}

FiniteQuandle trivial_quandle(int n) {
    if (n <= 0) throw std::domain_error("trivial: n must be positive");
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) t[i][j] = i;
    return FiniteQuandle(std::move(t));
}

LaurentPolynomial::LaurentPolynomial(int mod, int min_deg, std::vector<int> coeffs)
    : modulus(mod), min_degree(min_deg), coefficients(std::move(coeffs)) {
    if (modulus <= 0) throw std::invalid_argument("LaurentPolynomial: modulus must be positive");
    for (auto& c : coefficients) c = ((c % modulus) + modulus) % modulus;
    while (!coefficients.empty() && coefficients.back() == 0) coefficients.pop_back();
    while (!coefficients.empty() && coefficients.front() == 0) {
        coefficients.erase(coefficients.begin());
        ++min_degree;
    }
    if (coefficients.empty())
        throw std::invalid_argument("LaurentPolynomial: zero polynomial");
}

LaurentPolynomial LaurentPolynomial::parse(int modulus, const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw std::invalid_argument("empty polynomial");

    std::map<int, int> coeff;  // degree -> coefficient
    std::size_t i = 0;
    int sign = 1;
    while (i < s.size()) {
        if (s[i] == '+') { sign = 1; ++i; continue; }
        if (s[i] == '-') { sign = -1; ++i; continue; }
        // term: [number][T[^[-]number]]
        int coef = 1;
        bool have_num = false;
        std::size_t j = i;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        if (j > i) {
            coef = std::stoi(s.substr(i, j - i));
            have_num = true;
            i = j;
        }
        int deg = 0;
        if (i < s.size() && (s[i] == 'T' || s[i] == 't')) {
            deg = 1;
            ++i;
            if (i < s.size() && s[i] == '^') {
                ++i;
                std::size_t k = i;
                if (k < s.size() && s[k] == '-') ++k;
                while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
                if (k == i) throw std::invalid_argument("bad exponent in polynomial: " + text);
                deg = std::stoi(s.substr(i, k - i));
                i = k;
            }
        } else if (!have_num) {
            throw std::invalid_argument("bad term in polynomial: " + text);
        }
        coeff[deg] += sign * coef;
        sign = 1;
    }
    int min_deg = coeff.begin()->first;
    int max_deg = coeff.rbegin()->first;
    std::vector<int> cs(max_deg - min_deg + 1, 0);
    for (auto [d, c] : coeff) cs[d - min_deg] = c;
    return LaurentPolynomial(modulus, min_deg, std::move(cs));
}

std::string LaurentPolynomial::str() const {
    std::ostringstream os;
    bool first = true;
    for (int k = static_cast<int>(coefficients.size()) - 1; k >= 0; --k) {
        int c = coefficients[k];
        if (c == 0) continue;
        int d = min_degree + k;
        if (!first) os << "+";
        if (c != 1 || d == 0) os << c;
        if (d != 0) {
            os << "T";
            if (d != 1) os << "^" << d;
        }
        first = false;
    }
    return os.str();
}

namespace {

std::optional<int> unit_inverse(int a, int n) {
    a = ((a % n) + n) % n;
    for (int x = 0; x < n; ++x)
        if ((a * x) % n == 1 % n) return x;
    return std::nullopt;
}

}  // namespace

FiniteQuandle alexander(const LaurentPolynomial& h) {
    const int n = h.modulus;
    auto lead_inv = unit_inverse(h.coefficients.back(), n);
    auto trail_inv = unit_inverse(h.coefficients.front(), n);
    if (!lead_inv || !trail_inv)
        throw std::domain_error(
            "alexander: extreme coefficients of h must be units mod n (quandle is infinite)");

    // monic normalization g of degree d; T acts by the companion matrix of g
    const int d = h.degree_span();
    std::vector<int> g(d + 1);
    for (int k = 0; k <= d; ++k) g[k] = (h.coefficients[k] * *lead_inv) % n;

    auto apply_t = [&](const std::vector<int>& a) {
        std::vector<int> r(d, 0);
        if (d == 0) return r;
        int top = a[d - 1];
        r[0] = ((-g[0] * top) % n + n) % n;
        for (int k = 1; k < d; ++k) r[k] = ((a[k - 1] - g[k] * top) % n + n) % n;
        return r;
    };

    // elements: coefficient vectors (v_0 most significant) in lexicographic order
    long long count = 1;
    for (int k = 0; k < d; ++k) count *= n;
    auto unrank = [&](long long e) {
        std::vector<int> v(d);
        for (int k = d - 1; k >= 0; --k) {
            v[k] = static_cast<int>(e % n);
            e /= n;
        }
        return v;
    };
    auto rank = [&](const std::vector<int>& v) {
        long long e = 0;
        for (int k = 0; k < d; ++k) e = e * n + v[k];
        return e;
    };

    std::vector<std::vector<int>> table(count, std::vector<int>(count));
    for (long long ia = 0; ia < count; ++ia) {
        auto a = unrank(ia);
        for (long long ib = 0; ib < count; ++ib) {
            auto b = unrank(ib);
            // a*b = T(a-b) + b
            std::vector<int> diff(d);
            for (int k = 0; k < d; ++k) diff[k] = ((a[k] - b[k]) % n + n) % n;
            auto td = apply_t(diff);
            std::vector<int> r(d);
            for (int k = 0; k < d; ++k) r[k] = (td[k] + b[k]) % n;
            table[ia][ib] = static_cast<int>(rank(r));
        }
    }
    return FiniteQuandle(std::move(table));
}

FiniteQuandle conjugation(const std::vector<std::vector<int>>& generators) {
    if (generators.empty()) throw std::domain_error("conjugation: no generators");
    const std::size_t deg = generators.front().size();
    auto check = [&](const std::vector<int>& p) {
        if (p.size() != deg) throw std::domain_error("conjugation: permutation degree mismatch");
        std::vector<bool> seen(deg, false);
        for (int x : p) {
            if (x < 0 || static_cast<std::size_t>(x) >= deg || seen[x])
                throw std::domain_error("conjugation: malformed permutation");
            seen[x] = true;
        }
    };
    for (const auto& p : generators) check(p);

    auto conj = [&](const std::vector<int>& a, const std::vector<int>& b) {
        // b^-1 a b as functions: (b^-1 a b)(x) = b^-1(a(b(x)))
        std::vector<int> binv(deg);
        for (std::size_t x = 0; x < deg; ++x) binv[b[x]] = static_cast<int>(x);
        std::vector<int> r(deg);
        for (std::size_t x = 0; x < deg; ++x) r[x] = binv[a[b[x]]];
        return r;
    };

    std::set<std::vector<int>> closure(generators.begin(), generators.end());
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::vector<int>> cur(closure.begin(), closure.end());
        for (const auto& a : cur)
            for (const auto& b : cur)
                if (closure.insert(conj(a, b)).second) grew = true;
    }

    std::vector<std::vector<int>> elems(closure.begin(), closure.end());  // lexicographic
    auto index_of = [&](const std::vector<int>& p) {
        return static_cast<int>(std::lower_bound(elems.begin(), elems.end(), p) - elems.begin());
    };
    const int m = static_cast<int>(elems.size());
    std::vector<std::vector<int>> table(m, std::vector<int>(m));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) table[i][j] = index_of(conj(elems[i], elems[j]));
    return FiniteQuandle(std::move(table));
}

HomReport check_hom(const std::vector<int>& map, const FiniteQuandle& source,
                    const FiniteQuandle& target) {
    if (static_cast<int>(map.size()) != source.size())
        throw std::domain_error("check_hom: map length does not match source size");
    for (int v : map)
        if (v < 0 || v >= target.size())
            throw std::domain_error("check_hom: map entry out of range");
    HomReport rep;
    for (int a = 0; a < source.size(); ++a)
        for (int b = 0; b < source.size(); ++b)
            if (map[source.op(a, b)] != target.op(map[a], map[b]))
                rep.witness_pairs.emplace_back(a, b);
    rep.ok = rep.witness_pairs.empty();
    return rep;
}

QuandleHom::QuandleHom(const FiniteQuandle& src, const FiniteQuandle& tgt, std::vector<int> m)
    : source(&src), target(&tgt), map(std::move(m)) {
    auto rep = check_hom(map, src, tgt);
    if (!rep.ok) throw std::domain_error("QuandleHom: map is not a homomorphism");
}

std::vector<int> inner_symmetry(const FiniteQuandle& q, int b) {
    if (b < 0 || b >= q.size()) throw std::domain_error("inner_symmetry: element out of range");
    std::vector<int> p(q.size());
    for (int a = 0; a < q.size(); ++a) p[a] = q.op(a, b);
    return p;
}

int act_word(const FiniteQuandle& q, int a, const std::vector<std::pair<int, int>>& word) {
    if (a < 0 || a >= q.size()) throw std::domain_error("act_word: element out of range");
    for (auto [b, eps] : word) {
        if (b < 0 || b >= q.size()) throw std::domain_error("act_word: element out of range");
        if (eps >= 0)
            a = q.op(a, b);
        else
            a = q.op_inv(a, b);
    }
    return a;
}

std::vector<std::vector<int>> orbits(const FiniteQuandle& q) {
    const int n = q.size();
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            int ra = find(a), rb = find(q.op(a, b));
            if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
        }
    std::map<int, std::vector<int>> groups;
    for (int a = 0; a < n; ++a) groups[find(a)].push_back(a);
    std::vector<std::vector<int>> out;
    for (auto& [root, members] : groups) out.push_back(std::move(members));
    return out;
}

FiniteQuandle parse_quandle(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<std::string> lines;
    while (std::getline(in, line)) {
        auto pos = line.find('#');
        if (pos != std::string::npos) line = line.substr(0, pos);
        bool blank = line.find_first_not_of(" \t\r") == std::string::npos;
        if (!blank) lines.push_back(line);
    }
    if (lines.empty()) throw std::invalid_argument("quandle file: empty");
    std::istringstream first(lines[0]);
    int n;
    if (!(first >> n) || n <= 0) throw std::invalid_argument("quandle file: bad size line");
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
    for (std::size_t k = n + 1; k < lines.size(); ++k) {
        std::istringstream ls(lines[k]);
        std::string head;
        ls >> head;
        if (head == "labels:") {
            std::string tok;
            while (ls >> tok) labels.push_back(tok);
        } else {
            throw std::invalid_argument("quandle file: unexpected line: " + lines[k]);
        }
    }
    return FiniteQuandle(std::move(table), std::move(labels));
}

std::string format_quandle(const FiniteQuandle& q) {
    std::ostringstream os;
    os << q.size() << "\n";
    for (int a = 0; a < q.size(); ++a) {
        for (int b = 0; b < q.size(); ++b) {
            if (b) os << " ";
            os << q.op(a, b);
        }
        os << "\n";
    }
    if (!q.labels().empty()) {
        os << "labels:";
        for (const auto& l : q.labels()) os << " " << l;
        os << "\n";
    }
    return os.str();
}

}  // namespace qh
