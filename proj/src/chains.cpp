#include "qh/chains.hpp"

#include <sstream>
#include <stdexcept>

namespace qh {

std::string Tuple::str(const FiniteQuandle& q) const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) os << ",";
        os << q.label(xs[i]);
    }
    os << ")";
    return os.str();
}

bool is_degenerate(const Tuple& t) {
    for (std::size_t i = 0; i + 1 < t.xs.size(); ++i)
        if (t.xs[i] == t.xs[i + 1]) return true;
    return false;
}

Variant parse_variant(const std::string& s) {
    if (s == "R" || s == "r" || s == "rack") return Variant::R;
    if (s == "D" || s == "d" || s == "degenerate") return Variant::D;
    if (s == "Q" || s == "q" || s == "quandle") return Variant::Q;
    throw std::invalid_argument("unknown variant: " + s);
}

std::string variant_name(Variant v) {
    switch (v) {
        case Variant::R: return "R";
        case Variant::D: return "D";
        case Variant::Q: return "Q";
    }
    return "?";
}

void Chain::add(const Tuple& t, const Int& coeff) {
    if (coeff == 0) return;
    if (terms_.empty() && degree_ == 0) degree_ = t.degree();
    if (t.degree() != degree_)
        throw std::invalid_argument("Chain::add: mixed tuple degrees");
    auto it = terms_.find(t);
    if (it == terms_.end()) {
        terms_.emplace(t, coeff);
    } else {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

Int Chain::coefficient(const Tuple& t) const {
    auto it = terms_.find(t);
    return it == terms_.end() ? Int(0) : it->second;
}

Chain Chain::operator+(const Chain& o) const {
    Chain r = *this;
    if (r.terms_.empty()) r.degree_ = o.degree_;
    for (const auto& [t, c] : o.terms_) r.add(t, c);
    return r;
}

Chain Chain::operator-(const Chain& o) const {
    Chain r = *this;
    if (r.terms_.empty()) r.degree_ = o.degree_;
    for (const auto& [t, c] : o.terms_) r.add(t, -c);
    return r;
}

Chain Chain::operator*(const Int& k) const {
    Chain r(degree_);
    if (k == 0) return r;
    for (const auto& [t, c] : terms_) r.terms_.emplace(t, c * k);
    return r;
}

std::string Chain::str(const FiniteQuandle& q) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [t, c] : terms_) {
        if (c > 0 && !first) os << "+";
        if (c == -1)
            os << "-";
        else if (c != 1)
            os << c << "*";
        os << t.str(q);
        first = false;
    }
    return os.str();
}

Chain boundary_tuple(const FiniteQuandle& q, const Tuple& t) {
    const int n = t.degree();
    Chain out(n - 1);
    if (n <= 1) return Chain(0);
    for (int i = 2; i <= n; ++i) {
        Int sign = (i % 2 == 0) ? 1 : -1;
        Tuple omit, acted;
        omit.xs.reserve(n - 1);
        acted.xs.reserve(n - 1);
        for (int k = 1; k <= n; ++k) {
            if (k == i) continue;
            omit.xs.push_back(t.xs[k - 1]);
            acted.xs.push_back(k < i ? q.op(t.xs[k - 1], t.xs[i - 1]) : t.xs[k - 1]);
        }
        out.add(omit, sign);
        out.add(acted, -sign);
    }
    return out;
}

Chain boundary(const FiniteQuandle& q, const Chain& c) {
    if (c.degree() <= 1) return Chain(0);
    Chain out(c.degree() - 1);
    for (const auto& [t, coeff] : c.terms()) {
        Chain bt = boundary_tuple(q, t);
        out = out + bt * coeff;
    }
    return out;
}

Chain project(const Chain& c, Variant v) {
    switch (v) {
        case Variant::R:
            return c;
        case Variant::Q: {
            Chain out(c.degree());
            for (const auto& [t, coeff] : c.terms())
                if (!is_degenerate(t)) out.add(t, coeff);
            return out;
        }
        case Variant::D:
            for (const auto& [t, coeff] : c.terms())
                if (!is_degenerate(t))
                    throw std::domain_error(
                        "project: chain has nondegenerate support, not in C^D");
            return c;
    }
    throw std::logic_error("unreachable");
}

std::vector<Tuple> basis(const FiniteQuandle& q, Variant v, int n) {
    if (n <= 0) throw std::domain_error("basis: degree must be >= 1");
    std::vector<Tuple> out;
    Tuple t;
    t.xs.assign(n, 0);
    // odometer over all tuples in lexicographic order
    for (;;) {
        bool deg = is_degenerate(t);
        if (v == Variant::R || (v == Variant::D && deg) || (v == Variant::Q && !deg))
            out.push_back(t);
        int k = n - 1;
        while (k >= 0 && t.xs[k] == q.size() - 1) t.xs[k--] = 0;
        if (k < 0) break;
        ++t.xs[k];
    }
    return out;
}

std::size_t basis_size(const FiniteQuandle& q, Variant v, int n) {
    if (n <= 0) throw std::domain_error("basis_size: degree must be >= 1");
    const std::size_t m = static_cast<std::size_t>(q.size());
    std::size_t all = 1;
    for (int k = 0; k < n; ++k) all *= m;
    // nondegenerate tuples: m * (m-1)^(n-1)
    std::size_t nondeg = m;
    for (int k = 1; k < n; ++k) nondeg *= m - 1;
    switch (v) {
        case Variant::R: return all;
        case Variant::Q: return nondeg;
        case Variant::D: return n == 1 ? 0 : all - nondeg;
    }
    throw std::logic_error("unreachable");
}

std::vector<Int> coordinates(const FiniteQuandle& q, const Chain& c, Variant v) {
    auto b = basis(q, v, c.degree());
    std::map<Tuple, std::size_t> index;
    for (std::size_t i = 0; i < b.size(); ++i) index.emplace(b[i], i);
    std::vector<Int> x(b.size());
    for (const auto& [t, coeff] : c.terms()) {
        auto it = index.find(t);
        if (it == index.end())
            throw std::domain_error("coordinates: tuple outside the variant basis");
        x[it->second] = coeff;
    }
    return x;
}

Chain from_coordinates(const FiniteQuandle& q, Variant v, int n, const std::vector<Int>& x) {
    auto b = basis(q, v, n);
    if (x.size() != b.size()) throw std::invalid_argument("from_coordinates: size mismatch");
    Chain c(n);
    for (std::size_t i = 0; i < b.size(); ++i) c.add(b[i], x[i]);
    return c;
}

IntMatrix boundary_matrix(const FiniteQuandle& q, Variant v, int n) {
    if (n <= 0) throw std::domain_error("boundary_matrix: degree must be >= 1");
    if (v != Variant::R && !q.is_quandle())
        throw std::domain_error("boundary_matrix: variants D and Q need a quandle, not a rack");
    auto cols_basis = basis(q, v, n);
    if (n == 1) return IntMatrix(0, cols_basis.size());
    auto rows_basis = basis(q, v, n - 1);
    std::map<Tuple, std::size_t> row_index;
    for (std::size_t i = 0; i < rows_basis.size(); ++i) row_index.emplace(rows_basis[i], i);
    IntMatrix m(rows_basis.size(), cols_basis.size());
    for (std::size_t j = 0; j < cols_basis.size(); ++j) {
        Chain b = boundary_tuple(q, cols_basis[j]);
        for (const auto& [t, coeff] : b.terms()) {
            if (v == Variant::Q && is_degenerate(t)) continue;  // induced map drops C^D
            auto it = row_index.find(t);
            if (it == row_index.end())
                throw std::logic_error("boundary_matrix: boundary left the subcomplex");
            m.at(it->second, j) = coeff;
        }
    }
    return m;
}

Chain parse_chain(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    Chain c;
    bool have = false;
    int degree = 0;
    while (std::getline(in, line)) {
        auto pos = line.find('#');
        if (pos != std::string::npos) line = line.substr(0, pos);
        std::istringstream ls(line);
        std::string coeff_tok;
        if (!(ls >> coeff_tok)) continue;
        if (!coeff_tok.empty() && coeff_tok.front() == '+') coeff_tok.erase(0, 1);
        Int coeff(coeff_tok);
        Tuple t;
        int x;
        while (ls >> x) t.xs.push_back(x);
        if (t.xs.empty()) throw std::invalid_argument("chain file: term with no tuple entries");
        if (!have) {
            degree = t.degree();
            c = Chain(degree);
            have = true;
        } else if (t.degree() != degree) {
            throw std::invalid_argument("chain file: inconsistent tuple widths");
        }
        c.add(t, coeff);
    }
    return c;
}

Chain parse_chain(const std::string& text, const FiniteQuandle& q) {
    std::istringstream in(text);
    std::string line;
    Chain c;
    bool have = false;
    int degree = 0;
    while (std::getline(in, line)) {
        auto pos = line.find('#');
        if (pos != std::string::npos) line = line.substr(0, pos);
        std::istringstream ls(line);
        std::string coeff_tok;
        if (!(ls >> coeff_tok)) continue;
        if (!coeff_tok.empty() && coeff_tok.front() == '+') coeff_tok.erase(0, 1);
        Int coeff(coeff_tok);
        Tuple t;
        std::string tok;
        while (ls >> tok) {
            auto e = q.element_of(tok);
            if (!e) throw std::invalid_argument("chain file: unknown element '" + tok + "'");
            t.xs.push_back(*e);
        }
        if (t.xs.empty()) throw std::invalid_argument("chain file: term with no tuple entries");
        if (!have) {
            degree = t.degree();
            c = Chain(degree);
            have = true;
        } else if (t.degree() != degree) {
            throw std::invalid_argument("chain file: inconsistent tuple widths");
        }
        c.add(t, coeff);
    }
    return c;
}

std::string format_chain(const Chain& c) {
    std::ostringstream os;
    for (const auto& [t, coeff] : c.terms()) {
        os << coeff;
        for (int x : t.xs) os << " " << x;
        os << "\n";
    }
    return os.str();
}

}  // namespace qh
