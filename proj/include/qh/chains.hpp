#ifndef QH_CHAINS_HPP
#define QH_CHAINS_HPP

#include <map>
#include <string>
#include <vector>

#include "qh/intlin.hpp"
#include "qh/quandle.hpp"

namespace qh {

/// (x1,..,xn) of quandle elements, n >= 1.
struct Tuple {
    std::vector<int> xs;

    int degree() const { return static_cast<int>(xs.size()); }
    auto operator<=>(const Tuple&) const = default;
    std::string str(const FiniteQuandle& q) const;
};

/// Some adjacent pair equal (degree-1 tuples are never degenerate).
bool is_degenerate(const Tuple& t);

enum class Variant { R, D, Q };

Variant parse_variant(const std::string& s);
std::string variant_name(Variant v);

/// Integer-weighted formal sum of same-degree tuples; zero coefficients
/// are never stored and terms are kept in lexicographic order.
class Chain {
public:
    Chain() : degree_(0) {}
    explicit Chain(int degree) : degree_(degree) {}

    int degree() const { return degree_; }
    bool empty() const { return terms_.empty(); }
    const std::map<Tuple, Int>& terms() const { return terms_; }

    void add(const Tuple& t, const Int& coeff);
    Int coefficient(const Tuple& t) const;

    Chain operator+(const Chain& o) const;
    Chain operator-(const Chain& o) const;
    Chain operator*(const Int& k) const;
    Chain operator-() const { return *this * Int(-1); }
    bool operator==(const Chain& o) const { return degree_ == o.degree_ && terms_ == o.terms_; }

    std::string str(const FiniteQuandle& q) const;

private:
    int degree_;
    std::map<Tuple, Int> terms_;
};

/// Boundary homomorphism; the empty chain for degree <= 1.
Chain boundary(const FiniteQuandle& q, const Chain& c);
Chain boundary_tuple(const FiniteQuandle& q, const Tuple& t);

/// R: identity. Q: drop degenerate terms. D: identity, but throws
/// std::domain_error if the chain has nondegenerate support.
Chain project(const Chain& c, Variant v);

/// Ordered tuple basis of C_n in the given variant (lexicographic).
std::vector<Tuple> basis(const FiniteQuandle& q, Variant v, int n);
std::size_t basis_size(const FiniteQuandle& q, Variant v, int n);

/// Columns = boundaries of degree-n basis tuples in variant coordinates;
/// rows indexed by basis(q, v, n-1) (zero rows for n == 1).
IntMatrix boundary_matrix(const FiniteQuandle& q, Variant v, int n);

/// Coordinates of c with respect to basis(q, v, c.degree()); throws if a
/// term lies outside the variant's basis.
std::vector<Int> coordinates(const FiniteQuandle& q, const Chain& c, Variant v);
Chain from_coordinates(const FiniteQuandle& q, Variant v, int n, const std::vector<Int>& x);

// Chain file format: one term per line, "<coeff> <x1> ... <xk>".
Chain parse_chain(const std::string& text);
Chain parse_chain(const std::string& text, const FiniteQuandle& q);
std::string format_chain(const Chain& c);

}  // namespace qh

#endif
