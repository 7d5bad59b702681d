#ifndef QH_QUANDLE_HPP
#define QH_QUANDLE_HPP

#include <optional>
#include <string>
#include <vector>

namespace qh {

enum class AxiomMode { Quandle, Rack };

struct AxiomViolation {
    enum class Kind { Idempotency, RightInvertibility, SelfDistributivity, OutOfRange };
    Kind kind;
    int a = -1, b = -1, c = -1;  // witness elements (unused slots stay -1)
    std::string describe() const;
};

struct ValidationReport {
    std::vector<AxiomViolation> violations;
    bool malformed = false;  // out-of-range entry; distinct from axiom failure
    bool ok() const { return violations.empty() && !malformed; }
};

ValidationReport verify_axioms(const std::vector<std::vector<int>>& table, AxiomMode mode);

/// Finite quandle on {0,..,n-1} given by its operation table.
/// Immutable after construction; all operations on it are pure.
class FiniteQuandle {
public:
    /// Throws std::invalid_argument unless the table passes verify_axioms.
    explicit FiniteQuandle(std::vector<std::vector<int>> table,
                           std::vector<std::string> labels = {},
                           AxiomMode mode = AxiomMode::Quandle);

    int size() const { return static_cast<int>(table_.size()); }
    /// a * b
    int op(int a, int b) const { return table_[a][b]; }
    /// the unique c with c * b = a (Axiom II)
    int op_inv(int a, int b) const { return inv_[a][b]; }

    /// False when constructed in rack mode with a genuinely non-idempotent table.
    bool is_quandle() const { return quandle_; }

    const std::vector<std::vector<int>>& table() const { return table_; }
    const std::vector<std::string>& labels() const { return labels_; }
    std::string label(int a) const;
    /// Parses a label or a decimal element index; nullopt if unknown.
    std::optional<int> element_of(const std::string& token) const;

    bool operator==(const FiniteQuandle& o) const { return table_ == o.table_; }

    /// Stable hash of the operation table (labels excluded).
    std::size_t table_hash() const;

private:
    std::vector<std::vector<int>> table_;
    std::vector<std::vector<int>> inv_;
    std::vector<std::string> labels_;
    bool quandle_ = true;
};

// --- constructors for the example families ---

/// i * j = 2j - i mod n
FiniteQuandle dihedral(int n);
/// x * y = x
FiniteQuandle trivial_quandle(int n);

/// h(T) over Z_n, coefficients listed from min_degree upward, first and last nonzero.
struct LaurentPolynomial {
    int modulus;
    int min_degree;
    std::vector<int> coefficients;

    LaurentPolynomial(int modulus, int min_degree, std::vector<int> coefficients);
    int degree_span() const { return static_cast<int>(coefficients.size()) - 1; }
    static LaurentPolynomial parse(int modulus, const std::string& text);
    std::string str() const;
};

/// Z_n[T,T^-1]/(h): finite iff the extreme coefficients are units mod n.
/// Elements are coefficient vectors in lexicographic order.
FiniteQuandle alexander(const LaurentPolynomial& h);

/// Closure of the given permutations (one-line notation) under mutual
/// conjugation a*b = b^-1 a b, elements sorted lexicographically.
FiniteQuandle conjugation(const std::vector<std::vector<int>>& generators);

// --- homomorphisms ---

struct HomReport {
    bool ok = false;
    std::vector<std::pair<int, int>> witness_pairs;  // (a,b) with f(a*b) != f(a)*f(b)
};

HomReport check_hom(const std::vector<int>& map, const FiniteQuandle& source,
                    const FiniteQuandle& target);

struct QuandleHom {
    const FiniteQuandle* source;
    const FiniteQuandle* target;
    std::vector<int> map;

    QuandleHom(const FiniteQuandle& src, const FiniteQuandle& tgt, std::vector<int> m);
    int operator()(int a) const { return map[a]; }
};

// --- inner automorphisms and orbits ---

/// S(b): a -> a*b as a permutation in one-line notation.
std::vector<int> inner_symmetry(const FiniteQuandle& q, int b);
/// a S(b1)^e1 ... S(bk)^ek applied left to right.
int act_word(const FiniteQuandle& q, int a, const std::vector<std::pair<int, int>>& word);
/// Orbits of the inner automorphism group, smallest representative first.
std::vector<std::vector<int>> orbits(const FiniteQuandle& q);

// --- file format ---

FiniteQuandle parse_quandle(const std::string& text);
std::string format_quandle(const FiniteQuandle& q);

}  // namespace qh

#endif
