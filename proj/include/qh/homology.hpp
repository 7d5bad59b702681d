#ifndef QH_HOMOLOGY_HPP
#define QH_HOMOLOGY_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qh/chains.hpp"
#include "qh/intlin.hpp"
#include "qh/quandle.hpp"

namespace qh {

struct ClassCoordinates {
    std::vector<Int> free_part;
    std::vector<Int> torsion_part;  // entry i reduced mod torsion[i]

    bool is_zero() const;
};

/// H_n^v = ker d_n / im d_{n+1}, presented as Z^free_rank + sum Z_{d_i}
/// with explicit generator cycles (free generators first, torsion in
/// increasing d_i). Immutable once built.
class HomologyGroup {
public:
    HomologyGroup(const FiniteQuandle& q, Variant v, int degree);

    const FiniteQuandle& quandle() const { return *q_; }
    Variant variant() const { return variant_; }
    int degree() const { return degree_; }

    std::size_t free_rank() const { return free_rank_; }
    const std::vector<Int>& torsion() const { return torsion_; }
    const std::vector<Chain>& generators() const { return generators_; }
    bool is_trivial() const { return free_rank_ == 0 && torsion_.empty(); }

    /// "Z^r + Z_{d1} + ..." or "0".
    std::string str() const;

    /// Coordinates of a cycle relative to the stored generators.
    ClassCoordinates class_of(const Chain& c) const;

    /// Kernel-lattice coordinates of a cycle (length = kernel rank).
    /// Two cycles are homologous iff these differ by a relation column.
    std::vector<Int> kernel_coordinates(const Chain& c) const;
    /// The chain with given kernel-lattice coordinates.
    Chain chain_from_kernel_coordinates(const std::vector<Int>& y) const;
    std::size_t kernel_rank() const { return kernel_.cols(); }
    /// Relations on kernel coordinates (columns of d_{n+1} re-expressed).
    const IntMatrix& relations() const { return relations_; }

    /// Class coordinates of a kernel-coordinate vector.
    ClassCoordinates class_of_kernel_coordinates(const std::vector<Int>& y) const;

private:
    const FiniteQuandle* q_;
    Variant variant_;
    int degree_;
    std::size_t free_rank_ = 0;
    std::vector<Int> torsion_;
    std::vector<Chain> generators_;

    IntMatrix kernel_;        // dim C_n x k, lattice basis of ker d_n
    IntMatrix vinv_bottom_;   // k x dim C_n, kernel-coordinate extractor
    IntMatrix relations_;     // k x dim C_{n+1}
    SnfDecomposition pres_;   // SNF of relations_
    std::vector<std::size_t> free_idx_, torsion_idx_;  // presentation-basis rows

    friend std::optional<Chain> is_boundary(const FiniteQuandle&, const Chain&, Variant);
};

/// Shared cache keyed by (table hash, variant, degree); computed once.
const HomologyGroup& homology(const FiniteQuandle& q, Variant v, int degree);

bool is_cycle(const FiniteQuandle& q, const Chain& c, Variant v);

/// A witness w with project(boundary(w), v) == project(c, v), or nullopt.
/// Throws std::domain_error if c is not a cycle.
std::optional<Chain> is_boundary(const FiniteQuandle& q, const Chain& c, Variant v);

ClassCoordinates class_of(const FiniteQuandle& q, const Chain& c, Variant v);

struct InducedMap {
    const HomologyGroup* source;
    const HomologyGroup* target;
    /// Column j = class coordinates (free then torsion) of the image of
    /// source generator j.
    IntMatrix matrix;
    bool surjective = false;
    bool injective = false;
};

InducedMap induced_map(const QuandleHom& f, Variant v, int degree);

/// Connecting homomorphism H_n^Q -> H_{n-1}^D on generators; column j =
/// class coordinates of the image of Q-generator j.
struct ConnectingMap {
    const HomologyGroup* source;
    const HomologyGroup* target;
    IntMatrix matrix;
    bool is_zero = false;
};

ConnectingMap les_boundary_map(const FiniteQuandle& q, int degree);

struct GroupShape {
    std::size_t free_rank;
    std::vector<Int> torsion;
    std::string str() const;
};

struct LesReport {
    GroupShape hd_n, hr_n, hq_n, hd_nm1;
    bool exact_at_r = false;  // im(i*) == ker(j*)
    bool exact_at_q = false;  // im(j*) == ker(d*)
    bool exact() const { return exact_at_r && exact_at_q; }
};

/// Verifies exactness of H_n^D -> H_n^R -> H_n^Q -> H_{n-1}^D at the two
/// middle spots by comparing subgroup lattices.
LesReport les_check(const FiniteQuandle& q, int degree);

}  // namespace qh

#endif
