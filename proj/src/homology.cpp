#include "qh/homology.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace qh {

bool ClassCoordinates::is_zero() const {
    for (const auto& x : free_part)
        if (x != 0) return false;
    for (const auto& x : torsion_part)
        if (x != 0) return false;
    return true;
}

HomologyGroup::HomologyGroup(const FiniteQuandle& q, Variant v, int degree)
    : q_(&q), variant_(v), degree_(degree) {
    if (degree < 1) throw std::domain_error("homology: degree must be >= 1");
    if (v != Variant::R && !q.is_quandle())
        throw std::domain_error("homology: variants D and Q need a quandle");

    IntMatrix dn = boundary_matrix(q, v, degree);
    IntMatrix dnp1 = boundary_matrix(q, v, degree + 1);

    SnfDecomposition snf_n = smith_normal_form(dn);
    kernel_ = kernel_basis(snf_n);
    const std::size_t k = kernel_.cols();
    const std::size_t dim = dn.cols();

    vinv_bottom_ = IntMatrix(k, dim);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < dim; ++j)
            vinv_bottom_.at(i, j) = snf_n.v_inv.at(snf_n.rank + i, j);

    // boundaries of degree n+1, written in kernel coordinates
    relations_ = vinv_bottom_.mul(dnp1);
    pres_ = smith_normal_form(relations_);

    free_rank_ = k - pres_.rank;
    for (std::size_t i = 0; i < pres_.rank; ++i) {
        if (pres_.s.at(i, i) > 1) {
            torsion_.push_back(pres_.s.at(i, i));
            torsion_idx_.push_back(i);
        }
    }
    for (std::size_t i = pres_.rank; i < k; ++i) free_idx_.push_back(i);

    auto basis_n = basis(q, v, degree);
    auto generator_for = [&](std::size_t row) {
        std::vector<Int> e(k);
        // presentation basis vector = column `row` of U'^-1
        for (std::size_t i = 0; i < k; ++i) e[i] = pres_.u_inv.at(i, row);
        std::vector<Int> z = kernel_.mul(e);
        Chain g(degree);
        for (std::size_t i = 0; i < z.size(); ++i) g.add(basis_n[i], z[i]);
        return g;
    };
    for (std::size_t row : free_idx_) generators_.push_back(generator_for(row));
    for (std::size_t row : torsion_idx_) generators_.push_back(generator_for(row));
}

std::string GroupShape::str() const {
    std::ostringstream os;
    bool any = false;
    if (free_rank > 0) {
        os << "Z";
        if (free_rank > 1) os << "^" << free_rank;
        any = true;
    }
    for (const auto& d : torsion) {
        if (any) os << " + ";
        os << "Z_" << d;
        any = true;
    }
    if (!any) os << "0";
    return os.str();
}

std::string HomologyGroup::str() const {
    return GroupShape{free_rank_, torsion_}.str();
}

std::vector<Int> HomologyGroup::kernel_coordinates(const Chain& c) const {
    Chain rep = project(c, variant_);
    if (rep.degree() != degree_ && !rep.empty())
        throw std::domain_error("kernel_coordinates: degree mismatch");
    if (!is_cycle(*q_, c, variant_))
        throw std::domain_error("kernel_coordinates: chain is not a cycle");
    Chain fixed = rep;
    if (fixed.empty()) return std::vector<Int>(kernel_.cols());
    std::vector<Int> z = coordinates(*q_, fixed, variant_);
    return vinv_bottom_.mul(z);
}

Chain HomologyGroup::chain_from_kernel_coordinates(const std::vector<Int>& y) const {
    std::vector<Int> z = kernel_.mul(y);
    return from_coordinates(*q_, variant_, degree_, z);
}

ClassCoordinates HomologyGroup::class_of_kernel_coordinates(const std::vector<Int>& y) const {
    std::vector<Int> w = pres_.u.mul(y);
    ClassCoordinates cc;
    for (std::size_t i : free_idx_) cc.free_part.push_back(w[i]);
    for (std::size_t i : torsion_idx_) {
        Int r;
        mpz_fdiv_r(r.get_mpz_t(), w[i].get_mpz_t(), pres_.s.at(i, i).get_mpz_t());
        cc.torsion_part.push_back(r);
    }
    return cc;
}

ClassCoordinates HomologyGroup::class_of(const Chain& c) const {
    return class_of_kernel_coordinates(kernel_coordinates(c));
}

namespace {

struct CacheKey {
    std::string table;
    Variant v;
    int degree;
    auto operator<=>(const CacheKey&) const = default;
};

struct CacheEntry {
    std::unique_ptr<FiniteQuandle> q;
    std::unique_ptr<HomologyGroup> h;
};

std::map<CacheKey, CacheEntry>& cache() {
    static std::map<CacheKey, CacheEntry> c;
    return c;
}
std::mutex cache_mutex;

}  // namespace

const HomologyGroup& homology(const FiniteQuandle& q, Variant v, int degree) {
    CacheKey key{format_quandle(q), v, degree};
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache().find(key);
        if (it != cache().end()) return *it->second.h;
    }
    // compute outside the lock; the cached group points at its own copy
    auto qcopy = std::make_unique<FiniteQuandle>(q);
    auto h = std::make_unique<HomologyGroup>(*qcopy, v, degree);
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto [it, inserted] = cache().try_emplace(key, CacheEntry{std::move(qcopy), std::move(h)});
    return *it->second.h;
}

bool is_cycle(const FiniteQuandle& q, const Chain& c, Variant v) {
    switch (v) {
        case Variant::R:
            return boundary(q, c).empty();
        case Variant::D:
            return boundary(q, project(c, Variant::D)).empty();
        case Variant::Q:
            return project(boundary(q, project(c, Variant::Q)), Variant::Q).empty();
    }
    throw std::logic_error("unreachable");
}

std::optional<Chain> is_boundary(const FiniteQuandle& q, const Chain& c, Variant v) {
    if (!is_cycle(q, c, v)) throw std::domain_error("is_boundary: input is not a cycle");
    Chain rep = project(c, v);
    if (rep.empty()) return Chain(rep.degree() + 1);
    const HomologyGroup& h = homology(q, v, rep.degree());
    std::vector<Int> y = h.kernel_coordinates(rep);
    auto x = solve_linear(h.pres_, y);
    if (!x) return std::nullopt;
    return from_coordinates(q, v, rep.degree() + 1, *x);
}

ClassCoordinates class_of(const FiniteQuandle& q, const Chain& c, Variant v) {
    if (!is_cycle(q, c, v)) throw std::domain_error("class_of: input is not a cycle");
    return homology(q, v, project(c, v).degree()).class_of(c);
}

namespace {

Chain map_chain(const QuandleHom& f, const Chain& c, Variant v) {
    Chain out(c.degree());
    for (const auto& [t, coeff] : c.terms()) {
        Tuple img;
        img.xs.reserve(t.xs.size());
        for (int x : t.xs) img.xs.push_back(f(x));
        if (v == Variant::Q && is_degenerate(img)) continue;
        out.add(img, coeff);
    }
    return out;
}

IntMatrix hstack(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("hstack: row mismatch");
    IntMatrix m(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) m.at(i, a.cols() + j) = b.at(i, j);
    }
    return m;
}

IntMatrix columns_from(const std::vector<std::vector<Int>>& cols, std::size_t rows) {
    IntMatrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (std::size_t i = 0; i < rows; ++i) m.at(i, j) = cols[j][i];
    return m;
}

/// Generating matrix of {x : M x in column lattice of R}, via the kernel
/// of the block matrix [M | R].
IntMatrix preimage_lattice(const IntMatrix& m, const IntMatrix& r) {
    IntMatrix block = hstack(m, r);
    IntMatrix kb = kernel_basis(smith_normal_form(block));
    IntMatrix top(m.cols(), kb.cols());
    for (std::size_t i = 0; i < m.cols(); ++i)
        for (std::size_t j = 0; j < kb.cols(); ++j) top.at(i, j) = kb.at(i, j);
    return top;
}

bool lattice_contains(const SnfDecomposition& snf_b, const IntMatrix& a) {
    for (std::size_t j = 0; j < a.cols(); ++j)
        if (!solve_linear(snf_b, a.column(j))) return false;
    return true;
}

bool lattice_equal(const IntMatrix& a, const IntMatrix& b) {
    return lattice_contains(smith_normal_form(b), a) &&
           lattice_contains(smith_normal_form(a), b);
}

IntMatrix class_matrix(const HomologyGroup& h, const std::vector<std::vector<Int>>& kernel_cols) {
    const std::size_t rows = h.free_rank() + h.torsion().size();
    IntMatrix m(rows, kernel_cols.size());
    for (std::size_t j = 0; j < kernel_cols.size(); ++j) {
        ClassCoordinates cc = h.class_of_kernel_coordinates(kernel_cols[j]);
        std::size_t i = 0;
        for (const auto& x : cc.free_part) m.at(i++, j) = x;
        for (const auto& x : cc.torsion_part) m.at(i++, j) = x;
    }
    return m;
}

}  // namespace

InducedMap induced_map(const QuandleHom& f, Variant v, int degree) {
    const HomologyGroup& hs = homology(*f.source, v, degree);
    const HomologyGroup& ht = homology(*f.target, v, degree);

    std::vector<std::vector<Int>> image_coords;
    for (const Chain& g : hs.generators())
        image_coords.push_back(ht.kernel_coordinates(map_chain(f, g, v)));

    InducedMap out;
    out.source = &hs;
    out.target = &ht;
    out.matrix = class_matrix(ht, image_coords);

    IntMatrix y = columns_from(image_coords, ht.kernel_rank());
    IntMatrix full = hstack(y, ht.relations());
    Cokernel ck = cokernel(full);
    out.surjective = ck.free_rank == 0 && ck.torsion.empty();

    // kernel of the induced map: coefficient vectors x over the source
    // generators with sum x_j f*(g_j) = 0 in the target
    IntMatrix lat = preimage_lattice(y, ht.relations());
    bool inj = true;
    const std::size_t nfree = hs.free_rank();
    for (std::size_t j = 0; j < lat.cols() && inj; ++j) {
        for (std::size_t i = 0; i < lat.rows() && inj; ++i) {
            if (i < nfree) {
                if (lat.at(i, j) != 0) inj = false;
            } else {
                if (lat.at(i, j) % hs.torsion()[i - nfree] != 0) inj = false;
            }
        }
    }
    out.injective = inj;
    return out;
}

ConnectingMap les_boundary_map(const FiniteQuandle& q, int degree) {
    if (degree < 2) throw std::domain_error("les_boundary_map: degree must be >= 2");
    const HomologyGroup& hq = homology(q, Variant::Q, degree);
    const HomologyGroup& hd = homology(q, Variant::D, degree - 1);

    std::vector<std::vector<Int>> image_coords;
    for (const Chain& g : hq.generators()) {
        Chain db = project(boundary(q, g), Variant::D);  // lands in C^D by exactness
        image_coords.push_back(hd.kernel_coordinates(db));
    }
    ConnectingMap out;
    out.source = &hq;
    out.target = &hd;
    out.matrix = class_matrix(hd, image_coords);
    out.is_zero = out.matrix.is_zero();
    return out;
}

LesReport les_check(const FiniteQuandle& q, int degree) {
    if (degree < 2) throw std::domain_error("les_check: degree must be >= 2");
    const HomologyGroup& hd = homology(q, Variant::D, degree);
    const HomologyGroup& hr = homology(q, Variant::R, degree);
    const HomologyGroup& hq = homology(q, Variant::Q, degree);
    const HomologyGroup& hd1 = homology(q, Variant::D, degree - 1);

    LesReport rep;
    rep.hd_n = {hd.free_rank(), hd.torsion()};
    rep.hr_n = {hr.free_rank(), hr.torsion()};
    rep.hq_n = {hq.free_rank(), hq.torsion()};
    rep.hd_nm1 = {hd1.free_rank(), hd1.torsion()};

    // exactness at H_n^R: im(i*) == ker(j*), as lattices in the kernel
    // coordinates of H_n^R (both sides include the boundary relations)
    {
        std::vector<std::vector<Int>> ims;
        for (const Chain& g : hd.generators()) ims.push_back(hr.kernel_coordinates(g));
        IntMatrix im_lat = hstack(columns_from(ims, hr.kernel_rank()), hr.relations());

        // matrix of j on kernel coordinates
        std::vector<std::vector<Int>> jcols;
        for (std::size_t i = 0; i < hr.kernel_rank(); ++i) {
            std::vector<Int> e(hr.kernel_rank());
            e[i] = 1;
            Chain c = hr.chain_from_kernel_coordinates(e);
            jcols.push_back(hq.kernel_coordinates(project(c, Variant::Q)));
        }
        IntMatrix jmat = columns_from(jcols, hq.kernel_rank());
        IntMatrix ker_lat = hstack(preimage_lattice(jmat, hq.relations()), hr.relations());
        rep.exact_at_r = lattice_equal(im_lat, ker_lat);
    }

    // exactness at H_n^Q: im(j*) == ker(d*)
    {
        std::vector<std::vector<Int>> ims;
        for (const Chain& g : hr.generators())
            ims.push_back(hq.kernel_coordinates(project(g, Variant::Q)));
        IntMatrix im_lat = hstack(columns_from(ims, hq.kernel_rank()), hq.relations());

        std::vector<std::vector<Int>> dcols;
        for (std::size_t i = 0; i < hq.kernel_rank(); ++i) {
            std::vector<Int> e(hq.kernel_rank());
            e[i] = 1;
            Chain c = hq.chain_from_kernel_coordinates(e);
            Chain db = project(boundary(q, c), Variant::D);
            dcols.push_back(hd1.kernel_coordinates(db));
        }
        IntMatrix dmat = columns_from(dcols, hd1.kernel_rank());
        IntMatrix ker_lat = hstack(preimage_lattice(dmat, hd1.relations()), hq.relations());
        rep.exact_at_q = lattice_equal(im_lat, ker_lat);
    }
    return rep;
}

}  // namespace qh
