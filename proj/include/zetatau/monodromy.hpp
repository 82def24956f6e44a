#ifndef ZETATAU_MONODROMY_HPP
#define ZETATAU_MONODROMY_HPP

#include <zetatau/matrix.hpp>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace zetatau {

/// Topology of the level surface the first-return map acts on. It fixes the
/// trace contribution of H_0 and H_2: a once-punctured surface contributes 1,
/// a closed surface 2.
enum class SurfaceKind { OncePunctured, Closed };

inline int trace_offset(SurfaceKind kind) {
    return kind == SurfaceKind::OncePunctured ? 1 : 2;
}

inline std::string to_string(SurfaceKind kind) {
    return kind == SurfaceKind::OncePunctured ? "punctured" : "closed";
}

/// Element of H_1 of the level surface, written in the ordered symplectic
/// basis (c_1..c_m, d_1..d_m).
struct HomologyClass {
    std::vector<Int> coords;
};

/// The symplectic form J = [[0, I], [-I, 0]] for the (c, d) basis order,
/// so that <c_i, d_i> = +1.
inline IntMatrix symplectic_form(std::size_t genus) {
    IntMatrix j(2 * genus, 2 * genus);
    for (std::size_t i = 0; i < genus; ++i) {
        j(i, genus + i) = 1;
        j(genus + i, i) = -1;
    }
    return j;
}

/// Intersection pairing u^T J v. Antisymmetric; <c_i, d_i> = 1.
inline Int intersection_pairing(const HomologyClass& u, const HomologyClass& v) {
    const std::size_t n = u.coords.size();
    if (v.coords.size() != n || n % 2 != 0)
        throw std::invalid_argument("homology classes must share an even ambient dimension");
    const std::size_t m = n / 2;
    Int acc = 0;
    for (std::size_t i = 0; i < m; ++i)
        acc += u.coords[i] * v.coords[m + i] - u.coords[m + i] * v.coords[i];
    return acc;
}

struct ValidationCheck {
    std::string name;
    bool passed;
    std::string detail;
};

struct ValidationReport {
    std::vector<ValidationCheck> checks;

    bool ok() const {
        for (const auto& c : checks)
            if (!c.passed) return false;
        return true;
    }

    std::string summary() const {
        std::string out;
        for (const auto& c : checks) {
            out += "check " + c.name + ": " + (c.passed ? "pass" : "FAIL");
            if (!c.detail.empty()) out += " (" + c.detail + ")";
            out += "\n";
        }
        return out;
    }
};

/// Integer matrix of the first-return map acting on H_1 of the level
/// surface. Row i lists the coordinates of the image of the i-th basis
/// element in the ordered basis (c_1..c_m, d_1..d_m); the first k pairs
/// (c_1..c_k, d_1..d_k) are the handle-derived classes, and flow-line data
/// is read from exactly those rows and columns.
class MonodromyMatrix {
public:
    MonodromyMatrix(std::size_t genus, std::size_t handles, SurfaceKind kind, IntMatrix entries)
        : genus_(genus), handles_(handles), kind_(kind), entries_(std::move(entries)) {
        if (genus_ == 0) throw std::invalid_argument("genus must be positive");
        if (!entries_.is_square() || entries_.rows() % 2 != 0)
            throw std::invalid_argument("matrix size must be even");
        if (entries_.rows() != 2 * genus_)
            throw std::invalid_argument("matrix size must equal twice the genus");
    }

    std::size_t genus() const { return genus_; }
    std::size_t handles() const { return handles_; }
    SurfaceKind kind() const { return kind_; }
    std::size_t size() const { return 2 * genus_; }
    const IntMatrix& entries() const { return entries_; }

    IntMatrix power(unsigned long n) const { return entries_.pow(n); }

    Int trace_power(unsigned long n) const { return power(n).trace(); }

    /// Lefschetz number of the n-th return, n >= 1.
    Int lefschetz(unsigned long n) const {
        if (n == 0) throw std::invalid_argument("Lefschetz number needs n >= 1");
        return Int(trace_offset(kind_)) - trace_power(n);
    }

    /// Pushforward of a homology class (coordinates act by row vector times
    /// the matrix).
    HomologyClass apply(const HomologyClass& u) const {
        if (u.coords.size() != size())
            throw std::invalid_argument("homology class dimension mismatch");
        HomologyClass out;
        out.coords.assign(size(), Int(0));
        for (std::size_t a = 0; a < size(); ++a)
            for (std::size_t i = 0; i < size(); ++i)
                out.coords[a] += u.coords[i] * entries_(i, a);
        return out;
    }

    /// Basis class c_i (1 <= i <= m) or d_{i-m} (m < i <= 2m).
    HomologyClass basis_class(std::size_t i) const {
        if (i < 1 || i > size()) throw std::invalid_argument("basis index out of range");
        HomologyClass e;
        e.coords.assign(size(), Int(0));
        e.coords[i - 1] = 1;
        return e;
    }

    /// Signed count of n-level flow lines between the i-th index-2 and the
    /// j-th index-1 critical point: entry (i, m+j) of G^n. Handle indices
    /// are 1-based and bounded by k.
    Int flow_count(std::size_t i, std::size_t j, unsigned long n) const {
        require_handle_index(i);
        require_handle_index(j);
        return power(n)(i - 1, genus_ + j - 1);
    }

    /// The same count read through the intersection pairing, <g^n(c_i), c_j>.
    /// Differs from flow_count by the orientation convention of the pairing
    /// (it comes out as the negative); both are exposed on purpose.
    Int pairing_incidence(std::size_t i, std::size_t j, unsigned long n) const {
        require_handle_index(i);
        require_handle_index(j);
        const IntMatrix g = power(n);
        HomologyClass image;
        image.coords.reserve(size());
        for (std::size_t a = 0; a < size(); ++a) image.coords.push_back(g(i - 1, a));
        return intersection_pairing(image, basis_class(j));
    }

    friend bool operator==(const MonodromyMatrix& a, const MonodromyMatrix& b) {
        return a.genus_ == b.genus_ && a.handles_ == b.handles_ && a.kind_ == b.kind_ &&
               a.entries_ == b.entries_;
    }

private:
    void require_handle_index(std::size_t i) const {
        if (i < 1 || i > handles_)
            throw std::invalid_argument("handle index out of range 1..k");
    }

    std::size_t genus_;
    std::size_t handles_;
    SurfaceKind kind_;
    IntMatrix entries_;
};

/// Itemized validation: size, handle bound, the symplectic identity
/// G^T J G = J, and det G = 1. Every failed check is listed separately.
inline ValidationReport validate(const MonodromyMatrix& g) {
    ValidationReport report;
    const std::size_t n = g.size();
    const std::size_t m = g.genus();

    report.checks.push_back({"size", true,
                             std::to_string(n) + "x" + std::to_string(n) + " = 2*genus x 2*genus"});

    const bool handles_ok = g.handles() <= m;
    report.checks.push_back({"handles", handles_ok,
                             "k = " + std::to_string(g.handles()) +
                                 (handles_ok ? " <= " : " > ") + "m = " + std::to_string(m)});

    const IntMatrix j = symplectic_form(m);
    const IntMatrix gtjg = g.entries().transpose() * j * g.entries();
    bool symplectic = true;
    std::string detail = "G^T J G = J";
    for (std::size_t r = 0; r < n && symplectic; ++r)
        for (std::size_t c = 0; c < n && symplectic; ++c)
            if (gtjg(r, c) != j(r, c)) {
                symplectic = false;
                detail = "entry (" + std::to_string(r + 1) + "," + std::to_string(c + 1) +
                         ") of G^T J G is " + to_string(gtjg(r, c)) + ", expected " +
                         to_string(j(r, c));
            }
    report.checks.push_back({"symplectic", symplectic, detail});

    PolyMatrix constants(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) constants(r, c) = IntPolynomial(g.entries()(r, c));
    const IntPolynomial det = det_bareiss(constants);
    const bool unit_det = det == IntPolynomial(1);
    report.checks.push_back({"determinant", unit_det,
                             "det G = " + to_string(det.coeff(0))});

    return report;
}

/// I - t*G, the matrix whose Bareiss determinant is the zeta numerator.
inline PolyMatrix identity_minus_t(const IntMatrix& g) {
    g.require_square();
    const std::size_t n = g.rows();
    PolyMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            m(i, j) = IntPolynomial::monomial(-g(i, j), 1);
            if (i == j) m(i, j) += IntPolynomial(1);
        }
    return m;
}

}  // namespace zetatau

#endif
