#ifndef ZETATAU_INVARIANTS_HPP
#define ZETATAU_INVARIANTS_HPP

#include <zetatau/monodromy.hpp>
#include <zetatau/series.hpp>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace zetatau {

/// Truncation order used for the series oracles unless overridden. Far above
/// the degree of anything in the catalog.
inline constexpr std::size_t kDefaultOrder = 16;

namespace detail {

inline void require_valid(const MonodromyMatrix& g) {
    ValidationReport report = validate(g);
    if (!report.ok())
        throw std::invalid_argument("monodromy validation failed:\n" + report.summary());
}

inline IntPolynomial one_minus_t() { return IntPolynomial::from_coeffs({1, -1}); }

}  // namespace detail

/// Zeta function of the flow: closed rational form, its expansion, and the
/// Lefschetz numbers L(g^1)..L(g^N) that feed the exponential oracle.
struct ZetaResult {
    RationalFunction rational;
    TruncatedSeries series;
    std::vector<Int> lefschetz;
};

/// Torsion: closed rational form (the determinant of the flow matrix), its
/// expansion, and the k x k matrix of flow-line generating functions D_ij.
struct TorsionResult {
    RationalFunction rational;
    TruncatedSeries series;
    Matrix<RationalFunction> flow_matrix;
};

struct CensusLevel {
    Int lefschetz;
    IntMatrix flow_counts;  // k x k, entry (i,j) = (G^n)_{i, m+j}
};

struct CensusReport {
    std::vector<CensusLevel> per_level;  // index n-1 holds level n
};

struct AlexanderResult {
    IntPolynomial raw;         // the product exactly as the arithmetic yields it
    IntPolynomial normalized;  // times a unit +-t^j: nonzero constant term, positive lowest coefficient
};

struct IdentityReport {
    bool exact;
    bool up_to_unit;
    AlexanderResult recovered;
    IntPolynomial expected;
};

/// Multiplies by the unit +-t^j that makes the constant term nonzero and the
/// lowest coefficient positive.
inline IntPolynomial unit_normalized(const IntPolynomial& p) {
    if (p.is_zero()) return p;
    IntPolynomial q = poly_divexact(p, IntPolynomial::monomial(1, p.valuation()));
    if (q.coeff(0) < 0) q = -q;
    return q;
}

/// Flow-line generating functions D_ij(t) = entry (i, m+j) of the resolvent
/// G (I - tG)^{-1}, realized exactly as G adj(I - tG) / det(I - tG). Indices
/// run over the handle block 1..k.
inline Matrix<RationalFunction> flow_matrix(const MonodromyMatrix& g) {
    const std::size_t m = g.genus();
    const std::size_t k = g.handles();
    Matrix<RationalFunction> fm(k, k);
    if (k == 0) return fm;

    const auto [det, adj] = det_and_adjugate(identity_minus_t(g.entries()));
    PolyMatrix gp(g.size(), g.size());
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = 0; j < g.size(); ++j) gp(i, j) = IntPolynomial(g.entries()(i, j));
    const PolyMatrix resolvent_num = gp * adj;

    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            fm(i, j) = RationalFunction(resolvent_num(i, m + j), det);
    return fm;
}

/// Single flow entry D_ij(t), 1-based handle indices.
inline RationalFunction flow_entry(const MonodromyMatrix& g, std::size_t i, std::size_t j) {
    detail::require_valid(g);
    if (i < 1 || i > g.handles() || j < 1 || j > g.handles())
        throw std::invalid_argument("handle index out of range 1..k");
    return flow_matrix(g)(i - 1, j - 1);
}

/// Zeta function: det(I - tG) / (1-t)^e in closed form, cross-checked
/// against exp(sum L(g^n)/n t^n) to the requested order. A disagreement is
/// an internal-consistency failure and throws.
inline ZetaResult zeta(const MonodromyMatrix& g, std::size_t order = kDefaultOrder) {
    detail::require_valid(g);

    const IntPolynomial det = det_bareiss(identity_minus_t(g.entries()));
    const int e = trace_offset(g.kind());
    RationalFunction rational(det, detail::one_minus_t().pow(static_cast<unsigned long>(e)));

    std::vector<Int> lefschetz;
    lefschetz.reserve(order);
    IntMatrix p = IntMatrix::identity(g.size());
    for (std::size_t n = 1; n <= order; ++n) {
        p = p * g.entries();
        lefschetz.push_back(Int(e) - p.trace());
    }

    TruncatedSeries arg(order + 1);
    for (std::size_t n = 1; n <= order; ++n)
        arg.set_coeff(n, Rat(lefschetz[n - 1]) / Rat(static_cast<long>(n)));
    const TruncatedSeries from_traces = series_exp(arg).truncated(order);
    const TruncatedSeries from_rational = series_of_ratfun(rational, order);

    const long d = first_disagreement(from_traces, from_rational, order);
    if (d >= 0)
        throw std::logic_error(
            "zeta oracle disagreement at t^" + std::to_string(d) + ": exponential route " +
            to_string(from_traces.coeff(static_cast<std::size_t>(d))) + " vs rational route " +
            to_string(from_rational.coeff(static_cast<std::size_t>(d))));
    if (!from_rational.all_integer())
        throw std::logic_error("zeta series has a non-integer coefficient");

    return {std::move(rational), from_rational, std::move(lefschetz)};
}

/// Per-level counts: Lefschetz numbers and the k x k flow-count matrices
/// D^(n) for n = 1..depth, all exact integers.
inline CensusReport census(const MonodromyMatrix& g, std::size_t depth) {
    detail::require_valid(g);
    const std::size_t m = g.genus();
    const std::size_t k = g.handles();
    const int e = trace_offset(g.kind());

    CensusReport report;
    report.per_level.reserve(depth);
    IntMatrix p = IntMatrix::identity(g.size());
    for (std::size_t n = 1; n <= depth; ++n) {
        p = p * g.entries();
        IntMatrix counts(k, k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) counts(i, j) = p(i, m + j);
        report.per_level.push_back({Int(e) - p.trace(), std::move(counts)});
    }
    return report;
}

/// Torsion: determinant of the flow matrix over Q(t), cross-checked against
/// the determinant of the truncated per-level series. With no handles the
/// torsion is the constant 1.
inline TorsionResult torsion(const MonodromyMatrix& g, std::size_t order = kDefaultOrder) {
    detail::require_valid(g);
    const std::size_t k = g.handles();

    if (k == 0) {
        RationalFunction one(IntPolynomial(1));
        TruncatedSeries s = series_of_ratfun(one, order);
        return {std::move(one), std::move(s), Matrix<RationalFunction>(0, 0)};
    }

    Matrix<RationalFunction> fm = flow_matrix(g);
    RationalFunction rational = det_laplace(fm);
    const TruncatedSeries from_rational = series_of_ratfun(rational, order);

    // Independent route: truncated D_ij series straight from matrix powers.
    const CensusReport counts = census(g, order);
    Matrix<TruncatedSeries> ds(k, k, TruncatedSeries(order));
    for (std::size_t n = 1; n <= order; ++n)
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j)
                ds(i, j).set_coeff(n - 1, Rat(counts.per_level[n - 1].flow_counts(i, j)));
    const TruncatedSeries det_series = det_laplace(ds, TruncatedSeries(order));

    // Each determinant term multiplies k truncated entries; trust the window
    // clear of the truncated tails.
    const std::size_t window = order >= k ? order - (k - 1) : 0;
    const long d = first_disagreement(from_rational, det_series, window);
    if (d >= 0)
        throw std::logic_error(
            "torsion oracle disagreement at t^" + std::to_string(d) + ": rational route " +
            to_string(from_rational.coeff(static_cast<std::size_t>(d))) + " vs census route " +
            to_string(det_series.coeff(static_cast<std::size_t>(d))));
    if (!from_rational.all_integer())
        throw std::logic_error("torsion series has a non-integer coefficient");

    return {std::move(rational), from_rational, std::move(fm)};
}

/// Recovers the Alexander polynomial as torsion * zeta * (1-t). The product
/// must come out polynomial; anything else means the input did not satisfy
/// the hypotheses (knot complement, regular Morse pair).
inline AlexanderResult alexander_recover(const MonodromyMatrix& g,
                                         std::size_t order = kDefaultOrder) {
    detail::require_valid(g);
    if (g.kind() != SurfaceKind::OncePunctured)
        throw std::invalid_argument(
            "Alexander recovery is defined for once-punctured level surfaces");

    const RationalFunction tau = torsion(g, order).rational;
    const RationalFunction z = zeta(g, order).rational;
    const RationalFunction product = tau * z * RationalFunction(detail::one_minus_t());
    if (!product.is_polynomial())
        throw std::domain_error(
            "torsion * zeta * (1-t) is not a polynomial; "
            "the input does not come from a regular Morse pair");
    return {product.num(), unit_normalized(product.num())};
}

/// Compares the recovered polynomial with a stored one: bit-exact equality,
/// and equality up to a unit +-t^j. Both verdicts are reported; failure is
/// an outcome, not an error.
inline IdentityReport verify_identity(const MonodromyMatrix& g, const IntPolynomial& expected,
                                      std::size_t order = kDefaultOrder) {
    AlexanderResult recovered = alexander_recover(g, order);
    const bool exact = recovered.raw == expected;
    const bool unit = recovered.normalized == unit_normalized(expected);
    return {exact, unit, std::move(recovered), expected};
}

}  // namespace zetatau

#endif
