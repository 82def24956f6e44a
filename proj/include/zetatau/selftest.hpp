#ifndef ZETATAU_SELFTEST_HPP
#define ZETATAU_SELFTEST_HPP

#include <zetatau/catalog.hpp>

#include <functional>
#include <ostream>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace zetatau::selftest {

struct CriterionResult {
    int id;
    std::string name;
    bool passed;
    std::string detail;  // first failure, or empty
};

// ---------------------------------------------------------------------------
// Randomized inputs (deterministic seed so runs are reproducible).

/// Random symplectic transvection I + c u u^T J; satisfies A^T J A = J for
/// any integer c and vector u, and has determinant 1.
inline IntMatrix random_transvection(std::mt19937& rng, std::size_t genus) {
    const std::size_t n = 2 * genus;
    std::uniform_int_distribution<long> entry(-1, 1);
    std::uniform_int_distribution<long> scale(-2, 2);

    std::vector<Int> u(n);
    bool nonzero = false;
    for (auto& x : u) {
        x = entry(rng);
        if (x != 0) nonzero = true;
    }
    if (!nonzero) u[0] = 1;
    const Int c = scale(rng);

    const IntMatrix j = symplectic_form(genus);
    std::vector<Int> ju(n, Int(0));  // (u^T J)_a = sum_i u_i J_{i a}
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t i = 0; i < n; ++i) ju[a] += u[i] * j(i, a);

    IntMatrix t = IntMatrix::identity(n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t col = 0; col < n; ++col) t(r, col) += c * u[r] * ju[col];
    return t;
}

/// Product of a few random transvections: a random element of Sp(2m, Z).
inline IntMatrix random_symplectic(std::mt19937& rng, std::size_t genus, int factors = 4) {
    IntMatrix g = IntMatrix::identity(2 * genus);
    for (int i = 0; i < factors; ++i) g = g * random_transvection(rng, genus);
    return g;
}

inline MonodromyMatrix random_monodromy(std::mt19937& rng) {
    std::uniform_int_distribution<std::size_t> genus_dist(1, 3);
    std::uniform_int_distribution<int> kind_dist(0, 1);
    const std::size_t m = genus_dist(rng);
    std::uniform_int_distribution<std::size_t> handle_dist(0, m);
    return MonodromyMatrix(m, handle_dist(rng),
                           kind_dist(rng) == 0 ? SurfaceKind::OncePunctured : SurfaceKind::Closed,
                           random_symplectic(rng, m));
}

inline IntPolynomial random_polynomial(std::mt19937& rng, int max_degree, long max_abs) {
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::uniform_int_distribution<long> coeff(-max_abs, max_abs);
    const int d = deg(rng);
    std::vector<Int> coeffs;
    for (int i = 0; i <= d; ++i) coeffs.emplace_back(coeff(rng));
    return IntPolynomial::from_coeffs(std::move(coeffs));
}

// ---------------------------------------------------------------------------
// Verification criteria. Each returns pass/fail plus the first failing detail.

namespace detail {

inline IntPolynomial omt_pow(unsigned long k) {
    return IntPolynomial::from_coeffs({1, -1}).pow(k);
}

inline bool expect(bool cond, const std::string& what, std::string& detail) {
    if (!cond && detail.empty()) detail = what;
    return cond;
}

}  // namespace detail

/// Trefoil: zeta = (1 - t + t^2)/(1 - t), torsion = 1.
inline CriterionResult criterion_trefoil() {
    std::string detail;
    bool ok = true;
    const KnotRecord rec = trefoil();
    const RationalFunction expected_zeta(IntPolynomial::from_coeffs({1, -1, 1}),
                                         IntPolynomial::from_coeffs({1, -1}));
    ok &= detail::expect(zeta(rec.monodromy).rational == expected_zeta,
                         "zeta(trefoil) != (1 - t + t^2)/(1 - t)", detail);
    ok &= detail::expect(torsion(rec.monodromy).rational == RationalFunction(1),
                         "torsion(trefoil) != 1", detail);
    return {1, "trefoil zeta and torsion", ok, detail};
}

/// Twist knots n = 2..10: zeta = (1-t)^3, torsion = (-n + (2n-1)t - nt^2)/(1-t)^4.
inline CriterionResult criterion_twist_family() {
    std::string detail;
    bool ok = true;
    for (long n = 2; n <= 10; ++n) {
        const KnotRecord rec = twist_knot(n);
        const std::string tag = "n = " + std::to_string(n);
        ok &= detail::expect(zeta(rec.monodromy).rational ==
                                 RationalFunction(detail::omt_pow(3)),
                             tag + ": zeta != (1 - t)^3", detail);
        const RationalFunction expected_tau(
            IntPolynomial::from_coeffs({Int(-n), Int(2 * n - 1), Int(-n)}), detail::omt_pow(4));
        ok &= detail::expect(torsion(rec.monodromy).rational == expected_tau,
                             tag + ": torsion mismatch", detail);
    }
    return {2, "twist-knot family zeta and torsion (n = 2..10)", ok, detail};
}

/// Pretzel (5,5,5): zeta, all four flow entries, and torsion.
inline CriterionResult criterion_pretzel() {
    std::string detail;
    bool ok = true;
    const KnotRecord rec = pretzel_555();
    ok &= detail::expect(zeta(rec.monodromy).rational == RationalFunction(detail::omt_pow(5)),
                         "zeta != (1 - t)^5", detail);
    const RationalFunction d11(IntPolynomial(-5), detail::omt_pow(2));
    const RationalFunction d12(IntPolynomial::from_coeffs({-2, 3}), detail::omt_pow(3));
    const RationalFunction d21(IntPolynomial::from_coeffs({-3, 2}), detail::omt_pow(3));
    ok &= detail::expect(flow_entry(rec.monodromy, 1, 1) == d11, "D11 != -5/(1 - t)^2", detail);
    ok &= detail::expect(flow_entry(rec.monodromy, 2, 2) == d11, "D22 != -5/(1 - t)^2", detail);
    ok &= detail::expect(flow_entry(rec.monodromy, 1, 2) == d12, "D12 != (-2 + 3t)/(1 - t)^3",
                         detail);
    ok &= detail::expect(flow_entry(rec.monodromy, 2, 1) == d21, "D21 != (-3 + 2t)/(1 - t)^3",
                         detail);
    const RationalFunction expected_tau(IntPolynomial::from_coeffs({19, -37, 19}),
                                        detail::omt_pow(6));
    ok &= detail::expect(torsion(rec.monodromy).rational == expected_tau, "torsion mismatch",
                         detail);
    return {3, "pretzel (5,5,5) zeta, flow entries, torsion", ok, detail};
}

/// torsion * zeta * (1-t) recovers the stored Alexander polynomial exactly,
/// for every catalog entry. The pretzel value is additionally checked against
/// the classical closed form for odd (p,q,r) pretzel knots,
/// ((pq+qr+rp)(t-1)^2 + (t+1)^2) / 4.
inline CriterionResult criterion_alexander_identity() {
    std::string detail;
    bool ok = true;
    for (const KnotRecord& rec : builtin_catalog()) {
        const IdentityReport report = verify_identity(rec);
        ok &= detail::expect(report.exact, rec.name + ": recovered Alexander polynomial differs",
                             detail);
    }
    const IntPolynomial t_minus_1 = IntPolynomial::from_coeffs({-1, 1});
    const IntPolynomial t_plus_1 = IntPolynomial::from_coeffs({1, 1});
    const IntPolynomial classical = poly_divexact(
        Int(5 * 5 + 5 * 5 + 5 * 5) * (t_minus_1 * t_minus_1) + t_plus_1 * t_plus_1,
        IntPolynomial(4));
    ok &= detail::expect(classical == *pretzel_555().alexander,
                         "pretzel Alexander differs from the classical pretzel formula", detail);
    return {4, "Alexander identity tau * zeta * (1-t) on the catalog", ok, detail};
}

/// Series oracles at order 16: exponential-of-traces vs rational expansion,
/// flow entries vs matrix powers, series determinant vs rational torsion.
inline CriterionResult criterion_oracle_equivalence() {
    constexpr std::size_t order = 16;
    std::string detail;
    bool ok = true;
    for (const KnotRecord& rec : builtin_catalog()) {
        const MonodromyMatrix& g = rec.monodromy;
        const std::size_t m = g.genus();
        const std::size_t k = g.handles();

        // (a) exp of Lefschetz numbers vs the rational zeta expansion.
        const ZetaResult z = zeta(g, order);
        TruncatedSeries arg(order + 1);
        for (std::size_t n = 1; n <= order; ++n)
            arg.set_coeff(n, Rat(z.lefschetz[n - 1]) / Rat(static_cast<long>(n)));
        const TruncatedSeries exp_route = series_exp(arg).truncated(order);
        const TruncatedSeries rational_route = series_of_ratfun(z.rational, order);
        ok &= detail::expect(first_disagreement(exp_route, rational_route, order) < 0,
                             rec.name + ": zeta oracle routes disagree", detail);

        // (b) coefficient t^(n-1) of D_ij equals (G^n)_{i, m+j}.
        const Matrix<RationalFunction> fm = flow_matrix(g);
        for (std::size_t i = 1; i <= k; ++i)
            for (std::size_t j = 1; j <= k; ++j) {
                const TruncatedSeries s = series_of_ratfun(fm(i - 1, j - 1), order);
                for (std::size_t n = 1; n <= order; ++n) {
                    const Int direct = g.power(n)(i - 1, m + j - 1);
                    ok &= detail::expect(
                        s.coeff(n - 1) == Rat(direct),
                        rec.name + ": D" + std::to_string(i) + std::to_string(j) +
                            " coefficient t^" + std::to_string(n - 1) + " != (G^n) entry",
                        detail);
                }
            }

        // (c) determinant of the truncated flow matrix vs the rational torsion.
        const TorsionResult tau = torsion(g, order);
        if (k > 0) {
            Matrix<TruncatedSeries> ds(k, k, TruncatedSeries(order));
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j)
                    ds(i, j) = series_of_ratfun(fm(i, j), order);
            const TruncatedSeries det_series = det_laplace(ds, TruncatedSeries(order));
            const TruncatedSeries tau_series = series_of_ratfun(tau.rational, order);
            ok &= detail::expect(
                first_disagreement(det_series, tau_series, order - (k - 1)) < 0,
                rec.name + ": torsion series determinant disagrees with the rational route",
                detail);
        }
    }
    return {5, "oracle equivalence at order 16 (zeta, flow entries, torsion)", ok, detail};
}

/// Structural identities on the catalog plus 50 random symplectic matrices:
/// symplectic check, unit determinant, det(I - tG) with constant term 1 and
/// palindromic coefficients, integral zeta and torsion series.
inline CriterionResult criterion_structural() {
    std::string detail;
    bool ok = true;
    std::vector<MonodromyMatrix> pool;
    for (const KnotRecord& rec : builtin_catalog()) pool.push_back(rec.monodromy);
    std::mt19937 rng(20240811);
    for (int i = 0; i < 50; ++i) pool.push_back(random_monodromy(rng));

    for (std::size_t idx = 0; idx < pool.size(); ++idx) {
        const MonodromyMatrix& g = pool[idx];
        const std::string tag = "matrix #" + std::to_string(idx);
        ok &= detail::expect(validate(g).ok(), tag + ": validation failed", detail);

        const IntPolynomial cp = det_bareiss(identity_minus_t(g.entries()));
        ok &= detail::expect(cp.coeff(0) == 1, tag + ": det(I - tG) constant term != 1", detail);
        const std::size_t n = g.size();
        for (std::size_t i = 0; i <= n; ++i)
            ok &= detail::expect(cp.coeff(i) == cp.coeff(n - i),
                                 tag + ": det(I - tG) not palindromic", detail);

        ok &= detail::expect(zeta(g).series.all_integer(), tag + ": zeta series not integral",
                             detail);
        ok &= detail::expect(torsion(g).series.all_integer(),
                             tag + ": torsion series not integral", detail);
    }
    return {6, "structural suite (catalog + 50 random symplectic matrices)", ok, detail};
}

/// Kernel oracles: Bareiss vs cofactor determinants to 4x4, the Laplace
/// identity M adj(M) = det(M) I to 6x6, exp/log round trips at order 16.
inline CriterionResult criterion_kernel_oracles() {
    std::string detail;
    bool ok = true;
    std::mt19937 rng(771177);

    for (std::size_t n = 1; n <= 4; ++n)
        for (int rep = 0; rep < 8; ++rep) {
            PolyMatrix m(n, n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) m(i, j) = random_polynomial(rng, 2, 5);
            ok &= detail::expect(det_bareiss(m) == det_laplace(m),
                                 "Bareiss and cofactor determinants differ at size " +
                                     std::to_string(n),
                                 detail);
        }

    for (std::size_t n = 1; n <= 6; ++n)
        for (int rep = 0; rep < 4; ++rep) {
            PolyMatrix m(n, n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) m(i, j) = random_polynomial(rng, 1, 4);
            const PolyMatrix adj = adjugate(m);
            const IntPolynomial det = det_bareiss(m);
            const PolyMatrix prod = m * adj;
            bool laplace = true;
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    laplace &= prod(i, j) == (i == j ? det : IntPolynomial());
            ok &= detail::expect(laplace,
                                 "M adj(M) != det(M) I at size " + std::to_string(n), detail);
        }

    std::uniform_int_distribution<long> num(-6, 6);
    std::uniform_int_distribution<long> den(1, 4);
    for (int rep = 0; rep < 10; ++rep) {
        TruncatedSeries unit(16), zero(16);
        unit.set_coeff(0, Rat(1));
        for (std::size_t i = 1; i < 16; ++i) {
            unit.set_coeff(i, make_rat(num(rng), den(rng)));
            zero.set_coeff(i, make_rat(num(rng), den(rng)));
        }
        ok &= detail::expect(series_exp(series_log(unit)) == unit,
                             "exp(log(s)) != s at order 16", detail);
        ok &= detail::expect(series_log(series_exp(zero)) == zero,
                             "log(exp(s)) != s at order 16", detail);
    }
    return {7, "kernel oracles (determinants, adjugate, exp/log)", ok, detail};
}

inline std::vector<CriterionResult> run_all() {
    std::vector<CriterionResult> results;
    const std::vector<std::function<CriterionResult()>> criteria = {
        criterion_trefoil,        criterion_twist_family,       criterion_pretzel,
        criterion_alexander_identity, criterion_oracle_equivalence, criterion_structural,
        criterion_kernel_oracles};
    for (const auto& run : criteria) {
        try {
            results.push_back(run());
        } catch (const std::exception& e) {
            results.push_back({static_cast<int>(results.size() + 1), "criterion threw", false,
                               e.what()});
        }
    }
    return results;
}

/// Runs everything, prints one pass/fail line per criterion, returns the
/// number of failures.
inline int run_and_report(std::ostream& out) {
    int failures = 0;
    for (const CriterionResult& r : run_all()) {
        out << (r.passed ? "[PASS] " : "[FAIL] ") << "criterion " << r.id << ": " << r.name;
        if (!r.passed && !r.detail.empty()) out << " -- " << r.detail;
        out << "\n";
        if (!r.passed) ++failures;
    }
    return failures;
}

}  // namespace zetatau::selftest

#endif
