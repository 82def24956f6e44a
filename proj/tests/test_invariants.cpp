#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <zetatau/catalog.hpp>
#include <zetatau/selftest.hpp>

#include <random>

using namespace zetatau;

namespace {
IntPolynomial P(std::initializer_list<long> coeffs) { return IntPolynomial::from_coeffs(coeffs); }
IntPolynomial omt_pow(unsigned long k) { return P({1, -1}).pow(k); }

IntMatrix rows(std::initializer_list<std::initializer_list<long>> data) {
    IntMatrix m(data.size(), data.begin()->size());
    std::size_t i = 0;
    for (const auto& row : data) {
        std::size_t j = 0;
        for (long e : row) m(i, j++) = e;
        ++i;
    }
    return m;
}
}  // namespace

TEST_CASE("zeta closed forms") {
    CHECK(zeta(trefoil().monodromy).rational ==
          RationalFunction(P({1, -1, 1}), P({1, -1})));
    for (long n = 2; n <= 5; ++n)
        CHECK(zeta(twist_knot(n).monodromy).rational == RationalFunction(omt_pow(3)));
    CHECK(zeta(pretzel_555().monodromy).rational == RationalFunction(omt_pow(5)));
}

TEST_CASE("zeta series, Lefschetz list, and integrality") {
    const ZetaResult z = zeta(trefoil().monodromy, 8);
    CHECK(z.series == series_of_ratfun(z.rational, 8));
    CHECK(z.series.all_integer());
    CHECK(z.lefschetz.size() == 8);
    CHECK(z.lefschetz[0] == 0);   // 1 - trace(G)
    CHECK(z.lefschetz[1] == 2);   // 1 - trace(G^2) = 1 - (-1)
    CHECK(z.lefschetz[2] == 3);   // G^3 = -I
}

TEST_CASE("zeta on a closed surface divides by (1-t)^2") {
    // identity monodromy, genus 1, closed: det(I - tI_2) = (1-t)^2 over (1-t)^2
    const MonodromyMatrix id(1, 0, SurfaceKind::Closed, IntMatrix::identity(2));
    CHECK(zeta(id).rational == RationalFunction(1));
    const MonodromyMatrix id_punctured(1, 0, SurfaceKind::OncePunctured, IntMatrix::identity(2));
    CHECK(zeta(id_punctured).rational == RationalFunction(P({1, -1})));
}

TEST_CASE("flow entries") {
    CHECK(flow_entry(twist_knot(2).monodromy, 1, 1) ==
          RationalFunction(P({-2, 3, -2}), omt_pow(4)));
    const MonodromyMatrix p = pretzel_555().monodromy;
    CHECK(flow_entry(p, 1, 1) == RationalFunction(P({-5}), omt_pow(2)));
    CHECK(flow_entry(p, 2, 2) == RationalFunction(P({-5}), omt_pow(2)));
    CHECK(flow_entry(p, 1, 2) == RationalFunction(P({-2, 3}), omt_pow(3)));
    CHECK(flow_entry(p, 2, 1) == RationalFunction(P({-3, 2}), omt_pow(3)));
    CHECK_THROWS_AS(flow_entry(p, 3, 1), std::invalid_argument);
    CHECK_THROWS_AS(flow_entry(p, 1, 0), std::invalid_argument);
}

TEST_CASE("torsion") {
    // fibred case: no handles, torsion is the constant 1
    const TorsionResult fibred = torsion(trefoil().monodromy);
    CHECK(fibred.rational == RationalFunction(1));
    CHECK(fibred.flow_matrix.rows() == 0);
    CHECK(fibred.series.coeff(0) == 1);

    for (long n = 2; n <= 5; ++n)
        CHECK(torsion(twist_knot(n).monodromy).rational ==
              RationalFunction(P({-n, 2 * n - 1, -n}), omt_pow(4)));

    const TorsionResult tau = torsion(pretzel_555().monodromy);
    CHECK(tau.rational == RationalFunction(P({19, -37, 19}), omt_pow(6)));
    CHECK(tau.rational == det_laplace(tau.flow_matrix));
    CHECK(tau.series == series_of_ratfun(tau.rational, kDefaultOrder));
    CHECK(tau.series.all_integer());
}

TEST_CASE("census") {
    const CensusReport report = census(twist_knot(2).monodromy, 3);
    REQUIRE(report.per_level.size() == 3);
    CHECK(report.per_level[0].flow_counts(0, 0) == -2);
    CHECK(report.per_level[1].flow_counts(0, 0) == -5);
    CHECK(report.per_level[0].lefschetz == -3);

    // level-1 Lefschetz number is e - trace(G) for every catalog entry
    for (const KnotRecord& rec : builtin_catalog()) {
        const CensusReport r = census(rec.monodromy, 1);
        CHECK(r.per_level[0].lefschetz ==
              Int(trace_offset(rec.monodromy.kind())) - rec.monodromy.trace_power(1));
    }

    // census flow counts match the series coefficients of the flow entries
    const MonodromyMatrix p = pretzel_555().monodromy;
    const CensusReport pr = census(p, 10);
    const Matrix<RationalFunction> fm = flow_matrix(p);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) {
            const TruncatedSeries s = series_of_ratfun(fm(i, j), 10);
            for (std::size_t n = 1; n <= 10; ++n)
                CHECK(s.coeff(n - 1) == Rat(pr.per_level[n - 1].flow_counts(i, j)));
        }
}

TEST_CASE("alexander recovery") {
    CHECK(alexander_recover(trefoil().monodromy).raw == P({1, -1, 1}));
    for (long n = 2; n <= 10; ++n) {
        const AlexanderResult alex = alexander_recover(twist_knot(n).monodromy);
        CHECK(alex.raw == P({-n, 2 * n - 1, -n}));
        CHECK(alex.normalized == P({n, -(2 * n - 1), n}));
    }
    CHECK(alexander_recover(pretzel_555().monodromy).raw == P({19, -37, 19}));

    // closed surfaces are outside the knot-complement setting
    const MonodromyMatrix closed_id(1, 0, SurfaceKind::Closed, IntMatrix::identity(2));
    CHECK_THROWS_AS(alexander_recover(closed_id), std::invalid_argument);
}

TEST_CASE("unit normalization") {
    CHECK(unit_normalized(P({-2, 3, -2})) == P({2, -3, 2}));
    CHECK(unit_normalized(P({0, 0, 1, -1})) == P({1, -1}));
    CHECK(unit_normalized(P({0, -3, 1})) == P({3, -1}));
    CHECK(unit_normalized(P({1, -1, 1})) == P({1, -1, 1}));
    CHECK(unit_normalized(IntPolynomial()).is_zero());
}

TEST_CASE("identity verification") {
    // twist knot n = 3 carries Delta = -3 + 5t - 3t^2
    const IdentityReport k5 = verify_identity(twist_knot(3));
    CHECK(k5.exact);
    CHECK(k5.up_to_unit);

    CHECK(verify_identity(trefoil()).exact);

    // negative control: perturb the stored polynomial's constant term
    const KnotRecord rec = twist_knot(2);
    const IntPolynomial perturbed = *rec.alexander + IntPolynomial(1);
    const IdentityReport bad = verify_identity(rec.monodromy, perturbed);
    CHECK(!bad.exact);
    CHECK(!bad.up_to_unit);

    // a unit multiple t * Delta matches up to a unit but not exactly
    const IntPolynomial shifted = IntPolynomial::monomial(1, 1) * *rec.alexander;
    const IdentityReport unit_only = verify_identity(rec.monodromy, shifted);
    CHECK(!unit_only.exact);
    CHECK(unit_only.up_to_unit);

    CHECK_THROWS_AS(
        verify_identity(KnotRecord{"anon", trefoil().monodromy, std::nullopt,
                                   KnotRecord::Source::Builtin}),
        std::invalid_argument);
}

TEST_CASE("the recovered polynomial ties zeta and torsion together") {
    for (const KnotRecord& rec : builtin_catalog()) {
        const RationalFunction tau = torsion(rec.monodromy).rational;
        const RationalFunction z = zeta(rec.monodromy).rational;
        const IntPolynomial delta = alexander_recover(rec.monodromy).raw;
        CHECK(RationalFunction(delta, P({1, -1})) == tau * z);
    }
}

TEST_CASE("log-derivative of zeta generates the Lefschetz numbers") {
    for (const KnotRecord& rec : builtin_catalog()) {
        const ZetaResult z = zeta(rec.monodromy, 12);
        const RationalFunction log_deriv =
            RationalFunction(P({0, 1})) * derivative(z.rational) / z.rational;
        const TruncatedSeries s = series_of_ratfun(log_deriv, 12);
        for (std::size_t n = 1; n < 12; ++n) CHECK(s.coeff(n) == Rat(z.lefschetz[n - 1]));
    }
}

TEST_CASE("resolvent identity: G adj/det telescopes to matrix powers") {
    for (const KnotRecord& rec : {trefoil(), twist_knot(2)}) {
        const MonodromyMatrix& g = rec.monodromy;
        const std::size_t n = g.size();
        const auto [det, adj] = det_and_adjugate(identity_minus_t(g.entries()));

        PolyMatrix gp(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) gp(i, j) = IntPolynomial(g.entries()(i, j));
        const PolyMatrix num = gp * adj;
        Matrix<RationalFunction> resolvent(n, n), one_minus_tg(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                resolvent(i, j) = RationalFunction(num(i, j), det);
                one_minus_tg(i, j) = RationalFunction(identity_minus_t(g.entries())(i, j));
            }

        // sum G^{n+1} t^n entrywise, to order 10
        constexpr std::size_t order = 10;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                const TruncatedSeries s = series_of_ratfun(resolvent(i, j), order);
                for (std::size_t level = 0; level < order; ++level)
                    CHECK(s.coeff(level) == Rat(g.power(level + 1)(i, j)));
            }

        // and (I - tG) times the resolvent cancels back to G exactly
        const Matrix<RationalFunction> prod = one_minus_tg * resolvent;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                CHECK(prod(i, j) == RationalFunction(IntPolynomial(g.entries()(i, j))));
    }
}

TEST_CASE("invalid monodromy is rejected before computing invariants") {
    const MonodromyMatrix bad(1, 0, SurfaceKind::OncePunctured, rows({{1, 1}, {0, 2}}));
    CHECK_THROWS_AS(zeta(bad), std::invalid_argument);
    CHECK_THROWS_AS(torsion(bad), std::invalid_argument);
    CHECK_THROWS_AS(census(bad, 3), std::invalid_argument);
    CHECK_THROWS_AS(alexander_recover(bad), std::invalid_argument);
}

TEST_CASE("degenerate m = k inputs are permitted") {
    std::mt19937 rng(1618);
    for (int rep = 0; rep < 5; ++rep) {
        const std::size_t m = 2;
        const MonodromyMatrix g(m, m, SurfaceKind::OncePunctured,
                                selftest::random_symplectic(rng, m));
        REQUIRE(validate(g).ok());
        CHECK(torsion(g).series.all_integer());
        CHECK(zeta(g).series.all_integer());
    }
}
