#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <zetatau/catalog.hpp>

#include <sstream>

using namespace zetatau;

namespace {
IntPolynomial P(std::initializer_list<long> coeffs) { return IntPolynomial::from_coeffs(coeffs); }

KnotRecord loads(const std::string& text) {
    std::istringstream in(text);
    return load(in, "<test>");
}
}  // namespace

TEST_CASE("builtin records") {
    const KnotRecord t = trefoil();
    CHECK(t.monodromy.genus() == 1);
    CHECK(t.monodromy.handles() == 0);
    CHECK(t.monodromy.entries()(0, 1) == 1);
    CHECK(t.monodromy.entries()(1, 0) == -1);
    CHECK(*t.alexander == P({1, -1, 1}));

    const KnotRecord k3 = twist_knot(2);
    CHECK(k3.name == "twist-3");
    CHECK(k3.monodromy.entries()(0, 2) == -2);
    CHECK(*twist_knot(3).alexander == P({-3, 5, -3}));

    const KnotRecord p = pretzel_555();
    CHECK(p.monodromy.genus() == 3);
    CHECK(p.monodromy.handles() == 2);
    CHECK(*p.alexander == P({19, -37, 19}));

    CHECK_THROWS_AS(twist_knot(1), std::invalid_argument);
    CHECK_THROWS_AS(twist_knot(-4), std::invalid_argument);
}

TEST_CASE("every builtin validates and verifies") {
    for (const KnotRecord& rec : builtin_catalog()) {
        CHECK(validate(rec.monodromy).ok());
        REQUIRE(rec.alexander.has_value());
        CHECK(verify_identity(rec).exact);
    }
}

TEST_CASE("save/load round trip") {
    for (const KnotRecord& rec : builtin_catalog()) {
        std::stringstream buffer;
        save(buffer, rec);
        const KnotRecord back = load(buffer, rec.name);
        CHECK(back.name == rec.name);
        CHECK(back.monodromy == rec.monodromy);
        CHECK(back.alexander == rec.alexander);
        CHECK(back.source == KnotRecord::Source::File);
    }
}

TEST_CASE("loading a hand-written document") {
    const KnotRecord rec = loads(R"({
        "name": "trefoil-by-hand",
        "genus": 1,
        "handles": 0,
        "surface": "punctured",
        "matrix": [[0, 1], [-1, 1]],
        "alexander": [1, -1, 1]
    })");
    CHECK(rec.monodromy == trefoil().monodromy);
    CHECK(*rec.alexander == *trefoil().alexander);
    CHECK(rec.source == KnotRecord::Source::File);

    // alexander is optional
    const KnotRecord bare = loads(R"({
        "name": "bare",
        "genus": 1,
        "handles": 0,
        "surface": "punctured",
        "matrix": [[0, 1], [-1, 1]]
    })");
    CHECK(!bare.alexander.has_value());
}

TEST_CASE("huge integers ride through as strings") {
    const std::string big = "123456789012345678901234567890";
    const KnotRecord rec = loads(R"({
        "name": "big",
        "genus": 1,
        "handles": 0,
        "surface": "punctured",
        "matrix": [["1", 0], [0, "1"]],
        "alexander": [")" + big + R"("]
    })");
    CHECK(rec.alexander->coeff(0) == Int(big, 10));

    std::stringstream buffer;
    save(buffer, rec);
    CHECK(buffer.str().find(big) != std::string::npos);  // emitted as a string, not a float
    const KnotRecord back = load(buffer);
    CHECK(*back.alexander == *rec.alexander);
}

TEST_CASE("structural rejections") {
    CHECK_THROWS_WITH_AS(loads(R"({
        "name": "odd",
        "genus": 1,
        "handles": 0,
        "surface": "punctured",
        "matrix": [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    })"),
                         "<test>: matrix size must be even", LoadError);

    CHECK_THROWS_AS(loads(R"({
        "name": "mismatch",
        "genus": 2,
        "handles": 0,
        "surface": "punctured",
        "matrix": [[1, 0], [0, 1]]
    })"),
                    LoadError);

    CHECK_THROWS_AS(loads(R"({
        "name": "ragged",
        "genus": 1,
        "handles": 0,
        "surface": "punctured",
        "matrix": [[1, 0], [0]]
    })"),
                    LoadError);

    CHECK_THROWS_AS(loads(R"({
        "name": "no-surface",
        "genus": 1,
        "handles": 0,
        "surface": "moebius",
        "matrix": [[1, 0], [0, 1]]
    })"),
                    LoadError);

    CHECK_THROWS_AS(loads(R"({"name": "missing-everything"})"), LoadError);
    CHECK_THROWS_AS(loads(R"([1, 2, 3])"), LoadError);
}

TEST_CASE("validation failures abort the load with the itemized report") {
    try {
        loads(R"({
            "name": "not-symplectic",
            "genus": 1,
            "handles": 0,
            "surface": "punctured",
            "matrix": [[1, 1], [0, 2]]
        })");
        FAIL("expected LoadError");
    } catch (const LoadError& e) {
        const std::string what = e.what();
        CHECK(what.find("symplectic") != std::string::npos);
        CHECK(what.find("entry (") != std::string::npos);    // names the violated entry
        CHECK(what.find("determinant") != std::string::npos);
    }
}

TEST_CASE("parse errors carry position information") {
    try {
        loads("{ \"name\": \"broken\", ");
        FAIL("expected LoadError");
    } catch (const LoadError& e) {
        const std::string what = e.what();
        CHECK(what.find("<test>") != std::string::npos);
        CHECK(what.find("parse error") != std::string::npos);
    }
    CHECK_THROWS_AS(load_file("/nonexistent/knot.json"), LoadError);
}
