#ifndef ZETATAU_CATALOG_HPP
#define ZETATAU_CATALOG_HPP

#include <zetatau/invariants.hpp>

#include <json.hpp>

#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace zetatau {

/// A named monodromy datum, optionally with the knot's known Alexander
/// polynomial for verification.
struct KnotRecord {
    enum class Source { Builtin, File };

    std::string name;
    MonodromyMatrix monodromy;
    std::optional<IntPolynomial> alexander;
    Source source = Source::Builtin;
};

class LoadError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

inline IntMatrix int_matrix_from_rows(const std::vector<std::vector<long>>& rows) {
    IntMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
    return m;
}

}  // namespace detail

/// Trefoil knot: fibred, genus-1 once-punctured fiber, no handles.
inline KnotRecord trefoil() {
    return {"trefoil",
            MonodromyMatrix(1, 0, SurfaceKind::OncePunctured,
                            detail::int_matrix_from_rows({{0, 1}, {-1, 1}})),
            IntPolynomial::from_coeffs({1, -1, 1}),
            KnotRecord::Source::Builtin};
}

/// Twist knot with 2n-1 half twists (n >= 2; n = 1 is the fibred trefoil,
/// served by trefoil()). Genus-2 splitting surface with one handle pair.
inline KnotRecord twist_knot(long n) {
    if (n < 2)
        throw std::invalid_argument("twist knot parameter must be >= 2 (n = 1 is the trefoil)");
    return {"twist-" + std::to_string(2 * n - 1),
            MonodromyMatrix(2, 1, SurfaceKind::OncePunctured,
                            detail::int_matrix_from_rows({{1, 1, -n, -1},
                                                          {0, 1, -1, 0},
                                                          {0, 0, 1, 0},
                                                          {0, -1, 0, 1}})),
            IntPolynomial::from_coeffs({Int(-n), Int(2 * n - 1), Int(-n)}),
            KnotRecord::Source::Builtin};
}

/// Pretzel knot of type (5,5,5): genus-3 splitting surface, two handle pairs.
inline KnotRecord pretzel_555() {
    return {"pretzel-555",
            MonodromyMatrix(3, 2, SurfaceKind::OncePunctured,
                            detail::int_matrix_from_rows({{1, 0, 1, -5, -2, 0},
                                                          {0, 1, 0, -3, -5, 1},
                                                          {0, 0, 1, 0, 1, 0},
                                                          {0, 0, 0, 1, 0, 0},
                                                          {0, 0, 0, 0, 1, 0},
                                                          {0, 0, 0, -1, 0, 1}})),
            IntPolynomial::from_coeffs({19, -37, 19}),
            KnotRecord::Source::Builtin};
}

/// All builtin records, twist knots instantiated for n = 2..10.
inline std::vector<KnotRecord> builtin_catalog() {
    std::vector<KnotRecord> out;
    out.push_back(trefoil());
    for (long n = 2; n <= 10; ++n) out.push_back(twist_knot(n));
    out.push_back(pretzel_555());
    return out;
}

namespace detail {

inline Int json_to_int(const nlohmann::json& j, const std::string& where) {
    if (j.is_number_integer()) return Int(static_cast<long>(j.get<long long>()));
    if (j.is_string()) {
        try {
            return Int(j.get<std::string>(), 10);
        } catch (const std::invalid_argument&) {
            throw LoadError(where + ": '" + j.get<std::string>() + "' is not an integer");
        }
    }
    throw LoadError(where + ": expected an integer (number or decimal string)");
}

inline nlohmann::json int_to_json(const Int& v) {
    if (v.fits_slong_p()) return v.get_si();
    return v.get_str();
}

}  // namespace detail

/// Parses a knot document. Field names are fixed: name, genus, handles,
/// surface ("punctured" | "closed"), matrix (2m rows of 2m integers, row i
/// the image of the i-th basis element), alexander (optional ascending
/// coefficient list). The record is validated before it is returned; a
/// failed validation aborts the load with the itemized report.
inline KnotRecord load(std::istream& in, const std::string& source_name = "<stream>") {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw LoadError(source_name + ": " + e.what());
    }
    if (!doc.is_object()) throw LoadError(source_name + ": document must be an object");

    for (const char* key : {"name", "genus", "handles", "surface", "matrix"})
        if (!doc.contains(key))
            throw LoadError(source_name + ": missing required field '" + key + "'");

    const std::string name = doc["name"].is_string()
                                 ? doc["name"].get<std::string>()
                                 : throw LoadError(source_name + ": 'name' must be a string");

    const Int genus_i = detail::json_to_int(doc["genus"], source_name + ": genus");
    const Int handles_i = detail::json_to_int(doc["handles"], source_name + ": handles");
    if (genus_i < 1) throw LoadError(source_name + ": genus must be positive");
    if (handles_i < 0) throw LoadError(source_name + ": handles must be non-negative");
    if (!genus_i.fits_ulong_p() || !handles_i.fits_ulong_p())
        throw LoadError(source_name + ": genus/handles out of range");
    const auto genus = static_cast<std::size_t>(genus_i.get_ui());
    const auto handles = static_cast<std::size_t>(handles_i.get_ui());

    SurfaceKind kind;
    const std::string surface = doc["surface"].is_string() ? doc["surface"].get<std::string>() : "";
    if (surface == "punctured") kind = SurfaceKind::OncePunctured;
    else if (surface == "closed") kind = SurfaceKind::Closed;
    else throw LoadError(source_name + ": 'surface' must be \"punctured\" or \"closed\"");

    const nlohmann::json& rows = doc["matrix"];
    if (!rows.is_array() || rows.empty())
        throw LoadError(source_name + ": 'matrix' must be a non-empty array of rows");
    const std::size_t n = rows.size();
    if (n % 2 != 0) throw LoadError(source_name + ": matrix size must be even");
    IntMatrix entries(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!rows[i].is_array() || rows[i].size() != n)
            throw LoadError(source_name + ": matrix row " + std::to_string(i + 1) + " must have " +
                            std::to_string(n) + " entries");
        for (std::size_t j = 0; j < n; ++j)
            entries(i, j) = detail::json_to_int(
                rows[i][j], source_name + ": matrix entry (" + std::to_string(i + 1) + "," +
                                std::to_string(j + 1) + ")");
    }

    std::optional<IntPolynomial> alexander;
    if (doc.contains("alexander")) {
        if (!doc["alexander"].is_array())
            throw LoadError(source_name + ": 'alexander' must be a coefficient array");
        std::vector<Int> coeffs;
        for (std::size_t i = 0; i < doc["alexander"].size(); ++i)
            coeffs.push_back(detail::json_to_int(
                doc["alexander"][i], source_name + ": alexander coefficient " + std::to_string(i)));
        alexander = IntPolynomial::from_coeffs(std::move(coeffs));
    }

    KnotRecord record{name,
                      [&] {
                          try {
                              return MonodromyMatrix(genus, handles, kind, std::move(entries));
                          } catch (const std::invalid_argument& e) {
                              throw LoadError(source_name + ": " + e.what());
                          }
                      }(),
                      std::move(alexander),
                      KnotRecord::Source::File};

    const ValidationReport report = validate(record.monodromy);
    if (!report.ok())
        throw LoadError(source_name + ": monodromy validation failed\n" + report.summary());
    return record;
}

inline KnotRecord load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw LoadError(path + ": cannot open file");
    return load(in, path);
}

inline nlohmann::json to_json_document(const KnotRecord& record) {
    nlohmann::json doc;
    doc["name"] = record.name;
    doc["genus"] = record.monodromy.genus();
    doc["handles"] = record.monodromy.handles();
    doc["surface"] = to_string(record.monodromy.kind());
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < record.monodromy.size(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < record.monodromy.size(); ++j)
            row.push_back(detail::int_to_json(record.monodromy.entries()(i, j)));
        rows.push_back(std::move(row));
    }
    doc["matrix"] = std::move(rows);
    if (record.alexander) {
        nlohmann::json coeffs = nlohmann::json::array();
        for (const Int& c : record.alexander->coeffs())
            coeffs.push_back(detail::int_to_json(c));
        doc["alexander"] = std::move(coeffs);
    }
    return doc;
}

inline void save(std::ostream& out, const KnotRecord& record) {
    out << to_json_document(record).dump(2) << "\n";
}

/// Verification against the record's stored Alexander polynomial.
inline IdentityReport verify_identity(const KnotRecord& record,
                                      std::size_t order = kDefaultOrder) {
    if (!record.alexander)
        throw std::invalid_argument("record '" + record.name +
                                    "' carries no stored Alexander polynomial");
    return verify_identity(record.monodromy, *record.alexander, order);
}

}  // namespace zetatau

#endif
