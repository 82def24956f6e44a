#ifndef ZETATAU_POLYNOMIAL_HPP
#define ZETATAU_POLYNOMIAL_HPP

#include <zetatau/integer.hpp>

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace zetatau {

/// Degree reported for the zero polynomial (stands in for "minus infinity").
inline constexpr int kZeroDegree = -1;

/// Dense univariate polynomial over arbitrary-precision integers.
/// Coefficient i is the coefficient of t^i; the highest stored
/// coefficient is always nonzero (the zero polynomial stores nothing).
class IntPolynomial {
public:
    IntPolynomial() = default;
    IntPolynomial(long c) { if (c != 0) coeffs_.emplace_back(c); }
    IntPolynomial(Int c) { if (c != 0) coeffs_.push_back(std::move(c)); }

    /// Builds from ascending coefficients, stripping trailing zeros.
    static IntPolynomial from_coeffs(std::vector<Int> coeffs) {
        IntPolynomial p;
        p.coeffs_ = std::move(coeffs);
        p.strip();
        return p;
    }

    static IntPolynomial from_coeffs(std::initializer_list<long> coeffs) {
        std::vector<Int> c(coeffs.begin(), coeffs.end());
        return from_coeffs(std::move(c));
    }

    /// c * t^k
    static IntPolynomial monomial(Int c, std::size_t k) {
        IntPolynomial p;
        if (c != 0) {
            p.coeffs_.assign(k + 1, Int(0));
            p.coeffs_[k] = std::move(c);
        }
        return p;
    }

    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }

    int degree() const {
        return is_zero() ? kZeroDegree : static_cast<int>(coeffs_.size()) - 1;
    }

    const std::vector<Int>& coeffs() const { return coeffs_; }

    /// Coefficient of t^i (zero beyond the degree).
    Int coeff(std::size_t i) const {
        return i < coeffs_.size() ? coeffs_[i] : Int(0);
    }

    const Int& leading_coeff() const {
        if (is_zero()) throw std::domain_error("leading coefficient of zero polynomial");
        return coeffs_.back();
    }

    /// Index of the lowest nonzero coefficient.
    std::size_t valuation() const {
        if (is_zero()) throw std::domain_error("valuation of zero polynomial");
        std::size_t i = 0;
        while (coeffs_[i] == 0) ++i;
        return i;
    }

    const Int& lowest_coeff() const { return coeffs_[valuation()]; }

    /// gcd of all coefficients, as a non-negative integer (0 for the zero polynomial).
    Int content() const {
        Int g = 0;
        for (const Int& c : coeffs_) {
            g = zetatau::gcd(g, c);
            if (g == 1) break;
        }
        return g;
    }

    IntPolynomial primitive_part() const {
        if (is_zero()) return {};
        Int g = content();
        IntPolynomial p;
        p.coeffs_.reserve(coeffs_.size());
        for (const Int& c : coeffs_) p.coeffs_.push_back(c / g);
        return p;
    }

    Int eval(const Int& x) const {  // Horner
        Int acc = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    IntPolynomial derivative() const {
        IntPolynomial d;
        for (std::size_t i = 1; i < coeffs_.size(); ++i)
            d.coeffs_.push_back(coeffs_[i] * static_cast<long>(i));
        d.strip();
        return d;
    }

    friend IntPolynomial operator-(const IntPolynomial& p) {
        IntPolynomial r;
        r.coeffs_.reserve(p.coeffs_.size());
        for (const Int& c : p.coeffs_) r.coeffs_.push_back(-c);
        return r;
    }

    friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
        IntPolynomial r;
        r.coeffs_.resize(std::max(a.coeffs_.size(), b.coeffs_.size()), Int(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) r.coeffs_[i] = a.coeffs_[i];
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i) r.coeffs_[i] += b.coeffs_[i];
        r.strip();
        return r;
    }

    friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
        return a + (-b);
    }

    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        IntPolynomial r;
        r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Int(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return r;  // leading product of nonzero leads is nonzero over Z
    }

    friend IntPolynomial operator*(const Int& c, const IntPolynomial& p) {
        if (c == 0) return {};
        IntPolynomial r;
        r.coeffs_.reserve(p.coeffs_.size());
        for (const Int& pc : p.coeffs_) r.coeffs_.push_back(c * pc);
        return r;
    }

    IntPolynomial pow(unsigned long n) const {
        IntPolynomial acc(1), base = *this;
        while (n > 0) {
            if (n & 1) acc = acc * base;
            n >>= 1;
            if (n > 0) base = base * base;
        }
        return acc;
    }

    IntPolynomial& operator+=(const IntPolynomial& o) { return *this = *this + o; }
    IntPolynomial& operator-=(const IntPolynomial& o) { return *this = *this - o; }
    IntPolynomial& operator*=(const IntPolynomial& o) { return *this = *this * o; }

    friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) {
        return a.coeffs_ == b.coeffs_;
    }

private:
    void strip() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<Int> coeffs_;
};

/// Exact quotient a / b in Z[t]. Throws if b is zero or does not divide a
/// with an integer-coefficient quotient; never truncates.
inline IntPolynomial poly_divexact(const IntPolynomial& a, const IntPolynomial& b) {
    if (b.is_zero()) throw std::invalid_argument("division by zero polynomial");
    if (a.is_zero()) return {};
    if (a.degree() < b.degree()) throw std::domain_error("inexact division");

    const std::size_t da = static_cast<std::size_t>(a.degree());
    const std::size_t db = static_cast<std::size_t>(b.degree());
    const Int& lead = b.leading_coeff();

    std::vector<Int> rem = a.coeffs();
    std::vector<Int> quot(da - db + 1, Int(0));
    for (std::size_t i = da + 1; i-- > db;) {
        if (rem[i] == 0) continue;
        if (!mpz_divisible_p(rem[i].get_mpz_t(), lead.get_mpz_t()))
            throw std::domain_error("inexact division");
        Int q = rem[i] / lead;
        const std::size_t shift = i - db;
        for (std::size_t j = 0; j <= db; ++j) rem[shift + j] -= q * b.coeff(j);
        quot[shift] = std::move(q);
    }
    for (const Int& c : rem)
        if (c != 0) throw std::domain_error("inexact division");
    return IntPolynomial::from_coeffs(std::move(quot));
}

namespace detail {

// Pseudo-remainder: a rational multiple of (a mod b), kept in Z[t].
inline IntPolynomial pseudo_rem(IntPolynomial r, const IntPolynomial& b) {
    const Int& lb = b.leading_coeff();
    const int db = b.degree();
    while (!r.is_zero() && r.degree() >= db) {
        const std::size_t shift = static_cast<std::size_t>(r.degree() - db);
        IntPolynomial sub = r.leading_coeff() * IntPolynomial::monomial(1, shift) * b;
        r = lb * r - sub;
    }
    return r;
}

// Flips the sign so the lowest nonzero coefficient is positive.
inline IntPolynomial positive_lowest(IntPolynomial p) {
    if (!p.is_zero() && p.lowest_coeff() < 0) return -p;
    return p;
}

}  // namespace detail

/// Primitive gcd in Z[t], normalized to a positive lowest coefficient.
/// Divides both inputs exactly; gcd(0, 0) is undefined.
inline IntPolynomial poly_gcd(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() && b.is_zero())
        throw std::domain_error("gcd of two zero polynomials is undefined");
    IntPolynomial u = a.primitive_part();
    IntPolynomial v = b.primitive_part();
    if (u.degree() < v.degree()) std::swap(u, v);
    while (!v.is_zero()) {
        IntPolynomial r = detail::pseudo_rem(u, v).primitive_part();
        u = std::move(v);
        v = std::move(r);
    }
    return detail::positive_lowest(std::move(u));
}

/// Largest k with (1-t)^k dividing p; the cofactor q with p = (1-t)^k q
/// is returned through `cofactor`. p must be nonzero.
inline std::size_t split_one_minus_t(const IntPolynomial& p, IntPolynomial& cofactor) {
    const IntPolynomial one_minus_t = IntPolynomial::from_coeffs({1, -1});
    std::size_t k = 0;
    cofactor = p;
    while (!cofactor.is_zero() && cofactor.eval(1) == 0) {
        cofactor = poly_divexact(cofactor, one_minus_t);
        ++k;
    }
    return k;
}

/// Ascending-power rendering: "1 - t + t^2", "-2 + 3t - 2t^2", "0".
inline std::string to_string(const IntPolynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        const Int& c = p.coeffs()[i];
        if (c == 0) continue;
        const bool negative = c < 0;
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        Int mag = abs(c);
        if (mag != 1 || i == 0) out += to_string(mag);
        if (i == 1) out += "t";
        else if (i >= 2) out += "t^" + std::to_string(i);
    }
    return out;
}

/// Number of printed terms (nonzero coefficients).
inline std::size_t term_count(const IntPolynomial& p) {
    std::size_t n = 0;
    for (const Int& c : p.coeffs())
        if (c != 0) ++n;
    return n;
}

/// Like to_string, but renders +/-(1-t)^k in factored form as the catalog
/// formulas are usually written.
inline std::string pretty_string(const IntPolynomial& p) {
    if (!p.is_zero()) {
        IntPolynomial q;
        const std::size_t k = split_one_minus_t(p, q);
        if (k >= 1 && q.degree() == 0 && abs(q.coeff(0)) == 1) {
            const bool negative = q.coeff(0) < 0;
            if (k == 1) return negative ? "-(1 - t)" : "1 - t";
            return (negative ? "-(1 - t)^" : "(1 - t)^") + std::to_string(k);
        }
    }
    return to_string(p);
}

}  // namespace zetatau

#endif
