#ifndef ZETATAU_RATIONAL_FUNCTION_HPP
#define ZETATAU_RATIONAL_FUNCTION_HPP

#include <zetatau/polynomial.hpp>

#include <stdexcept>
#include <string>
#include <utility>

namespace zetatau {

/// Reduced fraction of integer polynomials, the canonical carrier for the
/// closed-form invariants. Canonical form:
///   - numerator and denominator share no polynomial factor (gcd over Q[t]
///     is constant) and no integer content,
///   - the lowest nonzero coefficient of the denominator is positive,
///   - zero is stored as 0/1.
/// This makes printed forms like (19 - 37t + 19t^2)/(1 - t)^6 the unique
/// representation, so results compare bit-exactly.
class RationalFunction {
public:
    RationalFunction() : num_(), den_(1) {}
    RationalFunction(IntPolynomial p) : num_(std::move(p)), den_(1) {}
    RationalFunction(long c) : num_(c), den_(1) {}

    RationalFunction(IntPolynomial num, IntPolynomial den)
        : num_(std::move(num)), den_(std::move(den)) {
        normalize();
    }

    const IntPolynomial& num() const { return num_; }
    const IntPolynomial& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }

    friend RationalFunction operator-(const RationalFunction& r) {
        RationalFunction out;
        out.num_ = -r.num_;
        out.den_ = r.den_;
        return out;
    }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }

    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
        return a + (-b);
    }

    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
    }

    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        if (b.is_zero()) throw std::domain_error("division by zero rational function");
        return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
    }

    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

private:
    void normalize() {
        if (den_.is_zero()) throw std::invalid_argument("division by zero");
        if (num_.is_zero()) {
            den_ = IntPolynomial(1);
            return;
        }
        IntPolynomial g = poly_gcd(num_, den_);
        if (g.degree() > 0 || g.coeff(0) != 1) {
            num_ = poly_divexact(num_, g);
            den_ = poly_divexact(den_, g);
        }
        Int c = zetatau::gcd(num_.content(), den_.content());
        if (c != 1) {
            IntPolynomial cp(c);
            num_ = poly_divexact(num_, cp);
            den_ = poly_divexact(den_, cp);
        }
        if (den_.lowest_coeff() < 0) {
            num_ = -num_;
            den_ = -den_;
        }
    }

    IntPolynomial num_;
    IntPolynomial den_;
};

inline RationalFunction derivative(const RationalFunction& r) {
    return RationalFunction(r.num().derivative() * r.den() - r.num() * r.den().derivative(),
                            r.den() * r.den());
}

inline std::string to_string(const RationalFunction& r) {
    if (r.is_polynomial()) return pretty_string(r.num());

    std::string num_str = to_string(r.num());
    if (term_count(r.num()) >= 2) num_str = "(" + num_str + ")";

    std::string den_str = pretty_string(r.den());
    if (den_str == "1 - t") den_str = "(1 - t)";
    else if (den_str.rfind("(1 - t)^", 0) != 0 && term_count(r.den()) >= 2)
        den_str = "(" + to_string(r.den()) + ")";

    return num_str + "/" + den_str;
}

}  // namespace zetatau

#endif
