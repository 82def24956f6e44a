#ifndef ZETATAU_SERIES_HPP
#define ZETATAU_SERIES_HPP

#include <zetatau/rational_function.hpp>

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace zetatau {

/// Formal power series over Q truncated at a fixed order: a series of
/// order N carries the coefficients of t^0 ... t^(N-1), all exact.
/// Binary arithmetic truncates to the smaller of the two orders.
class TruncatedSeries {
public:
    explicit TruncatedSeries(std::size_t order) : coeffs_(checked(order), Rat(0)) {}

    static TruncatedSeries from_coeffs(std::vector<Rat> coeffs) {
        TruncatedSeries s(coeffs.size());
        s.coeffs_ = std::move(coeffs);
        return s;
    }

    std::size_t order() const { return coeffs_.size(); }

    const Rat& coeff(std::size_t i) const { return coeffs_.at(i); }
    void set_coeff(std::size_t i, Rat v) { coeffs_.at(i) = std::move(v); }

    const std::vector<Rat>& coeffs() const { return coeffs_; }

    /// First `order` coefficients as a shorter series.
    TruncatedSeries truncated(std::size_t order) const {
        if (order > coeffs_.size())
            throw std::invalid_argument("cannot extend a truncated series");
        TruncatedSeries s(order);
        std::copy_n(coeffs_.begin(), order, s.coeffs_.begin());
        return s;
    }

    bool all_integer() const {
        for (const Rat& c : coeffs_)
            if (!is_integer(c)) return false;
        return true;
    }

    friend TruncatedSeries operator-(const TruncatedSeries& s) {
        TruncatedSeries r(s.order());
        for (std::size_t i = 0; i < s.order(); ++i) r.coeffs_[i] = -s.coeffs_[i];
        return r;
    }

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
        TruncatedSeries r(std::min(a.order(), b.order()));
        for (std::size_t i = 0; i < r.order(); ++i) r.coeffs_[i] = a.coeffs_[i] + b.coeffs_[i];
        return r;
    }

    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
        return a + (-b);
    }

    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        TruncatedSeries r(std::min(a.order(), b.order()));
        for (std::size_t i = 0; i < r.order(); ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; i + j < r.order(); ++j)
                r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return r;
    }

    TruncatedSeries& operator+=(const TruncatedSeries& o) { return *this = *this + o; }
    TruncatedSeries& operator-=(const TruncatedSeries& o) { return *this = *this - o; }
    TruncatedSeries& operator*=(const TruncatedSeries& o) { return *this = *this * o; }

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
        return a.coeffs_ == b.coeffs_;
    }

private:
    static std::size_t checked(std::size_t order) {
        if (order == 0) throw std::invalid_argument("series order must be positive");
        return order;
    }

    std::vector<Rat> coeffs_;
};

/// Index of the first coefficient where the two series differ, or -1 if they
/// agree on the first `upto` coefficients (both must extend that far).
inline long first_disagreement(const TruncatedSeries& a, const TruncatedSeries& b,
                               std::size_t upto) {
    for (std::size_t i = 0; i < upto; ++i)
        if (a.coeff(i) != b.coeff(i)) return static_cast<long>(i);
    return -1;
}

/// Taylor expansion of r at t = 0 to the requested order. The denominator
/// must not vanish at the origin.
inline TruncatedSeries series_of_ratfun(const RationalFunction& r, std::size_t order) {
    const IntPolynomial& num = r.num();
    const IntPolynomial& den = r.den();
    if (den.coeff(0) == 0) throw std::domain_error("pole at origin");
    const Rat d0{den.coeff(0)};
    TruncatedSeries s(order);
    for (std::size_t n = 0; n < order; ++n) {
        Rat acc{num.coeff(n)};
        const std::size_t kmax = std::min<std::size_t>(n, static_cast<std::size_t>(den.degree()));
        for (std::size_t k = 1; k <= kmax; ++k) acc -= Rat(den.coeff(k)) * s.coeff(n - k);
        s.set_coeff(n, acc / d0);
    }
    return s;
}

/// Formal exponential; the argument must have zero constant term.
inline TruncatedSeries series_exp(const TruncatedSeries& a) {
    if (a.coeff(0) != 0) throw std::domain_error("exp requires zero constant term");
    const std::size_t n = a.order();
    TruncatedSeries b(n);
    b.set_coeff(0, Rat(1));
    for (std::size_t m = 1; m < n; ++m) {
        Rat acc(0);
        for (std::size_t k = 1; k <= m; ++k)
            acc += Rat(static_cast<long>(k)) * a.coeff(k) * b.coeff(m - k);
        b.set_coeff(m, acc / Rat(static_cast<long>(m)));
    }
    return b;
}

/// Formal logarithm; the argument must have constant term 1.
inline TruncatedSeries series_log(const TruncatedSeries& a) {
    if (a.coeff(0) != 1) throw std::domain_error("log requires constant term 1");
    const std::size_t n = a.order();
    TruncatedSeries c(n);
    for (std::size_t m = 1; m < n; ++m) {
        Rat acc{a.coeff(m)};
        for (std::size_t k = 1; k < m; ++k)
            acc -= Rat(static_cast<long>(k)) * c.coeff(k) * a.coeff(m - k) /
                   Rat(static_cast<long>(m));
        c.set_coeff(m, acc);
    }
    return c;
}

inline std::string to_string(const TruncatedSeries& s) {
    std::string out = "[";
    for (std::size_t i = 0; i < s.order(); ++i) {
        if (i > 0) out += ", ";
        out += to_string(s.coeff(i));
    }
    out += "]";
    return out;
}

}  // namespace zetatau

#endif
