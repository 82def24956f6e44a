#ifndef ZETATAU_INTEGER_HPP
#define ZETATAU_INTEGER_HPP

#include <gmpxx.h>

#include <string>

namespace zetatau {

// Exact scalars. Everything in the library is computed over these;
// no floating point anywhere.
using Int = mpz_class;
using Rat = mpq_class;

inline Int gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

/// Reduced fraction from a raw numerator/denominator pair.
inline Rat make_rat(long num, long den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline std::string to_string(const Int& a) { return a.get_str(); }

inline std::string to_string(const Rat& q) {
    if (is_integer(q)) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace zetatau

#endif
