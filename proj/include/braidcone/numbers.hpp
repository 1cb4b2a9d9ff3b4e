#ifndef BRAIDCONE_NUMBERS_HPP
#define BRAIDCONE_NUMBERS_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

namespace braidcone {

// Every verdict produced here is discrete, so all arithmetic is exact:
// arbitrary-precision integers and rationals, no floating point.
using Int = mpz_class;
using Rat = mpq_class;

inline Int int_lcm(const Int& a, const Int& b) {
    Int r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

/// Least common multiple of the denominators of a rational vector
/// (the minimal positive d with d*v integral).
inline Int denominator_lcm(const std::vector<Rat>& v) {
    Int l = 1;
    for (const Rat& x : v) l = int_lcm(l, Int(x.get_den()));
    return l;
}

inline bool fits_int64(const Int& v) { return v.fits_slong_p(); }

inline std::string to_string(const Int& v) { return v.get_str(); }
inline std::string to_string(const Rat& v) { return v.get_str(); }

} // namespace braidcone

#endif
