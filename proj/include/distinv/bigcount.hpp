#ifndef DISTINV_BIGCOUNT_HPP
#define DISTINV_BIGCOUNT_HPP

#include <boost/multiprecision/cpp_int.hpp>

namespace distinv {

// Exact unbounded counts. Binomial powers overflow 64 bits at modest sizes,
// so every counting path works in cpp_int end to end.
using Count = boost::multiprecision::cpp_int;

// C(n, k); zero for k < 0, n < 0 or k > n.
inline Count binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Count r = 1;
    for (long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

inline Count ipow(Count base, unsigned long exp) {
    Count r = 1;
    while (exp > 0) {
        if (exp & 1) r *= base;
        base *= base;
        exp >>= 1;
    }
    return r;
}

} // namespace distinv

#endif
