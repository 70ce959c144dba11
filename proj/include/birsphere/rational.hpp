#pragma once
#include <gmpxx.h>

#include <string>
#include <vector>

namespace bs {

using Q = mpq_class;
using Z = mpz_class;

inline int sign(const Q& q) { return sgn(q); }
inline bool is_zero(const Q& q) { return sgn(q) == 0; }
inline Q conj(const Q& q) { return q; }

std::string to_string(const Q& q);
Q parse_rational(const std::string& s);

// Exact square root of a nonnegative rational when it is a perfect square.
bool rational_sqrt(const Q& q, Q& root);

// n = s^2 * r with r square-free; primes of r listed in increasing order.
// Throws UnsupportedExtension when a large cofactor cannot be split.
struct SquareFreeSplit {
    Z square_root;
    Z radicand;
    std::vector<Z> primes;
};
SquareFreeSplit split_square_free(const Z& n);

double to_double(const Q& q);

}  // namespace bs
