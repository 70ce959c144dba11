#pragma once
#include "birsphere/poly.hpp"

namespace bs {

// True iff p is real, has no real root and is positive somewhere.
// Throws DomainError NotRealPolynomial for non-real input.
bool is_real_positive(const PolyC& p);
bool is_real_positive(const PolyT& p);

// Product of the distinct irreducible factors, monic up to the sign of lc(p).
PolyC square_free_part(const PolyC& p);

// Product of the factors of odd multiplicity, monic: the square class of p
// up to a constant.
PolyT odd_part(const PolyT& p);

// p with p * conj(p) = f for f real positive; roots of p are the roots of f
// in the lower half plane, times sqrt(lc f).
PolyC norm_factor(const PolyC& f);

struct QuadraticDecomp {
    PolyT a;
    TowerReal c;
};
// f = a^2 + c (z^2 - 1) with 0 < c <= 1, for monic positive f of degree 2.
QuadraticDecomp quadratic_decomp(const PolyC& f);

struct VDecomp {
    PolyT a;
    PolyT P;
};
// f = a^2 + P (z^2 - 1) with P real positive.
VDecomp v_decomp(const PolyC& f);

// Real irreducible factors of degree at most 2 of a square-free real polynomial
// with no real roots, monic; throws UnsupportedExtension when a factor leaves the tower.
std::vector<PolyT> real_quadratic_factors(const PolyT& f);

}  // namespace bs
