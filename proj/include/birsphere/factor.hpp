#pragma once
#include <complex>
#include <utility>
#include <vector>

#include "birsphere/poly.hpp"

namespace bs {

// Numerical roots (Durand-Kerner with Newton polish); guidance only.
std::vector<std::complex<long double>> approx_roots(const PolyQ& p);

// Irreducible factors over Q, primitive with positive leading coefficient,
// paired with multiplicities. Candidate factors come from numerical root
// subsets and are accepted only after exact division.
std::vector<std::pair<PolyQ, int>> factor_rational(const PolyQ& p);

// Factors of a square-free tower polynomial obtained by splitting along the
// rational factors of its norm; monic, pairwise coprime, product = p / lc(p).
std::vector<PolyT> factor_tower(const PolyT& p);

}  // namespace bs
