#pragma once
#include <optional>
#include <utility>
#include <vector>

#include "birsphere/poly.hpp"

namespace bs {

// Interval endpoint; nullopt stands for -inf on the left and +inf on the right.
using Endpoint = std::optional<Q>;

// Signed remainder sequence p, p', -rem(...), each scaled by a positive constant.
std::vector<PolyT> sturm_sequence(const PolyT& p);

// Number of distinct real roots of p in the open interval (lo, hi).
int sturm_count(const PolyT& p, const Endpoint& lo, const Endpoint& hi);
int sturm_count(const PolyQ& p, const Endpoint& lo, const Endpoint& hi);

// Sign of p at a rational point, exact.
int sign_at(const PolyT& p, const Q& x);

// Rational bound B with every real root in (-B, B).
Q root_bound(const PolyT& p);

// Disjoint isolating intervals for the distinct roots of p in (lo, hi), in
// increasing order. An interval (a, a) denotes the exact rational root a;
// otherwise the root lies in the open interval (a, b).
std::vector<std::pair<Q, Q>> isolate_roots(const PolyT& p, const Endpoint& lo, const Endpoint& hi);

// Shrink an isolating interval of a root of p to width at most w.
void refine_root(const PolyT& p, std::pair<Q, Q>& iv, const Q& w);

// Sign of q at the unique root of square-free p inside the isolating interval.
int sign_at_root(const PolyT& q, const PolyT& p, std::pair<Q, Q> iv);

}  // namespace bs
