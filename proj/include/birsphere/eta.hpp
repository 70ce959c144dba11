#pragma once
#include <optional>
#include <string>
#include <vector>

#include "birsphere/involution.hpp"

namespace bs {

// Class in R(z^2)* modulo norms f(z) f(-z): a sign and the set of b > 0
// with z^2 + b present to an odd power.
struct H2Class {
    int sign = 1;
    std::vector<RealAlgebraic> gens;  // increasing

    bool is_trivial() const { return sign == 1 && gens.empty(); }
    bool is_sign_only() const { return gens.empty(); }
    std::string str() const;
    friend bool operator==(const H2Class& a, const H2Class& b);
    friend bool operator!=(const H2Class& a, const H2Class& b) { return !(a == b); }
    friend H2Class operator*(const H2Class& a, const H2Class& b);
};

// mu with A eta(A) = mu * I on the pattern lift of A, for (A, z -> -z);
// empty when the product is not scalar. Throws DomainError NotReal when
// the pair fails the reality condition.
std::optional<RatFn> twisted_square(const ProjMat& a);

// Throws DomainError NotEvenFunction.
H2Class h2_reduce(const RatFn& mu);
// Throws DomainError NotInvolution.
H2Class h2_invariant(const SphereMap& g);
bool pair_conjugacy_bir(const SphereMap& g1, const SphereMap& g2);

// g with g(z) g(-z) = f for f even; throws UnsupportedExtension.
RatFn factor_even(const RatFn& f);

// A = B eta(B)^-1 for A = num / den with A eta(A) = 1: returns den * B.
// Throws DomainError NotNormOne when num eta(num) != den eta(den).
Mat2 h1_coboundary(const Mat2& num, const PolyC& den);

struct EtaReport {
    std::string family;  // "5", "8", "linear-stratum"
    H2Class invariant;
    bool real_fixed_points = false;
    bool undecided = false;
    std::optional<SphereMap> base_conjugator;
    std::vector<std::string> caveats;
};
// Involution with base action of order 2; the base is first reduced to z -> -z.
EtaReport classify_eta(const SphereMap& g);

// Real fixed points of (A, z -> -z): they lie on the fiber z = 0.
bool has_real_fixed_points(const ProjMat& a);

}  // namespace bs
