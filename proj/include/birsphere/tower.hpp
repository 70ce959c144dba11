#pragma once
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "birsphere/rational.hpp"

namespace bs {

// Registry of primes adjoined as square roots. A tower element is a rational
// combination of sqrt(p_S) where p_S is the product of the primes in the mask S.
// Indices are process-wide and guarded; values never depend on index order.
std::size_t tower_prime_index(const Z& p);
Z tower_prime(std::size_t index);
Z tower_radicand(std::uint64_t mask);

class TowerReal {
public:
    struct Term {
        std::uint64_t mask;
        Q c;
    };

    TowerReal() = default;
    TowerReal(long v) { if (v) terms_.push_back({0, Q(v)}); }
    TowerReal(const Q& q) {
        if (!sgn(q)) return;
        terms_.push_back({0, q});
        terms_.back().c.canonicalize();
    }

    // Terms sorted by mask with nonzero canonical coefficients.
    static TowerReal from_terms(std::vector<Term> terms) {
        TowerReal r;
        r.terms_ = std::move(terms);
        return r;
    }

    // sqrt(q) for a nonnegative rational q.
    static TowerReal sqrt_of(const Q& q);

    bool is_zero() const { return terms_.empty(); }
    bool is_rational() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mask == 0); }
    Q rational_value() const;  // requires is_rational()
    const std::vector<Term>& terms() const { return terms_; }
    std::uint64_t support() const;

    TowerReal operator-() const;
    TowerReal& operator+=(const TowerReal& o);
    TowerReal& operator-=(const TowerReal& o);
    TowerReal& operator*=(const TowerReal& o);
    TowerReal& operator/=(const TowerReal& o) { return *this *= o.inverse(); }
    friend TowerReal operator+(TowerReal a, const TowerReal& b) { return a += b; }
    friend TowerReal operator-(TowerReal a, const TowerReal& b) { return a -= b; }
    friend TowerReal operator*(const TowerReal& a, const TowerReal& b);
    friend TowerReal operator/(const TowerReal& a, const TowerReal& b) { return a * b.inverse(); }
    friend bool operator==(const TowerReal& a, const TowerReal& b);
    friend bool operator!=(const TowerReal& a, const TowerReal& b) { return !(a == b); }

    TowerReal inverse() const;
    // Exact sign, decided by interval refinement of the square roots.
    int sign() const;
    double to_double() const;
    // Rational interval [lo, hi] of width at most 2^-bits containing the value.
    void enclose(unsigned bits, Q& lo, Q& hi) const;
    // Image under the automorphism negating sqrt(p) for the primes in flip.
    TowerReal galois(std::uint64_t flip) const;
    std::string str() const;

private:
    std::vector<Term> terms_;  // sorted by mask, nonzero coefficients
    void add_term(std::uint64_t mask, const Q& c);
    void normalize();
};

inline bool is_zero(const TowerReal& x) { return x.is_zero(); }
inline int sign(const TowerReal& x) { return x.sign(); }
inline TowerReal conj(const TowerReal& x) { return x; }
inline std::string to_string(const TowerReal& x) { return x.str(); }
inline bool operator<(const TowerReal& a, const TowerReal& b) { return (a - b).sign() < 0; }
inline bool operator>(const TowerReal& a, const TowerReal& b) { return (a - b).sign() > 0; }

// Square root inside the multiquadratic tower (adjoining rational radicands
// as needed); empty when the value is negative or the root would be nested.
std::optional<TowerReal> tower_sqrt(const TowerReal& x);

// Distinct Galois conjugates of x (flips over the primes in its support).
std::vector<TowerReal> galois_orbit(const TowerReal& x);

}  // namespace bs
