#pragma once
#include <string>

#include "birsphere/poly.hpp"

namespace bs {

// num/den with gcd 1 and monic denominator.
class RatFn {
public:
    RatFn() : num_(), den_(CoeffScalar(1)) {}
    RatFn(const PolyC& p) : num_(p), den_(CoeffScalar(1)) {}
    RatFn(const CoeffScalar& c) : num_(c), den_(CoeffScalar(1)) {}
    RatFn(long v) : num_(CoeffScalar(v)), den_(CoeffScalar(1)) {}
    RatFn(const PolyC& n, const PolyC& d);

    const PolyC& num() const { return num_; }
    const PolyC& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }
    bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }

    RatFn operator-() const { return RatFn(-num_, den_); }
    friend RatFn operator+(const RatFn& a, const RatFn& b) {
        return RatFn(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFn operator-(const RatFn& a, const RatFn& b) { return a + (-b); }
    friend RatFn operator*(const RatFn& a, const RatFn& b) {
        return RatFn(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFn operator/(const RatFn& a, const RatFn& b) {
        if (b.is_zero()) throw DomainError("DivisionByZero", "rational function division by zero");
        return RatFn(a.num_ * b.den_, a.den_ * b.num_);
    }
    friend bool operator==(const RatFn& a, const RatFn& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend bool operator!=(const RatFn& a, const RatFn& b) { return !(a == b); }

    RatFn conj() const { return RatFn(num_.conj(), den_.conj()); }
    RatFn eta() const { return RatFn(num_.eta(), den_.eta()); }
    std::string str() const;

private:
    PolyC num_, den_;
};

}  // namespace bs
