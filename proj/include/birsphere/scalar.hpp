#pragma once
#include <optional>
#include <string>

#include "birsphere/tower.hpp"

namespace bs {

// re + i*im with both parts in the real tower.
class CoeffScalar {
public:
    TowerReal re, im;

    CoeffScalar() = default;
    CoeffScalar(long v) : re(v) {}
    CoeffScalar(const Q& q) : re(q) {}
    CoeffScalar(const TowerReal& r) : re(r) {}
    CoeffScalar(const TowerReal& r, const TowerReal& i) : re(r), im(i) {}
    static CoeffScalar I() { return CoeffScalar(TowerReal(0), TowerReal(1)); }

    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    bool is_real() const { return im.is_zero(); }
    bool is_rational() const { return im.is_zero() && re.is_rational(); }
    bool in_gaussian_rationals() const { return re.is_rational() && im.is_rational(); }

    CoeffScalar conj() const { return {re, -im}; }
    TowerReal norm() const { return re * re + im * im; }
    CoeffScalar inverse() const;

    CoeffScalar operator-() const { return {-re, -im}; }
    CoeffScalar& operator+=(const CoeffScalar& o) { re += o.re; im += o.im; return *this; }
    CoeffScalar& operator-=(const CoeffScalar& o) { re -= o.re; im -= o.im; return *this; }
    CoeffScalar& operator*=(const CoeffScalar& o);
    CoeffScalar& operator/=(const CoeffScalar& o) { return *this *= o.inverse(); }
    friend CoeffScalar operator+(CoeffScalar a, const CoeffScalar& b) { return a += b; }
    friend CoeffScalar operator-(CoeffScalar a, const CoeffScalar& b) { return a -= b; }
    friend CoeffScalar operator*(CoeffScalar a, const CoeffScalar& b) { return a *= b; }
    friend CoeffScalar operator/(CoeffScalar a, const CoeffScalar& b) { return a *= b.inverse(); }
    friend bool operator==(const CoeffScalar& a, const CoeffScalar& b) { return a.re == b.re && a.im == b.im; }
    friend bool operator!=(const CoeffScalar& a, const CoeffScalar& b) { return !(a == b); }

    std::string str() const;
    // Parenthesized when it is a sum, for use as a coefficient.
    std::string coeff_str() const;
};

inline bool is_zero(const CoeffScalar& x) { return x.is_zero(); }
inline CoeffScalar conj(const CoeffScalar& x) { return x.conj(); }
inline std::string to_string(const CoeffScalar& x) { return x.str(); }
// Sign of a real scalar; throws for non-real input.
int sign(const CoeffScalar& x);

// Principal square root inside the tower extended by i, when representable.
std::optional<CoeffScalar> scalar_sqrt(const CoeffScalar& x);

// e^{2 pi i k / n} for n in {1,2,3,4,6,8,12}; throws UnsupportedExtension otherwise.
CoeffScalar root_of_unity(int k, int n);

}  // namespace bs
