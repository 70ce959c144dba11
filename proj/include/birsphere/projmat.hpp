#pragma once
#include <array>
#include <optional>
#include <string>

#include "birsphere/ratfn.hpp"

namespace bs {

// A 2x2 polynomial matrix [[a, b], [c, d]] taken literally (a lift).
struct Mat2 {
    PolyC a, b, c, d;

    static Mat2 identity() { return {PolyC(1), PolyC(), PolyC(), PolyC(1)}; }
    static Mat2 diag(const PolyC& p, const PolyC& q) { return {p, PolyC(), PolyC(), q}; }

    PolyC det() const { return a * d - b * c; }
    PolyC trace() const { return a + d; }
    Mat2 adj() const { return {d, -b, -c, a}; }
    Mat2 conj() const { return {a.conj(), b.conj(), c.conj(), d.conj()}; }
    Mat2 eta() const { return {a.eta(), b.eta(), c.eta(), d.eta()}; }
    Mat2 scaled(const PolyC& s) const { return {a * s, b * s, c * s, d * s}; }
    // Entries p(m(z)) times (g z + dd)^n, m = (al z + be)/(g z + dd), n = max degree.
    Mat2 subst(const CoeffScalar& al, const CoeffScalar& be, const CoeffScalar& g, const CoeffScalar& dd) const;
    bool is_zero() const { return a.is_zero() && b.is_zero() && c.is_zero() && d.is_zero(); }
    bool is_scalar() const { return b.is_zero() && c.is_zero() && a == d; }
    int max_degree() const;
    // The 2x2 matrix of values at z0.
    std::array<CoeffScalar, 4> at(const CoeffScalar& z0) const;

    friend Mat2 operator*(const Mat2& x, const Mat2& y) {
        return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
    }
    friend Mat2 operator+(const Mat2& x, const Mat2& y) { return {x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d}; }
    friend bool operator==(const Mat2& x, const Mat2& y) {
        return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
    }
    std::string str() const;
};

// Equal up to a nonzero function-field scalar.
bool proportional(const Mat2& x, const Mat2& y);
// x = s * y with s a polynomial; returns s when it exists.
std::optional<PolyC> scalar_ratio(const Mat2& x, const Mat2& y);

// An element of PGL2 over C(z), stored in canonical form: entries without a
// common factor and the first nonzero entry (row-major) with leading coefficient 1.
class ProjMat {
public:
    ProjMat() : m_(Mat2::identity()) {}
    explicit ProjMat(const Mat2& m);
    ProjMat(const PolyC& a, const PolyC& b, const PolyC& c, const PolyC& d) : ProjMat(Mat2{a, b, c, d}) {}
    static ProjMat identity() { return ProjMat(); }
    static ProjMat parse(const std::string& s);

    const Mat2& lift() const { return m_; }
    const PolyC& a() const { return m_.a; }
    const PolyC& b() const { return m_.b; }
    const PolyC& c() const { return m_.c; }
    const PolyC& d() const { return m_.d; }
    bool is_identity() const { return m_ == Mat2::identity(); }
    const PolyC& det() const {
        if (!det_) det_ = m_.det();
        return *det_;
    }

    ProjMat conj() const { return from_primitive(m_.conj()); }
    ProjMat eta() const { return from_primitive(m_.eta()); }
    // m must be nonsingular with coprime entries; only the scale is fixed.
    static ProjMat from_primitive(const Mat2& m);
    std::string str() const { return m_.str(); }

    friend bool operator==(const ProjMat& x, const ProjMat& y) { return x.m_ == y.m_; }
    friend bool operator!=(const ProjMat& x, const ProjMat& y) { return !(x == y); }

private:
    Mat2 m_;
    mutable std::optional<PolyC> det_;
};

ProjMat pgl_mul(const ProjMat& x, const ProjMat& y);
inline ProjMat operator*(const ProjMat& x, const ProjMat& y) { return pgl_mul(x, y); }
ProjMat pgl_inv(const ProjMat& x);
ProjMat pgl_pow(const ProjMat& x, int n);
// Least n <= max_order with x^n = 1, or empty.
std::optional<int> pgl_order(const ProjMat& x, int max_order = 24);

// Projective line point over the scalars; empty stands for infinity.
using FiberPoint = std::optional<CoeffScalar>;
// Fiberwise Moebius image; throws DomainError IndeterminateFiber.
FiberPoint act_on_fiber(const Mat2& x, const FiberPoint& t, const CoeffScalar& z0);
inline FiberPoint act_on_fiber(const ProjMat& x, const FiberPoint& t, const CoeffScalar& z0) {
    return act_on_fiber(x.lift(), t, z0);
}

// (a + d)^2 / det
RatFn eigen_ratio_trace_invariant(const ProjMat& x);

}  // namespace bs
