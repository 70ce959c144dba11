#pragma once
#include <array>
#include <cstdint>
#include <map>
#include <string>

#include "birsphere/scalar.hpp"

namespace bs {

// Sparse polynomial in the sphere coordinates (w, x, y, z).
class MPoly {
public:
    using Exp = std::array<std::uint8_t, 4>;

    MPoly() = default;
    MPoly(const CoeffScalar& c);
    static MPoly var(int k);  // 0 = w, 1 = x, 2 = y, 3 = z

    bool is_zero() const { return t_.empty(); }
    const std::map<Exp, CoeffScalar>& terms() const { return t_; }

    MPoly operator-() const;
    MPoly& operator+=(const MPoly& o);
    MPoly& operator-=(const MPoly& o);
    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    friend bool operator==(const MPoly& a, const MPoly& b) { return a.t_ == b.t_; }

    MPoly conj() const;
    // Normal form modulo w^2 - x^2 - y^2 - z^2 (w-degree at most 1).
    MPoly reduce_sphere() const;
    CoeffScalar eval(const std::array<CoeffScalar, 4>& p) const;
    std::string str() const;

private:
    std::map<Exp, CoeffScalar> t_;
};

using SphereFormula = std::array<MPoly, 4>;

// F and G define the same rational map of the sphere.
bool same_map_on_sphere(const SphereFormula& f, const SphereFormula& g);

}  // namespace bs
