#pragma once
#include <string>
#include <utility>

#include "birsphere/realroots.hpp"

namespace bs {

// A real algebraic number: a root of an irreducible rational polynomial,
// pinned by an isolating interval (lo, hi), or [a, a] for a rational root.
class RealAlgebraic {
public:
    static RealAlgebraic rational(const Q& q);
    // The root of p inside iv; iv must isolate a root of p.
    static RealAlgebraic root_of(const PolyT& p, std::pair<Q, Q> iv);

    const PolyQ& minpoly() const { return minpoly_; }
    const std::pair<Q, Q>& interval() const { return iv_; }
    bool is_rational() const { return minpoly_.degree() == 1; }
    Q rational_value() const;
    int sign() const;
    double to_double() const;
    // Narrow the interval to width at most w.
    void refine(const Q& w);

    friend bool operator==(const RealAlgebraic& a, const RealAlgebraic& b);
    friend bool operator!=(const RealAlgebraic& a, const RealAlgebraic& b) { return !(a == b); }
    friend bool operator<(const RealAlgebraic& a, const RealAlgebraic& b);

    std::string str() const;

private:
    PolyQ minpoly_;
    std::pair<Q, Q> iv_;
};

}  // namespace bs
