#include "birsphere/algebraic.hpp"

#include "birsphere/factor.hpp"

namespace bs {

RealAlgebraic RealAlgebraic::rational(const Q& q) {
    RealAlgebraic r;
    r.minpoly_ = primitive_part(PolyQ(std::vector<Q>{-q, Q(1)}));
    r.iv_ = {q, q};
    return r;
}

RealAlgebraic RealAlgebraic::root_of(const PolyT& p0, std::pair<Q, Q> iv) {
    if (iv.first == iv.second) return rational(iv.first);
    PolyT p = radical(p0);
    for (const auto& [g, m] : factor_rational(tower_norm(p))) {
        PolyT h = gcd(p, to_t(g));
        if (h.degree() <= 0 || sturm_count(h, iv.first, iv.second) == 0) continue;
        if (g.degree() == 1) return rational(-g.coeff(0) / g.coeff(1));
        PolyT gt = to_t(g);
        while (sturm_count(gt, iv.first, iv.second) > 1) {
            Q mid = (iv.first + iv.second) / 2;
            if (sturm_count(h, iv.first, mid) == 1) iv.second = mid;
            else iv.first = mid;
        }
        RealAlgebraic r;
        r.minpoly_ = g;
        r.iv_ = iv;
        return r;
    }
    throw std::logic_error("isolating interval holds no root of the polynomial");
}

Q RealAlgebraic::rational_value() const {
    if (!is_rational()) throw DomainError("NotRational", str());
    return -minpoly_.coeff(0) / minpoly_.coeff(1);
}

void RealAlgebraic::refine(const Q& w) {
    if (is_rational()) return;
    refine_root(to_t(minpoly_), iv_, w);
}

int RealAlgebraic::sign() const {
    if (is_rational()) return sgn(rational_value());
    RealAlgebraic c = *this;
    while (c.iv_.first < 0 && c.iv_.second > 0) c.refine((c.iv_.second - c.iv_.first) / 2);
    return c.iv_.first >= 0 ? 1 : -1;
}

double RealAlgebraic::to_double() const {
    if (is_rational()) return rational_value().get_d();
    RealAlgebraic c = *this;
    c.refine(Q(1, 1 << 30) * Q(1, 1 << 30));
    return Q((c.iv_.first + c.iv_.second) / 2).get_d();
}

bool operator==(const RealAlgebraic& a, const RealAlgebraic& b) {
    if (a.minpoly_ != b.minpoly_) return false;
    if (a.is_rational()) return true;
    Q lo = std::max(a.iv_.first, b.iv_.first);
    Q hi = std::min(a.iv_.second, b.iv_.second);
    return lo < hi && sturm_count(a.minpoly_, lo, hi) == 1;
}

bool operator<(const RealAlgebraic& a0, const RealAlgebraic& b0) {
    if (a0 == b0) return false;
    RealAlgebraic a = a0, b = b0;
    for (;;) {
        if (a.iv_.second <= b.iv_.first && !(a.iv_.second == b.iv_.first && a.is_rational() && b.is_rational()))
            return true;
        if (b.iv_.second <= a.iv_.first) return false;
        a.refine((a.iv_.second - a.iv_.first) / 2);
        b.refine((b.iv_.second - b.iv_.first) / 2);
    }
}

std::string RealAlgebraic::str() const {
    if (is_rational()) return to_string(rational_value());
    return "root of " + minpoly_.str() + " in (" + to_string(iv_.first) + ", " + to_string(iv_.second) + ")";
}

}  // namespace bs
