#include "birsphere/ratfn.hpp"

namespace bs {

RatFn::RatFn(const PolyC& n, const PolyC& d) {
    if (d.is_zero()) throw DomainError("DivisionByZero", "zero denominator");
    if (n.is_zero()) {
        den_ = PolyC(CoeffScalar(1));
        return;
    }
    PolyC g = gcd(n, d);
    num_ = n.exact_div(g);
    den_ = d.exact_div(g);
    CoeffScalar s = CoeffScalar(1) / den_.lc();
    num_ = num_.scaled(s);
    den_ = den_.scaled(s);
}

std::string RatFn::str() const {
    if (is_polynomial()) return num_.str();
    auto wrap = [](const PolyC& p) {
        std::string s = p.str();
        bool simple = p.coeffs().size() <= 1 || s.find_first_of("+-", 1) == std::string::npos;
        return simple ? s : "(" + s + ")";
    };
    return wrap(num_) + "/" + wrap(den_);
}

}  // namespace bs
