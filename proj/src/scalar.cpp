#include "birsphere/scalar.hpp"

#include "birsphere/errors.hpp"

namespace bs {

CoeffScalar CoeffScalar::inverse() const {
    if (is_zero()) throw DomainError("DivisionByZero", "inverse of zero scalar");
    if (im.is_zero()) return CoeffScalar(re.inverse());
    TowerReal n = norm().inverse();
    return {re * n, -im * n};
}

CoeffScalar& CoeffScalar::operator*=(const CoeffScalar& o) {
    if (im.is_zero() && o.im.is_zero()) {
        re *= o.re;
        return *this;
    }
    TowerReal r = re * o.re - im * o.im;
    TowerReal i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
}

int sign(const CoeffScalar& x) {
    if (!x.is_real()) throw DomainError("NotReal", "sign of non-real scalar " + x.str());
    return x.re.sign();
}

static bool is_sum(const TowerReal& t) { return t.terms().size() > 1; }

std::string CoeffScalar::str() const {
    if (im.is_zero()) return re.str();
    std::string ip;
    if (im == TowerReal(1)) ip = "i";
    else if (im == TowerReal(-1)) ip = "-i";
    else if (is_sum(im)) ip = "(" + im.str() + ")*i";
    else ip = im.str() + "*i";
    if (re.is_zero()) return ip;
    if (ip[0] == '-') return re.str() + " - " + ip.substr(1);
    return re.str() + " + " + ip;
}

std::string CoeffScalar::coeff_str() const {
    std::string s = str();
    bool compound = (!re.is_zero() && !im.is_zero()) || is_sum(re) || is_sum(im);
    return compound ? "(" + s + ")" : s;
}

std::optional<CoeffScalar> scalar_sqrt(const CoeffScalar& x) {
    if (x.is_zero()) return CoeffScalar();
    if (x.im.is_zero()) {
        if (x.re.sign() > 0) {
            auto r = tower_sqrt(x.re);
            if (!r) return std::nullopt;
            return CoeffScalar(*r);
        }
        auto r = tower_sqrt(-x.re);
        if (!r) return std::nullopt;
        return CoeffScalar(TowerReal(), *r);
    }
    // sqrt(a+bi) = u + vi with u = sqrt((|x|+a)/2), v = b/(2u)
    auto m = tower_sqrt(x.norm());
    if (!m) return std::nullopt;
    auto u = tower_sqrt((*m + x.re) * TowerReal(Q(1, 2)));
    if (!u || u->is_zero()) return std::nullopt;
    TowerReal v = x.im / (TowerReal(2) * *u);
    CoeffScalar r(*u, v);
    if (r * r != x) return std::nullopt;
    return r;
}

CoeffScalar root_of_unity(int k, int n) {
    if (n <= 0) throw DomainError("BadOrder", "nonpositive order");
    k = ((k % n) + n) % n;
    // reduce to the primitive order
    auto g = [](int a, int b) {
        while (b) {
            int t = a % b;
            a = b;
            b = t;
        }
        return a;
    };
    int d = g(k, n);
    if (k == 0) return CoeffScalar(1);
    k /= d;
    n /= d;
    TowerReal h(Q(1, 2));
    TowerReal s3 = TowerReal::sqrt_of(Q(3));
    TowerReal s2h = TowerReal::sqrt_of(Q(1, 2));
    CoeffScalar base;
    switch (n) {
        case 2: base = CoeffScalar(-1); break;
        case 3: base = CoeffScalar(-h, s3 * h); break;
        case 4: base = CoeffScalar::I(); break;
        case 6: base = CoeffScalar(h, s3 * h); break;
        case 8: base = CoeffScalar(s2h, s2h); break;
        case 12: base = CoeffScalar(s3 * h, h); break;
        default:
            throw UnsupportedExtension("root of unity of order " + std::to_string(n) + " leaves the quadratic tower");
    }
    CoeffScalar r(1);
    for (int j = 0; j < k; ++j) r *= base;
    return r;
}

}  // namespace bs
