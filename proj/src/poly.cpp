#include "birsphere/poly.hpp"

#include <bit>
#include <unordered_map>

namespace bs {

namespace {

struct IntTerm {
    std::uint64_t mask;
    Z re, im;
};

// Integral numerators over the common denominator den.
struct IntCoeffs {
    Z den = 1;
    std::vector<std::vector<IntTerm>> c;
};

void lcm_dens(Z& l, const TowerReal& x) {
    for (const auto& t : x.terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.c.get_den_mpz_t());
}

Z scaled_num(const Q& q, const Z& den) { return q.get_num() * (den / q.get_den()); }

IntCoeffs to_int(const std::vector<TowerReal>& a) {
    IntCoeffs r;
    for (const auto& x : a) lcm_dens(r.den, x);
    for (const auto& x : a) {
        std::vector<IntTerm> ts;
        for (const auto& t : x.terms()) ts.push_back({t.mask, scaled_num(t.c, r.den), Z(0)});
        r.c.push_back(std::move(ts));
    }
    return r;
}

IntCoeffs to_int(const std::vector<CoeffScalar>& a) {
    IntCoeffs r;
    for (const auto& x : a) {
        lcm_dens(r.den, x.re);
        lcm_dens(r.den, x.im);
    }
    for (const auto& x : a) {
        std::vector<IntTerm> ts;
        const auto &re = x.re.terms(), &im = x.im.terms();
        std::size_t i = 0, j = 0;
        while (i < re.size() || j < im.size()) {
            if (j == im.size() || (i < re.size() && re[i].mask < im[j].mask)) {
                ts.push_back({re[i].mask, scaled_num(re[i].c, r.den), Z(0)});
                ++i;
            } else if (i == re.size() || im[j].mask < re[i].mask) {
                ts.push_back({im[j].mask, Z(0), scaled_num(im[j].c, r.den)});
                ++j;
            } else {
                ts.push_back({re[i].mask, scaled_num(re[i].c, r.den), scaled_num(im[j].c, r.den)});
                ++i;
                ++j;
            }
        }
        r.c.push_back(std::move(ts));
    }
    return r;
}

// Product numerators indexed by [degree][mask slot], real and imaginary parts.
struct IntProduct {
    Z den;
    std::vector<std::uint64_t> masks;
    std::vector<Z> re, im;
};

IntProduct mul_int(const IntCoeffs& a, const IntCoeffs& b) {
    IntProduct r;
    r.den = a.den * b.den;
    std::unordered_map<std::uint64_t, std::size_t> slot;
    std::vector<std::uint64_t> ma, mb;
    for (const auto& ts : a.c)
        for (const auto& t : ts) ma.push_back(t.mask);
    for (const auto& ts : b.c)
        for (const auto& t : ts) mb.push_back(t.mask);
    std::sort(ma.begin(), ma.end());
    ma.erase(std::unique(ma.begin(), ma.end()), ma.end());
    std::sort(mb.begin(), mb.end());
    mb.erase(std::unique(mb.begin(), mb.end()), mb.end());
    std::unordered_map<std::uint64_t, Z> rad;
    for (auto x : ma)
        for (auto y : mb) {
            if (slot.emplace(x ^ y, r.masks.size()).second) r.masks.push_back(x ^ y);
            if (x & y) rad.emplace(x & y, tower_radicand(x & y));
        }
    std::size_t k = r.masks.size(), n = a.c.size() + b.c.size() - 1;
    r.re.assign(n * k, Z(0));
    r.im.assign(n * k, Z(0));
    Z t;
    for (std::size_t i = 0; i < a.c.size(); ++i)
        for (const auto& x : a.c[i])
            for (std::size_t j = 0; j < b.c.size(); ++j)
                for (const auto& y : b.c[j]) {
                    std::size_t s = (i + j) * k + slot[x.mask ^ y.mask];
                    std::uint64_t common = x.mask & y.mask;
                    Z& re = r.re[s];
                    Z& im = r.im[s];
                    if (!common) {
                        mpz_addmul(re.get_mpz_t(), x.re.get_mpz_t(), y.re.get_mpz_t());
                        mpz_submul(re.get_mpz_t(), x.im.get_mpz_t(), y.im.get_mpz_t());
                        mpz_addmul(im.get_mpz_t(), x.re.get_mpz_t(), y.im.get_mpz_t());
                        mpz_addmul(im.get_mpz_t(), x.im.get_mpz_t(), y.re.get_mpz_t());
                    } else {
                        const Z& p = rad[common];
                        t = x.re * y.re - x.im * y.im;
                        mpz_addmul(re.get_mpz_t(), t.get_mpz_t(), p.get_mpz_t());
                        t = x.re * y.im + x.im * y.re;
                        mpz_addmul(im.get_mpz_t(), t.get_mpz_t(), p.get_mpz_t());
                    }
                }
    return r;
}

TowerReal collect(const IntProduct& r, const std::vector<Z>& part, std::size_t deg) {
    std::size_t k = r.masks.size();
    std::vector<TowerReal::Term> ts;
    for (std::size_t s = 0; s < k; ++s) {
        const Z& v = part[deg * k + s];
        if (v == 0) continue;
        Q c(v, r.den);
        c.canonicalize();
        ts.push_back({r.masks[s], std::move(c)});
    }
    std::sort(ts.begin(), ts.end(), [](const auto& x, const auto& y) { return x.mask < y.mask; });
    return TowerReal::from_terms(std::move(ts));
}

}  // namespace

std::vector<TowerReal> mul_coeffs(const std::vector<TowerReal>& a, const std::vector<TowerReal>& b) {
    IntProduct r = mul_int(to_int(a), to_int(b));
    std::vector<TowerReal> out;
    for (std::size_t d = 0; d < a.size() + b.size() - 1; ++d) out.push_back(collect(r, r.re, d));
    return out;
}

std::vector<CoeffScalar> mul_coeffs(const std::vector<CoeffScalar>& a, const std::vector<CoeffScalar>& b) {
    IntProduct r = mul_int(to_int(a), to_int(b));
    std::vector<CoeffScalar> out;
    for (std::size_t d = 0; d < a.size() + b.size() - 1; ++d)
        out.push_back(CoeffScalar(collect(r, r.re, d), collect(r, r.im, d)));
    return out;
}

PolyT to_real(const PolyC& p) {
    std::vector<TowerReal> c;
    c.reserve(p.coeffs().size());
    for (const auto& x : p.coeffs()) {
        if (!x.is_real()) throw DomainError("NotRealPolynomial", p.str() + " has non-real coefficients");
        c.push_back(x.re);
    }
    return PolyT(std::move(c));
}

PolyQ to_rational(const PolyT& p) {
    std::vector<Q> c;
    c.reserve(p.coeffs().size());
    for (const auto& x : p.coeffs()) {
        if (!x.is_rational()) throw DomainError("NotRational", p.str() + " has irrational coefficients");
        c.push_back(x.rational_value());
    }
    return PolyQ(std::move(c));
}

PolyQ to_rational(const PolyC& p) { return to_rational(to_real(p)); }

PolyQ primitive_part(const PolyQ& p) {
    if (p.is_zero()) return p;
    Z l = 1, g = 0;
    for (const auto& c : p.coeffs()) l = lcm(l, Z(c.get_den()));
    for (const auto& c : p.coeffs()) g = gcd(g, Z(c.get_num() * (l / c.get_den())));
    Q s(l, g);
    s.canonicalize();
    if (sgn(p.lc()) < 0) s = -s;
    return p.scaled(s);
}

PolyQ tower_norm(const PolyT& p) {
    std::uint64_t sup = 0;
    for (const auto& c : p.coeffs()) sup |= c.support();
    if (sup == 0) return to_rational(p);
    std::vector<int> bits;
    for (int b = 0; b < 64; ++b)
        if (sup & (std::uint64_t(1) << b)) bits.push_back(b);
    std::vector<PolyT> conjugates;
    for (std::uint64_t sub = 0; sub < (std::uint64_t(1) << bits.size()); ++sub) {
        std::uint64_t flip = 0;
        for (std::size_t k = 0; k < bits.size(); ++k)
            if (sub & (std::uint64_t(1) << k)) flip |= std::uint64_t(1) << bits[k];
        PolyT q = p.map([&](const TowerReal& t) { return t.galois(flip); });
        if (std::find(conjugates.begin(), conjugates.end(), q) == conjugates.end()) conjugates.push_back(q);
    }
    PolyT prod(TowerReal(1));
    for (const auto& q : conjugates) prod *= q;
    return to_rational(prod);
}

}  // namespace bs
