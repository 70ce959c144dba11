#include "birsphere/eta.hpp"

#include <algorithm>

#include "birsphere/factor.hpp"
#include "birsphere/realroots.hpp"

namespace bs {

std::string H2Class::str() const {
    std::string s = sign > 0 ? "(+1, {" : "(-1, {";
    for (std::size_t i = 0; i < gens.size(); ++i) s += (i ? ", " : "") + gens[i].str();
    return s + "})";
}

bool operator==(const H2Class& a, const H2Class& b) {
    if (a.sign != b.sign || a.gens.size() != b.gens.size()) return false;
    for (std::size_t i = 0; i < a.gens.size(); ++i)
        if (a.gens[i] != b.gens[i]) return false;
    return true;
}

H2Class operator*(const H2Class& a, const H2Class& b) {
    H2Class r;
    r.sign = a.sign * b.sign;
    for (const auto& x : a.gens)
        if (std::find(b.gens.begin(), b.gens.end(), x) == b.gens.end()) r.gens.push_back(x);
    for (const auto& x : b.gens)
        if (std::find(a.gens.begin(), a.gens.end(), x) == a.gens.end()) r.gens.push_back(x);
    std::sort(r.gens.begin(), r.gens.end());
    return r;
}

std::optional<RatFn> twisted_square(const ProjMat& a) {
    if (!reality_check({a, BaseMobius::neg()})) throw DomainError("NotReal", a.str() + " fails the reality condition");
    Mat2 l = canonical_pattern(a).lift();
    Mat2 p = l * l.eta();
    if (!p.is_scalar()) return std::nullopt;
    return RatFn(p.a);
}

H2Class h2_reduce(const RatFn& mu) {
    if (mu.is_zero()) throw DomainError("NotEvenFunction", "zero has no class");
    PolyC nd = mu.num() * mu.den();
    if (!nd.is_even() || !is_real(nd)) throw DomainError("NotEvenFunction", mu.str() + " is not in R(z^2)");
    // f(z) = F(z^2); z^2 - d is -1 times a norm for d >= 0, pairs of non-real roots are norms
    PolyT f = to_real(nd).even_part_in_w();
    H2Class r;
    r.sign = f.lc().sign();
    auto sqf = squarefree_decomposition(f);
    for (std::size_t i = 0; i < sqf.size(); i += 2) {
        const PolyT& part = sqf[i];
        if (part.degree() <= 0) continue;
        for (const auto& iv : isolate_roots(part, std::nullopt, std::nullopt)) {
            RealAlgebraic d = RealAlgebraic::root_of(part, iv);
            if (d.sign() >= 0) {
                r.sign = -r.sign;
            } else {
                r.gens.push_back(RealAlgebraic::root_of(part.eta(), {-iv.second, -iv.first}));
            }
        }
    }
    std::sort(r.gens.begin(), r.gens.end());
    return r;
}

H2Class h2_invariant(const SphereMap& g) {
    if (!g.base.is_neg()) throw DomainError("NotEtaPair", "base action is not z -> -z");
    auto mu = twisted_square(g.fiber);
    if (!mu) throw DomainError("NotInvolution", g.str() + " is not an involution");
    return h2_reduce(*mu);
}

bool pair_conjugacy_bir(const SphereMap& g1, const SphereMap& g2) { return h2_invariant(g1) == h2_invariant(g2); }

namespace {

// Roots of F(w) over the tower extended by i, with multiplicity.
std::vector<CoeffScalar> w_roots(const PolyC& f) {
    std::vector<CoeffScalar> out;
    auto add_quadratic = [&](const CoeffScalar& a, const CoeffScalar& b, const CoeffScalar& c, int mult) {
        auto s = scalar_sqrt(b * b - CoeffScalar(4) * a * c);
        if (!s) throw UnsupportedExtension("quadratic factor leaves the tower");
        for (int k = 0; k < mult; ++k) {
            out.push_back((-b + *s) / (CoeffScalar(2) * a));
            out.push_back((-b - *s) / (CoeffScalar(2) * a));
        }
    };
    if (is_rational(f)) {
        for (const auto& [g, mult] : factor_rational(to_rational(f))) {
            if (g.degree() == 1) {
                for (int k = 0; k < mult; ++k) out.push_back(CoeffScalar(Q(-g.coeff(0) / g.coeff(1))));
            } else if (g.degree() == 2) {
                add_quadratic(CoeffScalar(g.coeff(2)), CoeffScalar(g.coeff(1)), CoeffScalar(g.coeff(0)), mult);
            } else {
                throw UnsupportedExtension("factor " + g.str("w") + " of degree above 2");
            }
        }
        return out;
    }
    if (f.degree() == 1) return {-f.coeff(0) / f.coeff(1)};
    if (f.degree() == 2) {
        add_quadratic(f.coeff(2), f.coeff(1), f.coeff(0), 1);
        return out;
    }
    throw UnsupportedExtension("non-rational even polynomial of degree above 4");
}

PolyC factor_even_poly(const PolyC& p) {
    if (!p.is_even()) throw DomainError("NotEvenFunction", p.str() + " is not even");
    PolyC f = p.even_part_in_w();
    auto roots = w_roots(f);
    // prod (z - d)(-z - d) = (-1)^n prod (z^2 - d^2)
    CoeffScalar k2 = roots.size() % 2 ? -f.lc() : f.lc();
    auto k = scalar_sqrt(k2);
    if (!k) throw UnsupportedExtension("sqrt(" + k2.str() + ") leaves the tower");
    PolyC g(*k);
    for (const auto& r : roots) {
        auto d = scalar_sqrt(r);
        if (!d) throw UnsupportedExtension("sqrt(" + r.str() + ") leaves the tower");
        g *= PolyC(std::vector<CoeffScalar>{-*d, CoeffScalar(1)});
    }
    if (g * g.eta() != p) throw std::logic_error("even factorization check failed for " + p.str());
    return g;
}

}  // namespace

RatFn factor_even(const RatFn& f) {
    if (f.is_zero()) throw DomainError("NotEvenFunction", "zero");
    return RatFn(factor_even_poly(f.num()), factor_even_poly(f.den()));
}

Mat2 h1_coboundary(const Mat2& num, const PolyC& den) {
    if (den.is_zero() || !(num * num.eta() == Mat2::diag(den * den.eta(), den * den.eta())))
        throw DomainError("NotNormOne", "A eta(A) is not the identity");
    const PolyC z = PolyC::z();
    const std::vector<Mat2> trials = {Mat2::identity(),
                                      Mat2::diag(PolyC(1), z),
                                      Mat2::diag(z, PolyC(1)),
                                      {PolyC(1), PolyC(1), PolyC(), PolyC(1)},
                                      {PolyC(1), PolyC(), PolyC(1), PolyC(1)},
                                      {PolyC(), PolyC(1), PolyC(1), PolyC()},
                                      {PolyC(1), z, PolyC(), PolyC(1)},
                                      Mat2::diag(PolyC(1), PolyC(CoeffScalar::I())),
                                      num};
    // B = C + A eta(C) satisfies A eta(B) = B
    for (const auto& c : trials) {
        Mat2 b = c.scaled(den) + num * c.eta();
        if (b.det().is_zero()) continue;
        if (!(num * b.eta() == b.scaled(den.eta()))) throw std::logic_error("coboundary identity failed");
        return b;
    }
    throw std::logic_error("no invertible coboundary in the trial set");
}

bool has_real_fixed_points(const ProjMat& a) {
    auto v = a.lift().at(CoeffScalar(0));
    const CoeffScalar &p = v[0], &q = v[1], &r = v[2], &s = v[3];
    // r t^2 + (s - p) t - q = 0 on |t| = 1
    if (r.is_zero() && q.is_zero() && p == s) return true;
    if ((r - (s - p) - q).is_zero()) return true;  // t = -1
    // t = (1 + i u)/(1 - i u), u real
    const CoeffScalar I = CoeffScalar::I();
    PolyC plus(std::vector<CoeffScalar>{CoeffScalar(1), I}), minus(std::vector<CoeffScalar>{CoeffScalar(1), -I});
    PolyC e = (plus * plus).scaled(r) + (plus * minus).scaled(s - p) - (minus * minus).scaled(q);
    PolyT re = e.map([](const CoeffScalar& c) { return c.re; });
    PolyT im = e.map([](const CoeffScalar& c) { return c.im; });
    PolyT g = gcd(re, im);
    if (g.is_zero()) return true;
    return g.degree() > 0 && sturm_count(g, std::nullopt, std::nullopt) > 0;
}

EtaReport classify_eta(const SphereMap& g0) {
    EtaReport r;
    SphereMap g = g0;
    switch (g0.base.kind()) {
        case BaseMobius::Kind::Identity: throw DomainError("NotEtaPair", "base action is trivial");
        case BaseMobius::Kind::Interval:
            throw DomainError("InfiniteOrderBase", "base " + g0.base.str() + " has infinite order");
        case BaseMobius::Kind::Involution: {
            auto red = reduce_to_trivial_base(g0);
            g = red.reduced;
            r.base_conjugator = red.conjugator;
            break;
        }
        case BaseMobius::Kind::Neg: break;
    }
    if (!membership_H(g.fiber)) throw DomainError("NotDiffeomorphism", g.str() + " is not a birational diffeomorphism");
    r.invariant = h2_invariant(g);
    if (!r.invariant.is_sign_only()) {
        r.family = "8";
        return r;
    }
    r.real_fixed_points = has_real_fixed_points(g.fiber);
    r.undecided = true;
    r.caveats.push_back("Bir(S,pi)-conjugate to a linear model; the H2 class alone does not fix the Aut(S(R),pi) class");
    if (!r.real_fixed_points) {
        r.family = "5";
        r.caveats.push_back("no real fixed point: matched to the antipodal involution");
    } else {
        r.family = "linear-stratum";
    }
    return r;
}

}  // namespace bs
