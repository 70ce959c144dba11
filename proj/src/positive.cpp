#include "birsphere/positive.hpp"

#include "birsphere/factor.hpp"
#include "birsphere/realroots.hpp"

namespace bs {

namespace {

TowerReal need_sqrt(const TowerReal& x, const char* what) {
    auto r = tower_sqrt(x);
    if (!r) throw UnsupportedExtension(std::string(what) + ": sqrt(" + x.str() + ") leaves the quadratic tower");
    return *r;
}

PolyT quad(const TowerReal& c0, const TowerReal& c1) {
    return PolyT(std::vector<TowerReal>{c0, c1, TowerReal(1)});
}

}  // namespace

bool is_real_positive(const PolyT& p) {
    if (p.is_zero()) return false;
    if (p.degree() == 0) return p.lc().sign() > 0;
    if (p.degree() % 2 || p.lc().sign() < 0) return false;
    return sturm_count(p, std::nullopt, std::nullopt) == 0;
}

bool is_real_positive(const PolyC& p) { return is_real_positive(to_real(p)); }

PolyC square_free_part(const PolyC& p) {
    if (p.is_zero()) throw DomainError("ZeroPolynomial", "square-free part of zero");
    PolyC r = radical(p);
    if (is_real(p) && sign(p.lc()) < 0) r = -r;
    return r;
}

PolyT odd_part(const PolyT& p) {
    PolyT r(TowerReal(1));
    auto sqf = squarefree_decomposition(p);
    for (std::size_t i = 0; i < sqf.size(); i += 2) r *= sqf[i];
    return r;
}

std::vector<PolyT> real_quadratic_factors(const PolyT& f) {
    std::vector<PolyT> out;
    for (const auto& h : factor_tower(f)) {
        if (h.degree() <= 2) {
            out.push_back(h);
            continue;
        }
        if (h.degree() == 4 && h.is_even()) {
            TowerReal p = h.coeff(2), q = h.coeff(0);
            TowerReal disc = p * p - TowerReal(4) * q;
            if (disc.sign() >= 0) {
                if (auto s = tower_sqrt(disc)) {
                    TowerReal half(Q(1, 2));
                    out.push_back(quad((p + *s) * half, TowerReal()));
                    out.push_back(quad((p - *s) * half, TowerReal()));
                    continue;
                }
            } else if (auto sq = tower_sqrt(q)) {
                TowerReal k2 = TowerReal(2) * *sq - p;
                if (auto k = tower_sqrt(k2)) {
                    out.push_back(quad(*sq, -*k));
                    out.push_back(quad(*sq, *k));
                    continue;
                }
            }
        }
        throw UnsupportedExtension("factor " + h.str() + " does not split into quadratics over the tower");
    }
    return out;
}

PolyC norm_factor(const PolyC& f) {
    PolyT ft = to_real(f);
    if (!is_real_positive(ft)) throw DomainError("NotPositive", f.str() + " is not in R[z]+");
    PolyC out(CoeffScalar(need_sqrt(ft.lc(), "norm_factor")));
    auto sqf = squarefree_decomposition(ft);
    for (std::size_t i = 0; i < sqf.size(); ++i) {
        int m = int(i) + 1;
        if (sqf[i].degree() <= 0) continue;
        out *= to_c(sqf[i]).pow(m / 2);
        if (m % 2 == 0) continue;
        for (const auto& q : real_quadratic_factors(sqf[i])) {
            // z^2 + b z + c = (z + b/2)^2 + d^2, lower half-plane root -b/2 - i d
            TowerReal b2 = q.coeff(1) * TowerReal(Q(1, 2));
            TowerReal d = need_sqrt(q.coeff(0) - b2 * b2, "norm_factor");
            out *= PolyC(std::vector<CoeffScalar>{CoeffScalar(b2, d), CoeffScalar(1)});
        }
    }
    return out;
}

QuadraticDecomp quadratic_decomp(const PolyC& f) {
    PolyT ft = to_real(f);
    if (ft.degree() != 2 || ft.lc() != TowerReal(1)) throw DomainError("NotMonicQuadratic", f.str());
    if (!is_real_positive(ft)) throw DomainError("NotPositive", f.str() + " is not in R[z]+");
    // f = (z + b)^2 + d^2
    TowerReal b = ft.coeff(1) * TowerReal(Q(1, 2));
    TowerReal d2 = ft.coeff(0) - b * b;
    QuadraticDecomp r;
    if (b.is_zero()) {
        r.c = TowerReal(1);
        r.a = PolyT(need_sqrt(d2 + TowerReal(1), "quadratic_decomp"));
        return r;
    }
    // c is the root in (0, 1] of c^2 + (b^2 + d^2 - 1) c - d^2
    TowerReal s = b * b + d2 - TowerReal(1);
    r.c = (-s + need_sqrt(s * s + TowerReal(4) * d2, "quadratic_decomp")) * TowerReal(Q(1, 2));
    TowerReal alpha = need_sqrt(TowerReal(1) - r.c, "quadratic_decomp");
    r.a = PolyT(std::vector<TowerReal>{b / alpha, alpha});
    return r;
}

VDecomp v_decomp(const PolyC& f) {
    PolyT ft = to_real(f);
    if (!is_real_positive(ft)) throw DomainError("NotPositive", f.str() + " is not in R[z]+");
    const PolyT hm = PolyT(std::vector<TowerReal>{TowerReal(-1), TowerReal(0), TowerReal(1)});
    if (ft.degree() == 0) {
        // a^2 + P (z^2 - 1) has degree >= 2 for any nonzero positive P, so the
        // only witness for a constant is P = 0.
        return {PolyT(need_sqrt(ft.lc(), "v_decomp")), PolyT()};
    }
    std::vector<PolyT> quads;
    auto sqf = squarefree_decomposition(ft);
    for (std::size_t i = 0; i < sqf.size(); ++i) {
        if (sqf[i].degree() <= 0) continue;
        auto qs = real_quadratic_factors(sqf[i]);
        for (std::size_t k = 0; k <= i; ++k) quads.insert(quads.end(), qs.begin(), qs.end());
    }
    VDecomp acc;
    bool first = true;
    for (const auto& q : quads) {
        auto qd = quadratic_decomp(to_c(q));
        if (first) {
            acc = {qd.a, PolyT(qd.c)};
            first = false;
            continue;
        }
        PolyT a1 = acc.a, p1 = acc.P, a2 = qd.a, p2(qd.c);
        acc.a = a1 * a2;
        acc.P = a1 * a1 * p2 + p1 * (a2 * a2 + p2 * hm);
    }
    TowerReal l = ft.lc();
    if (l != TowerReal(1)) {
        acc.a = acc.a.scaled(need_sqrt(l, "v_decomp"));
        acc.P = acc.P.scaled(l);
    }
    return acc;
}

}  // namespace bs
