#include "birsphere/factor.hpp"

#include <cmath>

namespace bs {

using CLD = std::complex<long double>;

namespace {

CLD eval_monic(const std::vector<long double>& a, CLD x) {
    CLD r = 1;
    for (int i = int(a.size()) - 1; i >= 0; --i) r = r * x + a[i];
    return r;
}

// Coefficients of lc * prod (z - r) rounded to integers; empty when out of range.
std::optional<PolyQ> rounded_product(const Q& lc, const std::vector<CLD>& rs) {
    std::vector<CLD> c{CLD(1)};
    for (const auto& r : rs) {
        std::vector<CLD> n(c.size() + 1, CLD(0));
        for (std::size_t i = 0; i < c.size(); ++i) {
            n[i + 1] += c[i];
            n[i] -= c[i] * r;
        }
        c = std::move(n);
    }
    long double l = lc.get_d();
    std::vector<Q> out;
    for (auto& x : c) {
        x *= l;
        long double mag = std::abs(x.real()) + 1;
        if (std::abs(x.imag()) > 1e-6L * mag || mag > 1e17L) return std::nullopt;
        long double rr = std::round(x.real());
        if (std::abs(rr - x.real()) > 1e-4L * mag) return std::nullopt;
        out.emplace_back(Z(std::to_string((long long)rr)));
    }
    return PolyQ(std::move(out));
}

bool next_combination(std::vector<int>& idx, int n) {
    int k = int(idx.size());
    for (int i = k - 1; i >= 0; --i) {
        if (idx[i] < n - k + i) {
            ++idx[i];
            for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

std::vector<PolyQ> factor_squarefree(PolyQ f) {
    std::vector<PolyQ> out;
    f = primitive_part(f);
    std::vector<CLD> roots = approx_roots(f);
    for (;;) {
        int n = f.degree();
        if (n <= 1) {
            if (n == 1) out.push_back(f);
            return out;
        }
        bool found = false;
        for (int k = 1; k <= n / 2 && !found; ++k) {
            std::vector<int> idx(k);
            for (int i = 0; i < k; ++i) idx[i] = i;
            do {
                std::vector<CLD> sub;
                for (int i : idx) sub.push_back(roots[i]);
                auto g = rounded_product(f.lc(), sub);
                if (!g || g->degree() != k) continue;
                PolyQ gp = primitive_part(*g);
                auto [q, r] = f.divmod(gp);
                if (!r.is_zero()) continue;
                out.push_back(gp);
                f = primitive_part(q);
                std::vector<CLD> rest;
                for (int i = 0; i < int(roots.size()); ++i)
                    if (std::find(idx.begin(), idx.end(), i) == idx.end()) rest.push_back(roots[i]);
                roots = std::move(rest);
                found = true;
                break;
            } while (next_combination(idx, n));
        }
        if (!found) {
            out.push_back(f);
            return out;
        }
    }
}

}  // namespace

std::vector<CLD> approx_roots(const PolyQ& p) {
    int n = p.degree();
    std::vector<CLD> z;
    if (n <= 0) return z;
    std::vector<long double> a(n);
    long double lc = p.lc().get_d();
    long double bound = 1;
    for (int i = 0; i < n; ++i) {
        a[i] = p.coeff(i).get_d() / lc;
        bound = std::max(bound, 1 + std::abs(a[i]));
    }
    CLD seed(0.4L, 0.9L);
    CLD w = 1;
    for (int i = 0; i < n; ++i) {
        z.push_back(w * (bound / 2));
        w *= seed;
    }
    for (int it = 0; it < 2000; ++it) {
        long double delta = 0;
        for (int i = 0; i < n; ++i) {
            CLD den = 1;
            for (int j = 0; j < n; ++j)
                if (j != i) den *= (z[i] - z[j]);
            if (std::abs(den) == 0) den = CLD(1e-30L);
            CLD step = eval_monic(a, z[i]) / den;
            z[i] -= step;
            delta = std::max(delta, std::abs(step));
        }
        if (delta < 1e-30L) break;
    }
    // Newton polish
    std::vector<long double> d(n);
    for (int i = 1; i <= n; ++i) d[i - 1] = i * (i < n ? a[i] : 1.0L);
    for (auto& x : z) {
        for (int k = 0; k < 4; ++k) {
            CLD fx = eval_monic(a, x);
            CLD dx = 0;
            for (int i = n - 1; i >= 0; --i) dx = dx * x + d[i];
            if (std::abs(dx) == 0) break;
            x -= fx / dx;
        }
    }
    return z;
}

std::vector<std::pair<PolyQ, int>> factor_rational(const PolyQ& p) {
    std::vector<std::pair<PolyQ, int>> out;
    auto sqf = squarefree_decomposition(p);
    for (std::size_t i = 0; i < sqf.size(); ++i) {
        if (sqf[i].degree() <= 0) continue;
        for (auto& g : factor_squarefree(sqf[i])) out.emplace_back(g, int(i) + 1);
    }
    return out;
}

std::vector<PolyT> factor_tower(const PolyT& p0) {
    std::vector<PolyT> out;
    if (p0.degree() <= 0) return out;
    PolyT p = radical(p0);
    for (const auto& [g, m] : factor_rational(tower_norm(p))) {
        PolyT h = gcd(p, to_t(g));
        if (h.degree() > 0 && std::find(out.begin(), out.end(), h) == out.end()) out.push_back(h);
    }
    return out;
}

}  // namespace bs
