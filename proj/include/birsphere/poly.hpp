#pragma once
#include <algorithm>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "birsphere/errors.hpp"
#include "birsphere/scalar.hpp"

namespace bs {

inline std::string coeff_string(const Q& q) { return to_string(q); }
inline std::string coeff_string(const TowerReal& t) {
    return t.terms().size() > 1 ? "(" + t.str() + ")" : t.str();
}
inline std::string coeff_string(const CoeffScalar& c) { return c.coeff_str(); }

// Coefficient products computed over a common denominator.
std::vector<TowerReal> mul_coeffs(const std::vector<TowerReal>& a, const std::vector<TowerReal>& b);
std::vector<CoeffScalar> mul_coeffs(const std::vector<CoeffScalar>& a, const std::vector<CoeffScalar>& b);

// Dense univariate polynomial; c[k] is the coefficient of z^k. The zero
// polynomial has no coefficients and degree -1.
template <class K>
class Poly {
public:
    Poly() = default;
    Poly(long v) { if (v) c_.push_back(K(v)); }
    Poly(const K& k) { if (!bs::is_zero(k)) c_.push_back(k); }
    explicit Poly(std::vector<K> c) : c_(std::move(c)) { trim(); }
    static Poly z() { return Poly(std::vector<K>{K(0), K(1)}); }
    static Poly monomial(const K& k, int d) {
        std::vector<K> c(d + 1, K(0));
        c[d] = k;
        return Poly(std::move(c));
    }

    int degree() const { return int(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    const K& lc() const { return c_.back(); }
    K coeff(int k) const { return (k >= 0 && k < int(c_.size())) ? c_[k] : K(0); }
    const std::vector<K>& coeffs() const { return c_; }

    Poly operator-() const {
        Poly r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }
    Poly& operator+=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), K(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), K(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        if constexpr (std::is_same_v<K, TowerReal> || std::is_same_v<K, CoeffScalar>) {
            if (a.c_.size() > 2 && b.c_.size() > 2) return Poly(mul_coeffs(a.c_, b.c_));
        }
        std::vector<K> r(a.c_.size() + b.c_.size() - 1, K(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (bs::is_zero(a.c_[i])) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) {
                if (bs::is_zero(b.c_[j])) continue;
                r[i + j] += a.c_[i] * b.c_[j];
            }
        }
        return Poly(std::move(r));
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    Poly scaled(const K& k) const {
        if (bs::is_zero(k)) return Poly();
        Poly r = *this;
        for (auto& x : r.c_) x *= k;
        return r;
    }
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    // Euclidean division over the coefficient field.
    std::pair<Poly, Poly> divmod(const Poly& d) const {
        if (d.is_zero()) throw DomainError("DivisionByZero", "polynomial division by zero");
        if (degree() < d.degree()) return {Poly(), *this};
        std::vector<K> r = c_;
        std::vector<K> q(c_.size() - d.c_.size() + 1, K(0));
        K inv = K(1) / d.lc();
        for (int k = int(r.size()) - 1; k >= d.degree(); --k) {
            if (bs::is_zero(r[k])) continue;
            K f = r[k] * inv;
            q[k - d.degree()] = f;
            for (int j = 0; j <= d.degree(); ++j) r[k - d.degree() + j] -= f * d.c_[j];
        }
        r.resize(d.c_.size() - 1);
        return {Poly(std::move(q)), Poly(std::move(r))};
    }
    friend Poly operator%(const Poly& a, const Poly& b) { return a.divmod(b).second; }
    // Exact quotient; throws when the division leaves a remainder.
    Poly exact_div(const Poly& d) const {
        auto [q, r] = divmod(d);
        if (!r.is_zero()) throw DomainError("InexactDivision", "polynomial division has a remainder");
        return q;
    }
    bool divisible_by(const Poly& d) const { return divmod(d).second.is_zero(); }

    Poly monic() const { return is_zero() ? *this : scaled(K(1) / lc()); }
    Poly derivative() const {
        if (c_.size() <= 1) return Poly();
        std::vector<K> r(c_.size() - 1, K(0));
        for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * K(long(i));
        return Poly(std::move(r));
    }
    template <class V>
    V eval(const V& x) const {
        V r(0);
        for (int i = degree(); i >= 0; --i) r = r * x + V(c_[i]);
        return r;
    }
    Poly conj() const {
        Poly r = *this;
        for (auto& x : r.c_) x = bs::conj(x);
        return r;
    }
    // z -> -z
    Poly eta() const {
        Poly r = *this;
        for (std::size_t i = 1; i < r.c_.size(); i += 2) r.c_[i] = -r.c_[i];
        return r;
    }
    Poly compose(const Poly& q) const {
        Poly r;
        for (int i = degree(); i >= 0; --i) r = r * q + Poly(c_[i]);
        return r;
    }
    // (g z + d)^n * p((a z + b)/(g z + d)) for n >= degree.
    Poly compose_mobius(const K& a, const K& b, const K& g, const K& d, int n) const {
        Poly num(std::vector<K>{b, a}), den(std::vector<K>{d, g});
        Poly r;
        std::vector<Poly> dp(n + 1);
        dp[0] = Poly(K(1));
        for (int i = 1; i <= n; ++i) dp[i] = dp[i - 1] * den;
        Poly np(K(1));
        for (int i = 0; i <= degree(); ++i) {
            if (!bs::is_zero(c_[i])) r += (np * dp[n - i]).scaled(c_[i]);
            np = np * num;
        }
        return r;
    }
    // p(z) = q(z^2) when p is even; returns q.
    Poly even_part_in_w() const {
        std::vector<K> r;
        for (std::size_t i = 0; i < c_.size(); i += 2) r.push_back(c_[i]);
        return Poly(std::move(r));
    }
    Poly subst_square() const {
        if (is_zero()) return *this;
        std::vector<K> r(2 * c_.size() - 1, K(0));
        for (std::size_t i = 0; i < c_.size(); ++i) r[2 * i] = c_[i];
        return Poly(std::move(r));
    }
    bool is_even() const {
        for (std::size_t i = 1; i < c_.size(); i += 2)
            if (!bs::is_zero(c_[i])) return false;
        return true;
    }
    Poly pow(int e) const {
        Poly r(K(1)), b = *this;
        while (e > 0) {
            if (e & 1) r = r * b;
            b = b * b;
            e >>= 1;
        }
        return r;
    }

    std::string str(const std::string& var = "z") const {
        if (c_.empty()) return "0";
        std::string out;
        bool first = true;
        for (int k = degree(); k >= 0; --k) {
            if (bs::is_zero(c_[k])) continue;
            std::string mono = k == 0 ? "" : (k == 1 ? var : var + "^" + std::to_string(k));
            std::string s;
            std::string cs = coeff_string(c_[k]);
            if (k == 0) s = cs;
            else if (c_[k] == K(1)) s = mono;
            else if (c_[k] == K(-1)) s = "-" + mono;
            else s = cs + "*" + mono;
            if (first) out = s;
            else if (s[0] == '-') out += " - " + s.substr(1);
            else out += " + " + s;
            first = false;
        }
        return out;
    }

    template <class F>
    auto map(F f) const {
        using R = decltype(f(c_[0]));
        std::vector<R> r;
        r.reserve(c_.size());
        for (const auto& x : c_) r.push_back(f(x));
        return Poly<R>(std::move(r));
    }

private:
    std::vector<K> c_;
    void trim() {
        while (!c_.empty() && bs::is_zero(c_.back())) c_.pop_back();
    }
};

template <class K>
Poly<K> gcd(Poly<K> a, Poly<K> b) {
    while (!b.is_zero()) {
        Poly<K> r = a % b;
        a = std::move(b);
        b = r.is_zero() ? r : r.monic();
    }
    return a.monic();
}

// Product of the distinct irreducible factors, monic.
template <class K>
Poly<K> radical(const Poly<K>& p) {
    if (p.degree() <= 0) return Poly<K>(K(1));
    Poly<K> g = gcd(p, p.derivative());
    return p.exact_div(g).monic();
}

// Yun decomposition: p = lc * prod_i f_i^i with f_i square-free, coprime, monic.
// Entry i-1 holds f_i.
template <class K>
std::vector<Poly<K>> squarefree_decomposition(const Poly<K>& p) {
    std::vector<Poly<K>> out;
    if (p.degree() <= 0) return out;
    Poly<K> a = p.monic();
    Poly<K> d = a.derivative();
    Poly<K> g = gcd(a, d);
    Poly<K> b = a.exact_div(g);
    Poly<K> c = d.exact_div(g);
    Poly<K> e = c - b.derivative();
    while (b.degree() > 0) {
        Poly<K> f = gcd(b, e);
        out.push_back(f);
        b = b.exact_div(f);
        c = e.exact_div(f);
        e = c - b.derivative();
    }
    while (!out.empty() && out.back().degree() == 0) out.pop_back();
    return out;
}

using PolyQ = Poly<Q>;
using PolyT = Poly<TowerReal>;
using PolyC = Poly<CoeffScalar>;

inline PolyC to_c(const PolyQ& p) { return p.map([](const Q& q) { return CoeffScalar(q); }); }
inline PolyC to_c(const PolyT& p) { return p.map([](const TowerReal& t) { return CoeffScalar(t); }); }
inline bool is_real(const PolyC& p) {
    for (const auto& c : p.coeffs())
        if (!c.is_real()) return false;
    return true;
}
inline bool is_rational(const PolyC& p) {
    for (const auto& c : p.coeffs())
        if (!c.is_rational()) return false;
    return true;
}
// Real part extraction; throws NotRealPolynomial when an imaginary part is present.
PolyT to_real(const PolyC& p);
PolyQ to_rational(const PolyC& p);
PolyQ to_rational(const PolyT& p);
inline PolyT to_t(const PolyQ& p) { return p.map([](const Q& q) { return TowerReal(q); }); }

// Primitive integer polynomial with positive leading coefficient.
PolyQ primitive_part(const PolyQ& p);
// Q[z]-norm of a tower polynomial: product over distinct Galois conjugates.
PolyQ tower_norm(const PolyT& p);

inline const PolyC& h_poly() {
    static const PolyC h(std::vector<CoeffScalar>{CoeffScalar(1), CoeffScalar(0), CoeffScalar(-1)});
    return h;
}

}  // namespace bs
