#include "birsphere/tower.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <mutex>

#include "birsphere/errors.hpp"

namespace bs {

namespace {
std::mutex g_mu;
std::vector<Z> g_primes;
std::map<Z, std::size_t> g_index;
}  // namespace

std::size_t tower_prime_index(const Z& p) {
    std::lock_guard<std::mutex> lk(g_mu);
    auto it = g_index.find(p);
    if (it != g_index.end()) return it->second;
    if (g_primes.size() >= 64) throw UnsupportedExtension("more than 64 radicand primes");
    g_primes.push_back(p);
    g_index[p] = g_primes.size() - 1;
    return g_primes.size() - 1;
}

Z tower_prime(std::size_t index) {
    std::lock_guard<std::mutex> lk(g_mu);
    return g_primes.at(index);
}

Z tower_radicand(std::uint64_t mask) {
    if (std::popcount(mask) == 1) return tower_prime(std::countr_zero(mask));
    Z r = 1;
    while (mask) {
        int b = std::countr_zero(mask);
        r *= tower_prime(b);
        mask &= mask - 1;
    }
    return r;
}

TowerReal TowerReal::sqrt_of(const Q& q) {
    if (sgn(q) < 0) throw DomainError("NegativeRadicand", "sqrt of negative rational");
    TowerReal out;
    if (sgn(q) == 0) return out;
    Z n = q.get_num() * q.get_den();
    auto sp = split_square_free(n);
    std::uint64_t mask = 0;
    for (const auto& p : sp.primes) mask |= std::uint64_t(1) << tower_prime_index(p);
    Q c(sp.square_root, q.get_den());
    c.canonicalize();
    out.terms_.push_back({mask, c});
    return out;
}

Q TowerReal::rational_value() const {
    if (terms_.empty()) return Q(0);
    if (terms_.size() != 1 || terms_[0].mask != 0) throw DomainError("NotRational", str());
    return terms_[0].c;
}

std::uint64_t TowerReal::support() const {
    std::uint64_t s = 0;
    for (const auto& t : terms_) s |= t.mask;
    return s;
}

void TowerReal::add_term(std::uint64_t mask, const Q& c) {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), mask,
                               [](const Term& t, std::uint64_t m) { return t.mask < m; });
    if (it != terms_.end() && it->mask == mask) {
        it->c += c;
        if (sgn(it->c) == 0) terms_.erase(it);
    } else if (sgn(c)) {
        terms_.insert(it, {mask, c});
    }
}

void TowerReal::normalize() {
    std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) { return a.mask < b.mask; });
    std::vector<Term> out;
    for (auto& t : terms_) {
        if (!out.empty() && out.back().mask == t.mask) out.back().c += t.c;
        else out.push_back(t);
    }
    out.erase(std::remove_if(out.begin(), out.end(), [](const Term& t) { return sgn(t.c) == 0; }), out.end());
    terms_ = std::move(out);
}

TowerReal TowerReal::operator-() const {
    TowerReal r = *this;
    for (auto& t : r.terms_) t.c = -t.c;
    return r;
}

namespace {

// Sorted merge of a + sign * b.
std::vector<TowerReal::Term> merge_terms(const std::vector<TowerReal::Term>& a,
                                         const std::vector<TowerReal::Term>& b, bool negate) {
    std::vector<TowerReal::Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].mask < b[j].mask)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].mask < a[i].mask) {
            out.push_back({b[j].mask, negate ? Q(-b[j].c) : b[j].c});
            ++j;
        } else {
            Q c = negate ? Q(a[i].c - b[j].c) : Q(a[i].c + b[j].c);
            if (sgn(c)) out.push_back({a[i].mask, std::move(c)});
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace

TowerReal& TowerReal::operator+=(const TowerReal& o) {
    if (o.terms_.empty()) return *this;
    if (o.terms_.size() == 1) {
        add_term(o.terms_[0].mask, o.terms_[0].c);
        return *this;
    }
    terms_ = merge_terms(terms_, o.terms_, false);
    return *this;
}

TowerReal& TowerReal::operator-=(const TowerReal& o) {
    if (o.terms_.empty()) return *this;
    if (o.terms_.size() == 1 && terms_.size() == 1 && terms_[0].mask == o.terms_[0].mask) {
        terms_[0].c -= o.terms_[0].c;
        if (!sgn(terms_[0].c)) terms_.clear();
        return *this;
    }
    terms_ = merge_terms(terms_, o.terms_, true);
    return *this;
}

TowerReal operator*(const TowerReal& a, const TowerReal& b) {
    TowerReal r;
    if (a.terms_.empty() || b.terms_.empty()) return r;
    if (a.terms_.size() == 1 && b.terms_.size() == 1) {
        const auto &x = a.terms_[0], &y = b.terms_[0];
        Q c = x.c * y.c;
        if (std::uint64_t common = x.mask & y.mask) c *= Q(tower_radicand(common));
        r.terms_.push_back({x.mask ^ y.mask, std::move(c)});
        return r;
    }
    r.terms_.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& x : a.terms_) {
        for (const auto& y : b.terms_) {
            Q c = x.c * y.c;
            if (std::uint64_t common = x.mask & y.mask) c *= Q(tower_radicand(common));
            r.terms_.push_back({x.mask ^ y.mask, std::move(c)});
        }
    }
    r.normalize();
    return r;
}

TowerReal& TowerReal::operator*=(const TowerReal& o) {
    if (terms_.size() == 1 && o.terms_.size() == 1 && terms_[0].mask == 0 && o.terms_[0].mask == 0) {
        terms_[0].c *= o.terms_[0].c;
        return *this;
    }
    *this = *this * o;
    return *this;
}

bool operator==(const TowerReal& a, const TowerReal& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
        if (a.terms_[i].mask != b.terms_[i].mask || a.terms_[i].c != b.terms_[i].c) return false;
    }
    return true;
}

TowerReal TowerReal::inverse() const {
    if (terms_.empty()) throw DomainError("DivisionByZero", "inverse of zero tower element");
    if (is_rational()) return TowerReal(Q(1) / terms_[0].c);
    std::uint64_t s = support();
    int bit = 63 - std::countl_zero(s);
    std::uint64_t flip = std::uint64_t(1) << bit;
    TowerReal c = galois(flip);
    TowerReal n = *this * c;  // free of sqrt(p_bit)
    return c * n.inverse();
}

TowerReal TowerReal::galois(std::uint64_t flip) const {
    TowerReal r = *this;
    for (auto& t : r.terms_) {
        if (std::popcount(t.mask & flip) % 2) t.c = -t.c;
    }
    return r;
}

void TowerReal::enclose(unsigned bits, Q& lo, Q& hi) const {
    lo = 0;
    hi = 0;
    Z scale = Z(1) << bits;
    for (const auto& t : terms_) {
        if (t.mask == 0) {
            lo += t.c;
            hi += t.c;
            continue;
        }
        Z n = tower_radicand(t.mask) * scale * scale;
        Z s;
        mpz_sqrt(s.get_mpz_t(), n.get_mpz_t());
        Q a(s, scale), b(s + 1, scale);
        a.canonicalize();
        b.canonicalize();
        if (sgn(t.c) > 0) {
            lo += t.c * a;
            hi += t.c * b;
        } else {
            lo += t.c * b;
            hi += t.c * a;
        }
    }
}

int TowerReal::sign() const {
    if (terms_.empty()) return 0;
    if (is_rational()) return sgn(terms_[0].c);
    for (unsigned bits = 32;; bits *= 2) {
        Q lo, hi;
        enclose(bits, lo, hi);
        if (sgn(lo) > 0) return 1;
        if (sgn(hi) < 0) return -1;
        if (bits > (1u << 20)) throw std::logic_error("tower sign refinement diverged");
    }
}

double TowerReal::to_double() const {
    double v = 0;
    for (const auto& t : terms_) v += t.c.get_d() * std::sqrt(tower_radicand(t.mask).get_d());
    return v;
}

std::string TowerReal::str() const {
    if (terms_.empty()) return "0";
    std::vector<Term> ts = terms_;
    std::sort(ts.begin(), ts.end(), [](const Term& a, const Term& b) {
        return tower_radicand(a.mask) < tower_radicand(b.mask);
    });
    std::string out;
    for (std::size_t i = 0; i < ts.size(); ++i) {
        const auto& t = ts[i];
        bool neg = sgn(t.c) < 0;
        Q a = abs(t.c);
        std::string body;
        if (t.mask == 0) {
            body = to_string(a);
        } else {
            std::string r = "sqrt(" + tower_radicand(t.mask).get_str() + ")";
            body = (a == 1) ? r : to_string(a) + "*" + r;
        }
        if (i == 0) out += (neg ? "-" : "") + body;
        else out += (neg ? " - " : " + ") + body;
    }
    return out;
}

namespace {
std::optional<TowerReal> sqrt_rec(const TowerReal& x, int depth) {
    int s = x.sign();
    if (s < 0) return std::nullopt;
    if (s == 0) return TowerReal();
    if (x.is_rational()) return TowerReal::sqrt_of(x.rational_value());
    if (depth > 8) return std::nullopt;
    std::uint64_t sup = x.support();
    int bit = 63 - std::countl_zero(sup);
    std::uint64_t pm = std::uint64_t(1) << bit;
    TowerReal P(Q(tower_prime(bit)));
    TowerReal rootP = TowerReal::sqrt_of(Q(tower_prime(bit)));
    TowerReal a, b;
    for (const auto& t : x.terms()) {
        TowerReal m;
        if (t.mask & pm) {
            // c*sqrt(p*R) = (c*sqrt(R)) * sqrt(p)
            TowerReal piece = TowerReal::sqrt_of(Q(tower_radicand(t.mask ^ pm)));
            b += piece * TowerReal(t.c);
        } else {
            a += t.mask ? TowerReal::sqrt_of(Q(tower_radicand(t.mask))) * TowerReal(t.c) : TowerReal(t.c);
        }
    }
    TowerReal N = a * a - P * b * b;
    auto sN = sqrt_rec(N, depth + 1);
    if (!sN) return std::nullopt;
    for (int sg : {1, -1}) {
        TowerReal u2 = (a + (sg > 0 ? *sN : -*sN)) * TowerReal(Q(1, 2));
        if (u2.sign() < 0) continue;
        TowerReal cand;
        if (u2.is_zero()) {
            auto v = sqrt_rec(a / P, depth + 1);
            if (!v) continue;
            cand = *v * rootP;
        } else {
            auto u = sqrt_rec(u2, depth + 1);
            if (!u) continue;
            TowerReal v = b / (TowerReal(2) * *u);
            cand = *u + v * rootP;
        }
        if (cand * cand == x) {
            if (cand.sign() < 0) cand = -cand;
            return cand;
        }
    }
    return std::nullopt;
}
}  // namespace

std::optional<TowerReal> tower_sqrt(const TowerReal& x) { return sqrt_rec(x, 0); }

std::vector<TowerReal> galois_orbit(const TowerReal& x) {
    std::vector<std::size_t> bits;
    std::uint64_t primes = x.support();
    for (int b = 0; b < 64; ++b) {
        if (primes & (std::uint64_t(1) << b)) bits.push_back(b);
    }
    std::vector<TowerReal> out;
    std::size_t n = bits.size();
    for (std::uint64_t sub = 0; sub < (std::uint64_t(1) << n); ++sub) {
        std::uint64_t flip = 0;
        for (std::size_t k = 0; k < n; ++k) {
            if (sub & (std::uint64_t(1) << k)) flip |= std::uint64_t(1) << bits[k];
        }
        TowerReal y = x.galois(flip);
        if (std::find(out.begin(), out.end(), y) == out.end()) out.push_back(y);
    }
    return out;
}

}  // namespace bs
