#include "birsphere/realroots.hpp"

namespace bs {

namespace {

PolyT positive_scaled(const PolyT& p) {
    if (p.is_zero()) return p;
    TowerReal l = p.lc();
    if (l.sign() < 0) l = -l;
    return p.scaled(l.inverse());
}

int sign_at_inf(const PolyT& p, bool plus) {
    if (p.is_zero()) return 0;
    int s = p.lc().sign();
    if (!plus && p.degree() % 2) s = -s;
    return s;
}

int variations(const std::vector<PolyT>& seq, const Endpoint& x, bool right) {
    int count = 0, last = 0;
    for (const auto& q : seq) {
        int s = x ? sign_at(q, *x) : sign_at_inf(q, right);
        if (s == 0) continue;
        if (last != 0 && s != last) ++count;
        last = s;
    }
    return count;
}

void isolate_rec(const PolyT& r, const std::vector<PolyT>& seq, const Q& a, const Q& b,
                 std::vector<std::pair<Q, Q>>& out) {
    int n = variations(seq, a, false) - variations(seq, b, true) - (sign_at(r, b) == 0 ? 1 : 0);
    if (n == 0) return;
    if (n == 1) {
        out.emplace_back(a, b);
        return;
    }
    Q m = (a + b) / 2;
    isolate_rec(r, seq, a, m, out);
    if (sign_at(r, m) == 0) out.emplace_back(m, m);
    isolate_rec(r, seq, m, b, out);
}

}  // namespace

int sign_at(const PolyT& p, const Q& x) { return p.eval(TowerReal(x)).sign(); }

std::vector<PolyT> sturm_sequence(const PolyT& p) {
    std::vector<PolyT> seq;
    if (p.is_zero()) return seq;
    seq.push_back(positive_scaled(p));
    PolyT d = p.derivative();
    if (d.is_zero()) return seq;
    seq.push_back(positive_scaled(d));
    for (;;) {
        PolyT r = -(seq[seq.size() - 2] % seq.back());
        if (r.is_zero()) break;
        seq.push_back(positive_scaled(r));
    }
    return seq;
}

int sturm_count(const PolyT& p, const Endpoint& lo, const Endpoint& hi) {
    if (p.is_zero()) throw DomainError("ZeroPolynomial", "root count of the zero polynomial");
    if (lo && hi && *lo >= *hi) return 0;
    PolyT r = radical(p);
    if (r.degree() <= 0) return 0;
    auto seq = sturm_sequence(r);
    int n = variations(seq, lo, false) - variations(seq, hi, true);
    if (hi && sign_at(r, *hi) == 0) --n;
    return n;
}

int sturm_count(const PolyQ& p, const Endpoint& lo, const Endpoint& hi) { return sturm_count(to_t(p), lo, hi); }

Q root_bound(const PolyT& p) {
    Q best = 0;
    TowerReal inv = p.lc().inverse();
    for (int i = 0; i < p.degree(); ++i) {
        Q lo, hi;
        (p.coeff(i) * inv).enclose(16, lo, hi);
        Q m = std::max(abs(lo), abs(hi));
        if (m > best) best = m;
    }
    Z c = best.get_num() / best.get_den();
    return Q(c + 2);
}

std::vector<std::pair<Q, Q>> isolate_roots(const PolyT& p, const Endpoint& lo, const Endpoint& hi) {
    std::vector<std::pair<Q, Q>> out;
    if (p.is_zero()) throw DomainError("ZeroPolynomial", "root isolation of the zero polynomial");
    PolyT r = radical(p);
    if (r.degree() <= 0) return out;
    Q B = root_bound(r);
    Q a = lo ? *lo : -B;
    Q b = hi ? *hi : B;
    if (a >= b) return out;
    auto seq = sturm_sequence(r);
    isolate_rec(r, seq, a, b, out);
    return out;
}

void refine_root(const PolyT& p, std::pair<Q, Q>& iv, const Q& w) {
    PolyT r = radical(p);
    while (iv.first != iv.second && iv.second - iv.first > w) {
        Q m = (iv.first + iv.second) / 2;
        if (sign_at(r, m) == 0) {
            iv = {m, m};
            return;
        }
        if (sturm_count(r, iv.first, m) == 1) iv.second = m;
        else iv.first = m;
    }
}

int sign_at_root(const PolyT& q, const PolyT& p, std::pair<Q, Q> iv) {
    if (iv.first == iv.second) return sign_at(q, iv.first);
    if (q.is_zero()) return 0;
    PolyT r = radical(p);
    PolyT g = gcd(r, q);
    if (g.degree() > 0 && sturm_count(g, iv.first, iv.second) > 0) return 0;
    if (q.degree() <= 0) return q.lc().sign();
    while (sturm_count(q, iv.first, iv.second) > 0) {
        Q m = (iv.first + iv.second) / 2;
        if (sign_at(r, m) == 0) return sign_at(q, m);
        if (sturm_count(r, iv.first, m) == 1) iv.second = m;
        else iv.first = m;
    }
    return sign_at(q, (iv.first + iv.second) / 2);
}

}  // namespace bs
