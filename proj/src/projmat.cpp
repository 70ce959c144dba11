#include <algorithm>
#include "birsphere/projmat.hpp"

#include "birsphere/parse.hpp"

namespace bs {

int Mat2::max_degree() const { return std::max({a.degree(), b.degree(), c.degree(), d.degree(), 0}); }

Mat2 Mat2::subst(const CoeffScalar& al, const CoeffScalar& be, const CoeffScalar& g, const CoeffScalar& dd) const {
    int n = max_degree();
    return {a.compose_mobius(al, be, g, dd, n), b.compose_mobius(al, be, g, dd, n),
            c.compose_mobius(al, be, g, dd, n), d.compose_mobius(al, be, g, dd, n)};
}

std::array<CoeffScalar, 4> Mat2::at(const CoeffScalar& z0) const {
    return {a.eval(z0), b.eval(z0), c.eval(z0), d.eval(z0)};
}

std::string Mat2::str() const {
    return "[[" + a.str() + ", " + b.str() + "], [" + c.str() + ", " + d.str() + "]]";
}

bool proportional(const Mat2& x, const Mat2& y) {
    const PolyC* u[4] = {&x.a, &x.b, &x.c, &x.d};
    const PolyC* v[4] = {&y.a, &y.b, &y.c, &y.d};
    int k = -1;
    for (int i = 0; i < 4; ++i) {
        if (u[i]->is_zero() != v[i]->is_zero()) return false;
        if (k < 0 && !u[i]->is_zero()) k = i;
    }
    if (k < 0) return false;
    for (int j = k + 1; j < 4; ++j)
        if (!u[j]->is_zero() && *u[k] * *v[j] != *u[j] * *v[k]) return false;
    return true;
}

std::optional<PolyC> scalar_ratio(const Mat2& x, const Mat2& y) {
    if (!proportional(x, y)) return std::nullopt;
    const PolyC* u[4] = {&x.a, &x.b, &x.c, &x.d};
    const PolyC* v[4] = {&y.a, &y.b, &y.c, &y.d};
    for (int i = 0; i < 4; ++i) {
        if (v[i]->is_zero()) continue;
        auto [q, r] = u[i]->divmod(*v[i]);
        if (!r.is_zero()) return std::nullopt;
        return q;
    }
    return std::nullopt;
}

ProjMat::ProjMat(const Mat2& m) : m_(m) {
    if (m.det().is_zero()) throw DomainError("SingularMatrix", "determinant vanishes identically: " + m.str());
    std::vector<const PolyC*> es;
    for (const PolyC* e : {&m.a, &m.b, &m.c, &m.d})
        if (!e->is_zero()) es.push_back(e);
    std::sort(es.begin(), es.end(), [](const PolyC* x, const PolyC* y) { return x->degree() < y->degree(); });
    PolyC g = *es[0];
    for (std::size_t i = 1; i < es.size() && g.degree() > 0; ++i) g = gcd(*es[i], g);
    if (g.degree() > 0) m_ = {m.a.exact_div(g), m.b.exact_div(g), m.c.exact_div(g), m.d.exact_div(g)};
    *this = from_primitive(m_);
}

ProjMat ProjMat::from_primitive(const Mat2& m) {
    ProjMat r;
    const PolyC& first = !m.a.is_zero() ? m.a : (!m.b.is_zero() ? m.b : m.c);
    r.m_ = m.scaled(PolyC(CoeffScalar(1) / first.lc()));
    return r;
}

ProjMat ProjMat::parse(const std::string& s) {
    auto e = parse_matrix_entries(s);
    return ProjMat(e[0], e[1], e[2], e[3]);
}

ProjMat pgl_mul(const ProjMat& x, const ProjMat& y) {
    // a common factor of the entries of x y divides both determinants
    Mat2 m = x.lift() * y.lift();
    PolyC dx = x.det(), dy = y.det();
    if (dx.degree() > dy.degree()) std::swap(dx, dy);
    PolyC g = dx;
    for (const PolyC* e : {&dy, &m.a, &m.b, &m.c, &m.d}) {
        if (g.degree() <= 0) break;
        if (!e->is_zero()) g = gcd(g, *e % g);
    }
    if (g.degree() > 0) m = {m.a.exact_div(g), m.b.exact_div(g), m.c.exact_div(g), m.d.exact_div(g)};
    return ProjMat::from_primitive(m);
}

ProjMat pgl_inv(const ProjMat& x) { return ProjMat::from_primitive(x.lift().adj()); }

ProjMat pgl_pow(const ProjMat& x, int n) {
    if (n < 0) return pgl_pow(pgl_inv(x), -n);
    ProjMat r;
    for (int k = 0; k < n; ++k) r = r * x;
    return r;
}

std::optional<int> pgl_order(const ProjMat& x, int max_order) {
    if (x.is_identity()) return 1;
    // eigenvalue ratio zeta satisfies zeta + 1/zeta = tr^2/det - 2; the order is
    // the least n with zeta^n + zeta^-n = 2
    const Mat2& l = x.lift();
    PolyC tr = l.trace(), det = l.det();
    PolyC t2 = tr * tr;
    CoeffScalar kappa;
    if (!t2.is_zero()) {
        if (t2.degree() != det.degree() || t2.scaled(det.lc()) != det.scaled(t2.lc())) return std::nullopt;
        kappa = t2.lc() / det.lc();
    }
    CoeffScalar c = kappa - CoeffScalar(2), two(2);
    if (c == two) return std::nullopt;
    CoeffScalar prev = two, cur = c;
    for (int n = 2; n <= max_order; ++n) {
        CoeffScalar next = c * cur - prev;
        prev = cur;
        cur = next;
        if (cur == two) return n;
    }
    return std::nullopt;
}

FiberPoint act_on_fiber(const Mat2& x, const FiberPoint& t, const CoeffScalar& z0) {
    auto v = x.at(z0);
    if (v[0].is_zero() && v[1].is_zero() && v[2].is_zero() && v[3].is_zero())
        throw DomainError("IndeterminateFiber", "matrix vanishes at z = " + z0.str());
    CoeffScalar num = t ? v[0] * *t + v[1] : v[0];
    CoeffScalar den = t ? v[2] * *t + v[3] : v[2];
    if (num.is_zero() && den.is_zero())
        throw DomainError("IndeterminateFiber", "point is in the kernel at z = " + z0.str());
    if (den.is_zero()) return std::nullopt;
    return num / den;
}

RatFn eigen_ratio_trace_invariant(const ProjMat& x) {
    PolyC t = x.lift().trace();
    return RatFn(t * t, x.lift().det());
}

}  // namespace bs
