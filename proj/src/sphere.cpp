#include "birsphere/sphere.hpp"

#include <numeric>

#include "birsphere/positive.hpp"
#include "birsphere/realroots.hpp"

namespace bs {

namespace {

const PolyC& hp() { return h_poly(); }

PolyC cpoly(std::initializer_list<CoeffScalar> c) { return PolyC(std::vector<CoeffScalar>(c)); }

bool is_one(const TowerReal& x) { return x == TowerReal(1); }

// |b| < 1
bool inside_interval(const TowerReal& b) { return (TowerReal(1) - b * b).sign() > 0; }

}  // namespace

BaseMobius::BaseMobius(const TowerReal& p, const TowerReal& q, const TowerReal& r, const TowerReal& s)
    : m_{p, q, r, s} {
    if ((p * s - q * r).is_zero()) throw DomainError("SingularBase", "base matrix is singular");
    std::size_t first = 0;
    while (m_[first].is_zero()) ++first;
    TowerReal inv = m_[first].inverse();
    for (auto& x : m_) x *= inv;
    auto bad = [this]() { return DomainError("BaseNotIntervalPreserving", str()); };
    if (!is_one(m_[0])) throw bad();
    const TowerReal &bq = m_[1], &br = m_[2], &bs_ = m_[3];
    if (bq.is_zero() && br.is_zero()) {
        if (is_one(bs_)) kind_ = Kind::Identity;
        else if (is_one(-bs_)) kind_ = Kind::Neg;
        else throw bad();
    } else if (is_one(bs_) && bq == br && inside_interval(bq)) {
        kind_ = Kind::Interval;
        b_ = bq;
    } else if (is_one(-bs_) && bq == -br && inside_interval(br)) {
        kind_ = Kind::Involution;
        b_ = br;
    } else {
        throw bad();
    }
}

BaseMobius BaseMobius::inverse() const { return BaseMobius(m_[3], -m_[1], -m_[2], m_[0]); }

BaseMobius operator*(const BaseMobius& x, const BaseMobius& y) {
    const auto &a = x.m_, &b = y.m_;
    return BaseMobius(a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2],
                      a[2] * b[1] + a[3] * b[3]);
}

std::optional<CoeffScalar> BaseMobius::apply(const CoeffScalar& z) const {
    CoeffScalar den = CoeffScalar(m_[2]) * z + CoeffScalar(m_[3]);
    if (den.is_zero()) return std::nullopt;
    return (CoeffScalar(m_[0]) * z + CoeffScalar(m_[1])) / den;
}

std::string BaseMobius::str() const {
    switch (kind_) {
        case Kind::Identity: return "id";
        case Kind::Neg: return "neg";
        default: break;
    }
    return "[[" + m_[0].str() + ", " + m_[1].str() + "], [" + m_[2].str() + ", " + m_[3].str() + "]]";
}

Mat2 compose_with_base(const Mat2& a, const BaseMobius& m) {
    if (m.is_identity()) return a;
    const auto& b = m.m();
    return a.subst(CoeffScalar(b[0]), CoeffScalar(b[1]), CoeffScalar(b[2]), CoeffScalar(b[3]));
}

SphereMap SphereMap::inverse() const {
    BaseMobius mi = base.inverse();
    return {ProjMat(compose_with_base(fiber.lift(), mi).adj()), mi};
}

std::string SphereMap::str() const { return "{fiber: " + fiber.str() + ", base: " + base.str() + "}"; }

SphereMap compose(const SphereMap& x, const SphereMap& y) {
    return {ProjMat(compose_with_base(x.fiber.lift(), y.base) * y.fiber.lift()), x.base * y.base};
}

std::optional<int> sphere_order(const SphereMap& g, int max_order) {
    SphereMap p = g;
    for (int n = 1; n <= max_order; ++n) {
        if (p.fiber.is_identity() && p.base.is_identity()) return n;
        p = p * g;
    }
    return std::nullopt;
}

bool on_sphere(const SpherePoint& p) {
    return p[0] * p[0] == p[1] * p[1] + p[2] * p[2] + p[3] * p[3];
}

bool same_point(const SpherePoint& a, const SpherePoint& b) {
    bool az = true, bz = true;
    for (int i = 0; i < 4; ++i) {
        az = az && a[i].is_zero();
        bz = bz && b[i].is_zero();
    }
    if (az || bz) return false;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (a[i] * b[j] != a[j] * b[i]) return false;
    return true;
}

SpherePoint conj_point(const SpherePoint& p) { return {p[0].conj(), p[1].conj(), p[2].conj(), p[3].conj()}; }

PsiImage psi_forward(const SpherePoint& p) {
    if (!on_sphere(p)) throw DomainError("NotOnSphere", "point does not satisfy w^2 = x^2 + y^2 + z^2");
    const auto &w = p[0], &x = p[1], &y = p[2], &z = p[3];
    PsiImage r;
    if (w.is_zero() && z.is_zero()) {
        r.base_point = true;
        return r;
    }
    CoeffScalar num = x - CoeffScalar::I() * y;
    if (!w.is_zero()) {
        r.t = num / w;
        r.z = z / w;
    }
    return r;
}

namespace {

template <class S>
std::array<S, 4> psi_inverse_forms(const S& T, const S& U, const S& Z, const S& V, const S& i) {
    S T2V2 = T * T * V * V, Z2U2 = Z * Z * U * U, U2V2 = U * U * V * V;
    return {S(CoeffScalar(2)) * T * U * V * V, T2V2 - Z2U2 + U2V2, i * (T2V2 + Z2U2 - U2V2),
            S(CoeffScalar(2)) * T * Z * U * V};
}

}  // namespace

std::optional<SpherePoint> psi_inverse(const FiberPoint& t, const FiberPoint& z) {
    CoeffScalar T = t ? *t : CoeffScalar(1), U = t ? CoeffScalar(1) : CoeffScalar(0);
    CoeffScalar Z = z ? *z : CoeffScalar(1), V = z ? CoeffScalar(1) : CoeffScalar(0);
    auto r = psi_inverse_forms<CoeffScalar>(T, U, Z, V, CoeffScalar::I());
    if (r[0].is_zero() && r[1].is_zero() && r[2].is_zero() && r[3].is_zero()) return std::nullopt;
    return r;
}

const Mat2& tau_lift() {
    static const Mat2 t{PolyC(), hp(), PolyC(1), PolyC()};
    return t;
}

ProjMat tau() { return ProjMat(tau_lift()); }

bool membership_G(const ProjMat& a) {
    return proportional(tau_lift() * a.lift() * tau_lift(), a.lift().conj());
}

Mat2 GPattern::lift() const { return {a, b * hp(), b.conj(), a.conj()}; }

PolyC GPattern::det() const { return a * a.conj() - b * b.conj() * hp(); }

GPattern canonical_pattern(const ProjMat& am) {
    const Mat2& A = am.lift();
    Mat2 M = tau_lift() * A * tau_lift();
    Mat2 Ab = A.conj();
    if (!proportional(M, Ab)) throw DomainError("NotInG", am.str() + " does not satisfy tau A tau = conj(A)");
    // tau A tau = kappa conj(A); s/conj(s) = h/kappa with s = 1 + h/kappa
    const PolyC* mi[4] = {&M.a, &M.b, &M.c, &M.d};
    const PolyC* ai[4] = {&Ab.a, &Ab.b, &Ab.c, &Ab.d};
    int k = 0;
    while (ai[k]->is_zero()) ++k;
    RatFn kappa(*mi[k], *ai[k]);
    PolyC s = kappa.num() + hp() * kappa.den();
    PolyC scale = s.is_zero() ? PolyC(CoeffScalar::I()) : s * kappa.num().conj();
    Mat2 P = A.scaled(scale);
    // A is primitive, so the content of P is scale
    PolyC g = gcd(scale, scale.conj());
    if (g.degree() > 0) P = {P.a.exact_div(g), P.b.exact_div(g), P.c.exact_div(g), P.d.exact_div(g)};
    GPattern r{P.a, P.b.exact_div(hp())};
    const CoeffScalar& x = !r.a.is_zero() ? r.a.lc() : r.b.lc();
    CoeffScalar n = CoeffScalar(x.re.is_zero() ? x.im : x.re).inverse();
    r.a = r.a.scaled(n);
    r.b = r.b.scaled(n);
    if (!(r.lift() == P.scaled(PolyC(n))) || !proportional(r.lift(), A))
        throw std::logic_error("pattern lift check failed for " + am.str());
    return r;
}

PolyC det_class(const ProjMat& a) { return canonical_pattern(a).det(); }

bool membership_H0(const ProjMat& a) { return is_real_positive(det_class(a)); }

bool membership_H(const ProjMat& a) { return membership_H0(a) || membership_H0(a * tau()); }

std::vector<RealAlgebraic> contracted_fibers(const ProjMat& a) {
    std::vector<RealAlgebraic> out;
    PolyT d = to_real(det_class(a));
    if (d.degree() <= 0) return out;
    for (const auto& iv : isolate_roots(d, Q(-1), Q(1))) out.push_back(RealAlgebraic::root_of(d, iv));
    return out;
}

BoundaryReport boundary_behavior(const ProjMat& a) {
    GPattern p = canonical_pattern(a);
    return {p.a.eval(CoeffScalar(1)).is_zero(), p.a.eval(CoeffScalar(-1)).is_zero()};
}

bool reality_check(const SphereMap& g) {
    const Mat2& A = g.fiber.lift();
    return proportional(A * tau_lift(), compose_with_base(tau_lift(), g.base) * A.conj());
}

BaseReduction reduce_to_trivial_base(const SphereMap& g) {
    switch (g.base.kind()) {
        case BaseMobius::Kind::Identity:
        case BaseMobius::Kind::Neg: return {g, SphereMap::identity()};
        case BaseMobius::Kind::Interval:
            throw DomainError("InfiniteOrderBase", "base " + g.base.str() + " has infinite order");
        case BaseMobius::Kind::Involution: break;
    }
    // [[1,-b],[b,-1]] = k neg k^-1 with k = [[1,c],[c,1]], b = 2c/(1+c^2)
    const TowerReal& b = g.base.parameter();
    auto r = tower_sqrt(TowerReal(1) - b * b);
    if (!r) throw UnsupportedExtension("sqrt(1 - b^2) leaves the tower for b = " + b.str());
    TowerReal c = (TowerReal(1) - *r) / b;
    auto k = tower_sqrt(TowerReal(1) - c * c);
    if (!k) throw UnsupportedExtension("sqrt(1 - c^2) leaves the tower for c = " + c.str());
    SphereMap K{ProjMat(Mat2::diag(PolyC(CoeffScalar(*k)), cpoly({CoeffScalar(1), CoeffScalar(-c)}))),
                BaseMobius::interval(-c)};
    SphereMap red = conjugate(K, g);
    if (!red.base.is_neg()) throw std::logic_error("base reduction did not reach z -> -z");
    return {red, K};
}

namespace {

MPoly homogenize(const PolyC& p, int n) {
    MPoly r;
    MPoly Z = MPoly::var(3), W = MPoly::var(0);
    for (int k = 0; k <= p.degree(); ++k) {
        if (p.coeff(k).is_zero()) continue;
        MPoly m(p.coeff(k));
        for (int j = 0; j < k; ++j) m = m * Z;
        for (int j = k; j < n; ++j) m = m * W;
        r += m;
    }
    return r;
}

CoeffScalar homogenize_at(const PolyC& p, int n, const CoeffScalar& z, const CoeffScalar& w) {
    CoeffScalar r, zp(1);
    std::vector<CoeffScalar> wp(n + 1, CoeffScalar(1));
    for (int k = 1; k <= n; ++k) wp[k] = wp[k - 1] * w;
    for (int k = 0; k <= p.degree(); ++k) {
        if (!p.coeff(k).is_zero()) r += p.coeff(k) * zp * wp[n - k];
        zp *= z;
    }
    return r;
}

}  // namespace

SphereFormula to_sphere_formula(const SphereMap& g) {
    const Mat2& A = g.fiber.lift();
    int n = A.max_degree();
    MPoly W = MPoly::var(0), X = MPoly::var(1), Y = MPoly::var(2), Z = MPoly::var(3);
    MPoly T = X - MPoly(CoeffScalar::I()) * Y;
    MPoly T1 = homogenize(A.a, n) * T + homogenize(A.b, n) * W;
    MPoly U1 = homogenize(A.c, n) * T + homogenize(A.d, n) * W;
    const auto& b = g.base.m();
    MPoly Z1 = MPoly(CoeffScalar(b[0])) * Z + MPoly(CoeffScalar(b[1])) * W;
    MPoly V1 = MPoly(CoeffScalar(b[2])) * Z + MPoly(CoeffScalar(b[3])) * W;
    auto f = psi_inverse_forms<MPoly>(T1, U1, Z1, V1, MPoly(CoeffScalar::I()));
    for (auto& x : f) x = x.reduce_sphere();
    return f;
}

SpherePoint clear_denominators(const SpherePoint& p) {
    Z l = 1;
    for (const auto& c : p)
        for (const TowerReal* part : {&c.re, &c.im})
            for (const auto& t : part->terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.c.get_den_mpz_t());
    if (l == 1) return p;
    CoeffScalar s{TowerReal(Q(l))};
    SpherePoint r = p;
    for (auto& c : r) c *= s;
    return r;
}

std::optional<SpherePoint> eval_sphere(const SphereMap& g, const SpherePoint& pt) {
    SpherePoint p = clear_denominators(pt);
    const Mat2& A = g.fiber.lift();
    int n = A.max_degree();
    const auto &w = p[0], &z = p[3];
    CoeffScalar T = p[1] - CoeffScalar::I() * p[2];
    CoeffScalar T1 = homogenize_at(A.a, n, z, w) * T + homogenize_at(A.b, n, z, w) * w;
    CoeffScalar U1 = homogenize_at(A.c, n, z, w) * T + homogenize_at(A.d, n, z, w) * w;
    const auto& b = g.base.m();
    CoeffScalar Z1 = CoeffScalar(b[0]) * z + CoeffScalar(b[1]) * w;
    CoeffScalar V1 = CoeffScalar(b[2]) * z + CoeffScalar(b[3]) * w;
    auto r = psi_inverse_forms<CoeffScalar>(T1, U1, Z1, V1, CoeffScalar::I());
    if (r[0].is_zero() && r[1].is_zero() && r[2].is_zero() && r[3].is_zero()) return std::nullopt;
    return r;
}

namespace {

CoeffScalar pythagorean_mu(const Q& t) {
    Q d = 1 + t * t;
    return CoeffScalar(TowerReal(Q((1 - t * t) / d)), TowerReal(Q(2 * t / d)));
}

Q parse_param(const std::string& s) {
    try {
        return parse_rational(s);
    } catch (const ParseError&) {
        throw ParseError("bad builtin parameter '" + s + "'");
    }
}

}  // namespace

std::vector<std::string> builtin_names() {
    return {"tau", "upsilon", "antipodal", "tilde_eta", "rot:k/n", "gb:t", "g1p:t", "g2p:t"};
}

SphereMap builtin(const std::string& input) {
    std::string key = input.rfind("builtin:", 0) == 0 ? input.substr(8) : input;
    const CoeffScalar I = CoeffScalar::I();
    PolyC h = hp();
    if (key == "tau") return {tau(), BaseMobius::identity()};
    if (key == "upsilon") return {ProjMat(PolyC(), -h, PolyC(1), PolyC()), BaseMobius::identity()};
    if (key == "antipodal") return {ProjMat(Mat2::diag(PolyC(I), PolyC(-I))), BaseMobius::neg()};
    if (key == "tilde_eta") return {ProjMat::identity(), BaseMobius::neg()};
    auto colon = key.find(':');
    if (colon == std::string::npos) throw ParseError("unknown builtin '" + input + "'");
    std::string name = key.substr(0, colon), arg = key.substr(colon + 1);
    if (name == "rot") {
        auto slash = arg.find('/');
        if (slash == std::string::npos) throw ParseError("rot expects k/n");
        int k, n;
        try {
            k = std::stoi(arg.substr(0, slash));
            n = std::stoi(arg.substr(slash + 1));
        } catch (const std::exception&) {
            throw ParseError("rot expects integers k/n");
        }
        if (n <= 0) throw ParseError("rot needs n > 0");
        return {ProjMat(Mat2::diag(PolyC(1), PolyC(root_of_unity(k, n)))), BaseMobius::identity()};
    }
    Q t = parse_param(arg);
    if (t * t == 1) throw DomainError("BadParameter", "builtin parameter must satisfy t^2 != 1");
    if (name == "gb") {
        // b = 2t/(1+t^2), sqrt(1-b^2) = (1-t^2)/(1+t^2)
        Q s = 1 + t * t;
        CoeffScalar k(TowerReal(Q(1 - t * t)));
        PolyC d = cpoly({CoeffScalar(TowerReal(s)), CoeffScalar(TowerReal(Q(2 * t)))});
        return {ProjMat(Mat2::diag(PolyC(k), d)), BaseMobius::interval(TowerReal(Q(2 * t / s)))};
    }
    if (name == "g1p" || name == "g2p") {
        if (sgn(t) == 0) throw DomainError("BadParameter", "builtin parameter must be nonzero");
        CoeffScalar mu = pythagorean_mu(t);
        CoeffScalar one_mu = CoeffScalar(1) + mu;
        if (name == "g1p")
            return {ProjMat(PolyC(CoeffScalar(-2) * I * mu), h.scaled(one_mu), PolyC(mu * one_mu),
                            PolyC(CoeffScalar(2) * I * mu)),
                    BaseMobius::identity()};
        return {ProjMat(h.scaled(I * one_mu), h.scaled(CoeffScalar(-2)), PolyC(CoeffScalar(-2) * mu),
                        h.scaled(-I * one_mu)),
                BaseMobius::neg()};
    }
    throw ParseError("unknown builtin '" + input + "'");
}

namespace {

bool is_scalar_const(const Mat2& m, CoeffScalar& lambda) {
    if (!m.is_scalar()) return false;
    lambda = m.a.is_zero() ? CoeffScalar() : m.a.coeff(0);
    return m.max_degree() == 0;
}

Mat2 constant(const CoeffScalar& a, const CoeffScalar& b, const CoeffScalar& c, const CoeffScalar& d) {
    return {PolyC(a), PolyC(b), PolyC(c), PolyC(d)};
}

}  // namespace

AutSClass classify_autS(const Mat2& a, bool swap) {
    if (a.max_degree() > 0) throw DomainError("NotConstant", "automorphism datum must be constant");
    if (a.det().is_zero()) throw DomainError("SingularMatrix", a.str());
    AutSClass out;
    const CoeffScalar I = CoeffScalar::I();
    if (!swap) {
        ProjMat A(a);
        auto n = pgl_order(A);
        if (!n) throw DomainError("NotFiniteOrder", a.str());
        out.kind = AutSClass::Kind::Rotation;
        out.n = *n;
        if (*n == 1) {
            out.k = 0;
            out.conjugator = Mat2::identity();
            return out;
        }
        // tr^2/det = 2 + 2 cos(theta)
        CoeffScalar tr = a.trace().coeff(0), det = a.det().coeff(0);
        CoeffScalar cosv = tr * tr / det * CoeffScalar(Q(1, 2)) - CoeffScalar(1);
        for (int k = 1; k < *n; ++k) {
            int g = std::gcd(k, *n);
            if (g != 1) continue;
            if (root_of_unity(k, *n).re == cosv.re) {
                out.k = k;
                break;
            }
        }
        if (out.k == 0) throw std::logic_error("rotation angle not found");
        // eigenvectors for lambda2/lambda1 = e^{i theta}
        auto sq = scalar_sqrt(tr * tr - CoeffScalar(4) * det);
        if (!sq) return out;
        CoeffScalar half(Q(1, 2));
        CoeffScalar l1 = (tr - *sq) * half, l2 = (tr + *sq) * half;
        CoeffScalar zeta = root_of_unity(out.k, *n);
        if (l2 / l1 != zeta) std::swap(l1, l2);
        auto eig = [&](const CoeffScalar& l) -> std::array<CoeffScalar, 2> {
            CoeffScalar a11 = a.a.coeff(0), a12 = a.b.coeff(0), a21 = a.c.coeff(0), a22 = a.d.coeff(0);
            if (!a12.is_zero()) return {a12, l - a11};
            if (!a21.is_zero()) return {l - a22, a21};
            return (l == a11) ? std::array<CoeffScalar, 2>{CoeffScalar(1), CoeffScalar()}
                              : std::array<CoeffScalar, 2>{CoeffScalar(), CoeffScalar(1)};
        };
        auto v1 = eig(l1), v2 = eig(l2);
        Mat2 M = constant(v1[0], v2[0], v1[1], v2[1]);
        Mat2 C = M.adj();
        if (proportional(C * a * M, Mat2::diag(PolyC(1), PolyC(zeta)))) out.conjugator = C;
        return out;
    }
    // swap: (u, v) -> (A v, conj(A) u); square is A conj(A)
    CoeffScalar lambda;
    if (!is_scalar_const(a * a.conj(), lambda)) throw DomainError("NotInvolution", "A conj(A) is not scalar");
    int s = sign(lambda);
    auto r = tower_sqrt(s > 0 ? lambda.re : -lambda.re);
    if (!r) throw UnsupportedExtension("normalizing scalar leaves the tower");
    Mat2 an = a.scaled(PolyC(CoeffScalar(r->inverse())));
    if (s > 0) {
        out.kind = AutSClass::Kind::Reflection;
        // C = Y + conj(Y) conj(A) gives conj(C) = C A when A conj(A) = 1
        std::vector<Mat2> trials = {Mat2::identity(),
                                    Mat2::diag(PolyC(I), PolyC(I)),
                                    Mat2::diag(PolyC(1), PolyC(I)),
                                    Mat2::diag(PolyC(I), PolyC(1)),
                                    constant(1, 1, 0, 1),
                                    constant(1, I, 0, 1),
                                    constant(1, 0, 1, 1),
                                    constant(1, 0, I, 1)};
        for (const auto& y : trials) {
            Mat2 C = y + y.conj() * an.conj();
            if (C.det().is_zero()) continue;
            if (proportional(C * an, C.conj())) {
                out.conjugator = C;
                return out;
            }
        }
        throw std::logic_error("no reflection conjugator in the trial set");
    }
    out.kind = AutSClass::Kind::Antipodal;
    // M = [v | A conj(v)] gives M^-1 A conj(M) = [[0,-1],[1,0]]
    const Mat2 target = constant(0, -1, 1, 0);
    for (int k = 0; k < 2; ++k) {
        CoeffScalar v0 = k == 0 ? 1 : 0, v1 = k == 0 ? 0 : 1;
        CoeffScalar w0 = an.a.coeff(0) * v0 + an.b.coeff(0) * v1;
        CoeffScalar w1 = an.c.coeff(0) * v0 + an.d.coeff(0) * v1;
        Mat2 M = constant(v0, w0, v1, w1);
        if (M.det().is_zero()) continue;
        Mat2 C = M.adj();
        if (proportional(C * an * C.conj().adj(), target)) {
            out.conjugator = C;
            return out;
        }
    }
    throw std::logic_error("no antipodal basis found");
}

}  // namespace bs
