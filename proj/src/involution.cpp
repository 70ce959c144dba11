#include "birsphere/involution.hpp"

#include <numeric>

#include "birsphere/positive.hpp"
#include "birsphere/realroots.hpp"

namespace bs {

namespace {

const CoeffScalar kI = CoeffScalar::I();

// Real scalar normalizing x: 1/Re(x), or 1/Im(x) when x is imaginary.
TowerReal real_normalizer(const CoeffScalar& x) { return (x.re.is_zero() ? x.im : x.re).inverse(); }

bool is_involution(const ProjMat& a) { return !a.is_identity() && (a * a).is_identity(); }

// Basis (v, L v) of the plane over C(z), with v among e1, e2, e1 + e2.
Mat2 cyclic_basis(const Mat2& l) {
    const std::array<std::array<PolyC, 2>, 3> vs = {{{PolyC(1), PolyC()}, {PolyC(), PolyC(1)}, {PolyC(1), PolyC(1)}}};
    for (const auto& v : vs) {
        PolyC w0 = l.a * v[0] + l.b * v[1], w1 = l.c * v[0] + l.d * v[1];
        Mat2 m{v[0], w0, v[1], w1};
        if (!m.det().is_zero()) return m;
    }
    throw DomainError("NotInvolution", "involution lift is scalar");
}

// p = c g^2 with c a positive constant; returns (sqrt c, g).
std::optional<std::pair<TowerReal, PolyT>> constant_times_square(const PolyT& p) {
    if (p.is_zero() || p.lc().sign() <= 0) return std::nullopt;
    auto sqf = squarefree_decomposition(p);
    PolyT g(TowerReal(1));
    for (std::size_t i = 0; i < sqf.size(); ++i) {
        if (sqf[i].degree() <= 0) continue;
        if ((i + 1) % 2) return std::nullopt;
        g *= sqf[i].pow(int(i + 1) / 2);
    }
    auto c = tower_sqrt(p.lc());
    if (!c) throw UnsupportedExtension("sqrt(" + p.lc().str() + ") leaves the tower");
    return std::make_pair(*c, g);
}

}  // namespace

Mat2 InvolutionForm::lift() const {
    return {p.scaled(kI), q * h_poly(), q.conj(), p.scaled(-kI)};
}

int HyperellipticModel::genus() const {
    int d = m.degree();
    return d <= 2 ? 0 : (d + 1) / 2 - 1;
}

std::string HyperellipticModel::str() const { return "w^2 = " + rhs().str(); }

HyperellipticModel model_of(const PolyT& f) {
    if (f.is_zero()) throw DomainError("ZeroPolynomial", "model of the zero polynomial");
    HyperellipticModel r;
    r.sign = f.lc().sign();
    r.m = odd_part(f);
    bool rational = true;
    for (const auto& c : r.m.coeffs()) rational = rational && c.is_rational();
    if (rational) r.m = to_t(primitive_part(to_rational(r.m)));
    return r;
}

std::string to_string(RealLocus r) { return r == RealLocus::NoRealPoints ? "no_real_points" : "one_oval"; }

InvolutionForm involution_normal_form(const ProjMat& a) {
    if (!is_involution(a)) throw DomainError("NotInvolution", a.str() + " does not have order 2");
    GPattern pt = canonical_pattern(a);
    if (!(pt.a + pt.a.conj()).is_zero()) throw std::logic_error("involution pattern has nonzero trace");
    InvolutionForm f{pt.a.scaled(-kI), pt.b};
    TowerReal n = !f.q.is_zero() ? real_normalizer(f.q.lc()) : f.p.lc().re.inverse();
    f.p = f.p.scaled(CoeffScalar(n));
    f.q = f.q.scaled(CoeffScalar(n));
    return f;
}

HyperellipticModel fixed_curve(const ProjMat& a) {
    InvolutionForm f = involution_normal_form(a);
    return model_of(to_real(-f.lift().det()));
}

RealLocus real_locus_class(const ProjMat& a) {
    if (membership_H0(a)) return RealLocus::NoRealPoints;
    if (membership_H(a)) return RealLocus::OneOval;
    throw DomainError("NotDiffeomorphism", a.str() + " is not in H");
}

bool conj_decision(const ProjMat& a, const ProjMat& b) { return fixed_curve(a) == fixed_curve(b); }

bool ConjugacyCertificate::verify(const ProjMat& a, const ProjMat& b) const {
    const Mat2& c = conjugator.lift();
    return proportional(c * a.lift(), b.lift() * c) && membership_G(conjugator);
}

ConjugacyCertificate construct_conjugator(const ProjMat& a, const ProjMat& b) {
    Mat2 la = involution_normal_form(a).lift(), lb = involution_normal_form(b).lift();
    PolyC da = la.det(), db = lb.det();
    auto cg = constant_times_square(to_real(da * db));
    if (!cg) throw DomainError("NotConjugate", "fixed curves are not birational over R");
    // alpha^-1 La alpha = [[0, -da], [1, 0]] = P; beta'^-1 Lb beta' = s P
    Mat2 alpha = cyclic_basis(la);
    Mat2 beta = cyclic_basis(lb) * Mat2::diag(to_c(cg->second.scaled(cg->first)), da);
    const Mat2& tau = tau_lift();
    const PolyC& h = h_poly();
    Mat2 m = alpha.adj() * tau * alpha.conj();
    Mat2 n = beta.conj().adj() * tau * beta;
    Mat2 wb = (n * m).conj();
    PolyC x0 = h * alpha.det() * beta.det().conj();
    Mat2 p{PolyC(), -da, PolyC(1), PolyC()};
    // xi = conj(x) + conj(u) x with u = n m / h, x = t h conj(det alpha) det beta (1 + k P)
    const std::vector<CoeffScalar> ts = {CoeffScalar(1), kI, CoeffScalar(1) + kI, CoeffScalar(2) + kI};
    const std::vector<CoeffScalar> ks = {CoeffScalar(0), CoeffScalar(1), kI, CoeffScalar(2), CoeffScalar(1) + kI};
    for (const auto& k : ks) {
        Mat2 e = Mat2::identity() + p.scaled(PolyC(k)), eb = Mat2::identity() + p.scaled(PolyC(k.conj()));
        for (const auto& t : ts) {
            Mat2 xi = eb.scaled(x0.scaled(t.conj())) + wb * e.scaled(PolyC(t));
            if (xi.det().is_zero()) continue;
            Mat2 c = beta * xi * alpha.adj();
            if (!proportional(c * a.lift(), b.lift() * c)) continue;
            ConjugacyCertificate cert{ProjMat(c)};
            if (membership_G(cert.conjugator)) return cert;
        }
    }
    throw std::logic_error("no conjugator found for " + a.str() + " and " + b.str());
}

ProjMat realize_oval(const PolyC& beta) {
    if (beta.is_zero() || !is_real_positive(beta * beta.conj()))
        throw DomainError("HasRealRoot", beta.str() + " has a real root");
    return ProjMat(PolyC(), beta * h_poly(), beta.conj(), PolyC());
}

ProjMat realize_no_oval(const PolyC& f) {
    PolyT ft = to_real(f);
    if (!is_real_positive(ft)) throw DomainError("NotPositive", f.str() + " is not in R[z]+");
    auto root = [](const TowerReal& x) {
        auto r = tower_sqrt(x);
        if (!r) throw UnsupportedExtension("sqrt(" + x.str() + ") leaves the tower");
        return *r;
    };
    // each quadratic factor a^2 + c (z^2 - 1) is the determinant of the real pattern
    // [[a, sqrt(c) h], [sqrt(c), a]]; the product [[al, be h], [be, al]] stays real
    TowerReal l = root(ft.lc());
    Mat2 y = Mat2::diag(PolyC(CoeffScalar(l)), PolyC(CoeffScalar(l)));
    auto sqf = squarefree_decomposition(ft);
    for (std::size_t i = 0; i < sqf.size(); ++i) {
        if (sqf[i].degree() <= 0) continue;
        for (const auto& q : real_quadratic_factors(sqf[i])) {
            QuadraticDecomp qd = quadratic_decomp(to_c(q));
            PolyC a = to_c(qd.a), b(CoeffScalar(root(qd.c)));
            for (std::size_t k = 0; k <= i; ++k) y = y * Mat2{a, b * h_poly(), b, a};
        }
    }
    // y diag(i, -i) has trace zero and determinant det y = f
    return ProjMat(y.a.scaled(kI), y.b.scaled(-kI), y.c.scaled(kI), y.d.scaled(-kI));
}

RotationNormalForm rotation_normal_form(const ProjMat& a, int max_order) {
    auto n = pgl_order(a, max_order);
    if (!n) throw DomainError("NotFiniteOrder", a.str() + " has no order up to " + std::to_string(max_order));
    if (*n <= 2) throw DomainError("NotRotation", "order " + std::to_string(*n) + " is not above 2");
    Mat2 l = canonical_pattern(a).lift();
    PolyC tr = l.trace(), det = l.det();
    RatFn ratio(tr * tr, det);
    if (!ratio.is_constant()) throw std::logic_error("trace ratio of a finite order element is not constant");
    // tr^2 / det = 2 + 2 cos(theta)
    CoeffScalar cosv = ratio.num().coeff(0) * CoeffScalar(Q(1, 2)) - CoeffScalar(1);
    for (int k = 1; k < *n; ++k) {
        if (std::gcd(k, *n) != 1) continue;
        CoeffScalar zeta = root_of_unity(k, *n);
        if (zeta.re != cosv.re) continue;
        PolyC l1 = tr.scaled((CoeffScalar(1) + zeta).inverse());
        // rows: left eigenvectors for l1 and zeta l1
        Mat2 j0;
        if (!l.c.is_zero()) {
            PolyC l2 = l1.scaled(zeta);
            j0 = {l.c, l1 - l.a, l.c, l2 - l.a};
        } else {
            j0 = l1 == l.a ? Mat2::identity() : Mat2{PolyC(), PolyC(1), PolyC(1), PolyC()};
        }
        // diag(1, s) j0 lies in G for s = conj(x)/v, or conj(y)/(h u)
        Mat2 j = !j0.d.is_zero() ? Mat2::diag(j0.d, j0.a.conj()) * j0
                                 : Mat2::diag(h_poly() * j0.c, j0.b.conj()) * j0;
        if (j.det().is_zero()) continue;
        ProjMat jp(j);
        ProjMat target(Mat2::diag(PolyC(1), PolyC(zeta)));
        if (membership_G(jp) && jp * a * pgl_inv(jp) == target) return {k, *n, jp};
    }
    throw std::logic_error("rotation normal form not found for " + a.str());
}

std::string to_string(ModuliVerdict v) {
    switch (v) {
        case ModuliVerdict::Equivalent: return "equivalent";
        case ModuliVerdict::Inequivalent: return "inequivalent";
        default: return "undecided_exact";
    }
}

namespace {

using BPoly = std::vector<PolyT>;  // coefficients in z, each a polynomial in b

BPoly bmul(const BPoly& x, const BPoly& y) {
    BPoly r(x.size() + y.size() - 1);
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < y.size(); ++j) r[i + j] += x[i] * y[j];
    return r;
}

// (b z + 1)^(2k) m((z + b)/(b z + 1)) as coefficients in z over Q[b].
BPoly pull_back(const PolyT& m, int k2) {
    const PolyT bvar = PolyT::z();
    BPoly num = {bvar, PolyT(TowerReal(1))}, den = {PolyT(TowerReal(1)), bvar};
    BPoly out(k2 + 1);
    for (int j = 0; j <= m.degree(); ++j) {
        if (m.coeff(j).is_zero()) continue;
        BPoly t = {PolyT(m.coeff(j))};
        for (int e = 0; e < j; ++e) t = bmul(t, num);
        for (int e = j; e < k2; ++e) t = bmul(t, den);
        for (std::size_t i = 0; i < t.size(); ++i) out[i] += t[i];
    }
    return out;
}

}  // namespace

ModuliComparison basis_equiv_moduli(const HyperellipticModel& ma, const HyperellipticModel& mb) {
    ModuliComparison out;
    int ka = (ma.degree() + 1) / 2, kb = (mb.degree() + 1) / 2;
    if (ma.sign != mb.sign || ka != kb) return out;
    int k2 = 2 * ka;
    for (bool flip : {false, true}) {
        BPoly m = pull_back(flip ? ma.m.eta() : ma.m, k2);
        std::vector<TowerReal> t(k2 + 1);
        for (int i = 0; i <= k2; ++i) t[i] = mb.m.coeff(i);
        PolyT g;
        for (int i = 0; i <= k2; ++i)
            for (int j = i + 1; j <= k2; ++j) {
                PolyT e = m[i].scaled(t[j]) - m[j].scaled(t[i]);
                if (!e.is_zero()) g = gcd(g, e);
            }
        int ref = 0;
        while (t[ref].is_zero()) ++ref;
        int tsign = t[ref].sign();
        if (g.is_zero()) {
            // every b works; compare the sign at b = 0
            if (m[ref].coeff(0).sign() * tsign > 0) {
                out = {ModuliVerdict::Equivalent, RealAlgebraic::rational(0), flip};
                return out;
            }
            continue;
        }
        if (g.degree() == 0) continue;
        PolyT rg = radical(g);
        for (auto iv : isolate_roots(rg, Q(-1), Q(1))) {
            int s = iv.first == iv.second ? sign_at(m[ref], iv.first) : sign_at_root(m[ref], rg, iv);
            if (s * tsign > 0) {
                out = {ModuliVerdict::Equivalent, RealAlgebraic::root_of(rg, iv), flip};
                return out;
            }
        }
    }
    return out;
}

TrivialBaseReport classify_trivialbase(const ProjMat& a, int max_order) {
    auto n = pgl_order(a, max_order);
    if (!n) throw DomainError("NotFiniteOrder", a.str() + " has no order up to " + std::to_string(max_order));
    if (*n == 1) throw DomainError("NotPrimeOrder", "identity");
    if (!membership_H(a)) throw DomainError("NotDiffeomorphism", a.str() + " is not in H");
    TrivialBaseReport r;
    if (*n > 2) {
        r.family = "3";
        r.rotation = rotation_normal_form(a, max_order);
        bool prime = true;
        for (int d = 2; d * d <= *n; ++d) prime = prime && *n % d;
        if (!prime) r.caveats.push_back("order " + std::to_string(*n) + " is not prime");
        return r;
    }
    r.model = fixed_curve(a);
    r.locus = real_locus_class(a);
    if (r.model->degree() == 0) {
        r.family = "3";
        ProjMat half_turn(Mat2::diag(PolyC(1), PolyC(-1)));
        r.rotation = RotationNormalForm{1, 2, construct_conjugator(a, half_turn).conjugator};
        r.caveats.push_back("fixed curve is reducible: fiberwise rotation by pi");
        return r;
    }
    bool oval = *r.locus == RealLocus::OneOval;
    if (r.model->genus() >= 1) {
        r.family = oval ? "7" : "6";
        return r;
    }
    if (oval) {
        r.family = "4";
        r.certificate = construct_conjugator(a, builtin("upsilon").fiber);
        return r;
    }
    // genus 0 without real points: conjugate to g1'(mu), t^2 from the branch points
    r.family = "rational-special";
    PolyT m = r.model->m.monic();
    TowerReal one(1);
    TowerReal g = m.coeff(0);
    auto root = tower_sqrt(m.eval(one) * m.eval(-one));
    if (!root) {
        r.caveats.push_back("parameter leaves the quadratic tower");
        return r;
    }
    r.parameter = (*root - (one - g)) / (*root + (one - g));
    return r;
}

}  // namespace bs
