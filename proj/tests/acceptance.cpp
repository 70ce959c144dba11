// One PASS/FAIL line per acceptance criterion; exit status 1 when any fails.
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "birsphere/eta.hpp"
#include "birsphere/factor.hpp"
#include "birsphere/involution.hpp"
#include "birsphere/parse.hpp"
#include "birsphere/picard.hpp"
#include "birsphere/positive.hpp"
#include "birsphere/realroots.hpp"
#include "birsphere/report.hpp"
#include "gen.hpp"

using namespace bs;

namespace {

struct Failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
    if (!ok) throw Failure(what);
}

PolyC P(const char* s) { return parse_poly(s); }
const CoeffScalar I = CoeffScalar::I();

// 1. psi round trip on random points of the complex sphere

// (x - iy)(x + iy) = (w - z)(w + z) with x - iy = ac, x + iy = bd, w - z = ad, w + z = bc
SpherePoint complex_point(std::mt19937& rng) {
    CoeffScalar a = gen::gauss(rng, 4), b = gen::gauss(rng, 4), c = gen::gauss(rng, 4), d = gen::gauss(rng, 4);
    CoeffScalar two(2);
    CoeffScalar m = a * c, p = b * d, wm = a * d, wp = b * c;
    return {(wm + wp) / two, (m + p) / two, (p - m) / (two * I), (wp - wm) / two};
}

std::string psi_round_trip() {
    std::mt19937 rng(101);
    int real = 0, complex = 0, tries = 0;
    while (real + complex < 100 && ++tries < 1000) {
        bool use_real = (tries % 2) == 0;
        SpherePoint p = use_real ? gen::real_point(rng) : complex_point(rng);
        if (p[0].is_zero() && p[1].is_zero() && p[2].is_zero() && p[3].is_zero()) continue;
        require(on_sphere(p), "generated point off the sphere");
        auto f = psi_forward(p);
        if (f.base_point) continue;
        bool inverse_base = (f.t && f.t->is_zero() && f.z && (*f.z == CoeffScalar(1) || *f.z == CoeffScalar(-1))) ||
                            (!f.t && !f.z);
        auto back = psi_inverse(f.t, f.z);
        if (inverse_base) {
            require(!back, "psi^-1 defined at a base point");
            continue;
        }
        require(back.has_value(), "psi^-1 undefined away from its base points");
        require(same_point(*back, p), "psi^-1(psi(P)) != P");
        (use_real ? real : complex)++;
    }
    require(real + complex == 100, "not enough sample points");

    // base points of psi^-1 exactly at (0, 1), (0, -1), (inf, inf)
    std::vector<std::pair<FiberPoint, FiberPoint>> probes = {
        {CoeffScalar(0), CoeffScalar(1)}, {CoeffScalar(0), CoeffScalar(-1)}, {std::nullopt, std::nullopt},
        {CoeffScalar(0), CoeffScalar(2)}, {CoeffScalar(1), CoeffScalar(1)},  {std::nullopt, CoeffScalar(1)},
        {CoeffScalar(2), std::nullopt},   {CoeffScalar(0), std::nullopt},    {std::nullopt, CoeffScalar(0)}};
    for (int k = 0; k < 40; ++k) probes.push_back({gen::gauss(rng), gen::gauss(rng)});
    int flagged = 0;
    for (std::size_t k = 0; k < probes.size(); ++k) {
        bool expect_base = k < 3;
        if (k >= 3 && probes[k].first && probes[k].first->is_zero() && probes[k].second &&
            (*probes[k].second == CoeffScalar(1) || *probes[k].second == CoeffScalar(-1)))
            expect_base = true;
        auto q = psi_inverse(probes[k].first, probes[k].second);
        require(expect_base == !q.has_value(), "psi^-1 base point flag mismatch at probe " + std::to_string(k));
        if (q) require(on_sphere(*q), "psi^-1 image off the sphere");
        flagged += !q;
    }
    // base points of psi: the two conjugate points at infinity of the line x - i y = w = 0
    require(psi_forward({CoeffScalar(0), I, CoeffScalar(1), CoeffScalar(0)}).base_point, "q not flagged");
    require(psi_forward({CoeffScalar(0), -I, CoeffScalar(1), CoeffScalar(0)}).base_point, "conj q not flagged");
    require(!psi_forward({CoeffScalar(1), CoeffScalar(1), CoeffScalar(0), CoeffScalar(0)}).base_point, "regular point flagged");
    std::ostringstream s;
    s << real << " real + " << complex << " complex points round-trip; " << flagged << " base points flagged";
    return s.str();
}

// 2. reality

std::string reality() {
    MPoly w = MPoly::var(0), x = MPoly::var(1), y = MPoly::var(2), z = MPoly::var(3);
    require(same_map_on_sphere(to_sphere_formula(builtin("tau")), {w, x, -y, z}), "tau is not (x, -y, z)");
    std::mt19937 rng(202);
    int checked = 0;
    for (int k = 0; k < 50; ++k) {
        SphereMap g{gen::g_element(rng, 1 + k % 2), BaseMobius::identity()};
        if (k % 5 == 4) g = g * builtin("g2p:1/2");
        require(reality_check(g), "generated element fails the reality check");
        auto f = to_sphere_formula(g);
        for (int j = 0; j < 20; ++j) {
            SpherePoint p = gen::real_point(rng);
            auto e = eval_sphere(g, p);
            if (!e) continue;
            require(same_point(*e, conj_point(*e)), "real point sent to a non-real point");
            // sigma-equivariance on a complex point as well
            SpherePoint c = clear_denominators(complex_point(rng));
            SpherePoint fc, fcc;
            for (int i = 0; i < 4; ++i) {
                fc[i] = f[i].eval(c);
                fcc[i] = f[i].eval(conj_point(c));
            }
            // the forms vanish identically on lines through the base points
            bool zero_c = true, zero_cc = true;
            for (int i = 0; i < 4; ++i) {
                zero_c = zero_c && fc[i].is_zero();
                zero_cc = zero_cc && fcc[i].is_zero();
            }
            if (!zero_c && !zero_cc) require(same_point(conj_point(fc), fcc), "formula does not commute with conjugation");
            ++checked;
        }
    }
    int witnesses = 0;
    for (int k = 0; k < 10; ++k) {
        ProjMat a;
        do {
            a = ProjMat(Mat2{gen::cpoly(rng, 1), gen::cpoly(rng, 1), gen::cpoly(rng, 1), gen::cpoly(rng, 1)});
        } while (a.lift().det().is_zero() || membership_G(a));
        SphereMap g{a, BaseMobius::identity()};
        require(!reality_check(g), "non-member passes the reality check");
        bool found = false;
        for (int j = 0; j < 50 && !found; ++j) {
            auto e = eval_sphere(g, gen::real_point(rng));
            found = e && !same_point(*e, conj_point(*e));
        }
        require(found, "no violating real point for a non-member");
        ++witnesses;
    }
    return std::to_string(checked) + " real-point checks on 50 members; " + std::to_string(witnesses) +
           " non-members with witnesses";
}

// 3. diffeomorphism criterion

struct PatternSample {
    ProjMat a;
    std::vector<Q> fibers;  // rational fibers to sample besides the grid
};

Q unit_re(int s) { return Q(1 - s * s, 1 + s * s); }

// [[a, b h], [conj b, conj a]] with a = (p z + q) u, b = beta v, |u| = |v| = 1, so that
// D = (p z + q)^2 - beta^2 (1 - z^2) has rational roots whenever beta^2 + p^2 - q^2 is a square.
PatternSample pattern_sample(std::mt19937& rng, int kind) {
    std::uniform_int_distribution<int> small(-6, 6), unit(1, 4);
    for (;;) {
        long p = small(rng), q = small(rng), beta = small(rng);
        if (kind == 1) q = -p;  // a(1) = 0
        if (kind == 2) q = p;   // a(-1) = 0
        long disc = beta * beta + p * p - q * q;
        std::vector<Q> roots;
        if (disc >= 0) {
            long m = 0;
            while (m * m < disc) ++m;
            if (m * m != disc || m == 0 || beta == 0) continue;
            long den = p * p + beta * beta;
            if (den == 0) continue;
            roots = {Q(-p * q + beta * m, den), Q(-p * q - beta * m, den)};
            for (auto& r : roots) r.canonicalize();
        }
        int su = unit(rng), sv = unit(rng);
        CoeffScalar u(TowerReal(unit_re(su)), TowerReal(Q(2 * su, 1 + su * su)));
        CoeffScalar v(TowerReal(unit_re(sv)), TowerReal(Q(-2 * sv, 1 + sv * sv)));
        PolyC a = PolyC(std::vector<CoeffScalar>{CoeffScalar(Q(q)), CoeffScalar(Q(p))}).scaled(u);
        PolyC b = PolyC(CoeffScalar(Q(beta))).scaled(v);
        GPattern g{a, b};
        if (g.det().is_zero()) continue;
        PatternSample s{ProjMat(g.lift()), {}};
        for (const auto& r : roots)
            if (r > -1 && r < 1) s.fibers.push_back(r);
        // twist by an everywhere-invertible element
        if (kind == 3) {
            PolyC c = gen::cpoly(rng, 1) + PolyC(CoeffScalar(Q(0), Q(9)));
            s.a = ProjMat(Mat2::diag(c, c.conj())) * s.a;
        }
        if (kind == 4) s.a = tau() * s.a;
        return s;
    }
}

// Forward map defined and injective on the real points of the fiber over z0.
bool evaluates_on_fiber(const ProjMat& a, const Q& z0) {
    CoeffScalar zc{TowerReal(z0)};
    Q rho2 = 1 - z0 * z0;
    std::vector<FiberPoint> pts;
    if (rho2 == 0) {
        pts.push_back(CoeffScalar(0));
    } else {
        TowerReal r = TowerReal::sqrt_of(rho2);
        for (int u = -10; u < 10; ++u) {
            Q d = 1 + Q(u * u, 25);
            pts.push_back(CoeffScalar(r * TowerReal(Q(1 - Q(u * u, 25)) / d), r * TowerReal(Q(2 * u, 5) / d)));
        }
        pts.push_back(CoeffScalar(-r));
    }
    std::vector<FiberPoint> images;
    for (const auto& t : pts) {
        try {
            images.push_back(act_on_fiber(a, t, zc));
        } catch (const DomainError&) {
            return false;
        }
    }
    for (std::size_t i = 0; i < images.size(); ++i)
        for (std::size_t j = i + 1; j < images.size(); ++j)
            if (images[i] == images[j]) return false;
    return true;
}

std::string diffeomorphism_criterion() {
    std::mt19937 rng(303);
    int in_h0 = 0, contracting = 0, exchanging = 0;
    for (int k = 0; k < 50; ++k) {
        PatternSample s = pattern_sample(rng, k % 5);
        const ProjMat& a = s.a;
        require(membership_G(a), "generated pattern is not in G");
        bool h0 = membership_H0(a);
        auto cf = contracted_fibers(a);
        auto bd = boundary_behavior(a);
        bool structural = cf.empty() && !bd.north_exchanges && !bd.south_exchanges;
        std::vector<Q> fibers = s.fibers;
        for (int j = -10; j <= 10; ++j) fibers.push_back(Q(j, 10));
        bool evaluates = true;
        ProjMat inv = pgl_inv(a);
        for (const auto& z0 : fibers) evaluates = evaluates && evaluates_on_fiber(a, z0) && evaluates_on_fiber(inv, z0);
        require(h0 == structural, "membership_H0 disagrees with contracted fibers and boundary data at sample " +
                                      std::to_string(k) + ": " + a.str());
        require(h0 == evaluates, "membership_H0 disagrees with grid evaluation at sample " + std::to_string(k) + ": " +
                                     a.str());
        require(cf.size() == s.fibers.size(), "contracted fibers differ from the constructed roots: " + a.str() + " " + std::to_string(cf.size()) + " vs " + std::to_string(s.fibers.size()));
        in_h0 += h0;
        contracting += !cf.empty();
        exchanging += bd.north_exchanges || bd.south_exchanges;
    }
    require(in_h0 > 0 && contracting > 0 && exchanging > 0, "sample lacks one of the three strata");
    return "50 patterns agree (" + std::to_string(in_h0) + " in H0, " + std::to_string(contracting) + " contracting, " +
           std::to_string(exchanging) + " boundary-exchanging)";
}

// 4. involution conjugacy with certificates

std::string involution_conjugacy() {
    std::mt19937 rng(404);
    for (int k = 0; k < 100; ++k) {
        ProjMat a = gen::g_involution(rng, 1 + k % 2), c = gen::g_element(rng, 1 + k % 2);
        ProjMat b = c * a * pgl_inv(c);
        require(conj_decision(a, b), "conjugate pair reported inequivalent");
        ConjugacyCertificate cert = construct_conjugator(a, b);
        require(cert.conjugator * a * pgl_inv(cert.conjugator) == b, "certificate does not conjugate");
        require(membership_G(cert.conjugator), "certificate not in G");
    }
    int rejected = 0;
    for (int k = 1; k <= 10; ++k) {
        CoeffScalar root(TowerReal(0), TowerReal(Q(k + 1)));
        PolyC lin(std::vector<CoeffScalar>{root, CoeffScalar(1)});
        ProjMat a = realize_oval(P("z+i")), b = realize_oval(P("z+i") * lin);
        require(!conj_decision(a, b), "oval pair differing by z^2+k reported conjugate");
        require(!conj_decision(b, a), "conj_decision not symmetric");
        PolyC f = P("z^2+1"), g = f * (P("z^2") + PolyC(CoeffScalar(Q(k + 1))));
        ProjMat c = realize_no_oval(f), d = realize_no_oval(g);
        require(!conj_decision(c, d), "no-oval pair differing by z^2+k reported conjugate");
        bool threw = false;
        try {
            construct_conjugator(c, d);
        } catch (const DomainError&) {
            threw = true;
        }
        require(threw, "conjugator built for an inequivalent pair");
        rejected += 2;
    }
    return "100 random conjugate pairs certified in G; " + std::to_string(rejected) + " inequivalent pairs rejected";
}

// 5. fixed-curve oracle

// u + v sqrt(d) with d real; keeps the tower free of per-fiber radicands.
struct QuadExt {
    CoeffScalar u, v;
};
QuadExt qmul(const QuadExt& a, const QuadExt& b, const TowerReal& d) {
    return {a.u * b.u + a.v * b.v * CoeffScalar(d), a.u * b.v + a.v * b.u};
}
QuadExt qconj(const QuadExt& a, const TowerReal& d) {
    return {a.u.conj(), d.sign() > 0 ? a.v.conj() : -a.v.conj()};
}

bool is_rational_square(const Q& q) {
    return sgn(q) >= 0 && mpz_perfect_square_p(q.get_num_mpz_t()) && mpz_perfect_square_p(q.get_den_mpz_t());
}

bool same_square_class(const TowerReal& a, const TowerReal& b) {
    TowerReal r = a / b;
    if (r.sign() <= 0) return false;
    if (r.is_rational()) return is_rational_square(r.rational_value());
    return tower_sqrt(r).has_value();
}

std::string fixed_curve_oracle() {
    std::mt19937 rng(505);
    std::vector<ProjMat> invs = {tau(), builtin("upsilon").fiber, realize_oval(P("z+i")),
                                 realize_no_oval(P("(z^2+1)(z^2+4)")), builtin("g1p:1/2").fiber};
    while (invs.size() < 10) {
        ProjMat a = gen::g_involution(rng, 1 + invs.size() % 2);
        if (membership_H(a)) invs.push_back(a);
        else if (invs.size() < 8) invs.push_back(a);
    }
    int points = 0, ovals = 0, empty = 0;
    for (const auto& a : invs) {
        HyperellipticModel model = fixed_curve(a);
        Mat2 l = involution_normal_form(a).lift();
        std::optional<bool> real_fix;
        std::optional<TowerReal> first_ratio;
        int samples = 0;
        for (int j = 0; samples < 20 && j < 200; ++j) {
            Q z0 = (j < 19) ? Q(j - 9, 10) : gen::rat(rng, -40, 40, 7);
            z0.canonicalize();
            CoeffScalar zc{TowerReal(z0)};
            auto m = l.at(zc);
            const CoeffScalar &al = m[0], &be = m[1], &ga = m[2], &de = m[3];
            TowerReal rhs = model.rhs().eval(TowerReal(z0));
            if (ga.is_zero() || rhs.is_zero()) continue;
            // gamma t^2 + (delta - alpha) t - beta = 0, t = (alpha - delta +- sqrt(disc)) / (2 gamma)
            CoeffScalar disc = (de - al) * (de - al) + CoeffScalar(4) * be * ga;
            require(disc.is_real() && !disc.is_zero(), "normal form discriminant is not a nonzero real");
            TowerReal d = disc.re;
            // w = 2 gamma t - (alpha - delta) = +-sqrt(disc) lands on w^2 = sign * m(z0) up to a fixed constant
            TowerReal ratio = d / rhs;
            if (!first_ratio) first_ratio = ratio;
            require(first_ratio->sign() > 0, "fixed points land on the opposite model");
            require(same_square_class(ratio, *first_ratio), "fixed points leave the model at z0 = " + to_string(z0));
            bool real_here = false;
            for (int sgn : {1, -1}) {
                CoeffScalar two_g = CoeffScalar(2) * ga;
                QuadExt t{(al - de) / two_g, CoeffScalar(sgn) / two_g};
                QuadExt t2 = qmul(t, t, d);
                QuadExt lhs{ga * t2.u + (de - al) * t.u - be, ga * t2.v + (de - al) * t.v};
                require(lhs.u.is_zero() && lhs.v.is_zero(), "solved point is not fixed");
                QuadExt w{two_g * t.u - (al - de), two_g * t.v};
                QuadExt w2 = qmul(w, w, d);
                require(w2.u == disc && w2.v.is_zero(), "w^2 != disc");
                QuadExt norm = qmul(t, qconj(t, d), d);
                if (z0 > -1 && z0 < 1 && norm.v.is_zero() && norm.u == CoeffScalar(TowerReal(1 - z0 * z0)))
                    real_here = true;
                ++points;
            }
            if (z0 > -1 && z0 < 1) {
                // real fixed points over z0 exactly where the model has real points
                require(real_here == (rhs.sign() > 0), "real fixed points disagree with the sign of the model");
                if (membership_H(a)) {
                    if (!real_fix) real_fix = real_here;
                    require(*real_fix == real_here, "real fixed points on some fibers of (-1, 1) only");
                }
            }
            ++samples;
        }
        require(samples == 20, "not enough regular fibers");
        if (membership_H(a)) {
            RealLocus r = real_locus_class(a);
            require(real_fix.has_value(), "no interior fiber sampled");
            require((r == RealLocus::OneOval) == *real_fix, "real locus class disagrees with fixed points");
            require((r == RealLocus::NoRealPoints) == membership_H0(a), "H0 does not match an empty real locus");
            (r == RealLocus::OneOval ? ovals : empty)++;
        }
    }
    require(ovals > 0 && empty > 0, "both real-locus classes must occur");
    return std::to_string(points) + " solved fixed points on the models of 10 involutions (" + std::to_string(ovals) +
           " one oval, " + std::to_string(empty) + " empty)";
}

// 6. realization

// f and g agree up to a positive constant.
bool positive_multiple(const PolyT& f, const PolyT& g) {
    if (f.degree() != g.degree()) return false;
    TowerReal c = f.lc() / g.lc();
    return c.sign() > 0 && f == g.scaled(c);
}

std::string realization() {
    const PolyC h = P("1-z^2");
    std::vector<PolyC> betas = {PolyC(1), P("z+i"), P("z+2i"), P("2z+i-1"), P("(z+i)(z+2i)"), P("(z+i)(z-1+3i)"),
                                P("z^2+i z+1"), P("(z+3i)(z+1/2 i)"), P("z-2+i"), P("(z+i)(z+2i)(z-1+i)")};
    int genus1 = 0, genus2 = 0;
    for (const auto& b : betas) {
        ProjMat a = realize_oval(b);
        require(pgl_order(a) == 2, "realized map is not an involution");
        HyperellipticModel m = fixed_curve(a);
        require(positive_multiple(m.rhs(), to_real(h * b * b.conj())), "oval realization misses " + b.str());
        require(real_locus_class(a) == RealLocus::OneOval, "oval realization without an oval");
        genus1 += m.genus() == 1;
        genus2 += m.genus() == 2;
    }
    // a factor (z - a)^2 + b^2 needs c = 1 - alpha^2 of a^2 + c (z^2 - 1) to be a tower square;
    // (z - 1)^2 + 9/4 is such a factor, (z + 1)^2 + 4 is not
    std::vector<PolyC> fs = {PolyC(1),           P("z^2+4"),          P("(z^2+1)(z^2+4)"),       P("z^2-2z+13/4"),
                             P("(z^2+1)(z^2+9)"), P("z^2+1/4"),       P("(z^2+1)(z^2+4)(z^2+9)"), P("(z^2-2z+13/4)(z^2+3)"),
                             P("(z^2+2)(z^2+5)"), P("(z^2+2z+13/4)(z^2-2z+13/4)(z^2+3)")};
    for (const auto& f : fs) {
        ProjMat a = realize_no_oval(f);
        require(pgl_order(a) == 2, "realized map is not an involution");
        HyperellipticModel m = fixed_curve(a);
        require(positive_multiple(m.rhs(), to_real(-f)), "no-oval realization misses " + f.str());
        require(real_locus_class(a) == RealLocus::NoRealPoints, "no-oval realization with real points");
        genus1 += m.genus() == 1;
        genus2 += m.genus() == 2;
    }
    require(genus1 > 0 && genus2 > 0, "genus 1 and 2 cases must both occur");
    bool frontier = false;
    try {
        realize_no_oval(P("z^2+2z+5"));
    } catch (const UnsupportedExtension&) {
        frontier = true;
    }
    require(frontier, "z^2+2z+5 should sit outside the tower");
    std::mt19937 rng(606);
    int decomps = 0;
    for (int k = 0; k < 20; ++k) {
        // products of (z - a)^2 + b^2 with rational a, b keep the norm factors inside the tower
        PolyC f(1);
        for (int j = 0; j <= k % 3; ++j) {
            PolyC lin = P("z") - PolyC(CoeffScalar(gen::rat(rng, -3, 3, 2)));
            f = f * (lin * lin + PolyC(CoeffScalar(gen::rat(rng, 1, 6, 2) * gen::rat(rng, 1, 6, 2))));
        }
        if (!is_real_positive(f)) continue;
        VDecomp v = v_decomp(f);
        PolyT fr = to_real(f);
        require(v.a * v.a + v.P * to_real(P("z^2-1")) == fr, "v_decomp identity fails");
        require(v.P.lc().sign() > 0 && sturm_count(v.P, std::nullopt, std::nullopt) == 0, "P is not positive");
        ++decomps;
    }
    require(decomps >= 10, "too few positive samples");
    return "20 curves reproduced (genus 1: " + std::to_string(genus1) + ", genus 2: " + std::to_string(genus2) + "); " +
           std::to_string(decomps) + " v-decompositions verified";
}

// 7. rotation normal form

std::string rotation() {
    std::mt19937 rng(707);
    int trials = 0;
    for (int n : {3, 4, 6}) {
        for (int k : {1, n - 1}) {
            ProjMat rot(Mat2::diag(PolyC(1), PolyC(root_of_unity(k, n))));
            ProjMat c = gen::g_element(rng);
            ProjMat a = c * rot * pgl_inv(c);
            auto f = rotation_normal_form(a);
            require(f.n == n, "order not recovered");
            require(f.k == 1 || f.k == n - 1, "angle not recovered up to sign");
            require(membership_G(f.conjugator), "conjugator not in G");
            ProjMat target(Mat2::diag(PolyC(1), PolyC(root_of_unity(f.k, n))));
            require(f.conjugator * a * pgl_inv(f.conjugator) == target, "conjugator does not normalize");
            for (int j = 0; j < 20; ++j) {
                ProjMat d = gen::g_element(rng, 1 + j % 2);
                auto g = rotation_normal_form(d * a * pgl_inv(d));
                require(g.n == n && (g.k == f.k || g.k == n - f.k), "angle changed under conjugation");
                ProjMat tg(Mat2::diag(PolyC(1), PolyC(root_of_unity(g.k, n))));
                require(g.conjugator * d * a * pgl_inv(d) * pgl_inv(g.conjugator) == tg, "conjugator fails");
                ++trials;
            }
        }
    }
    return "orders 3, 4, 6 recovered with conjugators in G; " + std::to_string(trials) + " pre-conjugations invariant";
}

// 8. H2 suite

std::string h2_suite() {
    H2Class minus = h2_invariant({ProjMat::parse("diag(1,-1)"), BaseMobius::neg()});
    require(minus.sign == -1 && minus.gens.empty(), "delta of the antipodal twist is not [-1]");
    H2Class four = h2_invariant({ProjMat::parse("diag(i z+2, -i z+2)"), BaseMobius::neg()});
    require(four.sign == 1 && four.gens.size() == 1 && four.gens[0] == RealAlgebraic::rational(4),
            "delta of diag(iz+2, -iz+2) is not [z^2+4]");

    std::mt19937 rng(808);
    int twists = 0;
    std::vector<SphereMap> reps = {builtin("antipodal"), builtin("tilde_eta"), builtin("g2p:1/2"), builtin("g2p:2/3"),
                                   {ProjMat::parse("diag(i z+2, -i z+2)"), BaseMobius::neg()}};
    for (int k = 0; k < 50; ++k) {
        const SphereMap& g = reps[k % reps.size()];
        SphereMap c{gen::g_element(rng, 1 + k % 2), BaseMobius::identity()};
        require(h2_invariant(conjugate(c, g)) == h2_invariant(g), "class changed under a twist");
        ++twists;
    }

    H2Class trivial;
    for (const auto& c : {minus, four, h2_invariant(builtin("g2p:1/2"))}) require(c * c == trivial, "square not trivial");
    for (int k = 0; k < 10; ++k) {
        RatFn f(P("z^2") + PolyC(CoeffScalar(gen::rat(rng, -9, 9, 2))));
        if (f.is_zero()) continue;
        require(h2_reduce(f * f) == trivial, "h2 of a square is not trivial");
    }

    for (Q t : {Q(1, 3), Q(1, 2), Q(2, 3), Q(3, 4), Q(1, 5)}) {
        SphereMap g = builtin("g2p:" + to_string(t));
        H2Class c = h2_invariant(g);
        require(c.sign == 1 && c.gens.size() == 1 && c.gens[0] == RealAlgebraic::rational(t * t),
                "g2p class is not (+1, {t^2}) at t = " + to_string(t));
    }

    for (int k = 0; k < 20; ++k) {
        Mat2 x = gen::g_element(rng, 1 + k % 2).lift();
        Mat2 num = x * x.eta().adj();
        PolyC den = x.det().eta();
        require(num * num.eta() == Mat2::diag(den * den.eta(), den * den.eta()), "sample is not norm one");
        Mat2 b = h1_coboundary(num, den);
        require(!b.det().is_zero(), "witness not invertible");
        require(num * b.eta() == b.scaled(den.eta()), "witness fails A eta(B) = B");
    }
    return "[-1], [z^2+4] reproduced; " + std::to_string(twists) +
           " twists invariant; squares trivial; g2p classes (+1,{t^2}); 20 H1 witnesses";
}

// 9. Picard suite

int brute_count(int degree, int box, long square, long k_dot) {
    const int n = 2 + (8 - degree);
    std::vector<long> c(n, -box);
    int count = 0;
    for (;;) {
        long sq = 2 * c[0] * c[1], kd = -2 * c[0] - 2 * c[1];
        for (int i = 2; i < n; ++i) {
            sq -= c[i] * c[i];
            kd -= c[i];
        }
        if (sq == square && kd == k_dot) ++count;
        int j = 0;
        while (j < n && c[j] == box) c[j++] = -box;
        if (j == n) break;
        ++c[j];
    }
    return count;
}

std::string picard_suite() {
    PicLattice L6 = lattice_make(6), L4 = lattice_make(4), L2 = lattice_make(2);
    require(minus_one_classes(L6).size() == 6, "dP6 count");
    require(minus_one_classes(L4).size() == 16, "dP4 count");
    require(minus_one_classes(L2).size() == 56, "dP2 count");
    require(brute_count(2, 3, -1, -1) == 56 && brute_count(4, 3, -1, -1) == 16 && brute_count(6, 3, -1, -1) == 6,
            "box oracle disagrees on (-1)-classes");
    auto pairs = conic_classes(L4);
    require(pairs.size() == 5 && brute_count(4, 3, 0, -2) == 10, "conic classes are not 10 in 5 pairs");
    LVec minus_k = {2, 2, -1, -1, -1, -1};
    for (const auto& p : pairs) {
        LVec s(6);
        for (int i = 0; i < 6; ++i) s[i] = p.first[i] + p.second[i];
        require(s == minus_k, "conic pair does not sum to -K");
    }
    const std::pair<const char*, int> ranks[] = {{"alpha1", 1}, {"g1", 2}, {"g2", 2}};
    for (const auto& [name, r] : ranks) {
        LMat m = shipped_matrix(name);
        require(is_lattice_aut(L4, m), std::string(name) + " is not a lattice automorphism");
        require(invariant_rank(L4, {m, L4.sigma}) == r, std::string(name) + " has the wrong invariant rank");
    }
    for (const char* name : {"rank1_case3", "rank1_case4", "swap_case_b"}) {
        LMat m = shipped_matrix(name);
        require(!is_integral(m) && !is_lattice_aut(L4, m), std::string(name) + " not rejected");
    }
    LMat nu = geiser_matrix(L2);
    for (const auto& c : minus_one_classes(L2)) {
        LVec img = nu * c, expect(c.size());
        for (std::size_t i = 0; i < c.size(); ++i) expect[i] = -L2.K[i] - c[i];
        require(img == expect, "Geiser image is not -K - C");
    }
    require(invariant_rank(L2, {nu, L2.sigma}) == 1, "Geiser invariant rank is not 1");

    std::mt19937 rng(909);
    int surfaces = 0;
    for (int k = 0; k < 10; ++k) {
        CoeffScalar mu = gen::gauss(rng, 5);
        if (mu.is_zero() || mu == CoeffScalar(1) || mu == CoeffScalar(-1)) continue;
        DP4Surface s = dp4_surface(mu);
        for (const char* g : {"gamma1", "gamma2", "gamma"}) {
            auto signs = coordinate_auto_signs(g);
            require(s.q1.preserved_by(signs) && s.q2.preserved_by(signs), std::string(g) + " moves Q1 or Q2");
        }
        ++surfaces;
    }
    int rho = 0;
    for (int k = 0; k < 10; ++k) {
        CoeffScalar mu;
        if (k % 2 == 0) {
            int s = k / 2 + 2;
            mu = CoeffScalar(TowerReal(Q(1 - s * s, 1 + s * s)), TowerReal(Q(2 * s, 1 + s * s)));
        } else {
            do mu = gen::gauss(rng, 4);
            while (mu.is_zero());
        }
        bool unit = (mu.re * mu.re + mu.im * mu.im) == TowerReal(1);
        require(image_rho_check(mu) == unit, "image_rho_check disagrees with |mu| = 1");
        rho += unit;
    }
    return "counts 6/16/10-in-5/56 with box oracle; alpha1/g1/g2 ranks 1/2/2; 3 half-integer matrices rejected; "
           "Geiser on 56 classes; gamma maps on " +
           std::to_string(surfaces) + " surfaces; image_rho on 10 samples (" + std::to_string(rho) + " unit)";
}

// 10. end-to-end classification table

std::string end_to_end() {
    auto fam = [](const Json& r) { return r["family"].get<std::string>(); };
    const std::pair<const char*, const char*> table[] = {{"tau", "4"},     {"upsilon", "4"}, {"antipodal", "5"},
                                                         {"tilde_eta", "linear-stratum"}, {"rot:1/2", "3"},
                                                         {"rot:1/3", "3"}};
    for (const auto& [in, want] : table) require(fam(classify_report(in)) == want, std::string(in) + " misclassified");
    require(classify_report("tilde_eta")["moduli"]["h2"]["class"] == "(+1, {})", "tilde_eta class is not trivial");

    SphereMap composite = builtin("gb:1/2") * builtin("gb:1/3");
    SphereMap conj_gb = conjugate({ProjMat::parse("diag(z+2i, z-2i)"), BaseMobius::identity()}, builtin("gb:2/3"));
    for (const auto& g : {builtin("gb:1/2"), composite, conj_gb}) {
        Json r = classify_report(g);
        require(r["reality_only"] == true && fam(r) == "out-of-scope", "g_pyth composite not reality-only");
    }

    require(fam(classify_report(SphereMap{realize_oval(P("z+i")), BaseMobius::identity()})) == "7", "oval -> 7");
    require(fam(classify_report(SphereMap{realize_no_oval(P("(z^2+1)(z^2+4)")), BaseMobius::identity()})) == "6",
            "no oval -> 6");
    Json g1 = classify_report("g1p:1/2");
    require(fam(g1) == "rational-special" && g1["moduli"]["t_squared"] == "1/4", "g1p:1/2 -> rational-special 1/4");
    Json g2 = classify_report("g2p:1/2");
    require(fam(g2) == "8" && g2["moduli"]["h2"]["class"] == "(+1, {1/4})", "g2p:1/2 -> 8 with (+1,{1/4})");

    require(conj_report(builtin("g1p:1/2"), builtin("g1p:1/3"))["conjugate"] == false, "g1p 1/2 vs 1/3 conjugate");
    // t -> -t inverts mu
    Json inv = conj_report(builtin("g1p:1/2"), builtin("g1p:-1/2"));
    require(inv["conjugate"] == true, "g1p 1/2 vs its parameter inverse not conjugate");
    if (!inv["certificate"].is_null()) {
        SphereMap a = builtin("g1p:1/2"), b = builtin("g1p:-1/2");
        SphereMap c = read_element("{\"fiber\": " + inv["certificate"].dump() + ", \"base\": \"id\"}");
        require(conjugate(c, a) == b, "g1p certificate fails");
    }
    return "11 classifications and 2 conjugacy decisions match the table";
}

}  // namespace

int main() {
    const std::pair<const char*, std::function<std::string()>> criteria[] = {
        {"psi round trip", psi_round_trip},
        {"reality", reality},
        {"diffeomorphism criterion", diffeomorphism_criterion},
        {"involution conjugacy", involution_conjugacy},
        {"fixed-curve oracle", fixed_curve_oracle},
        {"realization inverse", realization},
        {"rotation normal form", rotation},
        {"H2 suite", h2_suite},
        {"Picard suite", picard_suite},
        {"end-to-end table", end_to_end},
    };
    int failed = 0, n = 0;
    for (const auto& [name, run] : criteria) {
        ++n;
        std::string detail;
        bool ok = false;
        try {
            detail = run();
            ok = true;
        } catch (const std::exception& e) {
            detail = e.what();
        }
        failed += !ok;
        std::printf("%s %2d %s: %s\n", ok ? "PASS" : "FAIL", n, name, detail.c_str());
        std::fflush(stdout);
    }
    return failed ? 1 : 0;
}
