#include "birsphere/picard.hpp"

#include <cmath>
#include <map>

#include "birsphere/errors.hpp"

namespace bs {

namespace {

template <class F>
using Mat = std::vector<std::vector<F>>;

template <class F>
int rank_of(Mat<F> m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && is_zero(m[p][c])) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (is_zero(m[i][c])) continue;
            F t = m[i][c] / m[r][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= t * m[r][j];
        }
        ++r;
    }
    return static_cast<int>(r);
}

template <class F>
std::optional<Mat<F>> inverse_of(Mat<F> m) {
    const std::size_t n = m.size();
    Mat<F> inv(n, std::vector<F>(n, F(0)));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = F(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && is_zero(m[p][c])) ++p;
        if (p == n) return std::nullopt;
        std::swap(m[p], m[c]);
        std::swap(inv[p], inv[c]);
        F d = F(1) / m[c][c];
        for (std::size_t j = 0; j < n; ++j) {
            m[c][j] *= d;
            inv[c][j] *= d;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || is_zero(m[i][c])) continue;
            F t = m[i][c];
            for (std::size_t j = 0; j < n; ++j) {
                m[i][j] -= t * m[c][j];
                inv[i][j] -= t * inv[c][j];
            }
        }
    }
    return inv;
}

template <class F>
Mat<F> mul(const Mat<F>& a, const Mat<F>& b) {
    Mat<F> r(a.size(), std::vector<F>(b[0].size(), F(0)));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < b.size(); ++k) {
            if (is_zero(a[i][k])) continue;
            for (std::size_t j = 0; j < b[0].size(); ++j) r[i][j] += a[i][k] * b[k][j];
        }
    return r;
}

LMat form_matrix(const PicLattice& L) {
    LMat q(L.rank(), std::vector<Q>(L.rank()));
    for (int i = 0; i < L.rank(); ++i)
        for (int j = 0; j < L.rank(); ++j) q[i][j] = L.form[i][j];
    return q;
}

LMat transpose(const LMat& m) {
    LMat t(m[0].size(), std::vector<Q>(m.size()));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m[0].size(); ++j) t[j][i] = m[i][j];
    return t;
}

void require_degree(const PicLattice& L, int d) {
    if (L.degree != d) throw DomainError("BadDegree", "expected degree " + std::to_string(d));
}

}  // namespace

LMat lmat_identity(int n) {
    LMat m(n, std::vector<Q>(n));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

LMat lmat_from_ints(const std::vector<std::vector<long>>& rows) {
    LMat m;
    for (const auto& r : rows) {
        std::vector<Q> row;
        for (long x : r) row.emplace_back(x);
        m.push_back(std::move(row));
    }
    return m;
}

LMat operator*(const LMat& a, const LMat& b) { return mul(a, b); }

LVec operator*(const LMat& a, const LVec& v) {
    LVec r;
    for (const auto& row : a) {
        Q s = 0;
        for (std::size_t j = 0; j < v.size(); ++j) s += row[j] * v[j];
        if (s.get_den() != 1) throw DomainError("NotIntegral", "non-integral image");
        r.push_back(s.get_num().get_si());
    }
    return r;
}

bool is_integral(const LMat& m) {
    for (const auto& row : m)
        for (const auto& x : row)
            if (x.get_den() != 1) return false;
    return true;
}

int lmat_rank(const LMat& m) { return rank_of(m); }

long PicLattice::dot(const LVec& a, const LVec& b) const {
    long s = 0;
    for (int i = 0; i < rank(); ++i)
        for (int j = 0; j < rank(); ++j) s += a[i] * form[i][j] * b[j];
    return s;
}

std::string PicLattice::str(const LVec& v) const {
    std::string s;
    for (int i = 0; i < rank(); ++i) {
        if (v[i] == 0) continue;
        long c = v[i];
        if (!s.empty()) s += c > 0 ? " + " : " - ";
        else if (c < 0) s += "-";
        if (std::labs(c) != 1) s += std::to_string(std::labs(c)) + "*";
        s += labels[i];
    }
    return s.empty() ? "0" : s;
}

PicLattice lattice_make(int degree) {
    if (degree != 8 && degree != 6 && degree != 4 && degree != 2)
        throw DomainError("BadDegree", "degree must be 8, 6, 4 or 2, got " + std::to_string(degree));
    PicLattice L;
    L.degree = degree;
    const int r = (8 - degree) / 2;
    const int n = 2 + 2 * r;
    L.labels = {"f", "fbar"};
    const char* pts = "pqr";
    for (int k = 0; k < r; ++k) {
        L.labels.push_back(std::string("E_") + pts[k]);
        L.labels.push_back(std::string("E_") + pts[k] + "bar");
    }
    L.form.assign(n, std::vector<long>(n, 0));
    L.form[0][1] = L.form[1][0] = 1;
    for (int k = 2; k < n; ++k) L.form[k][k] = -1;
    L.K.assign(n, 1);
    L.K[0] = L.K[1] = -2;
    L.sigma = LMat(n, std::vector<Q>(n));
    for (int k = 0; k < n; k += 2) L.sigma[k][k + 1] = L.sigma[k + 1][k] = 1;
    return L;
}

std::vector<LVec> classes_with(const PicLattice& L, long square, long k_dot) {
    const int n = L.rank();
    const double d = static_cast<double>(L.dot(L.K, L.K));
    auto qinv = *inverse_of(form_matrix(L));
    // C = (k/d) K + C' with C' in the negative definite complement of K;
    // coefficient j is C.x_j for the dual vector x_j.
    const double c_perp = -(square - k_dot * k_dot / d);
    std::vector<long> lo(n), hi(n);
    for (int j = 0; j < n; ++j) {
        double kx = 0, xx = 0;
        for (int i = 0; i < n; ++i) kx += L.K[i] * to_double(qinv[i][j]);
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k) xx += to_double(qinv[i][j]) * L.form[i][k] * to_double(qinv[k][j]);
        double x_perp = -(xx - kx * kx / d);
        double centre = k_dot * kx / d;
        double radius = std::sqrt(std::max(0.0, c_perp * x_perp));
        lo[j] = static_cast<long>(std::floor(centre - radius - 1e-9));
        hi[j] = static_cast<long>(std::ceil(centre + radius + 1e-9));
    }
    std::vector<LVec> out;
    LVec c(n);
    auto rec = [&](auto&& self, int j) -> void {
        if (j == n) {
            if (L.dot(c, L.K) == k_dot && L.dot(c, c) == square) out.push_back(c);
            return;
        }
        for (long x = lo[j]; x <= hi[j]; ++x) {
            c[j] = x;
            self(self, j + 1);
        }
    };
    rec(rec, 0);
    return out;
}

std::vector<LVec> minus_one_classes(const PicLattice& L) { return classes_with(L, -1, -1); }

namespace {

// P1 .. P5 for degree 4; the first class of P4 is f.
std::vector<ConicPair> reference_pairs() {
    return {{{1, 1, -1, -1, 0, 0}, {1, 1, 0, 0, -1, -1}},
            {{1, 1, -1, 0, -1, 0}, {1, 1, 0, -1, 0, -1}},
            {{1, 1, -1, 0, 0, -1}, {1, 1, 0, -1, -1, 0}},
            {{1, 0, 0, 0, 0, 0}, {1, 2, -1, -1, -1, -1}},
            {{0, 1, 0, 0, 0, 0}, {2, 1, -1, -1, -1, -1}}};
}

}  // namespace

std::vector<ConicPair> conic_classes(const PicLattice& L) {
    require_degree(L, 4);
    auto found = classes_with(L, 0, -2);
    auto ref = reference_pairs();
    std::size_t matched = 0;
    for (const auto& p : ref)
        for (const auto& c : found)
            if (c == p.first || c == p.second) ++matched;
    if (found.size() != 10 || matched != 10) throw std::logic_error("conic class enumeration disagrees with the reference pairs");
    return ref;
}

std::vector<std::pair<int, bool>> pair_action(const PicLattice& L, const LMat& m) {
    auto pairs = conic_classes(L);
    std::vector<std::pair<int, bool>> out;
    for (const auto& p : pairs) {
        LVec a = m * p.first;
        int target = -1;
        bool swapped = false;
        for (std::size_t j = 0; j < pairs.size(); ++j) {
            if (a == pairs[j].first) target = static_cast<int>(j);
            if (a == pairs[j].second) target = static_cast<int>(j), swapped = true;
        }
        if (target < 0) throw DomainError("NotAutomorphism", "conic class " + L.str(p.first) + " maps outside the pairs");
        out.emplace_back(target, swapped);
    }
    return out;
}

bool is_lattice_aut(const PicLattice& L, const LMat& m) {
    const int n = L.rank();
    if (static_cast<int>(m.size()) != n || static_cast<int>(m[0].size()) != n) return false;
    if (!is_integral(m)) return false;
    LMat q = form_matrix(L);
    if (!(transpose(m) * q * m == q)) return false;
    return m * L.K == L.K;
}

int invariant_rank(const PicLattice& L, const std::vector<LMat>& gens) {
    const int n = L.rank();
    LMat stack;
    for (const auto& g : gens) {
        if (!is_lattice_aut(L, g)) throw DomainError("NotAutomorphism", "matrix is not an automorphism of the lattice");
        for (int i = 0; i < n; ++i) {
            auto row = g[i];
            row[i] -= 1;
            stack.push_back(std::move(row));
        }
    }
    return n - rank_of(stack);
}

LMat geiser_matrix(const PicLattice& L) {
    require_degree(L, 2);
    const int n = L.rank();
    LMat m(n, std::vector<Q>(n));
    for (int j = 0; j < n; ++j) {
        LVec e(n, 0);
        e[j] = 1;
        long dk = L.dot(e, L.K);
        for (int i = 0; i < n; ++i) m[i][j] = dk * L.K[i] - e[i];
    }
    return m;
}

LVec geiser_action(const PicLattice& L, const LVec& d) { return geiser_matrix(L) * d; }

int order3_rank_check(const PicLattice& L, const LMat& m) {
    require_degree(L, 2);
    const LMat id = lmat_identity(L.rank());
    if (!is_lattice_aut(L, m) || m == id || !(m * m * m == id))
        throw DomainError("NotOrderThree", "expected a lattice automorphism of order 3");
    int r = invariant_rank(L, {m, L.sigma});
    if (r < 2) throw std::logic_error("order-3 automorphism with invariant rank " + std::to_string(r));
    return r;
}

LMat shipped_matrix(const std::string& name) {
    if (name == "alpha1")
        return lmat_from_ints({{1, 2, 1, 1, 1, 1},
                               {2, 1, 1, 1, 1, 1},
                               {-1, -1, -1, -1, -1, 0},
                               {-1, -1, -1, -1, 0, -1},
                               {-1, -1, -1, 0, -1, -1},
                               {-1, -1, 0, -1, -1, -1}});
    if (name == "alpha2") {
        // alpha1 conjugated by the exchange of E_q and E_qbar
        LMat p = lmat_identity(6);
        p[4][4] = p[5][5] = 0;
        p[4][5] = p[5][4] = 1;
        return p * shipped_matrix("alpha1") * p;
    }
    if (name == "g1")
        return lmat_from_ints({{2, 1, 1, 1, 1, 1},
                               {1, 2, 1, 1, 1, 1},
                               {-1, -1, 0, -1, -1, -1},
                               {-1, -1, -1, 0, -1, -1},
                               {-1, -1, -1, -1, -1, 0},
                               {-1, -1, -1, -1, 0, -1}});
    if (name == "g2")
        return lmat_from_ints({{2, 1, 1, 1, 1, 1},
                               {1, 2, 1, 1, 1, 1},
                               {-1, -1, -1, 0, -1, -1},
                               {-1, -1, 0, -1, -1, -1},
                               {-1, -1, -1, -1, 0, -1},
                               {-1, -1, -1, -1, -1, 0}});
    const Q h(1, 2);
    if (name == "rank1_case3" || name == "rank1_case4") {
        // -1/2 off the diagonal block, -3/2 on the permuted position
        const int perm3[4] = {1, 0, 2, 3}, perm4[4] = {0, 1, 3, 2};
        const int* perm = name == "rank1_case3" ? perm3 : perm4;
        LMat m = lmat_from_ints({{2, 1, 1, 1, 1, 1}, {1, 2, 1, 1, 1, 1}, {}, {}, {}, {}});
        for (int i = 0; i < 4; ++i) {
            std::vector<Q> row = {Q(-1), Q(-1)};
            for (int j = 0; j < 4; ++j) row.push_back(j == perm[i] ? Q(-3, 2) : -h);
            m[2 + i] = row;
        }
        return m;
    }
    if (name == "swap_case_b") {
        LMat m = lmat_from_ints({{0, 1, 0, 0, 0, 0}, {1, 0, 0, 0, 0, 0}, {}, {}, {}, {}});
        // exceptional block: -1/2 at (p, pbar), (pbar, p), (q, q), (qbar, qbar), 1/2 elsewhere
        const int neg[4][2] = {{0, 1}, {1, 0}, {2, 2}, {3, 3}};
        for (int i = 0; i < 4; ++i) {
            std::vector<Q> row = {Q(0), Q(0)};
            for (int j = 0; j < 4; ++j) row.push_back(j == neg[i][1] ? -h : h);
            m[2 + i] = row;
        }
        return m;
    }
    throw DomainError("UnknownMatrix", "no shipped matrix named " + name);
}

std::vector<std::string> shipped_names() {
    return {"alpha1", "alpha2", "g1", "g2", "rank1_case3", "rank1_case4", "swap_case_b"};
}

CoeffScalar Quadric::eval(const P4Point& y) const {
    CoeffScalar s;
    for (int i = 0; i < 5; ++i)
        for (int j = i; j < 5; ++j)
            if (!c[i][j].is_zero()) s += c[i][j] * y[i] * y[j];
    return s;
}

bool Quadric::preserved_by(const std::array<int, 5>& signs) const {
    for (int i = 0; i < 5; ++i)
        for (int j = i; j < 5; ++j)
            if (!c[i][j].is_zero() && signs[i] * signs[j] != 1) return false;
    return true;
}

std::string Quadric::str() const {
    std::string s;
    for (int i = 0; i < 5; ++i)
        for (int j = i; j < 5; ++j) {
            if (c[i][j].is_zero()) continue;
            if (!s.empty()) s += " + ";
            s += c[i][j].coeff_str() + "*y" + std::to_string(i + 1) +
                 (i == j ? "^2" : "*y" + std::to_string(j + 1));
        }
    return s.empty() ? "0" : s;
}

namespace {

void require_general(const CoeffScalar& mu) {
    if (mu.is_zero() || mu == CoeffScalar(1) || mu == CoeffScalar(-1))
        throw DomainError("DegenerateConfiguration", "mu = " + mu.str() + " does not give a Del Pezzo surface");
}

}  // namespace

DP4Surface dp4_surface(const CoeffScalar& mu) {
    require_general(mu);
    const CoeffScalar mb = mu.conj(), nn = mu * mb, one(1);
    DP4Surface s;
    s.mu = mu;
    s.q1.c[0][0] = mu - nn + mb;
    s.q1.c[0][1] = CoeffScalar(-2);
    s.q1.c[1][1] = one;
    s.q1.c[2][2] = one - mb + nn - mu;
    s.q1.c[3][3] = one;
    s.q2.c[0][0] = nn;
    s.q2.c[0][1] = CoeffScalar(-2) * nn;
    s.q2.c[1][1] = mu - one + mb;
    s.q2.c[3][3] = nn;
    s.q2.c[4][4] = one - mb + nn - mu;
    return s;
}

bool on_surface(const DP4Surface& s, const P4Point& y) { return s.q1.eval(y).is_zero() && s.q2.eval(y).is_zero(); }

std::array<int, 5> coordinate_auto_signs(const std::string& name) {
    static const std::map<std::string, std::array<int, 5>> table = {
        {"gamma1", {1, 1, -1, 1, -1}},
        {"gamma2", {1, 1, 1, -1, -1}},
        {"gamma", {1, 1, -1, -1, -1}},
        {"alpha1", {1, 1, 1, 1, -1}},
        {"alpha2", {1, 1, -1, 1, 1}},
    };
    auto it = table.find(name);
    if (it == table.end()) throw DomainError("UnknownAutomorphism", "no coordinate automorphism named " + name);
    return it->second;
}

P4Point apply_coordinate_auto(const DP4Surface& s, const std::string& name, const P4Point& y) {
    auto signs = coordinate_auto_signs(name);
    if (!on_surface(s, y)) throw DomainError("NotOnSurface", "point is not on the surface");
    P4Point r = y;
    for (int i = 0; i < 5; ++i)
        if (signs[i] < 0) r[i] = -r[i];
    return r;
}

P4Point anticanonical_image(const DP4Surface& sf, const std::array<CoeffScalar, 4>& pt) {
    const CoeffScalar &r = pt[0], &s = pt[1], &u = pt[2], &v = pt[3];
    const CoeffScalar m = sf.mu, mb = m.conj(), one(1);
    std::vector<std::vector<CoeffScalar>> gamma = {
        {s * v * (r - s) * (v - u)},
        {(v * s - mb * r * u) * (r - s) * (v - u)},
        {u * r * (v - m * u) * (s - mb * r)},
        {(v * s - m * r * u) * (mb * (one - m) * r * u + (m - mb) * s * u + (mb - one) * s * v)},
        {(m * (mb - one) * r * u + (m - mb) * r * v + (one - m) * s * v) * u * (s - mb * r)}};
    bool all_zero = true;
    for (const auto& g : gamma) all_zero = all_zero && g[0].is_zero();
    if (all_zero) throw DomainError("BasePoint", "all anticanonical sections vanish");
    // the sections are N^T y in the coordinates of the quadrics
    CMat n = section_matrix("N", m), nt(5, std::vector<CoeffScalar>(5));
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) nt[i][j] = n[j][i];
    auto y = mul(*inverse_of(nt), gamma);
    return {y[0][0], y[1][0], y[2][0], y[3][0], y[4][0]};
}

bool image_rho_check(const CoeffScalar& mu) {
    require_general(mu);
    return (mu * mu.conj()) == CoeffScalar(1);
}

std::array<CoeffScalar, 2> apply_p1(const std::array<CoeffScalar, 4>& a, const CoeffScalar& x0, const CoeffScalar& x1) {
    return {a[0] * x0 + a[1] * x1, a[2] * x0 + a[3] * x1};
}

PointPairNormalization normalize_point_pair(const P1P1Point& p, const P1P1Point& q) {
    auto conj_point = [](const P1P1Point& x) -> P1P1Point { return {x[2].conj(), x[3].conj(), x[0].conj(), x[1].conj()}; };
    auto same_p1 = [](const CoeffScalar& a0, const CoeffScalar& a1, const CoeffScalar& b0, const CoeffScalar& b1) {
        return (a0 * b1 - a1 * b0).is_zero();
    };
    auto same = [&](const P1P1Point& x, const P1P1Point& y) {
        return same_p1(x[0], x[1], y[0], y[1]) && same_p1(x[2], x[3], y[2], y[3]);
    };
    for (const auto* x : {&p, &q}) {
        if (((*x)[0].is_zero() && (*x)[1].is_zero()) || ((*x)[2].is_zero() && (*x)[3].is_zero()))
            throw DomainError("DegenerateConfiguration", "zero homogeneous coordinates");
        if (same(*x, conj_point(*x))) throw DomainError("NotImaginary", "point is real");
    }
    if (same(p, q) || same(conj_point(p), q)) throw DomainError("DegenerateConfiguration", "points coincide or are conjugate");
    const CoeffScalar &r1 = p[0], &s1 = p[1], &u1 = p[2], &v1 = p[3];
    std::array<CoeffScalar, 4> a = {v1.conj(), -u1.conj(), -s1, r1};
    std::array<CoeffScalar, 4> ab = {a[0].conj(), a[1].conj(), a[2].conj(), a[3].conj()};
    auto x = apply_p1(a, q[0], q[1]);
    auto y = apply_p1(ab, q[2], q[3]);
    // q = (lambda:1)(rho:1) after the first step
    if (x[0].is_zero() || x[1].is_zero() || y[0].is_zero() || y[1].is_zero())
        throw DomainError("DegenerateConfiguration", "q shares a fibre with p or its conjugate");
    CoeffScalar lambda = x[0] / x[1], rho = y[0] / y[1];
    // (x0:x1) -> (x0 : lambda x1) on the first factor, conjugate on the second
    std::array<CoeffScalar, 4> d = {CoeffScalar(1), CoeffScalar(0), CoeffScalar(0), lambda};
    std::array<CoeffScalar, 4> comp = {d[0] * a[0] + d[1] * a[2], d[0] * a[1] + d[1] * a[3], d[2] * a[0] + d[3] * a[2],
                                       d[2] * a[1] + d[3] * a[3]};
    CoeffScalar mu = lambda.conj() / rho;
    require_general(mu);
    return {comp, mu};
}

CMat section_matrix(const std::string& name, const CoeffScalar& m) {
    require_general(m);
    const CoeffScalar mb = m.conj(), z(0), one(1), i = CoeffScalar::I(), im = m.inverse();
    if (name == "M1")
        return {{z, -(m - mb) * im, one, m - mb, one - mb},
                {z, one, z, z, z},
                {one, z, z, m - mb, one - mb},
                {z, im, z, -one, z},
                {z, z, z, z, -one}};
    if (name == "M2")
        return {{one, (CoeffScalar(2) * m - mb) * im, z, z, one - mb},
                {z, -one, z, z, z},
                {z, one, one, z, m - CoeffScalar(2) * mb + one},
                {z, -im, z, one, -one},
                {z, z, z, z, -one}};
    if (name == "M")
        return {{z, -(m - mb) * im, one, m - mb, z},
                {z, one, z, z, z},
                {one, z, z, m - mb, mb - m},
                {z, im, z, -one, one},
                {z, z, z, z, one}};
    if (name == "N")
        return {{one, one, -one, -mb - m, mb},
                {z, -im, z, CoeffScalar(2), -one},
                {one, one, one, m - mb, one - mb},
                {z, z, z, z, -i},
                {z, -im, z, z, z}};
    throw DomainError("UnknownMatrix", "no section matrix named " + name);
}

std::optional<std::array<int, 5>> section_diagonal(const std::string& name, const CoeffScalar& mu) {
    CMat n = section_matrix("N", mu);
    CMat d = mul(mul(n, section_matrix(name, mu)), *inverse_of(n));
    std::array<int, 5> signs{};
    for (int a = 0; a < 5; ++a)
        for (int b = 0; b < 5; ++b) {
            if (a != b && !d[a][b].is_zero()) return std::nullopt;
            if (a == b) {
                if (d[a][a] == CoeffScalar(1)) signs[a] = 1;
                else if (d[a][a] == CoeffScalar(-1)) signs[a] = -1;
                else return std::nullopt;
            }
        }
    if (signs[0] < 0)
        for (int& s : signs) s = -s;
    return signs;
}

}  // namespace bs
