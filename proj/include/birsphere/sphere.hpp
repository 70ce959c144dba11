#pragma once
#include <array>
#include <optional>
#include <string>
#include <vector>

#include "birsphere/algebraic.hpp"
#include "birsphere/mpoly.hpp"
#include "birsphere/projmat.hpp"

namespace bs {

using SpherePoint = std::array<CoeffScalar, 4>;  // (w : x : y : z)

// Real Moebius map z -> (p z + q)/(r z + s) preserving {1, -1}; canonical
// scaling puts 1 in the first nonzero entry.
class BaseMobius {
public:
    enum class Kind { Identity, Neg, Interval, Involution };

    BaseMobius() : BaseMobius(TowerReal(1), TowerReal(0), TowerReal(0), TowerReal(1)) {}
    BaseMobius(const TowerReal& p, const TowerReal& q, const TowerReal& r, const TowerReal& s);
    static BaseMobius identity() { return BaseMobius(); }
    static BaseMobius neg() { return BaseMobius(TowerReal(-1), TowerReal(0), TowerReal(0), TowerReal(1)); }
    // [[1, b], [b, 1]]
    static BaseMobius interval(const TowerReal& b) { return BaseMobius(TowerReal(1), b, b, TowerReal(1)); }

    const std::array<TowerReal, 4>& m() const { return m_; }
    Kind kind() const { return kind_; }
    // b of [[1, b], [b, 1]] or of [[1, -b], [b, -1]].
    const TowerReal& parameter() const { return b_; }
    bool is_identity() const { return kind_ == Kind::Identity; }
    bool is_neg() const { return kind_ == Kind::Neg; }
    BaseMobius inverse() const;
    std::optional<CoeffScalar> apply(const CoeffScalar& z) const;
    std::string str() const;

    friend BaseMobius operator*(const BaseMobius& x, const BaseMobius& y);
    friend bool operator==(const BaseMobius& x, const BaseMobius& y) { return x.m_ == y.m_; }

private:
    std::array<TowerReal, 4> m_;
    Kind kind_ = Kind::Identity;
    TowerReal b_;
};

// Fiber matrix with its entries composed with the base map.
Mat2 compose_with_base(const Mat2& a, const BaseMobius& m);

// (t, z) -> (A(z) t, m(z)).
struct SphereMap {
    ProjMat fiber;
    BaseMobius base;

    static SphereMap identity() { return {}; }
    SphereMap inverse() const;
    std::string str() const;
    friend bool operator==(const SphereMap& x, const SphereMap& y) { return x.fiber == y.fiber && x.base == y.base; }
};
// (A1, m1) o (A2, m2) = ((A1 o m2) A2, m1 m2)
SphereMap compose(const SphereMap& x, const SphereMap& y);
inline SphereMap operator*(const SphereMap& x, const SphereMap& y) { return compose(x, y); }
inline SphereMap conjugate(const SphereMap& k, const SphereMap& g) { return k * g * k.inverse(); }
std::optional<int> sphere_order(const SphereMap& g, int max_order = 24);

// Affine chart of the sphere: t = (x - i y)/w, z = z/w.
struct PsiImage {
    bool base_point = false;
    FiberPoint t, z;
};
PsiImage psi_forward(const SpherePoint& p);
// Empty at the three base points (0, 1), (0, -1), (inf, inf).
std::optional<SpherePoint> psi_inverse(const FiberPoint& t, const FiberPoint& z);
bool on_sphere(const SpherePoint& p);
bool same_point(const SpherePoint& a, const SpherePoint& b);
SpherePoint conj_point(const SpherePoint& p);
// The same projective point with integral rational coordinates.
SpherePoint clear_denominators(const SpherePoint& p);

const Mat2& tau_lift();
ProjMat tau();

bool membership_G(const ProjMat& a);

// Lift [[a, b h], [conj b, conj a]] of an element of G.
struct GPattern {
    PolyC a, b;
    Mat2 lift() const;
    PolyC det() const;
};
GPattern canonical_pattern(const ProjMat& a);
PolyC det_class(const ProjMat& a);
bool membership_H0(const ProjMat& a);
bool membership_H(const ProjMat& a);
std::vector<RealAlgebraic> contracted_fibers(const ProjMat& a);

struct BoundaryReport {
    bool north_exchanges;  // M and conj M at z = 1
    bool south_exchanges;  // L and conj L at z = -1
};
BoundaryReport boundary_behavior(const ProjMat& a);

bool reality_check(const SphereMap& g);

struct BaseReduction {
    SphereMap reduced;     // conjugator * g * conjugator^-1
    SphereMap conjugator;
};
// Throws DomainError InfiniteOrderBase, UnsupportedExtension.
BaseReduction reduce_to_trivial_base(const SphereMap& g);

// psi^-1 o g o psi as four forms in (w, x, y, z).
SphereFormula to_sphere_formula(const SphereMap& g);
// Same forms evaluated at a point; empty when all four vanish.
std::optional<SpherePoint> eval_sphere(const SphereMap& g, const SpherePoint& p);

// tau | upsilon | antipodal | tilde_eta | rot:k/n | gb:t | g1p:t | g2p:t
SphereMap builtin(const std::string& name);
std::vector<std::string> builtin_names();

struct AutSClass {
    enum class Kind { Rotation, Reflection, Antipodal } kind;
    int k = 0, n = 1;  // rotation angle 2 pi k / n
    std::optional<Mat2> conjugator;
};
// Automorphism of the sphere given by a constant matrix and a flag for
// exchanging the two rulings.
AutSClass classify_autS(const Mat2& a, bool swap);

}  // namespace bs
