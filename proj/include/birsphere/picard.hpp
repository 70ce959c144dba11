#pragma once
#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "birsphere/rational.hpp"
#include "birsphere/scalar.hpp"

namespace bs {

using LVec = std::vector<long>;
// Rational entries so that matrices failing integrality can still be represented.
using LMat = std::vector<std::vector<Q>>;

LMat lmat_identity(int n);
LMat lmat_from_ints(const std::vector<std::vector<long>>& rows);
LMat operator*(const LMat& a, const LMat& b);
// Throws DomainError NotIntegral.
LVec operator*(const LMat& a, const LVec& v);
bool is_integral(const LMat& m);
// Rank over Q.
int lmat_rank(const LMat& m);

// Basis f, fbar, E_p, E_pbar, ... with f.fbar = 1, E^2 = -1; sigma swaps each
// class with its conjugate.
struct PicLattice {
    int degree = 8;
    std::vector<std::string> labels;
    std::vector<std::vector<long>> form;
    LVec K;
    LMat sigma;

    int rank() const { return static_cast<int>(labels.size()); }
    long dot(const LVec& a, const LVec& b) const;
    std::string str(const LVec& v) const;
};

// Throws DomainError BadDegree outside {8, 6, 4, 2}.
PicLattice lattice_make(int degree);

// All C with C^2 = square and C.K = k_dot.
std::vector<LVec> classes_with(const PicLattice& L, long square, long k_dot);
std::vector<LVec> minus_one_classes(const PicLattice& L);

struct ConicPair {
    LVec first, second;  // first + second = -K
};
// The ten conic classes of degree 4 as pairs P1..P5; throws DomainError BadDegree.
std::vector<ConicPair> conic_classes(const PicLattice& L);

// Image of each pair: target index and whether first and second are exchanged.
// Throws DomainError NotAutomorphism when a pair is not mapped onto a pair.
std::vector<std::pair<int, bool>> pair_action(const PicLattice& L, const LMat& m);

bool is_lattice_aut(const PicLattice& L, const LMat& m);
// Rank of the common fixed sublattice; throws DomainError NotAutomorphism.
int invariant_rank(const PicLattice& L, const std::vector<LMat>& gens);

// D -> (D.K) K - D; throws DomainError BadDegree unless degree 2.
LMat geiser_matrix(const PicLattice& L);
LVec geiser_action(const PicLattice& L, const LVec& d);

// Invariant rank with sigma of an order-3 lattice automorphism of degree 2.
// Throws DomainError NotOrderThree; std::logic_error when the rank is below 2.
int order3_rank_check(const PicLattice& L, const LMat& m);

// Degree-4 lattice matrices in the basis f, fbar, E_p, E_pbar, E_q, E_qbar:
// alpha1, alpha2, g1, g2 and the half-integer rank1_case3, rank1_case4, swap_case_b.
LMat shipped_matrix(const std::string& name);
std::vector<std::string> shipped_names();

using P4Point = std::array<CoeffScalar, 5>;

// Coefficients c[i][j], i <= j, of y_i y_j.
struct Quadric {
    std::array<std::array<CoeffScalar, 5>, 5> c;
    CoeffScalar eval(const P4Point& y) const;
    // Every monomial is even in the flipped variables.
    bool preserved_by(const std::array<int, 5>& signs) const;
    std::string str() const;
};

struct DP4Surface {
    CoeffScalar mu;
    Quadric q1, q2;
};
// Throws DomainError DegenerateConfiguration for mu in {0, 1, -1}.
DP4Surface dp4_surface(const CoeffScalar& mu);
bool on_surface(const DP4Surface& s, const P4Point& y);
// gamma1, gamma2, gamma, alpha1, alpha2; throws DomainError UnknownAutomorphism.
std::array<int, 5> coordinate_auto_signs(const std::string& name);
// Throws DomainError NotOnSurface.
P4Point apply_coordinate_auto(const DP4Surface& s, const std::string& name, const P4Point& y);
// Image of ((r:s), (u:v)) under the anticanonical map; throws DomainError
// BasePoint when all five sections vanish.
P4Point anticanonical_image(const DP4Surface& s, const std::array<CoeffScalar, 4>& point);

// Whether the pair exchange (2 3)(4 5) is realized: mu conj(mu) = 1.
bool image_rho_check(const CoeffScalar& mu);

// Point of P1 x P1 as ((r:s), (u:v)); its conjugate is ((conj u: conj v), (conj r: conj s)).
using P1P1Point = std::array<CoeffScalar, 4>;
struct PointPairNormalization {
    // (x, y) -> (A x, conj(A) y) sends p to (1:0)(0:1) and q to (1:1)(1:mu).
    std::array<CoeffScalar, 4> A;
    CoeffScalar mu;
};
// Throws DomainError NotImaginary, DegenerateConfiguration.
PointPairNormalization normalize_point_pair(const P1P1Point& p, const P1P1Point& q);
std::array<CoeffScalar, 2> apply_p1(const std::array<CoeffScalar, 4>& a, const CoeffScalar& x0, const CoeffScalar& x1);

// 5x5 matrices on the anticanonical sections: M1, M2, M and the basis change N.
using CMat = std::vector<std::vector<CoeffScalar>>;
CMat section_matrix(const std::string& name, const CoeffScalar& mu);
// Signs of N X N^-1 normalized to a leading +1; empty when it is not diagonal +-1.
std::optional<std::array<int, 5>> section_diagonal(const std::string& name, const CoeffScalar& mu);

}  // namespace bs
