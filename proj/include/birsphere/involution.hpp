#pragma once
#include <optional>
#include <string>
#include <vector>

#include "birsphere/sphere.hpp"

namespace bs {

// [[i p, q h], [conj q, -i p]] with p real.
struct InvolutionForm {
    PolyC p, q;
    Mat2 lift() const;
};

// w^2 = sign * m(z), m square-free with positive leading coefficient
// (primitive integer when rational, monic otherwise).
struct HyperellipticModel {
    PolyT m;
    int sign = 1;
    int degree() const { return m.degree(); }
    int genus() const;
    // Right-hand side sign * m.
    PolyT rhs() const { return m.scaled(TowerReal(sign)); }
    std::string str() const;
    friend bool operator==(const HyperellipticModel& a, const HyperellipticModel& b) {
        return a.sign == b.sign && a.m == b.m;
    }
};
// Square class of a nonzero real polynomial as a model.
HyperellipticModel model_of(const PolyT& f);

enum class RealLocus { NoRealPoints, OneOval };
std::string to_string(RealLocus r);

// Throws DomainError NotInvolution.
InvolutionForm involution_normal_form(const ProjMat& a);
HyperellipticModel fixed_curve(const ProjMat& a);
// Throws DomainError NotDiffeomorphism outside H.
RealLocus real_locus_class(const ProjMat& a);

bool conj_decision(const ProjMat& a, const ProjMat& b);

struct ConjugacyCertificate {
    ProjMat conjugator;  // C with C A C^-1 = B
    bool verify(const ProjMat& a, const ProjMat& b) const;
};
// Throws DomainError NotConjugate when the fixed curves differ,
// UnsupportedExtension when the rescaling constant leaves the tower.
ConjugacyCertificate construct_conjugator(const ProjMat& a, const ProjMat& b);

// Throws DomainError HasRealRoot.
ProjMat realize_oval(const PolyC& beta);
// Throws DomainError NotPositive, UnsupportedExtension.
ProjMat realize_no_oval(const PolyC& f);

struct RotationNormalForm {
    int k = 0, n = 1;
    ProjMat conjugator;  // J with J A J^-1 = diag(1, e^{2 pi i k / n})
};
// Throws DomainError NotFiniteOrder, UnsupportedExtension.
RotationNormalForm rotation_normal_form(const ProjMat& a, int max_order = 24);

enum class ModuliVerdict { Equivalent, Inequivalent, UndecidedExact };
std::string to_string(ModuliVerdict v);
struct ModuliComparison {
    ModuliVerdict verdict = ModuliVerdict::Inequivalent;
    // b of [[1, b], [b, 1]] and whether z -> -z is applied first.
    std::optional<RealAlgebraic> b;
    bool flip = false;
};
// Whether a base map preserving [-1, 1] carries the branch divisor and sign
// of one model onto the other.
ModuliComparison basis_equiv_moduli(const HyperellipticModel& a, const HyperellipticModel& b);

struct TrivialBaseReport {
    std::string family;  // "3", "4", "6", "7", "rational-special"
    std::optional<RotationNormalForm> rotation;
    std::optional<HyperellipticModel> model;
    std::optional<RealLocus> locus;
    std::optional<TowerReal> parameter;  // t^2 for the rational-special case
    std::optional<ConjugacyCertificate> certificate;
    std::vector<std::string> caveats;
};
// A in H of prime order.
TrivialBaseReport classify_trivialbase(const ProjMat& a, int max_order = 24);

}  // namespace bs
