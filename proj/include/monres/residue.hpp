#ifndef MONRES_RESIDUE_HPP
#define MONRES_RESIDUE_HPP

#include <cstddef>
#include <vector>

#include "monres/complex.hpp"
#include "monres/ideal.hpp"

namespace monres {

/// Coefficient status of one component of a formal residue current.
/// ProvablyZero components are those the formal calculus kills outright;
/// CandidateNonzero components are kept and must be certified one by one.
enum class CoeffStatus { CandidateNonzero, ProvablyZero };

/// One component of the residue current attached to a resolution: a face
/// of homological degree n with label alpha, standing for a current
/// supported at the origin built from dbar(1/z_i^{alpha_i}) factors.
struct ResidueComponent {
  std::vector<std::size_t> faceVertices;
  Exponent alpha;
  CoeffStatus status;
};

/// The formal residue current of a cellular resolution of an Artinian
/// monomial ideal: one component per degree-n face. Only the component
/// list is formal; the annihilator computation below is exact.
struct FormalResidue {
  MonIdeal ideal{0};
  std::vector<ResidueComponent> components;
};

/// Builds the formal residue of a resolution. A component is provably
/// zero when some alpha_i is zero (the corresponding factor is dbar of a
/// holomorphic function) or when z^{alpha - 1} already lies in the ideal
/// (the coefficient is annihilated). Every candidate component has
/// alpha >= 1 componentwise; this is asserted.
/// Requires the complex to resolve the ideal and the ideal to be Artinian.
FormalResidue residueCurrent(const LabeledComplex& complex,
                             const MonIdeal& ideal);

/// Exponents of the candidate components, sorted, duplicates kept.
std::vector<Exponent> candidateAlphas(const FormalResidue& residue);

/// The formal action of z^beta on a component with exponent alpha:
/// multiplying kills the component exactly when some beta_i reaches
/// alpha_i (each factor dbar(1/z_i^{alpha_i}) absorbs powers of z_i until
/// the exponent hits zero and the factor vanishes). Equivalently,
/// z^beta lies in (z_1^{alpha_1}, ..., z_n^{alpha_n}).
bool monomialAnnihilates(const Exponent& beta, const Exponent& alpha);

/// The annihilator of the residue: the intersection of the ideals
/// (z_1^{a_1}, ..., z_n^{a_n}) over candidate exponents a. Requires at
/// least one candidate component.
MonIdeal annihilator(const FormalResidue& residue);

/// Duality: the annihilator of the residue carried by the complex
/// recovers the ideal exactly.
bool dualityCheck(const LabeledComplex& complex, const MonIdeal& ideal);

}  // namespace monres

#endif
