#include "monres/residue.hpp"

#include <algorithm>

namespace monres {

FormalResidue residueCurrent(const LabeledComplex& complex,
                             const MonIdeal& ideal) {
  requireInput(isArtinian(ideal), "residueCurrent: ideal must be Artinian");
  requireInput(!ideal.isUnit(), "residueCurrent: ideal must be proper");
  requireInput(isCellularResolution(complex, ideal),
               "residueCurrent: complex is not a cellular resolution");
  const std::size_t n = ideal.dim();
  requireInternal(complex.topDegree() >= n,
                  "residueCurrent: resolution shorter than the dimension");

  FormalResidue residue{ideal, {}};
  const Exponent ones = onesExponent(n);
  for (const Face& face : complex.facesOfDegree(n)) {
    CoeffStatus status = CoeffStatus::CandidateNonzero;
    bool positive = face.label.allPositive();
    if (!positive || contains(ideal, face.label.minus(ones)))
      status = CoeffStatus::ProvablyZero;
    if (status == CoeffStatus::CandidateNonzero)
      requireInternal(face.label.allPositive(),
                      "residueCurrent: candidate with a zero exponent");
    residue.components.push_back(
        ResidueComponent{face.vertices, face.label, status});
  }
  return residue;
}

std::vector<Exponent> candidateAlphas(const FormalResidue& residue) {
  std::vector<Exponent> alphas;
  for (const ResidueComponent& c : residue.components)
    if (c.status == CoeffStatus::CandidateNonzero)
      alphas.push_back(c.alpha);
  std::sort(alphas.begin(), alphas.end());
  return alphas;
}

bool monomialAnnihilates(const Exponent& beta, const Exponent& alpha) {
  requireInput(beta.dim() == alpha.dim(),
               "monomialAnnihilates: dimension mismatch");
  for (std::size_t i = 0; i < beta.dim(); ++i)
    if (beta[i] >= alpha[i])
      return true;
  return false;
}

MonIdeal annihilator(const FormalResidue& residue) {
  const std::size_t n = residue.ideal.dim();
  std::vector<Exponent> alphas = candidateAlphas(residue);
  requireInput(!alphas.empty(), "annihilator: empty candidate support");
  MonIdeal result(n, {zeroExponent(n)});
  for (const Exponent& alpha : alphas)
    result = intersect(result, powersIdeal(alpha));
  return result;
}

bool dualityCheck(const LabeledComplex& complex, const MonIdeal& ideal) {
  return annihilator(residueCurrent(complex, ideal)) == ideal;
}

}  // namespace monres
