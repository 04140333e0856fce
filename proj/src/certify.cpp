#include "monres/certify.hpp"

#include <algorithm>

#include "monres/complex.hpp"

namespace monres {

std::optional<Certificate> findCertificate(const Exponent& alpha,
                                           const MonIdeal& ideal) {
  requireInput(isArtinian(ideal), "findCertificate: ideal must be Artinian");
  const std::size_t n = ideal.dim();
  requireInput(alpha.dim() == n, "findCertificate: dimension mismatch");
  requireInput(alpha.allPositive(),
               "findCertificate: component exponent must be >= 1");
  const Exponent shifted = alpha.minus(onesExponent(n));
  requireInput(!contains(ideal, shifted),
               "findCertificate: component is provably zero, not a candidate");

  // A Rees valuation qualifies when the ideal order strictly exceeds the
  // order of z^{alpha - 1}; the bound it yields is sharpest for the
  // largest shortfall.
  std::optional<CompactFacet> chosen;
  Int bestShortfall = 0;
  for (const CompactFacet& facet : reesValuations(ideal)) {
    Int ord = weightOf(facet.normal.rho, shifted);
    if (ord >= facet.offset)
      continue;
    Int shortfall = facet.offset - ord;
    if (!chosen || shortfall > bestShortfall) {
      chosen = facet;
      bestShortfall = shortfall;
    }
  }
  if (!chosen)
    return std::nullopt;

  const Exponent& rho = chosen->normal.rho;
  const Int r = chosen->offset;
  const Int ord = weightOf(rho, shifted);

  // gamma_j = product of the other entries of rho, so that <rho, gamma e_j>
  // is the same for every j: the diagonal ideal (z^{k gamma}) has all
  // generators of equal order along rho.
  Int product = 1;
  for (std::size_t i = 0; i < n; ++i)
    product *= rho[i];
  std::vector<Int> gammaCoords(n);
  for (std::size_t j = 0; j < n; ++j)
    mpz_divexact(gammaCoords[j].get_mpz_t(), product.get_mpz_t(),
                 rho[j].get_mpz_t());
  Exponent gamma(std::move(gammaCoords));

  Int k = 0;
  for (std::size_t j = 0; j < n; ++j)
    k = std::max(k, ceilDiv(alpha[j], gamma[j]));
  Exponent beta = scaled(k, gamma);

  MonIdeal diagonal = powersIdeal(beta);
  Int orderBeta = idealOrder(rho, diagonal);
  for (const Exponent& g : diagonal.generators())
    requireInternal(weightOf(rho, g) == orderBeta,
                    "findCertificate: diagonal orders differ along rho");

  Certificate cert;
  cert.alpha = alpha;
  cert.rho = Ray{rho};
  cert.reesOffset = r;
  cert.ordAlphaMinusOne = ord;
  cert.gamma = gamma;
  cert.k = k;
  cert.beta = beta;
  cert.a = Int(n) * orderBeta - weightOf(rho, beta.minus(alpha)) -
           (rho.coordinateSum() - 1);

  requireInternal(alpha.divides(beta),
                  "findCertificate: beta does not dominate alpha");
  requireInternal(cert.a == ord + 1,
                  "findCertificate: exponent identity failed");
  requireInternal(cert.a <= r, "findCertificate: certificate is not small");
  return cert;
}

namespace {

std::vector<ComponentOutcome> certifyComponents(const FormalResidue& residue,
                                                const MonIdeal& ideal) {
  std::vector<CompactFacet> rees = reesValuations(ideal);
  std::vector<ComponentOutcome> outcomes;
  for (const ResidueComponent& component : residue.components) {
    if (component.status != CoeffStatus::CandidateNonzero)
      continue;
    ComponentOutcome outcome;
    outcome.alpha = component.alpha;
    outcome.faceVertices = component.faceVertices;
    outcome.certificate = findCertificate(component.alpha, ideal);
    outcome.certified = outcome.certificate.has_value();
    if (!outcome.certified) {
      Exponent shifted = component.alpha.minus(onesExponent(ideal.dim()));
      for (const CompactFacet& facet : rees)
        outcome.rayOrders.push_back(RayOrder{
            facet.normal, facet.offset,
            weightOf(facet.normal.rho, shifted)});
    }
    outcomes.push_back(std::move(outcome));
  }
  std::sort(outcomes.begin(), outcomes.end(),
            [](const ComponentOutcome& a, const ComponentOutcome& b) {
              if (!(a.alpha == b.alpha))
                return a.alpha < b.alpha;
              return a.faceVertices < b.faceVertices;
            });
  return outcomes;
}

std::optional<PurePowerNote> purePowerNote(const MonIdeal& ideal) {
  const std::size_t n = ideal.dim();
  if (ideal.generatorCount() != n || n < 2)
    return std::nullopt;
  Int ell = 0;
  for (const Exponent& g : ideal.generators()) {
    std::size_t support = 0;
    Int value = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (g[i] != 0) {
        ++support;
        value = g[i];
      }
    if (support != 1)
      return std::nullopt;
    if (ell == 0)
      ell = value;
    else if (ell != value)
      return std::nullopt;
  }
  PurePowerNote note;
  note.ell = ell;
  note.exponentViaOrderSubtraction = Int(n) * ell - Int(n) + 1;
  note.exponentAsStated = Int(n - 1) * ell + 1;
  return note;
}

}  // namespace

CertReport certifyIdeal(const MonIdeal& ideal, ComplexKind kind) {
  requireInput(isArtinian(ideal), "certifyIdeal: ideal must be Artinian");
  requireInput(!ideal.isUnit(), "certifyIdeal: ideal must be proper");

  LabeledComplex complex = kind == ComplexKind::Taylor
                               ? taylorComplex(ideal)
                               : scarfComplex(ideal);
  FormalResidue residue = residueCurrent(complex, ideal);

  CertReport report;
  report.ideal = ideal;
  report.kind = kind;
  report.outcomes = certifyComponents(residue, ideal);
  report.closed = std::all_of(report.outcomes.begin(), report.outcomes.end(),
                              [](const ComponentOutcome& o) {
                                return o.certified;
                              });
  report.purePower = purePowerNote(ideal);
  return report;
}

bool crossValidate(const MonIdeal& ideal) {
  return certifyIdeal(ideal, ComplexKind::Taylor).closed ==
         isIntegrallyClosed(ideal);
}

UniformContainment brianconSkodaCheck(const MonIdeal& ideal) {
  requireInput(isArtinian(ideal),
               "brianconSkodaCheck: ideal must be Artinian");
  requireInput(!ideal.isUnit(), "brianconSkodaCheck: ideal must be proper");
  UniformContainment result;
  result.nu = std::min(Int(ideal.dim()), Int(ideal.generatorCount()));
  result.holds =
      isSubideal(power(integralClosure(ideal), result.nu), ideal);
  return result;
}

SmallnessReport smallnessReport(const MonIdeal& ideal) {
  requireInput(isArtinian(ideal), "smallnessReport: ideal must be Artinian");
  requireInput(isIntegrallyClosed(ideal),
               "smallnessReport: ideal is not integrally closed; "
               "run certify to locate the failing component");

  CertReport cert = certifyIdeal(ideal, ComplexKind::Taylor);
  requireInternal(cert.closed,
                  "smallnessReport: certification disagrees with closure");

  SmallnessReport report;
  report.ideal = ideal;
  report.outcomes = cert.outcomes;
  if (ideal.dim() == 2 || ideal.dim() == 3) {
    report.fanBased = true;
    report.divisors = divisorTable(regularize(normalFan(ideal)), ideal);
  } else {
    report.fanBased = false;
    Fan reesOnly;
    reesOnly.n = ideal.dim();
    for (const CompactFacet& f : reesValuations(ideal))
      reesOnly.rays.push_back(f.normal.rho);
    report.divisors = divisorTable(reesOnly, ideal);
  }
  for (const ComponentOutcome& outcome : report.outcomes)
    requireInternal(outcome.certificate &&
                        outcome.certificate->a <= outcome.certificate->reesOffset,
                    "smallnessReport: a certificate exceeds its Rees order");
  report.note =
      "each component is bounded on its chosen Rees ray only (a <= r "
      "there); on every other divisor the defining section can be raised "
      "to any power at the cost of a nonvanishing factor, so the "
      "remaining rows are informational and a <= r is not promised on "
      "them";
  return report;
}

}  // namespace monres
