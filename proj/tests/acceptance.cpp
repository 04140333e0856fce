// Acceptance harness: one line per criterion, exit code = number of
// failures.  Every tolerance is exact integer equality; the two runtime
// budgets (60 s for the corpus sweep, 10 s for the three-variable checks)
// are enforced with wall-clock measurements.
#include <chrono>
#include <exception>
#include <functional>
#include <iomanip>
#include <iostream>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "monres/certify.hpp"
#include "monres/complex.hpp"
#include "monres/fan.hpp"
#include "monres/ideal.hpp"
#include "monres/io.hpp"
#include "monres/newton.hpp"
#include "monres/residue.hpp"

using namespace monres;

namespace {

using Clock = std::chrono::steady_clock;

double secondsSince(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmtSeconds(double s) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(2) << s << "s";
  return out.str();
}

// 1. Certificate decision agrees with the Newton-polyhedron decision on
//    every corpus ideal, within the 60 s budget.
std::string decisionEquivalenceSweep() {
  const auto start = Clock::now();
  std::vector<IdealDocument> docs = generateCorpus(2, 4);
  for (const IdealDocument& doc : docs)
    if (!crossValidate(doc.ideal))
      return "decisions disagree on " + idealString(doc.ideal);
  const double elapsed = secondsSince(start);
  if (elapsed >= 60.0)
    return "sweep took " + fmtSeconds(elapsed) + " (budget 60s)";
  std::ostringstream note;
  note << docs.size() << " ideals in " << fmtSeconds(elapsed);
  return "OK " + note.str();
}

// 2. The residue annihilator reproduces every corpus ideal exactly, and the
//    candidate labels contain the irreducible decomposition.
std::string dualitySweep() {
  std::vector<IdealDocument> docs = generateCorpus(2, 4);
  for (const IdealDocument& doc : docs) {
    const MonIdeal& ideal = doc.ideal;
    LabeledComplex taylor = taylorComplex(ideal);
    FormalResidue residue = residueCurrent(taylor, ideal);
    if (annihilator(residue) != ideal)
      return "annihilator differs on " + idealString(ideal);
    std::vector<Exponent> alphas = candidateAlphas(residue);
    for (const Exponent& corner : irreducibleDecomposition(ideal))
      if (!std::binary_search(alphas.begin(), alphas.end(), corner))
        return "corner " + corner.toString() + " missing on " +
               idealString(ideal);
  }
  return "OK " + std::to_string(docs.size()) + " ideals";
}

// 3. Taylor complexes of all corpus ideals are cellular resolutions with
//    vanishing compositions; deleting an edge of the Taylor complex of the
//    squared maximal ideal breaks acyclicity first at the label (2,1).
std::string resolutionChecks() {
  std::vector<IdealDocument> docs = generateCorpus(2, 4);
  for (const IdealDocument& doc : docs) {
    LabeledComplex taylor = taylorComplex(doc.ideal);
    if (!composeZero(taylor))
      return "composition not zero on " + idealString(doc.ideal);
    if (!isCellularResolution(taylor, doc.ideal))
      return "Taylor complex fails on " + idealString(doc.ideal);
  }
  MonIdeal m2 = power(maximalIdeal(2), 2);
  LabeledComplex broken = taylorComplex(m2).removeFace({1, 2});
  ResolutionCheck check = checkCellularResolution(broken, m2);
  if (check.isResolution)
    return "broken fixture still passes";
  if (!check.failingLabel || *check.failingLabel != Exponent{2, 1})
    return "broken fixture fails at " +
           (check.failingLabel ? check.failingLabel->toString() : "nothing") +
           " instead of (2,1)";
  return "OK " + std::to_string(docs.size()) + " ideals + broken fixture";
}

// 4. Golden certificates for the three benchmark ideals, exact in every
//    field.
std::string goldenCertificates() {
  MonIdeal m2 = power(maximalIdeal(2), 2);
  for (const Exponent& alpha : {Exponent{2, 1}, Exponent{1, 2}}) {
    std::optional<Certificate> cert = findCertificate(alpha, m2);
    if (!cert)
      return "no certificate for " + alpha.toString() + " on m^2";
    if (cert->rho.rho != Exponent{1, 1} || cert->reesOffset != 2 ||
        cert->k != 2 || cert->beta != Exponent{2, 2} || cert->a != 2)
      return "unexpected certificate fields for " + alpha.toString() +
             " on m^2";
  }

  MonIdeal staircase(2, {{3, 0}, {2, 1}, {0, 2}});
  CertReport report = certifyIdeal(staircase, ComplexKind::Taylor);
  if (!report.closed)
    return "(x^3, x^2 y, y^2) not certified closed";
  std::set<Int> avalues;
  for (const ComponentOutcome& outcome : report.outcomes) {
    if (!outcome.certified || !outcome.certificate)
      return "uncertified component on (x^3, x^2 y, y^2)";
    if (outcome.certificate->rho.rho != Exponent{2, 3} ||
        outcome.certificate->reesOffset != 6)
      return "certificate not on ray (2,3) with offset 6";
    avalues.insert(outcome.certificate->a);
  }
  if (avalues != std::set<Int>{Int(5), Int(6)})
    return "certificate exponents differ from {5,6}";

  MonIdeal open(2, {{2, 0}, {0, 2}});
  CertReport openReport = certifyIdeal(open, ComplexKind::Taylor);
  if (openReport.closed)
    return "(x^2, y^2) certified closed";
  if (openReport.outcomes.size() != 1 ||
      openReport.outcomes[0].alpha != Exponent{2, 2})
    return "(x^2, y^2) witness is not alpha=(2,2)";
  bool witnessed = false;
  for (const RayOrder& ro : openReport.outcomes[0].rayOrders)
    if (ro.rho.rho == Exponent{1, 1} && ro.reesOffset == 2 &&
        ro.ordAlphaMinusOne == 2)
      witnessed = true;
  if (!witnessed)
    return "(x^2, y^2) missing the ord=2=r witness on (1,1)";
  return "OK 3 benchmark ideals";
}

// 5. Powers of the maximal ideal in two variables: every candidate
//    component certifies with a equal to the power and to the Rees offset.
std::string maximalPowerFamily() {
  for (long ell = 1; ell <= 5; ++ell) {
    MonIdeal ideal = power(maximalIdeal(2), Int(ell));
    CertReport report = certifyIdeal(ideal, ComplexKind::Taylor);
    if (!report.closed)
      return "m^" + std::to_string(ell) + " not certified closed";
    if (report.outcomes.empty())
      return "m^" + std::to_string(ell) + " has no components";
    for (const ComponentOutcome& outcome : report.outcomes) {
      if (!outcome.certified || !outcome.certificate)
        return "uncertified component on m^" + std::to_string(ell);
      if (outcome.certificate->a != Int(ell) ||
          outcome.certificate->reesOffset != Int(ell))
        return "certificate exponent differs from " + std::to_string(ell) +
               " on m^" + std::to_string(ell);
    }
  }
  return "OK powers 1..5";
}

// 6. Three-variable spot checks inside the 10 s budget: the squared maximal
//    ideal (6 generators, 64-face Taylor complex) certifies closed, and
//    (x^2, y^2, z^2) is rejected with the ray (1,1,1) at offset 2.
std::string threeVariableSpotChecks() {
  const auto start = Clock::now();
  MonIdeal m2 = power(maximalIdeal(3), 2);
  if (m2.generatorCount() != 6)
    return "m^2 in 3 variables has " + std::to_string(m2.generatorCount()) +
           " generators";
  LabeledComplex taylor = taylorComplex(m2);
  std::size_t faces = 0;
  for (std::size_t count : taylor.faceCounts())
    faces += count;
  if (faces != 64)
    return "Taylor complex has " + std::to_string(faces) + " faces";
  CertReport closedReport = certifyIdeal(m2, ComplexKind::Taylor);
  if (!closedReport.closed)
    return "m^2 in 3 variables not certified closed";

  MonIdeal axes(3, {{2, 0, 0}, {0, 2, 0}, {0, 0, 2}});
  CertReport openReport = certifyIdeal(axes, ComplexKind::Taylor);
  if (openReport.closed)
    return "(x^2, y^2, z^2) certified closed";
  bool witnessed = false;
  for (const ComponentOutcome& outcome : openReport.outcomes)
    for (const RayOrder& ro : outcome.rayOrders)
      if (ro.rho.rho == Exponent{1, 1, 1} && ro.reesOffset == 2)
        witnessed = true;
  if (!witnessed)
    return "(x^2, y^2, z^2) missing the (1,1,1) offset-2 witness";
  const double elapsed = secondsSince(start);
  if (elapsed >= 10.0)
    return "checks took " + fmtSeconds(elapsed) + " (budget 10s)";
  return "OK in " + fmtSeconds(elapsed);
}

// 7. The Koszul complex of (x^2, y^3) yields a single residue component
//    with label (2,3), and its annihilator is exactly the ideal.
std::string koszulResidue() {
  MonIdeal ideal = powersIdeal({2, 3});
  LabeledComplex koszul = koszulComplex({2, 3});
  FormalResidue residue = residueCurrent(koszul, ideal);
  std::vector<Exponent> alphas = candidateAlphas(residue);
  if (alphas != std::vector<Exponent>{Exponent{2, 3}})
    return "candidate labels are not exactly {(2,3)}";
  if (annihilator(residue) != ideal)
    return "annihilator differs from (x^2, y^3)";
  return "OK";
}

// 8. Regularizing the normal fan of (x^3, y^2) inserts exactly the rays
//    (1,1) and (1,2); all consecutive determinants are 1.
std::string fanGolden() {
  Fan regular = regularize(normalFan(MonIdeal(2, {{3, 0}, {0, 2}})));
  const std::vector<Exponent> expected = {
      {1, 0}, {1, 1}, {2, 3}, {1, 2}, {0, 1}};
  if (regular.rays != expected)
    return "regularized rays differ from the golden list";
  for (std::size_t i = 0; i + 1 < regular.rays.size(); ++i) {
    const Exponent& u = regular.rays[i];
    const Exponent& v = regular.rays[i + 1];
    if (u[0] * v[1] - u[1] * v[0] != 1)
      return "consecutive determinant differs from 1 at position " +
             std::to_string(i);
  }
  return "OK";
}

// 9. Uniform containment: the min(n, generators)-th power of the closure
//    lands in the ideal corpus-wide, and the bound is sharp for (x^2, y^2).
std::string uniformContainmentSweep() {
  std::vector<IdealDocument> docs = generateCorpus(2, 4);
  for (const IdealDocument& doc : docs) {
    UniformContainment uc = brianconSkodaCheck(doc.ideal);
    if (!uc.holds)
      return "containment fails on " + idealString(doc.ideal);
  }
  MonIdeal open(2, {{2, 0}, {0, 2}});
  if (isSubideal(integralClosure(open), open))
    return "sharpness witness (x^2, y^2) is integrally closed";
  return "OK " + std::to_string(docs.size()) + " ideals + sharpness witness";
}

// 10. Pure-power ideals: a single Rees valuation whose order is the same on
//     every pure-power generator.
std::string purePowerValuations() {
  std::mt19937 rng(20260816u);
  std::uniform_int_distribution<long> entry(1, 6);
  for (int trial = 0; trial < 20; ++trial) {
    Exponent beta{entry(rng), entry(rng)};
    MonIdeal ideal = powersIdeal(beta);
    std::vector<CompactFacet> facets = reesValuations(ideal);
    if (facets.size() != 1)
      return "more than one valuation for " + idealString(ideal);
    const CompactFacet& facet = facets[0];
    for (const Exponent& gen : ideal.generators())
      if (weightOf(facet.normal.rho, gen) != facet.offset)
        return "unequal generator order for " + idealString(ideal);
  }
  return "OK 20 trials";
}

struct Criterion {
  const char* label;
  std::function<std::string()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"decision equivalence across the bound-4 corpus",
       decisionEquivalenceSweep},
      {"residue annihilator duality across the corpus", dualitySweep},
      {"Taylor resolutions verified, broken fixture localized",
       resolutionChecks},
      {"golden certificates for three benchmark ideals", goldenCertificates},
      {"maximal-ideal powers certify with exponent = power",
       maximalPowerFamily},
      {"three-variable spot checks", threeVariableSpotChecks},
      {"Koszul residue component and annihilator", koszulResidue},
      {"regularized normal fan of (x^3, y^2)", fanGolden},
      {"closure-power containment with sharpness witness",
       uniformContainmentSweep},
      {"pure-power ideals have one equal-order valuation",
       purePowerValuations},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    std::string note;
    try {
      note = criteria[i].run();
    } catch (const std::exception& e) {
      note = std::string("exception: ") + e.what();
    }
    const bool ok = note.rfind("OK", 0) == 0;
    if (!ok)
      ++failures;
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << (i + 1) << ". "
              << criteria[i].label;
    if (ok && note.size() > 2)
      std::cout << " (" << note.substr(3) << ")";
    if (!ok)
      std::cout << " — " << note;
    std::cout << "\n";
  }
  if (failures == 0)
    std::cout << "all " << criteria.size() << " criteria pass\n";
  else
    std::cout << failures << " of " << criteria.size()
              << " criteria fail\n";
  return failures;
}
