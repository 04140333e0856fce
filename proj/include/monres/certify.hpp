#ifndef MONRES_CERTIFY_HPP
#define MONRES_CERTIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include "monres/fan.hpp"
#include "monres/ideal.hpp"
#include "monres/newton.hpp"
#include "monres/residue.hpp"

namespace monres {

/// A smallness certificate for one residue component with exponent alpha.
/// It exhibits a Rees valuation rho whose order on z^{alpha - 1} falls
/// short of the order r of the ideal, together with a diagonal power
/// ideal (z^beta) = (z_1^{k g_1}, ..., z_n^{k g_n}) whose Koszul residue
/// dominates the component. The exponent a bounds how many powers of a
/// defining section survive after the coordinate form is factored out;
/// the certificate is valid because a = ord(alpha - 1) + 1 <= r.
struct Certificate {
  Exponent alpha;
  Ray rho;
  Int reesOffset;        // r: order of the ideal along rho
  Int ordAlphaMinusOne;  // <rho, alpha - 1>, strictly below r
  Exponent gamma;        // entrywise products of the other rho entries
  Int k;                 // minimal stretch with beta = k gamma >= alpha
  Exponent beta;
  Int a;                 // n * ord(z^beta) - <rho, beta - alpha> - (|rho| - 1)
};

/// One residue component together with the certification outcome. When no
/// certificate exists, rayOrders records <rho, alpha - 1> against r for
/// every Rees valuation: the witness that alpha is not small anywhere.
struct RayOrder {
  Ray rho;
  Int reesOffset;
  Int ordAlphaMinusOne;
};

struct ComponentOutcome {
  Exponent alpha;
  std::vector<std::size_t> faceVertices;
  bool certified = false;
  std::optional<Certificate> certificate;
  std::vector<RayOrder> rayOrders;
};

enum class ComplexKind { Taylor, Scarf };

/// Recorded bounds for the pure power family (z_1^l, ..., z_n^l), where
/// two different published exponents exist for the dominating Koszul
/// residue: n l - n + 1 from subtracting the coordinate form order, and
/// (n - 1) l + 1 as the sharper stated value. They agree only at l = n;
/// both are reported, the engine relies on neither.
struct PurePowerNote {
  Int ell;
  Int exponentViaOrderSubtraction;
  Int exponentAsStated;
};

struct CertReport {
  MonIdeal ideal{0};
  ComplexKind kind = ComplexKind::Taylor;
  bool closed = false;
  std::vector<ComponentOutcome> outcomes;
  std::optional<PurePowerNote> purePower;
};

/// Searches the Rees valuations of the ideal for a certificate for the
/// component exponent alpha. Requires an Artinian ideal, alpha >= 1
/// componentwise, and z^{alpha - 1} outside the ideal (a candidate
/// component). Returns nothing when every Rees valuation already has
/// order at least r on z^{alpha - 1}. Among qualifying valuations the
/// one with the largest shortfall r - ord is chosen, ties broken toward
/// the lexicographically smallest ray.
std::optional<Certificate> findCertificate(const Exponent& alpha,
                                           const MonIdeal& ideal);

/// Builds the chosen resolution, forms the residue, and certifies every
/// candidate component. The ideal is integrally closed exactly when all
/// components certify; `closed` reports that decision. Outcomes are
/// sorted by (alpha, face).
CertReport certifyIdeal(const MonIdeal& ideal, ComplexKind kind);

/// Runs the certificate decision against the Newton polyhedron decision
/// and returns true when they agree.
bool crossValidate(const MonIdeal& ideal);

/// closure(I)^nu is contained in I for nu = min(n, generator count).
struct UniformContainment {
  Int nu;
  bool holds = false;
};
UniformContainment brianconSkodaCheck(const MonIdeal& ideal);

/// Smallness summary for an integrally closed ideal: the certificates of
/// all candidate components plus the divisor table of the regularized
/// normal fan (Rees rays only when the dimension has no fan support).
struct SmallnessReport {
  MonIdeal ideal{0};
  bool fanBased = false;
  std::vector<DivisorRow> divisors;
  std::vector<ComponentOutcome> outcomes;
  std::string note;
};

/// Requires an integrally closed Artinian ideal (input_error otherwise:
/// run certify to locate the failing component first).
SmallnessReport smallnessReport(const MonIdeal& ideal);

}  // namespace monres

#endif
