#ifndef MONRES_COMPLEX_HPP
#define MONRES_COMPLEX_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "monres/ideal.hpp"
#include "monres/util.hpp"

namespace monres {

/// A face of a labeled simplicial complex on the generators of a monomial
/// ideal. Vertices are generator indices, strictly increasing; the label
/// is the join (lcm exponent) of the member generators.
struct Face {
  std::vector<std::size_t> vertices;
  Exponent label;

  bool operator==(const Face&) const = default;
};

/// One term of a boundary map: face index in the next-lower degree, a
/// sign, and the exponent of the connecting monomial (label difference).
struct BoundaryEntry {
  std::size_t subfaceIndex;
  int sign;
  Exponent delta;
};

/// A sparse matrix whose entries are signed monomials: one homological
/// differential of a labeled complex.
struct MonomialMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::map<std::pair<std::size_t, std::size_t>, std::pair<int, Exponent>>
      entries;
};

/// A simplicial complex on the generators of a monomial ideal, labeled by
/// lcm exponents, with the alternating-sign simplicial boundary maps. Faces
/// of homological degree k have k vertices; degree 0 is the empty face.
/// Within each degree, faces are sorted by vertex list.
class LabeledComplex {
public:
  /// Builds the complex from the given nonempty faces (vertex index sets).
  /// The set must be closed under subfaces and cover every generator.
  LabeledComplex(const MonIdeal& ideal,
                 std::vector<std::vector<std::size_t>> faceVertexSets);

  const MonIdeal& ideal() const { return ideal_; }
  std::size_t dim() const { return ideal_.dim(); }

  /// Top homological degree: the largest k with faces of k vertices.
  std::size_t topDegree() const { return facesByDegree_.size() - 1; }
  const std::vector<Face>& facesOfDegree(std::size_t k) const;
  const std::vector<BoundaryEntry>& boundaryOf(std::size_t k,
                                               std::size_t faceIndex) const;

  std::vector<std::size_t> faceCounts() const;

  /// Removes one face together with every coface, keeping the result a
  /// complex. The face must be present and must not be a vertex.
  LabeledComplex removeFace(const std::vector<std::size_t>& vertices) const;

private:
  MonIdeal ideal_;
  std::vector<std::vector<Face>> facesByDegree_;
  std::vector<std::vector<std::vector<BoundaryEntry>>> boundariesByDegree_;
};

/// The differential from degree k to degree k-1 as a monomial matrix,
/// 1 <= k <= topDegree. Row indices follow degree k-1 face order.
MonomialMatrix boundaryMatrix(const LabeledComplex& complex, std::size_t k);

/// True when the product of the two monomial matrices is the zero matrix,
/// as polynomials (exact cancellation of signed monomials).
bool composeIsZero(const MonomialMatrix& outer, const MonomialMatrix& inner);

/// Checks d_k . d_{k+1} = 0 for all degrees.
bool composeZero(const LabeledComplex& complex);

/// The full simplex on all generators. Throws input_error when the ideal
/// is zero or has more generators than the cap.
LabeledComplex taylorComplex(const MonIdeal& ideal, std::size_t cap = 20);

/// The subcomplex of the full simplex spanned by faces whose label is not
/// shared with any other face. Validated to be closed under subfaces.
LabeledComplex scarfComplex(const MonIdeal& ideal, std::size_t cap = 20);

/// The full simplex on the generators of (z_1^{b_1}, ..., z_n^{b_n});
/// requires b >= 1 componentwise.
LabeledComplex koszulComplex(const Exponent& b);

struct ResolutionCheck {
  bool isResolution = false;
  /// The lexicographically first lcm-lattice label at which exactness
  /// fails, when it does.
  std::optional<Exponent> failingLabel;
};

/// Decides whether the labeled complex resolves the quotient by its ideal:
/// for every join of generator labels b, the subcomplex of faces dividing
/// z^b must have trivial reduced rational homology. Requires composeZero
/// and vertex labels matching the ideal generators.
ResolutionCheck checkCellularResolution(const LabeledComplex& complex,
                                        const MonIdeal& ideal);

bool isCellularResolution(const LabeledComplex& complex,
                          const MonIdeal& ideal);

struct RankProfile {
  /// ranks[k] is the rank of the degree-(k+1) differential evaluated at a
  /// generic point, so ranks.size() == topDegree.
  std::vector<std::size_t> ranks;
  std::vector<std::size_t> faceCounts;
  /// rank(d_k) + rank(d_{k+1}) == #faces of degree k for every k >= 1,
  /// reading rank(d_{top+1}) as 0.
  bool rankExactness = false;
};

/// Evaluates every differential at three disjoint prime points and checks
/// the ranks agree before reporting them. Requires composeZero.
RankProfile rankProfile(const LabeledComplex& complex);

}  // namespace monres

#endif
