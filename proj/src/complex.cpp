#include "monres/complex.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "monres/linalg.hpp"

namespace monres {

namespace {

Exponent labelOf(const MonIdeal& ideal,
                 const std::vector<std::size_t>& vertices) {
  Exponent label = zeroExponent(ideal.dim());
  for (std::size_t v : vertices)
    label = label.join(ideal.generators()[v]);
  return label;
}

}  // namespace

LabeledComplex::LabeledComplex(
    const MonIdeal& ideal, std::vector<std::vector<std::size_t>> faceVertexSets)
    : ideal_(ideal) {
  requireInput(!ideal.isZero(), "labeled complex needs a nonzero ideal");
  const std::size_t r = ideal.generatorCount();

  std::size_t top = 0;
  for (auto& verts : faceVertexSets) {
    requireInput(!verts.empty(), "faces must be nonempty vertex sets");
    requireInput(std::is_sorted(verts.begin(), verts.end()) &&
                     std::adjacent_find(verts.begin(), verts.end()) ==
                         verts.end(),
                 "face vertices must be strictly increasing");
    requireInput(verts.back() < r, "face vertex out of range");
    top = std::max(top, verts.size());
  }
  requireInput(top >= 1, "complex has no faces");

  facesByDegree_.assign(top + 1, {});
  facesByDegree_[0].push_back(Face{{}, zeroExponent(ideal.dim())});
  std::sort(faceVertexSets.begin(), faceVertexSets.end());
  faceVertexSets.erase(
      std::unique(faceVertexSets.begin(), faceVertexSets.end()),
      faceVertexSets.end());
  for (auto& verts : faceVertexSets) {
    Face face{verts, labelOf(ideal, verts)};
    facesByDegree_[verts.size()].push_back(std::move(face));
  }
  for (auto& group : facesByDegree_)
    std::sort(group.begin(), group.end(),
              [](const Face& a, const Face& b) {
                return a.vertices < b.vertices;
              });

  std::vector<bool> covered(r, false);
  for (const Face& f : facesByDegree_[1])
    covered[f.vertices[0]] = true;
  requireInput(std::all_of(covered.begin(), covered.end(),
                           [](bool b) { return b; }),
               "every generator must appear as a vertex");

  // Index faces per degree for subface lookup, then assemble boundaries
  // with the alternating simplicial signs.
  std::vector<std::map<std::vector<std::size_t>, std::size_t>> index(top + 1);
  for (std::size_t k = 0; k <= top; ++k)
    for (std::size_t i = 0; i < facesByDegree_[k].size(); ++i)
      index[k][facesByDegree_[k][i].vertices] = i;

  boundariesByDegree_.assign(top + 1, {});
  boundariesByDegree_[0].resize(facesByDegree_[0].size());
  for (std::size_t k = 1; k <= top; ++k) {
    boundariesByDegree_[k].resize(facesByDegree_[k].size());
    for (std::size_t i = 0; i < facesByDegree_[k].size(); ++i) {
      const Face& face = facesByDegree_[k][i];
      auto& entries = boundariesByDegree_[k][i];
      for (std::size_t drop = 0; drop < k; ++drop) {
        std::vector<std::size_t> sub = face.vertices;
        sub.erase(sub.begin() + static_cast<long>(drop));
        auto found = index[k - 1].find(sub);
        requireInput(found != index[k - 1].end(),
                     "face set is not closed under subfaces");
        const Face& subface = facesByDegree_[k - 1][found->second];
        entries.push_back(BoundaryEntry{
            found->second, drop % 2 == 0 ? 1 : -1,
            face.label.minus(subface.label)});
      }
    }
  }
}

const std::vector<Face>& LabeledComplex::facesOfDegree(std::size_t k) const {
  requireInput(k < facesByDegree_.size(), "degree out of range");
  return facesByDegree_[k];
}

const std::vector<BoundaryEntry>& LabeledComplex::boundaryOf(
    std::size_t k, std::size_t faceIndex) const {
  requireInput(k < boundariesByDegree_.size(), "degree out of range");
  requireInput(faceIndex < boundariesByDegree_[k].size(),
               "face index out of range");
  return boundariesByDegree_[k][faceIndex];
}

std::vector<std::size_t> LabeledComplex::faceCounts() const {
  std::vector<std::size_t> counts;
  for (const auto& group : facesByDegree_)
    counts.push_back(group.size());
  return counts;
}

LabeledComplex LabeledComplex::removeFace(
    const std::vector<std::size_t>& vertices) const {
  requireInput(vertices.size() >= 2,
               "removing a vertex would orphan a generator");
  bool present = false;
  std::vector<std::vector<std::size_t>> kept;
  for (std::size_t k = 1; k < facesByDegree_.size(); ++k)
    for (const Face& f : facesByDegree_[k]) {
      bool isCoface = std::includes(f.vertices.begin(), f.vertices.end(),
                                    vertices.begin(), vertices.end());
      if (isCoface) {
        if (f.vertices.size() == vertices.size())
          present = true;
        continue;
      }
      kept.push_back(f.vertices);
    }
  requireInput(present, "removeFace: face not in the complex");
  return LabeledComplex(ideal_, std::move(kept));
}

MonomialMatrix boundaryMatrix(const LabeledComplex& complex, std::size_t k) {
  requireInput(k >= 1 && k <= complex.topDegree(),
               "boundaryMatrix: degree out of range");
  MonomialMatrix m;
  m.rows = complex.facesOfDegree(k - 1).size();
  m.cols = complex.facesOfDegree(k).size();
  for (std::size_t j = 0; j < m.cols; ++j)
    for (const BoundaryEntry& e : complex.boundaryOf(k, j))
      m.entries[{e.subfaceIndex, j}] = {e.sign, e.delta};
  return m;
}

bool composeIsZero(const MonomialMatrix& outer, const MonomialMatrix& inner) {
  requireInput(outer.cols == inner.rows,
               "composeIsZero: shape mismatch");
  // Accumulate the product as exact polynomials: coefficients per
  // (row, col, exponent), which must all cancel.
  std::map<std::tuple<std::size_t, std::size_t, Exponent>, Int> sums;
  for (const auto& [posOuter, valOuter] : outer.entries)
    for (const auto& [posInner, valInner] : inner.entries) {
      if (posOuter.second != posInner.first)
        continue;
      Exponent expo = valOuter.second.plus(valInner.second);
      sums[{posOuter.first, posInner.second, expo}] +=
          valOuter.first * valInner.first;
    }
  return std::all_of(sums.begin(), sums.end(),
                     [](const auto& kv) { return kv.second == 0; });
}

bool composeZero(const LabeledComplex& complex) {
  for (std::size_t k = 1; k + 1 <= complex.topDegree(); ++k)
    if (!composeIsZero(boundaryMatrix(complex, k),
                       boundaryMatrix(complex, k + 1)))
      return false;
  return true;
}

LabeledComplex taylorComplex(const MonIdeal& ideal, std::size_t cap) {
  requireInput(!ideal.isZero(), "taylorComplex: zero ideal");
  const std::size_t r = ideal.generatorCount();
  requireInput(r <= cap && r < 63, "taylorComplex: too many generators");
  std::vector<std::vector<std::size_t>> faces;
  for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << r); ++mask) {
    std::vector<std::size_t> verts;
    for (std::size_t v = 0; v < r; ++v)
      if (mask & (std::uint64_t(1) << v))
        verts.push_back(v);
    faces.push_back(std::move(verts));
  }
  return LabeledComplex(ideal, std::move(faces));
}

LabeledComplex scarfComplex(const MonIdeal& ideal, std::size_t cap) {
  requireInput(!ideal.isZero(), "scarfComplex: zero ideal");
  const std::size_t r = ideal.generatorCount();
  requireInput(r <= cap && r < 63, "scarfComplex: too many generators");

  std::vector<std::pair<Exponent, std::vector<std::size_t>>> labeled;
  for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << r); ++mask) {
    std::vector<std::size_t> verts;
    for (std::size_t v = 0; v < r; ++v)
      if (mask & (std::uint64_t(1) << v))
        verts.push_back(v);
    labeled.emplace_back(labelOf(ideal, verts), std::move(verts));
  }
  std::map<Exponent, std::size_t> multiplicity;
  for (const auto& [label, verts] : labeled)
    ++multiplicity[label];
  std::vector<std::vector<std::size_t>> faces;
  for (auto& [label, verts] : labeled)
    if (multiplicity[label] == 1)
      faces.push_back(std::move(verts));

  // Uniqueness of labels forces subface closure: a coface of a face with
  // a shared label has a shared label itself. The constructor re-verifies;
  // a failure there would be a bug, not bad input.
  try {
    return LabeledComplex(ideal, std::move(faces));
  } catch (const input_error& e) {
    throw internal_error(std::string("scarfComplex: ") + e.what());
  }
}

LabeledComplex koszulComplex(const Exponent& b) {
  return taylorComplex(powersIdeal(b));
}

namespace {

/// Reduced rational homology of the strand of faces dividing z^bound
/// vanishes in all degrees. Works on filtered sign matrices so strands
/// missing some vertices never need to form a complex of their own.
bool strandAcyclic(const LabeledComplex& complex, const Exponent& bound) {
  const std::size_t top = complex.topDegree();
  std::vector<std::vector<std::size_t>> keptToFull(top + 1);
  std::vector<std::map<std::size_t, std::size_t>> fullToKept(top + 1);
  for (std::size_t k = 0; k <= top; ++k) {
    const auto& faces = complex.facesOfDegree(k);
    for (std::size_t i = 0; i < faces.size(); ++i)
      if (faces[i].label.divides(bound)) {
        fullToKept[k][i] = keptToFull[k].size();
        keptToFull[k].push_back(i);
      }
  }
  if (keptToFull[1].empty())
    return true;  // geometrically empty strand: vacuously acyclic

  std::vector<std::size_t> rank(top + 2, 0);
  for (std::size_t k = 1; k <= top; ++k) {
    if (keptToFull[k].empty())
      break;
    IntMatrix a(keptToFull[k - 1].size(),
                std::vector<Int>(keptToFull[k].size(), Int(0)));
    for (std::size_t j = 0; j < keptToFull[k].size(); ++j)
      for (const BoundaryEntry& e :
           complex.boundaryOf(k, keptToFull[k][j])) {
        auto row = fullToKept[k - 1].find(e.subfaceIndex);
        requireInternal(row != fullToKept[k - 1].end(),
                        "strandAcyclic: strand not closed under subfaces");
        a[row->second][j] = e.sign;
      }
    rank[k] = rankExact(a);
  }

  if (rank[1] != 1)
    return false;
  for (std::size_t k = 1; k <= top; ++k)
    if (rank[k] + rank[k + 1] != keptToFull[k].size())
      return false;
  return true;
}

}  // namespace

ResolutionCheck checkCellularResolution(const LabeledComplex& complex,
                                        const MonIdeal& ideal) {
  requireInput(complex.ideal() == ideal,
               "checkCellularResolution: complex labels a different ideal");
  requireInput(composeZero(complex),
               "checkCellularResolution: differentials do not compose to zero");

  // Homology of the degree-b strand only changes at joins of generator
  // labels, so the lcm lattice is the complete list of bounds to test.
  std::set<Exponent> lattice;
  const auto& gens = ideal.generators();
  const std::size_t r = gens.size();
  requireInput(r < 63, "checkCellularResolution: too many generators");
  for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << r); ++mask) {
    Exponent join = zeroExponent(ideal.dim());
    for (std::size_t v = 0; v < r; ++v)
      if (mask & (std::uint64_t(1) << v))
        join = join.join(gens[v]);
    lattice.insert(join);
  }

  for (const Exponent& bound : lattice)
    if (!strandAcyclic(complex, bound))
      return ResolutionCheck{false, bound};
  return ResolutionCheck{true, std::nullopt};
}

bool isCellularResolution(const LabeledComplex& complex,
                          const MonIdeal& ideal) {
  return checkCellularResolution(complex, ideal).isResolution;
}

RankProfile rankProfile(const LabeledComplex& complex) {
  requireInput(composeZero(complex),
               "rankProfile: differentials do not compose to zero");
  const std::size_t n = complex.dim();
  const std::size_t top = complex.topDegree();

  std::vector<long> primes = firstPrimes(3 * n);
  RankProfile profile;
  profile.faceCounts = complex.faceCounts();
  profile.ranks.assign(top, 0);

  for (std::size_t k = 1; k <= top; ++k) {
    MonomialMatrix m = boundaryMatrix(complex, k);
    std::size_t agreed = 0;
    for (std::size_t trial = 0; trial < 3; ++trial) {
      IntMatrix a(m.rows, std::vector<Int>(m.cols, Int(0)));
      for (const auto& [pos, val] : m.entries) {
        Int value = val.first;
        for (std::size_t i = 0; i < n; ++i)
          value *= powInt(Int(primes[trial * n + i]), val.second[i]);
        a[pos.first][pos.second] = value;
      }
      std::size_t rank = rankExact(a);
      if (trial == 0)
        agreed = rank;
      else
        requireInternal(agreed == rank,
                        "rankProfile: rank varies across evaluation points");
    }
    profile.ranks[k - 1] = agreed;
  }

  profile.rankExactness = true;
  for (std::size_t k = 1; k <= top; ++k) {
    std::size_t next = k < top ? profile.ranks[k] : 0;
    if (profile.ranks[k - 1] + next != complex.facesOfDegree(k).size())
      profile.rankExactness = false;
  }
  return profile;
}

}  // namespace monres
