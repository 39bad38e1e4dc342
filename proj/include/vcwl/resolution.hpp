#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <vector>

#include "vcwl/matrix.hpp"
#include "vcwl/veronese.hpp"

namespace vcwl {

/// Basis of R^(c)_j: the x-monomials of degree cj, lex-descending.
struct DegreeBasis {
  std::vector<Monomial> monomials;
  std::unordered_map<Monomial, int, MonomialHash> index;
  int dim() const { return static_cast<int>(monomials.size()); }
};

/// R^(c) realized inside R: a monomial algebra, so the relations Q are
/// implicit and every computation is linear algebra on x-monomials.
class VeroneseAlgebra {
 public:
  explicit VeroneseAlgebra(std::shared_ptr<const VeronesePresentation> pres) : pres_(std::move(pres)) {}

  const VeronesePresentation& pres() const { return *pres_; }
  const std::shared_ptr<const VeronesePresentation>& pres_ptr() const { return pres_; }
  /// Empty for negative degrees.
  const DegreeBasis& basis(int j) const;
  int dim(int j) const { return j < 0 ? 0 : basis(j).dim(); }

 private:
  std::shared_ptr<const VeronesePresentation> pres_;
  mutable std::mutex mutex_;
  mutable std::map<int, std::unique_ptr<DegreeBasis>> cache_;
};

std::shared_ptr<const VeroneseAlgebra> veronese_algebra(std::shared_ptr<const VeronesePresentation> pres);

/// Element of a graded free module: one x-polynomial per generator.
using ModuleElement = std::vector<Polynomial>;

/// M = F0 / N with F0 free on generators of the given degrees and N
/// generated by `relations`. Relations must lie in m^(c) F0, so the
/// generators of F0 are minimal generators of M.
struct GradedModule {
  std::shared_ptr<const VeronesePresentation> pres;
  std::vector<int> generator_degrees;
  std::vector<ModuleElement> relations;

  int rank() const { return static_cast<int>(generator_degrees.size()); }
  /// Degree of a nonzero relation; empty for zero.
  std::optional<int> relation_degree(std::size_t k) const;
  void validate() const;
};

/// R^(c)/I; throws PreconditionError for the unit ideal.
GradedModule quotient_module(const GradedIdeal& ideal);
GradedModule free_module(std::shared_ptr<const VeronesePresentation> pres, std::vector<int> degrees);
/// K = R^(c)/m^(c).
GradedModule residue_field(std::shared_ptr<const VeronesePresentation> pres);

/// Coordinates of F_j for a free module with generator degrees D:
/// block g holds R^(c)_{j - D[g]} and starts at offset[g].
struct FreeCoords {
  std::vector<int> offset;
  int dim = 0;
};
FreeCoords free_coords(const VeroneseAlgebra& alg, const std::vector<int>& degrees, int j);

/// Vector of F_j for an element of F of degree j.
SparseVector element_vector(const VeroneseAlgebra& alg, const std::vector<int>& degrees, int j,
                            const ModuleElement& e);
ModuleElement vector_element(const VeroneseAlgebra& alg, const std::vector<int>& degrees, int j,
                             const SparseVector& v);

struct FreeResolution {
  std::shared_ptr<const VeronesePresentation> pres;
  int imax = 0;
  int jmax = 0;
  /// degrees[i]: generator degrees of F_i, nondecreasing.
  std::vector<std::vector<int>> degrees;
  /// differential[i][g] = d_i(e_g) in F_{i-1}; differential[0] is empty.
  std::vector<std::vector<ModuleElement>> differential;
  bool minimal = true;
};

struct BettiTable {
  int imax = 0;
  int jmax = 0;
  std::vector<std::vector<long>> values;  // [i][j]
  std::vector<bool> complete;             // column i provably contains all of Tor_i

  long at(int i, int j) const;
  long total(int i) const;
  bool all_complete() const;
  friend bool operator==(const BettiTable&, const BettiTable&) = default;
};

/// Certified bound on reg(M) over R^(c) through the regularity of M over
/// S (Bayer-Stillman criterion with generic forms); valid since R^(c) is
/// Koszul. Available for cyclic modules and free modules.
struct RegularityBound {
  int bound = 0;
  int start_degree = 0;      // first degree tried (generation degree over S)
  int certified_degree = 0;  // degree where the criterion held
};
RegularityBound regularity_bound(const GradedModule& m, std::uint64_t seed = 0);

struct ResolutionResult {
  FreeResolution resolution;
  BettiTable betti;
  std::optional<RegularityBound> regularity;
};

/// Minimal graded free resolution of M through step imax in degrees up to
/// jmax, built degreewise: the new generators of F_i in degree j span
/// ker(d_{i-1})_j modulo the submodule generated in lower degrees. Without
/// jmax the default imax + regularity bound is used. Column i is complete
/// when i + reg <= jmax.
ResolutionResult minimal_resolution(const GradedModule& m, int imax, std::optional<int> jmax = {},
                                    std::uint64_t seed = 0);

/// Degree-k pieces of a module M = F0/N with canonical coordinates on the
/// non-pivot coordinates of the echelon form of N_k.
class ModuleQuotient {
 public:
  ModuleQuotient(std::shared_ptr<const VeroneseAlgebra> alg, GradedModule m);

  struct Piece {
    FreeCoords coords;
    Echelon relations;
    std::vector<int> standard;  // F0_k coordinates that survive
    std::vector<int> position;  // F0_k coordinate -> standard position or -1
    int dim() const { return static_cast<int>(standard.size()); }
  };

  const Piece& piece(int k) const;
  int dim(int k) const { return k < 0 ? 0 : piece(k).dim(); }
  const GradedModule& module() const { return m_; }
  const VeroneseAlgebra& algebra() const { return *alg_; }

  /// Class in M_k of a vector of F0_k.
  SparseVector reduce(int k, const SparseVector& v) const;
  /// a * (standard element s of M_k) in M_{k+e}, with a in R^(c)_e.
  SparseVector multiply(const Polynomial& a, int e, int k, int s) const;

 private:
  std::shared_ptr<const VeroneseAlgebra> alg_;
  GradedModule m_;
  mutable std::mutex mutex_;
  mutable std::map<int, std::unique_ptr<Piece>> cache_;
};

/// The complex F (x) M for a free resolution F (of anything) and a module
/// M, with homology computed degreewise.
class TensorComplex {
 public:
  TensorComplex(const FreeResolution& f, std::shared_ptr<const ModuleQuotient> m);

  int imax() const { return f_.imax; }
  int jmax() const { return f_.jmax; }
  /// dim C_{i,j}.
  int dim(int i, int j) const;

  struct Homology {
    std::vector<SparseVector> cycles;  // basis of Z_{i,j}
    Echelon boundaries;                // B_{i,j}
    int dim() const { return static_cast<int>(cycles.size()) - boundaries.rank(); }
  };
  /// H_i in degree j; needs i + 1 <= resolution length for i < imax.
  const Homology& homology(int i, int j) const;

  /// a * v for v in C_{i,j}, a in R^(c)_1 given in x-coordinates.
  SparseVector multiply(const Polynomial& a, int i, int j, const SparseVector& v) const;
  /// dim of the image of multiplication by a: H_i, degree j-1 -> degree j.
  int image_dim(const Polynomial& a, int i, int j) const;
  /// First cycle z of degree j with a*z not a boundary, if any.
  std::optional<SparseVector> non_annihilated(const Polynomial& a, int i, int j) const;

 private:
  SparseVector boundary(int i, int j, int g, int s) const;

  FreeResolution f_;
  std::shared_ptr<const ModuleQuotient> m_;
  mutable std::mutex mutex_;
  mutable std::map<std::pair<int, int>, std::unique_ptr<Homology>> cache_;
};

/// Graded dims of Tor_i(M, N) for i <= imax, j <= jmax, by resolving M
/// and tensoring with N.
std::vector<std::vector<long>> tor_dims(const GradedModule& m, const GradedModule& n, int imax, int jmax);

}  // namespace vcwl
