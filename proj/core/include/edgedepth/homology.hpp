#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "edgedepth/graph.hpp"
#include "edgedepth/monomial.hpp"

namespace edgedepth {

/// Coefficient field GF(p).
struct FieldSpec {
  int characteristic = 2;
};
void validate_field(const FieldSpec& f);

/// Face-set family generated downward by the listed facets.  Ground set
/// indices are bits of a mask (at most 32 vertices).  The void complex has
/// no faces at all; the nonvoid complex always contains the empty face.
class SimplicialComplex {
 public:
  static SimplicialComplex void_complex(std::vector<std::string> ground);
  /// Deduplicates and drops contained facets.
  static SimplicialComplex from_facets(std::vector<std::string> ground,
                                       std::vector<std::uint32_t> facets);

  const std::vector<std::string>& ground() const { return ground_; }
  int ground_size() const { return static_cast<int>(ground_.size()); }
  const std::vector<std::uint32_t>& facets() const { return facets_; }
  bool is_void() const { return facets_.empty(); }
  /// -1 for {∅}; throws for the void complex.
  int dimension() const;
  bool is_face(std::uint32_t mask) const;

 private:
  std::vector<std::string> ground_;
  std::vector<std::uint32_t> facets_;
};

/// Stanley-Reisner complex of a proper squarefree ideal: faces are the
/// squarefree monomials outside I.
SimplicialComplex stanley_reisner(const MonomialIdeal& i);

/// Ranks of reduced homology over GF(p), indexed so that result[j+1] is
/// dim H~_j, j = -1 .. dim K.  The void complex yields an empty vector;
/// H~_{-1}({∅}) has rank 1.
std::vector<int> reduced_homology_ranks(const SimplicialComplex& k, const FieldSpec& f);

struct PdOptions {
  bool full_subsets = false;   // iterate every subset instead of the lcm lattice
  int ground_cap = 24;         // refuse larger squarefree contexts
  std::int64_t face_budget = 6'000'000;    // total faces per restricted complex
  std::int64_t subset_budget = 4'000'000;  // lattice / subset count
  std::int64_t work_budget = 2'000'000'000;  // closure join operations
};

/// pd(S/I) for a proper squarefree ideal via Hochster's formula:
/// max{ i : H~_{|σ|-i-1}(Δ|_σ; F) != 0 }, with σ running over unions of
/// generator supports (plus ∅), or over all subsets with full_subsets.
int pd_squarefree(const MonomialIdeal& i, const FieldSpec& f, const PdOptions& opts = {});

struct KoszulOptions {
  std::int64_t lattice_budget = 4'000'000;
  std::int64_t work_budget = 2'000'000'000;  // closure join operations
};

/// pd(S/I) for an arbitrary proper monomial ideal via the multidegree form
/// of Hochster's formula: β_{i,b}(S/I) = dim H~_{i-2}(K^b(I); F) with K^b
/// the upper Koszul complex, b running over the lcm lattice.  Needs at most
/// 16 variables.  Agrees with pd_squarefree of the polarization.
int pd_koszul(const MonomialIdeal& i, const FieldSpec& f, const KoszulOptions& opts = {});

/// Ground-truth depth result; depth + pd = ambient_n (Auslander-Buchsbaum).
struct DepthResult {
  int depth = 0;
  int pd = 0;
  int ambient_n = 0;
  FieldSpec field;
  std::string method;  // "hochster" | "formula" | "bound-squeeze"
};
std::string depth_result_json(const DepthResult& r, int t);

struct DepthOptions {
  /// Polarized contexts up to this size go through the literal
  /// polarize + pd_squarefree route; larger ones through pd_koszul.
  int literal_cap = 14;
  PdOptions pd;
  KoszulOptions koszul;
};

/// depth(S/I) via polarization and projective dimension.  Rejects the unit
/// ideal; the zero ideal short-circuits to depth = n.
DepthResult depth(const MonomialIdeal& i, const FieldSpec& f, const DepthOptions& opts = {});

struct DepthProfile {
  std::string source;                               // description of the ideal/graph
  std::vector<std::pair<int, DepthResult>> steps;   // (t, result), t = 1..
  std::optional<int> stabilization;                 // empirical index, if any step computed
  bool confirmed = false;                           // tree cross-check n - eps0 matched
  bool truncated = false;                           // a cap stopped the profile early
  std::string truncation_reason;
};

/// Depth of I(G)^t for t = 1..t_max with stabilization detection; for trees
/// the empirical index is cross-checked against n - eps0.
DepthProfile depth_profile(const Graph& g, int t_max, const FieldSpec& f,
                           const DepthOptions& opts = {});

/// Clears the process-wide homology memo cache (mainly for benchmarks).
void clear_homology_cache();

}  // namespace edgedepth
