#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "edgedepth/errors.hpp"
#include "edgedepth/graph.hpp"

namespace edgedepth {

/// Ordered list of distinct variable names. Cheap to copy (shared storage);
/// equality is by the name sequence.
class VariableContext {
 public:
  VariableContext();
  explicit VariableContext(std::vector<std::string> names);

  int size() const;
  const std::string& name(int i) const;
  const std::vector<std::string>& names() const;
  /// -1 if absent.
  int index_of(const std::string& n) const;

  bool operator==(const VariableContext& o) const;
  bool operator!=(const VariableContext& o) const { return !(*this == o); }

 private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
};

/// Union of two contexts in deterministic name-sorted order.
VariableContext context_union(const VariableContext& a, const VariableContext& b);

/// Monomial as an exponent vector over an explicit context. Exponents are
/// bounded by 255; overflow is a hard error, not wraparound.
class Monomial {
 public:
  Monomial() = default;
  static Monomial one(const VariableContext& ctx);
  static Monomial variable(const VariableContext& ctx, int i);
  static Monomial make(const VariableContext& ctx, std::vector<std::uint8_t> exps);

  const VariableContext& context() const { return ctx_; }
  int degree() const;
  std::uint8_t exponent(int i) const { return exps_[static_cast<std::size_t>(i)]; }
  const std::vector<std::uint8_t>& exponents() const { return exps_; }

  bool is_one() const;
  bool is_variable() const;  // a single variable to the first power
  bool is_squarefree() const;

  Monomial times(const Monomial& o) const;
  bool divides(const Monomial& o) const;
  /// this / gcd(this, f) -- the colon quotient of a generator.
  Monomial colon_by(const Monomial& f) const;

  /// Multiplicative notation, e.g. "x1^2*x2"; "1" for the unit.
  std::string str() const;

  bool operator==(const Monomial& o) const;
  bool operator<(const Monomial& o) const;  // (degree, exponent vector) order

 private:
  VariableContext ctx_;
  std::vector<std::uint8_t> exps_;
};

/// Monomial ideal held by its unique minimal generating set, kept canonical
/// (minimalized and sorted) after every operation.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  static MonomialIdeal zero(const VariableContext& ctx);
  static MonomialIdeal unit(const VariableContext& ctx);
  static MonomialIdeal make(const VariableContext& ctx, std::vector<Monomial> gens);

  const VariableContext& context() const { return ctx_; }
  const std::vector<Monomial>& generators() const { return gens_; }
  int generator_count() const { return static_cast<int>(gens_.size()); }

  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const;
  bool is_squarefree() const;
  /// Membership: some minimal generator divides m.
  bool contains(const Monomial& m) const;

  bool operator==(const MonomialIdeal& o) const;
  bool operator!=(const MonomialIdeal& o) const { return !(*this == o); }

 private:
  VariableContext ctx_;
  std::vector<Monomial> gens_;  // minimal, sorted
};

/// I(G): one squarefree quadric per edge; context = V(G) in vertex order.
MonomialIdeal edge_ideal(const Graph& g);

/// Minimal generators of I^t, t >= 1.
MonomialIdeal power(const MonomialIdeal& i, int t);

/// (I : f).
MonomialIdeal colon(const MonomialIdeal& i, const Monomial& f);

/// I + J; contexts are unified (name-sorted union) if they differ.
MonomialIdeal add(const MonomialIdeal& i, const MonomialIdeal& j);

/// Same ideal over the context extended by the given fresh variables.
MonomialIdeal add_variables(const MonomialIdeal& i, const std::vector<std::string>& vars);

/// Context variables dividing no generator.
std::vector<std::string> free_variables(const MonomialIdeal& i);

struct ClearedIdeal {
  MonomialIdeal reduced;  // over the remaining variables
  int pure_count = 0;     // generators that were single variables
  int free_count = 0;     // dropped free variables
};
/// Strips single-variable generators and free variables.
/// Depth bookkeeping: depth(S/I) = depth(R/J) + free_count, and the
/// projective dimension grows by pure_count.
ClearedIdeal clear_variables(const MonomialIdeal& i);

struct PolarizedIdeal {
  MonomialIdeal ideal;    // squarefree, over the extended context
  int new_var_count = 0;  // depth(S'/Ipol) = depth(S/I) + new_var_count
};
/// Standard polarization: x^e expands to x * x~2 * ... * x~e; the slot-1
/// variable keeps the original name, so squarefree ideals are fixed points.
PolarizedIdeal polarize(const MonomialIdeal& i);

/// I(G)^{t-1}, asserted equal to I(G)^t : (xy) for a leaf edge xy, t >= 2.
MonomialIdeal leaf_colon_reduce(const Graph& g, const Edge& xy, int t);

/// I(H) for H the bipartite completion of G on e; asserted equal to
/// I(G)^{t+1} : (e_1 ... e_t) where t = |e|.
MonomialIdeal completion_colon(const Graph& g, const EdgeSet& e);

/// One generator per line in multiplicative notation.
std::string to_text(const MonomialIdeal& i);
/// {"vars":[...], "gens":[[e1,...,en],...]} rendered as a JSON string.
std::string to_json_string(const MonomialIdeal& i);
MonomialIdeal ideal_from_json_string(const std::string& text);

}  // namespace edgedepth
