#include "edgedepth/monomial.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <unordered_map>

#include "json.hpp"

namespace edgedepth {

struct VariableContext::Impl {
  std::vector<std::string> names;
  std::unordered_map<std::string, int> index;
};

VariableContext::VariableContext() : impl_(std::make_shared<Impl>()) {}

VariableContext::VariableContext(std::vector<std::string> names) {
  auto impl = std::make_shared<Impl>();
  impl->names = std::move(names);
  for (std::size_t i = 0; i < impl->names.size(); ++i) {
    if (!impl->index.emplace(impl->names[i], static_cast<int>(i)).second)
      throw error("duplicate variable name '" + impl->names[i] + "'");
  }
  impl_ = std::move(impl);
}

int VariableContext::size() const { return static_cast<int>(impl_->names.size()); }
const std::string& VariableContext::name(int i) const {
  return impl_->names[static_cast<std::size_t>(i)];
}
const std::vector<std::string>& VariableContext::names() const { return impl_->names; }

int VariableContext::index_of(const std::string& n) const {
  auto it = impl_->index.find(n);
  return it == impl_->index.end() ? -1 : it->second;
}

bool VariableContext::operator==(const VariableContext& o) const {
  return impl_ == o.impl_ || impl_->names == o.impl_->names;
}

VariableContext context_union(const VariableContext& a, const VariableContext& b) {
  std::vector<std::string> names = a.names();
  names.insert(names.end(), b.names().begin(), b.names().end());
  std::sort(names.begin(), names.end());
  names.erase(std::unique(names.begin(), names.end()), names.end());
  return VariableContext(std::move(names));
}

Monomial Monomial::one(const VariableContext& ctx) {
  Monomial m;
  m.ctx_ = ctx;
  m.exps_.assign(static_cast<std::size_t>(ctx.size()), 0);
  return m;
}

Monomial Monomial::variable(const VariableContext& ctx, int i) {
  Monomial m = one(ctx);
  m.exps_[static_cast<std::size_t>(i)] = 1;
  return m;
}

Monomial Monomial::make(const VariableContext& ctx, std::vector<std::uint8_t> exps) {
  if (static_cast<int>(exps.size()) != ctx.size())
    throw error("exponent vector length does not match context");
  Monomial m;
  m.ctx_ = ctx;
  m.exps_ = std::move(exps);
  return m;
}

int Monomial::degree() const {
  int d = 0;
  for (auto e : exps_) d += e;
  return d;
}

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](std::uint8_t e) { return e == 0; });
}

bool Monomial::is_variable() const {
  int ones = 0;
  for (auto e : exps_) {
    if (e > 1) return false;
    ones += e;
  }
  return ones == 1;
}

bool Monomial::is_squarefree() const {
  return std::all_of(exps_.begin(), exps_.end(), [](std::uint8_t e) { return e <= 1; });
}

Monomial Monomial::times(const Monomial& o) const {
  if (ctx_ != o.ctx_) throw error("context mismatch in monomial product");
  Monomial r = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    int s = int(exps_[i]) + int(o.exps_[i]);
    if (s > 255) throw error("exponent overflow (" + std::to_string(s) + " > 255) at variable " +
                             ctx_.name(static_cast<int>(i)));
    r.exps_[i] = static_cast<std::uint8_t>(s);
  }
  return r;
}

bool Monomial::divides(const Monomial& o) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > o.exps_[i]) return false;
  return true;
}

Monomial Monomial::colon_by(const Monomial& f) const {
  Monomial r = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    r.exps_[i] = static_cast<std::uint8_t>(exps_[i] - std::min(exps_[i], f.exps_[i]));
  return r;
}

std::string Monomial::str() const {
  std::string s;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += ctx_.name(static_cast<int>(i));
    if (exps_[i] > 1) s += "^" + std::to_string(int(exps_[i]));
  }
  return s.empty() ? "1" : s;
}

bool Monomial::operator==(const Monomial& o) const { return exps_ == o.exps_ && ctx_ == o.ctx_; }

bool Monomial::operator<(const Monomial& o) const {
  int d = degree(), e = o.degree();
  if (d != e) return d < e;
  return exps_ > o.exps_;  // within a degree, earlier variables lead
}

namespace {

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end(),
                         [](const Monomial& a, const Monomial& b) {
                           return a.exponents() == b.exponents();
                         }),
             gens.end());
  std::vector<Monomial> out;
  for (auto& g : gens) {
    bool redundant = false;
    for (const auto& h : out) {
      if (h.divides(g)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace

MonomialIdeal MonomialIdeal::zero(const VariableContext& ctx) {
  MonomialIdeal i;
  i.ctx_ = ctx;
  return i;
}

MonomialIdeal MonomialIdeal::unit(const VariableContext& ctx) {
  MonomialIdeal i;
  i.ctx_ = ctx;
  i.gens_ = {Monomial::one(ctx)};
  return i;
}

MonomialIdeal MonomialIdeal::make(const VariableContext& ctx, std::vector<Monomial> gens) {
  for (const auto& g : gens)
    if (g.context() != ctx) throw error("generator context mismatch");
  MonomialIdeal i;
  i.ctx_ = ctx;
  i.gens_ = minimalize(std::move(gens));
  return i;
}

bool MonomialIdeal::is_unit() const { return gens_.size() == 1 && gens_[0].is_one(); }

bool MonomialIdeal::is_squarefree() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const Monomial& g) { return g.is_squarefree(); });
}

bool MonomialIdeal::contains(const Monomial& m) const {
  return std::any_of(gens_.begin(), gens_.end(),
                     [&](const Monomial& g) { return g.divides(m); });
}

bool MonomialIdeal::operator==(const MonomialIdeal& o) const {
  if (ctx_ != o.ctx_ || gens_.size() != o.gens_.size()) return false;
  for (std::size_t i = 0; i < gens_.size(); ++i)
    if (gens_[i].exponents() != o.gens_[i].exponents()) return false;
  return true;
}

MonomialIdeal edge_ideal(const Graph& g) {
  VariableContext ctx(g.vertices());
  std::vector<Monomial> gens;
  for (const auto& e : g.edges()) {
    std::vector<std::uint8_t> exps(static_cast<std::size_t>(ctx.size()), 0);
    exps[static_cast<std::size_t>(ctx.index_of(e.u))] = 1;
    exps[static_cast<std::size_t>(ctx.index_of(e.v))] = 1;
    gens.push_back(Monomial::make(ctx, std::move(exps)));
  }
  return MonomialIdeal::make(ctx, std::move(gens));
}

MonomialIdeal power(const MonomialIdeal& i, int t) {
  if (t < 1) throw error("power: exponent must be >= 1, got " + std::to_string(t));
  if (i.is_zero() || i.is_unit() || t == 1) return i;

  // multiset count C(m+t-1, t) guard
  double est = 1.0;
  int m = i.generator_count();
  for (int k = 1; k <= t; ++k) est *= double(m + t - k) / k;
  if (est > 4e6)
    throw infeasible_error("power: ~" + std::to_string(static_cast<long long>(est)) +
                           " degree-" + std::to_string(t) + " products exceed the budget");

  std::vector<Monomial> products;
  const auto& gens = i.generators();
  std::vector<Monomial> stack;
  std::function<void(int, int, const Monomial&)> rec = [&](int idx, int left, const Monomial& acc) {
    if (left == 0) {
      products.push_back(acc);
      return;
    }
    if (idx == m) return;
    rec(idx + 1, left, acc);                         // skip gens[idx]
    rec(idx, left - 1, acc.times(gens[static_cast<std::size_t>(idx)]));  // take one more copy
  };
  rec(0, t, Monomial::one(i.context()));
  return MonomialIdeal::make(i.context(), std::move(products));
}

MonomialIdeal colon(const MonomialIdeal& i, const Monomial& f) {
  if (f.context() != i.context()) throw error("colon: context mismatch");
  std::vector<Monomial> gens;
  gens.reserve(i.generators().size());
  for (const auto& g : i.generators()) gens.push_back(g.colon_by(f));
  return MonomialIdeal::make(i.context(), std::move(gens));
}

namespace {

MonomialIdeal recontext(const MonomialIdeal& i, const VariableContext& ctx) {
  std::vector<int> map(static_cast<std::size_t>(i.context().size()));
  for (int k = 0; k < i.context().size(); ++k) {
    int idx = ctx.index_of(i.context().name(k));
    if (idx < 0) throw error("recontext: variable '" + i.context().name(k) + "' missing");
    map[static_cast<std::size_t>(k)] = idx;
  }
  std::vector<Monomial> gens;
  for (const auto& g : i.generators()) {
    std::vector<std::uint8_t> e(static_cast<std::size_t>(ctx.size()), 0);
    for (int k = 0; k < i.context().size(); ++k)
      e[static_cast<std::size_t>(map[static_cast<std::size_t>(k)])] = g.exponent(k);
    gens.push_back(Monomial::make(ctx, std::move(e)));
  }
  return MonomialIdeal::make(ctx, std::move(gens));
}

}  // namespace

MonomialIdeal add(const MonomialIdeal& i, const MonomialIdeal& j) {
  if (i.context() == j.context()) {
    std::vector<Monomial> gens = i.generators();
    gens.insert(gens.end(), j.generators().begin(), j.generators().end());
    return MonomialIdeal::make(i.context(), std::move(gens));
  }
  VariableContext u = context_union(i.context(), j.context());
  return add(recontext(i, u), recontext(j, u));
}

MonomialIdeal add_variables(const MonomialIdeal& i, const std::vector<std::string>& vars) {
  std::vector<std::string> names = i.context().names();
  for (const auto& v : vars) {
    if (i.context().index_of(v) >= 0) throw error("add_variables: '" + v + "' already present");
    names.push_back(v);
  }
  return recontext(i, VariableContext(std::move(names)));
}

std::vector<std::string> free_variables(const MonomialIdeal& i) {
  std::vector<std::string> out;
  for (int v = 0; v < i.context().size(); ++v) {
    bool used = false;
    for (const auto& g : i.generators())
      if (g.exponent(v) > 0) {
        used = true;
        break;
      }
    if (!used) out.push_back(i.context().name(v));
  }
  return out;
}

ClearedIdeal clear_variables(const MonomialIdeal& i) {
  ClearedIdeal out;
  std::vector<const Monomial*> kept;
  for (const auto& g : i.generators()) {
    if (g.is_variable())
      ++out.pure_count;
    else
      kept.push_back(&g);
  }
  // remaining variables: appear in some kept generator
  std::vector<int> keep_var;
  for (int v = 0; v < i.context().size(); ++v) {
    bool used = false;
    for (const Monomial* g : kept)
      if (g->exponent(v) > 0) {
        used = true;
        break;
      }
    bool pure = false;
    if (!used) {
      for (const auto& g : i.generators())
        if (g.is_variable() && g.exponent(v) > 0) {
          pure = true;
          break;
        }
      if (!pure) ++out.free_count;
    }
    if (used) keep_var.push_back(v);
  }
  std::vector<std::string> names;
  names.reserve(keep_var.size());
  for (int v : keep_var) names.push_back(i.context().name(v));
  VariableContext rctx(std::move(names));
  std::vector<Monomial> gens;
  for (const Monomial* g : kept) {
    std::vector<std::uint8_t> e(keep_var.size());
    for (std::size_t k = 0; k < keep_var.size(); ++k) e[k] = g->exponent(keep_var[k]);
    gens.push_back(Monomial::make(rctx, std::move(e)));
  }
  out.reduced = MonomialIdeal::make(rctx, std::move(gens));
  return out;
}

PolarizedIdeal polarize(const MonomialIdeal& i) {
  const auto& ctx = i.context();
  std::vector<int> max_exp(static_cast<std::size_t>(ctx.size()), 0);
  for (const auto& g : i.generators())
    for (int v = 0; v < ctx.size(); ++v)
      max_exp[static_cast<std::size_t>(v)] =
          std::max<int>(max_exp[static_cast<std::size_t>(v)], g.exponent(v));

  // context grouped by original variable then slot; slot 1 keeps the name
  std::vector<std::string> names;
  std::vector<std::vector<int>> slot_index(static_cast<std::size_t>(ctx.size()));
  int new_vars = 0;
  for (int v = 0; v < ctx.size(); ++v) {
    slot_index[static_cast<std::size_t>(v)].push_back(static_cast<int>(names.size()));
    names.push_back(ctx.name(v));
    for (int k = 2; k <= max_exp[static_cast<std::size_t>(v)]; ++k) {
      std::string nm = ctx.name(v) + "~" + std::to_string(k);
      if (ctx.index_of(nm) >= 0)
        throw error("polarize: slot name '" + nm + "' collides with an existing variable");
      slot_index[static_cast<std::size_t>(v)].push_back(static_cast<int>(names.size()));
      names.push_back(nm);
      ++new_vars;
    }
  }
  VariableContext pctx(std::move(names));
  std::vector<Monomial> gens;
  for (const auto& g : i.generators()) {
    std::vector<std::uint8_t> e(static_cast<std::size_t>(pctx.size()), 0);
    for (int v = 0; v < ctx.size(); ++v)
      for (int k = 0; k < g.exponent(v); ++k)
        e[static_cast<std::size_t>(slot_index[static_cast<std::size_t>(v)][static_cast<std::size_t>(k)])] = 1;
    gens.push_back(Monomial::make(pctx, std::move(e)));
  }
  return PolarizedIdeal{MonomialIdeal::make(pctx, std::move(gens)), new_vars};
}

MonomialIdeal leaf_colon_reduce(const Graph& g, const Edge& xy, int t) {
  if (t < 2) throw error("leaf_colon_reduce: power must be >= 2");
  int a = g.index_of(xy.u), b = g.index_of(xy.v);
  if (!g.has_edge(a, b)) throw error("{" + xy.u + "," + xy.v + "} is not an edge");
  if (g.degree(a) != 1 && g.degree(b) != 1)
    throw error("{" + xy.u + "," + xy.v + "} is not a leaf edge");
  MonomialIdeal base = edge_ideal(g);
  const auto& ctx = base.context();
  std::vector<std::uint8_t> fe(static_cast<std::size_t>(ctx.size()), 0);
  fe[static_cast<std::size_t>(ctx.index_of(xy.u))] = 1;
  fe[static_cast<std::size_t>(ctx.index_of(xy.v))] = 1;
  Monomial f = Monomial::make(ctx, std::move(fe));

  MonomialIdeal expected = power(base, t - 1);
  MonomialIdeal actual = colon(power(base, t), f);
  if (!(expected == actual))
    throw error("leaf_colon_reduce: I^t:(xy) != I^{t-1}; this indicates a bug");
  return expected;
}

MonomialIdeal completion_colon(const Graph& g, const EdgeSet& e) {
  Graph h = bipartite_completion(g, e);  // validates the hypotheses
  int t = static_cast<int>(e.size());
  MonomialIdeal base = edge_ideal(g);
  const auto& ctx = base.context();
  Monomial f = Monomial::one(ctx);
  for (const auto& ed : e.edges) {
    std::vector<std::uint8_t> fe(static_cast<std::size_t>(ctx.size()), 0);
    fe[static_cast<std::size_t>(ctx.index_of(ed.u))] = 1;
    fe[static_cast<std::size_t>(ctx.index_of(ed.v))] = 1;
    f = f.times(Monomial::make(ctx, std::move(fe)));
  }
  MonomialIdeal expected = edge_ideal(h);
  if (expected.context() != ctx) expected = recontext(expected, ctx);
  MonomialIdeal actual = colon(power(base, t + 1), f);
  if (!(expected == actual))
    throw error("completion_colon: I^{t+1}:(e_1...e_t) != I(H); hypothesis gap or bug");
  return expected;
}

std::string to_text(const MonomialIdeal& i) {
  std::ostringstream out;
  for (const auto& g : i.generators()) out << g.str() << '\n';
  return out.str();
}

std::string to_json_string(const MonomialIdeal& i) {
  nlohmann::json j;
  j["vars"] = i.context().names();
  auto gens = nlohmann::json::array();
  for (const auto& g : i.generators()) {
    auto e = nlohmann::json::array();
    for (int v = 0; v < i.context().size(); ++v) e.push_back(int(g.exponent(v)));
    gens.push_back(e);
  }
  j["gens"] = gens;
  return j.dump();
}

MonomialIdeal ideal_from_json_string(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const std::exception& ex) {
    throw parse_error(std::string("invalid JSON: ") + ex.what(), 1);
  }
  if (!j.contains("vars") || !j.contains("gens"))
    throw parse_error("ideal JSON needs \"vars\" and \"gens\"", 1);
  VariableContext ctx(j["vars"].get<std::vector<std::string>>());
  std::vector<Monomial> gens;
  for (const auto& ge : j["gens"]) {
    if (static_cast<int>(ge.size()) != ctx.size())
      throw parse_error("generator exponent vector has wrong length", 1);
    std::vector<std::uint8_t> e;
    for (const auto& x : ge) {
      int v = x.get<int>();
      if (v < 0 || v > 255) throw parse_error("exponent out of range [0,255]", 1);
      e.push_back(static_cast<std::uint8_t>(v));
    }
    gens.push_back(Monomial::make(ctx, std::move(e)));
  }
  return MonomialIdeal::make(ctx, std::move(gens));
}

}  // namespace edgedepth
