// First-order terms over the signature {0, s/1, [], [|]/2, a} (plus any other
// functors a parsed program introduces), atoms, definite clauses, programs and
// idempotent substitutions.

#pragma once

#include <algorithm>
#include <atomic>
#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace dq {

using VarId = std::uint64_t;

namespace symbols {
inline constexpr std::string_view kZero = "0";
inline constexpr std::string_view kSucc = "s";
inline constexpr std::string_view kNil = "[]";
inline constexpr std::string_view kCons = "[|]";
inline constexpr std::string_view kFiller = "a";
}  // namespace symbols

// Process-wide source of fresh variable identities. Ids are never reused, so
// terms built on different threads never capture each other's variables.
inline VarId fresh_var_id() {
  static std::atomic<VarId> next{1};
  return next.fetch_add(1, std::memory_order_relaxed);
}

class Term;

namespace detail {

struct TermNode {
  bool is_var = false;
  bool ground = true;
  VarId id = 0;
  std::string name;  // functor, or the source name of a variable
  std::vector<Term> args;
  std::size_t hash = 0;
};

}  // namespace detail

// Immutable, structurally shared term. Copies are cheap.
class Term {
 public:
  Term() = default;

  static Term var(VarId id, std::string name = {});
  static Term fresh_var(std::string name = {}) { return var(fresh_var_id(), std::move(name)); }
  static Term compound(std::string functor, std::vector<Term> args = {});
  static Term constant(std::string name) { return compound(std::move(name)); }

  bool valid() const { return node_ != nullptr; }
  bool is_var() const { return node_->is_var; }
  bool is_compound() const { return !node_->is_var; }
  bool is_ground() const { return node_->ground; }

  VarId var_id() const { return node_->id; }
  const std::string& var_name() const { return node_->name; }

  const std::string& functor() const { return node_->name; }
  std::size_t arity() const { return node_->args.size(); }
  std::span<const Term> args() const { return node_->args; }
  const Term& arg(std::size_t i) const { return node_->args[i]; }
  bool has_functor(std::string_view f, std::size_t n) const {
    return !node_->is_var && node_->args.size() == n && node_->name == f;
  }

  std::size_t hash() const { return node_->hash; }
  bool same_node(const Term& other) const { return node_ == other.node_; }

  friend bool operator==(const Term& x, const Term& y);
  friend std::strong_ordering operator<=>(const Term& x, const Term& y);

 private:
  std::shared_ptr<const detail::TermNode> node_;
};

inline Term Term::var(VarId id, std::string name) {
  auto n = std::make_shared<detail::TermNode>();
  n->is_var = true;
  n->ground = false;
  n->id = id;
  n->name = std::move(name);
  n->hash = std::hash<VarId>{}(id) * 0x9e3779b97f4a7c15ULL;
  Term t;
  t.node_ = std::move(n);
  return t;
}

inline Term Term::compound(std::string functor, std::vector<Term> args) {
  auto n = std::make_shared<detail::TermNode>();
  n->name = std::move(functor);
  std::size_t h = std::hash<std::string>{}(n->name) ^ (args.size() * 0x100000001b3ULL);
  for (const Term& a : args) {
    n->ground = n->ground && a.is_ground();
    h = h * 1099511628211ULL ^ a.hash();
  }
  n->args = std::move(args);
  n->hash = h;
  Term t;
  t.node_ = std::move(n);
  return t;
}

inline bool operator==(const Term& x, const Term& y) {
  if (x.node_ == y.node_) return true;
  if (x.hash() != y.hash()) return false;
  if (x.is_var() || y.is_var()) return x.is_var() && y.is_var() && x.var_id() == y.var_id();
  if (x.functor() != y.functor() || x.arity() != y.arity()) return false;
  for (std::size_t i = 0; i < x.arity(); ++i) {
    if (!(x.arg(i) == y.arg(i))) return false;
  }
  return true;
}

// Standard order: variables (by id) before compounds; compounds by arity,
// then functor name, then arguments left to right.
inline std::strong_ordering operator<=>(const Term& x, const Term& y) {
  if (x.node_ == y.node_) return std::strong_ordering::equal;
  if (x.is_var() != y.is_var()) {
    return x.is_var() ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  if (x.is_var()) return x.var_id() <=> y.var_id();
  if (auto c = x.arity() <=> y.arity(); c != 0) return c;
  if (auto c = x.functor().compare(y.functor()); c != 0) {
    return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  for (std::size_t i = 0; i < x.arity(); ++i) {
    if (auto c = x.arg(i) <=> y.arg(i); c != 0) return c;
  }
  return std::strong_ordering::equal;
}

struct TermHash {
  std::size_t operator()(const Term& t) const { return t.hash(); }
};

// ---------------------------------------------------------------------------
// Signature helpers.

inline const Term& zero() {
  static const Term t = Term::constant(std::string(symbols::kZero));
  return t;
}
inline const Term& nil() {
  static const Term t = Term::constant(std::string(symbols::kNil));
  return t;
}
inline const Term& filler() {
  static const Term t = Term::constant(std::string(symbols::kFiller));
  return t;
}
inline Term succ(Term t) { return Term::compound(std::string(symbols::kSucc), {std::move(t)}); }
inline Term cons(Term head, Term tail) {
  return Term::compound(std::string(symbols::kCons), {std::move(head), std::move(tail)});
}

inline Term numeral(std::size_t n) {
  static constexpr std::size_t kCached = 64;
  static const std::vector<Term> cache = [] {
    std::vector<Term> v{zero()};
    for (std::size_t i = 1; i < kCached; ++i) v.push_back(succ(v.back()));
    return v;
  }();
  if (n < kCached) return cache[n];
  Term t = cache.back();
  for (std::size_t i = kCached - 1; i < n; ++i) t = succ(std::move(t));
  return t;
}

// [e1, ..., ek | tail]
inline Term make_list(std::span<const Term> elements, Term tail = nil()) {
  Term t = std::move(tail);
  for (auto it = elements.rbegin(); it != elements.rend(); ++it) t = cons(*it, std::move(t));
  return t;
}
inline Term make_list(std::initializer_list<Term> elements, Term tail = nil()) {
  return make_list(std::span<const Term>(elements.begin(), elements.size()), std::move(tail));
}

inline bool is_zero(const Term& t) { return t.has_functor(symbols::kZero, 0); }
inline bool is_succ(const Term& t) { return t.has_functor(symbols::kSucc, 1); }
inline bool is_nil(const Term& t) { return t.has_functor(symbols::kNil, 0); }
inline bool is_cons(const Term& t) { return t.has_functor(symbols::kCons, 2); }
inline bool is_filler(const Term& t) { return t.has_functor(symbols::kFiller, 0); }

// Value of a numeral s^n(0); nullopt for anything else.
inline std::optional<std::size_t> numeral_value(const Term& t) {
  std::size_t n = 0;
  const Term* cur = &t;
  while (is_succ(*cur)) {
    ++n;
    cur = &cur->arg(0);
  }
  if (!is_zero(*cur)) return std::nullopt;
  return n;
}
inline bool is_numeral(const Term& t) { return numeral_value(t).has_value(); }

inline bool is_proper_list(const Term& t) {
  const Term* cur = &t;
  while (is_cons(*cur)) cur = &cur->arg(1);
  return is_nil(*cur);
}

// Members of the cons spine, in order; the tail is not included.
inline std::vector<Term> spine_elements(const Term& t) {
  std::vector<Term> out;
  const Term* cur = &t;
  while (is_cons(*cur)) {
    out.push_back(cur->arg(0));
    cur = &cur->arg(1);
  }
  return out;
}

inline const Term& spine_tail(const Term& t) {
  const Term* cur = &t;
  while (is_cons(*cur)) cur = &cur->arg(1);
  return *cur;
}

// Generalized member relation: e is the k-th member of t when
// t = [e1, ..., e(k-1), e | tail] for an arbitrary tail.
inline std::vector<std::pair<std::size_t, Term>> members(const Term& t) {
  std::vector<std::pair<std::size_t, Term>> out;
  std::size_t k = 1;
  for (const Term& e : spine_elements(t)) out.emplace_back(k++, e);
  return out;
}

inline bool is_member(const Term& e, const Term& t) {
  const Term* cur = &t;
  while (is_cons(*cur)) {
    if (cur->arg(0) == e) return true;
    cur = &cur->arg(1);
  }
  return false;
}

inline bool is_distinct_list(const Term& t) {
  if (!is_proper_list(t)) return false;
  std::vector<Term> elems = spine_elements(t);
  std::sort(elems.begin(), elems.end());
  return std::adjacent_find(elems.begin(), elems.end()) == elems.end();
}

inline void collect_vars(const Term& t, std::vector<Term>& out) {
  if (t.is_ground()) return;
  if (t.is_var()) {
    if (std::none_of(out.begin(), out.end(), [&](const Term& v) { return v.var_id() == t.var_id(); })) {
      out.push_back(t);
    }
    return;
  }
  for (const Term& a : t.args()) collect_vars(a, out);
}

inline bool occurs(VarId id, const Term& t) {
  if (t.is_ground()) return false;
  if (t.is_var()) return t.var_id() == id;
  return std::any_of(t.args().begin(), t.args().end(), [&](const Term& a) { return occurs(id, a); });
}

// ---------------------------------------------------------------------------
// Atoms, clauses, programs.

class Atom {
 public:
  Atom() = default;
  explicit Atom(Term t) : term_(std::move(t)) {
    if (!term_.valid() || term_.is_var()) throw std::invalid_argument("an atom must be a compound term");
  }
  Atom(std::string predicate, std::vector<Term> args) : term_(Term::compound(std::move(predicate), std::move(args))) {}

  const std::string& predicate() const { return term_.functor(); }
  std::size_t arity() const { return term_.arity(); }
  std::span<const Term> args() const { return term_.args(); }
  const Term& arg(std::size_t i) const { return term_.arg(i); }
  const Term& as_term() const { return term_; }
  bool is_ground() const { return term_.is_ground(); }

  friend bool operator==(const Atom&, const Atom&) = default;
  friend auto operator<=>(const Atom& x, const Atom& y) { return x.term_ <=> y.term_; }

 private:
  Term term_;
};

struct Clause {
  Atom head;
  std::vector<Atom> body;

  bool is_fact() const { return body.empty(); }
  friend bool operator==(const Clause&, const Clause&) = default;
};

struct Program {
  std::vector<Clause> clauses;

  std::size_t size() const { return clauses.size(); }
  friend bool operator==(const Program&, const Program&) = default;
};

inline std::vector<Term> clause_vars(const Clause& c) {
  std::vector<Term> out;
  collect_vars(c.head.as_term(), out);
  for (const Atom& b : c.body) collect_vars(b.as_term(), out);
  return out;
}

// ---------------------------------------------------------------------------
// Substitutions.

// Idempotent finite map from variables to terms: no bound variable occurs in
// any binding's value.
class Substitution {
 public:
  struct Binding {
    Term variable;
    Term value;
  };

  Substitution() = default;

  bool empty() const { return bindings_.empty(); }
  std::size_t size() const { return bindings_.size(); }
  const std::vector<Binding>& bindings() const { return bindings_; }

  const Term* lookup(VarId id) const {
    auto it = std::lower_bound(bindings_.begin(), bindings_.end(), id,
                               [](const Binding& b, VarId v) { return b.variable.var_id() < v; });
    if (it == bindings_.end() || it->variable.var_id() != id) return nullptr;
    return &it->value;
  }
  const Term* lookup(const Term& var) const { return lookup(var.var_id()); }

  // Adds var -> value, keeping the substitution idempotent. The value must not
  // contain var.
  void bind(const Term& var, const Term& value);

  // Builds a substitution from explicit bindings; throws if the result would
  // not be idempotent or binds a variable twice.
  static Substitution from_bindings(std::vector<Binding> bindings);

  friend bool operator==(const Substitution& x, const Substitution& y) {
    if (x.size() != y.size()) return false;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (!(x.bindings_[i].variable == y.bindings_[i].variable) || !(x.bindings_[i].value == y.bindings_[i].value)) {
        return false;
      }
    }
    return true;
  }

 private:
  std::vector<Binding> bindings_;  // sorted by variable id
};

inline Term apply(const Substitution& s, const Term& t) {
  if (t.is_ground() || s.empty()) return t;
  if (t.is_var()) {
    const Term* v = s.lookup(t);
    return v ? *v : t;
  }
  std::vector<Term> args;
  args.reserve(t.arity());
  bool changed = false;
  for (const Term& a : t.args()) {
    args.push_back(apply(s, a));
    changed = changed || !args.back().same_node(a);
  }
  return changed ? Term::compound(t.functor(), std::move(args)) : t;
}

inline Atom apply(const Substitution& s, const Atom& a) { return Atom(apply(s, a.as_term())); }

inline Clause apply(const Substitution& s, const Clause& c) {
  Clause out{apply(s, c.head), {}};
  out.body.reserve(c.body.size());
  for (const Atom& b : c.body) out.body.push_back(apply(s, b));
  return out;
}

inline void Substitution::bind(const Term& var, const Term& value) {
  auto it = std::lower_bound(bindings_.begin(), bindings_.end(), var.var_id(),
                             [](const Binding& b, VarId v) { return b.variable.var_id() < v; });
  if (it != bindings_.end() && it->variable.var_id() == var.var_id()) {
    throw std::invalid_argument("variable is already bound");
  }
  const Term resolved = apply(*this, value);
  if (occurs(var.var_id(), resolved)) throw std::invalid_argument("binding would violate the occurs check");
  Substitution single;
  single.bindings_.push_back({var, resolved});
  for (Binding& b : bindings_) b.value = apply(single, b.value);
  bindings_.insert(it, {var, resolved});
}

inline Substitution Substitution::from_bindings(std::vector<Binding> bindings) {
  std::sort(bindings.begin(), bindings.end(),
            [](const Binding& x, const Binding& y) { return x.variable.var_id() < y.variable.var_id(); });
  for (std::size_t i = 0; i + 1 < bindings.size(); ++i) {
    if (bindings[i].variable.var_id() == bindings[i + 1].variable.var_id()) {
      throw std::invalid_argument("variable is bound twice");
    }
  }
  for (const Binding& b : bindings) {
    for (const Binding& other : bindings) {
      if (occurs(other.variable.var_id(), b.value)) throw std::invalid_argument("substitution is not idempotent");
    }
  }
  Substitution s;
  s.bindings_ = std::move(bindings);
  return s;
}

// compose(first, second) applied to t equals apply(second, apply(first, t)).
// Throws std::invalid_argument when the composition is not idempotent (a value
// of `second` mentions a variable bound by `first`).
inline Substitution compose(const Substitution& first, const Substitution& second) {
  std::vector<Substitution::Binding> merged;
  for (const auto& b : first.bindings()) {
    Term v = apply(second, b.value);
    if (!(v.is_var() && v.var_id() == b.variable.var_id())) merged.push_back({b.variable, v});
  }
  for (const auto& b : second.bindings()) {
    if (!first.lookup(b.variable)) merged.push_back(b);
  }
  return Substitution::from_bindings(std::move(merged));
}

// ---------------------------------------------------------------------------
// Unification (Robinson, occurs check always on).

namespace detail {

class Unifier {
 public:
  bool unify(const Term& x, const Term& y) {
    std::vector<std::pair<Term, Term>> stack{{x, y}};
    while (!stack.empty()) {
      auto [a, b] = std::move(stack.back());
      stack.pop_back();
      a = deref(a);
      b = deref(b);
      if (a.same_node(b)) continue;
      if (a.is_var() && b.is_var() && a.var_id() == b.var_id()) continue;
      if (a.is_var()) {
        if (!bind(a, b)) return false;
      } else if (b.is_var()) {
        if (!bind(b, a)) return false;
      } else {
        if (a.arity() != b.arity() || a.functor() != b.functor()) return false;
        if (a.is_ground() && b.is_ground()) {
          if (!(a == b)) return false;
          continue;
        }
        for (std::size_t i = 0; i < a.arity(); ++i) stack.emplace_back(a.arg(i), b.arg(i));
      }
    }
    return true;
  }

  Substitution result() const {
    std::vector<Substitution::Binding> resolved;
    resolved.reserve(order_.size());
    for (const Term& v : order_) resolved.push_back({v, resolve(v)});
    return Substitution::from_bindings(std::move(resolved));
  }

 private:
  Term deref(Term t) const {
    while (t.is_var()) {
      auto it = bound_.find(t.var_id());
      if (it == bound_.end()) break;
      t = it->second;
    }
    return t;
  }

  bool occurs_deref(VarId id, const Term& t) const {
    if (t.is_ground()) return false;
    if (t.is_var()) {
      Term d = deref(t);
      if (d.is_var()) return d.var_id() == id;
      return occurs_deref(id, d);
    }
    return std::any_of(t.args().begin(), t.args().end(), [&](const Term& a) { return occurs_deref(id, a); });
  }

  bool bind(const Term& var, const Term& value) {
    if (occurs_deref(var.var_id(), value)) return false;
    bound_.emplace(var.var_id(), value);
    order_.push_back(var);
    return true;
  }

  Term resolve(const Term& t) const {
    if (t.is_ground()) return t;
    if (t.is_var()) {
      Term d = deref(t);
      return d.is_var() ? d : resolve(d);
    }
    std::vector<Term> args;
    args.reserve(t.arity());
    for (const Term& a : t.args()) args.push_back(resolve(a));
    return Term::compound(t.functor(), std::move(args));
  }

  std::unordered_map<VarId, Term> bound_;
  std::vector<Term> order_;
};

}  // namespace detail

// Most general unifier, or nullopt when the terms have no common instance.
inline std::optional<Substitution> unify(const Term& x, const Term& y) {
  detail::Unifier u;
  if (!u.unify(x, y)) return std::nullopt;
  return u.result();
}

inline std::optional<Substitution> unify(const Atom& x, const Atom& y) { return unify(x.as_term(), y.as_term()); }

// One-way matching: a substitution θ over the variables of `pattern` with
// apply(θ, pattern) == target. Variables of `target` are treated as constants.
inline std::optional<Substitution> match(const Term& pattern, const Term& target) {
  std::unordered_map<VarId, std::pair<Term, Term>> seen;
  std::vector<std::pair<Term, Term>> stack{{pattern, target}};
  while (!stack.empty()) {
    auto [p, t] = std::move(stack.back());
    stack.pop_back();
    if (p.is_var()) {
      auto [it, inserted] = seen.try_emplace(p.var_id(), p, t);
      if (!inserted && !(it->second.second == t)) return std::nullopt;
      continue;
    }
    if (p.is_ground()) {
      if (!(p == t)) return std::nullopt;
      continue;
    }
    if (t.is_var() || t.arity() != p.arity() || t.functor() != p.functor()) return std::nullopt;
    for (std::size_t i = 0; i < p.arity(); ++i) stack.emplace_back(p.arg(i), t.arg(i));
  }
  std::vector<Substitution::Binding> bindings;
  for (auto& [id, vt] : seen) {
    if (vt.second.is_var() && vt.second.var_id() == id) continue;
    bindings.push_back({vt.first, vt.second});
  }
  // Only possible when pattern and target share variables.
  for (const auto& b : bindings) {
    for (const auto& other : bindings) {
      if (occurs(other.variable.var_id(), b.value)) return std::nullopt;
    }
  }
  return Substitution::from_bindings(std::move(bindings));
}

inline bool is_instance_of(const Term& instance, const Term& general) { return match(general, instance).has_value(); }

// Renames every variable of the clause to a fresh one, keeping source names.
inline Clause rename_apart(const Clause& c) {
  Substitution s;
  for (const Term& v : clause_vars(c)) s.bind(v, Term::fresh_var(v.var_name()));
  return apply(s, c);
}

inline Term rename_apart(const Term& t) {
  std::vector<Term> vars;
  collect_vars(t, vars);
  Substitution s;
  for (const Term& v : vars) s.bind(v, Term::fresh_var(v.var_name()));
  return apply(s, t);
}

}  // namespace dq
