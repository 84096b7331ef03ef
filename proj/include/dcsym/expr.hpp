#pragma once

#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "dcsym/rational.hpp"

namespace dcsym {

/// Raised when an expression leaves the normalizable fragment. Callers that
/// need a tri-state verdict catch this and report Unknown instead of a bogus
/// Zero/NonZero answer.
struct UnsupportedConstruct : std::runtime_error {
  explicit UnsupportedConstruct(const std::string& what) : std::runtime_error(what) {}
};

struct IncompleteBinding : std::runtime_error {
  explicit IncompleteBinding(const std::string& what) : std::runtime_error(what) {}
};

/// Identifies one of the base variables t, x, u or a jet variable u_{t..x..}.
/// t and x never carry derivative indices.
struct VarId {
  enum class Base : uint8_t { T = 0, X = 1, U = 2 };
  Base base = Base::T;
  int dt = 0;  // number of t-derivatives (base U only)
  int dx = 0;  // number of x-derivatives (base U only)

  static VarId t() { return {Base::T, 0, 0}; }
  static VarId x() { return {Base::X, 0, 0}; }
  static VarId u(int dt = 0, int dx = 0) { return {Base::U, dt, dx}; }

  int order() const { return dt + dx; }
  bool is_jet() const { return base == Base::U && order() > 0; }

  auto tie() const { return std::tuple(static_cast<int>(base), dt, dx); }
  bool operator==(const VarId& o) const { return tie() == o.tie(); }
  bool operator<(const VarId& o) const { return tie() < o.tie(); }

  std::string str() const;
};

enum class Kind : uint8_t {
  Rational,
  Parameter,
  Variable,
  Opaque,     // named function atom with derivative multi-index, e.g. f_x, A_u
  Sign,       // sign(v) on a signed chart; squares to 1, derivative 0
  Abs,        // |arg|; must be resolved against the chart before normalization
  Sum,
  Product,
  Pow,        // kids = {base, exponent}
  Exp,
  Ln,
  Antideriv,  // kids = {integrand}; antiderivative in x, fixed up to a constant
};

struct ExprNode;
using Expr = std::shared_ptr<const ExprNode>;

struct ExprNode {
  Kind kind;
  Rational rat;            // Kind::Rational
  std::string name;        // Parameter / Opaque function name / Sign variable name
  VarId var;               // Kind::Variable
  int dt = 0, dx = 0, du = 0;  // Opaque derivative multi-index
  std::vector<Expr> kids;
};

// ---- constructors ---------------------------------------------------------

Expr make_rat(const Rational& q);
Expr make_rat(long n, long d = 1);
Expr make_param(const std::string& name);
Expr make_var(VarId v);
Expr make_opaque(const std::string& fn, int dt = 0, int dx = 0, int du = 0);
Expr make_sign(const std::string& varname);
Expr make_abs(const Expr& arg);
Expr make_sum(std::vector<Expr> kids);
Expr make_prod(std::vector<Expr> kids);
Expr make_pow(const Expr& base, const Expr& expo);
Expr make_exp(const Expr& arg);
Expr make_ln(const Expr& arg);
Expr make_antideriv(const Expr& integrand);

inline Expr operator+(const Expr& a, const Expr& b) { return make_sum({a, b}); }
inline Expr operator*(const Expr& a, const Expr& b) { return make_prod({a, b}); }
inline Expr operator-(const Expr& a) { return make_prod({make_rat(-1), a}); }
inline Expr operator-(const Expr& a, const Expr& b) { return make_sum({a, -b}); }
inline Expr operator/(const Expr& a, const Expr& b) {
  return make_prod({a, make_pow(b, make_rat(-1))});
}

Expr zero();
Expr one();

// Common leaves.
inline Expr vt() { return make_var(VarId::t()); }
inline Expr vx() { return make_var(VarId::x()); }
inline Expr vu() { return make_var(VarId::u()); }

/// Total order on expression trees (structural). Used for canonical sorting.
int cmp(const Expr& a, const Expr& b);
inline bool expr_eq(const Expr& a, const Expr& b) { return cmp(a, b) == 0; }

bool is_rat(const Expr& e, long value);
bool is_zero_node(const Expr& e);

/// Collects every parameter name occurring in e.
void collect_params(const Expr& e, std::set<std::string>& out);
/// Collects every opaque function name occurring in e.
void collect_opaques(const Expr& e, std::set<std::string>& out);
/// True if the variable v occurs in e (as a Variable leaf).
bool contains_var(const Expr& e, VarId v);
/// True if any Antideriv node occurs in e.
bool contains_antideriv(const Expr& e);

/// Debug/raw printer (full parentheses). The polished printer lives in parse.hpp.
std::string debug_str(const Expr& e);

// ---- session context ------------------------------------------------------

enum class Chart : uint8_t { Positive, Signed };

/// Per-task context: which chart is active, positivity assumptions, and the
/// dependency sets of declared opaque functions. Not shared across threads.
struct Context {
  Chart chart = Chart::Positive;
  /// Extra expressions assumed positive on the working chart (normalized on use).
  std::vector<Expr> positive_assumptions;
  /// fn name -> dependency set over {t,x,u} as bitmask: 1=t, 2=x, 4=u.
  std::map<std::string, int> opaque_deps;

  static constexpr int DEP_T = 1, DEP_X = 2, DEP_U = 4;

  void declare(const std::string& fn, bool on_t, bool on_x, bool on_u) {
    opaque_deps[fn] = (on_t ? DEP_T : 0) | (on_x ? DEP_X : 0) | (on_u ? DEP_U : 0);
  }
  int deps_of(const std::string& fn) const {
    auto it = opaque_deps.find(fn);
    if (it == opaque_deps.end())
      throw UnsupportedConstruct("undeclared opaque function: " + fn);
    return it->second;
  }
  bool declared(const std::string& fn) const { return opaque_deps.count(fn) != 0; }

  Context with_assumption(const Expr& e) const {
    Context c = *this;
    c.positive_assumptions.push_back(e);
    return c;
  }
};

}  // namespace dcsym
