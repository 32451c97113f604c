#pragma once

#include <span>
#include <vector>

#include "ua/commutator.hpp"
#include "ua/congruence.hpp"
#include "ua/report.hpp"

namespace ua {

// An algebra B with a congruence beta, the quotient Q = B/beta and a lifting Q -> B.
struct Extension {
  FiniteAlgebra B;
  FiniteAlgebra Q;
  std::vector<int> pi;    // B -> Q
  Congruence beta;
  std::vector<int> lift;  // Q -> B, pi(lift(q)) = q
  Table m;                // ternary operation on B used by traces; empty when unknown

  /// r = lift o pi
  std::vector<int> trace() const;
};

/// Q is B/beta with blocks numbered by least member; the default lifting picks least members
Extension make_extension(const FiniteAlgebra& B, const Congruence& beta, std::vector<int> lift = {},
                         Table m = {});
/// parses "q:a,q:a,..." into a lifting of ext; unlisted blocks keep their default
std::vector<int> parse_lifting(const Extension& ext, const std::string& text);

// Affine datum (Q, A^{alpha,tau}, *): the carrier A carries only m; the tau-structure lives on
// A(alpha)/Delta through f_delta and the unary action tables.
struct AffineDatum {
  FiniteAlgebra Q;        // signature tau
  Table q_m;              // m on Q
  FiniteAlgebra A;        // carrier with the single ternary symbol m
  Congruence alpha;
  DeltaQuotient dq;       // A(alpha)/Delta_{alpha alpha} computed from m
  std::vector<int> rho;   // pair index -> Q
  std::vector<int> lift;  // Q -> A
  // per symbol: class x Q^{ar-1}; the remaining arguments are diagonal classes, indexed by
  // the Q element whose block they hold
  std::vector<Table> f_delta;
  // action[f][i]: Q^{i} x class x Q^{ar-1-i}, present for ar f >= 2
  std::vector<std::vector<Table>> action;

  // derived by finalize()
  std::vector<int> class_fiber;               // class -> Q
  std::vector<std::vector<int>> fiber;        // Q -> classes, ascending
  std::vector<int> zero_class;                // Q -> delta(l(q))

  void finalize();

  int nq() const { return Q.size(); }
  int nc() const { return dq.num_classes(); }
  const Signature& signature() const { return Q.signature(); }
  int arity(int f) const { return Q.arity(f); }

  int m3(int x, int y, int z) const { return dq.algebra.table(0)[(static_cast<std::size_t>(x) * nc() + y) * nc() + z]; }
  int zero(int q) const { return zero_class[q]; }
  /// delta(a) for a in A
  int delta_of(int a) const { return dq.diag(a); }
  int block_of(int a) const { return class_fiber[dq.diag(a)]; }

  /// x +_u y in the fiber over q, no fiber check
  int add(int q, int x, int y) const { return m3(x, zero(q), y); }
  int sub(int q, int x, int y) const { return m3(x, y, zero(q)); }
  int neg(int q, int x) const { return m3(zero(q), x, zero(q)); }
  /// x +_u y for u in A; throws std::invalid_argument across alpha-hat blocks
  int plus_u(int x, int u, int y) const;

  std::size_t f_delta_index(int f, int cls, std::span<const int> rest) const;
  std::size_t action_index(int f, int pos, std::span<const int> qs, int cls) const;
  int fdelta(int f, int cls, std::span<const int> rest) const { return f_delta[f][f_delta_index(f, cls, rest)]; }
  /// a(f, pos+1) with the class at 0-based position pos; qs[pos] is ignored
  int act(int f, int pos, std::span<const int> qs, int cls) const {
    return action[f][pos][action_index(f, pos, qs, cls)];
  }
  int q_apply(int f, std::span<const int> qs) const { return Q.apply(f, qs); }
};

// Per-symbol tables Q^{ar f} -> classes.
struct TwoCocycle {
  std::vector<Table> tables;
  bool operator==(const TwoCocycle&) const = default;
  bool operator<(const TwoCocycle& o) const { return tables < o.tables; }
};

struct Extraction {
  AffineDatum datum;
  TwoCocycle cocycle;
  std::vector<int> phi;  // B -> classes, x -> [r(x) // x]
};

/// datum and cocycle of an extension with abelian beta; m is the weak-difference term
Extraction extract_datum(const Extension& ext, const Term& m);
Extraction extract_datum(const Extension& ext, const Table& m);

/// D1-D4, AD1, AD2 and the lifting conditions, one report each
std::vector<Report> validate_datum(const AffineDatum& d);
bool all_hold(const std::vector<Report>& reports);

enum class CompatMode { weak, full };

/// the unary action is compatible with each equation of sigma
Report check_action_compatible(const AffineDatum& d, const std::vector<Equation>& sigma,
                               CompatMode mode = CompatMode::weak);

/// t evaluated in the semidirect product at the classes env, as a sum of one term per leaf
int semidirect_expansion(const AffineDatum& d, const Term& t, std::span<const int> env);

}  // namespace ua
