#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ua/partition.hpp"

namespace ua {

/// malformed input: maps to CLI exit code 2
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// an enumeration exceeded its node or size budget: CLI exit code 3
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Symbol {
  std::string name;
  int arity = 0;
  bool operator==(const Symbol&) const = default;
};

class Signature {
 public:
  Signature() = default;
  explicit Signature(std::vector<Symbol> symbols);

  const std::vector<Symbol>& symbols() const { return symbols_; }
  int size() const { return static_cast<int>(symbols_.size()); }
  const Symbol& operator[](int i) const { return symbols_[i]; }
  std::optional<int> find(std::string_view name) const;
  /// throws InputError for an unknown symbol
  int index_of(std::string_view name) const;
  int max_arity() const;
  bool operator==(const Signature&) const = default;

 private:
  std::vector<Symbol> symbols_;
};

using Table = std::vector<int>;

/// n^k, throwing CapExceeded above 2^40
std::size_t checked_pow(std::size_t n, int k);

/// base-n index of a tuple, leftmost coordinate most significant
inline std::size_t encode_tuple(std::span<const int> digits, int base) {
  std::size_t code = 0;
  for (int d : digits) code = code * base + d;
  return code;
}

inline void decode_tuple(std::size_t code, int base, std::span<int> out) {
  for (std::size_t i = out.size(); i-- > 0;) {
    out[i] = static_cast<int>(code % base);
    code /= base;
  }
}

/// calls f(const std::vector<int>&) for every tuple in {0..base-1}^len in table order
template <class F>
void for_each_tuple(int base, int len, F&& f) {
  std::vector<int> t(len, 0);
  if (base <= 0 && len > 0) return;
  while (true) {
    f(static_cast<const std::vector<int>&>(t));
    int i = len - 1;
    while (i >= 0 && ++t[i] == base) t[i--] = 0;
    if (i < 0) return;
  }
}

// Universe {0..n-1} with one dense table per symbol.
class FiniteAlgebra {
 public:
  FiniteAlgebra() = default;
  FiniteAlgebra(std::string name, int size, Signature sig, std::vector<Table> tables);

  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }
  int size() const { return n_; }
  const Signature& signature() const { return sig_; }
  int num_ops() const { return sig_.size(); }
  int arity(int op) const { return sig_[op].arity; }
  const Table& table(int op) const { return tables_[op]; }
  const std::vector<Table>& tables() const { return tables_; }
  int op_index(std::string_view name) const { return sig_.index_of(name); }

  int apply(int op, std::span<const int> args) const {
    return tables_[op][encode_tuple(args, n_)];
  }
  int apply(int op, std::initializer_list<int> args) const {
    return apply(op, std::span<const int>(args.begin(), args.size()));
  }

  bool same_tables(const FiniteAlgebra& other) const {
    return n_ == other.n_ && sig_ == other.sig_ && tables_ == other.tables_;
  }

 private:
  std::string name_;
  int n_ = 0;
  Signature sig_;
  std::vector<Table> tables_;
};

// S-expression terms over variables x0, x1, ...
struct Term {
  int var = -1;
  std::string op;
  std::vector<Term> args;

  static Term variable(int i);
  static Term apply(std::string op, std::vector<Term> args = {});

  bool is_variable() const { return var >= 0; }
  /// one more than the largest variable index, 0 for ground terms
  int num_vars() const;
  int depth() const;
  int leaf_count() const;
  std::string str() const;
  bool operator==(const Term&) const = default;
};

Term parse_term(std::string_view text);
/// throws InputError if t uses a symbol missing from sig or with the wrong arity
void check_term(const Signature& sig, const Term& t);
int eval_term(const FiniteAlgebra& alg, const Term& t, std::span<const int> env);
/// table of the term operation over alg^k, k = max(t.num_vars(), min_arity)
Table term_table(const FiniteAlgebra& alg, const Term& t, int arity);

struct Linearized {
  Term term;               // every variable occurs once, numbered left to right
  std::vector<int> sigma;  // sigma[i] = variable of the original term at leaf i
};
Linearized linearize(const Term& t);

struct Equation {
  Term lhs;
  Term rhs;
  int num_vars() const { return std::max(lhs.num_vars(), rhs.num_vars()); }
  std::string str() const { return lhs.str() + " = " + rhs.str(); }
};

/// first assignment violating eq, if any
std::optional<std::vector<int>> find_counterexample(const FiniteAlgebra& alg, const Equation& eq);

std::vector<int> subalgebra_generate(const FiniteAlgebra& alg, std::span<const int> gens);

/// closure of k-tuples under coordinatewise operations; tuples coded base n
std::vector<std::uint32_t> generate_tuples(const FiniteAlgebra& alg, int k,
                                           const std::vector<std::uint32_t>& generators,
                                           std::size_t cap = std::size_t{1} << 26);

FiniteAlgebra power_algebra(const FiniteAlgebra& alg, int k);
/// universe b*|b'| + b' for (b, b')
FiniteAlgebra direct_product(const FiniteAlgebra& a, const FiniteAlgebra& b, std::string name = {});

/// null when theta is compatible, else a description of a failing instance
std::optional<std::string> compatibility_failure(const FiniteAlgebra& alg, const Partition& theta);

struct Quotient {
  FiniteAlgebra algebra;
  std::vector<int> map;   // element -> block index
  std::vector<int> reps;  // block index -> least member
};
/// throws InputError when theta is not a congruence
Quotient quotient_algebra(const FiniteAlgebra& alg, const Partition& theta);

bool is_homomorphism(const FiniteAlgebra& a, const FiniteAlgebra& b, std::span<const int> map);

/// an isomorphism a -> b, or nullopt after exhausting the search space
std::optional<std::vector<int>> find_isomorphism(const FiniteAlgebra& a, const FiniteAlgebra& b,
                                                 std::uint64_t seed = 0);

}  // namespace ua
