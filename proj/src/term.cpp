#include <cctype>

#include "ua/algebra.hpp"

namespace ua {

Term Term::variable(int i) {
  Term t;
  t.var = i;
  return t;
}

Term Term::apply(std::string op, std::vector<Term> args) {
  Term t;
  t.op = std::move(op);
  t.args = std::move(args);
  return t;
}

int Term::num_vars() const {
  if (is_variable()) return var + 1;
  int m = 0;
  for (const auto& a : args) m = std::max(m, a.num_vars());
  return m;
}

int Term::depth() const {
  if (is_variable()) return 0;
  int d = 0;
  for (const auto& a : args) d = std::max(d, a.depth());
  return d + 1;
}

int Term::leaf_count() const {
  if (is_variable()) return 1;
  int c = 0;
  for (const auto& a : args) c += a.leaf_count();
  return c;
}

std::string Term::str() const {
  if (is_variable()) return "x" + std::to_string(var);
  if (args.empty()) return op;
  std::string s = "(" + op;
  for (const auto& a : args) s += " " + a.str();
  return s + ")";
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  Term parse() {
    Term t = term();
    skip();
    if (pos_ != s_.size()) fail("trailing characters");
    return t;
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw InputError("term parse error at offset " + std::to_string(pos_) + ": " + what +
                     " in '" + std::string(s_) + "'");
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  std::string ident() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size()) {
      char c = s_[pos_];
      if (std::isspace(static_cast<unsigned char>(c)) || c == '(' || c == ')') break;
      ++pos_;
    }
    if (start == pos_) fail("expected a symbol");
    return std::string(s_.substr(start, pos_ - start));
  }

  static bool is_var_name(const std::string& id) {
    if (id.size() < 2 || id[0] != 'x') return false;
    for (std::size_t i = 1; i < id.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(id[i]))) return false;
    return id.size() < 9;
  }

  Term term() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    if (s_[pos_] == ')') fail("unexpected ')'");
    if (s_[pos_] == '(') {
      ++pos_;
      std::string op = ident();
      if (is_var_name(op)) fail("variable in operator position");
      std::vector<Term> args;
      while (true) {
        skip();
        if (pos_ >= s_.size()) fail("missing ')'");
        if (s_[pos_] == ')') {
          ++pos_;
          break;
        }
        args.push_back(term());
      }
      return Term::apply(std::move(op), std::move(args));
    }
    std::string id = ident();
    if (is_var_name(id)) return Term::variable(std::stoi(id.substr(1)));
    return Term::apply(std::move(id));
  }
};

}  // namespace

Term parse_term(std::string_view text) { return Parser(text).parse(); }

void check_term(const Signature& sig, const Term& t) {
  if (t.is_variable()) return;
  int op = sig.index_of(t.op);
  if (static_cast<int>(t.args.size()) != sig[op].arity)
    throw InputError("symbol " + t.op + " has arity " + std::to_string(sig[op].arity) + " but is applied to " +
                     std::to_string(t.args.size()) + " arguments in " + t.str());
  for (const auto& a : t.args) check_term(sig, a);
}

int eval_term(const FiniteAlgebra& alg, const Term& t, std::span<const int> env) {
  if (t.is_variable()) {
    if (t.var >= static_cast<int>(env.size())) throw InputError("unbound variable in " + t.str());
    return env[t.var];
  }
  int op = alg.op_index(t.op);
  if (static_cast<int>(t.args.size()) != alg.arity(op)) check_term(alg.signature(), t);
  int vals[16];
  if (t.args.size() > 16) throw InputError("arity above 16 unsupported");
  for (std::size_t i = 0; i < t.args.size(); ++i) vals[i] = eval_term(alg, t.args[i], env);
  return alg.apply(op, std::span<const int>(vals, t.args.size()));
}

Table term_table(const FiniteAlgebra& alg, const Term& t, int arity) {
  check_term(alg.signature(), t);
  if (arity < t.num_vars()) throw InputError("term " + t.str() + " needs more variables");
  Table out(checked_pow(alg.size(), arity));
  std::size_t i = 0;
  for_each_tuple(alg.size(), arity, [&](const std::vector<int>& env) { out[i++] = eval_term(alg, t, env); });
  return out;
}

namespace {

Term relabel(const Term& t, std::vector<int>& sigma) {
  if (t.is_variable()) {
    sigma.push_back(t.var);
    return Term::variable(static_cast<int>(sigma.size()) - 1);
  }
  std::vector<Term> args;
  for (const auto& a : t.args) args.push_back(relabel(a, sigma));
  return Term::apply(t.op, std::move(args));
}

}  // namespace

Linearized linearize(const Term& t) {
  Linearized l;
  l.term = relabel(t, l.sigma);
  return l;
}

}  // namespace ua
