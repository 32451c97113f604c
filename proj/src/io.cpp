#include "ua/io.hpp"

#include <fstream>
#include <sstream>

#include "ua/groups.hpp"

namespace ua {

namespace {

[[noreturn]] void field_error(const std::string& source, const std::string& field, const std::string& msg) {
  throw InputError(source + ": " + field + ": " + msg);
}

const Json& member(const Json& j, const char* key, const std::string& source, const std::string& path) {
  if (!j.is_object()) field_error(source, path.empty() ? "<root>" : path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) field_error(source, path.empty() ? key : path + "." + key, "missing");
  return *it;
}

int as_int(const Json& j, const std::string& source, const std::string& field, int lo, int hi) {
  if (!j.is_number_integer()) field_error(source, field, "expected an integer");
  long long v = j.get<long long>();
  if (v < lo || v > hi)
    field_error(source, field, "value " + std::to_string(v) + " outside " + std::to_string(lo) + ".." + std::to_string(hi));
  return static_cast<int>(v);
}

std::vector<int> int_array(const Json& j, const std::string& source, const std::string& field, std::size_t len,
                           int lo, int hi) {
  if (!j.is_array()) field_error(source, field, "expected an array");
  if (j.size() != len) field_error(source, field, "expected " + std::to_string(len) + " entries, got " + std::to_string(j.size()));
  std::vector<int> out;
  for (std::size_t i = 0; i < len; ++i) out.push_back(as_int(j[i], source, field + "[" + std::to_string(i) + "]", lo, hi));
  return out;
}

Json nested(const Table& t, int base, int arity, std::size_t offset = 0) {
  if (arity == 0) return t[offset];
  Json out = Json::array();
  const std::size_t stride = checked_pow(base, arity - 1);
  for (int i = 0; i < base; ++i) out.push_back(nested(t, base, arity - 1, offset + i * stride));
  return out;
}

void unnest(const Json& j, int base, int arity, int bound, const std::string& source, const std::string& field,
            Table& out) {
  if (arity == 0) {
    out.push_back(as_int(j, source, field, 0, bound - 1));
    return;
  }
  if (!j.is_array() || static_cast<int>(j.size()) != base)
    field_error(source, field, "expected an array of " + std::to_string(base) + " entries");
  for (int i = 0; i < base; ++i) unnest(j[i], base, arity - 1, bound, source, field + "[" + std::to_string(i) + "]", out);
}

Json blocks_json(const Partition& p, bool skip_singletons) {
  Json out = Json::array();
  for (const auto& b : p.blocks())
    if (!skip_singletons || b.size() > 1) out.push_back(b);
  return out;
}

Partition blocks_from_json(const Json& j, int n, const std::string& source, const std::string& field) {
  if (!j.is_array()) field_error(source, field, "expected an array of blocks");
  std::vector<std::vector<int>> blocks;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string f = field + "[" + std::to_string(i) + "]";
    if (!j[i].is_array()) field_error(source, f, "expected an array");
    std::vector<int> b;
    for (std::size_t k = 0; k < j[i].size(); ++k) b.push_back(as_int(j[i][k], source, f + "[" + std::to_string(k) + "]", 0, n - 1));
    blocks.push_back(std::move(b));
  }
  try {
    return Partition::from_blocks(n, blocks);
  } catch (const std::invalid_argument& e) {
    field_error(source, field, e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path + ": cannot open");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

Json parse_json(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::string msg = e.what();
    auto pos = msg.find("syntax error");
    throw InputError(source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " +
                     (pos == std::string::npos ? msg : msg.substr(pos)));
  }
}

Json read_json_file(const std::string& path) { return parse_json(read_file(path), path); }

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError(path + ": cannot write");
  out << text;
}

Json algebra_to_json(const FiniteAlgebra& alg) {
  Json sig = Json::array();
  Json ops = Json::object();
  for (int f = 0; f < alg.num_ops(); ++f) {
    sig.push_back(Json{{"symbol", alg.signature()[f].name}, {"arity", alg.arity(f)}});
    ops[alg.signature()[f].name] = nested(alg.table(f), alg.size(), alg.arity(f));
  }
  return Json{{"name", alg.name()}, {"size", alg.size()}, {"signature", sig}, {"operations", ops}};
}

FiniteAlgebra algebra_from_json(const Json& j, const std::string& source) {
  std::string name;
  if (j.is_object() && j.contains("name")) {
    if (!j["name"].is_string()) field_error(source, "name", "expected a string");
    name = j["name"].get<std::string>();
  }
  const int n = as_int(member(j, "size", source, ""), source, "size", 1, 1 << 16);
  const Json& sj = member(j, "signature", source, "");
  if (!sj.is_array()) field_error(source, "signature", "expected an array");
  std::vector<Symbol> syms;
  for (std::size_t i = 0; i < sj.size(); ++i) {
    const std::string f = "signature[" + std::to_string(i) + "]";
    const Json& s = member(sj[i], "symbol", source, f);
    if (!s.is_string()) field_error(source, f + ".symbol", "expected a string");
    int ar = as_int(member(sj[i], "arity", source, f), source, f + ".arity", 0, 16);
    for (const auto& o : syms)
      if (o.name == s.get<std::string>()) field_error(source, f + ".symbol", "duplicate symbol " + o.name);
    syms.push_back({s.get<std::string>(), ar});
  }
  const Json& oj = member(j, "operations", source, "");
  std::vector<Table> tables;
  for (const auto& s : syms) {
    Table t;
    unnest(member(oj, s.name.c_str(), source, "operations"), n, s.arity, n, source, "operations." + s.name, t);
    tables.push_back(std::move(t));
  }
  if (oj.is_object())
    for (auto it = oj.begin(); it != oj.end(); ++it) {
      bool known = false;
      for (const auto& s : syms) known = known || s.name == it.key();
      if (!known) field_error(source, "operations." + it.key(), "symbol not in the signature");
    }
  return FiniteAlgebra(name, n, Signature(syms), std::move(tables));
}

FiniteAlgebra load_algebra(const std::string& path) { return algebra_from_json(read_json_file(path), path); }

Json congruence_to_json(const FiniteAlgebra& alg, const Congruence& theta) {
  return Json{{"algebra", alg.name()}, {"blocks", blocks_json(theta, false)}};
}

Congruence congruence_from_json(const Json& j, const FiniteAlgebra& alg, const std::string& source) {
  Partition p = blocks_from_json(member(j, "blocks", source, ""), alg.size(), source, "blocks");
  if (auto why = compatibility_failure(alg, p)) field_error(source, "blocks", "not a congruence: " + *why);
  return p;
}

Congruence load_congruence(const std::string& path, const FiniteAlgebra& alg) {
  return congruence_from_json(read_json_file(path), alg, path);
}

std::vector<Equation> equations_from_json(const Json& j, const std::string& source) {
  if (j.is_string()) {
    if (j == "@groups") return group_axioms();
    if (j == "@abelian-groups") return abelian_group_axioms();
    field_error(source, "<root>", "unknown builtin equation set " + j.get<std::string>());
  }
  if (!j.is_array()) field_error(source, "<root>", "expected an array of [lhs, rhs] pairs");
  std::vector<Equation> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string f = "[" + std::to_string(i) + "]";
    if (!j[i].is_array() || j[i].size() != 2 || !j[i][0].is_string() || !j[i][1].is_string())
      field_error(source, f, "expected two term strings");
    try {
      out.push_back({parse_term(j[i][0].get<std::string>()), parse_term(j[i][1].get<std::string>())});
    } catch (const std::exception& e) {
      field_error(source, f, e.what());
    }
  }
  return out;
}

Json equations_to_json(const std::vector<Equation>& sigma) {
  Json out = Json::array();
  for (const auto& e : sigma) out.push_back({e.lhs.str(), e.rhs.str()});
  return out;
}

std::vector<Equation> load_equations(const std::string& path) {
  return equations_from_json(read_json_file(path), path);
}

Json datum_to_json(const AffineDatum& d) {
  Json fd = Json::object(), act = Json::object();
  for (int f = 0; f < d.Q.num_ops(); ++f) {
    const std::string& s = d.signature()[f].name;
    fd[s] = d.f_delta[f];
    for (std::size_t i = 0; i < d.action[f].size(); ++i) act[s + ":" + std::to_string(i + 1)] = d.action[f][i];
  }
  return Json{{"Q", algebra_to_json(d.Q)},
              {"A", algebra_to_json(d.A)},
              {"alpha", blocks_json(d.alpha, false)},
              {"q_m", nested(d.q_m, d.nq(), 3)},
              {"rho", d.rho},
              {"lift", d.lift},
              {"classes", d.nc()},
              {"f_delta", fd},
              {"action", act}};
}

AffineDatum datum_from_json(const Json& j, const std::string& source) {
  AffineDatum d;
  d.Q = algebra_from_json(member(j, "Q", source, ""), source + " (Q)");
  d.A = algebra_from_json(member(j, "A", source, ""), source + " (A)");
  if (d.A.num_ops() != 1 || d.A.arity(0) != 3) field_error(source, "A.signature", "expected the single ternary symbol m");
  const int n = d.A.size(), nq = d.Q.size();
  d.alpha = blocks_from_json(member(j, "alpha", source, ""), n, source, "alpha");
  if (auto why = compatibility_failure(d.A, d.alpha)) field_error(source, "alpha", "not compatible with m: " + *why);
  unnest(member(j, "q_m", source, ""), nq, 3, nq, source, "q_m", d.q_m);
  d.dq = delta_quotient(d.A, d.alpha, d.alpha);
  const int nc = d.dq.num_classes();
  d.rho = int_array(member(j, "rho", source, ""), source, "rho", d.dq.pa.size(), 0, nq - 1);
  d.lift = int_array(member(j, "lift", source, ""), source, "lift", nq, 0, n - 1);
  const Json& fd = member(j, "f_delta", source, "");
  const Json& act = member(j, "action", source, "");
  d.f_delta.resize(d.Q.num_ops());
  d.action.assign(d.Q.num_ops(), {});
  for (int f = 0; f < d.Q.num_ops(); ++f) {
    const std::string& s = d.signature()[f].name;
    const int ar = d.arity(f);
    const std::size_t len = ar == 0 ? 1 : nc * checked_pow(nq, ar - 1);
    Table t;
    for (int v : int_array(member(fd, s.c_str(), source, "f_delta"), source, "f_delta." + s, len, 0, nc - 1)) t.push_back(v);
    d.f_delta[f] = std::move(t);
    if (ar < 2) continue;
    for (int i = 0; i < ar; ++i) {
      const std::string key = s + ":" + std::to_string(i + 1);
      Table a;
      for (int v : int_array(member(act, key.c_str(), source, "action"), source, "action." + key, len, 0, nc - 1))
        a.push_back(v);
      d.action[f].push_back(std::move(a));
    }
  }
  for (int q = 0; q < nq; ++q)
    if (d.rho[d.dq.pa.at(d.lift[q], d.lift[q])] != q) field_error(source, "lift", "rho(delta(lift(q))) != q for q = " + std::to_string(q));
  d.finalize();
  return d;
}

AffineDatum load_datum(const std::string& path) { return datum_from_json(read_json_file(path), path); }

Json cocycle_to_json(const AffineDatum& d, const TwoCocycle& T, const std::string& datum_name) {
  Json tables = Json::object();
  for (int f = 0; f < d.Q.num_ops(); ++f) tables[d.signature()[f].name] = nested(T.tables[f], d.nq(), d.arity(f));
  return Json{{"datum", datum_name}, {"tables", tables}};
}

TwoCocycle cocycle_from_json(const Json& j, const AffineDatum& d, const std::string& source) {
  const Json& tj = member(j, "tables", source, "");
  TwoCocycle T;
  for (int f = 0; f < d.Q.num_ops(); ++f) {
    const std::string& s = d.signature()[f].name;
    Table t;
    unnest(member(tj, s.c_str(), source, "tables"), d.nq(), d.arity(f), d.nc(), source, "tables." + s, t);
    T.tables.push_back(std::move(t));
  }
  return T;
}

TwoCocycle load_cocycle(const std::string& path, const AffineDatum& d) {
  return cocycle_from_json(read_json_file(path), d, path);
}

std::string group_name(const std::vector<int>& factors) {
  if (factors.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < factors.size(); ++i) out += (i ? " x Z/" : "Z/") + std::to_string(factors[i]);
  return out;
}

Json cohomology_to_json(const AffineDatum& d, const CohomologyResult& r) {
  Json classes = Json::array();
  for (std::size_t c = 0; c < r.reps.size(); ++c)
    classes.push_back(Json{{"representative", cocycle_to_json(d, r.z2.elements[r.reps[c]])["tables"]},
                           {"extension_iso_type", r.types[c]},
                           {"split", static_cast<int>(c) == r.split_class}});
  return Json{{"invariant_factors", r.order() ? Json(r.invariant_factors()) : Json(nullptr)},
              {"order", r.order()},
              {"classes", classes},
              {"Z2_order", r.z2.elements.size()},
              {"B2_order", r.b2.b2.elements.size()}};
}

std::string cohomology_summary(const CohomologyResult& r) {
  if (r.order() == 0) return "Z2 is empty: the datum is not in the variety";
  std::string out = "H2 = " + group_name(r.invariant_factors()) + ", classes: [";
  bool first = true;
  auto add = [&](const std::string& s) {
    out += (first ? "" : ", ") + s;
    first = false;
  };
  if (r.split_class >= 0) add(r.types[r.split_class] + " (split)");
  for (std::size_t c = 0; c < r.types.size(); ++c)
    if (static_cast<int>(c) != r.split_class) add(r.types[c]);
  return out + "]";
}

}  // namespace ua
