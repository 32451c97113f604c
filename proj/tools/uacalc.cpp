#include <cstdio>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "ua/io.hpp"
#include "ua/oracle.hpp"
#include "ua/suite.hpp"

using namespace ua;

namespace {

enum Exit { ok = 0, fails = 1, usage = 2, cap_exceeded = 3 };

struct Options {
  std::string alg, con, con2, sigma, m, lift, out, format = "text", datum, cocycle, cocycle2, pairs, action = "triv",
                                                    k, q, only, group, extension, con_out, cocycle_out;
  std::size_t cap = std::size_t{1} << 24;
  std::uint64_t seed = 0;
};

// Output goes to stdout; --out receives the command's artifact, or the JSON result.
struct Output {
  const Options& o;
  bool json() const { return o.format == "json"; }
  void emit(const Json& j, const std::string& text) const {
    if (json())
      std::cout << j.dump(2) << "\n";
    else
      std::cout << text << (text.empty() || text.back() == '\n' ? "" : "\n");
  }
};

std::string blocks_text(const Partition& p) {
  std::string s = "[";
  auto blocks = p.blocks();
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    s += i ? ",[" : "[";
    for (std::size_t k = 0; k < blocks[i].size(); ++k) s += (k ? "," : "") + std::to_string(blocks[i][k]);
    s += "]";
  }
  return s + "]";
}

std::string single_line(const Json& j) { return j.dump(); }

int report_exit(const Output& out, const Report& r) {
  std::string text = (r.holds ? "holds: " : "FAILS: ") + r.claim;
  if (!r.holds) text += "\nwitness: " + single_line(r.witness);
  Json j = r.to_json();
  if (!r.details.is_null()) j["details"] = r.details;
  out.emit(j, text);
  return r.holds ? ok : fails;
}

std::string need(const std::string& value, const char* flag) {
  if (value.empty()) throw InputError(std::string("missing ") + flag);
  return value;
}

FiniteAlgebra alg_of(const Options& o) { return load_algebra(need(o.alg, "--alg")); }

Term m_term(const Options& o, const FiniteAlgebra& alg) {
  Term t;
  if (!o.m.empty()) {
    t = parse_term(o.m);
  } else if (alg.signature() == group_signature()) {
    t = group_malcev_term();
  } else {
    throw InputError("--m is required outside the group signature");
  }
  check_term(alg.signature(), t);
  return t;
}

Extension extension_of(const Options& o, const FiniteAlgebra& alg) {
  Congruence beta = load_congruence(need(o.con, "--con"), alg);
  Table m = term_table(alg, m_term(o, alg), 3);
  Extension e = make_extension(alg, beta, {}, m);
  if (!o.lift.empty()) e.lift = parse_lifting(e, o.lift);
  return e;
}

std::vector<Equation> sigma_of(const Options& o) {
  const std::string s = need(o.sigma, "--sigma");
  if (!s.empty() && s[0] == '@') return equations_from_json(Json(s), "--sigma");
  return load_equations(s);
}

bool is_group_signature(const FiniteAlgebra& a) { return a.signature() == group_signature(); }

// datum from --datum, or extracted from --alg --con
AffineDatum datum_of(const Options& o) {
  if (!o.datum.empty()) return load_datum(o.datum);
  FiniteAlgebra alg = alg_of(o);
  return extract_datum(extension_of(o, alg), m_term(o, alg)).datum;
}

PairList parse_pairs(const std::string& text, int n) {
  PairList out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) {
    if (item.empty()) continue;
    auto comma = item.find(',');
    int a = -1, b = -1;
    try {
      if (comma == std::string::npos) throw std::invalid_argument("");
      a = std::stoi(item.substr(0, comma));
      b = std::stoi(item.substr(comma + 1));
    } catch (const std::exception&) {
      throw InputError("--pairs entry '" + item + "' is not a,b");
    }
    if (a < 0 || a >= n || b < 0 || b >= n) throw InputError("--pairs entry '" + item + "' is out of range");
    out.push_back({a, b});
  }
  return out;
}

void write_out(const Options& o, const Json& j) {
  if (!o.out.empty()) write_text_file(o.out, j.dump(2) + "\n");
}

int cmd_con_gen(const Options& o, const Output& out) {
  FiniteAlgebra alg = alg_of(o);
  Congruence c = cg(alg, parse_pairs(need(o.pairs, "--pairs"), alg.size()));
  Json j = congruence_to_json(alg, c);
  write_out(o, j);
  out.emit(j, "blocks " + blocks_text(c));
  return ok;
}

int cmd_delta(const Options& o, const Output& out) {
  FiniteAlgebra alg = alg_of(o);
  Congruence a = load_congruence(need(o.con, "--con"), alg);
  Congruence b = o.con2.empty() ? a : load_congruence(o.con2, alg);
  DeltaQuotient dq = delta_quotient(alg, a, b);
  Json classes = Json::array();
  std::string text = std::to_string(dq.num_classes()) + " classes of Delta on " + std::to_string(dq.pa.size()) + " pairs";
  for (int c = 0; c < dq.num_classes(); ++c) {
    Json members = Json::array();
    for (int p = 0; p < dq.pa.size(); ++p)
      if (dq.class_of[p] == c) members.push_back(Json::array({dq.pa.top(p), dq.pa.bottom(p)}));
    text += "\n" + std::to_string(c) + ": " + members.dump();
    classes.push_back(members);
  }
  Json j{{"pairs", dq.pa.size()}, {"classes", classes}};
  write_out(o, j);
  out.emit(j, text);
  return ok;
}

int cmd_commutator(const Options& o, const Output& out) {
  FiniteAlgebra alg = alg_of(o);
  Congruence a = load_congruence(need(o.con, "--con"), alg);
  Congruence b = o.con2.empty() ? a : load_congruence(o.con2, alg);
  Congruence c = tc_commutator(alg, a, b);
  Json j = congruence_to_json(alg, c);
  write_out(o, j);
  out.emit(j, "[alpha,beta] = " + blocks_text(c));
  return ok;
}

int cmd_abelian(const Options& o, const Output& out, bool central) {
  FiniteAlgebra alg = alg_of(o);
  Congruence a = load_congruence(need(o.con, "--con"), alg);
  return report_exit(out, central ? central_report(alg, a) : abelian_report(alg, a));
}

int cmd_extract(const Options& o, const Output& out) {
  FiniteAlgebra alg = alg_of(o);
  Extension e = extension_of(o, alg);
  Extraction ex = extract_datum(e, m_term(o, alg));
  Json dj = datum_to_json(ex.datum);
  Json cj = cocycle_to_json(ex.datum, ex.cocycle, o.out);
  if (!o.out.empty()) write_text_file(o.out, dj.dump(2) + "\n");
  if (!o.cocycle_out.empty()) write_text_file(o.cocycle_out, cj.dump(2) + "\n");
  bool valid = all_hold(validate_datum(ex.datum));
  Json j{{"classes", ex.datum.nc()}, {"quotient_size", ex.datum.nq()}, {"valid", valid}, {"cocycle", cj["tables"]}};
  out.emit(j, "datum: " + std::to_string(ex.datum.nc()) + " classes over " + std::to_string(ex.datum.nq()) +
                  " blocks, " + (valid ? "valid" : "INVALID") + "\ncocycle: " + cj["tables"].dump());
  return valid ? ok : fails;
}

int cmd_validate(const Options& o, const Output& out) {
  AffineDatum d = datum_of(o);
  Json reports = Json::array();
  std::string text;
  bool all = true;
  for (const auto& r : validate_datum(d)) {
    reports.push_back(r.to_json());
    text += (r.holds ? "holds: " : "FAILS: ") + r.claim + (r.holds ? "" : "\n  witness: " + single_line(r.witness)) + "\n";
    all = all && r.holds;
  }
  out.emit(Json{{"holds", all}, {"reports", reports}}, text);
  return all ? ok : fails;
}

int cmd_rebuild(const Options& o, const Output& out) {
  AffineDatum d = datum_of(o);
  TwoCocycle T = load_cocycle(need(o.cocycle, "--cocycle"), d);
  Report fc = check_fiber_condition(d, T);
  if (!fc.holds) return report_exit(out, fc);
  Extension e = reconstruct(d, T);
  Json alg = algebra_to_json(e.B);
  if (!o.out.empty()) write_text_file(o.out, alg.dump(2) + "\n");
  std::string type = is_group_signature(e.B) && is_group(e.B) ? identify_group(e.B) : "";
  out.emit(Json{{"size", e.B.size()}, {"iso_type", type}, {"algebra", alg}},
           "A_T on " + std::to_string(e.B.size()) + " elements" + (type.empty() ? "" : ", isomorphic to " + type));
  return ok;
}

int cmd_realize(const Options& o, const Output& out) {
  FiniteAlgebra alg = alg_of(o);
  Extension e = extension_of(o, alg);
  AffineDatum d = load_datum(need(o.datum, "--datum"));
  return report_exit(out, check_realization(e, d, o.cap));
}

int cmd_semidirect(const Options& o, const Output& out) {
  FiniteAlgebra alg = alg_of(o);
  Extension e = extension_of(o, alg);
  auto r = find_retraction(e, o.cap);
  Json j{{"retraction", r ? Json(*r) : Json(nullptr)}};
  out.emit(j, r ? "retraction " + Json(*r).dump() : "no retraction");
  return ok;
}

int cmd_cocycle_check(const Options& o, const Output& out) {
  AffineDatum d = datum_of(o);
  TwoCocycle T = load_cocycle(need(o.cocycle, "--cocycle"), d);
  return report_exit(out, check_cocycle(d, T, sigma_of(o)));
}

int cmd_h2(const Options& o, const Output& out) {
  AffineDatum d = datum_of(o);
  IsoNamer namer;
  if (is_group_signature(d.Q)) namer = [](const FiniteAlgebra& g) {
    std::string s = is_group(g) ? identify_group(g) : "";
    return s.empty() ? std::string("unnamed") : s;
  };
  CohomologyResult r = h2(d, sigma_of(o), namer, o.cap);
  Json j = cohomology_to_json(d, r);
  write_out(o, j);
  out.emit(j, cohomology_summary(r));
  return ok;
}

int cmd_h1(const Options& o, const Output& out) {
  AffineDatum d = datum_of(o);
  H1Result r = h1(d, 4, o.cap);
  Json j{{"Z1_order", r.z1.size()},          {"Z1_invariant_factors", r.z1_group.invariant_factors()},
         {"PDer_order", r.pder.size()},      {"H1_invariant_factors", r.h1.invariant_factors()},
         {"twin_pairs", r.twin_pairs},       {"principal_stabilizers", r.pstab},
         {"exact", r.exact},                 {"depth", r.depth}};
  write_out(o, j);
  out.emit(j, "H1 = " + group_name(r.h1.invariant_factors()) + " (|Z1| = " + std::to_string(r.z1.size()) +
                  ", |PDer| = " + std::to_string(r.pder.size()) + (r.exact ? "" : ", twin closure cut at depth " +
                  std::to_string(r.depth)) + ")");
  return ok;
}

int cmd_equiv(const Options& o, const Output& out) {
  AffineDatum d = datum_of(o);
  TwoCocycle a = load_cocycle(need(o.cocycle, "--cocycle"), d);
  TwoCocycle b = load_cocycle(need(o.cocycle2, "--cocycle2"), d);
  auto h = cocycle_difference_coboundary(d, a, b, o.cap);
  Report r("T2 - T is a 2-coboundary");
  if (h)
    r.details = Json{{"h", *h}};
  else
    r.fail(Json{{"reason", "no h with G_h = T2 - T"}});
  return report_exit(out, r);
}

int cmd_stab(const Options& o, const Output& out) {
  FiniteAlgebra alg = alg_of(o);
  return report_exit(out, verify_stabilizer_correspondence(extension_of(o, alg), o.cap));
}

int cmd_oracle_h2(const Options& o, const Output& out) {
  const FiniteAlgebra& K = catalog_group(need(o.k, "--k"));
  const FiniteAlgebra& Q = catalog_group(need(o.q, "--q"));
  GroupAction phi;
  if (o.action == "triv")
    phi = trivial_action(K, Q);
  else if (o.action == "inv")
    phi = inversion_action(K, Q);
  else
    throw InputError("--action must be triv or inv");
  ClassicalH2 r = classical_h2(K, Q, phi, o.cap);
  std::vector<std::string> types = r.types;
  Json j{{"invariant_factors", r.invariant_factors}, {"classes", types}, {"Z2_order", r.cocycles.size()},
         {"B2_order", r.b2_order}};
  std::string text = "H2 = " + group_name(r.invariant_factors) + ", classes: [";
  for (std::size_t i = 0; i < types.size(); ++i) text += (i ? ", " : "") + types[i];
  out.emit(j, text + "]");
  return ok;
}

int cmd_verify(const Options& o, const Output& out) {
  SuiteOptions so;
  so.seed = o.seed;
  so.cap = o.cap;
  std::stringstream ss(o.only);
  std::string id;
  while (std::getline(ss, id, ','))
    if (!id.empty()) so.only.push_back(id);
  auto results = run_suite(so);
  Json j = suite_to_json(results);
  write_out(o, j);
  out.emit(j, suite_to_text(results));
  return j["holds"].get<bool>() ? ok : fails;
}

int cmd_catalog(const Options& o, const Output& out) {
  if (!o.group.empty()) {
    Json j = algebra_to_json(catalog_group(o.group));
    write_out(o, j);
    out.emit(j, j.dump());
    return ok;
  }
  if (!o.extension.empty()) {
    for (const auto& ne : extension_catalog())
      if (ne.name == o.extension) {
        Json a = algebra_to_json(ne.ext.B), c = congruence_to_json(ne.ext.B, ne.ext.beta);
        write_out(o, a);
        if (!o.con_out.empty()) write_text_file(o.con_out, c.dump(2) + "\n");
        out.emit(Json{{"algebra", a}, {"congruence", c}}, ne.name + ": " + ne.ext.B.name() + " with blocks " +
                                                              blocks_text(ne.ext.beta));
        return ok;
      }
    throw InputError("unknown extension " + o.extension);
  }
  Json groups = Json::array(), exts = Json::array();
  for (const auto& g : group_catalog()) groups.push_back(g.name());
  for (const auto& ne : extension_catalog()) exts.push_back(ne.name);
  out.emit(Json{{"groups", groups}, {"extensions", exts}}, "groups: " + groups.dump() + "\nextensions: " + exts.dump());
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"uacalc: commutators, affine datum and cohomology of finite algebras"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* c) {
    c->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));
    c->add_option("--out", o.out, "output file");
    c->add_option("--cap", o.cap, "search cap");
    c->add_option("--seed", o.seed, "seed for randomized search order");
  };
  auto ext_flags = [&](CLI::App* c) {
    c->add_option("--alg", o.alg, "algebra file");
    c->add_option("--con", o.con, "congruence file");
    c->add_option("--m", o.m, "ternary term, default (mul (mul x0 (inv x1)) x2) for groups");
    c->add_option("--lift", o.lift, "lifting q:a,...");
  };

  auto con = app.add_subcommand("con", "congruences");
  con->require_subcommand(1);
  auto con_gen = con->add_subcommand("gen", "congruence generated by pairs");
  common(con_gen);
  con_gen->add_option("--alg", o.alg)->required();
  con_gen->add_option("--pairs", o.pairs, "pairs a,b;c,d")->required();

  auto delta = app.add_subcommand("delta", "Delta_{alpha beta} classes");
  auto commutator = app.add_subcommand("commutator", "[alpha, beta]");
  for (auto c : {delta, commutator}) {
    common(c);
    c->add_option("--alg", o.alg)->required();
    c->add_option("--con", o.con, "alpha")->required();
    c->add_option("--con2", o.con2, "beta, default alpha");
  }
  auto abelian = app.add_subcommand("abelian", "is alpha abelian");
  auto central = app.add_subcommand("central", "is alpha central");
  for (auto c : {abelian, central}) {
    common(c);
    c->add_option("--alg", o.alg)->required();
    c->add_option("--con", o.con)->required();
  }

  auto datum = app.add_subcommand("datum", "affine datum");
  datum->require_subcommand(1);
  auto extract = datum->add_subcommand("extract", "datum and cocycle of an extension");
  common(extract);
  ext_flags(extract);
  extract->add_option("--cocycle-out", o.cocycle_out, "cocycle file to write");
  auto validate = datum->add_subcommand("validate", "check the datum axioms");
  common(validate);
  ext_flags(validate);
  validate->add_option("--datum", o.datum);

  auto rebuild = app.add_subcommand("rebuild", "reconstruct A_T");
  common(rebuild);
  ext_flags(rebuild);
  rebuild->add_option("--datum", o.datum);
  rebuild->add_option("--cocycle", o.cocycle)->required();

  auto realize = app.add_subcommand("realize", "does the extension realize the datum");
  common(realize);
  ext_flags(realize);
  realize->add_option("--datum", o.datum)->required();

  auto semidirect = app.add_subcommand("semidirect", "search for a homomorphic lifting");
  common(semidirect);
  ext_flags(semidirect);

  auto cocycle = app.add_subcommand("cocycle", "2-cocycles");
  cocycle->require_subcommand(1);
  auto check = cocycle->add_subcommand("check", "check C1 and C2");
  common(check);
  ext_flags(check);
  check->add_option("--datum", o.datum);
  check->add_option("--cocycle", o.cocycle)->required();
  check->add_option("--sigma", o.sigma, "equations file or @groups / @abelian-groups")->required();

  auto h2c = app.add_subcommand("h2", "second cohomology");
  common(h2c);
  ext_flags(h2c);
  h2c->add_option("--datum", o.datum);
  h2c->add_option("--sigma", o.sigma)->required();

  auto h1c = app.add_subcommand("h1", "first cohomology");
  common(h1c);
  ext_flags(h1c);
  h1c->add_option("--datum", o.datum);

  auto equiv = app.add_subcommand("equiv", "are two cocycles cohomologous");
  common(equiv);
  ext_flags(equiv);
  equiv->add_option("--datum", o.datum);
  equiv->add_option("--cocycle", o.cocycle)->required();
  equiv->add_option("--cocycle2", o.cocycle2)->required();

  auto stab = app.add_subcommand("stab", "stabilizing automorphisms against derivations");
  common(stab);
  ext_flags(stab);

  auto oracle = app.add_subcommand("oracle", "classical group cohomology");
  oracle->require_subcommand(1);
  auto oracle_h2 = oracle->add_subcommand("h2", "H2(Q, K) by brute force");
  common(oracle_h2);
  oracle_h2->add_option("--k", o.k, "kernel group")->required();
  oracle_h2->add_option("--q", o.q, "quotient group")->required();
  oracle_h2->add_option("--action", o.action, "triv or inv");

  auto verify = app.add_subcommand("verify-paper", "run the invariant suite");
  common(verify);
  verify->add_option("--only", o.only, "comma separated claim ids");

  auto catalog = app.add_subcommand("catalog", "export catalog groups and extensions");
  common(catalog);
  catalog->add_option("--group", o.group);
  catalog->add_option("--extension", o.extension);
  catalog->add_option("--con-out", o.con_out, "congruence file to write");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? ok : usage;
  }

  Output out{o};
  try {
    if (*con_gen) return cmd_con_gen(o, out);
    if (*delta) return cmd_delta(o, out);
    if (*commutator) return cmd_commutator(o, out);
    if (*abelian) return cmd_abelian(o, out, false);
    if (*central) return cmd_abelian(o, out, true);
    if (*extract) return cmd_extract(o, out);
    if (*validate) return cmd_validate(o, out);
    if (*rebuild) return cmd_rebuild(o, out);
    if (*realize) return cmd_realize(o, out);
    if (*semidirect) return cmd_semidirect(o, out);
    if (*check) return cmd_cocycle_check(o, out);
    if (*h2c) return cmd_h2(o, out);
    if (*h1c) return cmd_h1(o, out);
    if (*equiv) return cmd_equiv(o, out);
    if (*stab) return cmd_stab(o, out);
    if (*oracle_h2) return cmd_oracle_h2(o, out);
    if (*verify) return cmd_verify(o, out);
    if (*catalog) return cmd_catalog(o, out);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return usage;
  } catch (const CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return cap_exceeded;
  } catch (const PropertyError& e) {
    Json w{{"error", e.what()}, {"witness", e.witness()}};
    out.emit(Json{{"holds", false}, {"witness", w}}, std::string("FAILS: ") + e.what() + "\nwitness: " + e.witness().dump());
    return fails;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return usage;
  }
  return usage;
}
