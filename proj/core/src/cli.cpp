#include "qga/cli.hpp"

#include "qga/camina.hpp"
#include "qga/char_table.hpp"
#include "qga/families.hpp"
#include "qga/group_algebra.hpp"
#include "qga/group_json.hpp"
#include "qga/suites.hpp"
#include "qga/wedderburn.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace qga {

namespace {

using nlohmann::json;

struct SourceOpts {
  std::string family;      // family name, or a "name:params" text spec
  std::string group_file;  // JSON group file (cayley or perm format)
  long order = 0;
  long p = 0;
  long n = 0;
  std::string exponent;  // odd extraspecial: p | p2 (p^2 accepted)
  std::string type;      // extraspecial at p = 2: + | -
  std::string factors;   // abelian: comma-separated cyclic factor orders
  long cap = 10000;      // refuse groups larger than this
};

struct CommonOpts {
  std::string format = "pretty";
  std::string out_path;
  int threads = 1;
  std::uint64_t seed = 0xd1a90;
};

void add_source_options(CLI::App* cmd, SourceOpts& o) {
  cmd->add_option("--family", o.family,
                  "group family: cyclic | abelian | elem | dihedral | quaternion | extraspecial; "
                  "also accepts a compact spec like extraspecial:p=3,n=1,exp=p");
  cmd->add_option("--group-file", o.group_file, "JSON group file (cayley table or permutation generators)");
  cmd->add_option("--order", o.order, "group order (cyclic, dihedral, quaternion)");
  cmd->add_option("--p", o.p, "prime (elem, extraspecial)");
  cmd->add_option("--n", o.n, "rank (elem) or half-width (extraspecial of order p^(1+2n))");
  cmd->add_option("--exponent", o.exponent, "odd extraspecial exponent: p | p2");
  cmd->add_option("--type", o.type, "extraspecial type at p = 2: + | -");
  cmd->add_option("--factors", o.factors, "abelian invariant factors, e.g. 2,4");
  cmd->add_option("--cap", o.cap, "refuse groups of order above this")->check(CLI::PositiveNumber);
}

void add_common_options(CLI::App* cmd, CommonOpts& c) {
  cmd->add_option("--format", c.format, "output format")->check(CLI::IsMember({"json", "pretty"}));
  cmd->add_option("--out", c.out_path, "write the output to this file instead of stdout");
  cmd->add_option("--threads", c.threads, "worker threads for the heavy checks")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--seed", c.seed, "seed for the randomized rank cross-checks");
}

std::vector<long> parse_factor_list(const std::string& text) {
  std::vector<long> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) throw std::invalid_argument("--factors: empty entry in list");
    std::size_t used = 0;
    long v = std::stol(tok, &used);
    if (used != tok.size()) throw std::invalid_argument("--factors: bad entry '" + tok + "'");
    out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument("--factors: empty list");
  return out;
}

FamilySpec spec_from_options(const SourceOpts& o) {
  if (o.family.find(':') != std::string::npos) return parse_family_spec(o.family);
  FamilySpec s;
  if (o.family == "cyclic") {
    s.family = Family::cyclic;
    s.order = o.order;
    if (o.order <= 0) throw std::invalid_argument("cyclic family needs --order");
  } else if (o.family == "abelian") {
    s.family = Family::abelian;
    if (o.factors.empty()) throw std::invalid_argument("abelian family needs --factors");
    s.factors = parse_factor_list(o.factors);
  } else if (o.family == "elem" || o.family == "elementary") {
    s.family = Family::elementary_abelian;
    s.p = o.p;
    s.n = o.n;
    if (o.p <= 0 || o.n <= 0) throw std::invalid_argument("elem family needs --p and --n");
  } else if (o.family == "dihedral") {
    s.family = Family::dihedral;
    s.order = o.order;
    if (o.order <= 0) throw std::invalid_argument("dihedral family needs --order");
  } else if (o.family == "quaternion") {
    s.family = Family::quaternion;
    s.order = o.order;
    if (o.order <= 0) throw std::invalid_argument("quaternion family needs --order");
  } else if (o.family == "extraspecial") {
    s.family = Family::extraspecial;
    s.p = o.p;
    s.n = o.n;
    if (o.p <= 0 || o.n <= 0) throw std::invalid_argument("extraspecial family needs --p and --n");
    if (o.p == 2) {
      if (o.type != "+" && o.type != "-")
        throw std::invalid_argument("extraspecial at p = 2 needs --type + or -");
      s.variant = o.type;
    } else {
      if (o.exponent == "p") s.variant = "p";
      else if (o.exponent == "p2" || o.exponent == "p^2") s.variant = "p2";
      else throw std::invalid_argument("odd extraspecial needs --exponent p or p2");
    }
  } else if (o.family.empty()) {
    throw std::invalid_argument("pass exactly one of --family or --group-file");
  } else {
    throw std::invalid_argument("unknown family: " + o.family);
  }
  return s;
}

// predicted order of the family, saturating just above cap so callers can
// refuse oversized requests before building the multiplication table
long family_order_capped(const FamilySpec& s, long cap) {
  auto mul = [cap](long acc, long f) {
    if (f <= 0 || acc > cap / f + 1) return cap + 1;
    long r = acc * f;
    return r > cap ? cap + 1 : r;
  };
  long r = 1;
  switch (s.family) {
    case Family::cyclic:
    case Family::dihedral:
    case Family::quaternion:
      return s.order;
    case Family::abelian:
      for (long f : s.factors) r = mul(r, f);
      return r;
    case Family::elementary_abelian:
      for (long i = 0; i < s.n; ++i) r = mul(r, s.p);
      return r;
    case Family::extraspecial:
      r = s.p;
      for (long i = 0; i < 2 * s.n; ++i) r = mul(r, s.p);
      return r;
  }
  return 0;
}

Group load_source(const SourceOpts& o) {
  bool have_family = !o.family.empty();
  bool have_file = !o.group_file.empty();
  if (have_family == have_file)
    throw std::invalid_argument("pass exactly one of --family or --group-file");
  if (have_file) {
    ParseOptions popts;
    popts.cap = static_cast<int>(o.cap);
    return load_group_file(o.group_file, popts);
  }
  FamilySpec spec = spec_from_options(o);
  if (family_order_capped(spec, o.cap) > o.cap)
    throw std::invalid_argument("requested group order exceeds --cap (" + std::to_string(o.cap) + ")");
  return build_family(spec);
}

void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
  std::string body = text;
  if (body.empty() || body.back() != '\n') body += '\n';
  if (out_path.empty()) {
    out << body;
    return;
  }
  std::ofstream f(out_path);
  if (!f) throw std::invalid_argument("cannot open output file: " + out_path);
  f << body;
  f.flush();
  if (!f.good()) throw std::runtime_error("write failed: " + out_path);
}

// parse a library-emitted JSON string and re-dump so every CLI JSON output
// shares one indentation style
std::string redump(const std::string& text) { return json::parse(text).dump(2); }

int run_decompose(const SourceOpts& src, const CommonOpts& common, const std::string& mode,
                  std::ostream& out) {
  Group g = load_source(src);
  if (mode == "formula" || mode == "oracle") {
    WedderburnDecomposition d = mode == "formula" ? decompose_camina(g) : decompose_oracle(g);
    std::string text =
        common.format == "json" ? redump(decomposition_to_json(d)) : decomposition_pretty(d);
    emit(text, common.out_path, out);
    return 0;
  }
  WedderburnDecomposition formula = decompose_camina(g);
  WedderburnDecomposition oracle = decompose_oracle(g);
  DecompositionReport rep = verify_decomposition(formula, oracle);
  if (common.format == "json") {
    json j;
    j["formula"] = json::parse(decomposition_to_json(formula));
    j["oracle"] = json::parse(decomposition_to_json(oracle));
    j["match"] = rep.match;
    j["dimensions_ok"] = rep.dimensions_ok;
    j["notes"] = rep.notes;
    emit(j.dump(2), common.out_path, out);
  } else {
    std::ostringstream s;
    s << "formula:\n" << decomposition_pretty(formula);
    s << "oracle:\n" << decomposition_pretty(oracle);
    s << "match: " << (rep.match ? "yes" : "no") << "\n";
    s << "dimensions_ok: " << (rep.dimensions_ok ? "yes" : "no") << "\n";
    for (const std::string& note : rep.notes) s << "note: " << note << "\n";
    emit(s.str(), common.out_path, out);
  }
  return rep.match && rep.dimensions_ok ? 0 : 1;
}

int run_idempotents(const SourceOpts& src, const CommonOpts& common, std::ostream& out) {
  Group g = load_source(src);
  CharacterTable t = dixon_character_table(g);
  CaminaProfile prof = camina_profile(g);
  CompleteSetReport rep = verify_complete_set(t, prof, common.threads, common.seed);
  if (common.format == "json") {
    json j;
    j["group_order"] = g.order();
    json checks = json::array();
    json dumps = json::array();
    for (const IdempotentCheck& chk : rep.checks) {
      json jc;
      jc["character"] = chk.char_index;
      jc["degree"] = chk.degree;
      jc["conductor"] = chk.conductor;
      jc["idempotent"] = chk.idempotent;
      jc["central"] = chk.central;
      jc["dimension"] = chk.dimension;
      jc["expected_dimension"] = chk.expected_dimension;
      jc["has_prediction"] = chk.has_prediction;
      if (chk.has_prediction) {
        jc["prediction_kind"] = chk.prediction_kind;
        jc["prediction_matches"] = chk.prediction_matches;
      }
      checks.push_back(jc);
      dumps.push_back(json::parse(idempotent_to_json(rational_idempotent(t, chk.char_index),
                                                     chk.char_index)));
    }
    j["checks"] = checks;
    j["idempotents"] = dumps;
    j["pairwise_orthogonal"] = rep.pairwise_orthogonal;
    j["sums_to_one"] = rep.sums_to_one;
    j["pass"] = rep.all_pass;
    emit(j.dump(2), common.out_path, out);
  } else {
    std::ostringstream s;
    s << "primitive central idempotents of QG, |G| = " << g.order() << ":\n";
    for (const IdempotentCheck& chk : rep.checks) {
      s << "  chi" << chk.char_index << ": deg " << chk.degree << " cond " << chk.conductor
        << " dim " << chk.dimension << " (expected " << chk.expected_dimension << ")"
        << (chk.idempotent ? "" : " NOT-IDEMPOTENT") << (chk.central ? "" : " NOT-CENTRAL");
      if (chk.has_prediction)
        s << " " << chk.prediction_kind << (chk.prediction_matches ? " ok" : " MISMATCH");
      s << "\n";
    }
    s << "pairwise_orthogonal: " << (rep.pairwise_orthogonal ? "yes" : "no") << "\n";
    s << "sums_to_one: " << (rep.sums_to_one ? "yes" : "no") << "\n";
    s << "pass: " << (rep.all_pass ? "yes" : "no") << "\n";
    emit(s.str(), common.out_path, out);
  }
  return rep.all_pass ? 0 : 1;
}

int run_chartable(const SourceOpts& src, const CommonOpts& common, std::ostream& out) {
  Group g = load_source(src);
  CharacterTable t = dixon_character_table(g);
  verify_character_table(t);  // exact orthogonality; throws on any violation
  if (common.format == "json") {
    json j;
    j["group_order"] = g.order();
    j["exponent"] = t.exponent;
    j["modulus"] = t.modulus;
    json classes = json::array();
    for (std::size_t i = 0; i < t.classes.classes.size(); ++i) {
      json jc;
      jc["representative"] = t.classes.representatives[i];
      jc["size"] = t.class_sizes[i];
      classes.push_back(jc);
    }
    j["classes"] = classes;
    json chars = json::array();
    for (const Character& chi : t.chars) {
      json jch;
      jch["degree"] = chi.degree;
      jch["conductor"] = chi.conductor;
      json values = json::array();
      for (const Cyclotomic& v : chi.values) {
        json jv;
        jv["conductor"] = v.conductor();
        json coords = json::array();
        for (const Rational& c : v.coords()) coords.push_back(c.get_str());
        jv["coords"] = coords;
        values.push_back(jv);
      }
      jch["values"] = values;
      chars.push_back(jch);
    }
    j["characters"] = chars;
    emit(j.dump(2), common.out_path, out);
  } else {
    std::ostringstream s;
    s << "character table, |G| = " << g.order() << ", " << t.chars.size() << " classes\n";
    s << "class sizes:";
    for (int sz : t.class_sizes) s << " " << sz;
    s << "\nclass representatives:";
    for (int r : t.classes.representatives) s << " " << r;
    s << "\n";
    for (std::size_t i = 0; i < t.chars.size(); ++i) {
      const Character& chi = t.chars[i];
      s << "chi" << i << " (deg " << chi.degree << ", cond " << chi.conductor << "):";
      for (const Cyclotomic& v : chi.values) s << "  " << v.str();
      s << "\n";
    }
    emit(s.str(), common.out_path, out);
  }
  return 0;
}

int run_camina_check(const SourceOpts& src, const CommonOpts& common, std::ostream& out) {
  Group g = load_source(src);
  CaminaProfile prof = camina_profile(g);
  if (common.format == "json") {
    json j;
    j["group_order"] = g.order();
    j["is_camina_group"] = prof.is_camina_group;
    j["is_p_group"] = prof.is_p_group;
    j["p"] = prof.p;
    j["nilpotency_class"] = prof.nilpotency_class;
    j["vz"] = prof.vz;
    j["center_order"] = prof.center.size();
    j["derived_order"] = prof.derived.size();
    json kernels = json::array();
    for (const Subgroup& k : prof.camina_pair_kernels) kernels.push_back(k.size());
    j["camina_kernel_orders"] = kernels;
    json checks = json::array();
    for (const StructuralCheck& c : prof.checks) {
      json jc;
      jc["name"] = c.name;
      jc["pass"] = c.pass;
      jc["detail"] = c.detail;
      checks.push_back(jc);
    }
    j["checks"] = checks;
    emit(j.dump(2), common.out_path, out);
  } else {
    std::ostringstream s;
    s << "|G| = " << g.order() << ": "
      << (prof.is_camina_group ? "Camina group" : "not a Camina group");
    if (prof.is_p_group) s << ", p = " << prof.p;
    if (prof.nilpotency_class > 0) s << ", class " << prof.nilpotency_class;
    if (prof.vz) s << ", VZ";
    s << "\n|Z(G)| = " << prof.center.size() << ", |G'| = " << prof.derived.size() << "\n";
    s << "Camina pair kernel orders:";
    for (const Subgroup& k : prof.camina_pair_kernels) s << " " << k.size();
    if (prof.camina_pair_kernels.empty()) s << " (none)";
    s << "\n";
    for (const StructuralCheck& c : prof.checks)
      s << (c.pass ? "  [ok]   " : "  [FAIL] ") << c.name << " - " << c.detail << "\n";
    emit(s.str(), common.out_path, out);
  }
  // classification answers exit 0; a Camina p-group violating its own
  // structural facts signals a bug or a corrupted input (non-p Camina
  // groups legitimately fail the p-group checks)
  bool structural_violation =
      prof.is_camina_group && prof.is_p_group &&
      std::any_of(prof.checks.begin(), prof.checks.end(),
                  [](const StructuralCheck& c) { return !c.pass; });
  return structural_violation ? 1 : 0;
}

int run_verify(const std::string& suite, const std::string& group_file, const CommonOpts& common,
               std::ostream& out) {
  if (!group_file.empty() && suite != "class3")
    throw std::invalid_argument("only the class3 suite takes --group-file");
  SuiteReport rep;
  if (suite == "core") rep = run_core_suite(common.threads);
  else if (suite == "idempotents") rep = run_idempotents_suite(common.threads);
  else if (suite == "lemmas") rep = run_lemmas_suite(common.threads);
  else rep = run_class3_suite(group_file, common.threads);
  std::string text =
      common.format == "json" ? redump(suite_report_json(rep)) : suite_report_pretty(rep);
  emit(text, common.out_path, out);
  return rep.all_pass() ? 0 : 1;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact Wedderburn decompositions of rational group algebras of finite p-groups"};
  app.require_subcommand(1);

  int rc = 0;

  SourceOpts dec_src;
  CommonOpts dec_common;
  std::string dec_mode = "formula";
  CLI::App* dec = app.add_subcommand(
      "decompose", "decompose QG into simple components (formula, oracle, or both)");
  add_source_options(dec, dec_src);
  add_common_options(dec, dec_common);
  dec->add_option("--mode", dec_mode, "formula | oracle | both")
      ->check(CLI::IsMember({"formula", "oracle", "both"}));
  dec->callback([&] { rc = run_decompose(dec_src, dec_common, dec_mode, out); });

  SourceOpts idm_src;
  CommonOpts idm_common;
  CLI::App* idm = app.add_subcommand(
      "idempotents", "primitive central idempotents of QG with full verification");
  add_source_options(idm, idm_src);
  add_common_options(idm, idm_common);
  idm->callback([&] { rc = run_idempotents(idm_src, idm_common, out); });

  SourceOpts cht_src;
  CommonOpts cht_common;
  CLI::App* cht = app.add_subcommand(
      "chartable", "exact character table with hard orthogonality verification");
  add_source_options(cht, cht_src);
  add_common_options(cht, cht_common);
  cht->callback([&] { rc = run_chartable(cht_src, cht_common, out); });

  SourceOpts cam_src;
  CommonOpts cam_common;
  CLI::App* cam = app.add_subcommand(
      "camina-check", "classify the group: Camina property, class, kernels, structure");
  add_source_options(cam, cam_src);
  add_common_options(cam, cam_common);
  cam->callback([&] { rc = run_camina_check(cam_src, cam_common, out); });

  CommonOpts ver_common;
  std::string ver_suite;
  std::string ver_file;
  CLI::App* ver = app.add_subcommand("verify", "run a verification suite");
  ver->add_option("--suite", ver_suite, "core | idempotents | lemmas | class3")
      ->required()
      ->check(CLI::IsMember({"core", "idempotents", "lemmas", "class3"}));
  ver->add_option("--group-file", ver_file, "class-3 witness group for the class3 suite");
  add_common_options(ver, ver_common);
  ver->callback([&] { rc = run_verify(ver_suite, ver_file, ver_common, out); });

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("qga");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);  // prints contextual help or the parse error
    return code == 0 ? 0 : 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 1;
  }
  return rc;
}

} // namespace qga
