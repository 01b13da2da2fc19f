// Command-line front end: loads nearrings, runs enumerations, regularity
// checks and the theorem suite, and prints one canonical JSON report on
// stdout. Exit codes: 0 = all verdicts hold/inapplicable, 1 = some check
// failed (a counterexample exists), 2 = input error. Diagnostics and timing
// go to stderr; the report body is byte-stable across runs and thread
// counts.

#include <chrono>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "nearring/catalog.hpp"
#include "nearring/errors.hpp"
#include "nearring/io.hpp"
#include "nearring/regularity.hpp"
#include "nearring/substructures.hpp"
#include "nearring/theorems.hpp"
#include "nearring/verify.hpp"

using namespace nearring;
using nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInputError = 2;

Subset parse_subset(const std::string& csv, int order) {
  Subset s(order);
  std::string tok;
  std::istringstream in(csv);
  while (std::getline(in, tok, ',')) {
    if (tok.empty()) continue;
    size_t pos = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &pos);
    } catch (const std::exception&) {
      throw ParseError("bad subset element '" + tok + "'");
    }
    if (pos != tok.size()) throw ParseError("bad subset element '" + tok + "'");
    if (v < 0 || v >= order)
      throw ParseError("subset element " + tok + " out of range for order " +
                       std::to_string(order));
    s.insert(v);
  }
  return s;
}

ordered_json instance_json(const io::LoadedNearring& loaded, const std::string& source) {
  ordered_json j;
  j["name"] = loaded.name;
  j["order"] = loaded.nearring.order();
  j["source"] = source;
  return j;
}

int emit(const std::string& subcommand, ordered_json instance, ordered_json results,
         int exit_status) {
  ordered_json report;
  report["tool"] = "nearring";
  report["tool_version"] = io::kToolVersion;
  report["subcommand"] = subcommand;
  if (!instance.is_null()) report["instance"] = std::move(instance);
  report["results"] = std::move(results);
  report["exit_status"] = exit_status;
  std::cout << report.dump(2) << "\n";
  return exit_status;
}

int run_check(const std::string& file) {
  io::RawNearringFile raw = io::load_raw(file);
  ValidationResult r = validate_nearring(raw.order, raw.add, raw.mul);

  ordered_json results;
  results["valid"] = r.ok();
  results["violations"] = io::failures_json(r.failures);
  ordered_json instance;
  instance["name"] = raw.name;
  instance["order"] = raw.order;
  instance["source"] = file;
  if (r.ok()) {
    results["unity"] = r.nearring->unity() ? ordered_json(*r.nearring->unity())
                                           : ordered_json(nullptr);
    results["distributive"] = r.nearring->distributive();
  }
  return emit("check", std::move(instance), std::move(results),
              r.ok() ? kExitOk : kExitCheckFailed);
}

int run_enumerate(const std::string& file, const std::string& kind_name_arg) {
  io::LoadedNearring loaded = io::load(file);
  StructureKind kind = kind_from_name(kind_name_arg);
  StructureList list = enumerate(loaded.nearring, kind);

  ordered_json results;
  results["kind"] = kind_name(kind);
  results["count"] = list.members.size();
  ordered_json members = ordered_json::array();
  for (const Subset& s : list.members) members.push_back(io::subset_json(s));
  results["members"] = std::move(members);
  return emit("enumerate", instance_json(loaded, file), std::move(results), kExitOk);
}

ordered_json regularity_result_json(const FiniteNearring& nr, const Subset& p,
                                    const RegularityResult& r) {
  ordered_json j;
  j["ideal"] = io::subset_json(p);
  j["p_regular"] = r.regular();
  if (r.regular()) {
    if (!verify_certificate(nr, *r.certificate))
      throw InternalCheckError("certificate failed independent re-evaluation");
    j["certificate"] = io::certificate_json(*r.certificate);
  } else {
    j["failing_element"] = r.failing_element;
  }
  return j;
}

int run_regularity(const std::string& file, const std::optional<std::string>& ideal,
                   bool all_ideals, bool strict) {
  io::LoadedNearring loaded = io::load(file);
  const FiniteNearring& nr = loaded.nearring;
  UnityMode mode = strict ? UnityMode::strict : UnityMode::lenient;
  if (!strict && !nr.unity())
    std::cerr << "nearring: note: instance has no unity; Def-1.9 strictness is off "
                 "(lenient mode)\n";

  ordered_json results;
  results["mode"] = strict ? "strict" : "lenient";
  int exit_status = kExitOk;

  if (all_ideals) {
    ordered_json arr = ordered_json::array();
    for (auto& [p, cert] : find_p_regular_ideals(nr, mode)) {
      if (!verify_certificate(nr, cert))
        throw InternalCheckError("certificate failed independent re-evaluation");
      ordered_json e;
      e["ideal"] = io::subset_json(p);
      e["certificate"] = io::certificate_json(cert);
      arr.push_back(std::move(e));
    }
    results["p_regular_ideals"] = std::move(arr);
  } else if (ideal) {
    Subset p = parse_subset(*ideal, nr.order());
    RegularityResult r = is_p_regular(nr, p, mode);
    results["result"] = regularity_result_json(nr, p, r);
    if (!r.regular()) exit_status = kExitCheckFailed;
  } else {
    RegularityResult r = is_regular(nr);
    results["regular"] = r.regular();
    if (r.regular()) {
      if (!verify_certificate(nr, *r.certificate))
        throw InternalCheckError("certificate failed independent re-evaluation");
      results["certificate"] = io::certificate_json(*r.certificate);
    } else {
      results["failing_element"] = r.failing_element;
      exit_status = kExitCheckFailed;
    }
  }
  return emit("regularity", instance_json(loaded, file), std::move(results), exit_status);
}

int run_verify(const std::string& file, const std::string& theorem, bool all,
               const std::optional<std::string>& ideal, int max_chain) {
  io::LoadedNearring loaded = io::load(file);
  const FiniteNearring& nr = loaded.nearring;

  std::optional<Subset> p;
  if (ideal) p = parse_subset(*ideal, nr.order());
  (void)all;  // --all (every P-regular ideal) is the default when no --ideal

  std::string filter;
  if (theorem != "all") {
    if (theorem.rfind("2.", 0) == 0)
      filter = "lemma-" + theorem;
    else if (theorem.rfind("3.", 0) == 0)
      filter = "thm-" + theorem;
    else
      filter = theorem;  // accept full ids like "lemma-2.2"
  }

  SuiteOptions opts;
  opts.max_chain = max_chain;
  std::vector<TheoremReport> reports = run_full_suite(nr, p, opts);

  int holds = 0, fails = 0, inapplicable = 0;
  ordered_json arr = ordered_json::array();
  for (const TheoremReport& r : reports) {
    if (!filter.empty() && r.theorem_id != filter) continue;
    switch (r.verdict) {
      case Verdict::holds: ++holds; break;
      case Verdict::fails: ++fails; break;
      case Verdict::inapplicable: ++inapplicable; break;
    }
    arr.push_back(io::report_json(r));
  }
  if (!filter.empty() && arr.empty())
    throw ParseError("unknown or never-exercised theorem id: " + theorem);

  ordered_json results;
  results["theorem"] = theorem;
  results["counts"] = {{"holds", holds}, {"fails", fails}, {"inapplicable", inapplicable}};
  results["reports"] = std::move(arr);
  return emit("verify", instance_json(loaded, file), std::move(results),
              fails ? kExitCheckFailed : kExitOk);
}

int run_decompose(const std::string& file, const std::string& theorem,
                  const std::string& ideal, int element,
                  const std::vector<std::string>& blocks_arg, std::optional<int> x) {
  io::LoadedNearring loaded = io::load(file);
  const FiniteNearring& nr = loaded.nearring;
  Subset p = parse_subset(ideal, nr.order());
  std::vector<Subset> blocks;
  for (const std::string& b : blocks_arg) blocks.push_back(parse_subset(b, nr.order()));

  DecompositionWitness w{0, 0, {}, std::nullopt, false};
  if (theorem == "3.3") {
    if (blocks.size() != 1) throw ParseError("theorem 3.3 takes exactly one block");
    w = decompose_thm_3_3(nr, p, blocks[0], element);
  } else if (theorem == "3.4") {
    if (blocks.size() != 2) throw ParseError("theorem 3.4 takes exactly two blocks");
    w = decompose_thm_3_4(nr, p, blocks[0], blocks[1], element, x);
  } else if (theorem == "3.5") {
    w = decompose_thm_3_5(nr, p, blocks, element, x);
  } else {
    throw ParseError("decompose supports theorems 3.3, 3.4, 3.5");
  }

  if (!verify_decomposition(nr, p, blocks, w))
    throw InternalCheckError("witness failed independent re-evaluation");

  ordered_json results;
  results["theorem"] = theorem;
  results["ideal"] = io::subset_json(p);
  results["witness"] = io::witness_json(w);
  results["reverified"] = true;
  return emit("decompose", instance_json(loaded, file), std::move(results), kExitOk);
}

int run_catalog(int max_order, const std::optional<std::string>& export_dir) {
  std::vector<CatalogEntry> entries = standard_catalog(max_order);
  ordered_json arr = ordered_json::array();
  std::vector<std::string> exported;
  for (const CatalogEntry& e : entries) {
    ordered_json j;
    j["name"] = e.name;
    j["order"] = e.nearring.order();
    j["provenance"] = e.provenance;
    j["unity"] = e.nearring.unity() ? ordered_json(*e.nearring.unity())
                                    : ordered_json(nullptr);
    j["distributive"] = e.nearring.distributive();
    arr.push_back(std::move(j));
    if (export_dir) {
      std::filesystem::create_directories(*export_dir);
      auto text_path = std::filesystem::path(*export_dir) / (e.name + ".nr");
      auto json_path = std::filesystem::path(*export_dir) / (e.name + ".nr.json");
      io::save(e.nearring, e.name, text_path);
      io::save(e.nearring, e.name, json_path);
      exported.push_back(text_path.string());
      exported.push_back(json_path.string());
    }
  }
  ordered_json results;
  results["max_order"] = max_order;
  results["entries"] = std::move(arr);
  if (export_dir) results["exported"] = exported;
  return emit("catalog", ordered_json(), std::move(results), kExitOk);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite nearring toolkit: substructures, regularity certificates, "
               "theorem verification"};
  app.require_subcommand(1);

  std::string file, kind = "subgroup", theorem = "all";
  std::optional<std::string> ideal, export_dir;
  bool all_ideals = false, strict = false, all = false;
  int element = 0, max_order = 27, max_chain = 3;
  std::optional<int> free_x;
  std::vector<std::string> blocks;

  CLI::App* check = app.add_subcommand("check", "validate the nearring axioms");
  check->add_option("file", file, "nearring file (.nr or .nr.json)")->required();

  CLI::App* enu = app.add_subcommand("enumerate", "list substructures of a kind");
  enu->add_option("--kind", kind, "structure kind, e.g. bi-ideal")->required();
  enu->add_option("file", file)->required();

  CLI::App* reg = app.add_subcommand("regularity", "regularity and P-regularity certificates");
  auto* ideal_opt = reg->add_option("--ideal", ideal, "P as comma-separated elements");
  reg->add_flag("--all-ideals", all_ideals, "find every P-regular ideal")
      ->excludes(ideal_opt);
  reg->add_flag("--strict-unity", strict, "require a unity element (Def 1.9)");
  reg->add_option("file", file)->required();

  CLI::App* ver = app.add_subcommand("verify", "verify lemmas and theorems");
  ver->add_option("--theorem", theorem, "2.1|2.2|2.4|3.1..3.8|all");
  ver->add_flag("--all", all, "verify over every P-regular ideal (default)");
  ver->add_option("--ideal", ideal, "restrict to one P");
  ver->add_option("--max-chain", max_chain, "longest 3.5/3.8 block tuple")
      ->check(CLI::Range(1, 6));
  ver->add_option("file", file)->required();

  CLI::App* dec = app.add_subcommand("decompose", "construct a decomposition witness");
  dec->add_option("--theorem", theorem, "3.3|3.4|3.5")->required();
  dec->add_option("--ideal", ideal, "P as comma-separated elements")->required();
  dec->add_option("--element", element, "the element to decompose")->required();
  dec->add_option("--blocks", blocks, "bi-ideal blocks, one comma list each")
      ->required()
      ->expected(-1);
  dec->add_option("--x", free_x, "free parameter x (default: quantify over N)");
  dec->add_option("file", file)->required();

  CLI::App* cat = app.add_subcommand("catalog", "shipped instance catalog");
  cat->add_option("--max-order", max_order, "largest order to include");
  cat->add_option("--export", export_dir, "write .nr/.nr.json files here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help/--version
    app.exit(e);
    return kExitInputError;
  }

  auto started = std::chrono::steady_clock::now();
  int status = kExitInputError;
  try {
    if (check->parsed()) status = run_check(file);
    else if (enu->parsed()) status = run_enumerate(file, kind);
    else if (reg->parsed()) status = run_regularity(file, ideal, all_ideals, strict);
    else if (ver->parsed()) status = run_verify(file, theorem, all, ideal, max_chain);
    else if (dec->parsed()) status = run_decompose(file, theorem, ideal.value_or("0"),
                                                   element, blocks, free_x);
    else if (cat->parsed()) status = run_catalog(max_order, export_dir);
  } catch (const InternalCheckError& e) {
    std::cerr << "nearring: internal check tripped: " << e.what() << "\n";
    return kExitCheckFailed;
  } catch (const AxiomViolationError& e) {
    std::cerr << "nearring: invalid nearring: " << e.what() << "\n";
    for (const AxiomFailure& f : e.failures) {
      std::cerr << "  " << axiom_name(f.axiom) << " at (";
      for (int i = 0; i < 3; ++i)
        if (f.witness[size_t(i)] >= 0) std::cerr << (i ? "," : "") << f.witness[size_t(i)];
      std::cerr << ")\n";
    }
    return kExitInputError;
  } catch (const Error& e) {
    std::cerr << "nearring: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "nearring: " << e.what() << "\n";
    return kExitInputError;
  }

  auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - started);
  std::cerr << "nearring: completed in " << elapsed.count() << " ms\n";
  return status;
}
