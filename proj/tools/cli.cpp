#include "subfactor/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "subfactor/classification.hpp"
#include "subfactor/errors.hpp"
#include "subfactor/imprimitivity.hpp"
#include "subfactor/induction.hpp"
#include "subfactor/io.hpp"
#include "subfactor/selftest.hpp"
#include "subfactor/tower.hpp"

namespace subfactor::cli {

namespace {

using io::Json;

struct RunConfig
{
  std::string group_path;
  std::string subgroup = "all";
  std::string rep = "trivial";
  std::string algebra_path;
  std::string out_path;
  std::string format = "json";
  int n_max = 6;
  std::uint64_t seed = 1;
  double tol = kTolerance;
  std::size_t subgroup_cap = kDefaultSubgroupCap;
  bool as_sigma = false;
  bool every_subgroup = false;
};

struct Inputs
{
  GroupPtr group;
  Subgroup subgroup;
  ProjectiveRep rep;
};

Subgroup parse_subgroup(const GroupPtr& g, const std::string& spec)
{
  if (spec == "all")
    return Subgroup::whole(g);
  std::vector<Element> gens;
  std::stringstream ss(spec);
  std::string token;
  while (std::getline(ss, token, ',')) {
    token.erase(0, token.find_first_not_of(" \t"));
    token.erase(token.find_last_not_of(" \t") + 1);
    if (token.empty())
      continue;
    auto e = g->find(token);
    if (!e)
      throw ValidationError("unknown element '" + token + "' in --subgroup", "subgroup");
    gens.push_back(*e);
  }
  return Subgroup::generated_by(g, gens);
}

/// --rep on the subgroup: trivial, regular, or a rep file whose domain must
/// be the subgroup (or defines it when --subgroup is not given).
Inputs load_inputs(const RunConfig& cfg, bool subgroup_given)
{
  if (cfg.group_path.empty())
    throw ValidationError("--group is required", "group");
  GroupPtr g = io::load_group(cfg.group_path);
  Subgroup h = parse_subgroup(g, cfg.subgroup);
  if (cfg.rep == "trivial")
    return {g, h, trivial_rep(h)};
  if (cfg.rep == "regular")
    return {g, h, regular_rep(h)};
  ProjectiveRep pi = io::load_rep(cfg.rep, g, cfg.tol);
  if (subgroup_given && !(pi.domain() == h))
    throw ValidationError("the representation is defined on " + pi.domain().describe() +
                              " but --subgroup gives " + h.describe(),
                          "subgroup");
  Subgroup domain = pi.domain();
  return {g, std::move(domain), std::move(pi)};
}

void require_format(const RunConfig& cfg, std::initializer_list<const char*> allowed)
{
  for (const char* f : allowed)
    if (cfg.format == f)
      return;
  throw ValidationError("format '" + cfg.format + "' is not available for this command", "format");
}

Json character_json(const ClassFunction& chi)
{
  Json j = Json::array();
  const auto& g = chi.classes->domain.group();
  for (int c = 0; c < chi.classes->size(); ++c)
    j.push_back({{"class", g.label(chi.classes->representative(c))},
                 {"value", Json::array({clean(chi.values[c].real()), clean(chi.values[c].imag())})}});
  return j;
}

std::string character_table_text(const ClassFunction& chi)
{
  std::ostringstream out;
  const auto& g = chi.classes->domain.group();
  for (int c = 0; c < chi.classes->size(); ++c) {
    out << std::left << std::setw(16) << g.label(chi.classes->representative(c)) << clean(chi.values[c].real());
    if (clean(chi.values[c].imag()) != 0.0)
      out << (chi.values[c].imag() > 0 ? " + " : " - ") << std::abs(clean(chi.values[c].imag()))
          << "i";
    out << "\n";
  }
  return out.str();
}

std::string cmd_check(const RunConfig& cfg, bool subgroup_given, bool rep_given)
{
  require_format(cfg, {"json", "table"});
  const Inputs in = load_inputs(cfg, subgroup_given);
  const auto classes = conjugacy_classes(Subgroup::whole(in.group));
  Json j;
  j["group"] = {{"order", in.group->order()}, {"classes", classes.size()}};
  j["subgroup"] = io::subgroup_to_json(in.subgroup);
  j["subgroup_normal"] = in.subgroup.is_normal();
  j["normal_core"] = io::subgroup_to_json(core(in.subgroup));
  if (rep_given) {
    j["rep"] = {{"dim", in.rep.dim()},
                {"ordinary", in.rep.is_ordinary()},
                {"projective_kernel", io::subgroup_to_json(projective_kernel(in.rep, in.subgroup))},
                {"condition_holds", check_condition(in.rep)}};
  }
  if (cfg.format == "json")
    return io::dump(j);
  std::ostringstream out;
  out << "group order   " << in.group->order() << " (" << classes.size() << " classes)\n";
  out << "H             " << in.subgroup.describe() << (in.subgroup.is_normal() ? " normal" : "")
      << "\n";
  out << "N(H)          " << core(in.subgroup).describe() << "\n";
  if (rep_given) {
    out << "dim           " << in.rep.dim() << (in.rep.is_ordinary() ? " ordinary" : " projective")
        << "\n";
    out << "proj ker      " << projective_kernel(in.rep, in.subgroup).describe() << "\n";
    out << "condition     " << (check_condition(in.rep) ? "holds" : "fails") << "\n";
  }
  return out.str();
}

std::string emit_induced(const RunConfig& cfg, const InducedRep& ind)
{
  require_format(cfg, {"json", "table"});
  const auto table = character_table(ind.total.domain().parent(), cfg.seed);
  const auto chi = character(ind.total, table.classes);
  const Subgroup ker = kernel(ind.total);
  if (cfg.format == "table") {
    std::ostringstream out;
    out << "dim     " << ind.total.dim() << "\nkernel  " << ker.describe() << "\ncharacter\n"
        << character_table_text(chi);
    return out.str();
  }
  Json j;
  j["dim"] = ind.total.dim();
  j["cosets"] = Json::array();
  for (Element k : ind.cosets.reps())
    j["cosets"].push_back(ind.total.domain().group().label(k));
  j["kernel"] = io::subgroup_to_json(ker);
  j["character"] = character_json(chi);
  j["rep"] = io::rep_to_json(ind.total);
  return io::dump(j);
}

std::string cmd_induce(const RunConfig& cfg, bool subgroup_given)
{
  const Inputs in = load_inputs(cfg, subgroup_given);
  if (!in.rep.is_ordinary())
    throw ValidationError("induce needs an ordinary representation; use sigma for projective psi",
                          "rep");
  return emit_induced(cfg, induce(in.rep, CosetSystem(in.subgroup)));
}

std::string cmd_sigma(const RunConfig& cfg, bool subgroup_given)
{
  const Inputs in = load_inputs(cfg, subgroup_given);
  return emit_induced(cfg, build_sigma(in.rep));
}

ProjectiveRep sigma_of(const RunConfig& cfg, bool subgroup_given)
{
  const Inputs in = load_inputs(cfg, subgroup_given);
  if (!cfg.as_sigma)
    return build_sigma(in.rep).total;
  if (!in.rep.domain().is_whole())
    throw ValidationError("--as-sigma needs a representation of the whole group", "rep");
  return in.rep;
}

std::string cmd_tower(const RunConfig& cfg, bool subgroup_given)
{
  require_format(cfg, {"json", "table"});
  const auto sigma = sigma_of(cfg, subgroup_given);
  const auto t = tower(sigma, cfg.n_max, character_table(sigma.domain().parent(), cfg.seed));
  return cfg.format == "json" ? io::dump(io::tower_to_json(t)) : io::tower_to_table(t);
}

std::string cmd_graph(const RunConfig& cfg, bool subgroup_given)
{
  require_format(cfg, {"json", "dot"});
  const auto sigma = sigma_of(cfg, subgroup_given);
  const auto g = principal_graph(sigma, character_table(sigma.domain().parent(), cfg.seed), cfg.seed);
  return cfg.format == "json" ? io::dump(io::graph_to_json(g)) : io::graph_to_dot(g);
}

std::string rep_label(const RunConfig& cfg)
{
  if (cfg.rep == "trivial" || cfg.rep == "regular")
    return cfg.rep;
  return std::filesystem::path(cfg.rep).stem().string();
}

std::string cmd_report(const RunConfig& cfg, bool subgroup_given)
{
  require_format(cfg, {"json", "table", "dot"});
  const Inputs in = load_inputs(cfg, subgroup_given);
  const auto table = character_table(in.group, cfg.seed);
  const auto rec = report(in.rep, table, {cfg.n_max, cfg.seed}, rep_label(cfg));
  if (cfg.format == "dot")
    return io::graph_to_dot(rec.graph);
  return cfg.format == "json" ? io::dump(io::record_to_json(rec)) : io::record_to_table(rec);
}

std::string cmd_enumerate(const RunConfig& cfg, bool subgroup_given, bool rep_given)
{
  require_format(cfg, {"json", "table"});
  EnumerateOptions opts;
  opts.report = {cfg.n_max, cfg.seed};
  opts.up_to_conjugacy = !cfg.every_subgroup;
  opts.subgroup_cap = cfg.subgroup_cap;
  GroupPtr g;
  if (rep_given) {
    Inputs in = load_inputs(cfg, subgroup_given);
    g = in.group;
    opts.extra.emplace_back(rep_label(cfg), std::move(in.rep));
  } else {
    if (cfg.group_path.empty())
      throw ValidationError("--group is required", "group");
    g = io::load_group(cfg.group_path);
  }
  const auto recs = enumerate(g, opts);
  if (cfg.format == "table")
    return io::records_to_table(recs);
  Json arr = Json::array();
  for (const auto& rec : recs)
    arr.push_back(io::record_to_json(rec));
  return io::dump(arr);
}

std::string cmd_decompose(const RunConfig& cfg, bool subgroup_given)
{
  require_format(cfg, {"json"});
  if (cfg.algebra_path.empty())
    throw ValidationError("--algebra is required", "algebra");
  const Inputs in = load_inputs(cfg, subgroup_given);
  if (!in.rep.domain().is_whole())
    throw ValidationError("decompose needs sigma on the whole group", "rep");
  const auto b = io::load_algebra(cfg.algebra_path, cfg.seed);
  if (b.ambient() != in.rep.dim())
    throw ValidationError("algebra and representation have different dimensions", "algebra");
  Json j = io::system_to_json(decompose(in.rep, b, cfg.seed));
  j["algebra_dim"] = b.dim();
  j["added_by_closure"] = b.added_by_closure();
  return io::dump(j);
}

std::string cmd_selftest(const RunConfig& cfg, bool& all_passed)
{
  require_format(cfg, {"table", "json"});
  const auto results = selftest::run_all(cfg.seed);
  all_passed = std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed; });
  if (cfg.format == "json") {
    Json arr = Json::array();
    for (const auto& r : results)
      arr.push_back({{"check", r.name}, {"passed", r.passed}, {"cases", r.cases}, {"detail", r.detail}});
    return io::dump(arr);
  }
  std::ostringstream out;
  for (const auto& r : results)
    out << (r.passed ? "PASS " : "FAIL ") << std::left << std::setw(26) << r.name << r.detail
        << "\n";
  return out.str();
}

void write_error(std::ostream& err, const std::string& kind, const std::string& message,
                 const std::string& field = {})
{
  Json j;
  j["error"] = kind;
  j["message"] = message;
  if (!field.empty())
    j["field"] = field;
  err << j.dump() << "\n";
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
  RunConfig cfg;
  CLI::App app{"Invariants of the subfactors R^G in (R (x) L(C^r))^H for finite groups", "subfactor"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--group", cfg.group_path, "group file (JSON)");
    sub->add_option("--out", cfg.out_path, "write the result to this file");
    sub->add_option("--seed", cfg.seed, "random seed")->capture_default_str();
    sub->add_option("--tol", cfg.tol, "validation tolerance in (0, 1e-3]")
        ->check(CLI::Validator(
            [](std::string& v) -> std::string {
              const double x = std::stod(v);
              return x > 0.0 && x <= 1e-3 ? "" : "tolerance must lie in (0, 1e-3]";
            },
            "(0, 1e-3]"))
        ->capture_default_str();
  };
  auto add_rep = [&](CLI::App* sub) {
    sub->add_option("--subgroup", cfg.subgroup, "comma-separated element labels, or all")
        ->capture_default_str();
    sub->add_option("--rep", cfg.rep, "representation file, trivial or regular")
        ->capture_default_str();
  };

  auto* check = app.add_subcommand("check", "validate a group and optionally a representation");
  auto* induce_cmd = app.add_subcommand("induce", "induce an ordinary representation of H to G");
  auto* sigma = app.add_subcommand("sigma", "sigma = ind(conj(psi) (x) psi)");
  auto* tower_cmd = app.add_subcommand("tower", "intertwiner dimensions of the sigma towers");
  auto* graph = app.add_subcommand("graph", "principal graph of sigma");
  auto* report_cmd = app.add_subcommand("report", "full invariant record for (G, H, psi)");
  auto* enumerate_cmd = app.add_subcommand("enumerate", "records for every subgroup and character");
  auto* decompose_cmd = app.add_subcommand("decompose", "system of imprimitivity from an algebra");
  auto* selftest_cmd = app.add_subcommand("selftest", "run the embedded acceptance corpus");

  for (auto* sub : {check, induce_cmd, sigma, tower_cmd, graph, report_cmd, enumerate_cmd,
                    decompose_cmd, selftest_cmd})
    add_common(sub);
  for (auto* sub : {check, induce_cmd, sigma, tower_cmd, graph, report_cmd, enumerate_cmd,
                    decompose_cmd})
    add_rep(sub);
  for (auto* sub : {check, induce_cmd, sigma, tower_cmd, graph, report_cmd, enumerate_cmd,
                    decompose_cmd, selftest_cmd})
    sub->add_option("--format", cfg.format, "json, table or dot");
  for (auto* sub : {tower_cmd, graph, report_cmd, enumerate_cmd})
    sub->add_option("--nmax", cfg.n_max, "tower depth cap")->check(CLI::Range(0, 64))->capture_default_str();
  for (auto* sub : {tower_cmd, graph})
    sub->add_flag("--as-sigma", cfg.as_sigma, "--rep is sigma itself on the whole group");
  enumerate_cmd->add_flag("--every-subgroup", cfg.every_subgroup,
                          "do not reduce subgroups up to conjugacy");
  enumerate_cmd->add_option("--subgroup-cap", cfg.subgroup_cap, "maximum number of subgroups")
      ->check(CLI::PositiveNumber);
  decompose_cmd->add_option("--algebra", cfg.algebra_path, "algebra file (JSON)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    write_error(err, "usage", e.what());
    return kValidationFailure;
  }

  auto* sub = app.get_subcommands().front();
  if (sub == selftest_cmd && sub->count("--format") == 0)
    cfg.format = "table";
  const bool subgroup_given = sub->get_option_no_throw("--subgroup") != nullptr &&
                              sub->count("--subgroup") > 0 && cfg.subgroup != "all";
  const bool rep_given = sub->get_option_no_throw("--rep") != nullptr && sub->count("--rep") > 0;

  std::string result;
  int code = kSuccess;
  try {
    if (sub == check)
      result = cmd_check(cfg, subgroup_given, rep_given);
    else if (sub == induce_cmd)
      result = cmd_induce(cfg, subgroup_given);
    else if (sub == sigma)
      result = cmd_sigma(cfg, subgroup_given);
    else if (sub == tower_cmd)
      result = cmd_tower(cfg, subgroup_given);
    else if (sub == graph)
      result = cmd_graph(cfg, subgroup_given);
    else if (sub == report_cmd)
      result = cmd_report(cfg, subgroup_given);
    else if (sub == enumerate_cmd)
      result = cmd_enumerate(cfg, subgroup_given, rep_given);
    else if (sub == decompose_cmd)
      result = cmd_decompose(cfg, subgroup_given);
    else {
      bool passed = false;
      result = cmd_selftest(cfg, passed);
      if (!passed)
        code = kInconsistency;
    }
  } catch (const ValidationError& e) {
    write_error(err, "validation", e.what(), e.field());
    return kValidationFailure;
  } catch (const InconsistencyError& e) {
    write_error(err, "inconsistency", e.what());
    return kInconsistency;
  } catch (const NumericalError& e) {
    write_error(err, "numerical", e.what());
    return kInconsistency;
  }

  if (code != kSuccess) {
    out << result;
    return code;
  }
  if (cfg.out_path.empty()) {
    out << result;
    return kSuccess;
  }
  std::ofstream file(cfg.out_path);
  if (!file) {
    write_error(err, "validation", "cannot write " + cfg.out_path, "out");
    return kValidationFailure;
  }
  file << result;
  return kSuccess;
}

} // namespace subfactor::cli
