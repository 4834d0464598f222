#include "hyper/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>

#include <CLI11.hpp>

#include "hyper/io.hpp"

namespace hyper::cli {

namespace {

using io::json;

constexpr int kOk = 0;
constexpr int kDomainError = 1;
constexpr int kMalformed = 2;

void emit(std::ostream& out, const json& j) { out << j.dump() << '\n'; }

void write_or_print(const json& j, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << j.dump(2) << '\n';
    return;
  }
  std::ofstream f(path);
  if (!f) throw Error(Errc::MalformedInput, "cannot write " + path);
  f << j.dump(2) << '\n';
  out << "wrote " << path << '\n';
}

json summary(const Hyperstructure& h) {
  return {{"depth", h.depth()}, {"elements", h.element_count()}, {"bonds", h.bonds().size()}};
}

Hyperstructure load_hyper(const std::string& path) {
  return io::hyperstructure_from_json(io::read_json_file(path));
}

/// A file path if one exists, otherwise the text itself as a builtin name.
json file_or_builtin(const std::string& arg) {
  if (std::filesystem::exists(arg)) return io::read_json_file(arg);
  return json(arg);
}

int cmd_validate(const std::string& path, const std::string& emit_path, std::ostream& out) {
  const Hyperstructure h = load_hyper(path);
  const auto report = validate(h);
  for (const auto& v : report)
    out << violation_name(v.kind) << " at " << to_string(v.where) << ": " << v.detail << '\n';
  if (report.empty()) out << "structure of depth " << h.depth() << " is valid\n";
  if (!emit_path.empty()) write_or_print(io::to_json(h), emit_path, out);
  emit(out, {{"violations", report.size()}});
  return report.empty() ? kOk : kDomainError;
}

int cmd_build_nest(const std::string& topo_path, const std::string& family_path,
                   const std::string& out_path, std::ostream& out) {
  const auto t = io::topology_from_json(io::read_json_file(topo_path));
  const auto f = io::nest_family_from_json(t, io::read_json_file(family_path));
  const Hyperstructure h = build_nest(t, f);
  write_or_print(io::to_json(h), out_path, out);
  json s = summary(h);
  s["violations"] = validate(h).size();
  emit(out, s);
  return kOk;
}

int cmd_verify_module(const std::vector<std::string>& ring_args, const std::string& module_arg,
                      const std::string& action_arg, bool commuting, std::ostream& out) {
  std::vector<FiniteRing> rings;
  for (const auto& r : ring_args) rings.push_back(io::ring_from_json(file_or_builtin(r)));
  if (rings.empty()) throw Error(Errc::MalformedInput, "at least one --ring is required");

  std::optional<ActionSystem> system;
  if (action_arg == "bimodule" || action_arg == "double-left") {
    if (rings.size() != 1)
      throw Error(Errc::MalformedInput, "builtin action " + action_arg + " takes exactly one ring");
    system = action_arg == "bimodule" ? regular_bimodule(rings.front(), commuting)
                                      : double_left_module(rings.front(), commuting);
  } else {
    if (module_arg.empty()) throw Error(Errc::MalformedInput, "--module is required with an action file");
    auto module = io::module_from_json(file_or_builtin(module_arg));
    auto table = io::action_from_json(io::read_json_file(action_arg));
    const std::size_t params = table.size();
    system = ActionSystem::make(std::move(rings), params, std::move(module), std::move(table), commuting);
  }

  const auto report = verify_module_axioms(*system);
  for (const auto& v : report) out << v.describe(*system) << '\n';
  if (report.empty()) out << "all module axioms hold\n";
  json j = {{"violations", report.size()}};
  if (!report.empty()) j["witness"] = report.front().describe(*system);
  emit(out, j);
  return report.empty() ? kOk : kDomainError;
}

int cmd_classify(const std::string& state_path, const std::string& tree_path, std::ostream& out) {
  const auto s = io::state_from_json(io::read_json_file(state_path));
  const auto tree = io::tree_from_json(io::read_json_file(tree_path));
  const auto result = entanglement_order(s, tree);
  out << "tree " << tree.to_string() << ", order " << result.order << '\n';
  if (result.witness_node) out << "factorization fails at " << *result.witness_node << '\n';
  emit(out, {{"order", result.order},
             {"witness", result.witness_node ? json(*result.witness_node) : json(nullptr)}});
  return kOk;
}

int cmd_globalize(const std::string& assignment_path, const std::string& hyper_path, std::ostream& out) {
  const auto h = load_hyper(hyper_path);
  const auto a = io::assignment_from_json(io::read_json_file(assignment_path), h);
  const auto result = globalize(a);
  for (std::size_t i = 0; i < result.levels.size(); ++i) {
    for (const auto& [key, v] : result.levels[i])
      out << "level " << i << ' ' << key << " = " << render(a.recipient(), v) << '\n';
  }
  for (const auto& issue : result.glue_report)
    out << glue_kind_name(issue.kind) << " at " << to_string(issue.where) << ": " << issue.detail << '\n';
  if (!result.global) {
    emit(out, {{"global", nullptr}, {"glue_issues", result.glue_report.size()}});
    return kDomainError;
  }
  emit(out, {{"global", io::value_to_json(a.recipient(), *result.global)}});
  return kOk;
}

int cmd_tunnel(const std::string& assignment_path, const std::string& hyper_path,
               const std::vector<std::string>& edit_args, std::ostream& out) {
  const auto h = load_hyper(hyper_path);
  const auto a = io::assignment_from_json(io::read_json_file(assignment_path), h);
  LeafValues edits;
  for (const auto& e : edit_args) {
    const auto eq = e.find('=');
    if (eq == std::string::npos || eq == 0) throw Error(Errc::MalformedInput, "edit must read key=value");
    const std::string key = e.substr(0, eq);
    const std::string text = e.substr(eq + 1);
    json v;
    if (std::holds_alternative<TableMonoid>(a.recipient())) {
      v = text;
    } else {
      v = json::parse(text, nullptr, false);
      if (v.is_discarded()) throw Error(Errc::MalformedInput, "edit value for " + key + " is not JSON");
    }
    edits[key] = io::value_from_json(a.recipient(), v);
  }
  const auto [before, after] = tunnel(a, edits);
  out << "global " << render(a.recipient(), before) << " -> " << render(a.recipient(), after) << '\n';
  emit(out, {{"old", io::value_to_json(a.recipient(), before)},
             {"new", io::value_to_json(a.recipient(), after)}});
  return kOk;
}

int cmd_fuse(const std::string& left, const std::string& right, bool add_top,
             const std::string& out_path, std::ostream& out) {
  const auto h = fuse(load_hyper(left), load_hyper(right), add_top);
  write_or_print(io::to_json(h), out_path, out);
  emit(out, summary(h));
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"hyperctl: leveled bond structures, nests, multimodules, tensor states and globalizers"};
  app.name("hyperctl");
  app.require_subcommand(1);

  std::string path, path2, out_path, hyper_path, tree_path, module_arg, action_arg, emit_path;
  std::vector<std::string> rings, edits;
  bool commuting = false, add_top = false;

  auto* validate_cmd = app.add_subcommand("validate", "Check a structure file against every law");
  validate_cmd->add_option("file", path, "Structure JSON")->required();
  validate_cmd->add_option("--emit", emit_path, "Write the canonical JSON form here");

  auto* nest_cmd = app.add_subcommand("build-nest", "Build the structure of a nest family");
  nest_cmd->add_option("topology", path, "Topology JSON")->required();
  nest_cmd->add_option("family", path2, "Nest family JSON")->required();
  nest_cmd->add_option("-o,--out", out_path, "Output file (default: stdout)");

  auto* module_cmd = app.add_subcommand("verify-module", "Check the module axioms of an action system");
  module_cmd->add_option("--ring", rings, "Ring JSON file or builtin Z<n> / M2Z<p>; repeat per ring")
      ->required();
  module_cmd->add_option("--module", module_arg, "Module JSON file or builtin ring name");
  module_cmd->add_option("--action", action_arg,
                         "Action JSON file [w][t][r][m], or builtin bimodule / double-left")
      ->required();
  module_cmd->add_flag("--commuting", commuting, "Require different ring actions to commute");

  auto* classify_cmd = app.add_subcommand("classify-state", "Entanglement order of a state");
  classify_cmd->add_option("state", path, "State JSON")->required();
  classify_cmd->add_option("--tree", tree_path, "Partition tree JSON")->required();

  auto* glob_cmd = app.add_subcommand("globalize", "Push leaf values up to a global value");
  glob_cmd->add_option("assignment", path, "Assignment JSON")->required();
  glob_cmd->add_option("--hyper", hyper_path, "Source structure JSON")->required();

  auto* tunnel_cmd = app.add_subcommand("tunnel", "Edit leaf values and re-globalize");
  tunnel_cmd->add_option("assignment", path, "Assignment JSON")->required();
  tunnel_cmd->add_option("--hyper", hyper_path, "Source structure JSON")->required();
  tunnel_cmd->add_option("--edit", edits, "Leaf edit key=value; repeatable");

  auto* fuse_cmd = app.add_subcommand("fuse", "Levelwise disjoint union of two structures");
  fuse_cmd->add_option("left", path, "Left structure JSON")->required();
  fuse_cmd->add_option("right", path2, "Right structure JSON")->required();
  fuse_cmd->add_flag("--add-top", add_top, "Bind the top level with one new bond");
  fuse_cmd->add_option("-o,--out", out_path, "Output file (default: stdout)");

  auto* dot_cmd = app.add_subcommand("export-dot", "Print a structure as a DOT digraph");
  dot_cmd->add_option("file", path, "Structure JSON")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    emit(out, {{"error", "UsageError"}, {"message", e.what()}});
    return kMalformed;
  }

  try {
    if (validate_cmd->parsed()) return cmd_validate(path, emit_path, out);
    if (nest_cmd->parsed()) return cmd_build_nest(path, path2, out_path, out);
    if (module_cmd->parsed()) return cmd_verify_module(rings, module_arg, action_arg, commuting, out);
    if (classify_cmd->parsed()) return cmd_classify(path, tree_path, out);
    if (glob_cmd->parsed()) return cmd_globalize(path, hyper_path, out);
    if (tunnel_cmd->parsed()) return cmd_tunnel(path, hyper_path, edits, out);
    if (fuse_cmd->parsed()) return cmd_fuse(path, path2, add_top, out_path, out);
    if (dot_cmd->parsed()) {
      out << export_dot(load_hyper(path));
      return kOk;
    }
  } catch (const Error& e) {
    err << e.name() << ": " << e.what() << '\n';
    emit(out, {{"error", e.name()}, {"message", e.what()}});
    return e.code() == Errc::MalformedInput ? kMalformed : kDomainError;
  }
  return kMalformed;
}

}  // namespace hyper::cli
