#include "linext/cli.hpp"

#include <CLI11.hpp>
#include <iostream>
#include <memory>
#include <sstream>

#include "linext/cardinality.hpp"
#include "linext/constructions.hpp"
#include "linext/error.hpp"
#include "linext/io.hpp"
#include "linext/verify.hpp"

namespace linext {

namespace {

void require(const std::string& value, const char* flag, const std::string& sub) {
  if (value.empty()) throw InputError(sub + ": " + flag + " is required");
}

// Writes to --out when given, else to `fallback`.
void deliver(const RunConfig& config, const std::string& content, std::ostream& fallback) {
  if (config.out_path.empty()) {
    fallback << content;
  } else {
    write_file(config.out_path, content);
  }
}

std::shared_ptr<const AutomorphismGroup> automorphisms_for(const RunConfig& config) {
  auto group = parse_group_spec(config.group_spec, config.aut_cap);
  AutEnumOptions options;
  options.size_cap = config.aut_cap;
  return std::make_shared<const AutomorphismGroup>(enumerate_automorphisms(group, options));
}

IotaSearch iota_search(const RunConfig& config) {
  return config.exhaustive_iota ? IotaSearch::Exhaustive : IotaSearch::LeftInverse;
}

LoopCocycle load_cocycle(const RunConfig& config, const FiniteLoop& loop) {
  require(config.cocycle_path, "--cocycle", config.subcommand);
  CocycleParseOptions options;
  options.aut.size_cap = config.aut_cap;
  auto cocycle = parse_cocycle_file(config.cocycle_path, loop, options);
  if (!config.group_spec.empty() && !(parse_group_spec(config.group_spec, config.aut_cap) == cocycle.group())) {
    throw InputError("--group " + config.group_spec + " does not match the cocycle's group " + cocycle.group().spec());
  }
  return cocycle;
}

std::string pair_list(const std::vector<LoopPair>& pairs) {
  std::string out;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (i) out += ' ';
    out += "(" + std::to_string(pairs[i].first) + "," + std::to_string(pairs[i].second) + ")";
  }
  return out;
}

int cmd_check(const RunConfig& config, std::ostream& out) {
  require(config.loop_path, "--loop", "check");
  const auto text = read_file(config.loop_path);
  std::istringstream in(text);
  const auto loop = parse_loop(in);
  auto report = check_loop(loop, iota_search(config));
  out << "fingerprint.loop=" << fingerprint(emit_loop(loop)) << '\n' << report.to_text();
  return report.passed ? kExitOk : kExitPropertyFails;
}

int cmd_aut(const RunConfig& config, std::ostream& out) {
  require(config.group_spec, "--group", "aut");
  const auto aut = automorphisms_for(config);
  std::ostringstream s;
  s << "aut.group=" << aut->group().spec() << '\n'
    << "aut.size=" << aut->size() << '\n'
    << "aut.identity=" << aut->identity() << '\n';
  for (AutIndex i = 0; i < aut->size(); ++i) {
    s << "aut." << i << '=';
    const auto& table = (*aut)[i].table();
    for (std::size_t j = 0; j < table.size(); ++j) s << (j ? " " : "") << table[j];
    s << '\n';
  }
  deliver(config, s.str(), out);
  return kExitOk;
}

int cmd_orbits(const RunConfig& config, std::ostream& out) {
  require(config.loop_path, "--loop", "orbits");
  const auto loop = parse_loop_file(config.loop_path);
  OrbitMode mode = OrbitMode::Gamma;
  const std::string name = config.mode.empty() ? "gamma" : config.mode;
  if (name == "phi") {
    mode = OrbitMode::Phi;
  } else if (name == "psi") {
    mode = OrbitMode::Psi;
  } else if (name != "gamma") {
    throw InputError("orbits: --mode must be phi, psi or gamma");
  }
  const SigmaSet sigma(loop);
  const auto dec = orbit_decomposition(loop, mode);
  std::ostringstream s;
  s << "sigma.size=" << sigma.size() << '\n'
    << "sigma=" << pair_list(sigma.pairs()) << '\n'
    << "complement.size=" << sigma.complement().size() << '\n'
    << "mode=" << name << '\n'
    << "orbits=" << dec.orbits.size() << '\n';
  for (std::size_t k = 0; k < dec.orbits.size(); ++k) {
    const auto& orbit = dec.orbits[k];
    s << "orbit." << k << '=' << pair_list(orbit.members) << '\n';
  }
  deliver(config, s.str(), out);
  return kExitOk;
}

int cmd_construct(const RunConfig& config, std::ostream& out, std::ostream& err) {
  require(config.loop_path, "--loop", "construct");
  require(config.group_spec, "--group", "construct");
  const auto loop = parse_loop_file(config.loop_path);
  const auto aut = automorphisms_for(config);
  ChoiceSource choice(config.seed);
  const std::string& m = config.mode;
  OrbitMode orbit_mode;
  std::optional<LoopCocycle> cocycle;
  if (m == "lip") {
    cocycle = construct_lip_cocycle(loop, aut, choice);
    orbit_mode = OrbitMode::Phi;
  } else if (m == "rip") {
    cocycle = construct_rip_cocycle(loop, aut, choice);
    orbit_mode = OrbitMode::Psi;
  } else if (m == "ip") {
    cocycle = construct_ip_cocycle(loop, aut, choice);
    orbit_mode = OrbitMode::Gamma;
  } else {
    throw InputError("construct: --mode must be lip, rip or ip");
  }
  deliver(config, emit_cocycle(*cocycle), out);
  if (config.report) {
    (config.out_path.empty() ? err : out) << orbit_report(*cocycle, orbit_decomposition(loop, orbit_mode));
  }
  return kExitOk;
}

VerifyTarget verify_target(const std::string& mode) {
  if (mode.empty()) return VerifyTarget::Consistency;
  if (mode == "lip") return VerifyTarget::Lip;
  if (mode == "rip") return VerifyTarget::Rip;
  if (mode == "ip") return VerifyTarget::Ip;
  throw InputError("verify: --mode must be lip, rip or ip");
}

std::string provenance(const FiniteLoop& loop, const LoopCocycle& cocycle) {
  return "fingerprint.loop=" + fingerprint(emit_loop(loop)) + "\nfingerprint.cocycle=" +
         fingerprint(emit_cocycle(cocycle)) + "\n";
}

int cmd_extend(const RunConfig& config, std::ostream& out, std::ostream& err) {
  require(config.loop_path, "--loop", "extend");
  const auto loop = parse_loop_file(config.loop_path);
  const auto cocycle = load_cocycle(config, loop);
  const auto ext = build_extension(cocycle);
  const auto report = verify_cocycle(cocycle, verify_target(config.mode), iota_search(config));
  deliver(config, emit_extension(ext), out);
  (config.out_path.empty() ? err : out) << provenance(loop, cocycle) << report.to_text();
  return report.passed ? kExitOk : kExitPropertyFails;
}

int cmd_verify(const RunConfig& config, std::ostream& out) {
  require(config.loop_path, "--loop", "verify");
  const auto loop = parse_loop_file(config.loop_path);
  const auto cocycle = load_cocycle(config, loop);
  const auto report = verify_cocycle(cocycle, verify_target(config.mode), iota_search(config));
  deliver(config, provenance(loop, cocycle) + report.to_text(), out);
  return report.passed ? kExitOk : kExitPropertyFails;
}

int cmd_feasible(const RunConfig& config, std::ostream& out) {
  const auto certs = enumerate_feasible(config.max_l);
  std::ostringstream s;
  auto row = [&](const char* label, auto field) {
    s << label << ':';
    for (std::size_t i = 0; i < certs.size(); ++i) s << (i ? ", " : " ") << field(certs[i]);
    s << '\n';
  };
  row("k", [](const CardinalityCertificate& c) { return c.k; });
  row("h", [](const CardinalityCertificate& c) { return c.h; });
  row("l", [](const CardinalityCertificate& c) { return c.l; });
  s << "feasible.max_l=" << config.max_l << '\n' << "feasible.count=" << certs.size() << '\n';
  for (std::size_t i = 0; i < certs.size(); ++i) {
    s << "feasible." << i << "=k=" << certs[i].k << ",h=" << certs[i].h << ",l=" << certs[i].l << '\n';
  }
  deliver(config, s.str(), out);
  return kExitOk;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    const auto& sub = config.subcommand;
    if (sub == "check") return cmd_check(config, out);
    if (sub == "aut") return cmd_aut(config, out);
    if (sub == "orbits") return cmd_orbits(config, out);
    if (sub == "construct") return cmd_construct(config, out, err);
    if (sub == "extend") return cmd_extend(config, out, err);
    if (sub == "verify") return cmd_verify(config, out);
    if (sub == "feasible") return cmd_feasible(config, out);
    throw InputError("unknown subcommand '" + sub + "'");
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << '\n';
  } catch (const PreconditionError& e) {
    err << "precondition error: " << e.what() << '\n';
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
  }
  return kExitInputError;
}

int run_command_line(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Linear abelian extensions of finite abelian groups by finite loops", "linext"};
  app.require_subcommand(1);
  RunConfig config;

  auto loop_opt = [&](CLI::App* sub) { sub->add_option("--loop", config.loop_path, "loop file"); };
  auto group_opt = [&](CLI::App* sub) {
    sub->add_option("--group", config.group_spec, "kernel group, e.g. 2,2");
    sub->add_option("--aut-cap", config.aut_cap, "maximum group size")->capture_default_str();
  };
  auto out_opt = [&](CLI::App* sub) { sub->add_option("--out", config.out_path, "output path"); };
  auto iota_opt = [&](CLI::App* sub) {
    sub->add_flag("--exhaustive-iota", config.exhaustive_iota, "search iota instead of using e/x");
  };

  auto* check = app.add_subcommand("check", "brute-force property report for a loop file");
  loop_opt(check);
  iota_opt(check);

  auto* aut = app.add_subcommand("aut", "list Aut(A) in canonical order");
  group_opt(aut);
  out_opt(aut);

  auto* orbits = app.add_subcommand("orbits", "boundary set and orbit decomposition");
  loop_opt(orbits);
  orbits->add_option("--mode", config.mode, "phi | psi | gamma");
  out_opt(orbits);

  auto* construct = app.add_subcommand("construct", "seeded LIP/RIP/IP cocycle construction");
  loop_opt(construct);
  group_opt(construct);
  construct->add_option("--mode", config.mode, "lip | rip | ip")->required();
  construct->add_option("--seed", config.seed, "choice seed")->capture_default_str();
  construct->add_flag("--report", config.report, "also print the orbit table");
  out_opt(construct);

  auto* extend = app.add_subcommand("extend", "build F(P,Q) as a loop file plus a verification report");
  loop_opt(extend);
  group_opt(extend);
  extend->add_option("--cocycle", config.cocycle_path, "cocycle file");
  extend->add_option("--mode", config.mode, "lip | rip | ip");
  iota_opt(extend);
  out_opt(extend);

  auto* verify = app.add_subcommand("verify", "brute-force and condition checks of a cocycle");
  loop_opt(verify);
  group_opt(verify);
  verify->add_option("--cocycle", config.cocycle_path, "cocycle file");
  verify->add_option("--mode", config.mode, "lip | rip | ip");
  iota_opt(verify);
  out_opt(verify);

  auto* feasible = app.add_subcommand("feasible", "feasible loop orders (k, h, l)");
  feasible->add_option("--max-l", config.max_l, "largest loop order")->capture_default_str();
  out_opt(feasible);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  config.subcommand = app.get_subcommands().front()->get_name();
  return run(config, out, err);
}

}  // namespace linext
