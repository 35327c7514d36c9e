#include "pr/cli.hpp"

#include <iomanip>
#include <iostream>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "pr/constructive.hpp"
#include "pr/copy_search.hpp"
#include "pr/errors.hpp"
#include "pr/extremal.hpp"
#include "pr/numerics.hpp"
#include "pr/ramsey_search.hpp"

namespace pr::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr const char* kVersion = "posetram 1.0.0 (coloring-format 1)";

json vertex_list(const std::vector<Vertex>& vs) {
  json arr = json::array();
  for (const Vertex& v : vs) arr.push_back(v.to_string());
  return arr;
}

json embedding_json(const MonoCopy& copy) {
  json j;
  j["color"] = color_name(copy.color);
  j["pattern"] = copy.pattern_name;
  j["kind"] = kind_name(copy.embedding.kind);
  j["map"] = vertex_list(copy.embedding.map);
  j["verified"] = true;  // constructions re-verify before returning
  return j;
}

Coloring load_coloring(const std::string& file, const std::string& oracle, std::uint32_t n_host,
                       std::optional<std::uint64_t> budget) {
  if (!file.empty()) {
    Coloring c = Coloring::read_file(file);
    if (c.dim() != n_host)
      throw std::invalid_argument("coloring file has N=" + std::to_string(c.dim()) +
                                  ", expected " + std::to_string(n_host));
    return c;
  }
  if (!oracle.empty()) return make_oracle(oracle, n_host, budget);
  throw CLI::ValidationError("provide --coloring <file> or --oracle <spec>");
}

struct Ctx {
  std::ostream& out;
  std::ostream& err;
  bool as_json = false;
};

void emit(Ctx& ctx, const json& j, const std::string& plain) {
  if (ctx.as_json)
    ctx.out << j.dump() << "\n";
  else
    ctx.out << plain << "\n";
}

int cmd_alpha(Ctx& ctx, std::uint64_t n) {
  std::uint64_t a = sperner_alpha(n);
  emit(ctx, json{{"op", "alpha"}, {"n", n}, {"value", a}}, std::to_string(a));
  return 0;
}

int cmd_nstar(Ctx& ctx, std::uint64_t n) {
  std::uint64_t v = n_star(n);
  emit(ctx, json{{"op", "nstar"}, {"n", n}, {"value", v}}, std::to_string(v));
  return 0;
}

int cmd_bounds(Ctx& ctx, std::uint64_t m, std::uint64_t n, std::optional<double> eps) {
  json blob{{"theorem_tag", "blob"},
            {"m", m},
            {"n", n},
            {"value", blob_host_dimension(m, n)}};
  emit(ctx, blob, "blob: N = " + std::to_string(blob_host_dimension(m, n)));
  if (eps) {
    BoundReport r = qmqn_bound(m, n, *eps);  // throws when the condition fails
    json j{{"theorem_tag", r.theorem_tag}, {"m", r.m},          {"n", r.n},
           {"epsilon", r.epsilon},         {"value", r.value}};
    if (r.headline) j["headline"] = *r.headline;
    emit(ctx, j,
         r.theorem_tag + ": value = " + std::to_string(r.value) +
             " (epsilon = " + std::to_string(r.epsilon) + ")");
  }
  if (m == n) {
    DiamondBounds d = diamond_bounds(n);
    json dj{{"theorem_tag", "diamond-diagonal"},
            {"n", n},
            {"lower", d.lower},
            {"upper", d.upper},
            {"degenerate", d.degenerate}};
    emit(ctx, dj,
         "diamond-diagonal: " + std::to_string(d.lower) + " <= R <= " + std::to_string(d.upper));
    if (n >= 2) {
      ForkBounds fk = fork_bounds(n);
      json fj{{"theorem_tag", "fork-diagonal"}, {"n", n}, {"lower", fk.lower},
              {"upper", fk.upper}};
      if (fk.sharpened) fj["sharpened_upper"] = *fk.sharpened;
      emit(ctx, fj,
           "fork-diagonal: " + std::to_string(fk.lower) + " <= R <= " + std::to_string(fk.upper));
    }
  }
  return 0;
}

int cmd_constants(Ctx& ctx) {
  EntropyConstants k = entropy_constants();
  WeakBudgetReport w = check_weak_budget(1);
  if (ctx.as_json) {
    json j{{"op", "constants"},
           {"q", k.q},
           {"c", k.c},
           {"d", k.d},
           {"integral_q", k.integral_q},
           {"minimize_lhs", (1.0 - k.q) + 2.0 * k.integral_q},
           {"minimize_ok", w.constants_ok && w.middle_ok}};
    ctx.out << j.dump() << "\n";
  } else {
    ctx.out << std::setprecision(12) << std::fixed;
    ctx.out << "q          = " << k.q << "\n";
    ctx.out << "c          = " << k.c << "\n";
    ctx.out << "d          = " << k.d << "\n";
    ctx.out << "int_0^q H  = " << k.integral_q << "\n";
    ctx.out << "(1-q)+2I   = " << (1.0 - k.q) + 2.0 * k.integral_q
            << (w.constants_ok && w.middle_ok ? "  <= 0.956 <= 0.96: ok" : "  VIOLATED") << "\n";
  }
  return 0;
}

int cmd_find_copy(Ctx& ctx, const std::string& file, const std::string& pspec,
                  const std::string& color_s, const std::string& kind_s, bool print_map) {
  Coloring coloring = Coloring::read_file(file);
  FinitePoset p = make_poset(pspec);
  Color color = color_s == "blue" ? Color::Blue : Color::Red;
  EmbedKind kind = kind_s == "weak" ? EmbedKind::Weak : EmbedKind::Induced;
  auto found = find_mono_copy(GroundSet{coloring.dim()}, coloring, p, color, kind);
  if (!found) {
    emit(ctx, json{{"op", "find-copy"}, {"result", "NotFound"}}, "NotFound");
    return 1;
  }
  if (print_map) {
    json j{{"op", "find-copy"},
           {"result", "Found"},
           {"pattern", pspec},
           {"color", color_s},
           {"kind", kind_name(kind)},
           {"map", vertex_list(found->map)}};
    emit(ctx, j, "Found");
  } else {
    emit(ctx, json{{"op", "verify-coloring"}, {"result", "Found"}}, "Found");
  }
  return 0;
}

int cmd_ramsey(Ctx& ctx, const std::string& pspec, const std::string& qspec, bool weak,
               std::uint32_t nmax, std::optional<std::uint64_t> budget, unsigned threads,
               const std::string& witness_out) {
  FinitePoset p = make_poset(pspec);
  FinitePoset q = make_poset(qspec);
  SearchResult r = weak ? weak_ramsey_exact(p, q, nmax, budget, threads)
                        : ramsey_number_exact(p, q, nmax, budget, threads);
  if (!r.value) {
    emit(ctx,
         json{{"op", "ramsey"}, {"p", pspec}, {"q", qspec}, {"weak", weak},
              {"result", "Unknown"}, {"nodes", r.stats.nodes}},
         "Unknown");
    return 1;
  }
  if (!witness_out.empty() && r.witness) r.witness->write_file(witness_out);
  json j{{"op", "ramsey"},   {"p", pspec},
         {"q", qspec},       {"weak", weak},
         {"value", *r.value}, {"nodes", r.stats.nodes},
         {"seconds", r.stats.seconds}};
  emit(ctx, j, std::to_string(*r.value));
  return 0;
}

int cmd_witness(Ctx& ctx, const std::string& kind_s, std::uint32_t n, const std::string& out_file) {
  WitnessKind kind = kind_s == "diamond" ? WitnessKind::Diamond : WitnessKind::Fork;
  Coloring w = witness_coloring(kind, n);
  if (out_file.empty())
    ctx.out << w.to_file_string();
  else
    w.write_file(out_file);
  return 0;
}

json identities_json(const std::vector<LayerIdentity>& rows) {
  json arr = json::array();
  for (const auto& r : rows)
    arr.push_back(json{{"name", r.name}, {"layer", r.layer}, {"lhs", r.lhs}, {"rhs", r.rhs},
                       {"ok", r.ok}});
  return arr;
}

int cmd_construct(Ctx& ctx, const std::string& mode, std::uint64_t m, std::uint64_t n,
                  double eps, std::uint64_t n_host_opt, const std::string& file,
                  const std::string& oracle, std::optional<std::uint64_t> budget,
                  std::optional<std::uint64_t> probe, bool override_condition) {
  if (mode == "blob") {
    std::uint64_t n_host = blob_host_dimension(m, n);
    Coloring c = load_coloring(file, oracle, static_cast<std::uint32_t>(n_host), budget);
    MonoCopy copy = blob_partition_embed(m, n, c);
    json j = embedding_json(copy);
    j["construct"] = "blob";
    emit(ctx, j, std::string("found ") + color_name(copy.color) + " " + copy.pattern_name);
    return 0;
  }
  if (mode == "diamond" || mode == "fork") {
    std::uint64_t n_host = mode == "diamond"
                               ? sperner_alpha(n) + sperner_alpha(2 * n - 1)
                               : n_plus(n);
    Coloring c = load_coloring(file, oracle, static_cast<std::uint32_t>(n_host), budget);
    MonoCopy copy = mode == "diamond" ? find_mono_diamond(static_cast<std::uint32_t>(n), c)
                                      : find_mono_fork(static_cast<std::uint32_t>(n), c);
    json j = embedding_json(copy);
    j["construct"] = mode;
    emit(ctx, j, std::string("found ") + color_name(copy.color) + " " + copy.pattern_name);
    return 0;
  }
  if (mode == "qmqn") {
    QmqnPlan plan = make_qmqn_plan(m, n, eps, override_condition);
    Coloring c = load_coloring(file, oracle, static_cast<std::uint32_t>(plan.host_dim), budget);
    QmqnOptions opts;
    opts.probe_limit = probe;
    opts.override_condition = override_condition;
    QmqnResult r = qmqn_construct(m, n, eps, c, opts);
    json sample = json::array();
    for (const auto& [a, img] : r.sample)
      sample.push_back(json::array({a.to_string(), img.to_string()}));
    json j{{"construct", "qmqn"},
           {"color", color_name(r.color)},
           {"copy_dim", r.copy_dim},
           {"host_dim", r.plan.host_dim},
           {"t_mu", r.plan.t_mu},
           {"t_eta", r.plan.t_eta},
           {"phase1_fired", r.phase1_fired},
           {"presumed_red", r.presumed_red},
           {"queries", r.queries_used},
           {"sample_verified", r.sample_verified},
           {"identities", identities_json(r.identities)},
           {"sample", sample}};
    emit(ctx, j,
         std::string("found ") + color_name(r.color) + " cube of dimension " +
             std::to_string(r.copy_dim) + " (sampled verification)");
    return 0;
  }
  if (mode == "weak") {
    Coloring c = load_coloring(file, oracle, static_cast<std::uint32_t>(n_host_opt), budget);
    SausageOutcome r = sausage_chain_build(static_cast<std::uint32_t>(n), n_host_opt, c);
    json j{{"construct", "weak"},
           {"majority", color_name(r.majority)},
           {"host_dim", r.chain.host_dim},
           {"middle_dim", r.chain.middle_dim},
           {"sausage_sizes", r.chain.sausage_sizes}};
    if (r.minority_cube) {
      j["outcome"] = "minority-cube";
      j["copy"] = embedding_json(*r.minority_cube);
      emit(ctx, j,
           std::string("found ") + color_name(r.minority_cube->color) + " induced cube");
    } else {
      const WeakCopyWitness& w = *r.witness;
      j["outcome"] = "weak-witness";
      j["color"] = color_name(w.color);
      j["s"] = w.s;
      j["t"] = w.t;
      j["also_induced"] = w.also_induced;
      j["map"] = vertex_list(w.weak_embedding.map);
      emit(ctx, j,
           std::string("found ") + color_name(w.color) + " weak cube witness (s=" +
               std::to_string(w.s) + ", t=" + std::to_string(w.t) + ")");
    }
    return 0;
  }
  throw CLI::ValidationError("construct mode must be one of blob|qmqn|diamond|fork|weak");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"poset Ramsey toolkit"};
  app.set_version_flag("--version", kVersion);
  app.fallthrough();
  Ctx ctx{out, err, false};
  app.add_flag("--json", ctx.as_json, "emit line-delimited JSON objects");

  std::uint64_t n_val = 0, m_val = 0, host_val = 0;
  double eps_val = 0.0;
  bool has_eps = false;
  std::string pspec, qspec, color_s = "red", kind_s = "induced", file, oracle, mode, out_file;
  bool weak = false, override_condition = false;
  std::uint32_t nmax = 6;
  unsigned threads = 1;
  std::uint64_t budget_v = 0, probe_v = 0;
  bool has_budget = false, has_probe = false;

  auto* alpha_cmd = app.add_subcommand("alpha", "Sperner number");
  alpha_cmd->add_option("--n", n_val)->required();

  auto* nstar_cmd = app.add_subcommand("nstar", "fork threshold dimension");
  nstar_cmd->add_option("--n", n_val)->required();

  auto* bounds_cmd = app.add_subcommand("bounds", "closed-form Ramsey bounds");
  bounds_cmd->add_option("--m", m_val)->required();
  bounds_cmd->add_option("--n", n_val)->required();
  bounds_cmd->add_option("--epsilon", eps_val)->each([&](const std::string&) { has_eps = true; });

  auto* constants_cmd = app.add_subcommand("constants", "entropy constants");

  auto* verify_cmd = app.add_subcommand("verify-coloring", "search a coloring for a mono copy");
  verify_cmd->add_option("--coloring", file)->required();
  verify_cmd->add_option("--p", pspec)->required();
  verify_cmd->add_option("--color", color_s)->check(CLI::IsMember({"blue", "red"}));
  verify_cmd->add_option("--kind", kind_s)->check(CLI::IsMember({"induced", "weak"}));

  auto* find_cmd = app.add_subcommand("find-copy", "find and print a mono copy");
  find_cmd->add_option("--coloring", file)->required();
  find_cmd->add_option("--p", pspec)->required();
  find_cmd->add_option("--color", color_s)->check(CLI::IsMember({"blue", "red"}));
  find_cmd->add_option("--kind", kind_s)->check(CLI::IsMember({"induced", "weak"}));

  auto* ramsey_cmd = app.add_subcommand("ramsey", "exact Ramsey number search");
  ramsey_cmd->add_option("--p", pspec)->required();
  ramsey_cmd->add_option("--q", qspec)->required();
  ramsey_cmd->add_flag("--weak", weak);
  ramsey_cmd->add_option("--nmax", nmax);
  ramsey_cmd->add_option("--budget", budget_v)->each([&](const std::string&) { has_budget = true; });
  ramsey_cmd->add_option("--threads", threads);
  ramsey_cmd->add_option("--witness-out", out_file);

  auto* construct_cmd = app.add_subcommand("construct", "run a constructive proof");
  construct_cmd->add_option("mode", mode)->required();
  construct_cmd->add_option("--m", m_val);
  construct_cmd->add_option("--n", n_val);
  construct_cmd->add_option("--epsilon", eps_val);
  construct_cmd->add_option("--N", host_val);
  construct_cmd->add_option("--coloring", file);
  construct_cmd->add_option("--oracle", oracle);
  construct_cmd->add_option("--budget", budget_v)->each([&](const std::string&) { has_budget = true; });
  construct_cmd->add_option("--probe", probe_v)->each([&](const std::string&) { has_probe = true; });
  construct_cmd->add_flag("--override", override_condition);

  auto* witness_cmd = app.add_subcommand("witness", "write an extremal witness coloring");
  witness_cmd->add_option("--kind", kind_s)->required()->check(CLI::IsMember({"diamond", "fork"}));
  witness_cmd->add_option("--n", n_val)->required();
  witness_cmd->add_option("--out", out_file);

  app.require_subcommand(0, 1);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
    std::optional<std::uint64_t> budget = has_budget ? std::optional(budget_v) : std::nullopt;
    std::optional<std::uint64_t> probe = has_probe ? std::optional(probe_v) : std::nullopt;
    if (alpha_cmd->parsed()) return cmd_alpha(ctx, n_val);
    if (nstar_cmd->parsed()) return cmd_nstar(ctx, n_val);
    if (bounds_cmd->parsed())
      return cmd_bounds(ctx, m_val, n_val, has_eps ? std::optional(eps_val) : std::nullopt);
    if (constants_cmd->parsed()) return cmd_constants(ctx);
    if (verify_cmd->parsed()) return cmd_find_copy(ctx, file, pspec, color_s, kind_s, false);
    if (find_cmd->parsed()) return cmd_find_copy(ctx, file, pspec, color_s, kind_s, true);
    if (ramsey_cmd->parsed())
      return cmd_ramsey(ctx, pspec, qspec, weak, nmax, budget, threads, out_file);
    if (construct_cmd->parsed())
      return cmd_construct(ctx, mode, m_val, n_val, eps_val, host_val, file, oracle, budget,
                           probe, override_condition);
    if (witness_cmd->parsed())
      return cmd_witness(ctx, kind_s, static_cast<std::uint32_t>(n_val), out_file);
    err << app.help();
    return 2;
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForVersion& e) {
    out << kVersion << "\n";
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const ConstructionBug& e) {
    err << "internal bug certificate: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    err << "internal error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    err << e.what() << "\n";
    return 1;
  }
}

}  // namespace pr::cli
