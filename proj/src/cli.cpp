#include "f2hopf/cli.hpp"

#include <chrono>
#include <functional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "f2hopf/dyer_lashof.hpp"
#include "f2hopf/errors.hpp"
#include "f2hopf/serialize.hpp"
#include "f2hopf/verification.hpp"

namespace f2hopf::cli {

CoalgebraSpec parse_coalgebra_spec(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw PreconditionError("expected FAMILY:K, got '" + text + "'");
  const auto family = parse_family(text.substr(0, colon));
  if (!family) throw PreconditionError("unknown family in '" + text + "'");
  const std::string digits = text.substr(colon + 1);
  std::size_t used = 0;
  std::int64_t k = 0;
  try {
    k = std::stoll(digits, &used);
  } catch (const std::logic_error&) {
    used = 0;
  }
  if (digits.empty() || used != digits.size() || k < 1) {
    throw PreconditionError("expected a positive k in '" + text + "'");
  }
  return {*family, k};
}

namespace {

std::string set_text(const SSet& s) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < s.elements.size(); ++i) os << (i ? "," : "") << s.elements[i];
  os << '}';
  return os.str();
}

std::string list_text(const std::vector<int>& v) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << '}';
  return os.str();
}

Family require_family(const std::string& name) {
  const auto f = parse_family(name);
  if (!f) throw PreconditionError("unknown family '" + name + "' (expected braid, rat or conf)");
  return *f;
}

void check_k(std::int64_t k, const RunConfig& cfg) {
  if (k < 1) throw PreconditionError("k must be >= 1");
  if (k > cfg.basis_k_bound) {
    throw BoundError("k = " + std::to_string(k) + " exceeds --k-bound " + std::to_string(cfg.basis_k_bound));
  }
}

Json header(const std::string& command, const Json& inputs, const RunConfig& cfg) {
  return Json{{"schema", 1},
              {"command", command},
              {"inputs", inputs},
              {"config",
               {{"max_gen", cfg.max_gen_index},
                {"k_bound", cfg.basis_k_bound},
                {"iso_budget", cfg.iso_budget}}}};
}

void print_matrix(std::ostream& out, const BitMatrix& m, const std::string& indent) {
  if (m.rows() == 0 || m.cols() == 0) {
    out << indent << "(" << m.rows() << "x" << m.cols() << ")\n";
    return;
  }
  std::istringstream rows(m.to_string());
  for (std::string line; std::getline(rows, line);) out << indent << line << '\n';
}

void print_verdict(std::ostream& out, const IsoVerdict& v) {
  out << "verdict: " << iso_outcome_name(v.outcome) << '\n';
  if (v.outcome == IsoOutcome::No) out << "invariant: " << v.invariant << '\n';
  out << "detail: " << v.detail << '\n';
  out << "search space: " << v.search_space << " tuples, per-degree candidates examined: " << v.examined << '\n';
  if (v.outcome == IsoOutcome::Yes) {
    for (std::size_t d = 0; d < v.witness.size(); ++d) {
      out << "  degree " << d << ":\n";
      print_matrix(out, v.witness[d], "    ");
    }
  }
}

struct Context {
  RunConfig cfg;
  std::ostream& out;
  std::ostream& err;
  bool json() const { return cfg.output_format == OutputFormat::Json; }
  void emit(const Json& report) const { out << report.dump(2) << '\n'; }
};

int cmd_basis(const Context& ctx, const std::string& family_text, std::int64_t k) {
  const Family family = require_family(family_text);
  check_k(k, ctx.cfg);
  const auto limits = ctx.cfg.limits();
  const auto elems = basis(family, k, limits);
  const auto pv = poincare_vector(family, k, limits);
  if (ctx.json()) {
    Json rows = Json::array();
    for (const auto& m : elems) {
      const auto e = embed(m, limits.max_gen);
      rows.push_back(Json{{"label", m.to_string()},
                          {"monomial", to_json(m)},
                          {"weight", m.weight()},
                          {"dim", m.dim()},
                          {"embedding", to_json(e)},
                          {"embedding_text", e.to_string()}});
    }
    Json rep = header("basis", {{"family", family_text}, {"k", k}}, ctx.cfg);
    rep["basis"] = rows;
    rep["poincare"] = pv;
    ctx.emit(rep);
  } else {
    ctx.out << "basis of " << family_text << ":" << k << " (" << elems.size() << " elements)\n";
    for (const auto& m : elems) {
      ctx.out << "  dim " << m.dim() << "  weight " << m.weight() << "  " << m.to_string() << "  ->  "
              << embed(m, limits.max_gen).to_string() << '\n';
    }
    ctx.out << "poincare:";
    for (auto c : pv) ctx.out << ' ' << c;
    ctx.out << '\n';
  }
  return kExitOk;
}

int cmd_s_set(const Context& ctx, const std::string& family_text, std::int64_t k) {
  const Family family = require_family(family_text);
  if (family == Family::Conf) throw PreconditionError("s-set requires --family braid or rat");
  check_k(k, ctx.cfg);
  const auto x = top_class(family, k);
  const auto s = s_set(x, ctx.cfg.max_gen_index);
  const std::string space = family == Family::Rat ? "Rat_" + std::to_string(k)
                                                  : "Bbeta_" + std::to_string(2 * k);
  if (ctx.json()) {
    Json rep = header("s-set", {{"family", family_text}, {"k", k}}, ctx.cfg);
    rep["space"] = space;
    rep["class"] = to_json(x);
    rep["class_label"] = x.to_string();
    rep["dim"] = x.dim();
    rep["s_set"] = to_json(s);
    ctx.emit(rep);
  } else {
    ctx.out << "top class of " << space << ": " << x.to_string() << " (dim " << x.dim() << ")\n";
    ctx.out << "S = " << set_text(s) << '\n';
  }
  return kExitOk;
}

Json theorem_json(const TheoremReport& r) {
  Json j{{"k", r.k},
         {"J", r.j_set},
         {"top_dim", r.top_dim},
         {"x", r.x.to_string()},
         {"y", r.y.to_string()},
         {"s_x", to_json(r.s_x)},
         {"s_y", to_json(r.s_y)},
         {"distinct", r.distinct},
         {"branch", std::string(branch_name(r.branch))},
         {"closed_form_agrees", r.closed_form_agrees},
         {"consistent", r.consistent()}};
  if (r.r) {
    j["r"] = *r.r;
    j["witness"] = *r.witness;
    j["witness_holds"] = r.witness_holds;
  }
  if (r.branch == TheoremBranch::PowerOfTwo && r.k > 3) {
    j["power_branch_holds"] = r.power_branch_holds;
    j["five_in_s_x"] = r.s_x.contains(5);
    j["two_in_s_x"] = r.s_x.contains(2);
  }
  if (r.isomorphism) j["isomorphism"] = to_json(*r.isomorphism);
  return j;
}

int cmd_theorem(const Context& ctx, std::int64_t from, std::int64_t to) {
  if (from < 1 || to < from) throw PreconditionError("theorem-main requires 1 <= --from <= --to");
  check_k(to, ctx.cfg);
  bool all_ok = true;
  Json results = Json::array();
  for (std::int64_t k = from; k <= to; ++k) {
    const auto r = theorem_main(k, ctx.cfg.iso_budget, ctx.cfg.limits());
    all_ok = all_ok && r.consistent();
    if (ctx.json()) {
      results.push_back(theorem_json(r));
      continue;
    }
    ctx.out << "k=" << k << " J=" << list_text(r.j_set) << " d=" << r.top_dim << " S(x)=" << set_text(r.s_x)
            << " S(y)=" << set_text(r.s_y) << " distinct=" << (r.distinct ? "yes" : "no") << " ["
            << branch_name(r.branch) << "]";
    if (r.r) {
      ctx.out << " r=" << *r.r << " witness " << *r.witness << (r.witness_holds ? " in" : " NOT in")
              << " S(x)\\S(y)";
    }
    if (r.branch == TheoremBranch::PowerOfTwo && r.k > 3) {
      ctx.out << " 5 in S(x)\\S(y), 2 in neither: " << (r.power_branch_holds ? "yes" : "NO");
    }
    if (r.isomorphism) ctx.out << " isomorphism: " << iso_outcome_name(r.isomorphism->outcome);
    ctx.out << (r.consistent() ? "  ok" : "  FALSIFIED") << '\n';
    if (r.isomorphism && r.isomorphism->outcome == IsoOutcome::Yes) print_verdict(ctx.out, *r.isomorphism);
  }
  if (ctx.json()) {
    Json rep = header("theorem-main", {{"from", from}, {"to", to}}, ctx.cfg);
    rep["results"] = results;
    rep["verified"] = all_ok;
    ctx.emit(rep);
  } else {
    ctx.out << (all_ok ? "verified" : "falsified") << " for k in [" << from << ", " << to << "]\n";
  }
  return all_ok ? kExitOk : kExitFalsified;
}

int cmd_lemma_braid(const Context& ctx, std::int64_t max_k) {
  if (max_k < 1) throw PreconditionError("--max-k must be >= 1");
  check_k(2 * max_k + 1, ctx.cfg);
  bool all_ok = true;
  Json results = Json::array();
  for (std::int64_t k = 1; k <= max_k; ++k) {
    const auto r = check_lemma_braid(k, ctx.cfg.limits());
    all_ok = all_ok && r.ok();
    if (ctx.json()) {
      Json j{{"k", k},
             {"basis_size", r.basis_size},
             {"bijection", r.bijection},
             {"coproducts_match", r.coproducts_match},
             {"coalgebra_map", r.coalgebra_map},
             {"ok", r.ok()}};
      if (!r.failure.empty()) j["failure"] = r.failure;
      results.push_back(j);
    } else {
      ctx.out << "k=" << k << " Bbeta_" << 2 * k << " -> Bbeta_" << 2 * k + 1 << " (" << r.basis_size
              << " basis elements): bijection=" << (r.bijection ? "yes" : "no")
              << " coproducts=" << (r.coproducts_match ? "match" : "differ")
              << " coalgebra map=" << (r.coalgebra_map ? "yes" : "no") << (r.ok() ? "  ok" : "  FAILED");
      if (!r.failure.empty()) ctx.out << " (" << r.failure << ")";
      ctx.out << '\n';
    }
  }
  if (ctx.json()) {
    Json rep = header("lemma-braid", {{"max_k", max_k}}, ctx.cfg);
    rep["results"] = results;
    rep["verified"] = all_ok;
    ctx.emit(rep);
  } else {
    ctx.out << (all_ok ? "verified" : "falsified") << " for k in [1, " << max_k << "]\n";
  }
  return all_ok ? kExitOk : kExitFalsified;
}

int cmd_iso(const Context& ctx, const std::string& a_text, const std::string& b_text) {
  const auto a = parse_coalgebra_spec(a_text);
  const auto b = parse_coalgebra_spec(b_text);
  check_k(a.k, ctx.cfg);
  check_k(b.k, ctx.cfg);
  const auto ca = extract_coalgebra(a.family, a.k, ctx.cfg.limits());
  const auto cb = extract_coalgebra(b.family, b.k, ctx.cfg.limits());
  const auto v = coalgebras_isomorphic(ca.coalgebra, cb.coalgebra, ctx.cfg.iso_budget);
  if (ctx.json()) {
    Json rep = header("iso", {{"a", a_text}, {"b", b_text}}, ctx.cfg);
    rep["a_degrees"] = ca.coalgebra.labels();
    rep["b_degrees"] = cb.coalgebra.labels();
    rep["verdict"] = to_json(v);
    ctx.emit(rep);
  } else {
    ctx.out << "iso " << a_text << " vs " << b_text << '\n';
    print_verdict(ctx.out, v);
  }
  return kExitOk;
}

int cmd_steenrod(const Context& ctx, const std::string& family_text, std::int64_t k, int j,
                 bool extended, const std::string& against) {
  const Family family = require_family(family_text);
  check_k(k, ctx.cfg);
  if (j < 1) throw PreconditionError("--j must be >= 1");
  if (j >= 2 && !extended) {
    throw PreconditionError("Sq_j^* for j >= 2 uses the unverified product rule; pass --extended");
  }
  const auto limits = ctx.cfg.limits();
  const auto c = extract_coalgebra(family, k, limits);
  const auto sq = steenrod_matrix(c, j, limits.max_gen);

  // The first coalgebra isomorphism need not commute with Sq_j^*; when it
  // does not, search again among isomorphisms that do.
  std::optional<IsoVerdict> iso;
  std::optional<bool> intertwined;
  std::optional<IsoVerdict> compatible;
  if (!against.empty()) {
    const auto other_spec = parse_coalgebra_spec(against);
    check_k(other_spec.k, ctx.cfg);
    const auto other = extract_coalgebra(other_spec.family, other_spec.k, limits);
    const auto other_sq = steenrod_matrix(other, j, limits.max_gen);
    iso = coalgebras_isomorphic(c.coalgebra, other.coalgebra, ctx.cfg.iso_budget);
    if (iso->outcome == IsoOutcome::Yes) {
      intertwined = intertwines(iso->witness, sq, other_sq, j);
      compatible = *intertwined ? *iso
                                : coalgebras_isomorphic(c.coalgebra, other.coalgebra, ctx.cfg.iso_budget,
                                                        {OperationPair{sq, other_sq, j}});
    }
  }

  if (ctx.json()) {
    Json mats = Json::array();
    for (std::size_t d = 0; d < sq.size(); ++d) {
      Json images = Json::array();
      for (std::size_t x = 0; x < sq[d].rows(); ++x) {
        Json targets = Json::array();
        for (auto t : sq[d].row(x).set_bits()) targets.push_back(c.coalgebra.labels()[d - j][t]);
        images.push_back(Json{{"from", c.coalgebra.labels()[d][x]}, {"to", targets}});
      }
      mats.push_back(Json{{"degree", d}, {"matrix", to_json(sq[d])}, {"images", images}});
    }
    Json rep = header("steenrod", {{"family", family_text}, {"k", k}, {"j", j}}, ctx.cfg);
    rep["matrices"] = mats;
    if (iso) {
      rep["against"] = against;
      rep["isomorphism"] = to_json(*iso);
      if (intertwined) rep["intertwines"] = *intertwined;
      if (compatible) rep["compatible_isomorphism"] = to_json(*compatible);
    }
    ctx.emit(rep);
  } else {
    ctx.out << "Sq_" << j << "^* on " << family_text << ":" << k << '\n';
    for (std::size_t d = static_cast<std::size_t>(j); d < sq.size(); ++d) {
      for (std::size_t x = 0; x < sq[d].rows(); ++x) {
        ctx.out << "  " << c.coalgebra.labels()[d][x] << " -> ";
        const auto targets = sq[d].row(x).set_bits();
        if (targets.empty()) ctx.out << '0';
        for (std::size_t t = 0; t < targets.size(); ++t) {
          ctx.out << (t ? " + " : "") << c.coalgebra.labels()[d - j][targets[t]];
        }
        ctx.out << '\n';
      }
    }
    if (iso) {
      ctx.out << "against " << against << ":\n";
      print_verdict(ctx.out, *iso);
      if (intertwined) ctx.out << "witness intertwines Sq_" << j << "^*: " << (*intertwined ? "yes" : "no") << '\n';
      if (compatible && !*intertwined) {
        ctx.out << "isomorphism intertwining Sq_" << j << "^*:\n";
        print_verdict(ctx.out, *compatible);
      }
    }
  }
  // Falsified: isomorphic as coalgebras, but no isomorphism commutes with Sq_j^*.
  return (compatible && compatible->outcome == IsoOutcome::No) ? kExitFalsified : kExitOk;
}

int cmd_braid_conf(const Context& ctx, std::int64_t max_k) {
  if (max_k < 1) throw PreconditionError("--max-k must be >= 1");
  check_k(2 * max_k, ctx.cfg);
  bool all_ok = true;
  Json results = Json::array();
  for (std::int64_t k = 1; k <= max_k; ++k) {
    const auto r = check_braid_conf(k, ctx.cfg.iso_budget, ctx.cfg.limits());
    all_ok = all_ok && r.isomorphic;
    if (ctx.json()) {
      Json j{{"k", k},
             {"route", r.route},
             {"isomorphic", r.isomorphic},
             {"candidate_bijective", r.candidate_bijective},
             {"candidate_is_coalgebra_map", r.candidate_is_coalgebra_map},
             {"dims", r.conf_invariants.dims}};
      if (r.search) j["search"] = to_json(*r.search);
      results.push_back(j);
    } else {
      ctx.out << "k=" << k << " C_" << k << " vs Bbeta_" << 2 * k << ": "
              << (r.isomorphic ? "isomorphic" : "NOT established") << " via " << r.route
              << " (candidate map bijective=" << (r.candidate_bijective ? "yes" : "no")
              << ", coalgebra map=" << (r.candidate_is_coalgebra_map ? "yes" : "no") << ")\n";
      if (r.search) print_verdict(ctx.out, *r.search);
    }
  }
  if (ctx.json()) {
    Json rep = header("braid-conf", {{"max_k", max_k}}, ctx.cfg);
    rep["results"] = results;
    rep["verified"] = all_ok;
    ctx.emit(rep);
  } else {
    ctx.out << (all_ok ? "verified" : "not established") << " for k in [1, " << max_k << "]\n";
  }
  return all_ok ? kExitOk : kExitFalsified;
}

int cmd_coalgebra(const Context& ctx, const std::string& family_text, std::int64_t k) {
  const Family family = require_family(family_text);
  check_k(k, ctx.cfg);
  const auto c = extract_coalgebra(family, k, ctx.cfg.limits());
  const auto inv = coalgebra_invariants(c.coalgebra);
  if (ctx.json()) {
    Json rep = header("coalgebra", {{"family", family_text}, {"k", k}}, ctx.cfg);
    rep["coalgebra"] = to_json(c.coalgebra);
    rep["dims"] = inv.dims;
    rep["split_ranks"] = inv.split_ranks;
    if (inv.top_s_set) rep["top_s_set"] = to_json(*inv.top_s_set);
    ctx.emit(rep);
  } else {
    const auto& cg = c.coalgebra;
    ctx.out << "coalgebra " << cg.name() << '\n';
    for (std::size_t d = 0; d < cg.degree_count(); ++d) {
      for (std::size_t x = 0; x < cg.dim(d); ++x) {
        ctx.out << "  psi(" << cg.labels()[d][x] << ") =";
        bool first = true;
        for (std::size_t s = 0; s <= d; ++s) {
          const std::size_t nr = cg.dim(d - s);
          for (auto col : cg.split(d, s).row(x).set_bits()) {
            ctx.out << (first ? " " : " + ") << cg.labels()[s][col / nr] << " (x) " << cg.labels()[d - s][col % nr];
            first = false;
          }
        }
        ctx.out << '\n';
      }
    }
    if (inv.top_s_set) ctx.out << "top class S-set: " << set_text(*inv.top_s_set) << '\n';
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Mod-2 homology Hopf algebras of braid groups, Rat_k and C_k", "f2hopf"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--iso-budget", cfg.iso_budget, "Candidate matrices the isomorphism search may try")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-gen", cfg.max_gen_index, "Largest admissible generator index i of Q^i g")
      ->check(CLI::Range(1, kHardMaxGen));
  app.add_option("--k-bound", cfg.basis_k_bound, "Largest weight accepted for basis enumeration")
      ->check(CLI::PositiveNumber);
  app.add_flag("--timing", cfg.timing, "Report wall-clock time (excluded from output by default)");

  std::string family;
  std::int64_t k = 0;
  std::function<int(const Context&)> action;

  auto* basis_cmd = app.add_subcommand("basis", "List the basis of a family at weight k");
  basis_cmd->add_option("--family", family, "braid, rat or conf")->required();
  basis_cmd->add_option("--k", k, "Weight (conf: weight bound)")->required();
  basis_cmd->callback([&] { action = [&](const Context& c) { return cmd_basis(c, family, k); }; });

  auto* sset_cmd = app.add_subcommand("s-set", "S-set of the top class of Rat_k or Bbeta_{2k}");
  sset_cmd->add_option("--family", family, "braid or rat")->required();
  sset_cmd->add_option("--k", k, "k (braid: the space Bbeta_{2k})")->required();
  sset_cmd->callback([&] { action = [&](const Context& c) { return cmd_s_set(c, family, k); }; });

  std::int64_t from = 0, to = 0;
  auto* thm_cmd = app.add_subcommand("theorem-main", "Compare S(x) for Rat_k with S(y) for Bbeta_{2k}");
  auto* from_opt = thm_cmd->add_option("--from", from, "First k");
  auto* to_opt = thm_cmd->add_option("--to", to, "Last k");
  auto* k_opt = thm_cmd->add_option("--k", k, "Single k");
  from_opt->excludes(k_opt);
  to_opt->excludes(k_opt);
  thm_cmd->callback([&] {
    if (k_opt->count() > 0) {
      from = to = k;
    } else if (from_opt->count() == 0 || to_opt->count() == 0) {
      throw CLI::ValidationError("theorem-main", "give --k or both --from and --to");
    }
    action = [&](const Context& c) { return cmd_theorem(c, from, to); };
  });

  std::int64_t max_k = 0;
  auto* lemma_cmd = app.add_subcommand("lemma-braid", "Multiplication by g: Bbeta_{2k} -> Bbeta_{2k+1}");
  lemma_cmd->add_option("--max-k", max_k, "Check k = 1..max-k")->required();
  lemma_cmd->callback([&] { action = [&](const Context& c) { return cmd_lemma_braid(c, max_k); }; });

  std::string a_spec, b_spec;
  auto* iso_cmd = app.add_subcommand("iso", "Decide whether two coalgebras are isomorphic");
  iso_cmd->add_option("--a", a_spec, "FAMILY:K")->required();
  iso_cmd->add_option("--b", b_spec, "FAMILY:K")->required();
  iso_cmd->callback([&] { action = [&](const Context& c) { return cmd_iso(c, a_spec, b_spec); }; });

  int j = 1;
  bool extended = false;
  std::string against;
  auto* sq_cmd = app.add_subcommand("steenrod", "Matrices of Sq_j^* in the family basis");
  sq_cmd->add_option("--family", family, "braid, rat or conf")->required();
  sq_cmd->add_option("--k", k, "Weight")->required();
  sq_cmd->add_option("--j", j, "Operation index (default 1)");
  sq_cmd->add_flag("--extended", extended, "Allow j >= 2 (product rule not part of the verified surface)");
  sq_cmd->add_option("--against", against, "FAMILY:K to compare through an isomorphism witness");
  sq_cmd->callback([&] {
    action = [&](const Context& c) { return cmd_steenrod(c, family, k, j, extended, against); };
  });

  auto* bc_cmd = app.add_subcommand("braid-conf", "Coalgebra isomorphism Bbeta_{2k} ~ C_k");
  bc_cmd->add_option("--max-k", max_k, "Check k = 1..max-k")->required();
  bc_cmd->callback([&] { action = [&](const Context& c) { return cmd_braid_conf(c, max_k); }; });

  auto* co_cmd = app.add_subcommand("coalgebra", "Dump the structure constants of a family coalgebra");
  co_cmd->add_option("--family", family, "braid, rat or conf")->required();
  co_cmd->add_option("--k", k, "Weight")->required();
  co_cmd->callback([&] { action = [&](const Context& c) { return cmd_coalgebra(c, family, k); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitError;
  }

  cfg.output_format = format == "json" ? OutputFormat::Json : OutputFormat::Text;
  const Context ctx{cfg, out, err};
  const auto start = std::chrono::steady_clock::now();
  int code = kExitError;
  try {
    code = action(ctx);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  if (cfg.timing) {
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    err << "elapsed: " << ms.count() << " ms\n";
  }
  return code;
}

}  // namespace f2hopf::cli
