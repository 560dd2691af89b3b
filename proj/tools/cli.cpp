#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "sepnoether/report.hpp"
#include "sepnoether/text.hpp"
#include "sepnoether/version.hpp"

namespace sepnoether::cli {

namespace {

using nlohmann::json;
namespace fs = std::filesystem;

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string csv_row(const std::vector<std::string>& cells) {
  std::string out;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out += ',';
    out += csv_quote(cells[i]);
  }
  return out + "\n";
}

std::string opt_to_string(const std::optional<Int>& v) { return v ? std::to_string(*v) : "-"; }

GroupSpec parse_group(const std::string& text, std::ostream& err) {
  GroupSpec g = GroupSpec::parse(text);
  // Report when the canonical form differs from the user's list of factors.
  std::string compact;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
  if (compact != g.to_string() && compact != g.to_alias())
    err << "notice: " << text << " canonicalized to " << g.to_string() << " (" << g.to_alias()
        << "); element coordinates refer to the canonical factors\n";
  return g;
}

SweepOptions sweep_options(const RunConfig& cfg) {
  SweepOptions o = cfg.audit ? SweepOptions::audit() : SweepOptions{};
  o.workers = cfg.workers;
  o.symmetry = cfg.symmetry && !cfg.audit;
  o.limits.node_cap = cfg.node_cap;
  return o;
}

std::vector<std::string> batch_groups(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::InvalidInput, "cannot open batch file " + path);
  std::vector<std::string> groups;
  std::string line;
  while (std::getline(in, line)) {
    std::string_view t = text::trim(line);
    if (t.empty() || t.front() == '#') continue;
    groups.emplace_back(t);
  }
  return groups;
}

// ---------------------------------------------------------------- cache

std::string fnv1a_hex(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

json cache_key(const GroupSpec& g, const RunConfig& cfg) {
  return {{"command", "beta-sep"}, {"group", g.to_string()}, {"node_cap", cfg.node_cap},
          {"audit", cfg.audit},    {"symmetry", cfg.symmetry}, {"version", kCodeVersion}};
}

fs::path cache_file(const fs::path& dir, const json& key) {
  std::string group = key["group"].get<std::string>();
  std::replace(group.begin(), group.end(), ',', '_');
  return dir / ("beta-sep-" + group + "-" + fnv1a_hex(key.dump()) + ".json");
}

std::optional<BetaSepResult> load_cached(const fs::path& file, const json& key, const RunConfig& cfg) {
  std::ifstream in(file);
  if (!in) return std::nullopt;
  try {
    json j = json::parse(in);
    if (j.value("schema", 0) != kSchemaVersion || j.value("version", std::string()) != kCodeVersion ||
        j["key"] != key)
      return std::nullopt;
    const json& r = j["result"];
    GroupSpec g = GroupSpec::parse(r["group"].get<std::string>());
    std::vector<GroupElement> els;
    for (const auto& e : r["witness"]["elements"]) els.push_back(make_element(g, e.get<std::vector<Int>>()));
    Context ctx(g, std::move(els));
    MultVector m(r["witness"]["vector"].get<std::vector<Int>>());
    const Int value = r["beta_sep"].get<Int>();
    // Served only after the stored witness passes the group-atom test again.
    SearchLimits limits{cfg.node_cap};
    if (m.length() != value || !is_zero_sum(ctx, m) || !is_group_atom(ctx, m, limits).is_group_atom)
      return std::nullopt;
    return BetaSepResult{g,
                         value,
                         r["upper_bound"].get<Int>(),
                         std::move(ctx),
                         std::move(m),
                         r["subsets_examined"].get<std::uint64_t>(),
                         r["subsets_pruned"].get<std::uint64_t>(),
                         std::chrono::milliseconds(r.value("elapsed_ms", Int{0}))};
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

void store_cached(const fs::path& file, const json& key, const BetaSepResult& result) {
  std::error_code ec;
  fs::create_directories(file.parent_path(), ec);
  fs::path tmp = file;
  tmp += ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) return;
    out << json{{"schema", kSchemaVersion}, {"version", kCodeVersion}, {"key", key}, {"result", to_json(result)}}.dump(2)
        << "\n";
  }
  fs::rename(tmp, file, ec);
}

BetaSepResult compute_beta_sep(const GroupSpec& g, const RunConfig& cfg) {
  if (!cfg.cache_dir) return beta_sep(g, sweep_options(cfg));
  const json key = cache_key(g, cfg);
  const fs::path file = cache_file(*cfg.cache_dir, key);
  if (auto cached = load_cached(file, key, cfg)) return *cached;
  BetaSepResult r = beta_sep(g, sweep_options(cfg));
  store_cached(file, key, r);
  return r;
}

// ---------------------------------------------------------------- commands

int cmd_group_info(const RunConfig& cfg, const std::string& group_text, bool header, std::ostream& out,
                   std::ostream& err) {
  GroupSpec g = parse_group(group_text, err);
  switch (cfg.output) {
    case OutputFormat::Json:
      out << group_info_json(g).dump() << "\n";
      break;
    case OutputFormat::Csv:
      if (header) out << csv_row({"group", "rank", "exponent", "order", "d_star", "upper_bound"});
      out << csv_row({g.to_string(), std::to_string(g.rank()), std::to_string(g.exponent()), std::to_string(g.order()),
                      std::to_string(d_star(g)), std::to_string(upper_bound(g))});
      break;
    case OutputFormat::Plain:
      out << "group        " << g.to_string() << " (" << g.to_alias() << ")\n"
          << "rank         " << g.rank() << "\n"
          << "exponent     " << g.exponent() << "\n"
          << "order        " << g.order() << "\n"
          << "d*           " << d_star(g) << "\n"
          << "upper bound  " << upper_bound(g) << "\n";
      break;
  }
  return kOk;
}

int cmd_atoms(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  GroupSpec g = parse_group(cfg.group, err);
  SearchLimits limits{cfg.node_cap};
  if (!cfg.elements && !cfg.davenport) fail(ErrorKind::InvalidInput, "atoms needs --elements or --davenport");

  std::optional<Context> ctx;
  std::vector<MultVector> atoms;
  if (cfg.elements) {
    ctx = Context::parse(g, *cfg.elements);
    atoms = enumerate_atoms(*ctx, cfg.max_len, limits);
  }
  std::optional<Int> dav;
  if (cfg.davenport) dav = davenport(g, limits);
  Int max_len = 0;
  for (const auto& a : atoms) max_len = std::max(max_len, a.length());

  switch (cfg.output) {
    case OutputFormat::Json: {
      json j = {{"schema", kSchemaVersion}, {"group", g.to_string()}};
      if (ctx) {
        json list = json::array();
        for (const auto& a : atoms) list.push_back({{"vector", to_json(a)}, {"length", a.length()}});
        j["elements"] = to_json(*ctx);
        j["atoms"] = std::move(list);
        j["count"] = atoms.size();
        j["max_length"] = max_len;
        if (cfg.max_len) j["max_len"] = *cfg.max_len;
      }
      if (dav) j["davenport"] = *dav;
      out << j.dump() << "\n";
      break;
    }
    case OutputFormat::Csv:
      if (ctx) {
        out << csv_row({"vector", "length"});
        for (const auto& a : atoms) out << csv_row({a.to_string(), std::to_string(a.length())});
      }
      if (dav) out << csv_row({"davenport", std::to_string(*dav)});
      break;
    case OutputFormat::Plain:
      if (ctx) {
        for (const auto& a : atoms) out << a.to_string() << "  length " << a.length() << "\n";
        out << atoms.size() << " atoms, maximal length " << max_len << "\n";
      }
      if (dav) out << "D(" << g.to_alias() << ") = " << *dav << "\n";
      break;
  }
  return kOk;
}

int cmd_group_atom(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  GroupSpec g = parse_group(cfg.group, err);
  if (!cfg.elements) fail(ErrorKind::InvalidInput, "group-atom needs --elements");
  if (!cfg.vector) fail(ErrorKind::InvalidInput, "group-atom needs --vector");
  SearchLimits limits{cfg.node_cap};
  Context ctx = Context::parse(g, *cfg.elements);
  const MultVector m = MultVector::parse(*cfg.vector);
  if (m.size() != ctx.size()) fail(ErrorKind::InvalidInput, "vector length does not match the number of elements");
  if (!is_zero_sum(ctx, m)) fail(ErrorKind::InvalidInput, m.to_string() + " is not zero-sum in this context");

  GroupAtomVerdict verdict = is_group_atom(ctx, m, limits);
  const bool atom = is_atom(ctx, m, limits);

  json scaling;
  std::string scaling_plain;
  if (cfg.refute_scaling) {
    try {
      ScalingRefutation r = refute_by_scaling(ctx, m);
      scaling = {{"applicable", true},
                 {"ell", r.ell},
                 {"ell_inverse", r.ell_inverse},
                 {"scaled", to_json(r.scaled)},
                 {"via_complement", r.via_complement},
                 {"decomposition", to_json(r.decomposition)}};
      scaling_plain = "scaling refutation (l = " + std::to_string(r.ell) + "): " + to_json(r.decomposition).dump();
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::InvalidInput) throw;
      scaling = {{"applicable", false}, {"reason", e.what()}};
      scaling_plain = std::string("scaling refutation not applicable: ") + e.what();
    }
  }

  switch (cfg.output) {
    case OutputFormat::Json: {
      json j = {{"schema", kSchemaVersion},
                {"group", g.to_string()},
                {"elements", to_json(ctx)},
                {"vector", to_json(m)},
                {"is_atom", atom},
                {"group_atom", verdict.is_group_atom},
                {"generating_set_size", verdict.generating_set_size},
                {"witness", verdict.witness ? to_json(*verdict.witness) : json(nullptr)}};
      if (cfg.refute_scaling) j["scaling"] = scaling;
      out << j.dump() << "\n";
      break;
    }
    case OutputFormat::Csv:
      out << csv_row({"vector", "is_atom", "group_atom", "witness"});
      out << csv_row({m.to_string(), atom ? "true" : "false", verdict.is_group_atom ? "true" : "false",
                      verdict.witness ? to_json(*verdict.witness).dump() : ""});
      break;
    case OutputFormat::Plain:
      out << (verdict.is_group_atom ? "GROUP-ATOM" : "NOT") << "\n";
      out << "atom: " << (atom ? "yes" : "no") << ", lattice generators: " << verdict.generating_set_size << "\n";
      if (verdict.witness) out << "witness: " << to_json(*verdict.witness).dump() << "\n";
      if (cfg.refute_scaling) out << scaling_plain << "\n";
      break;
  }
  return kOk;
}

int cmd_beta_sep(const RunConfig& cfg, const std::string& group_text, bool header, std::ostream& out,
                 std::ostream& err) {
  GroupSpec g = parse_group(group_text, err);
  BetaSepResult r = compute_beta_sep(g, cfg);
  switch (cfg.output) {
    case OutputFormat::Json: {
      json j = to_json(r);
      j["note"] = identity_exclusion_note(g);
      out << j.dump() << "\n";
      break;
    }
    case OutputFormat::Csv:
      if (header)
        out << csv_row({"group", "beta_sep", "upper_bound", "witness_elements", "witness_vector", "subsets_examined",
                        "subsets_pruned", "elapsed_ms"});
      out << csv_row({g.to_string(), std::to_string(r.value), std::to_string(r.upper_bound),
                      r.witness_context.to_string(), r.witness_vector.to_string(), std::to_string(r.subsets_examined),
                      std::to_string(r.subsets_pruned), std::to_string(r.elapsed.count())});
      break;
    case OutputFormat::Plain:
      out << "beta_sep(" << g.to_alias() << ") = " << r.value << "  (upper bound " << r.upper_bound << ")\n"
          << "witness: " << r.witness_context.to_string() << "  " << r.witness_vector.to_string() << "\n"
          << "subsets examined " << r.subsets_examined << ", pruned " << r.subsets_pruned << ", " << r.elapsed.count()
          << " ms\n"
          << "note: " << identity_exclusion_note(g) << "\n";
      break;
  }
  return kOk;
}

int cmd_verify(const RunConfig& cfg, const std::string& group_text, bool header, std::ostream& out,
               std::ostream& err) {
  GroupSpec g = parse_group(group_text, err);
  std::optional<BetaSepResult> sweep;
  std::string note;
  if (cfg.no_sweep) {
    note = "closed form only, sweep skipped";
  } else {
    try {
      sweep = compute_beta_sep(g, cfg);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::CapExceeded) throw;
      note = std::string("closed form only, sweep skipped: ") + e.what();
    }
  }
  TheoremReport report = evaluate_theorems(g, std::move(sweep), std::move(note), SearchLimits{cfg.node_cap});

  switch (cfg.output) {
    case OutputFormat::Json:
      out << to_json(report).dump() << "\n";
      break;
    case OutputFormat::Csv: {
      if (header)
        out << csv_row({"group", "beta_sep", "lower_bound", "upper_bound", "6.1", "6.2", "1.2", "remark-6.3", "status"});
      std::vector<std::string> row{g.to_string(), report.sweep ? std::to_string(report.sweep->value) : "",
                                   std::to_string(report.lower_bound), std::to_string(report.upper_bound)};
      for (const auto& c : report.checks) row.push_back(to_string(c.status));
      row.push_back(report.has_mismatch() ? "MISMATCH" : "MATCH");
      out << csv_row(row);
      break;
    }
    case OutputFormat::Plain:
      out << "group " << g.to_string() << " (" << g.to_alias() << ")\n";
      out << "beta_sep  " << (report.sweep ? std::to_string(report.sweep->value) : "-") << "\n";
      out << "bounds    " << report.lower_bound << " (construction" << (report.lower_bound_certified ? ", certified" : ", NOT certified")
          << ") <= beta_sep <= " << report.upper_bound << "\n";
      if (!report.sweep_note.empty()) out << report.sweep_note << "\n";
      for (const auto& c : report.checks) {
        out << std::left << std::setw(11) << c.theorem << " applies=" << std::setw(4) << (c.applies ? "yes" : "no")
            << " closed=" << std::setw(4) << opt_to_string(c.closed_form) << " computed=" << std::setw(4)
            << opt_to_string(c.computed) << " " << std::setw(8) << to_string(c.status) << " " << c.hypothesis << "\n";
      }
      out << (report.has_mismatch() ? "MISMATCH" : "MATCH") << "\n";
      break;
  }
  return report.has_mismatch() ? kMismatch : kOk;
}

int cmd_witness(const RunConfig& cfg, const std::string& group_text, bool header, std::ostream& out,
                std::ostream& err) {
  GroupSpec g = parse_group(group_text, err);
  if (g.rank() % 2 == 1 && cfg.prime) fail(ErrorKind::InvalidInput, "--prime only applies to even rank");
  const WitnessPackage pkg = g.rank() % 2 == 1 ? odd_rank_construction(g) : even_rank_construction(g, cfg.prime);
  const bool certified = pkg.recertify(SearchLimits{cfg.node_cap});
  switch (cfg.output) {
    case OutputFormat::Json: {
      json j = to_json(pkg);
      j["certified"] = certified;
      out << j.dump() << "\n";
      break;
    }
    case OutputFormat::Csv:
      if (header) out << csv_row({"group", "table", "elements", "vector", "length", "certificate", "certified"});
      out << csv_row({g.to_string(), pkg.odd_table ? "odd" : "even", pkg.ctx.to_string(), pkg.m.to_string(),
                      std::to_string(pkg.claimed_length), to_string(pkg.certificate), certified ? "true" : "false"});
      break;
    case OutputFormat::Plain:
      out << "group     " << g.to_string() << " (" << g.to_alias() << "), " << (pkg.odd_table ? "odd" : "even")
          << " table" << (pkg.odd_table ? "" : ", p = " + std::to_string(pkg.prime)) << "\n"
          << "elements  " << pkg.ctx.to_string() << "\n"
          << "m         " << pkg.m.to_string() << "  length " << pkg.claimed_length << "\n"
          << "certificate " << to_string(pkg.certificate);
      if (pkg.certificate == CertificateKind::Divisibility)
        out << " (coordinate " << pkg.certificate_index + 1 << ", d = " << pkg.certificate_divisor << ")";
      out << ": " << (certified ? "certified" : "FAILED") << "\n";
      break;
  }
  return certified ? kOk : kMismatch;
}

template <typename PerGroup>
int over_groups(const RunConfig& cfg, PerGroup&& per_group) {
  if (!cfg.batch) {
    if (cfg.group.empty()) fail(ErrorKind::InvalidInput, "--group is required");
    return per_group(cfg.group, true);
  }
  int worst = kOk;
  bool first = true;
  for (const auto& g : batch_groups(*cfg.batch)) {
    int code = per_group(g, first);
    first = false;
    if (code != kOk) worst = code;
  }
  return worst;
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse: return kParse;
    case ErrorKind::CapExceeded: return kCap;
    case ErrorKind::InvalidInput: return kInvalidInput;
    case ErrorKind::Overflow:
    case ErrorKind::Internal: return kInternal;
  }
  return kInternal;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Block monoids, group atoms and the separating Noether number of small finite abelian groups",
               "sepnoether"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string output = "plain";

  auto add_group = [&](CLI::App* sub) {
    sub->add_option("--group", cfg.group, "group spec, e.g. 12,4 or C12xC4")->envname("SEPNOETHER_GROUP");
  };
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--output", output, "plain | json | csv")
        ->check(CLI::IsMember({"plain", "json", "csv"}))
        ->envname("SEPNOETHER_OUTPUT");
    sub->add_option("--node-cap", cfg.node_cap, "atom-search node cap")
        ->check(CLI::PositiveNumber)
        ->envname("SEPNOETHER_NODE_CAP");
  };
  auto add_sweep = [&](CLI::App* sub) {
    sub->add_option("--workers", cfg.workers, "OpenMP worker count")
        ->check(CLI::PositiveNumber)
        ->envname("SEPNOETHER_WORKERS");
    sub->add_flag("--symmetry", cfg.symmetry, "visit one subset per automorphism orbit")
        ->envname("SEPNOETHER_SYMMETRY");
    sub->add_flag("--audit", cfg.audit, "disable every pruning")->envname("SEPNOETHER_AUDIT");
    sub->add_option("--cache-dir", cfg.cache_dir, "result cache directory")->envname("SEPNOETHER_CACHE_DIR");
  };
  auto add_batch = [&](CLI::App* sub) {
    sub->add_option("--batch", cfg.batch, "file with one group spec per line")->check(CLI::ExistingFile);
  };

  auto* info = app.add_subcommand("group-info", "rank, exponent, order, d* and the general upper bound");
  add_group(info);
  add_common(info);
  add_batch(info);

  auto* atoms = app.add_subcommand("atoms", "atoms of a block monoid, or D(G) with --davenport");
  add_group(atoms);
  add_common(atoms);
  atoms->add_option("--elements", cfg.elements, "context, e.g. \"(1,0);(1,1);(0,1)\"");
  atoms->add_option("--max-len", cfg.max_len, "only atoms up to this length");
  atoms->add_flag("--davenport", cfg.davenport, "compute D(G) over all non-identity elements");

  auto* gatom = app.add_subcommand("group-atom", "group-atom test with an integral witness");
  add_group(gatom);
  add_common(gatom);
  gatom->add_option("--elements", cfg.elements, "context")->required();
  gatom->add_option("--vector", cfg.vector, "multiplicity vector, e.g. [11,1,3]")->required();
  gatom->add_flag("--refute-scaling", cfg.refute_scaling, "also try the unit-rescaling refutation");

  auto* bsep = app.add_subcommand("beta-sep", "exhaustive separating Noether number");
  add_group(bsep);
  add_common(bsep);
  add_sweep(bsep);
  add_batch(bsep);

  auto* verify = app.add_subcommand("verify", "compare the sweep with the closed forms that apply");
  add_group(verify);
  add_common(verify);
  add_sweep(verify);
  add_batch(verify);
  verify->add_flag("--no-sweep", cfg.no_sweep, "report closed forms and bounds only");

  auto* witness = app.add_subcommand("witness", "explicit lower-bound construction and its certificate");
  add_group(witness);
  add_common(witness);
  add_batch(witness);
  witness->add_option("--prime", cfg.prime, "prime divisor of n_r for the even construction");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kParse;
  }

  cfg.output = output == "json" ? OutputFormat::Json : output == "csv" ? OutputFormat::Csv : OutputFormat::Plain;

  try {
    if (info->parsed())
      return over_groups(cfg, [&](const std::string& g, bool h) { return cmd_group_info(cfg, g, h, out, err); });
    if (atoms->parsed()) return cmd_atoms(cfg, out, err);
    if (gatom->parsed()) return cmd_group_atom(cfg, out, err);
    if (bsep->parsed())
      return over_groups(cfg, [&](const std::string& g, bool h) { return cmd_beta_sep(cfg, g, h, out, err); });
    if (verify->parsed())
      return over_groups(cfg, [&](const std::string& g, bool h) { return cmd_verify(cfg, g, h, out, err); });
    if (witness->parsed())
      return over_groups(cfg, [&](const std::string& g, bool h) { return cmd_witness(cfg, g, h, out, err); });
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kInternal;
}

}  // namespace sepnoether::cli
