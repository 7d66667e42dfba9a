#include "cli.hpp"

#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "trider/decomposition.hpp"
#include "trider/workspace.hpp"

namespace trider::cli {

namespace {

using json = nlohmann::ordered_json;

struct Options {
  std::vector<std::string> files;
  std::vector<std::string> names;
  bool json = false;
  std::uint64_t seed = 0;
  std::size_t levels = 4;
  std::string kind = "lie-higher";
  bool experimental = false;
};

json vector_json(const Vector& v) {
  json arr = json::array();
  for (const auto& x : v) arr.push_back(format_scalar(x));
  return arr;
}

json violation_json(const Violation& v) {
  return json{{"law", v.law}, {"witness", v.witness}, {"detail", v.detail}};
}

std::string tuple_text(const std::vector<std::size_t>& t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? ", " : "") + std::to_string(t[i]);
  return s + ")";
}

bool selected(const Options& o, const std::string& name) {
  return o.names.empty() || std::find(o.names.begin(), o.names.end(), name) != o.names.end();
}

// One command's work on one file. Returns false if a requested check failed.
using Command = std::function<bool(const Options&, const Workspace&, json&, std::ostream&)>;

bool cmd_check(const Options&, const Workspace& ws, json& body, std::ostream& text) {
  const auto report = check_workspace(ws);
  body["objects"] = {{"algebras", ws.algebras.size()},
                     {"bimodules", ws.bimodules.size()},
                     {"triangular", ws.triangular.size()},
                     {"sequences", ws.sequences.size()}};
  body["violations"] = json::array();
  for (const auto& v : report.violations) body["violations"].push_back(violation_json(v));
  text << "  " << ws.algebras.size() << " algebras, " << ws.bimodules.size() << " bimodules, "
       << ws.triangular.size() << " triangular, " << ws.sequences.size() << " sequences\n";
  for (const auto& v : report.violations) text << "  violation: " << describe(v) << "\n";
  text << "  " << (report.ok() ? "ok" : "FAILED") << "\n";
  return report.ok();
}

bool cmd_center(const Options& o, const Workspace& ws, json& body, std::ostream& text) {
  bool ok = true;
  body["algebras"] = json::array();
  for (const auto& [name, alg] : ws.algebras) {
    if (!selected(o, name)) continue;
    const auto z = center(alg);
    json basis = json::array();
    for (const auto& v : z.vectors()) basis.push_back(vector_json(v));
    body["algebras"].push_back({{"name", name}, {"dim", alg.dim()}, {"center_dim", z.dim()}, {"center", basis}});
    text << "  algebra " << name << ": center dim " << z.dim() << " of " << alg.dim() << "\n";
  }
  body["triangular"] = json::array();
  for (const auto& [name, entry] : ws.triangular) {
    if (!selected(o, name)) continue;
    json item{{"name", name}};
    try {
      const auto T = resolve_triangular(ws, name);
      const auto elements = center_triangular(T);
      const auto et = eta(T);
      item["dim"] = T.dim();
      item["center_dim"] = elements.size();
      item["center_a_dim"] = center(T.a()).dim();
      item["center_b_dim"] = center(T.b()).dim();
      item["center"] = json::array();
      text << "  triangular " << name << ": center dim " << elements.size() << " of " << T.dim() << "\n";
      for (const auto& c : elements) {
        item["center"].push_back({{"a", vector_json(c.a_part)}, {"b", vector_json(c.b_part)}});
        text << "    " << T.display(T.assemble(c.a_part, zero_vector(T.dim_m()), c.b_part)) << "\n";
      }
      item["eta"] = json::array();
      for (std::size_t k = 0; k < et.domain.dim(); ++k) {
        const auto& a = et.domain.vectors()[k];
        const auto b = et.images.column(k);
        item["eta"].push_back({{"a", vector_json(a)}, {"b", vector_json(b)}});
        text << "    eta " << format_vector(a) << " -> " << format_vector(b) << "\n";
      }
    } catch (const TriangularError& e) {
      item["error"] = e.what();
      text << "  triangular " << name << ": " << e.what() << "\n";
      ok = false;
    }
    body["triangular"].push_back(std::move(item));
  }
  return ok;
}

json spaces_entry(const std::string& name, const char* type, const Algebra& alg, std::ostream& text) {
  std::vector<Vector> inner;
  for (std::size_t i = 0; i < alg.dim(); ++i) inner.push_back(flatten(inner_derivation(alg, alg.basis_vector(i))));
  const auto der = derivation_space(alg);
  const auto lie = lie_derivation_space(alg);
  const auto triple = lie_triple_derivation_space(alg);
  const auto inn = SubspaceBasis::span(alg.dim() * alg.dim(), inner);
  text << "  " << type << " " << name << " (dim " << alg.dim() << "): derivations " << der.dim() << ", inner "
       << inn.dim() << ", Lie derivations " << lie.dim() << ", Lie triple derivations " << triple.dim() << "\n";
  return {{"name", name},
          {"type", type},
          {"dim", alg.dim()},
          {"derivation", der.dim()},
          {"inner_derivation", inn.dim()},
          {"lie_derivation", lie.dim()},
          {"lie_triple_derivation", triple.dim()}};
}

bool cmd_spaces(const Options& o, const Workspace& ws, json& body, std::ostream& text) {
  bool ok = true;
  body["targets"] = json::array();
  for (const auto& [name, alg] : ws.algebras) {
    if (selected(o, name)) body["targets"].push_back(spaces_entry(name, "algebra", alg, text));
  }
  for (const auto& [name, entry] : ws.triangular) {
    if (!selected(o, name)) continue;
    try {
      body["targets"].push_back(spaces_entry(name, "triangular", resolve_triangular(ws, name).algebra(), text));
    } catch (const TriangularError& e) {
      body["targets"].push_back({{"name", name}, {"type", "triangular"}, {"error", e.what()}});
      text << "  triangular " << name << ": " << e.what() << "\n";
      ok = false;
    }
  }
  return ok;
}

bool cmd_extend(const Options& o, const Workspace& ws, json& body, std::ostream& text) {
  bool ok = true;
  body["triangular"] = json::array();
  for (const auto& [name, entry] : ws.triangular) {
    if (!selected(o, name)) continue;
    try {
      const auto ext = build_operator_extension(resolve_triangular(ws, name));
      const auto& T = ext.base();
      body["triangular"].push_back({{"name", name},
                                    {"dim", T.dim()},
                                    {"dim_extended", ext.extended().dim()},
                                    {"dim_a", T.dim_a()},
                                    {"dim_a0", ext.a0().dim()},
                                    {"dim_b", T.dim_b()},
                                    {"dim_b0", ext.b0().dim()},
                                    {"strict_a", ext.strict_a()},
                                    {"strict_b", ext.strict_b()},
                                    {"strict", ext.strict()}});
      text << "  " << name << ": A " << T.dim_a() << " -> A0 " << ext.a0().dim() << ", B " << T.dim_b()
           << " -> B0 " << ext.b0().dim() << (ext.strict() ? ", strict extension" : ", no enlargement") << "\n";
    } catch (const TriangularError& e) {
      body["triangular"].push_back({{"name", name}, {"error", e.what()}});
      text << "  " << name << ": " << e.what() << "\n";
      ok = false;
    }
  }
  return ok;
}

// A sequence to run through the decomposition or the probe.
struct Job {
  std::string triangular;
  std::string source;
  std::optional<HigherMapSequence> stored;
};

std::vector<Job> collect_jobs(const Options& o, const Workspace& ws, DerivationKind kind) {
  std::vector<Job> jobs;
  for (const auto& [name, entry] : ws.sequences) {
    if (entry.on_algebra || entry.sequence.kind != kind) continue;
    if (!selected(o, name) && !selected(o, entry.target)) continue;
    jobs.push_back({entry.target, "stored:" + name, entry.sequence});
  }
  if (!jobs.empty()) return jobs;
  for (const auto& [name, entry] : ws.triangular) {
    if (selected(o, name)) jobs.push_back({name, "sampled:seed=" + std::to_string(o.seed), std::nullopt});
  }
  return jobs;
}

// Resolves the job's sequence, or reports why it cannot be used.
std::optional<HigherMapSequence> job_sequence(const Options& o, const Job& job, const TriangularAlgebra& T,
                                              DerivationKind kind, json& item, std::ostream& text) {
  if (!job.stored) return sample_sequence(T.algebra(), kind, o.levels, o.seed);
  const auto report = verify_sequence(T.algebra(), *job.stored);
  if (report.ok()) return job.stored;
  const auto& v = *report.first_violation;
  item["error"] = {{"identity", v.law}, {"level", v.level}, {"witness", v.tuple}};
  text << "    not a " << to_string(kind) << " sequence: " << v.law << " fails at level " << v.level << " on "
       << tuple_text(v.tuple) << "\n";
  return std::nullopt;
}

bool cmd_decompose(const Options& o, const Workspace& ws, json& body, std::ostream& text) {
  bool ok = true;
  body["results"] = json::array();
  std::map<std::string, ExtendedTriangular> extensions;
  for (const auto& job : collect_jobs(o, ws, DerivationKind::lie_higher)) {
    json item{{"triangular", job.triangular}, {"source", job.source}};
    text << "  " << job.triangular << " [" << job.source << "]\n";
    try {
      auto it = extensions.find(job.triangular);
      if (it == extensions.end()) {
        it = extensions.emplace(job.triangular, build_operator_extension(resolve_triangular(ws, job.triangular))).first;
      }
      const auto& ext = it->second;
      const auto& T = ext.base();
      const auto L = job_sequence(o, job, T, DerivationKind::lie_higher, item, text);
      if (!L) {
        item["ok"] = false;
        ok = false;
        body["results"].push_back(std::move(item));
        continue;
      }
      const auto dec = decompose(ext, *L);
      const auto report = verify_properness(T, *L, dec);
      const auto pairs = search_proper_pairs(ext, *L, 2);

      std::vector<Vector> embedded_center;
      const auto z_basis = center_subspace(T);
      for (const auto& z : z_basis.vectors()) embedded_center.push_back(ext.embed(z));
      const auto iota_z = SubspaceBasis::span(ext.extended().dim(), embedded_center);

      item["ok"] = report.ok();
      item["levels"] = json::array();
      for (const auto& lv : report.levels) {
        if (lv.level == 0) continue;
        const auto& chi = dec.levels[lv.level].chi;
        bool in_center = true;
        for (std::size_t c = 0; c < chi.cols(); ++c) in_center = in_center && iota_z.contains(chi.column(c));
        std::size_t freedom = 0;
        bool found = false;
        for (const auto& p : pairs.levels) {
          if (p.level == lv.level) {
            freedom = p.freedom;
            found = p.found;
          }
        }
        json level{{"level", lv.level},
                   {"ok", lv.ok()},
                   {"residual_zero", lv.residual_zero},
                   {"delta_multiplicative", lv.delta_multiplicative},
                   {"chi_central", lv.chi_central},
                   {"chi_central_corner_form", lv.chi_central_corner_form},
                   {"chi_kills_commutators", lv.chi_kills_commutators},
                   {"h_left_compatible", lv.h_left_compatible},
                   {"h_right_compatible", lv.h_right_compatible},
                   {"d_multiplicative", lv.d_multiplicative},
                   {"d_prime_multiplicative", lv.d_prime_multiplicative},
                   {"chi_zero", chi.is_zero()},
                   {"chi_in_embedded_center", in_center},
                   {"pair_found", found},
                   {"freedom", freedom},
                   {"violations", json::array()}};
        for (const auto& v : lv.violations) level["violations"].push_back(violation_json(v));
        item["levels"].push_back(std::move(level));
        text << "    level " << lv.level << ": " << (lv.ok() ? "ok" : "FAILED") << " (chi "
             << (chi.is_zero() ? "zero" : in_center ? "in iota(Z)" : "outside iota(Z)") << ", freedom " << freedom
             << ")\n";
        for (const auto& v : lv.violations) text << "      " << describe(v) << "\n";
      }
      ok = ok && report.ok();
    } catch (const StructuralError& e) {
      item["ok"] = false;
      item["error"] = {{"identity", e.identity()}, {"level", e.level()}, {"witness", e.witness()}};
      text << "    structural error: " << e.what() << "\n";
      ok = false;
    } catch (const TriangularError& e) {
      item["ok"] = false;
      item["error"] = {{"identity", "triangular construction"}, {"detail", e.what()}};
      text << "    " << e.what() << "\n";
      ok = false;
    }
    body["results"].push_back(std::move(item));
  }
  return ok;
}

bool cmd_verify(const Options& o, const Workspace& ws, json& body, std::ostream& text) {
  bool ok = true;
  body["sequences"] = json::array();
  for (const auto& [name, entry] : ws.sequences) {
    if (!selected(o, name) && !selected(o, entry.target)) continue;
    json item{{"name", name},
              {"kind", to_string(entry.sequence.kind)},
              {entry.on_algebra ? "algebra" : "triangular", entry.target},
              {"levels", entry.sequence.top_level()}};
    try {
      const auto report = verify_sequence(sequence_algebra(ws, entry), entry.sequence);
      item["ok"] = report.ok();
      if (report.ok()) {
        text << "  " << name << ": ok through level " << entry.sequence.top_level() << "\n";
      } else {
        const auto& v = *report.first_violation;
        item["violation"] = {{"law", v.law}, {"level", v.level}, {"witness", v.tuple}};
        text << "  " << name << ": " << v.law << " fails at level " << v.level << " on " << tuple_text(v.tuple)
             << "\n";
        ok = false;
      }
    } catch (const TriangularError& e) {
      item["ok"] = false;
      item["error"] = e.what();
      text << "  " << name << ": " << e.what() << "\n";
      ok = false;
    }
    body["sequences"].push_back(std::move(item));
  }
  return ok;
}

bool cmd_probe(const Options& o, const Workspace& ws, json& body, std::ostream& text) {
  body["experimental"] = true;
  body["results"] = json::array();
  for (const auto& job : collect_jobs(o, ws, DerivationKind::lie_triple_higher)) {
    json item{{"triangular", job.triangular}, {"source", job.source}};
    text << "  " << job.triangular << " [" << job.source << "]\n";
    try {
      const auto T = resolve_triangular(ws, job.triangular);
      const auto L = job_sequence(o, job, T, DerivationKind::lie_triple_higher, item, text);
      if (L) {
        const auto probe = probe_conjecture(T, *L, experimental);
        item["lie_canonical_form"] = probe.lie_canonical_form;
        item["canonical_form_note"] = probe.canonical_form_note;
        item["stopped_early"] = probe.search.stopped_early;
        item["levels"] = json::array();
        for (const auto& lv : probe.search.levels) {
          item["levels"].push_back({{"level", lv.level}, {"found", lv.found}, {"freedom", lv.freedom}});
          text << "    level " << lv.level << ": " << (lv.found ? "pair found" : "no pair") << ", freedom "
               << lv.freedom << "\n";
        }
        text << "    Lie block form: " << (probe.lie_canonical_form ? "yes" : "no");
        if (!probe.canonical_form_note.empty()) text << " (" << probe.canonical_form_note << ")";
        text << "\n";
      }
    } catch (const TriangularError& e) {
      item["error"] = e.what();
      text << "    " << e.what() << "\n";
    }
    body["results"].push_back(std::move(item));
  }
  // Outcomes of the probe are observations, never a failed check.
  return true;
}

int sample(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.files.size() != 1) {
    err << "error: sample takes exactly one input document\n";
    return input_error;
  }
  auto ws = load_workspace(o.files.front());
  const auto kind = *parse_derivation_kind(o.kind);
  std::vector<std::pair<std::string, SequenceEntry>> added;
  auto add = [&](const std::string& target, bool on_algebra, const Algebra& alg) {
    SequenceEntry entry{target, on_algebra, sample_sequence(alg, kind, o.levels, o.seed)};
    added.emplace_back(target + "." + o.kind + ".seed" + std::to_string(o.seed), std::move(entry));
  };
  for (const auto& [name, entry] : ws.triangular) {
    if (!selected(o, name)) continue;
    try {
      add(name, false, resolve_triangular(ws, name).algebra());
    } catch (const TriangularError& e) {
      err << "error: " << name << ": " << e.what() << "\n";
      return check_failed;
    }
  }
  // Bare algebras are sampled only when asked for by name.
  for (const auto& [name, alg] : ws.algebras) {
    if (!o.names.empty() && selected(o, name)) add(name, true, alg);
  }
  for (auto& [name, entry] : added) ws.sequences.insert_or_assign(name, std::move(entry));
  out << dump_workspace(ws);
  return pass;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact solver for Lie higher derivations of triangular algebras", "trider"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub) {
    sub->add_option("files", o.files, "Workspace JSON documents")->required();
    sub->add_flag("--json", o.json, "Print the machine-readable report");
    sub->add_option("--name", o.names, "Restrict to these named objects");
  };
  auto sampling = [&](CLI::App* sub, std::size_t min_levels) {
    sub->add_option("--seed", o.seed, "Seed for sampled sequences")->capture_default_str();
    sub->add_option("--levels", o.levels, "Top level N of sampled sequences")
        ->capture_default_str()
        ->check(CLI::Range(min_levels, std::size_t{32}));
  };

  const std::map<std::string, std::pair<const char*, Command>> commands{
      {"check", {"Validate every object in the documents", cmd_check}},
      {"center", {"Centers of algebras and triangular algebras, with eta", cmd_center}},
      {"spaces", {"Dimensions of the derivation, Lie and Lie triple derivation spaces", cmd_spaces}},
      {"extend", {"Build the operator extension and report strictness", cmd_extend}},
      {"decompose", {"Split Lie higher derivations into Delta + chi and verify", cmd_decompose}},
      {"verify", {"Re-check the defining identities of stored sequences", cmd_verify}},
      {"probe", {"Experimental: pair search for Lie triple higher derivations", cmd_probe}},
  };
  std::map<std::string, CLI::App*> subs;
  for (const auto& [name, spec] : commands) {
    auto* sub = app.add_subcommand(name, spec.first);
    common(sub);
    subs[name] = sub;
  }
  sampling(subs["decompose"], 1);
  sampling(subs["probe"], 1);
  subs["probe"]->add_flag("--experimental", o.experimental, "Acknowledge that the probe asserts nothing");

  auto* sample_cmd = app.add_subcommand("sample", "Append seeded sequences and print the document");
  sample_cmd->add_option("files", o.files, "Workspace JSON document")->required();
  sample_cmd->add_option("--name", o.names, "Restrict to these named objects");
  sample_cmd->add_option("--kind", o.kind, "higher, lie-higher or lie-triple-higher")
      ->capture_default_str()
      ->check(CLI::IsMember({"higher", "lie-higher", "lie-triple-higher"}));
  sampling(sample_cmd, 0);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? pass : input_error;
  }

  try {
    if (sample_cmd->parsed()) return sample(o, out, err);

    std::string name;
    for (const auto& [n, sub] : subs) {
      if (sub->parsed()) name = n;
    }
    if (name == "probe" && !o.experimental) {
      err << "error: probe explores an open problem and asserts nothing; rerun with --experimental\n";
      return input_error;
    }

    std::vector<Workspace> documents;
    for (const auto& file : o.files) {
      try {
        documents.push_back(load_workspace(file));
      } catch (const InputError& e) {
        err << "error: " << file << ": " << e.what() << "\n";
        return input_error;
      }
    }
    if (name == "verify") {
      std::size_t count = 0;
      for (const auto& ws : documents) count += ws.sequences.size();
      if (count == 0) {
        err << "error: no stored sequences to verify\n";
        return input_error;
      }
    }

    json report{{"command", name}, {"files", json::array()}};
    std::ostringstream text;
    bool ok = true;
    for (std::size_t i = 0; i < documents.size(); ++i) {
      json body{{"file", o.files[i]}};
      text << o.files[i] << ":\n";
      const bool file_ok = commands.at(name).second(o, documents[i], body, text);
      body["ok"] = file_ok;
      report["files"].push_back(std::move(body));
      ok = ok && file_ok;
    }
    report["ok"] = ok;
    if (o.json) {
      out << report.dump(2) << "\n";
    } else {
      out << text.str();
    }
    return ok ? pass : check_failed;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return input_error;
  }
}

}  // namespace trider::cli
