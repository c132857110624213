// dessins: command-line front end.
//
// Exit status: 0 success, 1 a check failed, 2 usage or input error,
// 3 a resource cap was exceeded.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"

#include "dessins/automorphisms.hpp"
#include "dessins/belyi.hpp"
#include "dessins/character_table.hpp"
#include "dessins/constructions.hpp"
#include "dessins/dessin_io.hpp"
#include "dessins/enumerate.hpp"
#include "dessins/frobenius.hpp"
#include "dessins/moebius.hpp"
#include "dessins/acceptance_checks.hpp"
#include "dessins/psl2.hpp"

using namespace dessins;
using json = nlohmann::ordered_json;

namespace {

constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;
constexpr int kCap = 3;

struct RunConfig {
  Limits limits;
  std::size_t workers = 1;
  std::uint64_t seed = 1;
  std::string format = "text";
  std::string output;
};

// Defaults from the JSON file named by DESSINS_CONFIG, if set.
void load_config(RunConfig& cfg) {
  const char* path = std::getenv("DESSINS_CONFIG");
  if (!path || !*path) return;
  json j;
  try {
    j = json::parse(read_file(path));
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("bad config file: ") + e.what());
  }
  cfg.limits.enumeration_cap = j.value("enumeration_cap", cfg.limits.enumeration_cap);
  cfg.limits.lattice_cap = j.value("lattice_cap", cfg.limits.lattice_cap);
  cfg.limits.degree_cap = j.value("degree_cap", cfg.limits.degree_cap);
  cfg.workers = j.value("workers", cfg.workers);
  cfg.seed = j.value("seed", cfg.seed);
  cfg.format = j.value("format", cfg.format);
}

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.output.empty()) {
    std::cout << text;
  } else {
    write_file(cfg.output, text);
  }
}

std::string render_dessin(const RunConfig& cfg, const Dessin& d) {
  if (cfg.format == "json") return dessin_to_json(d);
  if (cfg.format == "dot") return dessin_to_dot(d, true);
  return format_dessin_text(d);
}

// Several dessins: to stdout separated by blank lines, or to numbered files.
void emit_dessins(const RunConfig& cfg, const std::vector<Dessin>& ds) {
  if (cfg.output.empty() || ds.size() == 1) {
    std::string all;
    for (std::size_t i = 0; i < ds.size(); ++i) all += (i ? "\n" : "") + render_dessin(cfg, ds[i]);
    emit(cfg, all);
    return;
  }
  const std::filesystem::path p(cfg.output);
  for (std::size_t i = 0; i < ds.size(); ++i) {
    auto name = p.parent_path() / (p.stem().string() + "-" + std::to_string(i + 1) + p.extension().string());
    write_file(name.string(), render_dessin(cfg, ds[i]));
  }
}

std::vector<std::uint64_t> parse_type(const std::string& s) {
  std::vector<std::uint64_t> out;
  std::stringstream in(s);
  std::string part;
  while (std::getline(in, part, ',')) {
    try {
      out.push_back(std::stoull(part));
    } catch (const std::exception&) {
      throw InvalidArgument("bad type entry '" + part + "'");
    }
  }
  if (out.size() != 3 || out[0] == 0 || out[1] == 0 || out[2] == 0) throw InvalidArgument("type must be p,q,r");
  return out;
}

// "any", "div:3", "exact:7^2 1^1", "within:6 3 2 1"
CycleConstraint parse_constraint(const std::string& s) {
  if (s == "any") return CycleConstraint::any();
  const auto colon = s.find(':');
  if (colon == std::string::npos) throw InvalidArgument("constraint '" + s + "' needs a kind prefix");
  const std::string kind = s.substr(0, colon), arg = s.substr(colon + 1);
  if (kind == "div") {
    try {
      return CycleConstraint::divides(std::stoull(arg));
    } catch (const std::exception&) {
      throw InvalidArgument("bad order '" + arg + "'");
    }
  }
  if (kind == "exact") return CycleConstraint::exact(CycleType::parse(arg));
  if (kind == "within") return CycleConstraint::within(CycleType::parse(arg));
  throw InvalidArgument("unknown constraint kind '" + kind + "'");
}

json report_json(const DessinReport& r) {
  return {{"degree", r.dessin.degree()},
          {"passport", r.passport.str()},
          {"genus", r.genus},
          {"monodromy_order", to_string(r.monodromy_order)},
          {"automorphisms", r.automorphisms},
          {"primitive", r.primitive},
          {"minimal_block_systems", r.minimal_block_systems},
          {"x", render(r.dessin.x())},
          {"y", render(r.dessin.y())},
          {"z", render(r.dessin.z())}};
}

std::string census_text(const CensusResult& c) {
  std::ostringstream out;
  out << "dessins: " << c.dessins.size() << "  (weighted " << to_string(c.weighted_count()) << ", " << c.search_nodes
      << " search nodes)\n";
  for (const auto& r : c.dessins) {
    out << "n=" << r.dessin.degree() << "  " << r.passport.str() << "  genus " << r.genus << "  |G| "
        << to_string(r.monodromy_order) << "  |Aut| " << r.automorphisms
        << (r.primitive ? "  primitive" : "  imprimitive (" + std::to_string(r.minimal_block_systems) + ")") << "\n"
        << "  x = " << render(r.dessin.x()) << "\n  y = " << render(r.dessin.y()) << "\n";
  }
  return out.str();
}

void emit_census(const RunConfig& cfg, const CensusResult& c, const std::string& out_dir) {
  if (!out_dir.empty()) {
    std::filesystem::create_directories(out_dir);
    for (std::size_t i = 0; i < c.dessins.size(); ++i) {
      const auto& d = c.dessins[i].dessin;
      write_file(out_dir + "/dessin-" + std::to_string(d.degree()) + "-" + std::to_string(i + 1) + ".txt",
                 format_dessin_text(d));
    }
  }
  if (cfg.format == "json") {
    json j;
    j["count"] = c.dessins.size();
    j["weighted_count"] = to_string(c.weighted_count());
    j["search_nodes"] = c.search_nodes;
    j["dessins"] = json::array();
    for (const auto& r : c.dessins) j["dessins"].push_back(report_json(r));
    emit(cfg, j.dump(2) + "\n");
  } else {
    emit(cfg, census_text(c));
  }
}

int cmd_analyze(const RunConfig& cfg, const std::string& file) {
  const Dessin d = parse_dessin(read_file(file));
  const PermGroup g = monodromy(d);
  const auto systems = all_minimal_block_systems(g);
  const auto t = type(d);
  json j;
  j["degree"] = d.degree();
  j["passport"] = passport(d).str();
  j["type"] = {t[0], t[1], t[2]};
  j["genus"] = genus(d);
  j["monodromy_order"] = to_string(g.order());
  j["transitive"] = g.is_transitive();
  j["primitive"] = systems.empty();
  j["minimal_block_systems"] = json::array();
  for (const auto& b : systems) j["minimal_block_systems"].push_back(std::to_string(b.block_count()) + " blocks of size " + std::to_string(b.block_size()));
  j["automorphisms"] = automorphism_order(d);
  j["regular"] = is_regular(d);
  j["faithful"] = is_faithful(d, cfg.limits);
  j["cover_genus"] = to_string(cover_genus(d));
  if (cfg.format == "json") {
    emit(cfg, j.dump(2) + "\n");
    return 0;
  }
  std::ostringstream out;
  for (const auto& [k, v] : j.items()) out << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
  emit(cfg, out.str());
  return 0;
}

int cmd_chartab(const RunConfig& cfg, const std::string& file) {
  const auto cs = conjugacy_classes(parse_group(read_file(file)), cfg.limits);
  const auto t = dixon_table(cs, cfg.seed);
  if (cfg.format == "json") {
    json j;
    j["order"] = t.group_order;
    j["classes"] = json::array();
    for (const auto& c : t.classes) j["classes"].push_back({{"label", c.label}, {"size", c.size}, {"representative", render(c.representative)}});
    j["characters"] = json::array();
    for (const auto& row : t.rows) {
      json r = json::array();
      for (const auto& v : row) r.push_back(v.str());
      j["characters"].push_back(r);
    }
    emit(cfg, j.dump(2) + "\n");
  } else {
    emit(cfg, format_table(t));
  }
  return rows_orthonormal(t) && columns_orthogonal(t) ? 0 : kCheckFailed;
}

int cmd_count(const RunConfig& cfg, const std::string& file, const std::string& classes, const std::string& type_str) {
  const auto cs = conjugacy_classes(parse_group(read_file(file)), cfg.limits);
  const auto t = dixon_table(cs, cfg.seed);
  std::ostringstream out;
  bool agree = true;
  if (!classes.empty()) {
    std::vector<std::size_t> idx;
    std::stringstream in(classes);
    std::string label;
    while (std::getline(in, label, ',')) {
      auto c = cs.find_label(label);
      if (!c) throw InvalidArgument("no class labelled '" + label + "'");
      idx.push_back(*c);
    }
    if (idx.size() != 3) throw InvalidArgument("--classes needs three labels");
    const BigInt f = frobenius_count(t, idx[0], idx[1], idx[2]);
    const BigInt b = brute_force_triple_count(cs, idx[0], idx[1], idx[2]);
    agree = f == b;
    out << "frobenius " << to_string(f) << "\nbrute force " << to_string(b) << "\n";
  } else {
    const auto p = parse_type(type_str);
    const BigInt f = triple_count_by_type(t, p[0], p[1], p[2]);
    const auto tally = triple_count_tally(cs);
    BigInt b = 0;
    for (std::size_t x = 0; x < t.size(); ++x) {
      for (std::size_t y = 0; y < t.size(); ++y) {
        for (std::size_t z = 0; z < t.size(); ++z) {
          if (t.classes[x].element_order == p[0] && t.classes[y].element_order == p[1] &&
              t.classes[z].element_order == p[2]) {
            b += tally[x][y][z];
          }
        }
      }
    }
    agree = f == b;
    out << "frobenius " << to_string(f) << "\nbrute force " << to_string(b) << "\n";
  }
  out << (agree ? "agree\n" : "DISAGREE\n");
  emit(cfg, out.str());
  return agree ? 0 : kCheckFailed;
}

int cmd_moebius(const RunConfig& cfg, const std::string& file, const std::string& type_str) {
  const PermGroup g = parse_group(read_file(file));
  const auto p = parse_type(type_str);
  SubgroupLattice lat(g, cfg.limits);
  const auto tab = mobius_table(lat, {p[0], p[1], p[2]});
  const auto cs = conjugacy_classes(g, cfg.limits);
  const auto aut = automorphism_count(cs);
  const BigInt count = regular_dessin_count(tab.phi, aut);
  if (cfg.format == "json") {
    json j;
    j["classes"] = json::array();
    for (const auto& r : tab.rows) {
      j["classes"].push_back({{"order", r.order}, {"size", r.class_size}, {"mu", r.mu}, {"sigma", to_string(r.sigma)}});
    }
    j["phi"] = to_string(tab.phi);
    j["automorphisms"] = aut;
    j["regular_dessins"] = to_string(count);
    emit(cfg, j.dump(2) + "\n");
    return 0;
  }
  std::ostringstream out;
  out << "order  size      mu           sigma    contribution\n";
  for (const auto& r : tab.rows) {
    out << std::setw(5) << r.order << std::setw(6) << r.class_size << std::setw(8) << r.mu << std::setw(16)
        << to_string(r.sigma) << std::setw(16)
        << to_string(BigInt(BigInt(static_cast<long>(r.mu)) * from_u64(r.class_size) * r.sigma)) << "\n";
  }
  out << "phi " << to_string(tab.phi) << "\n|Aut(G)| " << aut << "\nregular dessins " << to_string(count) << "\n";
  emit(cfg, out.str());
  return 0;
}

int cmd_construct(const RunConfig& cfg, const std::string& name) {
  if (name == "fano-trees") {
    auto [l, r] = fano_tree_triples();
    emit_dessins(cfg, {l, r});
  } else if (name == "psl2-7") {
    emit_dessins(cfg, {psl2_natural_triple_7()});
  } else if (name == "psl2-27") {
    emit_dessins(cfg, {psl2_27_triple()});
  } else if (name == "genus17") {
    auto t = genus17_triples();
    emit_dessins(cfg, {t.begin(), t.end()});
  } else if (name == "agl32") {
    emit(cfg, group_to_json(agl32()));
  } else if (name == "census127") {
    std::vector<Dessin> ds;
    for (const auto& r : count_one_seven_face(cfg.workers).dessins) ds.push_back(r.dessin);
    emit_dessins(cfg, ds);
  } else {
    throw InvalidArgument("unknown construction '" + name +
                          "' (fano-trees, psl2-7, psl2-27, genus17, agl32, census127)");
  }
  return 0;
}

int cmd_quotient(const RunConfig& cfg, const std::string& file, const std::string& subgroup) {
  const Dessin d = parse_dessin(read_file(file));
  const PermGroup h = parse_group(read_file(subgroup));
  if (!h.is_subgroup_of(monodromy(d))) throw InvalidArgument("the subgroup is not contained in the monodromy group");
  emit(cfg, render_dessin(cfg, coset_dessin(d, h, cfg.limits)));
  return 0;
}

int cmd_cover(const RunConfig& cfg, const std::string& file) {
  const Dessin d = parse_dessin(read_file(file));
  auto c = regular_cover(d, cfg.limits);
  emit(cfg, render_dessin(cfg, c.dessin));
  return is_regular(c.dessin) ? 0 : kCheckFailed;
}

int cmd_verify_belyi(const RunConfig& cfg) {
  bool ok = true;
  std::ostringstream out;
  for (const auto& c : verify_klein_tree_belyi()) {
    out << (c.passed ? "pass  " : "FAIL  ") << c.name << "  [" << c.detail << "]\n";
    ok = ok && c.passed;
  }
  emit(cfg, out.str());
  return ok ? 0 : kCheckFailed;
}

int cmd_check_all(const RunConfig& cfg) {
  CheckSettings s{cfg.workers, cfg.seed};
  bool ok = true;
  json j = json::array();
  for (const auto& c : acceptance_criteria()) {
    auto r = run_criterion(c, s);
    ok = ok && r.passed;
    if (cfg.format == "json") {
      j.push_back({{"id", r.id}, {"title", r.title}, {"passed", r.passed}, {"seconds", r.seconds}, {"detail", r.detail}});
    } else {
      std::cout << (r.passed ? "PASS " : "FAIL ") << std::setw(2) << r.id << "  " << r.title << "  (" << std::fixed
                << std::setprecision(3) << r.seconds << " s)\n      " << r.detail << "\n"
                << std::flush;
    }
  }
  if (cfg.format == "json") emit(cfg, j.dump(2) + "\n");
  return ok ? 0 : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dessins d'enfants: permutation triples, characters, subgroup lattices and censuses"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  try {
    load_config(cfg);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  if (cfg.workers == 0) cfg.workers = std::max(1u, std::thread::hardware_concurrency());

  app.add_option("--enumeration-cap", cfg.limits.enumeration_cap, "Largest group enumerated element by element");
  app.add_option("--lattice-cap", cfg.limits.lattice_cap, "Largest group whose subgroup lattice is built");
  app.add_option("--degree-cap", cfg.limits.degree_cap, "Largest coset action or cover");
  app.add_option("-j,--workers", cfg.workers, "Worker threads for enumeration");
  app.add_option("--seed", cfg.seed, "Seed for randomised internal choices");
  app.add_option("-f,--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json", "dot"}));
  app.add_option("-o,--output", cfg.output, "Write output to this file");

  std::string file, group_file, classes, type_str, name, subgroup, out_dir;
  std::string cx = "any", cy = "any", cz = "any";
  std::size_t degree = 0, lo = 0, hi = 0;
  bool one = false, two = false;

  auto* analyze = app.add_subcommand("analyze", "Invariants of a dessin file");
  analyze->add_option("dessin", file)->required()->check(CLI::ExistingFile);

  auto* enumerate_cmd = app.add_subcommand("enumerate", "All dessins of given degrees and cycle constraints");
  enumerate_cmd->add_option("--degree", degree, "Single degree");
  enumerate_cmd->add_option("--min", lo, "Least degree");
  enumerate_cmd->add_option("--max", hi, "Greatest degree");
  enumerate_cmd->add_option("--x", cx, "any | div:k | exact:TYPE | within:TYPE");
  enumerate_cmd->add_option("--y", cy, "Constraint on y");
  enumerate_cmd->add_option("--z", cz, "Constraint on z");
  enumerate_cmd->add_option("--out-dir", out_dir, "Write one dessin file per result");

  auto* census = app.add_subcommand("census", "Censuses of (3,2,7) maps by number of 7-faces");
  auto* census_kind = census->add_option_group("kind");
  census_kind->add_flag("--one-seven", one, "One face of degree 7, degrees 7..13");
  census_kind->add_flag("--two-seven", two, "Two faces of degree 7, degrees 14..20");
  census_kind->require_option(1);
  census->add_option("--out-dir", out_dir, "Write one dessin file per result");

  auto* chartab = app.add_subcommand("chartab", "Character table of a permutation group");
  chartab->add_option("group", group_file)->required()->check(CLI::ExistingFile);

  auto* count = app.add_subcommand("count", "Frobenius triple counts with a brute-force cross-check");
  count->add_option("group", group_file)->required()->check(CLI::ExistingFile);
  auto* count_kind = count->add_option_group("kind");
  count_kind->add_option("--classes", classes, "Three class labels, e.g. 3A,2A,7A");
  count_kind->add_option("--type", type_str, "Element orders p,q,r");
  count_kind->require_option(1);

  auto* moebius = app.add_subcommand("moebius", "Mobius function, sigma, phi and regular dessin count");
  moebius->add_option("group", group_file)->required()->check(CLI::ExistingFile);
  moebius->add_option("--type", type_str, "Element orders p,q,r")->required();

  auto* construct = app.add_subcommand("construct", "Named constructions");
  construct->add_option("name", name, "fano-trees, psl2-7, psl2-27, genus17, agl32, census127")->required();

  auto* quotient = app.add_subcommand("quotient", "Dessin on the cosets of a subgroup of the monodromy group");
  quotient->add_option("dessin", file)->required()->check(CLI::ExistingFile);
  quotient->add_option("--subgroup", subgroup, "Group file")->required()->check(CLI::ExistingFile);

  auto* cover = app.add_subcommand("cover", "Regular cover of a dessin");
  cover->add_option("dessin", file)->required()->check(CLI::ExistingFile);

  auto* belyi = app.add_subcommand("verify-belyi", "Exact check of the Fano tree Belyi polynomials");
  auto* check_all = app.add_subcommand("paper-check", "Run every acceptance criterion");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kUsage;
  }

  try {
    if (*analyze) return cmd_analyze(cfg, file);
    if (*enumerate_cmd) {
      if (degree) lo = hi = degree;
      if (lo == 0 || hi < lo) throw InvalidArgument("give --degree or --min/--max");
      CensusResult all;
      for (std::size_t n = lo; n <= hi; ++n) {
        auto part = enumerate({n, parse_constraint(cx), parse_constraint(cy), parse_constraint(cz), cfg.workers});
        all.search_nodes += part.search_nodes;
        for (auto& d : part.dessins) all.dessins.push_back(std::move(d));
      }
      emit_census(cfg, all, out_dir);
      return 0;
    }
    if (*census) {
      emit_census(cfg, one ? count_one_seven_face(cfg.workers) : census_two_seven_faces(cfg.workers), out_dir);
      return 0;
    }
    if (*chartab) return cmd_chartab(cfg, group_file);
    if (*count) return cmd_count(cfg, group_file, classes, type_str);
    if (*moebius) return cmd_moebius(cfg, group_file, type_str);
    if (*construct) return cmd_construct(cfg, name);
    if (*quotient) return cmd_quotient(cfg, file, subgroup);
    if (*cover) return cmd_cover(cfg, file);
    if (*belyi) return cmd_verify_belyi(cfg);
    if (*check_all) return cmd_check_all(cfg);
  } catch (const CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return kCap;
  } catch (const VerificationFailure& e) {
    std::cerr << "check failed: " << e.what() << "\n";
    return kCheckFailed;
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
