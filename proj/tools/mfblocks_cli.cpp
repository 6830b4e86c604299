// mfblocks: batch front end. Every command prints JSON (default) or aligned
// text; errors go to stderr as JSON with exit codes 1 (domain), 2 (bound),
// 3 (schema), 4 (internal).

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "mfblocks/error.hpp"
#include "mfblocks/reports.hpp"
#include "mfblocks/symmetric.hpp"

using namespace mfb;

namespace {

struct RunConfig {
  std::string format = "json";
  std::string out;
  std::int64_t bound = kDefaultElementBound;
  std::int64_t subgroup_bound = kDefaultSubgroupBound;
  std::int64_t embedding = 1;
};

json with_header(const std::string& command, const json& body) {
  json j{{"command", command}, {"schema_version", kSchemaVersion}};
  for (auto it = body.begin(); it != body.end(); ++it) j[it.key()] = it.value();
  return j;
}

std::string s(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "-";
  return v.dump();
}

std::string join(const json& arr, const std::string& sep = ",") {
  std::string out;
  for (std::size_t i = 0; i < arr.size(); ++i) out += (i ? sep : "") + s(arr[i]);
  return out;
}

// Aligned columns.
class Table {
 public:
  explicit Table(std::vector<std::string> head) { rows_.push_back(std::move(head)); }
  void add(std::vector<std::string> r) { rows_.push_back(std::move(r)); }
  std::string str() const {
    std::vector<std::size_t> w(rows_[0].size(), 0);
    for (const auto& r : rows_)
      for (std::size_t i = 0; i < r.size(); ++i) w[i] = std::max(w[i], r[i].size());
    std::ostringstream o;
    for (const auto& r : rows_) {
      for (std::size_t i = 0; i < r.size(); ++i) {
        o << std::left << std::setw(static_cast<int>(w[i])) << r[i];
        if (i + 1 < r.size()) o << "  ";
      }
      o << "\n";
    }
    return o.str();
  }

 private:
  std::vector<std::vector<std::string>> rows_;
};

std::string render_text(const json& j) {
  const std::string cmd = j.value("command", "");
  std::ostringstream o;
  if (cmd == "chartable") {
    o << "order " << s(j["order"]) << ", exponent " << s(j["exponent"]) << ", " << j["classes"].size() << " classes\n";
    std::vector<std::string> head{"chi"};
    for (const auto& c : j["classes"]) head.push_back(s(c["label"]));
    Table t(head);
    const auto& rows = j["values"];
    for (std::size_t i = 0; i < rows.size(); ++i) {
      std::vector<std::string> r{std::to_string(i)};
      for (const auto& v : rows[i]) r.push_back(s(v));
      t.add(r);
    }
    o << t.str();
  } else if (cmd == "blocks") {
    o << "ell = " << s(j["ell"]) << ", " << s(j["num_blocks"]) << " blocks\n";
    Table t({"block", "chars", "degrees", "defect", "orbit", "defect group"});
    for (const auto& b : j["blocks"]) {
      std::string dg = "-";
      if (b.contains("defect_group")) {
        const auto& d = b["defect_group"];
        dg = d.contains("skipped") ? "skipped" : s(d["shape"]) + " of order " + s(d["order"]);
      }
      t.add({s(b["id"]), join(b["chars"]), join(b["degrees"]), s(b["defect"]),
             s(b["orbit"]) + "/" + s(b["orbit_length"]), dg});
    }
    o << t.str();
  } else if (cmd == "orbits") {
    o << "ell = " << s(j["ell"]) << ", sigma = [" << join(j["sigma"]) << "]\n";
    Table t({"orbit", "blocks", "length"});
    for (const auto& x : j["orbits"]) t.add({s(x["orbit"]), join(x["blocks"], " -> "), s(x["length"])});
    o << t.str();
  } else if (cmd == "certify") {
    Table t({"block", "mf", "criterion", "failed", "skipped"});
    for (const auto& c : j["certificates"])
      t.add({s(c["block"]), s(c["verdict"]), s(c["criterion"]), join(c["failed"]), join(c["skipped"])});
    o << t.str() << "all exactly one: " << s(j["all_exactly_one"]) << ", replayed: " << s(j["replayed"]) << "\n";
  } else if (cmd == "dominate") {
    o << "|Z| = " << s(j["normal_order"]) << ", |G/Z| = " << s(j["quotient_order"]) << "\n";
    Table t({"block", "chars", "defect", "dominates", "dim", "dominated dim"});
    for (const auto& b : j["blocks"])
      t.add({s(b["block"]), join(b["chars"]), s(b["defect"]), join(b["dominated"]), s(b["dim"]), s(b["dominated_dim"])});
    o << t.str();
  } else if (cmd == "snblocks" || cmd == "anreport") {
    Table t({"core", "characters", "defect", "mf", "criterion", "status"});
    for (const auto& b : j["blocks"]) {
      const json& core = cmd == "snblocks" ? b["core"] : b["sn_cores"];
      t.add({core.dump(), join(b["characters"], " "), s(b["defect"]), s(b["verdict"]), s(b["criterion"]),
             s(b.value("status", json("verified")))});
    }
    o << t.str() << "checked against the table: " << s(j["table_checked"]) << ", agrees: " << s(j["table_agrees"]) << "\n";
  } else if (cmd == "lietype") {
    o << s(j["type"]) << "(q), q = " << s(j["q"]) << ", ell = " << s(j["ell"]) << ", e = " << s(j["e"])
      << (j["good_prime"].get<bool>() ? " (good)" : " (bad)") << "\n";
    Table t({"levi", "characters", "mf", "reason", "stated", "condition"});
    for (const auto& v : j["verdicts"])
      t.add({s(v["levi"]), v["characters"].is_array() ? join(v["characters"], " ") : s(v["characters"]), s(v["verdict"]),
             s(v["reason"]), s(v["stated"]), s(v["condition"])});
    o << t.str();
  } else if (cmd == "suzukiree") {
    Table t({"blocks", "condition", "mf", "reason", "characters"});
    for (const auto& v : j["verdicts"])
      t.add({s(v["blocks"]), s(v["condition"]), s(v["verdict"]), s(v["reason"]), join(v["characters"], " ")});
    o << t.str();
  } else if (cmd == "twist") {
    o << "dim " << s(j["dim"]) << " over F_" << s(j["ell"]) << "[x]/(" << join(j["poly"]) << "), a = " << s(j["a"]) << "\n"
      << "constants in prime field: " << s(j["constants_in_prime_field"]) << "\n"
      << "twist equals input: " << s(j["twist_equals_input"]) << "\n"
      << "has F_ell-form: " << s(j["has_ell_form"]) << "\n"
      << "isomorphic to twist: " << s(j["isomorphic_to_input"]) << "\n";
  } else if (cmd == "twisted") {
    const auto& r = j["root_iso"];
    o << "group " << s(j["group"]) << " of order " << s(j["order"]) << " over F_" << s(j["ell"]) << "\n"
      << "ring isomorphism: " << s(r["ring_isomorphism"]) << "\n"
      << "semilinear: " << s(r["semilinear"]) << "\n"
      << "twist matches: " << s(r["twist_matches"]) << "\n"
      << "root isomorphism verified: " << s(r["ok"]) << "\n";
  } else {
    o << j.dump(2) << "\n";
  }
  return o.str();
}

void emit(const RunConfig& cfg, const json& j) {
  const std::string text = cfg.format == "text" ? render_text(j) : dump_json(j) + "\n";
  if (cfg.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(cfg.out);
    if (!f) domain_error("FileNotFound", "cannot write " + cfg.out);
    f << text;
  }
}

void check_prime(std::int64_t ell) {
  if (!is_prime(static_cast<std::uint64_t>(ell))) domain_error("NotPrime", std::to_string(ell) + " is not prime");
}

BlockPartition partition_for(const RunConfig& cfg, const std::string& source, std::int64_t ell) {
  check_prime(ell);
  auto t = resolve_table(source, cfg.bound);
  std::optional<EmbeddingSpec> emb;
  if (cfg.embedding != 1) emb = EmbeddingSpec::make(ell, t->exponent(), cfg.embedding);
  return block_partition(t, ell, emb);
}

json chartable_json(const CharacterTable& t) {
  json j{{"command", "chartable"}, {"schema_version", kSchemaVersion}};
  const json body = table_to_json(t);
  for (auto it = body.begin(); it != body.end(); ++it) j[it.key()] = it.value();
  json vals = json::array();
  for (const auto& row : t.chars()) {
    json r = json::array();
    for (const auto& v : row) r.push_back(v.to_string());
    vals.push_back(r);
  }
  j["values"] = vals;
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Blocks, Galois conjugation and Morita Frobenius certificates for finite group algebras"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--out", cfg.out, "Write output to this file");
  app.add_option("--bound", cfg.bound, "Element bound for group enumeration")->check(CLI::PositiveNumber);
  app.add_option("--subgroup-bound", cfg.subgroup_bound, "Bound for the ell-subgroup search")->check(CLI::PositiveNumber);
  app.add_option("--embedding", cfg.embedding, "Use the default root of unity raised to this power");

  std::string source;
  std::int64_t ell = 0;
  auto need_ell = [&](CLI::App* sub) { sub->add_option("--ell,-l", ell, "The prime ell")->required(); };

  auto* chartable = app.add_subcommand("chartable", "Character table of a group (builtin name, group file or table file)");
  chartable->add_option("source", source)->required();
  bool save_plain = false;
  chartable->add_flag("--plain", save_plain, "Write a loadable table file (no report keys) to --out");

  auto* blocks = app.add_subcommand("blocks", "Block partition with defects and defect groups");
  blocks->add_option("source", source)->required();
  need_ell(blocks);
  bool idempotents = false, klein = false;
  blocks->add_flag("--idempotents", idempotents, "Include block idempotents");
  blocks->add_flag("--klein-dihedral", klein, "Count the Klein four-group as dihedral");

  auto* orbits = app.add_subcommand("orbits", "Galois conjugation on blocks");
  orbits->add_option("source", source)->required();
  need_ell(orbits);

  auto* certify = app.add_subcommand("certify", "Morita Frobenius certificates for every block");
  certify->add_option("source", source)->required();
  need_ell(certify);
  std::string autos;
  certify->add_option("--automorphisms", autos, "JSON file of automorphisms given by generator images");
  certify->add_flag("--klein-dihedral", klein, "Count the Klein four-group as dihedral");

  auto* dominate = app.add_subcommand("dominate", "Domination of blocks of G/Z");
  dominate->add_option("source", source)->required();
  need_ell(dominate);
  std::string normal;
  dominate->add_option("--normal", normal, "JSON array of generators of Z (1-based images); default the center");

  int n = 0;
  auto* snblocks = app.add_subcommand("snblocks", "Blocks of S_n by ell-core");
  snblocks->add_option("n", n)->required()->check(CLI::Range(0, 60));
  need_ell(snblocks);
  auto* anreport = app.add_subcommand("anreport", "Morita Frobenius verdicts for the blocks of A_n");
  anreport->add_option("n", n)->required()->check(CLI::Range(2, 60));
  need_ell(anreport);

  std::string type;
  std::int64_t q = 0;
  auto* lietype = app.add_subcommand("lietype", "Unipotent block verdicts for a group of Lie type");
  lietype->add_option("type", type)->required();
  need_ell(lietype);
  lietype->add_option("--q,-q", q, "Prime power q")->required();

  std::optional<std::int64_t> field_size;
  auto* suzukiree = app.add_subcommand("suzukiree", "Verdicts for Suzuki and Ree groups");
  suzukiree->add_option("type", type)->required();
  need_ell(suzukiree);
  suzukiree->add_option("--field-size", field_size, "Size of the defining field (odd power of 2 or 3)");

  std::string file;
  int a = 1;
  auto* twist = app.add_subcommand("twist", "Frobenius twist of a structure-constant algebra");
  twist->add_option("algebra", file)->required();
  twist->add_option("-a", a, "Twist exponent");

  bool with_algebra = false;
  auto* twisted = app.add_subcommand("twisted", "Twisted group algebra and the coefficient-wise root isomorphism");
  twisted->add_option("cocycle", file)->required();
  twisted->add_option("--group", source, "Group for the cocycle (overrides the file)");
  twisted->add_flag("--algebra", with_algebra, "Include the structure constants");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 3;
  }

  try {
    if (chartable->parsed()) {
      auto t = resolve_table(source, cfg.bound);
      if (save_plain) {
        if (cfg.out.empty()) schema_error("--plain needs --out");
        save_table(*t, cfg.out);
      } else {
        emit(cfg, chartable_json(*t));
      }
    } else if (blocks->parsed()) {
      BlockReportOptions o;
      o.idempotents = idempotents;
      o.klein_is_dihedral = klein;
      o.subgroup_bound = cfg.subgroup_bound;
      emit(cfg, blocks_report(partition_for(cfg, source, ell), o));
    } else if (orbits->parsed()) {
      emit(cfg, orbits_report(partition_for(cfg, source, ell)));
    } else if (certify->parsed()) {
      auto P = partition_for(cfg, source, ell);
      std::vector<GroupMap> maps;
      if (!autos.empty()) {
        if (!P.table->group()) domain_error("NoGroup", "automorphisms need a table with its group");
        maps = automorphisms_from_json(*P.table->group(), read_json_file(autos));
      }
      CertifyOptions o;
      o.klein_is_dihedral = klein;
      o.subgroup_bound = cfg.subgroup_bound;
      emit(cfg, certify_report(P, certify_all(P, maps, o)));
    } else if (dominate->parsed()) {
      check_prime(ell);
      auto G = std::make_shared<const PermGroup>(resolve_group(source, cfg.bound));
      std::vector<Perm> gens;
      if (normal.empty()) {
        for (int x : subgroup_generators(*G, center(*G))) gens.push_back(G->element(x));
      } else {
        json nj;
        try {
          nj = json::parse(normal);
        } catch (const json::parse_error& e) {
          schema_error(std::string("--normal: ") + e.what());
        }
        if (!nj.is_array()) schema_error("--normal must be a JSON array of permutations");
        for (const auto& p : nj) gens.push_back(perm_from_json(p, G->degree()));
      }
      emit(cfg, dominate_report(G, gens, ell, cfg.bound));
    } else if (snblocks->parsed()) {
      check_prime(ell);
      emit(cfg, with_header("snblocks", sn_report_to_json(sn_block_report(n, static_cast<int>(ell)))));
    } else if (anreport->parsed()) {
      check_prime(ell);
      emit(cfg, with_header("anreport", an_report_to_json(an_mf_report(n, static_cast<int>(ell)))));
    } else if (lietype->parsed()) {
      emit(cfg, lietype_report(parse_type(type), ell, q));
    } else if (suzukiree->parsed()) {
      emit(cfg, suzukiree_report(parse_type(type), ell, field_size));
    } else if (twist->parsed()) {
      emit(cfg, twist_report(algebra_from_json(read_json_file(file)), a));
    } else if (twisted->parsed()) {
      std::shared_ptr<const PermGroup> G;
      if (!source.empty()) G = std::make_shared<const PermGroup>(resolve_group(source, cfg.bound));
      emit(cfg, twisted_report(cocycle_from_json(read_json_file(file), G), with_algebra));
    }
  } catch (const Error& e) {
    std::cerr << error_json(e).dump() << "\n";
    return exit_code(e.category());
  } catch (const std::exception& e) {
    std::cerr << error_json(Error(ErrorCategory::Internal, "InternalError", e.what())).dump() << "\n";
    return 4;
  }
  return 0;
}
