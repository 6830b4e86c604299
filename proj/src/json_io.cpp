#include "mfblocks/json_io.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "mfblocks/error.hpp"

namespace mfb {

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) schema_error(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::int64_t get_int(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number_integer()) schema_error(std::string("field \"") + key + "\" must be an integer");
  return v.get<std::int64_t>();
}

Integer integer_from(const json& v) {
  Integer z;
  if (v.is_string()) {
    if (z.set_str(v.get<std::string>(), 10) != 0) schema_error("invalid integer string " + v.get<std::string>());
  } else if (v.is_number_integer()) {
    z = Integer(v.get<long>());
  } else {
    schema_error("expected an integer or decimal string");
  }
  return z;
}

}  // namespace

std::string data_dir() {
  if (const char* env = std::getenv("MFBLOCKS_DATA"); env && *env) return env;
#ifdef MFBLOCKS_DATA_DIR
  return MFBLOCKS_DATA_DIR;
#else
  return "data";
#endif
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) domain_error("FileNotFound", "cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    schema_error(path + ": " + e.what());
  }
}

std::string dump_json(const json& j) { return j.dump(2) + "\n"; }

void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) domain_error("FileNotWritable", "cannot write " + path);
  out << dump_json(j);
}

json cyclo_to_json(const CycloNum& x) {
  json c = json::array();
  for (const auto& q : x.coeffs()) c.push_back(json::array({q.get_num().get_str(), q.get_den().get_str()}));
  return json{{"n", x.conductor()}, {"coeffs", c}};
}

CycloNum cyclo_from_json(const json& j) {
  if (j.is_number_integer()) return CycloNum(j.get<long>());
  const std::int64_t n = get_int(j, "n");
  if (n < 1) schema_error("conductor must be positive");
  const json& c = field(j, "coeffs");
  if (!c.is_array()) schema_error("coeffs must be an array");
  std::vector<Rational> q;
  for (const auto& e : c) {
    if (!e.is_array() || e.size() != 2) schema_error("coefficient must be a [num, den] pair");
    Integer num = integer_from(e[0]), den = integer_from(e[1]);
    if (den == 0) schema_error("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    q.push_back(r);
  }
  if (static_cast<std::int64_t>(q.size()) != euler_phi(n)) schema_error("coeffs length must equal phi(n)");
  return CycloNum(n, std::move(q));
}

json fq_to_json(const FqElem& x) {
  return json{{"ell", x.ell()}, {"poly", x.field->modulus()}, {"coeffs", x.coeffs()}};
}

FqElem fq_from_json(const json& j) {
  const std::int64_t ell = get_int(j, "ell");
  auto poly = field(j, "poly").get<std::vector<int>>();
  auto coeffs = field(j, "coeffs").get<std::vector<int>>();
  auto F = FiniteField::with_modulus(ell, poly);
  for (int c : coeffs)
    if (c < 0 || c >= ell) schema_error("field coefficient out of range");
  if (static_cast<int>(coeffs.size()) != F->degree()) schema_error("field element has wrong number of coefficients");
  return FqElem{F, F->from_digits(coeffs)};
}

json perm_to_json(const Perm& p) {
  json a = json::array();
  for (int v : p) a.push_back(v + 1);
  return a;
}

Perm perm_from_json(const json& j, int degree) {
  if (!j.is_array() || static_cast<int>(j.size()) != degree) schema_error("permutation must list " + std::to_string(degree) + " images");
  Perm p;
  for (const auto& v : j) {
    if (!v.is_number_integer()) schema_error("permutation images must be integers");
    p.push_back(v.get<int>() - 1);
  }
  if (!perm_valid(p)) schema_error("not a permutation of 1.." + std::to_string(degree));
  return p;
}

json group_to_json(const PermGroup& G) {
  json gens = json::array();
  for (const auto& g : G.generators()) gens.push_back(perm_to_json(g));
  json j{{"degree", G.degree()}, {"generators", gens}};
  if (!G.name().empty()) j["name"] = G.name();
  return j;
}

PermGroup group_from_json(const json& j, std::int64_t bound) {
  const std::int64_t deg = get_int(j, "degree");
  if (deg < 1 || deg > 100000) schema_error("invalid degree");
  const json& gs = field(j, "generators");
  if (!gs.is_array()) schema_error("generators must be an array");
  std::vector<Perm> gens;
  for (const auto& g : gs) gens.push_back(perm_from_json(g, static_cast<int>(deg)));
  std::string name = j.contains("name") && j["name"].is_string() ? j["name"].get<std::string>() : "";
  return PermGroup::generate(static_cast<int>(deg), gens, bound, name);
}

PermGroup resolve_group(const std::string& name_or_path, std::int64_t bound) {
  namespace fs = std::filesystem;
  if (fs::exists(name_or_path) && fs::is_regular_file(name_or_path)) return group_from_json(read_json_file(name_or_path), bound);
  fs::path p = fs::path(data_dir()) / "groups" / (name_or_path + ".json");
  if (fs::exists(p)) return group_from_json(read_json_file(p.string()), bound);
  domain_error("UnknownGroup", "no group file or builtin group named " + name_or_path);
}

json table_to_json(const CharacterTable& t) {
  json classes = json::array();
  for (const auto& c : t.classes()) {
    json e{{"label", c.label}};
    if (c.rep) e["rep"] = perm_to_json(*c.rep);
    e["size"] = c.size;
    e["order"] = c.element_order;
    classes.push_back(e);
  }
  json chars = json::array();
  for (const auto& row : t.chars()) {
    json r = json::array();
    for (const auto& v : row) r.push_back(cyclo_to_json(v));
    chars.push_back(r);
  }
  json j{{"order", t.order()}, {"exponent", t.exponent()}};
  if (t.group()) j["group"] = group_to_json(*t.group());
  j["classes"] = classes;
  j["chars"] = chars;
  return j;
}

CharacterTable table_from_json(const json& j, std::int64_t bound) {
  const std::int64_t order = get_int(j, "order");
  const std::int64_t exponent = get_int(j, "exponent");
  std::shared_ptr<const PermGroup> G;
  if (j.contains("group")) G = std::make_shared<const PermGroup>(group_from_json(j["group"], bound));
  const json& cl = field(j, "classes");
  if (!cl.is_array()) schema_error("classes must be an array");
  std::vector<ClassInfo> classes;
  for (std::size_t i = 0; i < cl.size(); ++i) {
    const json& c = cl[i];
    ClassInfo info;
    info.size = get_int(c, "size");
    if (c.contains("order")) info.element_order = get_int(c, "order");
    if (c.contains("label")) info.label = c["label"].get<std::string>();
    if (c.contains("rep")) {
      const json& r = c["rep"];
      if (r.is_string()) {
        if (info.label.empty()) info.label = r.get<std::string>();
      } else {
        if (!G) schema_error("class representative given as a permutation but no group is embedded");
        info.rep = perm_from_json(r, G->degree());
      }
    }
    if (info.label.empty()) info.label = "c" + std::to_string(i + 1);
    classes.push_back(std::move(info));
  }
  if (G) {
    if (G->order() != order) schema_error("embedded group order does not match the table");
    if (G->num_classes() != static_cast<int>(classes.size())) schema_error("embedded group class count does not match the table");
    for (std::size_t i = 0; i < classes.size(); ++i) {
      if (!classes[i].rep) schema_error("tables with an embedded group need permutation representatives");
      const int idx = G->index_of(*classes[i].rep);
      if (idx < 0 || G->class_of(idx) != static_cast<int>(i)) schema_error("class representatives are not in the group's class order");
    }
  }
  const json& ch = field(j, "chars");
  if (!ch.is_array()) schema_error("chars must be an array");
  std::vector<std::vector<CycloNum>> rows;
  for (const auto& r : ch) {
    if (!r.is_array()) schema_error("character rows must be arrays");
    std::vector<CycloNum> row;
    for (const auto& v : r) row.push_back(cyclo_from_json(v));
    rows.push_back(std::move(row));
  }
  return CharacterTable(order, exponent, std::move(classes), std::move(rows), std::move(G));
}

CharacterTable load_table(const std::string& path, std::int64_t bound) { return table_from_json(read_json_file(path), bound); }

void save_table(const CharacterTable& t, const std::string& path) { write_json_file(path, table_to_json(t)); }

}  // namespace mfb
