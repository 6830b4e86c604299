#include "mfblocks/lietype.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <regex>

#include "mfblocks/error.hpp"

namespace mfb {

namespace {

struct TypeData {
  int rank = 0;
  int dimension = 0;
  PolynomialOrder order;
  int center_n = 1;     // gcd(center_n, q - center_sign); 1 for trivial
  int center_sign = 1;
  std::vector<int> bad;
};

struct LieData {
  std::map<std::string, TypeData> types;
  std::vector<CuspidalPairRow> rows;
  std::map<std::string, std::pair<int, int>> footnote_at;  // marker -> (ell, e)
};

PolynomialOrder order_from_json(const json& j) {
  PolynomialOrder p;
  p.q_power = j.at("q_power").get<int>();
  for (const auto& [d, m] : j.at("phi").items()) p.phi[std::stoi(d)] = m.get<int>();
  return p;
}

LieData load_lie_data() {
  LieData out;
  const json j = read_json_file(data_dir() + "/lietype.json");
  try {
    for (const auto& [name, t] : j.at("types").items()) {
      TypeData d;
      d.rank = t.at("rank").get<int>();
      d.dimension = t.at("dimension").get<int>();
      d.order = order_from_json(t.at("polynomial_order"));
      const auto& c = t.at("center");
      if (c.at("kind") == "gcd") {
        d.center_n = c.at("n").get<int>();
        d.center_sign = c.at("sign").get<int>();
      } else if (c.at("kind") != "trivial") {
        schema_error("unknown center kind for " + name);
      }
      d.bad = t.at("bad_primes").get<std::vector<int>>();
      if (d.order.degree() != d.dimension) schema_error("polynomial order of " + name + " has the wrong degree");
      out.types[name] = d;
    }
    const json& notes = j.at("footnotes");
    for (const auto& [mark, f] : notes.items()) out.footnote_at[mark] = {f.at("ell").get<int>(), f.at("e").get<int>()};
    int index = 0;
    for (const auto& r : j.at("cuspidal_rows")) {
      CuspidalPairRow row;
      row.index = index++;
      row.group = r.at("group").get<std::string>();
      row.e = r.at("e").get<std::vector<int>>();
      row.levi = r.at("levi").get<std::string>();
      row.levi_structure = r.at("levi_structure").get<std::string>();
      row.center_dim = r.at("center_dim").get<int>();
      row.characters = r.at("characters").get<std::vector<std::string>>();
      row.central_defect_except = r.at("central_defect_except").get<std::vector<int>>();
      if (!r.at("footnote").is_null()) {
        row.footnote = r.at("footnote").get<std::string>();
        row.footnote_text = notes.at(*row.footnote).at("text").get<std::string>();
      }
      row.source = r.at("source").get<std::string>();
      if (!out.types.count(row.group)) schema_error("cuspidal row for unknown type " + row.group);
      out.rows.push_back(row);
    }
  } catch (const json::exception& e) {
    schema_error(std::string("lietype data: ") + e.what());
  }
  return out;
}

const LieData& lie_data() {
  static std::once_flag once;
  static LieData data;
  std::call_once(once, [] { data = load_lie_data(); });
  return data;
}

// Prime p with q = p^k, or 0.
std::int64_t prime_base(std::int64_t q) {
  if (q < 2) return 0;
  for (std::int64_t p = 2; p * p <= q; ++p) {
    if (q % p) continue;
    while (q % p == 0) q /= p;
    return q == 1 ? p : 0;
  }
  return q;
}

void require_prime(std::int64_t ell) {
  if (ell < 2 || !is_prime(static_cast<std::uint64_t>(ell))) domain_error("NotPrime", "ell must be prime");
}

void add_factor(std::map<int, int>& phi, std::int64_t m, int sign) {
  // q^m - sign, sign = +-1, as a product of Phi_d(q)
  if (sign == 1) {
    for (auto d : divisors(m)) ++phi[static_cast<int>(d)];
  } else {
    // q^m + 1 = (q^2m - 1) / (q^m - 1)
    for (auto d : divisors(2 * m))
      if (m % d) ++phi[static_cast<int>(d)];
  }
}

std::string family_key(Family f) {
  switch (f) {
    case Family::G2: return "G2";
    case Family::F4: return "F4";
    case Family::E6: return "E6";
    case Family::E6Twisted: return "2E6";
    case Family::E7: return "E7";
    case Family::E8: return "E8";
    case Family::D4Triality: return "3D4";
    case Family::Suzuki: return "2B2";
    case Family::ReeSmall: return "2G2";
    case Family::ReeLarge: return "2F4";
    default: return "";
  }
}

bool in(const std::vector<int>& v, std::int64_t x) { return std::find(v.begin(), v.end(), x) != v.end(); }

}  // namespace

int PolynomialOrder::degree() const {
  int d = q_power;
  for (auto [k, m] : phi) d += m * static_cast<int>(euler_phi(k));
  return d;
}

Integer PolynomialOrder::evaluate(const Integer& q) const {
  Integer out = 1;
  for (int i = 0; i < q_power; ++i) out *= q;
  for (auto [k, m] : phi)
    for (int i = 0; i < m; ++i) out *= eval_phi(k, q);
  return out;
}

bool GenericType::is_exceptional() const {
  switch (family) {
    case Family::G2: case Family::F4: case Family::E6: case Family::E6Twisted: case Family::E7: case Family::E8:
      return true;
    default:
      return false;
  }
}

bool GenericType::is_suzuki_ree() const {
  return family == Family::Suzuki || family == Family::ReeSmall || family == Family::ReeLarge;
}

int GenericType::rank() const {
  const std::string k = family_key(family);
  if (!k.empty()) return lie_data().types.at(k).rank;
  return family == Family::SL || family == Family::SU ? n - 1 : n;
}

int GenericType::dimension() const { return polynomial_order().degree(); }

PolynomialOrder GenericType::polynomial_order() const {
  const std::string k = family_key(family);
  if (!k.empty()) return lie_data().types.at(k).order;
  PolynomialOrder p;
  switch (family) {
    case Family::SL:
    case Family::SU:
      p.q_power = n * (n - 1) / 2;
      for (int i = 2; i <= n; ++i) {
        // SU: q^i - (-1)^i
        if (family == Family::SU && i % 2) add_factor(p.phi, i, -1);
        else add_factor(p.phi, i, 1);
      }
      break;
    case Family::Sp:
    case Family::SpinOdd:
      p.q_power = n * n;
      for (int i = 1; i <= n; ++i) add_factor(p.phi, 2 * i, 1);
      break;
    case Family::SpinPlus:
    case Family::SpinMinus:
      p.q_power = n * (n - 1);
      add_factor(p.phi, n, family == Family::SpinPlus ? 1 : -1);
      for (int i = 1; i < n; ++i) add_factor(p.phi, 2 * i, 1);
      break;
    default:
      internal_error("no polynomial order");
  }
  return p;
}

std::int64_t GenericType::center_order(std::int64_t q) const {
  if (!prime_base(q)) domain_error("NotPrimePower", "q must be a prime power");
  const std::string k = family_key(family);
  if (!k.empty()) {
    const auto& d = lie_data().types.at(k);
    return std::gcd<std::int64_t>(d.center_n, q - d.center_sign);
  }
  const bool odd = q % 2 == 1;
  switch (family) {
    case Family::SL: return std::gcd<std::int64_t>(n, q - 1);
    case Family::SU: return std::gcd<std::int64_t>(n, q + 1);
    case Family::Sp:
    case Family::SpinOdd: return odd ? 2 : 1;
    case Family::SpinPlus:
    case Family::SpinMinus: {
      if (!odd) return 1;
      // gcd(4, q^n -+ 1)
      const std::int64_t r = static_cast<std::int64_t>(mod_pow(static_cast<std::uint64_t>(q), n, 4));
      return std::gcd<std::int64_t>(4, family == Family::SpinPlus ? r + 3 : r + 1);
    }
    default: internal_error("no center data");
  }
}

std::vector<int> GenericType::bad_primes() const {
  const std::string k = family_key(family);
  if (!k.empty()) return lie_data().types.at(k).bad;
  if (family == Family::SL || family == Family::SU) return {};
  return {2};
}

GenericType parse_type(const std::string& s) {
  static const std::map<std::string, Family> fixed = {
      {"G2", Family::G2},           {"F4", Family::F4},      {"E6", Family::E6},      {"2E6", Family::E6Twisted},
      {"E7", Family::E7},           {"E8", Family::E8},      {"3D4", Family::D4Triality}, {"2B2", Family::Suzuki},
      {"2G2", Family::ReeSmall},    {"2F4", Family::ReeLarge},
  };
  GenericType t;
  t.label = s;
  if (auto it = fixed.find(s); it != fixed.end()) {
    t.family = it->second;
    return t;
  }
  std::smatch m;
  static const std::regex classical(R"((SL|SU|Sp|Spin\+|Spin-|Spin)([0-9]+))");
  if (std::regex_match(s, m, classical)) {
    const std::string f = m[1];
    const int k = std::stoi(m[2]);
    if (f == "SL" && k >= 2) t = {Family::SL, k, s};
    else if (f == "SU" && k >= 3) t = {Family::SU, k, s};
    else if (f == "Sp" && k >= 4 && k % 2 == 0) t = {Family::Sp, k / 2, s};
    else if (f == "Spin" && k >= 7 && k % 2 == 1) t = {Family::SpinOdd, k / 2, s};
    else if (f == "Spin+" && k >= 8 && k % 2 == 0) t = {Family::SpinPlus, k / 2, s};
    else if (f == "Spin-" && k >= 8 && k % 2 == 0) t = {Family::SpinMinus, k / 2, s};
    else domain_error("UnknownType", "unsupported rank in type " + s);
    return t;
  }
  domain_error("UnknownType", "unknown type " + s);
}

int e_of(std::int64_t ell, std::int64_t q) {
  require_prime(ell);
  if (q % ell == 0) domain_error("NotCoprime", "q must be prime to ell");
  return static_cast<int>(multiplicative_order(q % (ell == 2 ? 4 : ell), ell == 2 ? 4 : ell));
}

std::int64_t defining_char_block_count(const GenericType& t, std::int64_t q) { return t.center_order(q) + 1; }

bool is_good_prime(const GenericType& t, std::int64_t ell) {
  require_prime(ell);
  return !in(t.bad_primes(), ell);
}

const std::vector<CuspidalPairRow>& cuspidal_rows() { return lie_data().rows; }

std::vector<RowMatch> lookup_cuspidal_rows_e(const GenericType& t, std::int64_t ell, int e) {
  if (!t.is_exceptional()) domain_error("UnknownType", t.label + " has no cuspidal pair rows");
  require_prime(ell);
  const std::string key = family_key(t.family);
  std::vector<RowMatch> out;
  for (const auto& r : cuspidal_rows()) {
    if (r.group != key || !in(r.e, e) || in(r.central_defect_except, ell)) continue;
    RowMatch m{r, false};
    if (r.footnote) {
      const auto [fl, fe] = lie_data().footnote_at.at(*r.footnote);
      m.footnote_applies = fl == ell && fe == e;
    }
    out.push_back(m);
  }
  return out;
}

std::vector<RowMatch> lookup_cuspidal_rows(const GenericType& t, std::int64_t ell, std::int64_t q) {
  if (!prime_base(q)) domain_error("NotPrimePower", "q must be a prime power");
  return lookup_cuspidal_rows_e(t, ell, e_of(ell, q));
}

std::string reason_name(Reason r) {
  switch (r) {
    case Reason::RationalCuspidal: return "RationalCuspidal";
    case Reason::GoodPrimeTrivialDefect: return "GoodPrimeTrivialDefect";
    case Reason::GoodPrimeCyclicDefect: return "GoodPrimeCyclicDefect";
    case Reason::SelfCuspidalFullHeight: return "SelfCuspidalFullHeight";
    case Reason::PuigD12Twist: return "PuigD12Twist";
    case Reason::CyclicCenterDefect: return "CyclicCenterDefect";
    case Reason::DihedralDefect: return "DihedralDefect";
    case Reason::SigmaStable: return "SigmaStable";
    case Reason::SigmaSquareStable: return "SigmaSquareStable";
  }
  return "";
}

namespace {

// The case analysis for one row, in the order the arguments are made.
UnipotentVerdict classify_row(const GenericType& t, const CuspidalPairRow& r, std::int64_t ell, std::int64_t q, int e) {
  UnipotentVerdict v;
  v.row = r;
  v.ell = ell;
  v.q = q;
  v.e = e;
  const bool good = is_good_prime(t, ell);
  const std::string& L = r.levi_structure;
  auto set = [&](Reason reason, std::string cond, bool stated = true, std::string note = "") {
    v.reason = reason;
    v.condition = std::move(cond);
    v.stated = stated;
    v.note = std::move(note);
    return v;
  };
  if (good && r.center_dim == 0) return set(Reason::GoodPrimeTrivialDefect, "ell good, L = G");
  if (good && r.center_dim == 1) return set(Reason::GoodPrimeCyclicDefect, "ell good, rk G = rk [L,L] + 1");
  if (r.levi_is_group()) {
    return set(Reason::SelfCuspidalFullHeight, "ell bad, L = G", e == 1,
               e == 1 ? "" : "full-height argument is written for e = 1; applied here at e = " + std::to_string(e));
  }
  if (t.family == Family::E8 && L == "phi1^2.E6") {
    if (ell >= 5) return set(Reason::PuigD12Twist, "ell >= 5, e = 1");
    v.upper_bound_2 = true;  // ell = 2
    return set(Reason::SigmaSquareStable, "ell = 2, e = 1 (q = 1 mod 4)");
  }
  if (t.family == Family::E8 && L == "phi2^2.2E6") {
    if (ell % 3 == 1) return set(Reason::SigmaStable, "ell = 1 mod 3, e = 2");
    v.upper_bound_2 = true;
    return set(Reason::SigmaSquareStable, "ell = 2 mod 3, e = 2 (q = -1 mod ell)");
  }
  if (t.family == Family::E8 && L == "phi2.E7") {
    return set(Reason::CyclicCenterDefect, "relative Weyl group S2, rk G = rk [L,L] + 1", ell == 5,
               ell == 5 ? "cyclic-center argument is written with e = 1; the row is listed at e = 2"
                        : "cyclic-center argument is written for ell = 5; applied here at ell = " + std::to_string(ell));
  }
  if (t.family == Family::E8 && L == "phi1.E7") {
    return set(Reason::CyclicCenterDefect, "rk G = rk [L,L] + 1", false,
               "cyclic-center argument is written for the phi_{512} characters at ell = 5; applied here at ell = " +
                   std::to_string(ell));
  }
  if (t.family == Family::E7 && L == "phi1.E6") return set(Reason::DihedralDefect, "ell = 2, e = 1");
  if (t.family == Family::E7 && L == "phi2.2E6") {
    return set(Reason::DihedralDefect, "ell = 2, e = 2", false,
               "dihedral-defect argument is written for phi1.E6 at e = 1; applied here to its Ennola dual");
  }
  internal_error("no case for " + r.group + " / " + L + " at ell = " + std::to_string(ell));
}

}  // namespace

std::vector<UnipotentVerdict> classify_unipotent_mf(const GenericType& t, std::int64_t ell, std::int64_t q) {
  if (t.is_suzuki_ree()) domain_error("UnknownType", t.label + " is handled by the Suzuki/Ree classifier");
  require_prime(ell);
  const std::int64_t p = prime_base(q);
  if (!p) domain_error("NotPrimePower", "q must be a prime power");
  const int e = e_of(ell, q);
  std::vector<UnipotentVerdict> out;
  if (t.is_exceptional()) {
    for (const auto& m : lookup_cuspidal_rows_e(t, ell, e)) out.push_back(classify_row(t, m.row, ell, q, e));
  }
  UnipotentVerdict rest;
  rest.ell = ell;
  rest.q = q;
  rest.e = e;
  rest.reason = Reason::RationalCuspidal;
  rest.condition = t.is_exceptional() ? "every other unipotent block: rational cuspidal character"
                                      : "unipotent characters of classical type are rational";
  out.push_back(rest);
  return out;
}

std::vector<SuzukiReeVerdict> suzuki_ree_mf(const GenericType& t, std::int64_t ell, std::optional<std::int64_t> field_size) {
  if (!t.is_suzuki_ree()) domain_error("UnknownType", t.label + " is not a Suzuki or Ree type");
  require_prime(ell);
  const std::int64_t p = t.family == Family::ReeSmall ? 3 : 2;
  if (ell == p) domain_error("DefiningPrime", "ell is the defining characteristic");
  if (field_size) {
    std::int64_t Q = *field_size, k = 0;
    while (Q % p == 0) {
      Q /= p;
      ++k;
    }
    if (Q != 1 || k % 2 == 0) domain_error("NotPrimePower", "field size must be an odd power of " + std::to_string(p));
  }
  std::vector<SuzukiReeVerdict> out;
  switch (t.family) {
    case Family::Suzuki:
      out.push_back({"all", "ell odd", "CyclicDefect", {}});
      break;
    case Family::ReeSmall:
      if (ell == 2) {
        out.push_back({"principal", "ell = 2", "RationalCharacterSum", {"trivial"}});
        out.push_back({"non-principal", "ell = 2, defect group a proper subgroup of C2^3", "CyclicOrDihedralDefect", {}});
      } else {
        out.push_back({"all", "ell >= 5: Sylow ell-subgroups cyclic", "CyclicDefect", {}});
      }
      break;
    case Family::ReeLarge: {
      const bool known = field_size.has_value();
      const bool divides = known && (*field_size - 1) % ell == 0;
      if (!known || !divides) {
        const std::string c = "ell does not divide Q - 1";
        out.push_back({"principal", c, "RationalCharacterSum", {"trivial"}});
        out.push_back({"non-principal unipotent", c, "DefectZero", {}});
      }
      if (!known || divides) {
        const std::string c = "ell divides Q - 1";
        out.push_back({"principal", c, "RationalCharacterSum",
                       {"chi_1", "chi_2", "chi_3", "chi_4", "chi_9", "chi_10", "chi_11"}});
        out.push_back({"unipotent", c, "CyclicDefect", {"chi_5", "chi_7"}});
        out.push_back({"unipotent", c, "CyclicDefect", {"chi_6", "chi_8"}});
      }
      break;
    }
    default:
      break;
  }
  return out;
}

json row_to_json(const CuspidalPairRow& r) {
  return {{"index", r.index},
          {"group", r.group},
          {"e", r.e},
          {"levi", r.levi},
          {"levi_structure", r.levi_structure},
          {"characters", r.characters},
          {"central_defect_except", r.central_defect_except},
          {"footnote", r.footnote ? json(*r.footnote) : json(nullptr)},
          {"source", r.source}};
}

json verdict_to_json(const UnipotentVerdict& v) {
  json j = {{"ell", v.ell}, {"q", v.q}, {"e", v.e}};
  if (v.row) {
    j["group"] = v.row->group;
    j["levi"] = v.row->levi_structure;
    j["characters"] = v.row->characters;
    j["footnote"] = v.row->footnote ? json(*v.row->footnote) : json(nullptr);
  } else {
    j["group"] = nullptr;
    j["levi"] = nullptr;
    j["characters"] = "rational cuspidal";
    j["footnote"] = nullptr;
  }
  j["verdict"] = v.verdict_string();
  j["reason"] = reason_name(v.reason);
  j["condition"] = v.condition;
  j["stated"] = v.stated;
  if (!v.note.empty()) j["note"] = v.note;
  return j;
}

json suzuki_ree_to_json(const SuzukiReeVerdict& v) {
  return {{"blocks", v.blocks}, {"condition", v.condition}, {"verdict", "1"}, {"reason", v.reason}, {"characters", v.characters}};
}

}  // namespace mfb
