#include "mfblocks/certify.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <numeric>
#include <set>

#include "mfblocks/error.hpp"
#include "mfblocks/numtheory.hpp"

namespace mfb {

namespace {

const std::vector<std::pair<Criterion, const char*>> kNames = {
    {Criterion::DefectZeroFullHeight, "DefectZeroFullHeight"},
    {Criterion::RationalCharacterSum, "RationalCharacterSum"},
    {Criterion::SigmaStable, "SigmaStable"},
    {Criterion::CyclicDefect, "CyclicDefect"},
    {Criterion::DihedralDefect, "DihedralDefect"},
    {Criterion::RationalIdempotent, "RationalIdempotent"},
    {Criterion::AutomorphismTransport, "AutomorphismTransport"},
    {Criterion::OrbitBound, "OrbitBound"},
};

bool in_block(const BlockPartition& P, int block, int chi) {
  return chi >= 0 && chi < P.table->num_chars() && P.block_of[chi] == block;
}

std::optional<int> full_height_character(const BlockPartition& P, int block) {
  const CharacterTable& t = *P.table;
  const unsigned nu_g = nu_ell(Integer(static_cast<long>(t.order())), P.ell);
  for (int chi : P.blocks[block].chars) {
    if (nu_ell(Integer(static_cast<long>(t.degree(chi))), P.ell) == nu_g) return chi;
  }
  return std::nullopt;
}

bool sum_is_rational(const CharacterTable& t, const std::vector<int>& chars) {
  for (int K = 0; K < t.num_classes(); ++K) {
    CycloNum s;
    for (int chi : chars) s += t.value(chi, K);
    if (!s.is_rational()) return false;
  }
  return true;
}

bool sigma_stable(const BlockPartition& P, int block, std::int64_t s) {
  const auto img = galois_on_characters(*P.table, s);
  for (int chi : P.blocks[block].chars)
    if (P.block_of[img[chi]] != block) return false;
  return true;
}

// Br_D(e_b) != 0: some class meeting C_G(D) carries a nonzero coefficient.
bool brauer_nonzero(const BlockPartition& P, int block, const Subgroup& D) {
  const PermGroup& G = *P.table->group();
  const auto coeffs = idempotent_class_coeffs(P, block);
  for (int x : centralizer(G, subgroup_generators(G, D)))
    if (coeffs[G.class_of(x)] != 0) return true;
  return false;
}

std::vector<int> orbit_of(const BlockPartition& P, int block) {
  std::vector<int> out{block};
  for (int x = P.sigma[block]; x != block; x = P.sigma[x]) out.push_back(x);
  return out;
}

std::string rational_string(const Rational& r) { return r.get_str(); }

json generators_json(const PermGroup& G, const std::vector<int>& idx) {
  json a = json::array();
  for (int i : idx) a.push_back(perm_to_json(G.element(i)));
  return a;
}

}  // namespace

std::string criterion_name(Criterion c) {
  for (const auto& [k, v] : kNames)
    if (k == c) return v;
  return "Unknown";
}

Criterion criterion_from_name(const std::string& s) {
  for (const auto& [k, v] : kNames)
    if (s == v) return k;
  schema_error("unknown criterion " + s);
}

const std::vector<Criterion>& criterion_order() {
  static const std::vector<Criterion> order = {
      Criterion::DefectZeroFullHeight, Criterion::RationalCharacterSum, Criterion::SigmaStable,
      Criterion::CyclicDefect,         Criterion::DihedralDefect,       Criterion::RationalIdempotent,
      Criterion::AutomorphismTransport, Criterion::OrbitBound,
  };
  return order;
}

std::vector<std::vector<int>> galois_orbits(const CharacterTable& t) {
  const int n = t.num_chars();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  const std::int64_t N = t.exponent();
  for (std::int64_t s = 2; s < N; ++s) {
    if (std::gcd(s, N) != 1) continue;
    const auto img = galois_on_characters(t, s);
    for (int i = 0; i < n; ++i) {
      int a = find(i), b = find(img[i]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::vector<std::vector<int>> orbits;
  std::vector<int> slot(n, -1);
  for (int i = 0; i < n; ++i) {
    int r = find(i);
    if (slot[r] < 0) {
      slot[r] = static_cast<int>(orbits.size());
      orbits.emplace_back();
    }
    orbits[slot[r]].push_back(i);
  }
  return orbits;
}

std::vector<std::vector<int>> rational_orbits_in_block(const BlockPartition& P, int block) {
  std::vector<std::vector<int>> out;
  for (auto& o : galois_orbits(*P.table)) {
    if (std::all_of(o.begin(), o.end(), [&](int chi) { return P.block_of[chi] == block; })) out.push_back(std::move(o));
  }
  return out;
}

std::optional<std::vector<int>> check_rational_orbit_sums(const BlockPartition& P, int block) {
  auto orbits = rational_orbits_in_block(P, block);
  if (orbits.empty()) return std::nullopt;
  if (!sum_is_rational(*P.table, orbits[0])) internal_error("a full Galois orbit has an irrational value sum");
  return orbits[0];
}

std::vector<CycloNum> lifted_idempotent_coeffs(const CharacterTable& t, const std::vector<int>& chars) {
  std::vector<CycloNum> out;
  Rational inv_order(1, static_cast<long>(t.order()));
  for (int K = 0; K < t.num_classes(); ++K) {
    CycloNum s;
    for (int chi : chars) s += t.value(chi, t.inverse_class(K)).scaled(Rational(static_cast<long>(t.degree(chi))));
    out.push_back(s.scaled(inv_order));
  }
  return out;
}

std::vector<int> automorphism_on_characters(const CharacterTable& t, const GroupMap& phi) {
  const auto& G = t.group();
  if (!G) domain_error("NoGroup", "automorphisms need the group elements");
  const auto cm = automorphism_class_map(*G, phi);
  std::map<std::vector<CycloNum>, int> index;
  for (int i = 0; i < t.num_chars(); ++i) index.emplace(t.chars()[i], i);
  std::vector<int> out(t.num_chars());
  for (int i = 0; i < t.num_chars(); ++i) {
    std::vector<CycloNum> row(t.num_classes());
    for (int K = 0; K < t.num_classes(); ++K) row[cm[K]] = t.value(i, K);
    auto it = index.find(row);
    if (it == index.end()) internal_error("automorphism image of a character is not a row");
    out[i] = it->second;
  }
  return out;
}

MfCertificate certify_mf(const BlockPartition& P, int block, const std::vector<GroupMap>& automorphisms,
                         const CertifyOptions& opts) {
  if (block < 0 || block >= P.num_blocks()) domain_error("UnknownBlock", "no block " + std::to_string(block));
  const CharacterTable& t = *P.table;
  const Block& b = P.blocks[block];
  MfCertificate c;
  c.block = block;
  auto accept = [&](Criterion cr, json w) {
    c.criterion = cr;
    c.witness = std::move(w);
    c.verdict = MfCertificate::Verdict::ExactlyOne;
    c.bound = 1;
    return c;
  };
  auto fail = [&](Criterion cr) { c.failed.push_back(criterion_name(cr)); };
  auto skip = [&](Criterion cr) { c.skipped.push_back(criterion_name(cr)); };

  if (auto chi = full_height_character(P, block)) {
    return accept(Criterion::DefectZeroFullHeight,
                  json{{"character", *chi}, {"degree", t.degree(*chi)}, {"group_order", t.order()}});
  }
  fail(Criterion::DefectZeroFullHeight);

  if (auto orbit = check_rational_orbit_sums(P, block)) return accept(Criterion::RationalCharacterSum, json{{"characters", *orbit}});
  fail(Criterion::RationalCharacterSum);

  if (sigma_stable(P, block, P.sigma_exponent)) return accept(Criterion::SigmaStable, json{{"sigma_exponent", P.sigma_exponent}});
  fail(Criterion::SigmaStable);

  if (!t.group()) {
    skip(Criterion::CyclicDefect);
    skip(Criterion::DihedralDefect);
  } else {
    try {
      DefectGroup D = opts.ell_subgroups
                          ? defect_group(P, block, *opts.ell_subgroups, opts.klein_is_dihedral)
                          : defect_group(P, block, opts.klein_is_dihedral, opts.subgroup_bound);
      const PermGroup& G = *t.group();
      json w{{"defect_group",
              {{"generators", generators_json(G, subgroup_generators(G, D.group))},
               {"order", D.group.size()},
               {"shape", shape_name(D.shape)},
               {"klein_is_dihedral", opts.klein_is_dihedral}}}};
      if (D.shape == Shape::Cyclic) return accept(Criterion::CyclicDefect, w);
      fail(Criterion::CyclicDefect);
      if (D.shape == Shape::Dihedral) return accept(Criterion::DihedralDefect, w);
      fail(Criterion::DihedralDefect);
    } catch (const Error& e) {
      if (e.category() != ErrorCategory::Bound) throw;
      skip(Criterion::CyclicDefect);
      skip(Criterion::DihedralDefect);
    }
  }

  const auto lifted = lifted_idempotent_coeffs(t, b.chars);
  if (std::all_of(lifted.begin(), lifted.end(), [](const CycloNum& x) { return x.is_rational(); })) {
    json coeffs = json::array();
    for (const auto& x : lifted) coeffs.push_back(rational_string(x.rational_value()));
    return accept(Criterion::RationalIdempotent, json{{"class_coefficients", coeffs}});
  }
  fail(Criterion::RationalIdempotent);

  if (automorphisms.empty() || !t.group()) {
    skip(Criterion::AutomorphismTransport);
  } else {
    const PermGroup& G = *t.group();
    bool found = false;
    for (std::size_t i = 0; i < automorphisms.size() && !found; ++i) {
      const auto img = automorphism_on_characters(t, automorphisms[i]);
      if (P.block_of[img[b.chars[0]]] == P.sigma[block]) {
        found = true;
        json gi = generators_json(G, automorphisms[i].generator_images);
        return accept(Criterion::AutomorphismTransport,
                      json{{"automorphism", static_cast<int>(i)}, {"generator_images", gi}, {"image_block", P.sigma[block]}});
      }
    }
    fail(Criterion::AutomorphismTransport);
  }

  const auto orbit = orbit_of(P, block);
  c.criterion = Criterion::OrbitBound;
  c.bound = static_cast<int>(orbit.size());
  c.verdict = c.bound == 1 ? MfCertificate::Verdict::ExactlyOne : MfCertificate::Verdict::UpperBound;
  c.witness = json{{"orbit", orbit}, {"length", c.bound}};
  return c;
}

std::vector<MfCertificate> certify_all(const BlockPartition& P, const std::vector<GroupMap>& automorphisms,
                                       CertifyOptions opts) {
  const auto& G = P.table->group();
  bool positive = std::any_of(P.blocks.begin(), P.blocks.end(), [](const Block& b) { return b.defect > 0; });
  if (G && positive && !opts.ell_subgroups) {
    try {
      opts.ell_subgroups = ell_subgroups_up_to_conjugacy(*G, P.ell, opts.subgroup_bound);
    } catch (const Error& e) {
      if (e.category() != ErrorCategory::Bound) throw;
    }
  }
  std::vector<std::future<MfCertificate>> jobs;
  for (int b = 0; b < P.num_blocks(); ++b) {
    jobs.push_back(std::async(std::launch::async, [&, b] { return certify_mf(P, b, automorphisms, opts); }));
  }
  std::vector<MfCertificate> out;
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

bool replay_certificate(const BlockPartition& P, const MfCertificate& c) {
  if (c.block < 0 || c.block >= P.num_blocks()) return false;
  const CharacterTable& t = *P.table;
  const json& w = c.witness;
  const int block = c.block;
  if (c.criterion != Criterion::OrbitBound && (!c.exactly_one() || c.bound != 1)) return false;
  try {
    switch (c.criterion) {
      case Criterion::DefectZeroFullHeight: {
        const int chi = w.at("character").get<int>();
        if (!in_block(P, block, chi)) return false;
        if (w.at("degree").get<std::int64_t>() != t.degree(chi) || w.at("group_order").get<std::int64_t>() != t.order()) return false;
        return nu_ell(Integer(static_cast<long>(t.degree(chi))), P.ell) == nu_ell(Integer(static_cast<long>(t.order())), P.ell);
      }
      case Criterion::RationalCharacterSum: {
        const auto chars = w.at("characters").get<std::vector<int>>();
        if (chars.empty()) return false;
        for (int chi : chars)
          if (!in_block(P, block, chi)) return false;
        if (std::set<int>(chars.begin(), chars.end()).size() != chars.size()) return false;
        return sum_is_rational(t, chars);
      }
      case Criterion::SigmaStable: {
        const std::int64_t s = w.at("sigma_exponent").get<std::int64_t>();
        if (s != sigma_hat_exponent(P.embedding.conductor, P.ell)) return false;
        return sigma_stable(P, block, s);
      }
      case Criterion::CyclicDefect:
      case Criterion::DihedralDefect: {
        if (!t.group()) return false;
        const PermGroup& G = *t.group();
        const json& d = w.at("defect_group");
        std::vector<int> gens;
        for (const auto& g : d.at("generators")) {
          int idx = G.index_of(perm_from_json(g, G.degree()));
          if (idx < 0) return false;
          gens.push_back(idx);
        }
        const Subgroup D = subgroup_closure(G, gens);
        Integer expect;
        mpz_ui_pow_ui(expect.get_mpz_t(), static_cast<unsigned long>(P.ell), static_cast<unsigned long>(P.blocks[block].defect));
        if (Integer(static_cast<long>(D.size())) != expect) return false;
        const Shape sh = shape(G, D, d.value("klein_is_dihedral", false));
        if (sh != (c.criterion == Criterion::CyclicDefect ? Shape::Cyclic : Shape::Dihedral)) return false;
        return brauer_nonzero(P, block, D);
      }
      case Criterion::RationalIdempotent: {
        const auto lifted = lifted_idempotent_coeffs(t, P.blocks[block].chars);
        const json& cs = w.at("class_coefficients");
        if (cs.size() != lifted.size()) return false;
        for (std::size_t K = 0; K < lifted.size(); ++K) {
          if (!lifted[K].is_rational()) return false;
          Rational r(cs[K].get<std::string>());
          r.canonicalize();
          if (r != lifted[K].rational_value()) return false;
        }
        return true;
      }
      case Criterion::AutomorphismTransport: {
        if (!t.group()) return false;
        const PermGroup& G = *t.group();
        std::vector<Perm> imgs;
        for (const auto& g : w.at("generator_images")) imgs.push_back(perm_from_json(g, G.degree()));
        const GroupMap phi = automorphism_from_images(G, imgs);
        const auto on_chars = automorphism_on_characters(t, phi);
        std::set<int> image_block;
        for (int chi : P.blocks[block].chars) image_block.insert(P.block_of[on_chars[chi]]);
        return image_block.size() == 1 && *image_block.begin() == P.sigma[block] &&
               w.at("image_block").get<int>() == P.sigma[block];
      }
      case Criterion::OrbitBound: {
        const auto orbit = orbit_of(P, block);
        if (w.at("orbit").get<std::vector<int>>() != orbit) return false;
        if (c.bound != static_cast<int>(orbit.size()) || w.at("length").get<int>() != c.bound) return false;
        return c.exactly_one() == (c.bound == 1);
      }
    }
  } catch (const json::exception&) {
    return false;
  } catch (const Error& e) {
    if (e.category() == ErrorCategory::Internal) throw;
    return false;
  }
  return false;
}

json certificate_to_json(const MfCertificate& c) {
  return json{{"block", c.block},
              {"verdict", c.verdict_string()},
              {"criterion", criterion_name(c.criterion)},
              {"witness", c.witness},
              {"skipped", c.skipped},
              {"failed", c.failed}};
}

MfCertificate certificate_from_json(const json& j) {
  MfCertificate c;
  try {
    c.block = j.at("block").get<int>();
    const std::string v = j.at("verdict").get<std::string>();
    if (v == "1") {
      c.verdict = MfCertificate::Verdict::ExactlyOne;
      c.bound = 1;
    } else if (v.size() > 2 && v.compare(0, 2, "<=") == 0) {
      c.verdict = MfCertificate::Verdict::UpperBound;
      c.bound = std::stoi(v.substr(2));
    } else {
      schema_error("verdict must be \"1\" or \"<=a\"");
    }
    c.criterion = criterion_from_name(j.at("criterion").get<std::string>());
    c.witness = j.at("witness");
    if (j.contains("skipped")) c.skipped = j["skipped"].get<std::vector<std::string>>();
    if (j.contains("failed")) c.failed = j["failed"].get<std::vector<std::string>>();
  } catch (const json::exception& e) {
    schema_error(std::string("certificate: ") + e.what());
  } catch (const std::logic_error&) {
    schema_error("certificate verdict bound is not an integer");
  }
  return c;
}

std::vector<GroupMap> automorphisms_from_json(const PermGroup& G, const json& j) {
  if (!j.is_object() || !j.contains("automorphisms") || !j["automorphisms"].is_array()) {
    schema_error("automorphism file needs an \"automorphisms\" array");
  }
  std::vector<GroupMap> out;
  for (const auto& a : j["automorphisms"]) {
    if (!a.contains("images") || !a["images"].is_array()) schema_error("automorphism entries need \"images\"");
    std::vector<Perm> imgs;
    for (const auto& p : a["images"]) imgs.push_back(perm_from_json(p, G.degree()));
    if (imgs.size() != G.generators().size()) schema_error("one image per generator is required");
    out.push_back(automorphism_from_images(G, imgs));
  }
  return out;
}

}  // namespace mfb
