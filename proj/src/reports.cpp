#include "mfblocks/reports.hpp"

#include <algorithm>
#include <filesystem>

#include "mfblocks/error.hpp"
#include "mfblocks/numtheory.hpp"

namespace mfb {

namespace {

json header(const std::string& command) { return json{{"command", command}, {"schema_version", kSchemaVersion}}; }

json group_label(const CharacterTable& t) {
  if (t.group() && !t.group()->name().empty()) return t.group()->name();
  return nullptr;
}

json degrees_of(const CharacterTable& t, const std::vector<int>& chars) {
  json d = json::array();
  for (int c : chars) d.push_back(t.degree(c));
  return d;
}

json subgroup_json(const PermGroup& G, const Subgroup& H) {
  json gens = json::array();
  for (int g : subgroup_generators(G, H)) gens.push_back(perm_to_json(G.element(g)));
  return gens;
}

}  // namespace

std::shared_ptr<const CharacterTable> resolve_table(const std::string& source, std::int64_t bound) {
  namespace fs = std::filesystem;
  if (fs::exists(source) && fs::is_regular_file(source)) {
    json j = read_json_file(source);
    if (j.contains("chars")) return std::make_shared<const CharacterTable>(table_from_json(j, bound));
    return std::make_shared<const CharacterTable>(dixon_schneider(std::make_shared<const PermGroup>(group_from_json(j, bound))));
  }
  fs::path t = fs::path(data_dir()) / "tables" / (source + ".json");
  if (!fs::exists(fs::path(data_dir()) / "groups" / (source + ".json")) && fs::exists(t))
    return std::make_shared<const CharacterTable>(load_table(t.string(), bound));
  return std::make_shared<const CharacterTable>(dixon_schneider(std::make_shared<const PermGroup>(resolve_group(source, bound))));
}

json embedding_to_json(const EmbeddingSpec& e) {
  return json{{"ell", e.ell},
              {"conductor", e.conductor},
              {"m", e.m},
              {"twist", e.twist},
              {"poly", e.field->modulus()},
              {"root", e.field->digits(e.root)}};
}

json blocks_report(const BlockPartition& P, const BlockReportOptions& opts) {
  const CharacterTable& t = *P.table;
  json j = header("blocks");
  j["group"] = group_label(t);
  j["order"] = t.order();
  j["ell"] = P.ell;
  j["embedding"] = embedding_to_json(P.embedding);
  j["num_blocks"] = P.num_blocks();
  j["principal_block"] = P.principal_block();
  json blocks = json::array();
  for (const auto& b : P.blocks) {
    json e{{"id", b.id},
           {"chars", b.chars},
           {"degrees", degrees_of(t, b.chars)},
           {"defect", b.defect},
           {"orbit", b.orbit},
           {"orbit_length", b.orbit_length}};
    if (opts.defect_groups && t.group()) {
      try {
        auto D = defect_group(P, b.id, opts.klein_is_dihedral, opts.subgroup_bound);
        e["defect_group"] = json{{"order", D.group.size()},
                                 {"shape", shape_name(D.shape)},
                                 {"generators", subgroup_json(*t.group(), D.group)}};
      } catch (const Error& err) {
        if (err.category() != ErrorCategory::Bound) throw;
        e["defect_group"] = json{{"skipped", err.name()}};
      }
    }
    if (opts.idempotents && t.group()) {
      auto idem = block_idempotent(P, b.id);
      const PermGroup& G = *t.group();
      json terms = json::array();
      for (int x = 0; x < G.order(); ++x)
        if (idem.coeffs[x]) terms.push_back(json{{"element", perm_to_json(G.element(x))}, {"coeff", idem.field->digits(idem.coeffs[x])}});
      e["idempotent"] = terms;
    }
    blocks.push_back(e);
  }
  j["blocks"] = blocks;
  return j;
}

json orbits_report(const BlockPartition& P) {
  json j = header("orbits");
  j["group"] = group_label(*P.table);
  j["ell"] = P.ell;
  j["embedding"] = embedding_to_json(P.embedding);
  j["sigma_exponent"] = P.sigma_exponent;
  j["sigma"] = P.sigma;
  std::map<int, std::vector<int>> orbits;
  for (const auto& b : P.blocks) orbits[b.orbit].push_back(b.id);
  json list = json::array();
  std::vector<int> lengths;
  for (const auto& [id, members] : orbits) {
    // members in sigma order starting at the orbit's first block
    std::vector<int> ordered(members.size());
    for (int m : members) ordered[P.blocks[m].orbit_position] = m;
    list.push_back(json{{"orbit", id}, {"blocks", ordered}, {"length", ordered.size()}});
    lengths.push_back(static_cast<int>(ordered.size()));
  }
  std::sort(lengths.begin(), lengths.end());
  j["orbits"] = list;
  j["orbit_lengths"] = lengths;
  return j;
}

json certify_report(const BlockPartition& P, const std::vector<MfCertificate>& certs) {
  json j = header("certify");
  j["group"] = group_label(*P.table);
  j["ell"] = P.ell;
  json list = json::array();
  bool all_one = true, replayed = true;
  for (const auto& c : certs) {
    list.push_back(certificate_to_json(c));
    all_one = all_one && c.exactly_one();
    replayed = replayed && replay_certificate(P, c);
  }
  j["certificates"] = list;
  j["all_exactly_one"] = all_one;
  j["replayed"] = replayed;
  return j;
}

json dominate_report(std::shared_ptr<const PermGroup> G, const std::vector<Perm>& normal_gens, std::int64_t ell,
                     std::int64_t bound) {
  std::vector<int> idx;
  for (const auto& p : normal_gens) {
    const int i = G->index_of(p);
    if (i < 0) domain_error("NotInGroup", "normal subgroup generator is not an element of the group");
    idx.push_back(i);
  }
  const Subgroup Z = subgroup_closure(*G, idx);
  if (!is_normal(*G, Z)) domain_error("NotNormal", "the generated subgroup is not normal");
  auto q = quotient(*G, Z, bound);
  auto t = std::make_shared<const CharacterTable>(dixon_schneider(G));
  auto P = block_partition(t, ell);
  auto Qg = std::make_shared<const PermGroup>(q.group);
  auto PQ = block_partition(std::make_shared<const CharacterTable>(dixon_schneider(Qg)), ell, P.embedding);

  json j = header("dominate");
  j["group"] = G->name().empty() ? json(nullptr) : json(G->name());
  j["ell"] = ell;
  j["normal_order"] = Z.size();
  j["normal_is_ell_prime"] = std::gcd(static_cast<std::int64_t>(Z.size()), ell) == 1;
  j["quotient_order"] = Qg->order();
  json quot = json::array();
  for (const auto& bb : PQ.blocks)
    quot.push_back(json{{"id", bb.id}, {"chars", bb.chars}, {"degrees", degrees_of(*PQ.table, bb.chars)}, {"defect", bb.defect}});
  j["quotient_blocks"] = quot;
  json rows = json::array();
  for (const auto& b : P.blocks) {
    auto d = dominated_blocks(P, b.id, PQ, q.mu);
    Integer dim = 0, dimq = 0;
    for (int c : b.chars) dim += Integer(t->degree(c)) * t->degree(c);
    for (int bb : d)
      for (int c : PQ.blocks[bb].chars) dimq += Integer(PQ.table->degree(c)) * PQ.table->degree(c);
    rows.push_back(json{{"block", b.id},
                        {"chars", b.chars},
                        {"defect", b.defect},
                        {"dominated", d},
                        {"dim", dim.get_str()},
                        {"dominated_dim", dimq.get_str()}});
  }
  j["blocks"] = rows;
  return j;
}

json lietype_report(const GenericType& t, std::int64_t ell, std::int64_t q) {
  auto verdicts = classify_unipotent_mf(t, ell, q);
  json j = header("lietype");
  j["type"] = t.label;
  j["ell"] = ell;
  j["q"] = q;
  j["e"] = e_of(ell, q);
  j["good_prime"] = is_good_prime(t, ell);
  j["center_order"] = t.center_order(q);
  const auto po = t.polynomial_order();
  json phi = json::object();
  for (const auto& [d, m] : po.phi) phi[std::to_string(d)] = m;
  j["polynomial_order"] = json{{"q_power", po.q_power}, {"phi", phi}};
  json list = json::array();
  int ub = 0;
  for (const auto& v : verdicts) {
    list.push_back(verdict_to_json(v));
    ub += v.upper_bound_2;
  }
  j["verdicts"] = list;
  j["upper_bound_2_count"] = ub;
  return j;
}

json suzukiree_report(const GenericType& t, std::int64_t ell, std::optional<std::int64_t> field_size) {
  json j = header("suzukiree");
  j["type"] = t.label;
  j["ell"] = ell;
  j["field_size"] = field_size ? json(*field_size) : json(nullptr);
  json list = json::array();
  for (const auto& v : suzuki_ree_mf(t, ell, field_size)) list.push_back(suzuki_ree_to_json(v));
  j["verdicts"] = list;
  return j;
}

json twist_report(const SCAlgebra& A, int a) {
  if (a < 0) domain_error("NegativeTwist", "the twist exponent must be nonnegative");
  auto T = frobenius_twist(A, a);
  json j = header("twist");
  j["ell"] = A.field()->ell();
  j["poly"] = A.field()->modulus();
  j["dim"] = A.dim();
  j["a"] = a;
  j["constants_in_prime_field"] = A.constants_in_prime_field();
  j["twist_equals_input"] = T == A;
  j["has_ell_form"] = A.dim() <= 4 ? json(has_small_ell_form(A)) : json(nullptr);
  if (A.dim() <= 3) {
    auto iso = find_isomorphism(A, T);
    j["isomorphic_to_input"] = iso.has_value();
  } else {
    j["isomorphic_to_input"] = nullptr;
  }
  j["twisted"] = algebra_to_json(T);
  return j;
}

json twisted_report(const Cocycle& gamma, bool include_algebra) {
  if (!gamma.is_valid()) domain_error("CocycleInvalid", "the 2-cocycle identity fails");
  auto r = root_iso_report(gamma);
  json j = header("twisted");
  j["group"] = gamma.group->name().empty() ? json(nullptr) : json(gamma.group->name());
  j["order"] = gamma.group->order();
  j["ell"] = gamma.field->ell();
  j["poly"] = gamma.field->modulus();
  j["cocycle_in_prime_field"] = gamma.frobenius(1).values == gamma.values;
  j["root_iso"] = json{{"ring_isomorphism", r.ring_isomorphism},
                       {"semilinear", r.semilinear},
                       {"twist_matches", r.twist_matches},
                       {"ok", r.ok()}};
  if (include_algebra) j["algebra"] = algebra_to_json(twisted_group_algebra(gamma));
  return j;
}

json error_json(const Error& e) {
  static const char* names[] = {"domain", "bound", "schema", "internal"};
  return json{{"error", e.name()},
              {"category", names[static_cast<int>(e.category())]},
              {"message", e.what()},
              {"exit_code", exit_code(e.category())}};
}

}  // namespace mfb
