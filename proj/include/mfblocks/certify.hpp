#pragma once

// Certificates for the Morita Frobenius number of a block.
//
// certify_mf runs a fixed sequence of sufficient criteria for mf(b) = 1 and
// falls back to the sigma-orbit bound, which always applies. Each certificate
// carries a witness from which replay_certificate re-checks the claim.

#include <optional>
#include <string>
#include <vector>

#include "mfblocks/blocks.hpp"
#include "mfblocks/json_io.hpp"

namespace mfb {

enum class Criterion {
  DefectZeroFullHeight,
  RationalCharacterSum,
  SigmaStable,
  CyclicDefect,
  DihedralDefect,
  RationalIdempotent,
  AutomorphismTransport,
  OrbitBound,
};

std::string criterion_name(Criterion c);
// Throws Schema "SchemaError" for unknown names.
Criterion criterion_from_name(const std::string& s);
// Order in which certify_mf tries the criteria.
const std::vector<Criterion>& criterion_order();

struct MfCertificate {
  enum class Verdict { ExactlyOne, UpperBound };
  int block = 0;
  Verdict verdict = Verdict::ExactlyOne;
  int bound = 1;  // 1 for ExactlyOne
  Criterion criterion = Criterion::OrbitBound;
  json witness = json::object();
  std::vector<std::string> skipped;  // not attempted (no group, bound exceeded, no automorphisms)
  std::vector<std::string> failed;   // attempted without success

  bool exactly_one() const { return verdict == Verdict::ExactlyOne; }
  std::string verdict_string() const { return exactly_one() ? "1" : "<=" + std::to_string(bound); }
};

struct CertifyOptions {
  std::int64_t subgroup_bound = kDefaultSubgroupBound;
  bool klein_is_dihedral = false;
  // Precomputed ell-subgroup classes; computed on demand otherwise.
  std::optional<std::vector<Subgroup>> ell_subgroups;
};

// Galois orbits of Irr (under all galois_power(t), gcd(t, N) = 1), each
// sorted, ordered by smallest member.
std::vector<std::vector<int>> galois_orbits(const CharacterTable& t);
// Every full Galois orbit contained in the block.
std::vector<std::vector<int>> rational_orbits_in_block(const BlockPartition& P, int block);
// The first such orbit; its value sums are checked to be rational.
std::optional<std::vector<int>> check_rational_orbit_sums(const BlockPartition& P, int block);

// Lifted idempotent coefficients (1/|G|) sum chi(1) chi(g_K^-1) over the
// block, per class.
std::vector<CycloNum> lifted_idempotent_coeffs(const CharacterTable& t, const std::vector<int>& chars);

// Character permutation induced by an automorphism: chi -> chi o phi^-1.
std::vector<int> automorphism_on_characters(const CharacterTable& t, const GroupMap& phi);

MfCertificate certify_mf(const BlockPartition& P, int block, const std::vector<GroupMap>& automorphisms = {},
                         const CertifyOptions& opts = {});
// All blocks, certified concurrently; result indexed by block id.
std::vector<MfCertificate> certify_all(const BlockPartition& P, const std::vector<GroupMap>& automorphisms = {},
                                       CertifyOptions opts = {});

// Re-verifies the verdict from the witness; false if the witness does not
// support it.
bool replay_certificate(const BlockPartition& P, const MfCertificate& cert);

json certificate_to_json(const MfCertificate& c);
MfCertificate certificate_from_json(const json& j);

// Automorphism files: {"automorphisms": [{"images": [perm, ...]}, ...]}, one
// image per generator of G.
std::vector<GroupMap> automorphisms_from_json(const PermGroup& G, const json& j);

}  // namespace mfb
