#pragma once

// JSON reports shared by the command-line tool and the Python module. Every
// report carries "command" and "schema_version" keys and validates against
// the matching file under schemas/.

#include <memory>
#include <optional>
#include <string>

#include "mfblocks/blocks.hpp"
#include "mfblocks/certify.hpp"
#include "mfblocks/error.hpp"
#include "mfblocks/json_io.hpp"
#include "mfblocks/lietype.hpp"
#include "mfblocks/sc_algebra.hpp"

namespace mfb {

inline constexpr int kSchemaVersion = 1;

// A builtin group name, a group file or a character table file. Groups are
// turned into tables by Dixon-Schneider.
std::shared_ptr<const CharacterTable> resolve_table(const std::string& source, std::int64_t bound = kDefaultElementBound);

struct BlockReportOptions {
  bool defect_groups = true;  // only when the table carries its group
  bool idempotents = false;
  bool klein_is_dihedral = false;
  std::int64_t subgroup_bound = kDefaultSubgroupBound;
};

json embedding_to_json(const EmbeddingSpec& e);
json blocks_report(const BlockPartition& P, const BlockReportOptions& opts = {});
json orbits_report(const BlockPartition& P);
json certify_report(const BlockPartition& P, const std::vector<MfCertificate>& certs);
// Blocks of G against blocks of G/Z for Z generated by the given elements.
json dominate_report(std::shared_ptr<const PermGroup> G, const std::vector<Perm>& normal_gens, std::int64_t ell,
                     std::int64_t bound = kDefaultElementBound);
json lietype_report(const GenericType& t, std::int64_t ell, std::int64_t q);
json suzukiree_report(const GenericType& t, std::int64_t ell, std::optional<std::int64_t> field_size);
json twist_report(const SCAlgebra& A, int a);
json twisted_report(const Cocycle& gamma, bool include_algebra = false);

// The error object written to stderr by the command-line tool.
json error_json(const Error& e);

}  // namespace mfb
