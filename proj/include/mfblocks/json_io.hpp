#pragma once

// JSON encodings of the core value types and file helpers. Malformed input
// raises Schema errors; every decoder validates as it reads.

#include <memory>
#include <string>

#include "json.hpp"
#include "mfblocks/chartable.hpp"
#include "mfblocks/cyclo.hpp"
#include "mfblocks/finite_field.hpp"
#include "mfblocks/perm_group.hpp"

namespace mfb {

using json = nlohmann::ordered_json;

// Data directory: $MFBLOCKS_DATA if set, else the build-time default.
std::string data_dir();

json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const json& j);
// Stable textual form used for every emitted document.
std::string dump_json(const json& j);

json cyclo_to_json(const CycloNum& x);
CycloNum cyclo_from_json(const json& j);

json fq_to_json(const FqElem& x);
FqElem fq_from_json(const json& j);

json perm_to_json(const Perm& p);  // 1-based
Perm perm_from_json(const json& j, int degree);

json group_to_json(const PermGroup& G);
PermGroup group_from_json(const json& j, std::int64_t bound = kDefaultElementBound);
// A path to a group file, or the name of a shipped group (data/groups).
// Throws Domain "UnknownGroup".
PermGroup resolve_group(const std::string& name_or_path, std::int64_t bound = kDefaultElementBound);

json table_to_json(const CharacterTable& t);
// With "group" embedded, the group is rebuilt and attached after checking
// that its classes match the columns.
CharacterTable table_from_json(const json& j, std::int64_t bound = kDefaultElementBound);
CharacterTable load_table(const std::string& path, std::int64_t bound = kDefaultElementBound);
void save_table(const CharacterTable& t, const std::string& path);

}  // namespace mfb
