#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mfblocks/error.hpp"
#include "mfblocks/reports.hpp"
#include "mfblocks/symmetric.hpp"

namespace py = pybind11;
using namespace mfb;

namespace {

// Reports cross the boundary as JSON text; the Python side parses them.
std::string dumped(const json& j) { return j.dump(); }

json with_header(const std::string& command, const json& body) {
  json j{{"command", command}, {"schema_version", kSchemaVersion}};
  for (auto it = body.begin(); it != body.end(); ++it) j[it.key()] = it.value();
  return j;
}

BlockPartition partition_for(const std::string& source, std::int64_t ell, std::int64_t embedding) {
  auto t = resolve_table(source);
  std::optional<EmbeddingSpec> emb;
  if (embedding != 1) emb = EmbeddingSpec::make(ell, t->exponent(), embedding);
  return block_partition(t, ell, emb);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "mfblocks native core";

  static py::exception<Error> exc(m, "NativeError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(exc, dumped(error_json(e)).c_str());
    }
  });

  m.def("data_dir", &data_dir);

  m.def("chartable", [](const std::string& source) {
    auto t = resolve_table(source);
    json j = with_header("chartable", table_to_json(*t));
    json vals = json::array();
    for (const auto& row : t->chars()) {
      json r = json::array();
      for (const auto& v : row) r.push_back(v.to_string());
      vals.push_back(r);
    }
    j["values"] = vals;
    return dumped(j);
  });
  m.def(
      "blocks",
      [](const std::string& source, std::int64_t ell, bool idempotents, bool defect_groups, std::int64_t embedding) {
        BlockReportOptions o;
        o.idempotents = idempotents;
        o.defect_groups = defect_groups;
        return dumped(blocks_report(partition_for(source, ell, embedding), o));
      },
      py::arg("source"), py::arg("ell"), py::arg("idempotents") = false, py::arg("defect_groups") = true,
      py::arg("embedding") = 1);
  m.def(
      "orbits", [](const std::string& source, std::int64_t ell, std::int64_t embedding) {
        return dumped(orbits_report(partition_for(source, ell, embedding)));
      },
      py::arg("source"), py::arg("ell"), py::arg("embedding") = 1);
  m.def("certify", [](const std::string& source, std::int64_t ell) {
    auto P = partition_for(source, ell, 1);
    return dumped(certify_report(P, certify_all(P)));
  });
  m.def("dominate", [](const std::string& source, std::int64_t ell) {
    auto G = std::make_shared<const PermGroup>(resolve_group(source));
    std::vector<Perm> gens;
    for (int x : subgroup_generators(*G, center(*G))) gens.push_back(G->element(x));
    return dumped(dominate_report(G, gens, ell));
  });
  m.def("snblocks", [](int n, int ell) { return dumped(with_header("snblocks", sn_report_to_json(sn_block_report(n, ell)))); });
  m.def("anreport", [](int n, int ell) { return dumped(with_header("anreport", an_report_to_json(an_mf_report(n, ell)))); });
  m.def("lietype", [](const std::string& type, std::int64_t ell, std::int64_t q) {
    return dumped(lietype_report(parse_type(type), ell, q));
  });
  m.def(
      "suzukiree",
      [](const std::string& type, std::int64_t ell, std::optional<std::int64_t> field_size) {
        return dumped(suzukiree_report(parse_type(type), ell, field_size));
      },
      py::arg("type"), py::arg("ell"), py::arg("field_size") = py::none());
  m.def("twist", [](const std::string& algebra_json, int a) {
    return dumped(twist_report(algebra_from_json(json::parse(algebra_json)), a));
  });
  m.def("twisted", [](const std::string& cocycle_json) {
    return dumped(twisted_report(cocycle_from_json(json::parse(cocycle_json))));
  });

  m.def("e_of", &e_of);
  m.def("eval_phi", [](int d, std::int64_t q) { return eval_phi(d, Integer(static_cast<long>(q))).get_str(); });
  m.def("nu_ell", [](std::int64_t n, std::int64_t ell) { return nu_ell(Integer(static_cast<long>(n)), ell); });
  m.def("ell_core", &ell_core);
  m.def("bar_core", &bar_core);
  m.def("conjugate", &conjugate);
  m.def("is_symmetric", &is_symmetric);
}
