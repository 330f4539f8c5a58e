#include "tiltlab/io.hpp"

#include <fstream>
#include <sstream>

#include "tiltlab/errors.hpp"

namespace tiltlab {

namespace {

[[noreturn]] void bad(const std::string& what) { throw InputError("bad-json", what); }

int as_int(const Json& j, const std::string& what) {
  if (!j.is_number_integer()) bad(what + " must be an integer");
  return j.get<int>();
}

Json mat_to_json(const Mat& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (auto x : m.row(r)) row.push_back(x);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

Quiver quiver_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j.contains("arrows")) bad("quiver needs \"vertices\" and \"arrows\"");
  const int n = as_int(j.at("vertices"), "\"vertices\"");
  if (n < 1 || n > IndexSet::kCapacity) bad("\"vertices\" out of range");
  if (!j.at("arrows").is_array()) bad("\"arrows\" must be an array");
  std::vector<Arrow> arrows;
  for (const auto& a : j.at("arrows")) {
    if (!a.is_array() || a.size() != 2) bad("each arrow is a pair [source, target]");
    const int s = as_int(a[0], "arrow source"), t = as_int(a[1], "arrow target");
    if (s < 1 || s > n || t < 1 || t > n) bad("arrow endpoint out of range");
    arrows.push_back({s - 1, t - 1});
  }
  return Quiver(n, std::move(arrows));
}

Json quiver_to_json(const Quiver& q) {
  Json arrows = Json::array();
  for (const auto& a : q.arrows()) arrows.push_back({a.source + 1, a.target + 1});
  return Json{{"vertices", q.vertex_count()}, {"arrows", std::move(arrows)}};
}

Quiver read_quiver_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("bad-file", "cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  const auto j = Json::parse(buf.str(), nullptr, false);
  if (j.is_discarded()) bad("malformed JSON in " + path);
  return quiver_from_json(j);
}

Json representation_to_json(const Representation& m) {
  Json mats = Json::object();
  for (std::size_t a = 0; a < m.mats().size(); ++a) mats[std::to_string(a + 1)] = mat_to_json(m.mat(a));
  return Json{{"dims", m.dims()}, {"mats", std::move(mats)}};
}

Representation representation_from_json(const Json& j, const Quiver& q, Scalar p) {
  if (!j.is_object() || !j.contains("dims") || !j.contains("mats")) bad("representation needs \"dims\" and \"mats\"");
  DimVector dims;
  for (const auto& d : j.at("dims")) dims.push_back(as_int(d, "dimension"));
  if (dims.size() != static_cast<std::size_t>(q.vertex_count())) bad("\"dims\" length differs from the vertex count");
  std::vector<Mat> mats;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const auto& ar = q.arrows()[a];
    const auto rows = static_cast<std::size_t>(dims[static_cast<std::size_t>(ar.target)]);
    const auto cols = static_cast<std::size_t>(dims[static_cast<std::size_t>(ar.source)]);
    Mat m(rows, cols, p);
    const auto key = std::to_string(a + 1);
    if (j.at("mats").contains(key)) {
      const auto& jm = j.at("mats").at(key);
      if (!jm.is_array() || jm.size() != rows) bad("matrix for arrow " + key + " has the wrong row count");
      for (std::size_t r = 0; r < rows; ++r) {
        if (!jm[r].is_array() || jm[r].size() != cols) bad("matrix for arrow " + key + " has the wrong column count");
        for (std::size_t c = 0; c < cols; ++c) m.set(r, c, jm[r][c].get<long long>());
      }
    } else if (rows * cols != 0) {
      bad("missing matrix for arrow " + key);
    }
    mats.push_back(std::move(m));
  }
  return Representation(q, p, std::move(dims), std::move(mats));
}

Json census_to_json(const Census& c) {
  Json list = Json::array();
  for (const auto& x : c.indecs()) {
    auto rep = representation_to_json(x);
    list.push_back(Json{{"root", x.dims()}, {"mats", rep["mats"]}});
  }
  return Json{{"quiver", quiver_to_json(c.quiver())},
              {"p", c.modulus()},
              {"indecomposables", std::move(list)},
              {"homTable", c.hom_table()},
              {"extTable", c.ext_table()}};
}

Json class_to_json(const ModuleClass& mc) { return Json(mc.members()); }

Json check_to_json(const Check& k) {
  Json j{{"name", k.name}, {"pass", k.pass}};
  if (!k.pass) {
    j["witness"] = k.witness;
    if (!k.detail.empty()) j["detail"] = k.detail;
  }
  return j;
}

Json report_to_json(const Report& r) {
  Json counts = Json::object(), sincere = Json::object();
  for (std::size_t k = 0; k < 7; ++k) {
    counts["set" + std::to_string(k + 1)] = r.counts[k];
    sincere["set" + std::to_string(k + 1)] = r.sincere_counts[k];
  }
  auto list = [](const std::vector<Check>& v) {
    Json a = Json::array();
    for (const auto& k : v) a.push_back(check_to_json(k));
    return a;
  };
  return Json{{"p", r.p},
              {"counts", std::move(counts)},
              {"countsEqual", r.counts_equal()},
              {"rootPoset", Json{{"antichains", r.root_poset_antichains},
                                 {"match", r.root_poset_antichains == r.counts[0]}}},
              {"roundtrips", list(r.roundtrips)},
              {"supplements", Json{{"checks", list(r.supplements)}}},
              {"sincere", std::move(sincere)},
              {"support", list(r.support)},
              {"duality", list(r.duality)}};
}

Json diagnostic_json(const std::string& code, const std::string& message, const std::vector<int>& witness) {
  return Json{{"error", code}, {"witness", witness}, {"message", message}};
}

}  // namespace tiltlab
