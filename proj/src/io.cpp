#include "freedim/io.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <utility>

namespace freedim {

namespace {

using nlohmann::json;

std::pair<std::size_t, std::size_t> line_col_at(const std::string& text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

[[noreturn]] void fail(const std::string& message) { throw ParseError(message); }

void require_keys(const json& object, const std::vector<std::string>& required,
                  const std::vector<std::string>& optional) {
  if (!object.is_object()) fail("document root must be a JSON object");
  for (const auto& key : required) {
    if (!object.contains(key)) fail("missing required key '" + key + "'");
  }
  for (const auto& item : object.items()) {
    const bool known = std::find(required.begin(), required.end(), item.key()) != required.end() ||
                       std::find(optional.begin(), optional.end(), item.key()) != optional.end();
    if (!known) fail("unknown key '" + item.key() + "'");
  }
}

std::uint64_t as_uint(const json& value, const std::string& what) {
  if (!value.is_number_unsigned()) fail(what + " must be a non-negative integer");
  return value.get<std::uint64_t>();
}

std::vector<std::size_t> as_index_list(const json& value, const std::string& what) {
  if (!value.is_array()) fail(what + " must be an array of indices");
  std::vector<std::size_t> out;
  out.reserve(value.size());
  for (std::size_t i = 0; i < value.size(); ++i) {
    out.push_back(static_cast<std::size_t>(as_uint(value[i], what + "[" + std::to_string(i) + "]")));
  }
  return out;
}

SetFamily parse_setsystem(const json& root, std::vector<std::string>& warnings) {
  require_keys(root, {"ground_size", "sets"}, {});
  const std::size_t ground = static_cast<std::size_t>(as_uint(root["ground_size"], "ground_size"));
  if (!root["sets"].is_array()) fail("sets must be an array of index lists");
  std::vector<std::vector<std::size_t>> sets;
  for (std::size_t i = 0; i < root["sets"].size(); ++i) {
    sets.push_back(as_index_list(root["sets"][i], "sets[" + std::to_string(i) + "]"));
    for (std::size_t index : sets.back()) {
      if (index >= ground) {
        fail("sets[" + std::to_string(i) + "]: index " + std::to_string(index) +
             " out of range for ground_size " + std::to_string(ground));
      }
    }
  }
  SetFamily family = make_set_family(ground, sets);
  for (std::size_t dup : duplicate_member_indices(family)) {
    warnings.push_back("duplicate member at index " + std::to_string(dup));
  }
  return family;
}

Pseudotree parse_pseudotree(const json& root) {
  require_keys(root, {"nodes", "parent"}, {});
  const std::size_t nodes = static_cast<std::size_t>(as_uint(root["nodes"], "nodes"));
  if (!root["parent"].is_array() || root["parent"].size() != nodes) {
    fail("parent must be an array with one entry per node");
  }
  std::vector<std::optional<std::size_t>> parent(nodes);
  for (std::size_t i = 0; i < nodes; ++i) {
    const json& entry = root["parent"][i];
    if (entry.is_null()) continue;
    const std::size_t value =
        static_cast<std::size_t>(as_uint(entry, "parent[" + std::to_string(i) + "]"));
    if (value >= nodes) {
      fail("parent[" + std::to_string(i) + "]: node " + std::to_string(value) + " out of range");
    }
    parent[i] = value;
  }
  try {
    return Pseudotree(std::move(parent));
  } catch (const std::invalid_argument& e) {
    fail(e.what());
  }
}

ChainCuts parse_chaincuts(const json& root) {
  require_keys(root, {"length", "cuts"}, {});
  ChainCuts cuts;
  cuts.length = static_cast<std::size_t>(as_uint(root["length"], "length"));
  cuts.cuts = as_index_list(root["cuts"], "cuts");
  for (std::size_t c : cuts.cuts) {
    if (c >= cuts.length) {
      fail("cuts: cut " + std::to_string(c) + " out of range for length " +
           std::to_string(cuts.length));
    }
  }
  return cuts;
}

CoverFamilyDoc parse_coverfamily(const json& root) {
  require_keys(root, {"ground_size", "covers"}, {"d", "M", "chi", "interval"});
  CoverFamilyDoc doc;
  doc.ground_size = static_cast<std::size_t>(as_uint(root["ground_size"], "ground_size"));
  if (!root["covers"].is_array()) fail("covers must be an array of covers");
  for (std::size_t i = 0; i < root["covers"].size(); ++i) {
    const json& cover = root["covers"][i];
    const std::string what = "covers[" + std::to_string(i) + "]";
    if (!cover.is_array()) fail(what + " must be an array of cells");
    std::vector<std::vector<std::size_t>> cells;
    for (std::size_t j = 0; j < cover.size(); ++j) {
      cells.push_back(as_index_list(cover[j], what + "[" + std::to_string(j) + "]"));
      for (std::size_t index : cells.back()) {
        if (index >= doc.ground_size) {
          fail(what + ": index " + std::to_string(index) + " out of range for ground_size " +
               std::to_string(doc.ground_size));
        }
      }
    }
    try {
      doc.covers.push_back(make_cover(doc.ground_size, cells));
    } catch (const std::invalid_argument& e) {
      fail(what + ": " + e.what());
    }
  }
  if (root.contains("d")) doc.d = as_uint(root["d"], "d");
  if (root.contains("M")) {
    const json& m = root["M"];
    if (m.is_string()) {
      try {
        doc.m = parse_rational(m.get<std::string>());
      } catch (const std::invalid_argument& e) {
        fail(std::string("M: ") + e.what());
      }
    } else {
      doc.m = Rational(static_cast<std::int64_t>(as_uint(m, "M")));
    }
    if (*doc.m <= Rational(0)) fail("M must be positive");
  }
  if (root.contains("chi")) {
    std::vector<std::uint64_t> chi;
    if (!root["chi"].is_array()) fail("chi must be an array of positive integers");
    for (std::size_t i = 0; i < root["chi"].size(); ++i) {
      chi.push_back(as_uint(root["chi"][i], "chi[" + std::to_string(i) + "]"));
      if (chi.back() == 0) fail("chi[" + std::to_string(i) + "] must be positive");
    }
    if (chi.size() != doc.covers.size()) fail("chi must assign a value to every cover");
    doc.chi = std::move(chi);
  }
  if (root.contains("interval")) {
    if (!root["interval"].is_boolean()) fail("interval must be a boolean");
    doc.interval = root["interval"].get<bool>();
  }
  return doc;
}

InstanceParams parse_instanceparams(const json& root) {
  require_keys(root, {"d", "m", "m1", "p"}, {"n"});
  InstanceParams params;
  params.d = as_uint(root["d"], "d");
  params.m = as_uint(root["m"], "m");
  params.m1 = as_uint(root["m1"], "m1");
  params.p = as_uint(root["p"], "p");
  if (params.d == 0 || params.m == 0 || params.m1 == 0 || params.p == 0) {
    fail("d, m, m1, p must be >= 1");
  }
  if (root.contains("n")) params.n = as_uint(root["n"], "n");
  return params;
}

json cells_json(const std::vector<Bitset>& cells) {
  json out = json::array();
  for (const Bitset& cell : cells) out.push_back(indices_of(cell));
  return out;
}

}  // namespace

std::string doc_kind_name(DocKind kind) {
  switch (kind) {
    case DocKind::setsystem: return "setsystem";
    case DocKind::pseudotree: return "pseudotree";
    case DocKind::chaincuts: return "chaincuts";
    case DocKind::coverfamily: return "coverfamily";
    case DocKind::instanceparams: return "instanceparams";
  }
  return "unknown";
}

Document parse_document(const std::string& text, DocKind kind, const std::string& source) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    auto [line, col] = line_col_at(text, e.byte > 0 ? e.byte - 1 : 0);
    throw ParseError(e.what(), line, col);
  }

  Document doc;
  doc.kind = kind;
  doc.source = source;
  switch (kind) {
    case DocKind::setsystem: doc.payload = parse_setsystem(root, doc.warnings); break;
    case DocKind::pseudotree: doc.payload = parse_pseudotree(root); break;
    case DocKind::chaincuts: doc.payload = parse_chaincuts(root); break;
    case DocKind::coverfamily: doc.payload = parse_coverfamily(root); break;
    case DocKind::instanceparams: doc.payload = parse_instanceparams(root); break;
  }
  return doc;
}

std::string serialize_document(const Document& doc) {
  json root;
  switch (doc.kind) {
    case DocKind::setsystem: {
      const auto& family = std::get<SetFamily>(doc.payload);
      root["ground_size"] = family.ground.size;
      root["sets"] = cells_json(family.members);
      break;
    }
    case DocKind::pseudotree: {
      const auto& tree = std::get<Pseudotree>(doc.payload);
      root["nodes"] = tree.node_count();
      json parent = json::array();
      for (const auto& p : tree.parents()) {
        if (p) {
          parent.push_back(*p);
        } else {
          parent.push_back(nullptr);
        }
      }
      root["parent"] = std::move(parent);
      break;
    }
    case DocKind::chaincuts: {
      const auto& cuts = std::get<ChainCuts>(doc.payload);
      root["length"] = cuts.length;
      root["cuts"] = cuts.cuts;
      break;
    }
    case DocKind::coverfamily: {
      const auto& fam = std::get<CoverFamilyDoc>(doc.payload);
      root["ground_size"] = fam.ground_size;
      json covers = json::array();
      for (const Cover& cover : fam.covers) covers.push_back(cells_json(cover.cells));
      root["covers"] = std::move(covers);
      if (fam.d) root["d"] = *fam.d;
      if (fam.m) root["M"] = rational_string(*fam.m);
      if (fam.chi) root["chi"] = *fam.chi;
      if (fam.interval) root["interval"] = true;
      break;
    }
    case DocKind::instanceparams: {
      const auto& params = std::get<InstanceParams>(doc.payload);
      root["d"] = params.d;
      root["m"] = params.m;
      root["m1"] = params.m1;
      root["p"] = params.p;
      if (params.n) root["n"] = *params.n;
      break;
    }
  }
  return root.dump(2) + "\n";
}

}  // namespace freedim
