#include "t2w/document.hpp"

#include <json.hpp>
#include <limits>
#include <sstream>

#include "t2w/localmodels.hpp"

namespace t2w {

namespace {

using Json = nlohmann::json;
using OrderedJson = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw Error(ErrorCode::kParse, where + ": " + what);
}

std::int64_t get_int(const Json& j, const std::string& where) {
  if (j.is_number_unsigned()) {
    const auto v = j.get<std::uint64_t>();
    if (v > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
      fail(where, "integer exceeds the supported 64-bit range");
    }
    return static_cast<std::int64_t>(v);
  }
  if (j.is_number_integer()) return j.get<std::int64_t>();
  if (j.is_number_float()) fail(where, "expected an integer within the 64-bit range");
  fail(where, "expected an integer");
}

const Json& field(const Json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) fail(where, std::string("missing field \"") + key + "\"");
  return *it;
}

void only_keys(const Json& obj, std::initializer_list<const char*> keys, const std::string& where) {
  if (!obj.is_object()) fail(where, "expected an object");
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool known = false;
    for (const char* k : keys) known = known || it.key() == k;
    if (!known) fail(where, "unknown field \"" + it.key() + "\"");
  }
}

const Json& array(const Json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array");
  return j;
}

Pair get_pair(const Json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2) fail(where, "expected a pair [m, n]");
  return {get_int(j[0], where + "[0]"), get_int(j[1], where + "[1]")};
}

OrderedJson pair_json(Pair p) { return OrderedJson::array({p.m, p.n}); }

}  // namespace

WeightSystem parse_document(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::kParse, std::string("malformed document: ") + e.what());
  }
  const std::string root = "document";
  only_keys(doc,
            {"schema_version", "obstruction", "orientation", "genus", "circle_boundaries",
             "fixed_cycles", "exceptional"},
            root);
  const Json& version = field(doc, "schema_version", root);
  if (!version.is_string() || version.get<std::string>() != kSchemaVersion) {
    fail("schema_version", "unsupported schema version (expected \"1\")");
  }

  WeightSystem w;
  const Pair b = get_pair(field(doc, "obstruction", root), "obstruction");
  w.obstruction = {b.m, b.n};
  const std::int64_t eps = get_int(field(doc, "orientation", root), "orientation");
  if (eps != 1 && eps != -1) fail("orientation", "must be 1 or -1");
  w.orientation = eps == 1 ? Orientation::kPositive : Orientation::kNegative;
  w.genus = get_int(field(doc, "genus", root), "genus");

  const Json& circles = array(field(doc, "circle_boundaries", root), "circle_boundaries");
  for (std::size_t i = 0; i < circles.size(); ++i) {
    w.circle_boundaries.push_back(get_pair(circles[i], "circle_boundaries[" + std::to_string(i) + "]"));
  }
  const Json& cycles = array(field(doc, "fixed_cycles", root), "fixed_cycles");
  for (std::size_t l = 0; l < cycles.size(); ++l) {
    const std::string at = "fixed_cycles[" + std::to_string(l) + "]";
    FixedCycle cycle;
    const Json& entries = array(cycles[l], at);
    for (std::size_t e = 0; e < entries.size(); ++e) {
      const std::string ea = at + "[" + std::to_string(e) + "]";
      only_keys(entries[e], {"pair", "f"}, ea);
      cycle.entries.push_back({get_pair(field(entries[e], "pair", ea), ea + ".pair"),
                               get_int(field(entries[e], "f", ea), ea + ".f")});
    }
    w.fixed_cycles.push_back(std::move(cycle));
  }
  const Json& exceptional = array(field(doc, "exceptional", root), "exceptional");
  for (std::size_t j = 0; j < exceptional.size(); ++j) {
    const std::string at = "exceptional[" + std::to_string(j) + "]";
    only_keys(exceptional[j], {"alpha", "gamma1", "gamma2"}, at);
    w.exceptional.push_back({get_int(field(exceptional[j], "alpha", at), at + ".alpha"),
                             get_int(field(exceptional[j], "gamma1", at), at + ".gamma1"),
                             get_int(field(exceptional[j], "gamma2", at), at + ".gamma2")});
  }
  return w;
}

std::string serialize_document(const WeightSystem& w) {
  OrderedJson doc;
  doc["schema_version"] = kSchemaVersion;
  doc["obstruction"] = OrderedJson::array({w.obstruction.b1, w.obstruction.b2});
  doc["orientation"] = sign(w.orientation);
  doc["genus"] = w.genus;
  doc["circle_boundaries"] = OrderedJson::array();
  for (Pair p : w.circle_boundaries) doc["circle_boundaries"].push_back(pair_json(p));
  doc["fixed_cycles"] = OrderedJson::array();
  for (const auto& c : w.fixed_cycles) {
    OrderedJson entries = OrderedJson::array();
    for (const auto& e : c.entries) {
      OrderedJson entry;
      entry["pair"] = pair_json(e.pair);
      entry["f"] = e.f;
      entries.push_back(std::move(entry));
    }
    doc["fixed_cycles"].push_back(std::move(entries));
  }
  doc["exceptional"] = OrderedJson::array();
  for (const auto& e : w.exceptional) {
    OrderedJson triple;
    triple["alpha"] = e.alpha;
    triple["gamma1"] = e.gamma1;
    triple["gamma2"] = e.gamma2;
    doc["exceptional"].push_back(std::move(triple));
  }
  return doc.dump();
}

std::string local_models_listing(const WeightSystem& w) {
  std::ostringstream out;
  out << "cycle\tpoint\tleft\tright\tf\ttype\tlens\tclass\n";
  for (std::size_t l = 0; l < w.fixed_cycles.size(); ++l) {
    const auto& c = w.fixed_cycles[l];
    for (std::size_t i = 0; i < c.size(); ++i) {
      const Pair left = c.entries[i].pair;
      const Pair right = c.entries[(i + 1) % c.size()].pair;
      const std::int64_t f = c.entries[i].f;
      const LensClass lens = space_of_directions(left, right);
      out << l << "\t" << i << "\t(" << left.m << "," << left.n << ")\t(" << right.m << ","
          << right.n << ")\t" << f << "\t" << orbit_type_name(classify_fixed_point(f)) << "\t"
          << lens.to_string() << "\t" << lens.normalized().to_string() << "\n";
    }
  }
  return out.str();
}

std::string decomposition_manifest(const Decomposition& d,
                                   const std::vector<std::string>& piece_names,
                                   const std::string& manifold_name) {
  OrderedJson doc;
  doc["schema_version"] = kSchemaVersion;
  doc["manifold_part"] = manifold_name;
  doc["pieces"] = OrderedJson::array();
  for (std::size_t i = 0; i < d.gluings.size(); ++i) {
    const Gluing& g = d.gluings[i];
    auto selection = [](const CircleSelection& sel) {
      OrderedJson j;
      if (sel.kind == CircleSelection::Kind::kCircle) {
        j["circle"] = sel.component;
      } else {
        j["cycle"] = sel.component;
        j["arc"] = sel.arc;
      }
      return j;
    };
    OrderedJson entry;
    entry["file"] = i < piece_names.size() ? piece_names[i] : std::string();
    entry["manifold_selection"] = selection(g.manifold);
    entry["piece_selection"] = selection(g.piece);
    entry["isotropy"] = pair_json(make_pair(selected_isotropy(d.manifold_part, g.manifold)).rep());
    doc["pieces"].push_back(std::move(entry));
  }
  return doc.dump(2);
}

}  // namespace t2w
