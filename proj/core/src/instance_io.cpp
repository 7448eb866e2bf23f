#include "dcq/instance_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "dcq/errors.hpp"
#include "json.hpp"

namespace dcq {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

const json& field(const json& obj, const char* name) {
  if (!obj.is_object()) throw ParseError("expected a JSON object");
  auto it = obj.find(name);
  if (it == obj.end()) throw ParseError(std::string("missing field '") + name + "'");
  return *it;
}

Scalar scalar_field(const json& obj, const char* name) {
  const json& v = field(obj, name);
  if (v.is_string()) return parse_scalar(v.get<std::string>());
  if (v.is_number_integer()) return parse_scalar(v.dump());
  throw ParseError(std::string("field '") + name +
                   "' must be a decimal string (binary floats are not exact)");
}

std::string id_field(const json& obj) {
  const json& v = field(obj, "id");
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return v.dump();
  throw ParseError("field 'id' must be a string or an integer");
}

std::int64_t int_field(const json& obj, const char* name) {
  const json& v = field(obj, name);
  if (!v.is_number_integer()) throw ParseError(std::string("field '") + name + "' must be an integer");
  return v.get<std::int64_t>();
}

const json& array_field(const json& obj, const char* name) {
  const json& v = field(obj, name);
  if (!v.is_array()) throw ParseError(std::string("field '") + name + "' must be an array");
  return v;
}

std::string type_of(const json& doc) {
  const json& t = field(doc, "type");
  if (!t.is_string()) throw ParseError("field 'type' must be a string");
  return t.get<std::string>();
}

ordered_json id_value(const std::string& id) { return ordered_json(id); }

std::uint64_t fnv1a(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

}  // namespace

InstanceKind instance_kind(std::string_view json_text) {
  const std::string type = type_of(parse_json(json_text));
  if (type == "disks") return InstanceKind::Disks;
  if (type == "balls") return InstanceKind::Balls;
  throw ParseError("unknown instance type '" + type + "'");
}

DiskInstance parse_disk_instance(std::string_view json_text) {
  const json doc = parse_json(json_text);
  if (type_of(doc) != "disks") throw ParseError("expected an instance of type 'disks'");
  std::vector<Disk> disks;
  for (const json& d : array_field(doc, "disks")) {
    disks.push_back(Disk{id_field(d), Point2{scalar_field(d, "x"), scalar_field(d, "y")},
                         scalar_field(d, "r")});
  }
  return make_disk_instance(std::move(disks));
}

BallInstance parse_ball_instance(std::string_view json_text) {
  const json doc = parse_json(json_text);
  if (type_of(doc) != "balls") throw ParseError("expected an instance of type 'balls'");
  const json& kind_value = field(doc, "plane_kind");
  if (!kind_value.is_string()) throw ParseError("field 'plane_kind' must be a string");
  const std::string kind_text = kind_value.get<std::string>();
  PlaneKind kind;
  if (kind_text == "parallel") {
    kind = PlaneKind::ParallelXY;
  } else if (kind_text == "perp") {
    kind = PlaneKind::PerpToXZ;
  } else {
    throw ParseError("plane_kind must be 'parallel' or 'perp'");
  }

  std::vector<Plane> planes;
  std::vector<std::int64_t> labels;
  for (const json& p : array_field(doc, "planes")) {
    labels.push_back(int_field(p, "id"));
    if (kind == PlaneKind::ParallelXY) {
      planes.push_back(Plane::parallel_xy(scalar_field(p, "z")));
    } else {
      planes.push_back(Plane::perp_to_xz(scalar_field(p, "alpha"), scalar_field(p, "gamma"),
                                         scalar_field(p, "delta")));
    }
  }

  std::vector<Ball> balls;
  for (const json& b : array_field(doc, "balls")) {
    const std::int64_t label = int_field(b, "plane");
    std::size_t plane = labels.size();
    for (std::size_t j = 0; j < labels.size(); ++j) {
      if (labels[j] == label) plane = j;
    }
    if (plane == labels.size()) {
      throw ValidationError("ball references unknown plane id " + std::to_string(label));
    }
    balls.push_back(Ball{id_field(b),
                         Point3{scalar_field(b, "x"), scalar_field(b, "y"), scalar_field(b, "z")},
                         scalar_field(b, "r"), plane});
  }
  return make_ball_instance(kind, std::move(planes), std::move(labels), std::move(balls));
}

std::string serialize_instance(const DiskInstance& instance) {
  ordered_json doc;
  doc["type"] = "disks";
  doc["disks"] = ordered_json::array();
  for (const auto& d : instance.disks) {
    ordered_json item;
    item["id"] = id_value(d.id);
    item["x"] = to_string(d.center.x);
    item["y"] = to_string(d.center.y);
    item["r"] = to_string(d.radius);
    doc["disks"].push_back(std::move(item));
  }
  return doc.dump(2) + "\n";
}

std::string serialize_instance(const BallInstance& instance) {
  ordered_json doc;
  doc["type"] = "balls";
  doc["plane_kind"] = instance.plane_kind == PlaneKind::ParallelXY ? "parallel" : "perp";
  doc["planes"] = ordered_json::array();
  for (std::size_t j = 0; j < instance.planes.size(); ++j) {
    const Plane& p = instance.planes[j];
    ordered_json item;
    item["id"] = instance.plane_labels[j];
    if (p.kind() == PlaneKind::ParallelXY) {
      item["z"] = to_string(p.z0());
    } else {
      item["alpha"] = to_string(p.alpha());
      item["gamma"] = to_string(p.gamma());
      item["delta"] = to_string(p.delta());
    }
    doc["planes"].push_back(std::move(item));
  }
  doc["balls"] = ordered_json::array();
  for (const auto& b : instance.balls) {
    ordered_json item;
    item["id"] = id_value(b.id);
    item["x"] = to_string(b.center.x);
    item["y"] = to_string(b.center.y);
    item["z"] = to_string(b.center.z);
    item["r"] = to_string(b.radius);
    item["plane"] = instance.plane_labels[b.plane];
    doc["balls"].push_back(std::move(item));
  }
  return doc.dump(2) + "\n";
}

std::string canonical_form(const DiskInstance& instance) {
  std::ostringstream out;
  out << "disks " << instance.size() << '\n';
  for (const auto& d : instance.disks) {
    out << d.id << ' ' << to_string(d.center.x) << ' ' << to_string(d.center.y) << ' '
        << to_string(d.radius) << '\n';
  }
  return out.str();
}

std::string canonical_form(const BallInstance& instance) {
  std::ostringstream out;
  out << "balls " << (instance.plane_kind == PlaneKind::ParallelXY ? "parallel" : "perp") << ' '
      << instance.planes.size() << ' ' << instance.size() << '\n';
  for (std::size_t j = 0; j < instance.planes.size(); ++j) {
    const Plane& p = instance.planes[j];
    out << "plane " << instance.plane_labels[j];
    if (p.kind() == PlaneKind::ParallelXY) {
      out << ' ' << to_string(p.z0());
    } else {
      out << ' ' << to_string(p.alpha()) << ' ' << to_string(p.gamma()) << ' '
          << to_string(p.delta());
    }
    out << '\n';
  }
  for (const auto& b : instance.balls) {
    out << b.id << ' ' << to_string(b.center.x) << ' ' << to_string(b.center.y) << ' '
        << to_string(b.center.z) << ' ' << to_string(b.radius) << ' '
        << instance.plane_labels[b.plane] << '\n';
  }
  return out.str();
}

std::uint64_t instance_digest(const DiskInstance& instance) {
  return fnv1a(canonical_form(instance));
}

std::uint64_t instance_digest(const BallInstance& instance) {
  return fnv1a(canonical_form(instance));
}

std::string digest_hex(std::uint64_t digest) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(digest));
  return buf;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw Error("write failed for " + path.string());
}

}  // namespace dcq
