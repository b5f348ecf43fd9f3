#include "etheta/docio.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "etheta/error.hpp"

namespace etheta {

namespace {

using nlohmann::json;

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

SpaceDocument space_from_json(const json& j) {
  if (!j.is_object() || !j.contains("points") || !j.contains("opens"))
    throw Error(ErrorCode::ParseError, "space document needs \"points\" and \"opens\"");
  SpaceDocument doc;
  for (const auto& p : j.at("points")) {
    if (!p.is_string()) throw Error(ErrorCode::ParseError, "point labels must be strings");
    doc.points.push_back(p.get<std::string>());
  }
  for (const auto& open : j.at("opens")) {
    if (!open.is_array()) throw Error(ErrorCode::ParseError, "each open must be a label array");
    std::vector<std::string> labels;
    for (const auto& l : open) {
      if (!l.is_string()) throw Error(ErrorCode::ParseError, "set members must be label strings");
      labels.push_back(l.get<std::string>());
    }
    doc.opens.push_back(std::move(labels));
  }
  return doc;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void append_label_array(std::string& out, const std::vector<std::string>& labels) {
  out += "[";
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) out += ",";
    out += "\"" + json_escape(labels[i]) + "\"";
  }
  out += "]";
}

void append_opens(std::string& out, const std::vector<std::vector<std::string>>& opens) {
  out += "[";
  for (std::size_t i = 0; i < opens.size(); ++i) {
    if (i) out += ",";
    append_label_array(out, opens[i]);
  }
  out += "]";
}

}  // namespace

std::string json_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

SpaceDocument to_document(const FiniteSpace& space) {
  SpaceDocument doc;
  doc.points = space.point_names();
  for (PointSet u : space.opens()) {
    std::vector<std::string> labels;
    for (int i = 0; i < space.size(); ++i)
      if (u.has(i)) labels.push_back(space.point_names()[i]);
    doc.opens.push_back(std::move(labels));
  }
  return doc;
}

FiniteSpace from_document(const SpaceDocument& doc) {
  check_labels(doc.points);
  const int n = int(doc.points.size());
  auto index_of = [&](const std::string& label) {
    for (int i = 0; i < n; ++i)
      if (doc.points[i] == label) return i;
    throw Error(ErrorCode::UnknownPoint, "\"" + label + "\" is not a point of the space");
  };
  std::vector<PointSet> members{PointSet::empty(), PointSet::full(n)};
  for (const auto& labels : doc.opens) {
    PointSet s;
    for (const auto& l : labels) s = s.with(index_of(l));
    members.push_back(s);
  }
  return FiniteSpace::validate(doc.points, SetFamily(n, std::move(members)));
}

std::string serialize_space(const SpaceDocument& doc, bool compact) {
  std::string out = compact ? "{\"points\":" : "{\n  \"points\": ";
  append_label_array(out, doc.points);
  out += compact ? ",\"opens\":" : ",\n  \"opens\": ";
  append_opens(out, doc.opens);
  out += compact ? "}" : "\n}\n";
  return out;
}

SpaceDocument parse_space_document(const std::string& text) {
  return space_from_json(parse_json(text));
}

FiniteSpace load_space_file(const std::string& path) {
  return from_document(parse_space_document(read_file(path)));
}

MapDocument to_document(const SpaceMap& map) {
  MapDocument doc;
  doc.domain = to_document(map.domain());
  doc.codomain = to_document(map.codomain());
  for (int x = 0; x < map.domain().size(); ++x)
    doc.assoc.emplace_back(map.domain().point_names()[x],
                           map.codomain().point_names()[map.apply(x)]);
  return doc;
}

SpaceMap from_document(const MapDocument& doc) {
  FiniteSpace domain = from_document(doc.domain);
  FiniteSpace codomain = from_document(doc.codomain);
  std::vector<int> images(domain.size(), -1);
  for (const auto& [from, to] : doc.assoc) {
    const int x = domain.point_index(from);
    if (images[x] != -1)
      throw Error(ErrorCode::ParseError, "point \"" + from + "\" is mapped twice");
    images[x] = codomain.point_index(to);
  }
  for (int x = 0; x < domain.size(); ++x)
    if (images[x] == -1)
      throw Error(ErrorCode::DomainMismatch,
                  "point \"" + domain.point_names()[x] + "\" has no image");
  return SpaceMap(std::move(domain), std::move(codomain), std::move(images));
}

std::string serialize_map(const MapDocument& doc, bool compact) {
  std::string out = compact ? "{\"domain\":" : "{\n  \"domain\": ";
  out += serialize_space(doc.domain, true);
  out += compact ? ",\"codomain\":" : ",\n  \"codomain\": ";
  out += serialize_space(doc.codomain, true);
  out += compact ? ",\"map\":{" : ",\n  \"map\": {";
  for (std::size_t i = 0; i < doc.assoc.size(); ++i) {
    if (i) out += ",";
    out += "\"" + json_escape(doc.assoc[i].first) + "\":\"" + json_escape(doc.assoc[i].second) +
           "\"";
  }
  out += compact ? "}}" : "}\n}\n";
  return out;
}

MapDocument parse_map_document(const std::string& text, const std::string& base_dir) {
  const json j = parse_json(text);
  if (!j.is_object() || !j.contains("domain") || !j.contains("codomain") || !j.contains("map"))
    throw Error(ErrorCode::ParseError, "map document needs \"domain\", \"codomain\" and \"map\"");
  auto space_part = [&](const json& part) {
    if (part.is_string()) {
      std::filesystem::path p(part.get<std::string>());
      if (p.is_relative() && !base_dir.empty()) p = std::filesystem::path(base_dir) / p;
      return parse_space_document(read_file(p.string()));
    }
    return space_from_json(part);
  };
  MapDocument doc;
  doc.domain = space_part(j.at("domain"));
  doc.codomain = space_part(j.at("codomain"));
  const auto& m = j.at("map");
  if (!m.is_object()) throw Error(ErrorCode::ParseError, "\"map\" must be a label association");
  for (auto it = m.begin(); it != m.end(); ++it) {
    if (!it.value().is_string())
      throw Error(ErrorCode::ParseError, "map values must be label strings");
    doc.assoc.emplace_back(it.key(), it.value().get<std::string>());
  }
  return doc;
}

SpaceMap load_map_file(const std::string& path) {
  const std::string dir = std::filesystem::path(path).parent_path().string();
  return from_document(parse_map_document(read_file(path), dir));
}

SpaceMap map_from_assoc_arg(const FiniteSpace& domain, const FiniteSpace& codomain,
                            const std::string& assoc) {
  std::vector<int> images(domain.size(), -1);
  std::string entry;
  std::istringstream in(assoc);
  while (std::getline(in, entry, ',')) {
    const auto colon = entry.find(':');
    if (colon == std::string::npos)
      throw Error(ErrorCode::ParseError, "map entries look like from:to, got \"" + entry + "\"");
    const int x = domain.point_index(entry.substr(0, colon));
    if (images[x] != -1)
      throw Error(ErrorCode::ParseError, "point \"" + entry.substr(0, colon) + "\" mapped twice");
    images[x] = codomain.point_index(entry.substr(colon + 1));
  }
  for (int x = 0; x < domain.size(); ++x)
    if (images[x] == -1)
      throw Error(ErrorCode::DomainMismatch,
                  "point \"" + domain.point_names()[x] + "\" has no image");
  return SpaceMap(domain, codomain, std::move(images));
}

PointSet set_from_arg(const FiniteSpace& space, const std::string& labels) {
  PointSet out;
  if (labels.empty()) return out;
  std::string label;
  std::istringstream in(labels);
  while (std::getline(in, label, ',')) out = out.with(space.point_index(label));
  return out;
}

}  // namespace etheta
