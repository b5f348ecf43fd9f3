#pragma once

#include <string>
#include <vector>

#include "etheta/maps.hpp"
#include "etheta/space.hpp"

namespace etheta {

// Canonical space document: point labels in bit order plus opens as label
// arrays. The empty set and the full set may be omitted on input; output
// always carries both, inner arrays in ground order, outer array in
// canonical family order.
struct SpaceDocument {
  std::vector<std::string> points;
  std::vector<std::vector<std::string>> opens;
};

SpaceDocument to_document(const FiniteSpace& space);
FiniteSpace from_document(const SpaceDocument& doc);

// compact: single line. Pretty form puts points and opens on two lines.
std::string serialize_space(const SpaceDocument& doc, bool compact = false);
SpaceDocument parse_space_document(const std::string& text);
FiniteSpace load_space_file(const std::string& path);

// Map document: domain and codomain as inline space documents or file
// references (resolved relative to the document's directory), plus a
// total label association.
struct MapDocument {
  SpaceDocument domain;
  SpaceDocument codomain;
  std::vector<std::pair<std::string, std::string>> assoc;
};

MapDocument to_document(const SpaceMap& map);
SpaceMap from_document(const MapDocument& doc);
std::string serialize_map(const MapDocument& doc, bool compact = false);
MapDocument parse_map_document(const std::string& text, const std::string& base_dir = "");
SpaceMap load_map_file(const std::string& path);

// "a:c,b:c,c:c,d:c" -> SpaceMap between the given spaces.
SpaceMap map_from_assoc_arg(const FiniteSpace& domain, const FiniteSpace& codomain,
                            const std::string& assoc);

// Comma-joined labels with no braces; the empty string is the empty set.
PointSet set_from_arg(const FiniteSpace& space, const std::string& labels);

std::string json_escape(const std::string& s);

}  // namespace etheta
