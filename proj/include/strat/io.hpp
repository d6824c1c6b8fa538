#pragma once

#include <json.hpp>
#include <string>

#include "strat/diagrams.hpp"
#include "strat/filtered.hpp"
#include "strat/homotopy.hpp"
#include "strat/lifting.hpp"
#include "strat/realization.hpp"

namespace strat::io {

using nlohmann::json;

/// Reads and parses a JSON file; throws ParseError.
json read_json(const std::string& path);
/// Stable 64-bit FNV-1a digest of a file's bytes, as 16 hex digits.
std::string digest(const std::string& bytes);

// Formats. Chains are "<"-joined element names.
//   poset:    {"elements": [..], "relations": [[lo, hi], ..]}
//   term:     "g" for a generator, or {"gen": "g", "word": [j, ..]} (strictly decreasing)
//   filtered: {"poset": .., "generators": [{"name", "dim", "faces": [term..], "label": [elements]}]}
//             or {"poset": .., "vertices": [{"name", "label"}], "facets": [[names]]}
//   map:      {"images": {source generator: term}}
//   set diagram: {"poset": .., "values": {object: [labels]}, "arrows": [{"from", "to", "map": [int..]}]}
//   cells:    {"poset": .., "cells": [{"n", "chain", "attaching": {boundary generator: term}}]}
json to_json(const Poset& p);
Poset poset_from_json(const json& j);

json term_to_json(const SSet& x, const Term& t);
Term term_from_json(const SSet& x, const json& j);

json to_json(const FilteredSSet& k);
FilteredSSet filtered_from_json(const json& j);

json map_to_json(const SSet& source, const SSet& target, const SMap& f);
SMap map_from_json(const SSet& source, const SSet& target, const json& j);

json to_json(const SetDiagram& g);
SetDiagram set_diagram_from_json(const json& j);

Diagram cell_complex_from_json(const json& j);

PosetMap poset_map_from_json(const Poset& source, const Poset& target, const json& j);
json to_json(const PosetMap& alpha);

json to_json(const SPi0& s);
json to_json(const AlmostFilteredVerdict& v, const SetDiagram& g);
json to_json(const RealPoint& pt, const Poset& base);
json to_json(const GenCell& c, const Poset& base);

/// Tuples like "p,p,q" (comma separated element names).
Tuple parse_tuple(const Poset& base, const std::string& text);

}  // namespace strat::io
