#pragma once

#include <string>
#include <string_view>

#include "quiverkit/quiver.hpp"

namespace quiverkit {

// Quiver documents are JSON:
//
//   {"version": 1, "v": [<id>, ...], "e": [[<id>, <src>, <tgt>], ...]}
//
// where an <id> is a string (text label), a non-negative integer, or an
// array of ids; tagged ids such as (1,v,w) are written [1, "v", "w"].
// "version" is optional on input. Syntax errors throw Error(parse) with
// line and column; semantic problems (duplicates, dangling endpoints,
// bad labels) throw Error(invalid_argument) naming the offending id.
QuiverData parse_quiver_data(std::string_view text);
Quiver parse_quiver(std::string_view text);
std::string serialize(const Quiver& q);

// Morphism documents:
//
//   {"version": 1, "dom": <quiver>, "cod": <quiver>,
//    "vmap": [[<vertex>, <image>], ...], "emap": [[<edge>, <image>], ...]}
//
// Maps must be total and commute with src/tgt.
QuiverMorphism parse_morphism(std::string_view text);
std::string serialize(const QuiverMorphism& m);

std::string serialize(const CheckReport& r);

// Graphviz digraph: one node per vertex, one labelled arc per edge. Output
// only; not accepted by the parsers.
std::string export_dot(const Quiver& q, std::string_view name = "quiver");

// Compact JSON encoding of a single id.
std::string id_json(const Id& id);

}  // namespace quiverkit
