#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "chainfill/chain.hpp"

namespace chainfill {

/**
 * Chain file format (line oriented, '#' comments, rationals as "p/q"):
 *
 *   polychain 1
 *   ambient 3
 *   dim 2
 *   norm euclidean            | norm lp 3/2 | norm polytope <count> (vertex lines follow)
 *   vertices <count>
 *   <coord> ... <coord>
 *   simplices <count>
 *   <weight> <v0> ... <vk>
 *
 * Round-trips are exact: coordinates are never written as floats, and
 * serialize(parse(f)) is byte-identical on canonical files.
 */
Chain parse_chain(std::istream& is, std::vector<std::string>* warnings = nullptr);
Chain parse_chain_file(const std::string& path, std::vector<std::string>* warnings = nullptr);

void serialize_chain(const Chain& t, std::ostream& os);
void serialize_chain_file(const Chain& t, const std::string& path);

// Wavefront-style text export of 1- and 2-chains (ambient dimension <= 3);
// |weight| > 1 elements are repeated with a comment, negative weights flip
// orientation.
void export_obj(const Chain& t, std::ostream& os);
void export_obj_file(const Chain& t, const std::string& path);

}  // namespace chainfill
