#pragma once

// Text file formats. Floats are written with 17 significant digits so every
// write-then-read roundtrips bit-identically.
//
//   mesh/mapping:  "hyptutte-mesh v1", "genus g", "vertices n",
//                  "edges m" then m directed-edge lines "i j <word>",
//                  "faces f" then f lines "i j k",
//                  optional "lifts" then n lines "x y z".
//   weights:       "hyptutte-weights v1" then one line "i j value" per
//                  directed edge.
//   group:         "genus g" then per generator "gen <word>" and 3 matrix
//                  rows.

#include <iosfwd>
#include <optional>
#include <string>

#include "hyptutte/gmap.hpp"

namespace hyptutte {

void write_mapping(std::ostream& os, const GeodesicMapping& m,
                   bool with_lifts = true);
void write_mapping_file(const std::string& path, const GeodesicMapping& m,
                        bool with_lifts = true);

struct MappingFile {
  GeodesicMapping mapping;
  bool had_lifts = false;  // if false, lifts were synthesized at the base
};

MappingFile read_mapping(std::istream& is);
MappingFile read_mapping_file(const std::string& path);

void write_weights(std::ostream& os, const Complex& c, const Weights& w);
void write_weights_file(const std::string& path, const Complex& c,
                        const Weights& w);
Weights read_weights(std::istream& is, const Complex& c);
Weights read_weights_file(const std::string& path, const Complex& c);

void write_group(std::ostream& os, const SurfaceGroup& g);
void write_group_file(const std::string& path, const SurfaceGroup& g);
// Reads the header and rebuilds the group; verifies stored matrices against
// the reconstruction (words are the serialization truth).
SurfaceGroup read_group(std::istream& is);
SurfaceGroup read_group_file(const std::string& path);

std::string format_double(double x);  // %.17g

}  // namespace hyptutte
