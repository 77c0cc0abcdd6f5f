#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "bmaps/mobiles.hpp"
#include "bmaps/orientation.hpp"
#include "bmaps/planar_map.hpp"

namespace bmaps {

struct FormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Face index in the exchange format: 0-based position in the sorted list of
// face cycles, each rotated to its smallest dart.
int face_position(const Map& m, int face);
int face_from_position(const Map& m, int pos);

// Records are blank-line separated; darts are 1-based in files.
std::string write_map(const Map& m, const std::vector<Color>* spins = nullptr);
std::string write_orientation(const Orientation& o);
// Edge part in map format plus the stems line.
std::string write_tree(const Map& t);
// Trees are renumbered as rebuilt from their parts; values, flags and vertex
// lines follow that numbering.
std::string write_tree(const Map& t, const Orientation& o);
std::string write_mobile(const BlossomingMobile& t);
std::string write_mobile(const LabeledMobile& t);

// Raw record: each line "key values...".
struct Record {
  std::vector<std::pair<std::string, std::vector<std::string>>> lines;
  const std::vector<std::string>* get(const std::string& key) const;
  bool has(const std::string& key) const { return get(key) != nullptr; }
};
std::vector<Record> read_records(std::istream& in);
std::vector<Record> read_records_file(const std::string& path);

// Map (or tree when a stems line is present).
Map map_of(const Record& r);
std::optional<Orientation> orientation_of(const Record& r);
std::vector<Color> spins_of(const Record& r);
BlossomingMobile blossoming_mobile_of(const Record& r);
LabeledMobile labeled_mobile_of(const Record& r);

}  // namespace bmaps
