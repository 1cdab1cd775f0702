#pragma once

#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include "capgeom/caps.hpp"
#include "capgeom/projective.hpp"

namespace capgeom {

/// Point-set file: a header line `PG r q`, then one point per line as
/// comma-separated field elements in polynomial-basis encoding. Blank lines
/// and lines starting with '#' are ignored.
struct PointFile {
  std::shared_ptr<const ProjectiveSpace> space;
  std::vector<PointId> points;  // in file order, duplicates rejected

  PointSet set() const { return PointSet(*space, points); }
};

/// Throws ParseError, DuplicatePoints, ZeroVector, FieldMismatch.
PointFile read_point_file(std::istream& in);
PointFile read_point_file(const std::string& path);
void write_point_file(std::ostream& out, const ProjectiveSpace& space, std::span<const PointId> points);

}  // namespace capgeom
