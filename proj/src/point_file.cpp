#include "capgeom/point_file.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "capgeom/error.hpp"

namespace capgeom {

namespace {
std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}
}  // namespace

PointFile read_point_file(std::istream& in) {
  PointFile out;
  std::string line;
  std::size_t lineno = 0;
  std::set<PointId> seen;
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    const std::string where = "line " + std::to_string(lineno);
    if (!out.space) {
      std::istringstream hs(line);
      std::string tag;
      long r = 0, q = 0;
      if (!(hs >> tag >> r >> q) || tag != "PG" || r < 1 || q < 2)
        throw Error(ErrorCode::ParseError, where + ": expected header 'PG r q'");
      std::string rest;
      if (hs >> rest) throw Error(ErrorCode::ParseError, where + ": trailing text after header");
      out.space = std::make_shared<const ProjectiveSpace>(Field::of_order(static_cast<std::uint32_t>(q)),
                                                         static_cast<int>(r));
      continue;
    }
    Vec v;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) {
      cell = trim(cell);
      std::size_t used = 0;
      unsigned long x = 0;
      try {
        x = std::stoul(cell, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (cell.empty() || used != cell.size())
        throw Error(ErrorCode::ParseError, where + ": bad coordinate '" + cell + "'");
      if (x >= out.space->q())
        throw Error(ErrorCode::FieldMismatch, where + ": " + cell + " is not an element of GF(" +
                                                  std::to_string(out.space->q()) + ")");
      v.push_back(static_cast<Elem>(x));
    }
    if (v.size() != out.space->coords())
      throw Error(ErrorCode::ParseError, where + ": expected " + std::to_string(out.space->coords()) +
                                             " coordinates");
    PointId id = out.space->id_of(v);
    if (!seen.insert(id).second) throw Error(ErrorCode::DuplicatePoints, where + ": repeated point");
    out.points.push_back(id);
  }
  if (!out.space) throw Error(ErrorCode::ParseError, "missing 'PG r q' header");
  return out;
}

PointFile read_point_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  return read_point_file(in);
}

void write_point_file(std::ostream& out, const ProjectiveSpace& space, std::span<const PointId> points) {
  out << "PG " << space.dim() << ' ' << space.q() << '\n';
  for (PointId id : points) {
    Vec v = space.point(id);
    for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
    out << '\n';
  }
}

}  // namespace capgeom
