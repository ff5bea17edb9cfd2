#include "rne/environment.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace rne {

namespace {

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::string cur;
  for (char c : text) {
    if (c == '\n') {
      if (!cur.empty() && cur.back() == '\r') cur.pop_back();
      lines.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) lines.push_back(cur);
  return lines;
}

[[noreturn]] void fail(int line_no, const std::string& what) {
  throw ParseError("environment parse error at line " + std::to_string(line_no) +
                   ": " + what);
}

}  // namespace

VoxelMap load_environment(const std::string& text) {
  const auto lines = split_lines(text);
  if (lines.empty()) fail(1, "empty input, expected 'voxelworld' header");

  std::istringstream header(lines[0]);
  std::string magic;
  int nx = 0, ny = 0, nz = 0;
  double edge = 0.0;
  header >> magic >> nx >> ny >> nz >> edge;
  if (!header || magic != "voxelworld")
    fail(1, "malformed header, expected 'voxelworld <nx> <ny> <nz> <e_V>'");
  if (nx <= 0 || ny <= 0 || nz <= 0 || edge <= 0.0)
    fail(1, "header dimensions and edge length must be positive");

  VoxelMap map({0.0, 0.0, 0.0}, edge, nx, ny, nz, VoxelState::Free);

  std::size_t ln = 1;  // index into lines; 0-based, so line_no = ln + 1
  for (int z = 0; z < nz; ++z) {
    if (z > 0) {
      if (ln >= lines.size() || lines[ln] != "--")
        fail(static_cast<int>(ln + 1), "expected layer separator '--'");
      ++ln;
    }
    for (int y = 0; y < ny; ++y, ++ln) {
      if (ln >= lines.size())
        fail(static_cast<int>(ln + 1), "unexpected end of input inside layer " +
                                           std::to_string(z));
      const std::string& row = lines[ln];
      if (static_cast<int>(row.size()) != nx)
        fail(static_cast<int>(ln + 1),
             "layer " + std::to_string(z) + " row has " +
                 std::to_string(row.size()) + " cells, expected " + std::to_string(nx));
      for (int x = 0; x < nx; ++x) {
        switch (row[x]) {
          case '.': break;  // map is pre-filled Free
          case '#': map.set({x, y, z}, VoxelState::Occupied); break;
          default:
            fail(static_cast<int>(ln + 1),
                 std::string("illegal cell character '") + row[x] + "'");
        }
      }
    }
  }
  for (; ln < lines.size(); ++ln) {
    if (!lines[ln].empty())
      fail(static_cast<int>(ln + 1), "trailing content after last layer");
  }
  return map;
}

VoxelMap load_environment_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open environment file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_environment(buf.str());
}

std::string dump_voxel_map(const VoxelMap& map) {
  std::ostringstream out;
  out << "voxelmap " << map.nx() << ' ' << map.ny() << ' ' << map.nz() << ' '
      << map.edge_length() << '\n';
  for (int z = 0; z < map.nz(); ++z) {
    if (z > 0) out << "--\n";
    for (int y = 0; y < map.ny(); ++y) {
      for (int x = 0; x < map.nx(); ++x) {
        switch (map.state(VoxelIndex{x, y, z})) {
          case VoxelState::Free: out << '.'; break;
          case VoxelState::Occupied: out << '#'; break;
          case VoxelState::Unknown: out << '?'; break;
        }
      }
      out << '\n';
    }
  }
  return out.str();
}

}  // namespace rne
