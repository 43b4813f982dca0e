#include "rotsync/io.hpp"

#include <Eigen/Dense>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace rotsync {

namespace {

std::string FormatMatrix(const Eigen::Matrix3d& m) {
  char buf[32];
  std::string out;
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      std::snprintf(buf, sizeof(buf), " %.16e", m(r, c));
      out += buf;
    }
  }
  return out;
}

bool BlankLine(const std::string& line) {
  return line.find_first_not_of(" \t\r\n") == std::string::npos;
}

Rotation ParseRotation(std::istringstream& stream, const std::string& path, int lineno) {
  Eigen::Matrix3d m;
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      if (!(stream >> m(r, c))) {
        throw FileFormatError(path, lineno, "expected 9 rotation entries");
      }
    }
  }
  std::string trailing;
  if (stream >> trailing) {
    throw FileFormatError(path, lineno, "unexpected trailing token '" + trailing + "'");
  }
  if (!m.allFinite()) throw FileFormatError(path, lineno, "non-finite rotation entry");
  if (m.determinant() < 0.0) {
    throw FileFormatError(path, lineno, "matrix has negative determinant, not in SO(3)");
  }
  if (!so3::IsRotation(m, 1e-6)) {
    throw FileFormatError(path, lineno, "matrix is not orthonormal within 1e-6");
  }
  // 17 significant digits round-trip doubles exactly; only drifted inputs
  // get re-projected.
  return so3::IsRotation(m, 1e-9) ? Rotation(m) : so3::ProjectToSO3(m);
}

std::ofstream OpenForWrite(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  return out;
}

std::ifstream OpenForRead(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path + " for reading");
  return in;
}

}  // namespace

void WriteGraph(const std::string& path, const ViewGraph& graph) {
  std::ofstream out = OpenForWrite(path);
  out << "rotsync-graph v1 n=" << graph.NumNodes() << " m=" << graph.NumEdges() << "\n";
  for (const auto& edge : graph.Edges()) {
    out << edge.i << " " << edge.j << FormatMatrix(edge.rot) << "\n";
  }
  if (!out) throw std::runtime_error("write failed: " + path);
}

std::unique_ptr<ViewGraph> ReadGraph(const std::string& path) {
  std::ifstream in = OpenForRead(path);
  std::string line;
  int lineno = 1;
  if (!std::getline(in, line)) throw FileFormatError(path, 1, "missing header");
  int n = -1, m = -1;
  if (std::sscanf(line.c_str(), "rotsync-graph v1 n=%d m=%d", &n, &m) != 2 || n < 1 ||
      m < 0) {
    throw FileFormatError(path, 1, "bad header, expected 'rotsync-graph v1 n=<n> m=<m>'");
  }
  auto graph = std::make_unique<ViewGraph>(n);
  int seen = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (BlankLine(line)) continue;
    std::istringstream stream(line);
    int i, j;
    if (!(stream >> i >> j)) throw FileFormatError(path, lineno, "expected 'i j ...'");
    if (i < 0 || j < 0 || i >= n || j >= n || i >= j) {
      throw FileFormatError(path, lineno, "edge endpoints must satisfy 0 <= i < j < n");
    }
    const Rotation rot = ParseRotation(stream, path, lineno);
    try {
      graph->AddEdge(i, j, rot);
    } catch (const std::invalid_argument& err) {
      throw FileFormatError(path, lineno, err.what());
    }
    ++seen;
  }
  if (seen != m) {
    throw FileFormatError(path, lineno,
                          "edge count mismatch: header says " + std::to_string(m) +
                              ", found " + std::to_string(seen));
  }
  return graph;
}

void WriteRotations(const std::string& path, const std::vector<Rotation>& rotations) {
  std::ofstream out = OpenForWrite(path);
  out << "rotsync-rots v1 n=" << rotations.size() << "\n";
  for (size_t i = 0; i < rotations.size(); ++i) {
    out << i << FormatMatrix(rotations[i]) << "\n";
  }
  if (!out) throw std::runtime_error("write failed: " + path);
}

std::vector<Rotation> ReadRotations(const std::string& path) {
  std::ifstream in = OpenForRead(path);
  std::string line;
  int lineno = 1;
  if (!std::getline(in, line)) throw FileFormatError(path, 1, "missing header");
  int n = -1;
  if (std::sscanf(line.c_str(), "rotsync-rots v1 n=%d", &n) != 1 || n < 1) {
    throw FileFormatError(path, 1, "bad header, expected 'rotsync-rots v1 n=<n>'");
  }
  std::vector<Rotation> rotations(n);
  std::vector<char> present(n, 0);
  while (std::getline(in, line)) {
    ++lineno;
    if (BlankLine(line)) continue;
    std::istringstream stream(line);
    int i;
    if (!(stream >> i)) throw FileFormatError(path, lineno, "expected node index");
    if (i < 0 || i >= n) throw FileFormatError(path, lineno, "node index out of range");
    if (present[i]) throw FileFormatError(path, lineno, "duplicate node index");
    rotations[i] = ParseRotation(stream, path, lineno);
    present[i] = 1;
  }
  for (int i = 0; i < n; ++i) {
    if (!present[i]) {
      throw FileFormatError(path, lineno, "missing node index " + std::to_string(i));
    }
  }
  return rotations;
}

}  // namespace rotsync
