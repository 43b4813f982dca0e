#pragma once

#include <iosfwd>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "rotsync/view_graph.hpp"

namespace rotsync {

// File-format violation with the offending line number.
class FileFormatError : public std::runtime_error {
 public:
  FileFormatError(const std::string& path, int line, const std::string& what)
      : std::runtime_error(path + ":" + std::to_string(line) + ": " + what),
        line_(line) {}
  int Line() const { return line_; }

 private:
  int line_;
};

// Graph files: header "rotsync-graph v1 n=<n> m=<m>", then m lines
// "i j r11 r12 r13 r21 r22 r23 r31 r32 r33" (0-based, i < j, row-major,
// 17 significant digits). Rotations are validated on read: orthonormality
// within 1e-6 is re-projected, anything worse (or det < 0) is rejected.
void WriteGraph(const std::string& path, const ViewGraph& graph);
std::unique_ptr<ViewGraph> ReadGraph(const std::string& path);

// Rotation files: header "rotsync-rots v1 n=<n>", then n lines
// "i r11 ... r33". Out-of-order indices are accepted and sorted; missing
// or duplicate indices are errors.
void WriteRotations(const std::string& path, const std::vector<Rotation>& rotations);
std::vector<Rotation> ReadRotations(const std::string& path);

}  // namespace rotsync
