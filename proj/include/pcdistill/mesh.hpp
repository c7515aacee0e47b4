// OFF mesh reader for ModelNet-style CAD models.
//
// Handles the malformed headers that ship with ModelNet, where the counts
// are glued onto the magic ("OFF490 312 0" on a single line). Polygonal
// faces are fan-triangulated.
#pragma once

#include <array>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "pcdistill/types.hpp"

namespace pcdistill {

struct Mesh {
  Points vertices;
  std::vector<std::array<int, 3>> faces;
};

namespace detail {

inline bool parse_long(const std::string& tok, long& out) {
  const char* begin = tok.data();
  const char* end = begin + tok.size();
  auto res = std::from_chars(begin, end, out);
  return res.ec == std::errc() && res.ptr == end;
}

inline bool parse_real(const std::string& tok, double& out) {
  try {
    std::size_t used = 0;
    out = std::stod(tok, &used);
    return used == tok.size();
  } catch (...) {
    return false;
  }
}

[[noreturn]] inline void parse_fail(const std::string& name, int line, const std::string& what) {
  throw ParseError(name + ":" + std::to_string(line) + ": " + what);
}

}  // namespace detail

inline Mesh parse_off_stream(std::istream& in, const std::string& name = "<stream>") {
  int line_no = 0;
  std::string line;
  auto next_tokens = [&](std::vector<std::string>& toks) -> bool {
    toks.clear();
    while (std::getline(in, line)) {
      ++line_no;
      const auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      std::istringstream ls(line);
      std::string tok;
      while (ls >> tok) toks.push_back(tok);
      if (!toks.empty()) return true;
    }
    return false;
  };

  std::vector<std::string> toks;
  if (!next_tokens(toks)) detail::parse_fail(name, line_no, "empty file");
  if (toks[0].rfind("OFF", 0) != 0)
    detail::parse_fail(name, line_no, "missing OFF header, got '" + toks[0] + "'");

  // Counts may trail the magic on the same token ("OFF490"), follow on the
  // same line, or sit on the next line.
  std::vector<std::string> count_toks;
  const std::string glued = toks[0].substr(3);
  if (!glued.empty()) count_toks.push_back(glued);
  count_toks.insert(count_toks.end(), toks.begin() + 1, toks.end());
  const int header_line = line_no;
  if (count_toks.empty() && !next_tokens(count_toks))
    detail::parse_fail(name, line_no, "missing vertex/face counts");
  if (count_toks.size() < 2) detail::parse_fail(name, header_line, "incomplete header counts");

  long n_vertices = 0, n_faces = 0;
  if (!detail::parse_long(count_toks[0], n_vertices) || n_vertices < 0)
    detail::parse_fail(name, header_line, "bad vertex count '" + count_toks[0] + "'");
  if (!detail::parse_long(count_toks[1], n_faces) || n_faces < 0)
    detail::parse_fail(name, header_line, "bad face count '" + count_toks[1] + "'");

  Mesh mesh;
  mesh.vertices.resize(n_vertices, 3);
  for (long v = 0; v < n_vertices; ++v) {
    if (!next_tokens(toks)) detail::parse_fail(name, line_no, "unexpected end of file in vertices");
    if (toks.size() < 3) detail::parse_fail(name, line_no, "vertex needs 3 coordinates");
    for (int j = 0; j < 3; ++j) {
      double val = 0.0;
      if (!detail::parse_real(toks[static_cast<std::size_t>(j)], val))
        detail::parse_fail(name, line_no, "non-numeric vertex coordinate '" + toks[static_cast<std::size_t>(j)] + "'");
      mesh.vertices(v, j) = val;
    }
  }

  mesh.faces.reserve(static_cast<std::size_t>(n_faces));
  for (long f = 0; f < n_faces; ++f) {
    if (!next_tokens(toks)) detail::parse_fail(name, line_no, "unexpected end of file in faces");
    long arity = 0;
    if (!detail::parse_long(toks[0], arity) || arity < 3)
      detail::parse_fail(name, line_no, "bad face arity '" + toks[0] + "'");
    if (static_cast<long>(toks.size()) < arity + 1)
      detail::parse_fail(name, line_no, "face lists fewer indices than its arity");
    std::vector<int> idx(static_cast<std::size_t>(arity));
    for (long j = 0; j < arity; ++j) {
      long v = 0;
      if (!detail::parse_long(toks[static_cast<std::size_t>(j + 1)], v))
        detail::parse_fail(name, line_no, "non-numeric face index '" + toks[static_cast<std::size_t>(j + 1)] + "'");
      if (v < 0 || v >= n_vertices)
        detail::parse_fail(name, line_no, "face index " + std::to_string(v) + " out of range [0," +
                                              std::to_string(n_vertices) + ")");
      idx[static_cast<std::size_t>(j)] = static_cast<int>(v);
    }
    for (long j = 1; j + 1 < arity; ++j)
      mesh.faces.push_back({idx[0], idx[static_cast<std::size_t>(j)], idx[static_cast<std::size_t>(j + 1)]});
  }
  return mesh;
}

inline Mesh parse_mesh_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open mesh file: " + path.string());
  return parse_off_stream(in, path.string());
}

}  // namespace pcdistill
