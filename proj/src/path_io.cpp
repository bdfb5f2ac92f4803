#include <cctype>
#include <charconv>
#include <sstream>

#include "pathsep/error.hpp"
#include "pathsep/verify.hpp"

namespace pathsep {

PathSystem parse_path_system(std::string_view text, const Graph& host) {
  PathSystem fs;
  int line_no = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    Path p;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      std::size_t j = i;
      while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
      if (j > i) {
        int label = 0;
        auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + j, label);
        if (ec != std::errc{} || ptr != line.data() + j || label < 0) {
          throw Error(ErrorCode::BadToken, "line " + std::to_string(line_no) + ": '" + std::string(line.substr(i, j - i)) + "'");
        }
        auto v = host.find_label(label);
        if (!v) throw Error(ErrorCode::UnknownVertex, "line " + std::to_string(line_no) + ": " + std::to_string(label));
        p.vertices.push_back(*v);
      }
      i = j;
    }
    if (p.empty()) continue;
    if (!host.is_path(p)) throw Error(ErrorCode::BadToken, "line " + std::to_string(line_no) + ": not a path in the host");
    fs.paths.push_back(std::move(p));
  }
  return fs;
}

std::string write_path_system(const Graph& host, const PathSystem& fs) {
  std::ostringstream out;
  for (const Path& p : fs.paths) {
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (i) out << ' ';
      out << host.label(p.vertices[i]);
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace pathsep
