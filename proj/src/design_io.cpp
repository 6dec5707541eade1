#include "rbd/design_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "rbd/errors.hpp"

namespace rbd {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\f\v");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\f\v");
  return s.substr(first, last - first + 1);
}

struct RawBlock {
  std::vector<int> members;  // 1-based as read
  std::size_t line;
};

}  // namespace

ResolvableDesign read_design(std::string_view text) {
  std::string label;
  bool seen_comment = false;
  std::vector<std::vector<RawBlock>> raw;
  std::vector<RawBlock> current;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const auto line = trim(text.substr(pos, end - pos));
    ++line_no;
    pos = end + 1;

    if (line.empty()) {
      if (!current.empty()) raw.push_back(std::move(current));
      current.clear();
      if (end == text.size()) break;
      continue;
    }
    if (line.front() == '#') {
      if (!seen_comment) {
        label = std::string(trim(line.substr(1)));
        seen_comment = true;
      }
      if (end == text.size()) break;
      continue;
    }

    RawBlock block{{}, line_no};
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
      if (i >= line.size()) break;
      std::size_t j = i;
      while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
      const auto token = line.substr(i, j - i);
      int value = 0;
      const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
      if (ec != std::errc{} || ptr != token.data() + token.size())
        throw ParseError(line_no, "malformed token '" + std::string(token) + "'");
      block.members.push_back(value);
      i = j;
    }
    current.push_back(std::move(block));
    if (end == text.size()) break;
  }
  if (!current.empty()) raw.push_back(std::move(current));
  if (raw.empty()) throw ParseError(0, "no replicates");

  const auto k = raw.front().front().members.size();
  const auto blocks_per_rep = raw.front().size();
  const int v = static_cast<int>(k * blocks_per_rep);

  std::vector<Replicate> replicates;
  replicates.reserve(raw.size());
  for (std::size_t ri = 0; ri < raw.size(); ++ri) {
    const auto& rep = raw[ri];
    if (rep.size() != blocks_per_rep)
      throw ParseError(rep.front().line, "replicate " + std::to_string(ri + 1) + " has " +
                                             std::to_string(rep.size()) + " blocks, expected " +
                                             std::to_string(blocks_per_rep));
    Replicate out;
    out.reserve(rep.size());
    for (const auto& block : rep) {
      if (block.members.size() != k)
        throw ParseError(block.line, "block has " + std::to_string(block.members.size()) +
                                         " varieties, expected " + std::to_string(k));
      Block b;
      b.reserve(k);
      for (int x : block.members) {
        if (x < 1 || x > v)
          throw ParseError(block.line, "variety " + std::to_string(x) + " outside 1.." +
                                           std::to_string(v));
        b.push_back(x - 1);
      }
      out.push_back(std::move(b));
    }
    replicates.push_back(std::move(out));
  }
  return ResolvableDesign(v, static_cast<int>(k), std::move(replicates), std::move(label));
}

std::string write_design(const ResolvableDesign& design) {
  std::ostringstream out;
  if (!design.label().empty()) out << "# " << design.label() << '\n';
  for (int ri = 0; ri < design.r(); ++ri) {
    if (ri > 0) out << '\n';
    for (const auto& block : design.replicate(static_cast<std::size_t>(ri))) {
      for (std::size_t j = 0; j < block.size(); ++j) {
        if (j) out << ' ';
        out << block[j] + 1;
      }
      out << '\n';
    }
  }
  return out.str();
}

ResolvableDesign read_design_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return read_design(buffer.str());
}

void write_design_file(const std::string& path, const ResolvableDesign& design) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << write_design(design);
}

}  // namespace rbd
