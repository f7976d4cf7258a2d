#include "gentle/bq_io.hpp"

#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "gentle/errors.hpp"

namespace gentle {

namespace {

struct Token {
  std::string text;
  int column;  // 1-based
};

std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#') break;
    if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r' &&
           line[i] != '#') {
      ++i;
    }
    tokens.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return tokens;
}

}  // namespace

BoundQuiver read_bq(std::istream& in) {
  std::vector<VertexName> vertices;
  std::map<VertexName, bool> seen_vertices;
  std::vector<Arrow> arrows;
  std::map<ArrowName, std::pair<VertexName, VertexName>> seen_arrows;
  std::vector<std::vector<ArrowName>> relations;

  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::vector<Token> tokens = tokenize(line);
    if (tokens.empty()) continue;
    const Token& head = tokens[0];

    if (head.text == "vertex") {
      if (tokens.size() != 2) {
        throw ParseError("'vertex' takes exactly one name", line_no, head.column);
      }
      if (!seen_vertices.emplace(tokens[1].text, true).second) {
        throw ParseError("duplicate vertex '" + tokens[1].text + "'", line_no,
                         tokens[1].column);
      }
      vertices.push_back(tokens[1].text);
    } else if (head.text == "arrow") {
      if (tokens.size() != 4) {
        throw ParseError("'arrow' takes a name, a source and a target", line_no, head.column);
      }
      if (seen_arrows.contains(tokens[1].text)) {
        throw ParseError("duplicate arrow '" + tokens[1].text + "'", line_no,
                         tokens[1].column);
      }
      for (int k : {2, 3}) {
        if (!seen_vertices.contains(tokens[k].text)) {
          throw ParseError("unknown vertex '" + tokens[k].text + "'", line_no,
                           tokens[k].column);
        }
      }
      seen_arrows.emplace(tokens[1].text,
                          std::make_pair(tokens[2].text, tokens[3].text));
      arrows.push_back({tokens[1].text, tokens[2].text, tokens[3].text});
    } else if (head.text == "relation") {
      if (tokens.size() < 3) {
        throw ParseError("'relation' takes at least two arrows", line_no, head.column);
      }
      std::vector<ArrowName> names;
      for (std::size_t k = 1; k < tokens.size(); ++k) {
        auto it = seen_arrows.find(tokens[k].text);
        if (it == seen_arrows.end()) {
          throw ParseError("unknown arrow '" + tokens[k].text + "'", line_no,
                           tokens[k].column);
        }
        if (k >= 2) {
          const auto& left = seen_arrows.at(tokens[k - 1].text);
          if (left.first != it->second.second) {
            throw ParseError("'" + tokens[k - 1].text + "' does not compose over '" +
                                 tokens[k].text + "': source '" + left.first +
                                 "' differs from target '" + it->second.second + "'",
                             line_no, tokens[k].column);
          }
        }
        names.push_back(tokens[k].text);
      }
      relations.push_back(std::move(names));
    } else {
      throw ParseError("unknown directive '" + head.text + "'", line_no, head.column);
    }
  }

  Quiver q(std::move(vertices), std::move(arrows));
  std::vector<Path> paths;
  paths.reserve(relations.size());
  for (const auto& names : relations) paths.push_back(make_path(q, names));
  return BoundQuiver(std::move(q), std::move(paths));
}

BoundQuiver read_bq_string(const std::string& text) {
  std::istringstream in(text);
  return read_bq(in);
}

BoundQuiver read_bq_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "' for reading");
  return read_bq(in);
}

void write_bq(std::ostream& out, const BoundQuiver& bq) {
  out << "# gentle bound quiver\n";
  out << "# relation arrows are listed in composition order: each arrow's source\n";
  out << "# equals the next arrow's target, and \"relation a b\" forbids the walk\n";
  out << "# that traverses b and then a.\n";
  const Quiver& q = bq.quiver();
  for (const VertexName& v : q.vertices()) out << "vertex " << v << "\n";
  for (const Arrow& a : q.arrows()) {
    out << "arrow " << a.name << " " << a.source << " " << a.target << "\n";
  }
  for (const Path& rel : bq.relations()) {
    out << "relation";
    for (const ArrowName& an : rel.arrows()) out << " " << an;
    out << "\n";
  }
}

std::string write_bq_string(const BoundQuiver& bq) {
  std::ostringstream out;
  write_bq(out, bq);
  return out.str();
}

void write_bq_file(const std::string& path, const BoundQuiver& bq) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot open '" + path + "' for writing");
  write_bq(out, bq);
  if (!out.flush()) throw InputError("failed writing '" + path + "'");
}

}  // namespace gentle
