#include "divclust/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace divclust {

namespace {

std::string_view trim(std::string_view s) {
  const auto blank = [](char c) { return c == ' ' || c == '\t' || c == '\r'; };
  while (!s.empty() && blank(s.front())) s.remove_prefix(1);
  while (!s.empty() && blank(s.back())) s.remove_suffix(1);
  return s;
}

double round_significant(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return std::strtod(buf, nullptr);
}

std::string short_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

}  // namespace

Table parse_csv_table(std::string_view text, bool has_header) {
  Table t;
  std::size_t line_no = 0;
  bool header_pending = has_header;
  while (!text.empty()) {
    const std::size_t eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_no;
    if (trim(line).empty()) continue;
    if (header_pending) {
      header_pending = false;
      continue;
    }

    std::size_t fields = 0;
    while (true) {
      const std::size_t comma = line.find(',');
      const std::string_view field = trim(line.substr(0, comma));
      double value = 0.0;
      const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
      if (field.empty() || ec != std::errc() || ptr != field.data() + field.size())
        throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": cannot parse '" +
                                               std::string(field) + "' as a number");
      t.values.push_back(value);
      ++fields;
      if (comma == std::string_view::npos) break;
      line.remove_prefix(comma + 1);
    }
    if (t.rows == 0) {
      t.cols = fields;
    } else if (fields != t.cols) {
      throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": expected " +
                                             std::to_string(t.cols) + " fields, got " +
                                             std::to_string(fields));
    }
    ++t.rows;
  }
  if (t.rows == 0) throw Error(ErrorCode::ParseError, "no data rows");
  return t;
}

DissimilarityMatrix parse_distance_csv(std::string_view text) {
  return validate_matrix(parse_csv_table(text, false));
}

DissimilarityMatrix parse_data_csv(std::string_view text, bool has_header) {
  return euclidean_from_data(parse_csv_table(text, has_header));
}

std::string tree_to_json(const Dendrogram& t) {
  nlohmann::ordered_json nodes = nlohmann::ordered_json::array();
  for (const auto& node : t.nodes()) {
    nlohmann::ordered_json j;
    j["id"] = node.id;
    j["members"] = std::vector<std::size_t>(node.members.begin(), node.members.end());
    j["level"] = round_significant(node.level);
    if (node.children) j["children"] = {(*node.children)[0], (*node.children)[1]};
    nodes.push_back(std::move(j));
  }
  nlohmann::ordered_json doc;
  doc["n"] = t.size();
  doc["nodes"] = std::move(nodes);
  return doc.dump(2) + "\n";
}

Dendrogram tree_from_json(std::string_view text) {
  try {
    const auto doc = nlohmann::json::parse(text);
    const auto n = doc.at("n").get<std::size_t>();
    std::vector<DendrogramNode> nodes;
    for (const auto& j : doc.at("nodes")) {
      DendrogramNode node{j.at("id").get<std::size_t>(),
                          ObjectSet(j.at("members").get<std::vector<std::size_t>>()),
                          j.at("level").get<double>(), std::nullopt};
      if (j.contains("children")) {
        const auto c = j.at("children").get<std::vector<std::size_t>>();
        if (c.size() != 2) throw Error(ErrorCode::MalformedTree, "malformed tree: children must be a pair");
        node.children = std::array{c[0], c[1]};
      }
      nodes.push_back(std::move(node));
    }
    return Dendrogram(n, std::move(nodes));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::MalformedTree, std::string("malformed tree JSON: ") + e.what());
  } catch (const Error& e) {
    if (e.code() == ErrorCode::MalformedTree) throw;
    throw Error(ErrorCode::MalformedTree, std::string("malformed tree: ") + e.what());
  }
}

std::string tree_to_newick(const Dendrogram& t) {
  std::string out;
  const auto emit = [&](const auto& self, const DendrogramNode& node, const DendrogramNode* parent) -> void {
    if (node.is_leaf()) {
      out += "o" + std::to_string(node.members.front() + 1);
    } else {
      out += '(';
      self(self, t.node((*node.children)[0]), &node);
      out += ',';
      self(self, t.node((*node.children)[1]), &node);
      out += ')';
    }
    if (parent != nullptr) out += ":" + short_number(parent->level - node.level);
  };
  emit(emit, t.root(), nullptr);
  return out + ";\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open '" + path + "' for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::IoError, "cannot open '" + path + "' for writing");
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw Error(ErrorCode::IoError, "failed writing '" + path + "'");
}

}  // namespace divclust
