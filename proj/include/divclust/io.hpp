#pragma once

#include <string>
#include <string_view>

#include "divclust/core.hpp"
#include "divclust/hierarchy.hpp"

namespace divclust {

/// Comma-separated reals, one row per line, optionally preceded by a header
/// line that is skipped. Throws ParseError on ragged rows or bad numbers.
Table parse_csv_table(std::string_view text, bool has_header = false);

/// n x n dissimilarities without header.
DissimilarityMatrix parse_distance_csv(std::string_view text);
/// Objects x variables; Euclidean distances between rows.
DissimilarityMatrix parse_data_csv(std::string_view text, bool has_header);

/// {"n": .., "nodes": [{"id", "members", "level", "children"?}]}, levels
/// rounded to 9 significant digits.
std::string tree_to_json(const Dendrogram& t);
/// Throws MalformedTree.
Dendrogram tree_from_json(std::string_view text);

/// Leaves "o<index+1>", branch length = parent level - child level.
std::string tree_to_newick(const Dendrogram& t);

/// Static dendrogram drawing; leaves evenly spaced in tree order, heights
/// proportional to levels.
std::string tree_to_svg(const Dendrogram& t);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace divclust
