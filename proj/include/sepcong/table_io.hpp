#pragma once

// Text Cayley tables:
//
//   3
//   0 1 2
//   1 2 2
//   2 2 2
//   labels: 1 2 0
//
// Line 1 is the order n, then n rows (row i lists i*0 ... i*(n-1)), then an
// optional label line. Partitions serialize as JSON arrays of classes, classes
// by least member, members ascending.

#include <iosfwd>
#include <string>

#include "json.hpp"

#include "sepcong/semigroup.hpp"

namespace sepcong {

CommSemigroup read_table(std::istream& in);
CommSemigroup read_table_file(const std::string& path);
CommSemigroup parse_table(const std::string& text);
std::string format_table(const CommSemigroup& s);

nlohmann::json partition_to_json(const Partition& p);
Partition partition_from_json(std::size_t n, const nlohmann::json& j);

}  // namespace sepcong
