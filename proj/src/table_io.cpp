#include "sepcong/table_io.hpp"

#include <fstream>
#include <sstream>

namespace sepcong {

namespace {

bool blank(const std::string& line) {
  return line.find_first_not_of(" \t\r") == std::string::npos;
}

}  // namespace

CommSemigroup read_table(std::istream& in) {
  std::string line;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      if (!blank(line)) return true;
    }
    return false;
  };
  if (!next_line()) throw Error(Errc::ParseError, "empty table file");
  std::size_t n = 0;
  {
    std::istringstream head(line);
    long long v = 0;
    std::string extra;
    if (!(head >> v) || v <= 0 || (head >> extra)) {
      throw Error(Errc::ParseError, "first line must be a positive order");
    }
    n = static_cast<std::size_t>(v);
  }
  std::vector<Elem> table;
  table.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!next_line()) throw Error(Errc::ParseError, "missing table row " + std::to_string(i));
    std::istringstream row(line);
    long long v = 0;
    std::size_t count = 0;
    while (row >> v) {
      if (v < 0 || static_cast<std::size_t>(v) >= n) {
        throw Error(Errc::IndexOutOfRange, "table entry out of range", {i, count});
      }
      table.push_back(static_cast<Elem>(v));
      ++count;
    }
    if (!row.eof()) throw Error(Errc::ParseError, "non-integer in row " + std::to_string(i));
    if (count != n) throw Error(Errc::ParseError, "row " + std::to_string(i) + " has wrong length");
  }
  std::vector<std::string> labels;
  if (next_line()) {
    const std::string key = "labels:";
    const auto start = line.find_first_not_of(" \t");
    if (line.compare(start, key.size(), key) != 0) {
      throw Error(Errc::ParseError, "unexpected trailing line: " + line);
    }
    std::istringstream ls(line.substr(start + key.size()));
    std::string l;
    while (ls >> l) labels.push_back(l);
    if (labels.size() != n) throw Error(Errc::ParseError, "label line needs n labels");
    if (next_line()) throw Error(Errc::ParseError, "unexpected trailing line: " + line);
  }
  return CommSemigroup::validate(n, std::move(table), std::move(labels));
}

CommSemigroup read_table_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::ParseError, "cannot open " + path);
  return read_table(in);
}

CommSemigroup parse_table(const std::string& text) {
  std::istringstream in(text);
  return read_table(in);
}

std::string format_table(const CommSemigroup& s) {
  std::ostringstream out;
  out << s.order() << "\n";
  for (Elem a = 0; a < s.order(); ++a) {
    for (Elem b = 0; b < s.order(); ++b) out << (b ? " " : "") << s.mul(a, b);
    out << "\n";
  }
  if (!s.labels().empty()) {
    out << "labels:";
    for (const auto& l : s.labels()) out << " " << l;
    out << "\n";
  }
  return out.str();
}

nlohmann::json partition_to_json(const Partition& p) {
  auto j = nlohmann::json::array();
  for (const auto& cls : p.classes()) j.push_back(cls);
  return j;
}

Partition partition_from_json(std::size_t n, const nlohmann::json& j) {
  if (!j.is_array()) throw Error(Errc::ParseError, "partition JSON must be an array");
  return Partition::from_classes(n, j.get<std::vector<std::vector<Elem>>>());
}

}  // namespace sepcong
