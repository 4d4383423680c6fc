#include "footcast/csv.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "footcast/errors.hpp"

namespace footcast {

std::string trim(std::string_view text) {
  const auto* ws = " \t\r\n";
  auto begin = text.find_first_not_of(ws);
  if (begin == std::string_view::npos) return {};
  auto end = text.find_last_not_of(ws);
  return std::string(text.substr(begin, end - begin + 1));
}

std::optional<std::size_t> DelimitedTable::column(std::string_view name) const {
  auto it = std::find(header.begin(), header.end(), name);
  if (it == header.end()) return std::nullopt;
  return static_cast<std::size_t>(it - header.begin());
}

DelimitedTable read_delimited(const std::string& path, char delimiter) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  const std::string content = buffer.str();

  DelimitedTable table;
  std::size_t pos = 0;
  bool saw_header = false;
  while (pos <= content.size()) {
    std::size_t eol = content.find('\n', pos);
    std::string_view line(content.data() + pos,
                          (eol == std::string::npos ? content.size() : eol) - pos);
    pos = (eol == std::string::npos) ? content.size() + 1 : eol + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.find_first_not_of(" \t") == std::string_view::npos) continue;

    std::vector<std::string> cells;
    std::size_t start = 0;
    for (;;) {
      std::size_t sep = line.find(delimiter, start);
      cells.push_back(trim(line.substr(start, sep - start)));
      if (sep == std::string_view::npos) break;
      start = sep + 1;
    }
    if (!saw_header) {
      table.header = std::move(cells);
      saw_header = true;
    } else {
      table.rows.push_back(std::move(cells));
    }
  }
  if (!saw_header) throw DataError("no header row in file: " + path);
  return table;
}

}  // namespace footcast
