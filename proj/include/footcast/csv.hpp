#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace footcast {

/// Delimiter-separated text with a header row. Cells are trimmed of
/// surrounding whitespace; no quoting rules.
struct DelimitedTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::optional<std::size_t> column(std::string_view name) const;
};

/// Reads a delimited file. Throws DataError if the file is missing or has
/// no header row.
DelimitedTable read_delimited(const std::string& path, char delimiter);

std::string trim(std::string_view text);

}  // namespace footcast
