#ifndef CHEVLIE_TEXTIO_HPP
#define CHEVLIE_TEXTIO_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace chevlie {

/// One [name] ... [/name] block of the catalog/claims text format.
/// Keys are single-line "key = value" entries; '#' starts a comment.
struct Block {
  std::string name;
  int line = 0; // line of the opening tag, 1-based
  std::map<std::string, std::string> kv;

  bool has(const std::string& key) const { return kv.count(key) != 0; }
  const std::string& get(const std::string& key) const;
  std::string get_or(const std::string& key, const std::string& fallback) const;
};

/// Parses a whole file into blocks; throws ParseError with line numbers.
std::vector<Block> parse_blocks(const std::string& text, const std::string& filename);

std::string read_file(const std::string& path);

/// Hex SHA-256 of a byte string (for the data manifest).
std::string sha256_hex(const std::string& data);

} // namespace chevlie

#endif
