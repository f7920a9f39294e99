#pragma once

#include <optional>
#include <string>
#include <vector>

namespace monocomb {

/// One parsed `key = value` line of a sectioned config file.
struct ConfigEntry {
  std::string section;  // empty before the first [section] header
  std::string key;
  std::string value;
  int line = 0;
};

/// Line-oriented key=value config with [section] headers and # comments.
/// Sections may repeat (the synthetic scene format relies on repeated
/// [layer] sections), so entries are kept in file order.
class KeyValueFile {
 public:
  static KeyValueFile parse_file(const std::string& path);
  static KeyValueFile parse_string(const std::string& text, const std::string& origin = "<string>");

  const std::vector<ConfigEntry>& entries() const { return entries_; }

  /// Last value of section/key, if present.
  std::optional<std::string> get(const std::string& section, const std::string& key) const;

  std::string get_or(const std::string& section, const std::string& key,
                     const std::string& fallback) const;
  double get_double(const std::string& section, const std::string& key, double fallback) const;
  int get_int(const std::string& section, const std::string& key, int fallback) const;
  bool get_bool(const std::string& section, const std::string& key, bool fallback) const;

  const std::string& origin() const { return origin_; }

 private:
  std::vector<ConfigEntry> entries_;
  std::string origin_;
};

/// Parse a whitespace-separated list of doubles; throws ConfigError with
/// context on malformed input.
std::vector<double> parse_double_list(const std::string& text, const std::string& context);

}  // namespace monocomb
