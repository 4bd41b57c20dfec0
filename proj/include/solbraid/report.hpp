#pragma once

// Uniform command reports: the command name, a digest of the canonicalized
// inputs, then result fields in a fixed order.  The text and JSON renderings
// carry exactly the same keys and values; values are strings in both so the
// two formats never drift.  The digest is computed over canonical re-emitted
// input text, so it is independent of file paths, whitespace, and comments.

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

namespace solbraid {

/// FNV-1a, 64-bit, lowercase hex.
inline std::string fnv1a64_hex(std::string_view s) {
  std::uint64_t h = 14695981039346656037ULL;
  for (const char ch : s) {
    h ^= static_cast<unsigned char>(ch);
    h *= 1099511628211ULL;
  }
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = digits[h & 0xf];
    h >>= 4;
  }
  return out;
}

class Report {
 public:
  Report(std::string command, std::string_view canonical_inputs)
      : command_(std::move(command)), digest_(fnv1a64_hex(canonical_inputs)) {}

  void add(std::string key, std::string value) {
    fields_.emplace_back(std::move(key), std::move(value));
  }

  std::string to_text() const {
    std::string out = "command: " + command_ + "\n";
    out += "inputs: " + digest_ + "\n";
    for (const auto& [k, v] : fields_) out += k + ": " + v + "\n";
    return out;
  }

  std::string to_json() const {
    nlohmann::ordered_json j;
    j["command"] = command_;
    j["inputs"] = digest_;
    for (const auto& [k, v] : fields_) j[k] = v;
    return j.dump(2) + "\n";
  }

 private:
  std::string command_;
  std::string digest_;
  std::vector<std::pair<std::string, std::string>> fields_;
};

}  // namespace solbraid
