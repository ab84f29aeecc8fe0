#pragma once

// Line-oriented `key=value` reader shared by the key and signature formats.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "elgv/errors.hpp"
#include "elgv/natural.hpp"

namespace elgv::detail {

class FieldReader {
 public:
  explicit FieldReader(std::string_view text) {
    if (text.empty()) throw ParseError(1, "empty input");
    std::size_t start = 0;
    while (start < text.size()) {
      std::size_t end = text.find('\n', start);
      if (end == std::string_view::npos) end = text.size();
      lines_.push_back(text.substr(start, end - start));
      start = end + 1;
    }
    for (std::size_t i = 0; i < lines_.size(); ++i) {
      if (lines_[i].find('\r') != std::string_view::npos) {
        throw ParseError(i + 1, "carriage return not allowed");
      }
    }
  }

  std::size_t line() const { return next_; }

  void expect_header(std::string_view header) {
    if (next_ >= lines_.size() || lines_[next_] != header) {
      throw ParseError(next_ + 1, "expected header '" + std::string(header) + "'");
    }
    ++next_;
  }

  bool peek(std::string_view key) const {
    if (next_ >= lines_.size()) return false;
    const auto line = lines_[next_];
    return line.size() > key.size() && line.substr(0, key.size()) == key &&
           line[key.size()] == '=';
  }

  std::string_view expect(std::string_view key) {
    if (!peek(key)) {
      throw ParseError(next_ + 1, "expected field '" + std::string(key) + "='");
    }
    return lines_[next_++].substr(key.size() + 1);
  }

  Natural expect_hex(std::string_view key) {
    const std::size_t at = next_ + 1;
    const auto value = expect(key);
    try {
      return parse_hex(value);
    } catch (const ParseError& e) {
      throw ParseError(at, std::string(key) + ": " + e.what());
    }
  }

  unsigned expect_count(std::string_view key, unsigned lo, unsigned hi) {
    const std::size_t at = next_ + 1;
    const auto value = expect(key);
    if (value.empty() || value.size() > 9 || (value.size() > 1 && value[0] == '0')) {
      throw ParseError(at, std::string(key) + ": invalid decimal '" + std::string(value) + "'");
    }
    unsigned out = 0;
    for (char c : value) {
      if (c < '0' || c > '9') {
        throw ParseError(at, std::string(key) + ": invalid decimal '" + std::string(value) + "'");
      }
      out = out * 10 + static_cast<unsigned>(c - '0');
    }
    if (out < lo || out > hi) {
      throw ParseError(at, std::string(key) + " out of range [" + std::to_string(lo) + ", " +
                               std::to_string(hi) + "]");
    }
    return out;
  }

  void expect_end() const {
    if (next_ == lines_.size()) return;
    throw ParseError(next_ + 1, "unexpected trailing content");
  }

 private:
  std::vector<std::string_view> lines_;
  std::size_t next_ = 0;
};

}  // namespace elgv::detail
