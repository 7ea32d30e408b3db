#pragma once

#include <algorithm>
#include <iostream>
#include <sstream>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace glnq::cli {

// Ordered key/value report, printed either as "key: value" or "key=value".
class Report {
 public:
  explicit Report(bool kv) : kv_(kv) {}

  template <typename T>
  void add(const std::string& key, const T& value) {
    if constexpr (std::is_convertible_v<T, std::string>) {
      entries_.emplace_back(key, std::string(value));
    } else {
      std::ostringstream s;
      s << value;
      entries_.emplace_back(key, s.str());
    }
  }

  void print(std::ostream& out) const {
    std::size_t width = 0;
    for (const auto& e : entries_) width = std::max(width, e.first.size());
    for (const auto& [k, v] : entries_) {
      if (kv_) {
        out << k << '=' << v << '\n';
      } else {
        out << k << ':' << std::string(width - k.size() + 1, ' ') << v << '\n';
      }
    }
  }

 private:
  bool kv_;
  std::vector<std::pair<std::string, std::string>> entries_;
};

template <typename Range>
std::string join(const Range& values, const char* sep = " ") {
  std::ostringstream s;
  bool first = true;
  for (const auto& v : values) {
    if (!first) s << sep;
    s << v;
    first = false;
  }
  return s.str();
}

}  // namespace glnq::cli
