#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "omega6/lattice.hpp"

namespace helpers {

inline bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

// Shorthand literal builders for small test matrices and vectors.
inline omega6::IntMatrix mat(std::initializer_list<std::initializer_list<long long>> rows) {
  std::vector<std::vector<omega6::Int>> converted;
  for (const auto& row : rows) converted.emplace_back(row.begin(), row.end());
  return omega6::IntMatrix::from_rows(converted);
}

inline std::vector<omega6::Int> vec(std::initializer_list<long long> entries) {
  return std::vector<omega6::Int>(entries.begin(), entries.end());
}

inline omega6::IntMatrix identity(int n) {
  omega6::IntMatrix m(n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

inline omega6::IntMatrix diag(std::initializer_list<long long> entries) {
  omega6::IntMatrix m(static_cast<int>(entries.size()));
  int i = 0;
  for (long long e : entries) {
    m(i, i) = e;
    ++i;
  }
  return m;
}

}  // namespace helpers
