#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

namespace higman {

// (f, m, n, k, t): index of F, index of E in F, valency of E, neighbors
// of a point in S within one other F-class, and t = p_TS^T.
struct higmanian_params {
  std::int64_t f = 0;
  std::int64_t m = 0;
  std::int64_t n = 0;
  std::int64_t k = 0;
  std::int64_t t = 0;

  std::int64_t points() const { return f * m * n; }
  std::int64_t valency_s() const { return k * (f - 1); }
  std::int64_t valency_t() const { return (m * n - k) * (f - 1); }
  // f, m, n >= 2 and mn - k <= k <= mn.
  bool is_admissible() const;
  std::string str() const;

  friend bool operator==(const higmanian_params&, const higmanian_params&) = default;
};

std::ostream& operator<<(std::ostream& os, const higmanian_params& p);

}  // namespace higman
