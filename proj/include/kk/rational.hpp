#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kk/error.hpp"

namespace kk {

/// Exact scalar for the Lie side.  All laws there are asserted with exact
/// equality; no floating point anywhere.
using Rat = boost::rational<long long>;

using Vec = std::vector<Rat>;
using Mat = std::vector<Vec>;  // row-major

/// Parses "p/q" or "p".
inline Rat parse_rational(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rat(std::stoll(text));
    return Rat(std::stoll(text.substr(0, slash)),
               std::stoll(text.substr(slash + 1)));
  } catch (const boost::bad_rational&) {
    throw schema_error("zero denominator in rational '" + text + "'");
  } catch (const std::exception&) {
    throw schema_error("bad rational literal '" + text + "'");
  }
}

inline std::string format_rational(const Rat& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

inline Vec zero_vec(int n) { return Vec(static_cast<size_t>(n), Rat(0)); }

inline bool is_zero(const Vec& v) {
  for (const Rat& x : v)
    if (x != Rat(0)) return false;
  return true;
}

inline Vec add(const Vec& a, const Vec& b) {
  Vec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

inline Vec sub(const Vec& a, const Vec& b) {
  Vec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

inline Vec scale(const Rat& c, const Vec& v) {
  Vec out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = c * v[i];
  return out;
}

inline Mat zero_mat(int rows, int cols) {
  return Mat(static_cast<size_t>(rows), zero_vec(cols));
}

inline Mat identity_mat(int n) {
  Mat m = zero_mat(n, n);
  for (int i = 0; i < n; ++i) m[i][i] = Rat(1);
  return m;
}

inline Vec mat_vec(const Mat& m, const Vec& v) {
  Vec out(m.size(), Rat(0));
  for (size_t r = 0; r < m.size(); ++r)
    for (size_t c = 0; c < v.size(); ++c) out[r] += m[r][c] * v[c];
  return out;
}

inline Mat mat_mul(const Mat& a, const Mat& b) {
  Mat out = zero_mat(static_cast<int>(a.size()),
                     static_cast<int>(b.empty() ? 0 : b[0].size()));
  for (size_t r = 0; r < a.size(); ++r)
    for (size_t k = 0; k < b.size(); ++k)
      for (size_t c = 0; c < b[k].size(); ++c)
        out[r][c] += a[r][k] * b[k][c];
  return out;
}

/// Column col of m as a vector.
inline Vec column(const Mat& m, int col) {
  Vec out(m.size());
  for (size_t r = 0; r < m.size(); ++r) out[r] = m[r][col];
  return out;
}

inline int rank(Mat m) {
  const int rows = static_cast<int>(m.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(m[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pivot = -1;
    for (int i = r; i < rows; ++i)
      if (m[i][c] != Rat(0)) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    std::swap(m[r], m[pivot]);
    for (int i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == Rat(0)) continue;
      Rat factor = m[i][c] / m[r][c];
      for (int j = c; j < cols; ++j) m[i][j] -= factor * m[r][j];
    }
    ++r;
  }
  return r;
}

/// Exact solve of a·x = b; empty when inconsistent.  When a has full
/// column rank the solution is unique.
inline std::optional<Vec> solve(Mat a, Vec b) {
  const int rows = static_cast<int>(a.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(a[0].size());
  std::vector<int> pivot_col;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pivot = -1;
    for (int i = r; i < rows; ++i)
      if (a[i][c] != Rat(0)) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    std::swap(a[r], a[pivot]);
    std::swap(b[r], b[pivot]);
    for (int i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == Rat(0)) continue;
      Rat factor = a[i][c] / a[r][c];
      for (int j = c; j < cols; ++j) a[i][j] -= factor * a[r][j];
      b[i] -= factor * b[r];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (int i = r; i < rows; ++i)
    if (b[i] != Rat(0)) return std::nullopt;
  Vec x = zero_vec(cols);
  for (int i = 0; i < r; ++i) x[pivot_col[i]] = b[i] / a[i][pivot_col[i]];
  return x;
}

}  // namespace kk
