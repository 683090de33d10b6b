#pragma once

#include <string>
#include <vector>

namespace qsnake {

/// Dense integer matrix, row major. Small sizes only (exchange matrices,
/// C/G-matrices), so no attempt at being clever.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows * cols), 0) {}
  explicit IntMatrix(const std::vector<std::vector<int>>& rows);

  static IntMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int& operator()(int i, int j) { return a_[static_cast<std::size_t>(i * cols_ + j)]; }
  int operator()(int i, int j) const { return a_[static_cast<std::size_t>(i * cols_ + j)]; }

  IntMatrix transpose() const;
  /// Rows [r0, r0+nr) and columns [c0, c0+nc).
  IntMatrix block(int r0, int c0, int nr, int nc) const;
  std::vector<int> column(int j) const;
  std::vector<std::vector<int>> to_rows() const;
  bool is_skew_symmetric() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  std::string to_string() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<int> a_;
};

}  // namespace qsnake
