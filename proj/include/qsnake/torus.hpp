#pragma once

#include "qsnake/qlaurent.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace qsnake {

using Exponent = std::vector<int>;

/// Skew-symmetric integer m x m matrix. Construction validates skew-symmetry.
class SkewMatrix {
 public:
  SkewMatrix() = default;
  explicit SkewMatrix(std::vector<std::vector<int>> rows);

  int dim() const { return dim_; }
  int operator()(int i, int j) const { return entries_[static_cast<std::size_t>(i * dim_ + j)]; }
  std::vector<std::vector<int>> rows() const;

  /// a^T * this * b
  long long bilinear(const Exponent& a, const Exponent& b) const;

  friend bool operator==(const SkewMatrix&, const SkewMatrix&) = default;

 private:
  int dim_ = 0;
  std::vector<int> entries_;
};

using SkewMatrixPtr = std::shared_ptr<const SkewMatrix>;

/// Commutative Laurent polynomial in m variables with integer coefficients;
/// the target of the q -> 1 specialization.
class ClassicalLaurent {
 public:
  using TermMap = std::map<Exponent, BigInt>;

  ClassicalLaurent() = default;
  explicit ClassicalLaurent(int m) : m_(m) {}

  static ClassicalLaurent monomial(const Exponent& a, const BigInt& c = 1);

  int dim() const { return m_; }
  const TermMap& terms() const { return terms_; }
  void add_term(const Exponent& a, const BigInt& c);

  ClassicalLaurent& operator+=(const ClassicalLaurent& other);
  friend ClassicalLaurent operator+(ClassicalLaurent a, const ClassicalLaurent& b) { return a += b; }
  friend ClassicalLaurent operator-(ClassicalLaurent a, const ClassicalLaurent& b);
  friend ClassicalLaurent operator*(const ClassicalLaurent& a, const ClassicalLaurent& b);
  friend bool operator==(const ClassicalLaurent&, const ClassicalLaurent&) = default;

  std::string to_string() const;

 private:
  int m_ = 0;
  TermMap terms_;
};

/// Element of the based quantum torus over a fixed skew-symmetric matrix:
/// a finite sum of c_a M[a] with M[a] M[b] = q^{a^T L b / 2} M[a+b].
///
/// Terms are kept in a std::map keyed by the exponent vector, so iteration
/// follows the lexicographic monomial order (first coordinate most
/// significant). That order is the one used by left_quotient and by the JSON
/// serialization.
class TorusElement {
 public:
  using TermMap = std::map<Exponent, QLaurent>;

  TorusElement() = default;
  explicit TorusElement(SkewMatrixPtr lambda) : lambda_(std::move(lambda)) {}

  static TorusElement monomial(SkewMatrixPtr lambda, Exponent a, const QLaurent& c = 1);
  static TorusElement identity(SkewMatrixPtr lambda);

  const SkewMatrixPtr& lambda() const { return lambda_; }
  int dim() const { return lambda_ ? lambda_->dim() : 0; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  QLaurent coeff(const Exponent& a) const;

  void add_term(const Exponent& a, const QLaurent& c);

  TorusElement& operator+=(const TorusElement& other);
  TorusElement& operator-=(const TorusElement& other);
  friend TorusElement operator+(TorusElement a, const TorusElement& b) { return a += b; }
  friend TorusElement operator-(TorusElement a, const TorusElement& b) { return a -= b; }
  friend TorusElement operator*(const TorusElement& x, const TorusElement& y);
  friend TorusElement operator*(const QLaurent& c, const TorusElement& x);
  friend bool operator==(const TorusElement& x, const TorusElement& y);

  std::string to_string() const;

 private:
  SkewMatrixPtr lambda_;
  TermMap terms_;
};

/// Throws DimensionMismatch unless both elements live over equal matrices.
void require_same_lambda(const TorusElement& x, const TorusElement& y);

/// c * M[a]; throws DimensionMismatch if a has the wrong length.
TorusElement monomial(const SkewMatrixPtr& lambda, const Exponent& a, const QLaurent& c = 1);

/// Returns k with X Y = q^{k/2} Y X. For basis monomials k = 2 a^T L b.
/// Throws NotQCommuting when no such k exists.
int commutation_exponent(const TorusElement& x, const TorusElement& y);

/// Returns Q with D * Q = X.
///
/// The leading term of D in lexicographic order must have coefficient
/// +-q^{k/2} (UnsupportedDivisor otherwise). Candidate quotient exponents are
/// confined to the box obtained from per-coordinate degree bounds, which
/// makes the loop terminate; a remainder that cannot be cleared inside the box
/// raises InexactDivision.
TorusElement left_quotient(const TorusElement& d, const TorusElement& x);

/// Evaluate every coefficient at q = 1 and forget the twist.
ClassicalLaurent specialize_classical(const TorusElement& x);

}  // namespace qsnake
