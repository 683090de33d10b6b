#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qsnake {

using BigInt = boost::multiprecision::cpp_int;

/// Laurent polynomial in q^{1/2} with integer coefficients.
///
/// Exponents are stored doubled: the key 3 means q^{3/2}. Zero coefficients
/// are never stored, so the zero polynomial is the empty map and structural
/// equality is mathematical equality.
class QLaurent {
 public:
  using TermMap = std::map<int, BigInt>;

  QLaurent() = default;
  QLaurent(long long constant);  // NOLINT(google-explicit-constructor)
  explicit QLaurent(const BigInt& constant);

  /// c * q^{doubled_exp/2}
  static QLaurent monomial(int doubled_exp, const BigInt& coeff = 1);
  static QLaurent from_terms(const std::vector<std::pair<int, BigInt>>& terms);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  BigInt coeff(int doubled_exp) const;

  // Valid only for nonzero polynomials.
  int min_exponent() const { return terms_.begin()->first; }
  int max_exponent() const { return terms_.rbegin()->first; }

  /// Multiplication by q^{doubled/2}.
  QLaurent shifted(int doubled) const;

  /// If this is +-q^{k/2}, returns (k, sign).
  std::optional<std::pair<int, int>> as_unit() const;

  bool has_half_integer_exponent() const;

  QLaurent& operator+=(const QLaurent& other);
  QLaurent& operator-=(const QLaurent& other);
  QLaurent& operator*=(const QLaurent& other);

  friend QLaurent operator+(QLaurent a, const QLaurent& b) { return a += b; }
  friend QLaurent operator-(QLaurent a, const QLaurent& b) { return a -= b; }
  friend QLaurent operator*(const QLaurent& a, const QLaurent& b);
  friend QLaurent operator-(const QLaurent& a);
  friend bool operator==(const QLaurent& a, const QLaurent& b) = default;

  /// Human readable, e.g. "q^(-1/2) + 2 + q".
  std::string to_string() const;

 private:
  void add_term(int doubled_exp, const BigInt& c);

  TermMap terms_;
};

/// Ring involution q^{1/2} -> q^{-1/2}.
QLaurent bar(const QLaurent& p);

/// p(v) for integer v. Throws EvaluationError when a half-integer exponent is
/// present, and DomainError for v = 0 with a negative exponent.
BigInt eval_int(const QLaurent& p, long long v);

/// Sum of coefficients, i.e. the value at q^{1/2} = 1. Always defined.
BigInt eval_at_one(const QLaurent& p);

}  // namespace qsnake
