#include "qsnake/qlaurent.hpp"

#include "qsnake/errors.hpp"

#include <sstream>

namespace qsnake {

QLaurent::QLaurent(long long constant) {
  if (constant != 0) terms_.emplace(0, BigInt(constant));
}

QLaurent::QLaurent(const BigInt& constant) {
  if (constant != 0) terms_.emplace(0, constant);
}

QLaurent QLaurent::monomial(int doubled_exp, const BigInt& coeff) {
  QLaurent p;
  p.add_term(doubled_exp, coeff);
  return p;
}

QLaurent QLaurent::from_terms(const std::vector<std::pair<int, BigInt>>& terms) {
  QLaurent p;
  for (const auto& [e, c] : terms) p.add_term(e, c);
  return p;
}

BigInt QLaurent::coeff(int doubled_exp) const {
  auto it = terms_.find(doubled_exp);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void QLaurent::add_term(int doubled_exp, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(doubled_exp, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

QLaurent QLaurent::shifted(int doubled) const {
  QLaurent out;
  for (const auto& [e, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), e + doubled, c);
  return out;
}

std::optional<std::pair<int, int>> QLaurent::as_unit() const {
  if (terms_.size() != 1) return std::nullopt;
  const auto& [e, c] = *terms_.begin();
  if (c == 1) return std::make_pair(e, 1);
  if (c == -1) return std::make_pair(e, -1);
  return std::nullopt;
}

bool QLaurent::has_half_integer_exponent() const {
  for (const auto& [e, c] : terms_) {
    if (e % 2 != 0) return true;
  }
  return false;
}

QLaurent& QLaurent::operator+=(const QLaurent& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

QLaurent& QLaurent::operator-=(const QLaurent& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

QLaurent& QLaurent::operator*=(const QLaurent& other) {
  *this = *this * other;
  return *this;
}

QLaurent operator*(const QLaurent& a, const QLaurent& b) {
  QLaurent out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
  }
  return out;
}

QLaurent operator-(const QLaurent& a) {
  QLaurent out;
  for (const auto& [e, c] : a.terms_) out.terms_.emplace_hint(out.terms_.end(), e, -c);
  return out;
}

std::string QLaurent::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << "*";
    os << "q";
    if (e % 2 == 0) {
      if (e != 2) os << "^" << e / 2;
    } else {
      os << "^(" << e << "/2)";
    }
  }
  return os.str();
}

QLaurent bar(const QLaurent& p) {
  QLaurent out;
  for (const auto& [e, c] : p.terms()) out += QLaurent::monomial(-e, c);
  return out;
}

BigInt eval_int(const QLaurent& p, long long v) {
  if (p.has_half_integer_exponent()) {
    throw EvaluationError("eval_int: polynomial has a half-integer exponent: " + p.to_string());
  }
  BigInt numer = 0;
  if (p.is_zero()) return numer;
  const int lo = std::min(0, p.min_exponent() / 2);
  if (lo < 0 && v == 0) throw DomainError("eval_int: negative power of q at q = 0");
  // Evaluate q^{-lo} p(q) as a polynomial, then divide exactly by v^{-lo}.
  for (const auto& [e, c] : p.terms()) {
    numer += c * boost::multiprecision::pow(BigInt(v), static_cast<unsigned>(e / 2 - lo));
  }
  if (lo == 0) return numer;
  BigInt denom = boost::multiprecision::pow(BigInt(v), static_cast<unsigned>(-lo));
  if (numer % denom != 0) throw EvaluationError("eval_int: value is not an integer");
  return numer / denom;
}

BigInt eval_at_one(const QLaurent& p) {
  BigInt s = 0;
  for (const auto& [e, c] : p.terms()) s += c;
  return s;
}

}  // namespace qsnake
