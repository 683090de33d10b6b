#include "qsnake/torus.hpp"

#include "qsnake/errors.hpp"

#include <algorithm>
#include <sstream>

namespace qsnake {

SkewMatrix::SkewMatrix(std::vector<std::vector<int>> rows) : dim_(static_cast<int>(rows.size())) {
  entries_.reserve(static_cast<std::size_t>(dim_ * dim_));
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != dim_) throw DimensionMismatch("SkewMatrix: matrix is not square");
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
  for (int i = 0; i < dim_; ++i) {
    for (int j = 0; j < dim_; ++j) {
      if ((*this)(i, j) != -(*this)(j, i)) {
        throw DomainError("SkewMatrix: entry (" + std::to_string(i) + "," + std::to_string(j) +
                          ") breaks skew-symmetry");
      }
    }
  }
}

std::vector<std::vector<int>> SkewMatrix::rows() const {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(dim_));
  for (int i = 0; i < dim_; ++i) {
    for (int j = 0; j < dim_; ++j) out[static_cast<std::size_t>(i)].push_back((*this)(i, j));
  }
  return out;
}

long long SkewMatrix::bilinear(const Exponent& a, const Exponent& b) const {
  long long s = 0;
  for (int i = 0; i < dim_; ++i) {
    if (a[static_cast<std::size_t>(i)] == 0) continue;
    long long row = 0;
    for (int j = 0; j < dim_; ++j) row += static_cast<long long>((*this)(i, j)) * b[static_cast<std::size_t>(j)];
    s += a[static_cast<std::size_t>(i)] * row;
  }
  return s;
}

// ---------------------------------------------------------------------------
// ClassicalLaurent

ClassicalLaurent ClassicalLaurent::monomial(const Exponent& a, const BigInt& c) {
  ClassicalLaurent out(static_cast<int>(a.size()));
  out.add_term(a, c);
  return out;
}

void ClassicalLaurent::add_term(const Exponent& a, const BigInt& c) {
  if (c == 0) return;
  if (m_ == 0) m_ = static_cast<int>(a.size());
  auto [it, inserted] = terms_.try_emplace(a, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

ClassicalLaurent& ClassicalLaurent::operator+=(const ClassicalLaurent& other) {
  for (const auto& [a, c] : other.terms_) add_term(a, c);
  return *this;
}

ClassicalLaurent operator-(ClassicalLaurent a, const ClassicalLaurent& b) {
  for (const auto& [e, c] : b.terms_) a.add_term(e, -c);
  return a;
}

ClassicalLaurent operator*(const ClassicalLaurent& a, const ClassicalLaurent& b) {
  ClassicalLaurent out(std::max(a.m_, b.m_));
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Exponent s(ea);
      for (std::size_t i = 0; i < s.size(); ++i) s[i] += eb[i];
      out.add_term(s, ca * cb);
    }
  }
  return out;
}

std::string ClassicalLaurent::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [a, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c << "*z^(";
    for (std::size_t i = 0; i < a.size(); ++i) os << (i ? "," : "") << a[i];
    os << ")";
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// TorusElement

TorusElement TorusElement::monomial(SkewMatrixPtr lambda, Exponent a, const QLaurent& c) {
  if (!lambda || static_cast<int>(a.size()) != lambda->dim()) {
    throw DimensionMismatch("monomial: exponent length does not match the matrix dimension");
  }
  TorusElement out(std::move(lambda));
  out.add_term(a, c);
  return out;
}

TorusElement TorusElement::identity(SkewMatrixPtr lambda) {
  Exponent zero(static_cast<std::size_t>(lambda->dim()), 0);
  return monomial(std::move(lambda), std::move(zero));
}

QLaurent TorusElement::coeff(const Exponent& a) const {
  auto it = terms_.find(a);
  return it == terms_.end() ? QLaurent() : it->second;
}

void TorusElement::add_term(const Exponent& a, const QLaurent& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(a, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void require_same_lambda(const TorusElement& x, const TorusElement& y) {
  if (x.lambda() == y.lambda()) return;
  if (!x.lambda() || !y.lambda() || !(*x.lambda() == *y.lambda())) {
    throw DimensionMismatch("torus elements live over different quasi-commutation matrices");
  }
}

TorusElement& TorusElement::operator+=(const TorusElement& other) {
  if (!lambda_) lambda_ = other.lambda_;
  require_same_lambda(*this, other);
  for (const auto& [a, c] : other.terms_) add_term(a, c);
  return *this;
}

TorusElement& TorusElement::operator-=(const TorusElement& other) {
  if (!lambda_) lambda_ = other.lambda_;
  require_same_lambda(*this, other);
  for (const auto& [a, c] : other.terms_) add_term(a, -c);
  return *this;
}

TorusElement operator*(const TorusElement& x, const TorusElement& y) {
  require_same_lambda(x, y);
  const SkewMatrix& lam = *x.lambda_;
  const int m = lam.dim();
  // Precompute L*b for each right factor.
  std::vector<std::vector<long long>> lb;
  lb.reserve(y.terms_.size());
  for (const auto& [b, cb] : y.terms_) {
    std::vector<long long> v(static_cast<std::size_t>(m), 0);
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) v[static_cast<std::size_t>(i)] += static_cast<long long>(lam(i, j)) * b[static_cast<std::size_t>(j)];
    }
    lb.push_back(std::move(v));
  }
  TorusElement out(x.lambda_);
  Exponent sum(static_cast<std::size_t>(m));
  for (const auto& [a, ca] : x.terms_) {
    std::size_t idx = 0;
    for (const auto& [b, cb] : y.terms_) {
      long long twist = 0;
      for (int i = 0; i < m; ++i) twist += a[static_cast<std::size_t>(i)] * lb[idx][static_cast<std::size_t>(i)];
      for (int i = 0; i < m; ++i) sum[static_cast<std::size_t>(i)] = a[static_cast<std::size_t>(i)] + b[static_cast<std::size_t>(i)];
      out.add_term(sum, (ca * cb).shifted(static_cast<int>(twist)));
      ++idx;
    }
  }
  return out;
}

TorusElement operator*(const QLaurent& c, const TorusElement& x) {
  TorusElement out(x.lambda_);
  if (c.is_zero()) return out;
  for (const auto& [a, cx] : x.terms_) out.add_term(a, c * cx);
  return out;
}

bool operator==(const TorusElement& x, const TorusElement& y) {
  if (x.terms_ != y.terms_) return false;
  if (x.lambda_ == y.lambda_) return true;
  if (!x.lambda_ || !y.lambda_) return x.terms_.empty();
  return *x.lambda_ == *y.lambda_;
}

std::string TorusElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [a, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    if (!(c == QLaurent(1))) os << "(" << c.to_string() << ")*";
    os << "M[";
    for (std::size_t i = 0; i < a.size(); ++i) os << (i ? "," : "") << a[i];
    os << "]";
  }
  return os.str();
}

TorusElement monomial(const SkewMatrixPtr& lambda, const Exponent& a, const QLaurent& c) {
  return TorusElement::monomial(lambda, a, c);
}

int commutation_exponent(const TorusElement& x, const TorusElement& y) {
  require_same_lambda(x, y);
  if (x.is_zero() || y.is_zero()) throw NotQCommuting("commutation_exponent: zero operand");
  const TorusElement xy = x * y;
  const TorusElement yx = y * x;
  const auto& [lead, c_yx] = *yx.terms().rbegin();
  const QLaurent c_xy = xy.coeff(lead);
  if (c_xy.is_zero() || c_xy.size() != c_yx.size()) {
    throw NotQCommuting("commutation_exponent: products have different supports");
  }
  const int k = c_xy.min_exponent() - c_yx.min_exponent();
  TorusElement shifted(yx.lambda());
  for (const auto& [a, c] : yx.terms()) shifted.add_term(a, c.shifted(k));
  if (!(shifted == xy)) throw NotQCommuting("commutation_exponent: elements do not q-commute");
  return k;
}

TorusElement left_quotient(const TorusElement& d, const TorusElement& x) {
  require_same_lambda(d, x);
  if (d.is_zero()) throw UnsupportedDivisor("left_quotient: zero divisor");
  const auto& [d_lead, d_coeff] = *d.terms().rbegin();
  const auto unit = d_coeff.as_unit();
  if (!unit) {
    throw UnsupportedDivisor("left_quotient: leading coefficient " + d_coeff.to_string() +
                             " is not a signed power of q^{1/2}");
  }
  const auto [d_shift, d_sign] = *unit;
  TorusElement quotient(d.lambda());
  if (x.is_zero()) return quotient;

  const std::size_t m = d_lead.size();
  // Degree in each single coordinate is additive under multiplication, so the
  // quotient's exponents are confined to [lo, hi] coordinatewise.
  auto bounds = [m](const TorusElement& e) {
    Exponent lo(m, 0), hi(m, 0);
    bool first = true;
    for (const auto& [a, c] : e.terms()) {
      for (std::size_t i = 0; i < m; ++i) {
        lo[i] = first ? a[i] : std::min(lo[i], a[i]);
        hi[i] = first ? a[i] : std::max(hi[i], a[i]);
      }
      first = false;
    }
    return std::pair{lo, hi};
  };
  const auto [d_lo, d_hi] = bounds(d);
  const auto [x_lo, x_hi] = bounds(x);
  Exponent q_lo(m), q_hi(m);
  for (std::size_t i = 0; i < m; ++i) {
    q_lo[i] = x_lo[i] - d_lo[i];
    q_hi[i] = x_hi[i] - d_hi[i];
    if (q_lo[i] > q_hi[i]) throw InexactDivision("left_quotient: degree bounds are inconsistent");
  }

  TorusElement remainder = x;
  Exponent e(m);
  while (!remainder.is_zero()) {
    const auto& [r_lead, r_coeff] = *remainder.terms().rbegin();
    for (std::size_t i = 0; i < m; ++i) {
      e[i] = r_lead[i] - d_lead[i];
      if (e[i] < q_lo[i] || e[i] > q_hi[i]) {
        throw InexactDivision("left_quotient: nonzero remainder " + remainder.to_string());
      }
    }
    // c_D q^{d^T L e / 2} t = c_R
    const long long twist = d.lambda()->bilinear(d_lead, e);
    QLaurent t = r_coeff.shifted(static_cast<int>(-d_shift - twist));
    if (d_sign < 0) t = -t;
    TorusElement step = TorusElement::monomial(d.lambda(), e, t);
    quotient += step;
    remainder -= d * step;
  }
  return quotient;
}

ClassicalLaurent specialize_classical(const TorusElement& x) {
  ClassicalLaurent out(x.dim());
  for (const auto& [a, c] : x.terms()) out.add_term(a, eval_at_one(c));
  return out;
}

}  // namespace qsnake
