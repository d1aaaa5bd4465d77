#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "affchar/rat.hpp"

namespace affchar {

// Truncated bounded-below Laurent series in u = q^(-1/a0) with exact
// rational coefficients.  Terms with u-exponent above trunc() are
// unrepresented and undefined; no zero coefficients are stored.
class QSeries {
 public:
  using Term = std::pair<int32_t, Rat>;

  QSeries() = default;
  explicit QSeries(int trunc) : trunc_(trunc) {}

  static QSeries zero(int trunc) { return QSeries(trunc); }
  static QSeries monomial(const Rat& c, int exp, int trunc) {
    QSeries s(trunc);
    if (c != 0 && exp <= trunc) s.t_.emplace_back(exp, c);
    return s;
  }
  static QSeries one(int trunc) { return monomial(1, 0, trunc); }

  int trunc() const { return trunc_; }
  bool is_zero() const { return t_.empty(); }
  // lower bound convention for the zero series: trunc + 1
  int min_exp() const { return t_.empty() ? trunc_ + 1 : t_.front().first; }
  int max_exp() const { return t_.empty() ? trunc_ : t_.back().first; }
  const std::vector<Term>& terms() const { return t_; }

  Rat coeff(int e) const;
  void add_term(int e, const Rat& c);

  // drops terms above the new truncation order
  QSeries truncated(int new_trunc) const;

  QSeries& operator+=(const QSeries& o);
  QSeries& operator-=(const QSeries& o);
  QSeries operator-() const;
  QSeries shifted(int k) const;           // multiply by u^k
  QSeries scaled(const Rat& c) const;     // multiply by a scalar

  friend QSeries operator+(const QSeries& a, const QSeries& b);
  friend QSeries operator-(const QSeries& a, const QSeries& b);
  friend QSeries operator*(const QSeries& a, const QSeries& b);

  bool operator==(const QSeries& o) const { return trunc_ == o.trunc_ && t_ == o.t_; }
  // agreement of all coefficients up to and including order N
  bool equal_mod(const QSeries& o, int N) const;

  bool all_integer() const;
  bool all_nonnegative() const;
  Rat coefficient_sum() const;
  std::string str() const;

 private:
  std::vector<Term> t_;
  int32_t trunc_ = 0;
  void clean();
  friend void addmul(QSeries& acc, const QSeries& a, const QSeries& b);
};

// acc += a*b, keeping acc's truncation no larger than the product rule allows
void addmul(QSeries& acc, const QSeries& a, const QSeries& b);

enum class QSeriesOp { add, sub, mul };
QSeries qs_arith(const QSeries& a, const QSeries& b, QSeriesOp op);

// multiplicative inverse; requires a nonzero lowest term
QSeries qs_invert(const QSeries& a);

// prod_{j>=1} (1 - u^(j*step)) truncated
QSeries qs_product_pochhammer(Int step, int trunc);

}  // namespace affchar
