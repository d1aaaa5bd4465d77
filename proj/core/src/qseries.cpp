#include "affchar/qseries.hpp"

#include <algorithm>
#include <sstream>

namespace affchar {

void QSeries::clean() {
  t_.erase(std::remove_if(t_.begin(), t_.end(),
                          [&](const Term& t) { return t.second == 0 || t.first > trunc_; }),
           t_.end());
}

Rat QSeries::coeff(int e) const {
  auto it = std::lower_bound(t_.begin(), t_.end(), e,
                             [](const Term& t, int x) { return t.first < x; });
  if (it != t_.end() && it->first == e) return it->second;
  return Rat(0);
}

void QSeries::add_term(int e, const Rat& c) {
  if (c == 0 || e > trunc_) return;
  auto it = std::lower_bound(t_.begin(), t_.end(), e,
                             [](const Term& t, int x) { return t.first < x; });
  if (it != t_.end() && it->first == e) {
    it->second += c;
    if (it->second == 0) t_.erase(it);
  } else {
    t_.insert(it, {e, c});
  }
}

QSeries QSeries::truncated(int new_trunc) const {
  QSeries s(new_trunc);
  for (const auto& [e, c] : t_)
    if (e <= new_trunc) s.t_.emplace_back(e, c);
  return s;
}

QSeries& QSeries::operator+=(const QSeries& o) {
  trunc_ = std::min(trunc_, o.trunc_);
  std::vector<Term> merged;
  merged.reserve(t_.size() + o.t_.size());
  size_t i = 0, j = 0;
  while (i < t_.size() || j < o.t_.size()) {
    if (j == o.t_.size() || (i < t_.size() && t_[i].first < o.t_[j].first))
      merged.push_back(t_[i++]);
    else if (i == t_.size() || o.t_[j].first < t_[i].first)
      merged.push_back(o.t_[j++]);
    else {
      Rat c = t_[i].second + o.t_[j].second;
      if (c != 0) merged.emplace_back(t_[i].first, std::move(c));
      ++i, ++j;
    }
  }
  t_ = std::move(merged);
  clean();
  return *this;
}

QSeries& QSeries::operator-=(const QSeries& o) { return *this += -o; }

QSeries QSeries::operator-() const {
  QSeries s = *this;
  for (auto& [e, c] : s.t_) c = -c;
  return s;
}

QSeries QSeries::shifted(int k) const {
  QSeries s(trunc_ + k);
  s.t_.reserve(t_.size());
  for (const auto& [e, c] : t_) s.t_.emplace_back(e + k, c);
  return s;
}

QSeries QSeries::scaled(const Rat& c) const {
  QSeries s(trunc_);
  if (c == 0) return s;
  s.t_.reserve(t_.size());
  for (const auto& [e, v] : t_) s.t_.emplace_back(e, v * c);
  return s;
}

QSeries operator+(const QSeries& a, const QSeries& b) {
  QSeries s = a;
  s += b;
  return s;
}

QSeries operator-(const QSeries& a, const QSeries& b) {
  QSeries s = a;
  s -= b;
  return s;
}

QSeries operator*(const QSeries& a, const QSeries& b) {
  // trunc = min(a.trunc + b.min_exp, b.trunc + a.min_exp)
  QSeries s(std::min(a.trunc() + b.min_exp(), b.trunc() + a.min_exp()));
  addmul(s, a, b);
  return s;
}

void addmul(QSeries& acc, const QSeries& a, const QSeries& b) {
  if (a.is_zero() || b.is_zero()) return;
  int lo = a.min_exp() + b.min_exp();
  int hi = acc.trunc_;
  if (lo > hi) return;
  std::vector<Rat> dense(static_cast<size_t>(hi - lo + 1), Rat(0));
  for (const auto& [ea, ca] : a.t_) {
    if (ea + b.min_exp() > hi) break;
    for (const auto& [eb, cb] : b.t_) {
      int e = ea + eb;
      if (e > hi) break;
      dense[static_cast<size_t>(e - lo)] += ca * cb;
    }
  }
  QSeries prod(hi);
  for (int e = lo; e <= hi; ++e) {
    Rat& c = dense[static_cast<size_t>(e - lo)];
    if (c != 0) prod.t_.emplace_back(e, std::move(c));
  }
  acc += prod;
}

bool QSeries::equal_mod(const QSeries& o, int N) const {
  AFF_REQUIRE(trunc_ >= N && o.trunc_ >= N, "series not known to the requested order");
  size_t i = 0, j = 0;
  for (;;) {
    bool ei = (i >= t_.size() || t_[i].first > N);
    bool ej = (j >= o.t_.size() || o.t_[j].first > N);
    if (ei && ej) return true;
    if (ei != ej) return false;
    if (t_[i] != o.t_[j]) return false;
    ++i, ++j;
  }
}

bool QSeries::all_integer() const {
  for (const auto& [e, c] : t_)
    if (!is_integer(c)) return false;
  return true;
}

bool QSeries::all_nonnegative() const {
  for (const auto& [e, c] : t_)
    if (c < 0) return false;
  return true;
}

Rat QSeries::coefficient_sum() const {
  Rat s = 0;
  for (const auto& [e, c] : t_) s += c;
  return s;
}

std::string QSeries::str() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : t_) {
    if (!first) os << " + ";
    first = false;
    os << rat_to_string(c);
    if (e != 0) os << "*u^" << e;
  }
  return os.str();
}

QSeries qs_arith(const QSeries& a, const QSeries& b, QSeriesOp op) {
  switch (op) {
    case QSeriesOp::add:
      return a + b;
    case QSeriesOp::sub:
      return a - b;
    case QSeriesOp::mul:
      return a * b;
  }
  AFF_ASSERT(false, "unreachable");
}

QSeries qs_invert(const QSeries& a) {
  AFF_REQUIRE(!a.is_zero(), "cannot invert a series that vanishes up to truncation");
  const int m = a.min_exp();
  const Rat lead = a.terms().front().second;
  const int out_trunc = a.trunc() - 2 * m;
  // b_j solves sum_{i} a_i b_{k-i} = [k == 0]
  QSeries b(out_trunc);
  b.add_term(-m, 1 / lead);
  for (int j = -m + 1; j <= out_trunc; ++j) {
    Rat v = 0;
    for (const auto& [e, c] : a.terms()) {
      if (e == m) continue;
      int k = j + m - e;  // exponent of b entering the convolution at order j+m
      if (k < -m || k >= j) continue;
      v += c * b.coeff(k);
    }
    if (v != 0) b.add_term(j, -v / lead);
  }
  return b;
}

QSeries qs_product_pochhammer(Int step, int trunc) {
  AFF_REQUIRE(step >= 1, "pochhammer step must be positive");
  QSeries p = QSeries::one(trunc);
  for (Int j = 1; j * step <= trunc; ++j) {
    QSeries f = QSeries::one(trunc);
    f.add_term(static_cast<int>(j * step), -1);
    p = p * f;
  }
  return p;
}

}  // namespace affchar
