#include "affchar/macdonald.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace affchar {

QSeries int_to_qseries(const IntSeries& a, int trunc) {
  QSeries s(trunc);
  for (const auto& [e, c] : a)
    if (e <= trunc) s.add_term(e, Rat(c));
  return s;
}

IntSeries qseries_to_int_checked(const QSeries& a, const char* what) {
  IntSeries out;
  out.reserve(a.terms().size());
  for (const auto& [e, c] : a.terms()) {
    AFF_ASSERT(is_integer(c), std::string{"non-integer coefficient in "} + what);
    AFF_ASSERT(c.get_num().fits_slong_p(), std::string{"coefficient overflow in "} + what);
    out.emplace_back(e, static_cast<Int>(c.get_num().get_si()));
  }
  return out;
}

void addmul_int(QSeries& acc, const IntSeries& a, const QSeries& b) {
  if (a.empty() || b.is_zero()) return;
  QSeries bi(acc.trunc());
  for (const auto& [eb, cb] : b.terms())
    for (const auto& [ea, ca] : a) {
      if (ea + eb > acc.trunc()) break;
      bi.add_term(ea + eb, cb * static_cast<long>(ca));
    }
  acc += bi;
}

void int_add_scaled(IntSeries& acc, const IntSeries& a, Int scalar, int shift) {
  if (scalar == 0 || a.empty()) return;
  IntSeries merged;
  merged.reserve(acc.size() + a.size());
  size_t i = 0, j = 0;
  while (i < acc.size() || j < a.size()) {
    int32_t ea = i < acc.size() ? acc[i].first : INT32_MAX;
    int32_t eb = j < a.size() ? static_cast<int32_t>(a[j].first + shift) : INT32_MAX;
    if (ea < eb)
      merged.push_back(acc[i++]);
    else if (eb < ea) {
      merged.emplace_back(eb, scalar * a[j].second);
      ++j;
    } else {
      Int c = acc[i].second + scalar * a[j].second;
      if (c != 0) merged.emplace_back(ea, c);
      ++i, ++j;
    }
  }
  acc = std::move(merged);
}

int MacdonaldBasis::index_of(const FiniteWeight& w) const {
  auto it = index.find(w);
  AFF_REQUIRE(it != index.end(), "weight not in the basis region: " + w.str());
  return it->second;
}

CharElem MacdonaldBasis::poly_by_index(int i) const {
  CharElem f(*type_, trunc_);
  for (const auto& [j, coef] : mcoord[static_cast<size_t>(i)]) {
    QSeries s = int_to_qseries(coef, trunc_);
    for (const auto& w : orbit_cached(*type_, order[static_cast<size_t>(j)])) f.add(w, s);
  }
  f.set_symmetric_hint(true);
  return f;
}

CharElem MacdonaldBasis::poly(const FiniteWeight& w) const { return poly_by_index(index_of(w)); }

const QSeries& MacdonaldBasis::gs_norm(const FiniteWeight& w) const {
  return norms_gs[static_cast<size_t>(index_of(w))];
}

const QSeries& MacdonaldBasis::cf_norm(const FiniteWeight& w) const {
  return norms_cf[static_cast<size_t>(index_of(w))];
}

QSeries norm_closed_form(const AffineType& T, const FiniteWeight& lambda_dom, int trunc) {
  AFF_REQUIRE(is_dominant(lambda_dom), "norm_closed_form needs a dominant weight");
  FiniteWeight lam = w_circ(T, lambda_dom);  // the anti-dominant indexing weight
  QSeries prod = QSeries::one(trunc);
  for (int i = 1; i <= T.n; ++i) {
    Int e = -lam.c[i - 1];
    Int base = (i < T.n) ? T.a0 * T.r_node(i) : T.r_node(T.n);
    for (Int j = 0; j < e; ++j) {
      QSeries f = QSeries::one(trunc);
      Int exp = (j + 1) * base;
      if (exp <= trunc) f.add_term(static_cast<int>(exp), -1);
      prod = prod * f;
    }
  }
  return prod;
}

namespace {

// scaled integer root coordinates for fast dominance tests
struct DomGrid {
  Int denom = 1;        // common denominator of all coordinates
  Int grid = 1;         // denominator of the Qbar grid (2 for A_{2n}^(2))
  std::vector<std::vector<Int>> rc;  // per node, scaled by denom

  bool leq(size_t lo, size_t hi) const {
    Int step = denom / grid;
    const auto& a = rc[lo];
    const auto& b = rc[hi];
    for (size_t i = 0; i < a.size(); ++i) {
      Int d = b[i] - a[i];
      if (d < 0 || d % step != 0) return false;
    }
    return true;
  }
};

DomGrid make_grid(const AffineType& T, const std::vector<FiniteWeight>& nodes) {
  DomGrid g;
  g.grid = T.is_a2n2() ? 2 : 1;
  Int denom = 1;
  for (int i = 0; i < T.n; ++i)
    for (int j = 0; j < T.n; ++j) {
      Int d = static_cast<Int>(T.inv_cartan[i][j].get_den().get_si());
      denom = std::lcm(denom, d);
    }
  denom = std::lcm(denom, g.grid);
  g.denom = denom;
  g.rc.reserve(nodes.size());
  for (const auto& w : nodes) {
    std::vector<Int> v(T.n, 0);
    auto rcw = root_coords(T, w);
    for (int i = 0; i < T.n; ++i) v[i] = to_int(rcw[i] * denom);
    g.rc.push_back(std::move(v));
  }
  return g;
}

}  // namespace

MacdonaldBasis macdonald_basis_set(const std::vector<FiniteWeight>& targets, const KernelSet& K) {
  const AffineType& T = K.T();
  const int N = K.trunc;

  std::set<FiniteWeight> node_set;
  for (const auto& t : targets) {
    AFF_REQUIRE(is_dominant(t), "macdonald_basis needs dominant weights");
    for (const auto& w : dominants_below(T, t)) node_set.insert(w);
  }

  MacdonaldBasis B;
  B.type_ = &T;
  B.kernel_ = &K;
  B.trunc_ = N;
  B.order.assign(node_set.begin(), node_set.end());
  std::sort(B.order.begin(), B.order.end(), [&](const FiniteWeight& a, const FiniteWeight& b) {
    Rat ha = root_height(T, a), hb = root_height(T, b);
    if (ha != hb) return ha < hb;
    return a < b;
  });
  const size_t M = B.order.size();
  for (size_t i = 0; i < M; ++i) B.index.emplace(B.order[i], static_cast<int>(i));

  DomGrid grid = make_grid(T, B.order);
  B.below.resize(M);
  for (size_t i = 0; i < M; ++i)
    for (size_t j = 0; j < i; ++j)
      if (grid.leq(j, i)) B.below[i].push_back(static_cast<int>(j));
  B.ht_denom = grid.denom;
  B.ht_scaled.resize(M, 0);
  for (size_t i = 0; i < M; ++i)
    for (Int v : grid.rc[i]) B.ht_scaled[i] += v;

  B.mcoord.resize(M);
  B.norms_gs.resize(M);
  B.norms_cf.resize(M);
  B.norms_gs_inv.resize(M);

  for (size_t i = 0; i < M; ++i) {
    const FiniteWeight& mu = B.order[i];
    // per-step pairing values g[rho] = [m_mu m_{rho*} Delta]
    std::vector<std::optional<QSeries>> g(i + 1);
    auto gval = [&](int rho) -> const QSeries& {
      auto& slot = g[static_cast<size_t>(rho)];
      if (!slot)
        slot = ct_pair(K, mu, iota_weight(T, B.order[static_cast<size_t>(rho)]));
      return *slot;
    };

    // x = m-coordinates of P(mu), kept rational during elimination
    std::vector<std::optional<QSeries>> x(i + 1);
    x[i] = QSeries::one(N);
    for (int nu : B.below[i]) {
      // <m_mu, P(nu)>_q
      QSeries pairing(N);
      for (const auto& [rho, coef] : B.mcoord[static_cast<size_t>(nu)])
        addmul_int(pairing, coef, gval(rho));
      if (pairing.is_zero()) continue;
      QSeries c = pairing * B.norms_gs_inv[static_cast<size_t>(nu)];
      c = c.truncated(N);
      for (const auto& [rho, coef] : B.mcoord[static_cast<size_t>(nu)]) {
        auto& slot = x[static_cast<size_t>(rho)];
        if (!slot) slot = QSeries::zero(N);
        QSeries delta(N);
        addmul_int(delta, coef, c);
        *slot -= delta;
      }
    }

    // store integral coordinates; positivity is a tested invariant elsewhere
    auto& row = B.mcoord[i];
    for (size_t j = 0; j <= i; ++j) {
      if (!x[j] || x[j]->is_zero()) continue;
      row.emplace_back(static_cast<int>(j),
                       qseries_to_int_checked(*x[j], "Macdonald m-coordinates"));
    }

    // ||P||^2 = <m_mu, P(mu)>_q by orthogonality to the earlier columns
    QSeries norm(N);
    for (const auto& [rho, coef] : row) addmul_int(norm, coef, gval(rho));
    B.norms_gs[i] = norm;
    B.norms_cf[i] = norm_closed_form(T, mu, N);
    if (norm.is_zero() || norm.min_exp() != 0)
      throw std::invalid_argument{
          "truncation too small to invert the Gram-Schmidt norm at weight " + mu.str()};
    B.norms_gs_inv[i] = qs_invert(norm).truncated(N);
  }
  return B;
}

MacdonaldBasis macdonald_basis(const FiniteWeight& target, const KernelSet& K) {
  return macdonald_basis_set({target}, K);
}

}  // namespace affchar
