#include "affchar/affine_data.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>

namespace affchar {

std::string FiniteWeight::str() const {
  std::string out;
  for (int i = 0; i < n; ++i) {
    if (i) out += ',';
    out += std::to_string(c[i]);
  }
  return out;
}

std::string AffineWeight::str(Int a0) const {
  std::ostringstream os;
  os << finite.str() << ';' << level << ';' << delta_num << '/' << a0;
  return os.str();
}

Rat rat_from_string(const std::string& s) {
  AFF_REQUIRE(!s.empty(), "empty rational literal");
  try {
    Rat r{s};
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument{"bad rational literal: " + s};
  }
}

Int AffineType::r_node(int i) const {
  AFF_REQUIRE(i >= 1 && i <= n, "node out of range");
  Rat v = s[i];  // (alpha_i,alpha_i)/2
  if (v < 1) v = 1;
  return to_int(v);
}

namespace {

struct ParsedLabel {
  char letter;
  int number;
  int twist;
};

[[noreturn]] void parse_fail(const std::string& label, size_t pos, const std::string& what) {
  std::ostringstream os;
  os << "bad type label '" << label << "' at position " << pos << ": " << what;
  throw std::invalid_argument{os.str()};
}

ParsedLabel parse_label(const std::string& label) {
  size_t i = 0;
  if (label.empty()) parse_fail(label, 0, "empty label");
  char letter = label[0];
  if (letter < 'A' || letter > 'G') parse_fail(label, 0, "expected a letter A..G");
  ++i;
  size_t num_start = i;
  while (i < label.size() && isdigit(static_cast<unsigned char>(label[i]))) ++i;
  if (i == num_start) parse_fail(label, i, "expected a rank");
  int number = std::stoi(label.substr(num_start, i - num_start));
  if (i >= label.size() || label[i] != '^') parse_fail(label, i, "expected '^'");
  ++i;
  if (i >= label.size() || label[i] != '(') parse_fail(label, i, "expected '('");
  ++i;
  size_t tw_start = i;
  while (i < label.size() && isdigit(static_cast<unsigned char>(label[i]))) ++i;
  if (i == tw_start) parse_fail(label, i, "expected a twist order");
  int twist = std::stoi(label.substr(tw_start, i - tw_start));
  if (i >= label.size() || label[i] != ')') parse_fail(label, i, "expected ')'");
  ++i;
  if (i != label.size()) parse_fail(label, i, "trailing characters");
  return {letter, number, twist};
}

// Finite Cartan matrices, a_{ij} = alpha_j(alpha_i^vee), 0-based storage.
std::vector<std::vector<Int>> finite_cartan(char fam, int n) {
  std::vector<std::vector<Int>> A(n, std::vector<Int>(n, 0));
  for (int i = 0; i < n; ++i) A[i][i] = 2;
  auto bond = [&](int i, int j, Int aij, Int aji) {
    A[i][j] = aij;
    A[j][i] = aji;
  };
  switch (fam) {
    case 'A':
      for (int i = 0; i + 1 < n; ++i) bond(i, i + 1, -1, -1);
      break;
    case 'B':  // alpha_n short
      for (int i = 0; i + 2 < n; ++i) bond(i, i + 1, -1, -1);
      if (n >= 2) bond(n - 2, n - 1, -1, -2);
      break;
    case 'C':  // alpha_n long
      for (int i = 0; i + 2 < n; ++i) bond(i, i + 1, -1, -1);
      if (n >= 2) bond(n - 2, n - 1, -2, -1);
      break;
    case 'D':
      for (int i = 0; i + 2 < n; ++i) bond(i, i + 1, -1, -1);
      bond(n - 3, n - 1, -1, -1);
      break;
    case 'E':
      // Bourbaki: chain 1-3-4-5-6(-7(-8)), node 2 attached to node 4.
      bond(0, 2, -1, -1);
      bond(2, 3, -1, -1);
      bond(1, 3, -1, -1);
      for (int i = 3; i + 1 < n; ++i) bond(i, i + 1, -1, -1);
      break;
    case 'F':  // alpha_1, alpha_2 long; alpha_3, alpha_4 short
      bond(0, 1, -1, -1);
      bond(1, 2, -1, -2);
      bond(2, 3, -1, -1);
      break;
    case 'G':  // alpha_1 short, alpha_2 long
      bond(0, 1, -3, -1);
      break;
    default:
      AFF_ASSERT(false, "unknown finite family");
  }
  return A;
}

// Closure of the simple roots under the simple reflections, in root coords.
std::vector<std::vector<Int>> positive_closure(const std::vector<std::vector<Int>>& A) {
  int n = static_cast<int>(A.size());
  std::set<std::vector<Int>> all;
  std::vector<std::vector<Int>> queue;
  for (int i = 0; i < n; ++i) {
    std::vector<Int> e(n, 0);
    e[i] = 1;
    all.insert(e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    auto v = queue.back();
    queue.pop_back();
    for (int i = 0; i < n; ++i) {
      Int pair = 0;  // <v, alpha_i^vee> = sum_j a_{ij} v_j
      for (int j = 0; j < n; ++j) pair += A[i][j] * v[j];
      auto w = v;
      w[i] -= pair;
      if (all.insert(w).second) queue.push_back(w);
    }
  }
  std::vector<std::vector<Int>> pos;
  for (const auto& v : all) {
    bool nonneg = std::all_of(v.begin(), v.end(), [](Int x) { return x >= 0; });
    if (nonneg) pos.push_back(v);
  }
  return pos;
}

std::vector<std::vector<Rat>> invert_matrix(const std::vector<std::vector<Int>>& A) {
  int n = static_cast<int>(A.size());
  std::vector<std::vector<Rat>> m(n, std::vector<Rat>(2 * n, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m[i][j] = A[i][j];
    m[i][n + i] = 1;
  }
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int row = col; row < n; ++row)
      if (m[row][col] != 0) {
        piv = row;
        break;
      }
    AFF_ASSERT(piv >= 0, "singular Cartan matrix");
    std::swap(m[piv], m[col]);
    Rat inv = 1 / m[col][col];
    for (int j = 0; j < 2 * n; ++j) m[col][j] *= inv;
    for (int row = 0; row < n; ++row) {
      if (row == col || m[row][col] == 0) continue;
      Rat f = m[row][col];
      for (int j = 0; j < 2 * n; ++j) m[row][j] -= f * m[col][j];
    }
  }
  std::vector<std::vector<Rat>> out(n, std::vector<Rat>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[i][j] = m[i][n + j];
  return out;
}

FiniteWeight root_to_weight(const std::vector<std::vector<Int>>& A, const std::vector<Int>& rt) {
  int n = static_cast<int>(A.size());
  FiniteWeight w(n);
  for (int i = 0; i < n; ++i) {
    Int v = 0;
    for (int j = 0; j < n; ++j) v += A[i][j] * rt[j];  // alpha-combination paired with alpha_i^vee
    AFF_REQUIRE(v >= INT32_MIN && v <= INT32_MAX, "coordinate overflow");
    w.c[i] = static_cast<int32_t>(v);
  }
  return w;
}

// s_i in the fundamental-weight basis: (s_i x)_j = x_j - x_i * a_{ji}.
FiniteWeight finite_reflect(const std::vector<std::vector<Int>>& A, int i0, const FiniteWeight& x) {
  FiniteWeight y = x;
  int32_t k = x.c[i0];
  if (k == 0) return y;
  int n = static_cast<int>(A.size());
  for (int j = 0; j < n; ++j) y.c[j] -= static_cast<int32_t>(k * A[j][i0]);
  return y;
}

AffineType build_type(const std::string& canonical, FamilyKind kind, char fin_fam, int n, int r,
                      int a0) {
  AffineType T;
  T.label = canonical;
  T.kind = kind;
  T.n = n;
  T.r = r;
  T.a0 = a0;

  auto finA = finite_cartan(fin_fam, n);
  T.rt_pos = positive_closure(finA);
  std::sort(T.rt_pos.begin(), T.rt_pos.end());

  // Symmetrizer of the finite block: sym_i * a_{ij} = sym_j * a_{ji},
  // normalized afterwards so that (theta,theta) = 2*a0.
  std::vector<Rat> sym(n, 0);
  sym[0] = 1;
  for (bool changed = true; changed;) {
    changed = false;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (finA[i][j] == 0 || sym[i] == 0 || sym[j] != 0) continue;
        sym[j] = sym[i] * finA[i][j] / finA[j][i];
        changed = true;
      }
  }
  for (int i = 0; i < n; ++i) AFF_ASSERT(sym[i] > 0, "diagram not connected");

  auto len2_of = [&](const std::vector<Int>& rt) {
    Rat v = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) v += Rat(rt[i]) * Rat(rt[j]) * sym[i] * finA[i][j];
    return v;
  };

  // theta: highest root for untwisted and A_{2n}^(2); dominant short root
  // for the remaining twisted families.
  Rat min_len = len2_of(T.rt_pos[0]);
  for (const auto& rt : T.rt_pos) min_len = std::min(min_len, len2_of(rt));
  int theta_idx = -1;
  bool theta_is_highest = (kind == FamilyKind::untwisted || kind == FamilyKind::a2n_2);
  for (size_t k = 0; k < T.rt_pos.size(); ++k) {
    const auto& rt = T.rt_pos[k];
    auto wt = root_to_weight(finA, rt);
    bool dominant = true;
    for (int i = 0; i < n; ++i) dominant = dominant && wt.c[i] >= 0;
    if (!dominant) continue;
    if (theta_is_highest) {
      Int ht = std::accumulate(rt.begin(), rt.end(), Int{0});
      if (theta_idx < 0 ||
          ht > std::accumulate(T.rt_pos[theta_idx].begin(), T.rt_pos[theta_idx].end(), Int{0}))
        theta_idx = static_cast<int>(k);
    } else {
      if (len2_of(rt) == min_len) {
        AFF_ASSERT(theta_idx < 0, "dominant short root not unique");
        theta_idx = static_cast<int>(k);
      }
    }
  }
  AFF_ASSERT(theta_idx >= 0, "theta not found");
  T.theta_rt = T.rt_pos[theta_idx];

  Rat scale = Rat(2 * a0) / len2_of(T.theta_rt);
  for (auto& v : sym) v *= scale;

  // s_i = (alpha_i,alpha_i)/2 on nodes 1..n, s_0 = 1/a0; d_i = 1/s_i.
  T.s.assign(n + 1, 0);
  T.d.assign(n + 1, 0);
  T.s[0] = Rat(1, a0);
  T.d[0] = a0;
  for (int i = 1; i <= n; ++i) {
    T.s[i] = sym[i - 1];
    T.d[i] = 1 / sym[i - 1];
  }

  // Affine Cartan matrix.
  T.cartan.assign(n + 1, std::vector<Int>(n + 1, 0));
  T.cartan[0][0] = 2;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) T.cartan[i][j] = finA[i - 1][j - 1];
  auto form_theta = [&](int j0) {  // (theta, alpha_j), j0 1..n
    Rat v = 0;
    for (int i = 0; i < n; ++i) v += Rat(T.theta_rt[i]) * sym[i] * finA[i][j0 - 1];
    return v;
  };
  for (int j = 1; j <= n; ++j) {
    Rat a0j = -form_theta(j);                        // alpha_j(alpha_0^vee)
    Rat aj0 = -form_theta(j) / (sym[j - 1] * a0);    // alpha_0(alpha_j^vee)
    T.cartan[0][j] = to_int(a0j);
    T.cartan[j][0] = to_int(aj0);
  }

  // Marks and comarks.
  T.marks.assign(n + 1, 0);
  T.comarks.assign(n + 1, 0);
  T.marks[0] = a0;
  T.comarks[0] = 1;
  for (int i = 1; i <= n; ++i) {
    T.marks[i] = T.theta_rt[i - 1];
    T.comarks[i] = to_int(Rat(T.marks[i]) * T.s[i]);
  }
  for (int i = 0; i <= n; ++i) {
    Int row = 0, col = 0;
    for (int j = 0; j <= n; ++j) {
      row += T.cartan[i][j] * T.marks[j];
      col += T.cartan[j][i] * T.comarks[j];
    }
    AFF_ASSERT(row == 0, "marks are not a null vector of A");
    AFF_ASSERT(col == 0, "comarks are not a null vector of tA");
  }
  // Symmetry of the normalized form: d_i^{-1} a_{ij} = d_j^{-1} a_{ji}.
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j)
      AFF_ASSERT(T.s[i] * T.cartan[i][j] == T.s[j] * T.cartan[j][i], "form is not symmetric");

  // Finite roots in the weight basis, lengths, length classes.
  T.wt_pos.reserve(T.rt_pos.size());
  T.len2_pos.reserve(T.rt_pos.size());
  T.len2_short = T.len2_long = len2_of(T.theta_rt);
  for (const auto& rt : T.rt_pos) {
    T.wt_pos.push_back(root_to_weight(finA, rt));
    T.len2_pos.push_back(len2_of(rt));
    T.len2_short = std::min(T.len2_short, T.len2_pos.back());
    T.len2_long = std::max(T.len2_long, T.len2_pos.back());
  }
  T.theta_wt = root_to_weight(finA, T.theta_rt);
  T.fin_simply_laced = (T.len2_short == T.len2_long);
  T.type_one = (r > 1) || T.fin_simply_laced;

  // |W| via the height product over positive roots.
  Rat worder = 1;
  for (const auto& rt : T.rt_pos) {
    Int ht = std::accumulate(rt.begin(), rt.end(), Int{0});
    worder *= Rat(ht + 1, ht);
  }
  T.weyl_order = to_int(worder);

  T.inv_cartan = invert_matrix(finA);
  T.fw_gram.assign(n, std::vector<Rat>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) T.fw_gram[i][j] = T.inv_cartan[i][j] * sym[i];

  // Longest-element word: walk a strictly dominant weight to the
  // anti-dominant chamber, always reflecting the smallest ascending node.
  {
    FiniteWeight rho(n);
    for (int i = 0; i < n; ++i) rho.c[i] = 1;
    FiniteWeight x = rho;
    std::vector<int> word;
    for (;;) {
      int i = -1;
      for (int j = 0; j < n; ++j)
        if (x.c[j] > 0) {
          i = j;
          break;
        }
      if (i < 0) break;
      x = finite_reflect(finA, i, x);
      word.push_back(i + 1);
    }
    std::reverse(word.begin(), word.end());  // w_circ = s_{word[0]} ... s_{word.back()}
    AFF_ASSERT(word.size() == T.rt_pos.size(), "longest-element word has wrong length");
    T.wcirc_word = word;
    // -w_circ permutes the fundamental weights
    T.iota_perm.assign(n, -1);
    for (int i = 0; i < n; ++i) {
      FiniteWeight fw(n);
      fw.c[i] = 1;
      for (auto it = word.rbegin(); it != word.rend(); ++it)
        fw = finite_reflect(finA, *it - 1, fw);
      fw = -fw;
      int j = -1;
      for (int k = 0; k < n; ++k)
        if (fw.c[k] == 1) j = k;
      for (int k = 0; k < n; ++k)
        AFF_ASSERT(fw.c[k] == (k == j ? 1 : 0), "-w_circ is not a diagram permutation");
      T.iota_perm[i] = j;
    }
  }
  return T;
}

AffineType construct(const std::string& label) {
  auto [letter, number, twist] = parse_label(label);
  std::ostringstream canon;
  canon << letter << number << "^(" << twist << ")";
  const std::string cl = canon.str();
  AFF_REQUIRE(cl == label, "label not in canonical form: " + label);

  if (twist == 1) {
    switch (letter) {
      case 'A':
        AFF_REQUIRE(number >= 1, "A_n^(1) needs n >= 1");
        break;
      case 'B':
        AFF_REQUIRE(number >= 2, "B_n^(1) needs n >= 2");
        break;
      case 'C':
        AFF_REQUIRE(number >= 2, "C_n^(1) needs n >= 2");
        break;
      case 'D':
        AFF_REQUIRE(number >= 4, "D_n^(1) needs n >= 4");
        break;
      case 'E':
        AFF_REQUIRE(number >= 6 && number <= 8, "E_n^(1) needs n in {6,7,8}");
        break;
      case 'F':
        AFF_REQUIRE(number == 4, "F_n^(1) needs n = 4");
        break;
      case 'G':
        AFF_REQUIRE(number == 2, "G_n^(1) needs n = 2");
        break;
      default:
        AFF_REQUIRE(false, "unknown untwisted family");
    }
    return build_type(cl, FamilyKind::untwisted, letter, number, 1, 1);
  }
  if (twist == 2) {
    if (letter == 'A') {
      if (number % 2 == 0) {  // A_{2n}^(2)
        int n = number / 2;
        AFF_REQUIRE(n >= 1, "A_{2n}^(2) needs n >= 1");
        return build_type(cl, FamilyKind::a2n_2, n == 1 ? 'A' : 'C', n, 2, 2);
      }
      int n = (number + 1) / 2;  // A_{2n-1}^(2)
      AFF_REQUIRE(n >= 2, "A_{2n-1}^(2) needs 2n-1 >= 3");
      return build_type(cl, FamilyKind::a2nm1_2, 'C', n, 2, 1);
    }
    if (letter == 'D') {  // D_{n+1}^(2)
      int n = number - 1;
      AFF_REQUIRE(n >= 2, "D_{n+1}^(2) needs n+1 >= 3");
      return build_type(cl, FamilyKind::dnp1_2, 'B', n, 2, 1);
    }
    if (letter == 'E') {
      AFF_REQUIRE(number == 6, "twist 2 supports E6 only");
      return build_type(cl, FamilyKind::e6_2, 'F', 4, 2, 1);
    }
    AFF_REQUIRE(false, "family does not admit twist 2: " + label);
  }
  if (twist == 3) {
    AFF_REQUIRE(letter == 'D' && number == 4, "twist 3 supports D4 only");
    return build_type(cl, FamilyKind::d4_3, 'G', 2, 3, 1);
  }
  throw std::invalid_argument{"unsupported twist order in " + label};
}

}  // namespace

const AffineType& load_type(const std::string& label) {
  static std::mutex mu;
  static std::map<std::string, AffineType> cache;
  std::lock_guard<std::mutex> lock{mu};
  auto it = cache.find(label);
  if (it == cache.end()) it = cache.emplace(label, construct(label)).first;
  return it->second;
}

Rat bilinear_finite(const AffineType& T, const FiniteWeight& x, const FiniteWeight& y) {
  AFF_REQUIRE(x.rank() == T.n && y.rank() == T.n, "rank mismatch");
  Rat v = 0;
  for (int i = 0; i < T.n; ++i) {
    if (x.c[i] == 0) continue;
    for (int j = 0; j < T.n; ++j)
      if (y.c[j] != 0) v += Rat(x.c[i]) * Rat(y.c[j]) * T.fw_gram[i][j];
  }
  return v;
}

Rat bilinear(const AffineType& T, const AffineWeight& x, const AffineWeight& y) {
  // (Lambda_0, finite) = 0, (Lambda_0, Lambda_0) = 0, (Lambda_0, delta) = 1,
  // (delta, delta) = (delta, finite) = 0.
  Rat v = bilinear_finite(T, x.finite, y.finite);
  v += Rat(x.level) * frac(y.delta_num, T.a0);
  v += Rat(y.level) * frac(x.delta_num, T.a0);
  return v;
}

Rat form_weight_root(const AffineType& T, const FiniteWeight& x, const std::vector<Rat>& alpha_rt) {
  // (x, alpha) = sum_j alpha_j-coordinate * x_j * s_j
  Rat v = 0;
  for (int j = 0; j < T.n; ++j)
    if (x.c[j] != 0 && alpha_rt[j] != 0) v += alpha_rt[j] * Rat(x.c[j]) * T.s[j + 1];
  return v;
}

Rat root_len2(const AffineType& T, const Root& alpha) {
  if (alpha.imaginary) return 0;
  Rat v = 0;
  for (int i = 0; i < T.n; ++i) {
    if (alpha.finite_rt[i] == 0) continue;
    for (int j = 0; j < T.n; ++j)
      if (alpha.finite_rt[j] != 0)
        v += alpha.finite_rt[i] * alpha.finite_rt[j] * T.s[i + 1] * T.cartan[i + 1][j + 1];
  }
  return v;
}

Int r_alpha(const AffineType& T, const Root& alpha) {
  AFF_REQUIRE(!alpha.imaginary, "r_alpha is defined for real roots only");
  Rat v = root_len2(T, alpha) / 2;
  if (v < 1) v = 1;
  return to_int(v);
}

FiniteWeight root_weight(const AffineType& T, const Root& alpha) {
  FiniteWeight w(T.n);
  for (int i = 0; i < T.n; ++i) {
    Rat v = 0;
    for (int j = 0; j < T.n; ++j)
      if (alpha.finite_rt[j] != 0) v += alpha.finite_rt[j] * T.cartan[i + 1][j + 1];
    AFF_ASSERT(is_integer(v), "root finite part leaves the weight lattice");
    Int vi = to_int(v);
    AFF_REQUIRE(vi >= INT32_MIN && vi <= INT32_MAX, "coordinate overflow");
    w.c[i] = static_cast<int32_t>(vi);
  }
  return w;
}

namespace {

std::vector<Rat> rt_to_rat(const std::vector<Int>& rt) {
  return std::vector<Rat>(rt.begin(), rt.end());
}

std::vector<Rat> rt_half(const std::vector<Int>& rt) {
  std::vector<Rat> v(rt.size());
  for (size_t i = 0; i < rt.size(); ++i) v[i] = frac(rt[i], 2);
  return v;
}

std::vector<Rat> rt_neg(const std::vector<Rat>& rt) {
  std::vector<Rat> v(rt.size());
  for (size_t i = 0; i < rt.size(); ++i) v[i] = -rt[i];
  return v;
}

}  // namespace

std::vector<Root> positive_real_roots(const AffineType& T, const Rat& level_bound) {
  AFF_REQUIRE(level_bound >= 0, "level bound must be nonnegative");
  std::vector<Root> out;
  auto add = [&](std::vector<Rat> rt, Rat lvl) { out.push_back(Root{std::move(rt), lvl, false}); };

  std::vector<size_t> short_idx, long_idx;
  for (size_t k = 0; k < T.rt_pos.size(); ++k) {
    // with a single root length everything counts as short
    if (T.fin_simply_laced || T.len2_pos[k] == T.len2_short)
      short_idx.push_back(k);
    else
      long_idx.push_back(k);
  }

  if (T.kind == FamilyKind::a2n_2) {
    // half long roots at half-odd levels, short roots at all integer levels,
    // long roots at even levels; for n = 1 the single root counts as long
    std::vector<size_t> full_short = (T.n == 1) ? std::vector<size_t>{} : short_idx;
    std::vector<size_t> full_long = (T.n == 1) ? std::vector<size_t>{0} : long_idx;
    for (Int twolvl = 0; frac(twolvl, 2) <= level_bound; ++twolvl) {
      Rat lvl = frac(twolvl, 2);
      bool integral = (twolvl % 2 == 0);
      Int c = twolvl / 2;
      if (integral) {
        for (size_t k : full_short) {
          add(rt_to_rat(T.rt_pos[k]), lvl);
          if (c > 0) add(rt_neg(rt_to_rat(T.rt_pos[k])), lvl);
        }
        if (c % 2 == 0)
          for (size_t k : full_long) {
            add(rt_to_rat(T.rt_pos[k]), lvl);
            if (c > 0) add(rt_neg(rt_to_rat(T.rt_pos[k])), lvl);
          }
      } else {
        for (size_t k : full_long) {
          add(rt_half(T.rt_pos[k]), lvl);
          add(rt_neg(rt_half(T.rt_pos[k])), lvl);
        }
      }
    }
  } else {
    for (Int c = 0; Rat(c) <= level_bound; ++c) {
      for (size_t k : short_idx) {
        add(rt_to_rat(T.rt_pos[k]), c);
        if (c > 0) add(rt_neg(rt_to_rat(T.rt_pos[k])), c);
      }
      if (c % T.r == 0)
        for (size_t k : long_idx) {
          add(rt_to_rat(T.rt_pos[k]), c);
          if (c > 0) add(rt_neg(rt_to_rat(T.rt_pos[k])), c);
        }
    }
  }

  std::sort(out.begin(), out.end(), [](const Root& a, const Root& b) {
    if (a.delta != b.delta) return a.delta < b.delta;
    return a.finite_rt < b.finite_rt;
  });
  return out;
}

}  // namespace affchar
