#pragma once

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "weylell/intlinalg.hpp"
#include "weylell/simple_type.hpp"

namespace weylell {

/// Integer coordinate vector in the fundamental-weight basis.
struct Weight {
  std::vector<Int> coords;

  bool dominant() const {
    return std::all_of(coords.begin(), coords.end(), [](Int c) { return c >= 0; });
  }
  bool strictly_dominant() const {
    return std::all_of(coords.begin(), coords.end(), [](Int c) { return c > 0; });
  }
  bool zero() const {
    return std::all_of(coords.begin(), coords.end(), [](Int c) { return c == 0; });
  }
  bool operator==(const Weight&) const = default;
};

/// Integer coordinate vector in the fundamental-coweight basis.
struct Coweight {
  std::vector<Int> coords;

  bool dominant() const {
    return std::all_of(coords.begin(), coords.end(), [](Int c) { return c >= 0; });
  }
  bool zero() const {
    return std::all_of(coords.begin(), coords.end(), [](Int c) { return c == 0; });
  }
  bool operator==(const Coweight&) const = default;
};

inline Weight operator+(const Weight& a, const Weight& b) {
  if (a.coords.size() != b.coords.size()) throw std::invalid_argument("weight rank mismatch");
  Weight r = a;
  for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] += b.coords[i];
  return r;
}

inline Weight operator-(const Weight& a) {
  Weight r = a;
  for (auto& c : r.coords) c = -c;
  return r;
}

struct Root {
  std::vector<Int> root_coords;   // simple-root basis
  std::vector<Int> omega_coords;  // fundamental-weight basis (= A * root_coords)
  Int height = 0;
  bool is_long = false;
  int factor = 0;  // 0-based index of the simple factor carrying this root

  Weight as_weight() const { return Weight{omega_coords}; }
};

/// An ordered product of simple types in the Bourbaki convention, with exact
/// Cartan data: A[i][j] = <alpha_j, alpha_i^vee> = 2(a_i,a_j)/(a_i,a_i),
/// block-diagonal across factors, global nodes numbered factor by factor.
/// All pairing queries are exact: the adjugate/determinant scaling of A^{-1}
/// preserves signs since det(A) > 0.
class RootSystem {
 public:
  explicit RootSystem(std::vector<SimpleType> factors) : factors_(std::move(factors)) {
    if (factors_.empty()) throw std::invalid_argument("root system needs at least one factor");
    for (const auto& f : factors_)
      if (!f.admissible()) throw std::invalid_argument("inadmissible factor " + f.name());
    rank_ = 0;
    for (const auto& f : factors_) {
      offsets_.push_back(rank_);
      rank_ += f.rank;
    }
    build_cartan();
    build_lengths();
    auto inv = bareiss_adjugate(cartan_);
    det_ = inv.det;
    adjugate_ = std::move(inv.adjugate);
    leading_minors_ = std::move(inv.leading_minors);
    // scaled Gram matrix of fundamental weights: det * (w_k, w_m) = d_k * adj[k][m]
    gram_scaled_.assign(rank_, std::vector<Int>(rank_, 0));
    for (int k = 0; k < rank_; ++k)
      for (int m = 0; m < rank_; ++m)
        gram_scaled_[k][m] = d_[k] * adjugate_[k][m];
    enumerate_positive_roots();
  }

  static RootSystem from_string(const std::string& s) { return RootSystem(parse_type_string(s)); }

  int rank() const { return rank_; }
  const std::vector<SimpleType>& factors() const { return factors_; }
  std::string type_string() const { return canonical_type_string(factors_); }
  const IntMatrix& cartan() const { return cartan_; }
  const std::vector<Int>& root_length_halves() const { return d_; }
  Int cartan_det() const { return det_; }
  const IntMatrix& cartan_adjugate() const { return adjugate_; }
  const std::vector<Int>& cartan_leading_minors() const { return leading_minors_; }
  const IntMatrix& gram_scaled() const { return gram_scaled_; }

  bool is_simple() const { return factors_.size() == 1; }
  int factor_offset(int f) const { return offsets_.at(f); }
  int factor_of_node(int j) const {  // j 1-based
    check_node(j);
    for (std::size_t f = factors_.size(); f-- > 0;)
      if (j - 1 >= offsets_[f]) return static_cast<int>(f);
    return 0;
  }

  Weight fundamental_weight(int j) const {  // 1-based
    check_node(j);
    Weight w{std::vector<Int>(rank_, 0)};
    w.coords[j - 1] = 1;
    return w;
  }
  Weight rho() const { return Weight{std::vector<Int>(rank_, 1)}; }
  Coweight fundamental_coweight(int j) const {
    check_node(j);
    Coweight h{std::vector<Int>(rank_, 0)};
    h.coords[j - 1] = 1;
    return h;
  }
  Coweight rho_covector() const { return Coweight{std::vector<Int>(rank_, 1)}; }
  Weight zero_weight() const { return Weight{std::vector<Int>(rank_, 0)}; }

  const std::vector<Root>& positive_roots() const { return positive_roots_; }
  Int num_positive_roots() const { return static_cast<Int>(positive_roots_.size()); }

  /// Highest (long) root and dominant short root of one simple factor; in
  /// simply-laced factors the two coincide.
  struct DominantRoots {
    Root highest_long;
    Root highest_short;
  };
  DominantRoots dominant_roots(int factor) const {
    if (factor < 0 || factor >= static_cast<int>(factors_.size()))
      throw std::invalid_argument("dominant_roots: no such factor");
    const Root* lng = nullptr;
    const Root* shrt = nullptr;
    for (const auto& r : positive_roots_) {
      if (r.factor != factor) continue;
      if (!r.as_weight().dominant()) continue;
      if (r.is_long) lng = &r; else shrt = &r;
    }
    if (!lng) throw std::logic_error("dominant_roots: no dominant long root found");
    return DominantRoots{*lng, shrt ? *shrt : *lng};
  }
  DominantRoots dominant_roots() const {
    if (!is_simple())
      throw std::invalid_argument("dominant_roots: system " + type_string() + " is not simple");
    return dominant_roots(0);
  }

  /// det(A) * (simple-root coordinates of mu); signs match the exact rational ones.
  std::vector<Int> root_coords_scaled(const Weight& mu) const {
    check_weight(mu.coords);
    std::vector<Int> c(rank_, 0);
    for (int m = 0; m < rank_; ++m) {
      __int128 acc = 0;
      for (int j = 0; j < rank_; ++j)
        acc += static_cast<__int128>(adjugate_[m][j]) * mu.coords[j];
      c[m] = detail::checked_narrow(acc, "root_coords_scaled");
    }
    return c;
  }

  /// Sign of the W-invariant form (lambda, mu), short roots normalized to d=1.
  int invariant_form_sign(const Weight& lambda, const Weight& mu) const {
    check_weight(lambda.coords);
    check_weight(mu.coords);
    __int128 acc = 0;
    for (int k = 0; k < rank_; ++k) {
      if (lambda.coords[k] == 0) continue;
      __int128 row = 0;
      for (int m = 0; m < rank_; ++m)
        row += static_cast<__int128>(gram_scaled_[k][m]) * mu.coords[m];
      acc += static_cast<__int128>(lambda.coords[k]) * row;
    }
    return acc > 0 ? 1 : (acc < 0 ? -1 : 0);
  }

  /// Sign of the natural pairing <lambda, h> between weights and coweights.
  int natural_pairing_sign(const Weight& lambda, const Coweight& h) const {
    check_weight(h.coords);
    const auto c = root_coords_scaled(lambda);
    __int128 acc = 0;
    for (int j = 0; j < rank_; ++j) acc += static_cast<__int128>(h.coords[j]) * c[j];
    return acc > 0 ? 1 : (acc < 0 ? -1 : 0);
  }

  /// True iff mu lies in the nonnegative span of the simple roots.
  bool in_positive_root_cone(const Weight& mu) const {
    const auto c = root_coords_scaled(mu);
    return std::all_of(c.begin(), c.end(), [](Int x) { return x >= 0; });
  }

  /// det * (w_k, h) for k = 1..n; the pairing profile used by orbit sign tests.
  std::vector<Int> form_vector(const Weight& h) const {
    check_weight(h.coords);
    std::vector<Int> t(rank_, 0);
    for (int k = 0; k < rank_; ++k) {
      __int128 acc = 0;
      for (int m = 0; m < rank_; ++m)
        acc += static_cast<__int128>(gram_scaled_[k][m]) * h.coords[m];
      t[k] = detail::checked_narrow(acc, "form_vector");
    }
    return t;
  }

  /// det * <w_k, h> for a coweight h: the same role as form_vector but for the
  /// natural pairing (columns of the adjugate weighted by h).
  std::vector<Int> pairing_vector(const Coweight& h) const {
    check_weight(h.coords);
    std::vector<Int> t(rank_, 0);
    for (int k = 0; k < rank_; ++k) {
      __int128 acc = 0;
      for (int m = 0; m < rank_; ++m)
        acc += static_cast<__int128>(h.coords[m]) * adjugate_[m][k];
      t[k] = detail::checked_narrow(acc, "pairing_vector");
    }
    return t;
  }

  /// Extracts the factor's coordinates of a global weight.
  std::vector<Int> factor_slice(const std::vector<Int>& coords, int factor) const {
    const int off = offsets_.at(factor);
    const int n = factors_[factor].rank;
    return std::vector<Int>(coords.begin() + off, coords.begin() + off + n);
  }

  /// Embeds a factor weight into the product (zeros elsewhere).
  Weight embed_factor_weight(const std::vector<Int>& coords, int factor) const {
    const int off = offsets_.at(factor);
    if (static_cast<int>(coords.size()) != factors_[factor].rank)
      throw std::invalid_argument("embed_factor_weight: rank mismatch");
    Weight w = zero_weight();
    for (std::size_t i = 0; i < coords.size(); ++i) w.coords[off + i] = coords[i];
    return w;
  }

 private:
  void check_node(int j) const {
    if (j < 1 || j > rank_)
      throw std::out_of_range("node index " + std::to_string(j) + " outside 1.." +
                              std::to_string(rank_));
  }
  void check_weight(const std::vector<Int>& v) const {
    if (static_cast<int>(v.size()) != rank_)
      throw std::invalid_argument("coordinate vector has rank " + std::to_string(v.size()) +
                                  ", expected " + std::to_string(rank_));
  }

  void build_cartan() {
    cartan_.assign(rank_, std::vector<Int>(rank_, 0));
    for (int i = 0; i < rank_; ++i) cartan_[i][i] = 2;
    for (std::size_t f = 0; f < factors_.size(); ++f) {
      const int off = offsets_[f];
      const int n = factors_[f].rank;
      auto edge = [&](int i, int j, Int aij = -1, Int aji = -1) {  // local 1-based
        cartan_[off + i - 1][off + j - 1] = aij;
        cartan_[off + j - 1][off + i - 1] = aji;
      };
      switch (factors_[f].family) {
        case Family::A:
          for (int i = 1; i < n; ++i) edge(i, i + 1);
          break;
        case Family::B:  // alpha_n short
          for (int i = 1; i < n - 1; ++i) edge(i, i + 1);
          edge(n - 1, n, -1, -2);
          break;
        case Family::C:  // alpha_n long
          for (int i = 1; i < n - 1; ++i) edge(i, i + 1);
          edge(n - 1, n, -2, -1);
          break;
        case Family::D:
          for (int i = 1; i < n - 1; ++i) edge(i, i + 1);
          edge(n - 2, n);
          break;
        case Family::E:
          edge(1, 3);
          edge(3, 4);
          edge(2, 4);
          for (int i = 4; i < n; ++i) edge(i, i + 1);
          break;
        case Family::F:  // alpha_1, alpha_2 long
          edge(1, 2);
          edge(2, 3, -1, -2);
          edge(3, 4);
          break;
        case Family::G:  // alpha_1 short
          edge(1, 2, -3, -1);
          break;
      }
    }
  }

  void build_lengths() {
    // d_i = half squared length of alpha_i, short roots normalized to d = 1;
    // within each factor d_j/d_i = A[i][j]/A[j][i] along bonds.
    d_.assign(rank_, 0);
    for (std::size_t f = 0; f < factors_.size(); ++f) {
      const int off = offsets_[f];
      const int n = factors_[f].rank;
      std::vector<Int> num(n, 0), den(n, 0);
      num[0] = den[0] = 1;
      std::vector<int> stack{0};
      while (!stack.empty()) {
        const int i = stack.back();
        stack.pop_back();
        for (int j = 0; j < n; ++j) {
          if (j == i || cartan_[off + i][off + j] == 0 || num[j] != 0) continue;
          num[j] = num[i] * cartan_[off + i][off + j];
          den[j] = den[i] * cartan_[off + j][off + i];
          if ((num[j] < 0) == (den[j] < 0)) {
            num[j] = std::abs(num[j]);
            den[j] = std::abs(den[j]);
          }
          stack.push_back(j);
        }
      }
      Int lcm_den = 1;
      for (int j = 0; j < n; ++j) lcm_den = std::lcm(lcm_den, den[j]);
      std::vector<Int> dv(n);
      for (int j = 0; j < n; ++j) dv[j] = num[j] * (lcm_den / den[j]);
      const Int g = *std::min_element(dv.begin(), dv.end());
      for (int j = 0; j < n; ++j) {
        if (dv[j] % g != 0) throw std::logic_error("root length normalization failed");
        d_[off + j] = dv[j] / g;
      }
    }
  }

  void enumerate_positive_roots() {
    // reflection-orbit closure of the simple roots, in root coordinates:
    // (r_i c)_i = c_i - sum_j A[i][j] c_j, other entries unchanged
    std::set<std::vector<Int>> all;
    std::vector<std::vector<Int>> stack;
    for (int i = 0; i < rank_; ++i) {
      std::vector<Int> e(rank_, 0);
      e[i] = 1;
      if (all.insert(e).second) stack.push_back(e);
    }
    while (!stack.empty()) {
      auto c = stack.back();
      stack.pop_back();
      for (int i = 0; i < rank_; ++i) {
        Int s = 0;
        for (int j = 0; j < rank_; ++j) s += cartan_[i][j] * c[j];
        auto c2 = c;
        c2[i] -= s;
        if (all.insert(c2).second) stack.push_back(c2);
      }
    }
    std::vector<std::vector<Int>> pos;
    for (const auto& c : all)
      if (std::all_of(c.begin(), c.end(), [](Int x) { return x >= 0; })) pos.push_back(c);
    std::sort(pos.begin(), pos.end(), [](const auto& a, const auto& b) {
      const Int ha = std::accumulate(a.begin(), a.end(), Int{0});
      const Int hb = std::accumulate(b.begin(), b.end(), Int{0});
      return ha != hb ? ha < hb : a < b;
    });

    std::vector<Int> max_norm(factors_.size(), 0);
    std::vector<Int> norms;
    std::vector<Root> roots;
    roots.reserve(pos.size());
    for (const auto& c : pos) {
      Root r;
      r.root_coords = c;
      r.omega_coords.assign(rank_, 0);
      for (int k = 0; k < rank_; ++k)
        for (int j = 0; j < rank_; ++j) r.omega_coords[k] += cartan_[k][j] * c[j];
      r.height = std::accumulate(c.begin(), c.end(), Int{0});
      int fac = -1;
      Int norm = 0;  // (beta, beta) with short = 2: sum_{k,m} c_k c_m d_k A[k][m]
      for (int k = 0; k < rank_; ++k) {
        if (c[k] != 0 && fac < 0) fac = factor_of_node(k + 1);
        if (c[k] == 0) continue;
        for (int m = 0; m < rank_; ++m) norm += c[k] * c[m] * d_[k] * cartan_[k][m];
      }
      r.factor = fac;
      max_norm[fac] = std::max(max_norm[fac], norm);
      norms.push_back(norm);
      roots.push_back(std::move(r));
    }
    for (std::size_t i = 0; i < roots.size(); ++i)
      roots[i].is_long = (norms[i] == max_norm[roots[i].factor]);
    positive_roots_ = std::move(roots);
  }

  std::vector<SimpleType> factors_;
  std::vector<int> offsets_;
  int rank_ = 0;
  IntMatrix cartan_;
  std::vector<Int> d_;
  Int det_ = 1;
  IntMatrix adjugate_;
  std::vector<Int> leading_minors_;
  IntMatrix gram_scaled_;
  std::vector<Root> positive_roots_;
};

}  // namespace weylell
