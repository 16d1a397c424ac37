#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "weylell/root_system.hpp"
#include "weylell/weyl.hpp"

namespace weylell {

/// The side against which orbit weights are paired: a weight (invariant form),
/// a coweight (natural pairing), or the positive-root cone itself.
using PairingSide = std::variant<std::monostate, Weight, Coweight>;

/// A computed ell value with its verifiable certificate: applying the witness
/// to lambda yields image, the witness has Coxeter length == value, and image
/// pairs strictly negatively against h (resp. leaves the cone).
struct EllResult {
  Int value = 0;
  WeylWord witness;
  Weight image;
  Weight lambda;
  PairingSide h;
  Int explored = 0;
};

/// Outcome of one bounded search: either a hit, or exhaustion of all depths
/// <= depth_limit (so the true value is >= depth_limit + 1).
struct EllSearch {
  std::optional<EllResult> hit;
  Int depth_limit = 0;
  Int explored = 0;

  bool exceeded() const { return !hit.has_value(); }
  Int lower_bound() const { return hit ? hit->value : depth_limit + 1; }
};

namespace detail {

inline EllSearch run_search(const RootSystem& rs, const Weight& lambda, PairingSide h,
                            const std::vector<Int>& t, Int limit) {
  auto test = [&t](const std::vector<Int>& mu) {
    __int128 acc = 0;
    for (std::size_t k = 0; k < mu.size(); ++k)
      acc += static_cast<__int128>(t[k]) * mu[k];
    return acc < 0;
  };
  EllSearch out;
  out.depth_limit = limit;
  auto res = orbit_bfs_first_negative(rs, lambda, test, limit);
  if (res) {
    EllResult r;
    r.value = res->depth;
    r.witness = std::move(res->witness);
    r.image = std::move(res->image);
    r.lambda = lambda;
    r.h = std::move(h);
    r.explored = res->explored;
    out.hit = std::move(r);
    out.explored = res->explored;
  }
  return out;
}

inline void require_dominant_nonzero(const char* op, const Weight& w) {
  if (!w.dominant()) throw std::invalid_argument(std::string(op) + ": weight is not dominant");
  if (w.zero()) throw std::invalid_argument(std::string(op) + ": weight is zero");
}

}  // namespace detail

/// Minimal l(w) with (w lambda, h) < 0 under the invariant form.
inline EllSearch ell_minus(const RootSystem& rs, const Weight& h, const Weight& lambda,
                           Int depthLimit = -1) {
  detail::require_dominant_nonzero("ell_minus (h)", h);
  detail::require_dominant_nonzero("ell_minus (lambda)", lambda);
  if (depthLimit < 0) depthLimit = rs.num_positive_roots();
  return detail::run_search(rs, lambda, PairingSide{h}, rs.form_vector(h), depthLimit);
}

/// Same search with h a coweight and the natural pairing as the sign test.
inline EllSearch ell_minus_coweight(const RootSystem& rs, const Coweight& h, const Weight& lambda,
                                    Int depthLimit = -1) {
  if (!h.dominant() || h.zero())
    throw std::invalid_argument("ell_minus_coweight: h must be dominant and nonzero");
  detail::require_dominant_nonzero("ell_minus_coweight (lambda)", lambda);
  if (depthLimit < 0) depthLimit = rs.num_positive_roots();
  return detail::run_search(rs, lambda, PairingSide{h}, rs.pairing_vector(h), depthLimit);
}

/// Minimal l(w) with w*lambda outside the positive-root cone.
inline EllSearch ell_exit_cone(const RootSystem& rs, const Weight& lambda, Int depthLimit = -1) {
  detail::require_dominant_nonzero("ell_exit_cone", lambda);
  if (depthLimit < 0) depthLimit = rs.num_positive_roots();
  auto test = [&rs](const std::vector<Int>& mu) {
    return !rs.in_positive_root_cone(Weight{mu});
  };
  EllSearch out;
  out.depth_limit = depthLimit;
  auto res = orbit_bfs_first_negative(rs, lambda, test, depthLimit);
  if (res) {
    EllResult r;
    r.value = res->depth;
    r.witness = std::move(res->witness);
    r.image = std::move(res->image);
    r.lambda = lambda;
    r.h = PairingSide{};
    r.explored = res->explored;
    out.hit = std::move(r);
    out.explored = res->explored;
  }
  return out;
}

/// ell^h = min_j ell^-_h(fw(j)), with the first minimizing j and its certificate.
struct EllForH {
  Int value = 0;
  int argmin_lambda = 0;  // 1-based fundamental weight index
  EllResult best;
};

namespace detail {
/// true iff h vanishes on the factor carrying node j (pairing identically zero there)
inline bool h_misses_factor(const RootSystem& rs, const std::vector<Int>& hcoords, int j) {
  const int f = rs.factor_of_node(j);
  const auto slice = rs.factor_slice(hcoords, f);
  return std::all_of(slice.begin(), slice.end(), [](Int c) { return c == 0; });
}
}  // namespace detail

inline EllForH ell_for_h(const RootSystem& rs, const Weight& h, Int depthLimit = -1) {
  detail::require_dominant_nonzero("ell_for_h", h);
  if (depthLimit < 0) depthLimit = rs.num_positive_roots();
  const auto t = rs.form_vector(h);
  EllForH out;
  bool found = false;
  for (int j = 1; j <= rs.rank(); ++j) {
    if (detail::h_misses_factor(rs, h.coords, j)) continue;
    const Int lim = found ? out.value - 1 : depthLimit;
    if (lim < 1) break;
    auto s = detail::run_search(rs, rs.fundamental_weight(j), PairingSide{h}, t, lim);
    if (s.hit && (!found || s.hit->value < out.value)) {
      out.value = s.hit->value;
      out.argmin_lambda = j;
      out.best = std::move(*s.hit);
      found = true;
    }
  }
  if (!found)
    throw std::logic_error("ell_for_h: no fundamental weight pairs negatively within limit " +
                           std::to_string(depthLimit));
  return out;
}

/// ell_Delta = min over fundamental pairs (h, lambda); products reduce to the
/// factor-wise minimum. Indices reported are global node indices.
struct EllDelta {
  Int value = 0;
  int h_index = 0;       // 1-based
  int lambda_index = 0;  // 1-based
  EllResult best;
};

inline EllDelta ell_delta(const RootSystem& rs, Int depthLimit = -1) {
  if (depthLimit < 0) depthLimit = rs.num_positive_roots();
  EllDelta out;
  bool found = false;
  for (std::size_t f = 0; f < rs.factors().size(); ++f) {
    const RootSystem frs({rs.factors()[f]});
    const int off = rs.factor_offset(static_cast<int>(f));
    for (int j = 1; j <= frs.rank(); ++j) {
      const auto t = frs.form_vector(frs.fundamental_weight(j));
      for (int k = 1; k <= frs.rank(); ++k) {
        const Int lim = found ? out.value - 1 : depthLimit;
        if (lim < 1) break;
        auto s = detail::run_search(frs, frs.fundamental_weight(k),
                                    PairingSide{frs.fundamental_weight(j)}, t, lim);
        if (s.hit && (!found || s.hit->value < out.value)) {
          out.value = s.hit->value;
          out.h_index = off + j;
          out.lambda_index = off + k;
          EllResult r = std::move(*s.hit);
          // lift the factor-local certificate into the product
          for (auto& letter : r.witness.letters) letter += off;
          r.image = rs.embed_factor_weight(r.image.coords, static_cast<int>(f));
          r.lambda = rs.embed_factor_weight(r.lambda.coords, static_cast<int>(f));
          r.h = PairingSide{rs.embed_factor_weight(frs.fundamental_weight(j).coords,
                                                   static_cast<int>(f))};
          out.best = std::move(r);
          found = true;
        }
      }
    }
  }
  if (!found)
    throw std::logic_error("ell_delta: exhausted depth limit " + std::to_string(depthLimit));
  return out;
}

/// Generators of the monoid of self-dual dominant weights: the self-dual
/// fundamental weights plus fw(j) + fw(j*) for each dual pair, per factor.
inline std::vector<Weight> selfdual_generators(const RootSystem& rs) {
  std::vector<Weight> gens;
  for (int j = 1; j <= rs.rank(); ++j) {
    const Weight fj = rs.fundamental_weight(j);
    const Weight dj = dual_weight(rs, fj);
    if (dj == fj) {
      gens.push_back(fj);
    } else {
      int k = 0;
      for (int m = 0; m < rs.rank(); ++m)
        if (dj.coords[m] == 1) k = m + 1;
      if (k > j) gens.push_back(fj + dj);
    }
  }
  return gens;
}

struct EllSd {
  Int value = 0;
  Weight h;              // attaining self-dual generator (global coordinates)
  int lambda_index = 0;  // 1-based global node index
  EllResult best;
};

inline EllSd ell_sd_delta(const RootSystem& rs, Int depthLimit = -1) {
  if (depthLimit < 0) depthLimit = rs.num_positive_roots();
  EllSd out;
  bool found = false;
  for (std::size_t f = 0; f < rs.factors().size(); ++f) {
    const RootSystem frs({rs.factors()[f]});
    const int off = rs.factor_offset(static_cast<int>(f));
    auto consider = [&](const Weight& hLocal, const EllSearch& s) {
      if (!s.hit || (found && s.hit->value >= out.value)) return;
      out.value = s.hit->value;
      out.h = rs.embed_factor_weight(hLocal.coords, static_cast<int>(f));
      EllResult r = *s.hit;
      for (auto& letter : r.witness.letters) letter += off;
      int kLocal = 0;
      for (int m = 0; m < frs.rank(); ++m)
        if (r.lambda.coords[m] == 1) kLocal = m + 1;
      out.lambda_index = off + kLocal;
      r.image = rs.embed_factor_weight(r.image.coords, static_cast<int>(f));
      r.lambda = rs.embed_factor_weight(r.lambda.coords, static_cast<int>(f));
      r.h = PairingSide{out.h};
      out.best = std::move(r);
      found = true;
    };
    if (minus_one_longest(frs)) {
      // all dominant weights are self-dual; the unrestricted minimum applies
      const Int lim = found ? out.value - 1 : depthLimit;
      if (lim < 1) continue;
      EllDelta d;
      try {
        d = ell_delta(frs, lim);
      } catch (const std::logic_error&) {
        continue;  // factor minimum cannot beat the current best
      }
      EllSearch s;
      s.hit = d.best;
      s.depth_limit = lim;
      consider(frs.fundamental_weight(d.h_index), s);
    } else {
      for (const Weight& g : selfdual_generators(frs)) {
        const auto t = frs.form_vector(g);
        for (int k = 1; k <= frs.rank(); ++k) {
          const Int lim = found ? out.value - 1 : depthLimit;
          if (lim < 1) break;
          auto s = detail::run_search(frs, frs.fundamental_weight(k), PairingSide{g}, t, lim);
          consider(g, s);
        }
      }
    }
  }
  if (!found)
    throw std::logic_error("ell_sd_delta: exhausted depth limit " + std::to_string(depthLimit));
  return out;
}

/// One dominant root checked against the height law: ell^beta equals the
/// height of beta when beta is short (or the system simply laced), and the
/// height of the coroot beta^vee in the dual system when beta is long.
struct DominantRootCheck {
  bool is_long = false;
  Weight h;
  Int expected = 0;
  Int computed = 0;
  int argmin_lambda = 0;
};

inline std::vector<DominantRootCheck> dominant_root_law(const RootSystem& rs) {
  if (!rs.is_simple())
    throw std::invalid_argument("dominant_root_law: system is not simple");
  const auto dom = rs.dominant_roots();
  const auto& d = rs.root_length_halves();
  const Int dmax = *std::max_element(d.begin(), d.end());

  auto coroot_height = [&](const Root& beta) {
    Int h = 0;
    for (int i = 0; i < rs.rank(); ++i) {
      const Int num = beta.root_coords[i] * d[i];
      if (num % dmax != 0) throw std::logic_error("coroot height: non-integral coefficient");
      h += num / dmax;
    }
    return h;
  };

  std::vector<DominantRootCheck> checks;
  auto add = [&](const Root& beta, bool lng) {
    DominantRootCheck c;
    c.is_long = lng;
    c.h = beta.as_weight();
    c.expected = (lng && dmax > 1) ? coroot_height(beta) : beta.height;
    const auto e = ell_for_h(rs, c.h);
    c.computed = e.value;
    c.argmin_lambda = e.argmin_lambda;
    checks.push_back(std::move(c));
  };
  add(dom.highest_long, true);
  if (dom.highest_short.root_coords != dom.highest_long.root_coords)
    add(dom.highest_short, false);
  return checks;
}

/// Exact ell for E8 (open in the published tables): the minimum over all 64
/// fundamental pairs; the value is this computation's own output and is only
/// sanity-checked against the known bracket [7, 29].
inline EllDelta e8_exact() {
  const RootSystem rs({SimpleType{Family::E, 8}});
  EllDelta d = ell_delta(rs);
  if (d.value < 7 || d.value > 29)
    throw std::logic_error("e8_exact: computed value " + std::to_string(d.value) +
                           " escapes the proven bracket [7, 29]");
  return d;
}

/// Re-checks an EllResult independently of the search that produced it.
inline bool ell_result_valid(const RootSystem& rs, const EllResult& r) {
  if (word_length(rs, r.witness) != r.value) return false;
  if (!(apply_word(rs, r.witness, r.lambda) == r.image)) return false;
  if (std::holds_alternative<Weight>(r.h))
    return rs.invariant_form_sign(r.image, std::get<Weight>(r.h)) < 0;
  if (std::holds_alternative<Coweight>(r.h))
    return rs.natural_pairing_sign(r.image, std::get<Coweight>(r.h)) < 0;
  return !rs.in_positive_root_cone(r.image);
}

}  // namespace weylell
