#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "weylell/ell.hpp"

namespace weylell {

/// A reductive group described by its semisimple root system and central
/// torus rank; everything the embedding criteria consume is derived here.
struct GroupDatum {
  std::vector<SimpleType> factors;  // may be empty (torus)
  Int torus_rank = 0;

  Int rank() const {
    Int r = torus_rank;
    for (const auto& f : factors) r += f.rank;
    return r;
  }
  Int num_positive_roots() const {
    Int p = 0;
    for (const auto& f : factors) p += f.num_positive_roots();
    return p;
  }
  /// dim g = dim t + 2 #Delta^+
  Int dim() const { return rank() + 2 * num_positive_roots(); }
  /// w0 = -1 on the full weight lattice: needs a trivial central torus and
  /// every simple factor in the -1 list.
  bool minus_one_longest() const {
    if (torus_rank != 0) return false;
    for (const auto& f : factors)
      if (!f.minus_one_longest()) return false;
    return true;
  }
};

/// Outcome of the embedding-independent (A-k) bound for sub inside ambient.
/// The bounds are sufficient conditions only: a non-positive bound means
/// "not guaranteed", never "fails".
struct AkReport {
  std::string ambient;
  GroupDatum sub;
  Int ell_delta_value = 0;
  Int ell_sd_value = 0;
  Int tilde_pos = 0;
  Int bound_general = 0;               // ell_Delta - #tildeDelta^+
  std::optional<Int> bound_sd;         // ell^sd - #tildeDelta^+, only when sub w0 = -1
  Int best_bound = 0;
  bool holds_a = false;                // guaranteed property (A)
  bool holds_m = false;                // guaranteed property (M) = (A-2)
  Int max_guaranteed_k = 0;            // 0 when nothing is guaranteed
};

inline AkReport ak_bound(const RootSystem& ambient, const GroupDatum& sub) {
  AkReport rep;
  rep.ambient = ambient.type_string();
  rep.sub = sub;
  rep.ell_delta_value = ell_delta(ambient).value;
  rep.ell_sd_value = ell_sd_delta(ambient).value;
  rep.tilde_pos = sub.num_positive_roots();
  rep.bound_general = rep.ell_delta_value - rep.tilde_pos;
  rep.best_bound = rep.bound_general;
  if (sub.minus_one_longest()) {
    rep.bound_sd = rep.ell_sd_value - rep.tilde_pos;
    rep.best_bound = std::max(rep.best_bound, *rep.bound_sd);
  }
  rep.holds_a = rep.best_bound >= 1;
  rep.holds_m = rep.best_bound >= 2;
  rep.max_guaranteed_k = std::max<Int>(rep.best_bound, 0);
  return rep;
}

/// Exact rank-1 criterion: (A) fails iff some flagged factor is A1, and (M)
/// fails iff some flagged factor is A1, A2 or B2 (C2 counts as B2).
struct Sl2Property {
  bool holds_a = true;
  bool holds_m = true;
  std::vector<int> a_violators;  // 0-based factor indices
  std::vector<int> m_violators;
};

inline Sl2Property sl2_property(const std::vector<SimpleType>& ambientFactors,
                                const std::vector<bool>& projectsNontrivially) {
  if (ambientFactors.size() != projectsNontrivially.size())
    throw std::invalid_argument("sl2_property: one flag per ambient factor required");
  Sl2Property out;
  for (std::size_t i = 0; i < ambientFactors.size(); ++i) {
    if (!projectsNontrivially[i]) continue;
    const auto& f = ambientFactors[i];
    const bool isA1 = f.family == Family::A && f.rank == 1;
    const bool isA2 = f.family == Family::A && f.rank == 2;
    const bool isB2 = (f.family == Family::B || f.family == Family::C) && f.rank == 2;
    if (isA1) out.a_violators.push_back(static_cast<int>(i));
    if (isA1 || isA2 || isB2) out.m_violators.push_back(static_cast<int>(i));
  }
  out.holds_a = out.a_violators.empty();
  out.holds_m = out.m_violators.empty();
  return out;
}

/// Membership in the rank-1 zero-eigencone: for each flagged rank-1 factor j,
/// the pairing value there must not exceed the sum over all other factors.
struct Sl2Membership {
  bool member = true;
  std::vector<int> violators;  // 0-based indices into the value list
};

inline Sl2Membership sl2_lr0_member(const std::vector<Int>& pairingValues,
                                    const std::vector<int>& rank1Flagged) {
  for (Int v : pairingValues)
    if (v < 0)
      throw std::invalid_argument(
          "sl2_lr0_member: negative pairing value (h not dominant for the chosen chamber)");
  Int total = 0;
  for (Int v : pairingValues) total += v;
  Sl2Membership out;
  for (int j : rank1Flagged) {
    if (j < 0 || j >= static_cast<int>(pairingValues.size()))
      throw std::invalid_argument("sl2_lr0_member: flagged index out of range");
    if (pairingValues[j] > total - pairingValues[j]) out.violators.push_back(j);
  }
  out.member = out.violators.empty();
  return out;
}

/// Guaranteed (A-k) level for a reductive subgroup of a classical group with
/// self-dual natural module: k = floor((m-1)/2) - #tildeDelta^+, with the
/// so5 special case k = 3 - #tildeDelta^+ (B2 and C2 both mean so5 ~ sp4).
struct ClassicalBound {
  bool applicable = true;
  std::string reason;  // set when not applicable
  Int m = 0;           // natural representation dimension
  Int k = 0;
  bool guarantees_a = false;  // (A-k) with k > 0 implies (A)
  bool guarantees_m = false;  // k >= 2
};

inline ClassicalBound classical_bound(const SimpleType& ambient, Int subPosRoots,
                                      bool naturalRepSelfDual) {
  if (!ambient.is_classical())
    throw std::invalid_argument("classical_bound: ambient " + ambient.name() +
                                " is not classical");
  ClassicalBound out;
  out.m = ambient.natural_rep_dim();
  if (ambient.family == Family::A && !naturalRepSelfDual) {
    out.applicable = false;
    out.reason = "type A ambient requires the natural module to be self-dual over the subgroup";
    return out;
  }
  const bool so5 = (ambient.family == Family::B || ambient.family == Family::C) && ambient.rank == 2;
  out.k = so5 ? (3 - subPosRoots) : ((out.m - 1) / 2 - subPosRoots);
  out.guarantees_a = out.k > 0;
  out.guarantees_m = out.k >= 2;
  return out;
}

/// Size-based convenience check: with dim V >= dim g~, rank >= 3 guarantees
/// (A) and rank >= 5 guarantees (M) for subgroups of classical groups.
struct ClassicalRankCheck {
  bool applies = false;  // dim V >= dim sub
  bool guarantees_a = false;
  bool guarantees_m = false;
};

inline ClassicalRankCheck classical_rank_check(const SimpleType& ambient, const GroupDatum& sub) {
  ClassicalRankCheck out;
  out.applies = ambient.natural_rep_dim() >= sub.dim();
  if (!out.applies) return out;
  out.guarantees_a = sub.rank() >= 3;
  out.guarantees_m = sub.rank() >= 5;
  return out;
}

/// Whether a proper subgroup of type E8 inside the given simple ambient is
/// possible, and when it is, whether property (M) is guaranteed (it always
/// is: the natural module has dimension >= 248 = dim e8, which forces
/// ell^sd >= 123 = 3 + #tildeDelta^+(E8)).
struct E8SubgroupReport {
  bool embedding_possible = false;
  bool holds_m = false;
  std::string rationale;
};

inline E8SubgroupReport e8_subgroup_report(const SimpleType& ambient) {
  constexpr Int kE8PosRoots = 120;
  constexpr Int kE8MinModuleDim = 248;  // adjoint module, the smallest nontrivial one
  E8SubgroupReport rep;
  if (!ambient.is_classical()) {
    if (ambient.family == Family::E && ambient.rank == 8) {
      rep.rationale = "no proper embedding of E8 into E8";
    } else {
      rep.rationale = "no embedding: e8 does not embed into the other exceptional algebras";
    }
    return rep;
  }
  const Int m = ambient.natural_rep_dim();
  if (m < kE8MinModuleDim) {
    rep.rationale = "no embedding: natural module dimension " + std::to_string(m) +
                    " is below the smallest nontrivial e8-module dimension " +
                    std::to_string(kE8MinModuleDim);
    return rep;
  }
  rep.embedding_possible = true;
  const Int k = (m - 1) / 2 - kE8PosRoots;
  rep.holds_m = k >= 2;
  rep.rationale = "floor((m-1)/2) - #Delta~+ = " + std::to_string(k) +
                  " >= 2, so (M) is guaranteed for every embedding";
  if (!rep.holds_m) rep.rationale = "bound too small: k = " + std::to_string(k);
  return rep;
}

}  // namespace weylell
