#pragma once

// The golden dataset behind `verify-paper`: every published value table,
// cross-table box, witness word and family law this library reproduces.
// Record ids name the data ("f4-cross/w2:rho"), and each check recomputes
// the value from scratch; nothing here feeds the computation itself.

#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "weylell/criterion.hpp"
#include "weylell/ell.hpp"
#include "weylell/ell_table.hpp"

namespace weylell::golden {

struct CheckResult {
  std::string id;
  bool pass = false;
  std::string detail;  // "expected .., got .." on failure; short note on success
};

using Report = std::vector<CheckResult>;

namespace detail {

inline void emit(Report& out, const std::string& id, bool pass, const std::string& detail) {
  out.push_back({id, pass, detail});
}

template <typename T>
inline void expect_eq(Report& out, const std::string& id, const T& expected, const T& got) {
  std::ostringstream os;
  os << "expected " << expected << ", got " << got;
  emit(out, id, expected == got, os.str());
}

inline void expect_ge(Report& out, const std::string& id, Int bound, Int got) {
  std::ostringstream os;
  os << "need >= " << bound << ", got " << got;
  emit(out, id, got >= bound, os.str());
}

/// A witness word printed in a cross-table box: stated length must be the
/// Coxeter length and the letter count, and the image must pair negatively.
inline void check_witness(Report& out, const std::string& id, const RootSystem& rs,
                          const std::string& hLabel, const std::string& lambdaLabel,
                          const std::string& word, Int statedLength) {
  const Weight h = parse_weight_label(rs, hLabel).weight;
  const Weight lam = parse_weight_label(rs, lambdaLabel).weight;
  const WeylWord w = parse_word(word, rs.rank());
  const bool lenOk = static_cast<Int>(w.size()) == statedLength &&
                     word_length(rs, w) == statedLength;
  const bool signOk = rs.invariant_form_sign(apply_word(rs, w, lam), h) < 0;
  std::ostringstream os;
  os << "word " << word << " at (h=" << hLabel << ", lambda=" << lambdaLabel << "): length "
     << word_length(rs, w) << " (stated " << statedLength << "), pairing "
     << (signOk ? "negative" : "NOT negative");
  emit(out, id, lenOk && signOk, os.str());
}

inline Int ell_box(const RootSystem& rs, const std::string& hLabel,
                   const std::string& lambdaLabel, Int limit = -1) {
  const Weight h = parse_weight_label(rs, hLabel).weight;
  const Weight lam = parse_weight_label(rs, lambdaLabel).weight;
  auto s = ell_minus(rs, h, lam, limit);
  return s.hit ? s.hit->value : -(s.depth_limit + 1);  // negative encodes ">= limit+1"
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Value tables: ell and ell^sd per simple type.
// ---------------------------------------------------------------------------

struct ValueRecord {
  std::string type;
  Int ell;
  Int ell_sd;
};

inline const std::vector<ValueRecord>& value_table() {
  static const std::vector<ValueRecord> records = [] {
    std::vector<ValueRecord> v;
    for (int n = 1; n <= 12; ++n) v.push_back({"A" + std::to_string(n), 1, (n + 2) / 2});
    for (int n = 2; n <= 8; ++n) v.push_back({"B" + std::to_string(n), n, n});
    for (int n = 2; n <= 8; ++n) v.push_back({"C" + std::to_string(n), n, n});
    for (int n = 4; n <= 12; ++n)
      v.push_back({"D" + std::to_string(n), n == 5 ? 3 : n - 1, n - 1});
    v.push_back({"E6", 5, 9});
    v.push_back({"E7", 10, 10});
    v.push_back({"F4", 8, 8});
    v.push_back({"G2", 3, 3});
    return v;
  }();
  return records;
}

inline CheckResult check_value_record(const ValueRecord& rec) {
  const RootSystem rs = RootSystem::from_string(rec.type);
  const auto d = ell_delta(rs);
  const auto sd = ell_sd_delta(rs);
  CheckResult r;
  r.id = std::string("value-table/") + rec.type;
  r.pass = d.value == rec.ell && sd.value == rec.ell_sd &&
           ell_result_valid(rs, d.best) && ell_result_valid(rs, sd.best);
  std::ostringstream os;
  os << "ell expected " << rec.ell << " got " << d.value << "; ellSd expected " << rec.ell_sd
     << " got " << sd.value;
  r.detail = os.str();
  return r;
}

inline void check_value_tables(Report& out) {
  for (const auto& rec : value_table()) out.push_back(check_value_record(rec));
}

// ---------------------------------------------------------------------------
// Witness words from the headline value tables.
// ---------------------------------------------------------------------------

inline void check_table_witnesses(Report& out) {
  using detail::check_witness;
  for (int n = 1; n <= 12; ++n) {
    const RootSystem rs = RootSystem::from_string("A" + std::to_string(n));
    check_witness(out, "value-witness/A" + std::to_string(n) + "/ell", rs, "w1", "w1", "1", 1);
    const int m = (n + 2) / 2;
    WeylWord w;
    for (int i = m; i >= 1; --i) w.letters.push_back(i);
    check_witness(out, "value-witness/A" + std::to_string(n) + "/sd", rs, "rho", "w1",
                  format_word(w, rs.rank()), m);
  }
  for (int n = 2; n <= 8; ++n)
    for (const char fam : {'B', 'C'}) {
      const std::string t = std::string(1, fam) + std::to_string(n);
      const RootSystem rs = RootSystem::from_string(t);
      WeylWord w;
      for (int i = 1; i <= n; ++i) w.letters.push_back(i);
      check_witness(out, "value-witness/" + t, rs, "w1", "w" + std::to_string(n),
                    format_word(w, rs.rank()), n);
    }
  for (int n = 4; n <= 12; ++n) {
    const std::string t = "D" + std::to_string(n);
    const RootSystem rs = RootSystem::from_string(t);
    WeylWord w;
    for (int i = 1; i <= n - 2; ++i) w.letters.push_back(i);
    w.letters.push_back(n);
    check_witness(out, "value-witness/" + t, rs, "w1", "w" + std::to_string(n),
                  format_word(w, rs.rank()), n - 1);
  }
  {
    const RootSystem d5 = RootSystem::from_string("D5");
    check_witness(out, "value-witness/D5-exception", d5, "w5", "w4", "534", 3);
  }
  {
    const RootSystem e6 = RootSystem::from_string("E6");
    check_witness(out, "value-witness/E6/ell", e6, "w1", "w6", "13456", 5);
    check_witness(out, "value-witness/E6/sd", e6, "w1", "w1+w6", "134254316", 9);
  }
  {
    const RootSystem e7 = RootSystem::from_string("E7");
    check_witness(out, "value-witness/E7", e7, "w7", "w7", "7,6,5,4,2,3,4,5,6,7", 10);
  }
  {
    const RootSystem f4 = RootSystem::from_string("F4");
    check_witness(out, "value-witness/F4", f4, "w1", "w1", "12324321", 8);
  }
  {
    const RootSystem g2 = RootSystem::from_string("G2");
    check_witness(out, "value-witness/G2/w1", g2, "w1", "w1", "121", 3);
    check_witness(out, "value-witness/G2/w2", g2, "w2", "w2", "212", 3);
  }
}

// ---------------------------------------------------------------------------
// F4 cross-table: 25 boxes, 15 printed witnesses.
// ---------------------------------------------------------------------------

struct BoxRecord {
  const char* lambda;  // row
  const char* h;       // column
  Int value;           // the printed value
  const char* word;    // nullptr when the table leaves the box to symmetry
  // Erratum fields: `corrected` is the independently verified true value when
  // the printed one is wrong (0 = printed value is correct), and `word_valid`
  // is false when the printed witness itself fails validation.
  Int corrected = 0;
  bool word_valid = true;

  Int expected() const { return corrected ? corrected : value; }
};

inline const std::vector<BoxRecord>& f4_table() {
  static const std::vector<BoxRecord> t = {
      {"w1", "w1", 8, "12342321"},   {"w1", "w2", 8, "23124321"},
      {"w1", "w3", 9, "321324321"},  {"w1", "w4", 10, "4321324321"},
      {"w1", "rho", 8, "12324321"},  {"w2", "w1", 8, nullptr},
      {"w2", "w2", 10, "2342132312"},{"w2", "w3", 10, "3213432132"},
      {"w2", "w4", 9, "432132432"},  {"w2", "rho", 11, "12342312312"},
      {"w3", "w1", 9, nullptr},      {"w3", "w2", 10, nullptr},
      {"w3", "w3", 10, "3231234323"},{"w3", "w4", 8, "43213243"},
      {"w3", "rho", 10, "1234321323"},{"w4", "w1", 10, nullptr},
      {"w4", "w2", 9, nullptr},      {"w4", "w3", 8, nullptr},
      {"w4", "w4", 8, "43213234"},   {"w4", "rho", 8, "43213234"},
      {"rho", "w1", 8, nullptr},     {"rho", "w2", 11, nullptr},
      {"rho", "w3", 10, nullptr},    {"rho", "w4", 8, nullptr},
      {"rho", "rho", 11, "12321432132"},
  };
  return t;
}

inline void check_f4_table(Report& out) {
  const RootSystem rs = RootSystem::from_string("F4");
  for (const auto& box : f4_table()) {
    const std::string id =
        std::string("f4-cross/") + box.lambda + ":" + box.h;
    detail::expect_eq(out, id, box.value, detail::ell_box(rs, box.h, box.lambda));
    if (box.word)
      detail::check_witness(out, id + "/witness", rs, box.h, box.lambda, box.word, box.value);
  }
  // every fundamental column attains the minimum 8
  for (int j = 1; j <= 4; ++j) {
    const auto e = ell_for_h(rs, rs.fundamental_weight(j));
    detail::expect_eq(out, "f4/ell-w" + std::to_string(j), Int{8}, e.value);
  }
}

// ---------------------------------------------------------------------------
// E6 cross-table: printed boxes, printed witnesses, empty boxes >= 11.
// ---------------------------------------------------------------------------

inline const std::vector<BoxRecord>& e6_table() {
  static const std::vector<BoxRecord> t = {
      {"w1", "w1", 8, "13452431"},     {"w1", "w2", 11, "24354265431"},
      {"w1", "w3", 7, "3425431"},      {"w1", "w4", 10, "4354265431"},
      {"w1", "w5", 8, "54265431"},     {"w1", "w6", 5, "65431"},
      {"w1", "rho", 9, "134265431"},   {"w2", "w1", 11, nullptr},
      {"w2", "w2", 11, "24315436542"}, {"w2", "w3", 11, "31425436542"},
      {"w2", "w4", 11, "42315436542"}, {"w2", "w5", 11, nullptr},
      {"w2", "w6", 11, nullptr},       {"w2", "rho", 11, nullptr},
      {"w3", "w1", 7, nullptr},        {"w3", "w2", 11, nullptr},
      // documented errata: the printed 10/10/9 fail independent verification
      // (three implementations agree on 9/9/8; the printed word for the first
      // box is unreduced and pairs positively, so it never certified the box)
      {"w3", "w5", 10, "5423165143", 9, false},
      {"w3", "w6", 8, nullptr},
      {"w4", "w1", 10, nullptr},       {"w4", "w2", 11, nullptr},
      {"w4", "w6", 10, nullptr},       {"w5", "w1", 8, nullptr},
      {"w5", "w2", 11, nullptr},       {"w5", "w3", 10, nullptr, 9},
      {"w5", "w6", 7, nullptr},        {"w6", "w1", 5, nullptr},
      {"w6", "w2", 11, nullptr},       {"w6", "w3", 9, nullptr, 8},
      {"w6", "w4", 10, nullptr},       {"w6", "w5", 7, nullptr},
      {"w6", "w6", 8, nullptr},        {"w6", "rho", 9, nullptr},
      {"rho", "w1", 9, "134254316"},   {"rho", "w2", 11, nullptr},
      {"rho", "w6", 9, "654231435"},   {"w1+w6", "w1", 9, "134254316"},
      {"w1+w6", "w6", 9, "654321456"}, {"w3+w5", "w1", 9, "134254365"},
      {"w3+w5", "w6", 9, "654231435"},
  };
  return t;
}

inline constexpr Int kE6TableLimit = 11;

inline std::vector<std::pair<std::string, std::string>> e6_empty_boxes() {
  const std::vector<std::string> rows = {"w1", "w2", "w3", "w4", "w5", "w6",
                                         "rho", "w1+w6", "w3+w5"};
  const std::vector<std::string> cols = {"w1", "w2", "w3", "w4", "w5", "w6", "rho"};
  std::vector<std::pair<std::string, std::string>> empty;
  for (const auto& r : rows)
    for (const auto& c : cols) {
      bool printed = false;
      for (const auto& box : e6_table())
        if (r == box.lambda && c == box.h) printed = true;
      if (!printed) empty.emplace_back(r, c);
    }
  return empty;
}

inline void check_e6_table(Report& out) {
  const RootSystem rs = RootSystem::from_string("E6");
  for (const auto& box : e6_table()) {
    const std::string id = std::string("e6-cross/") + box.lambda + ":" + box.h;
    const Int got = detail::ell_box(rs, box.h, box.lambda, kE6TableLimit);
    if (box.corrected) {
      std::ostringstream os;
      os << "documented erratum: printed " << box.value << ", verified value " << box.corrected
         << ", got " << got;
      detail::emit(out, id + "/erratum", got == box.corrected, os.str());
    } else {
      detail::expect_eq(out, id, box.value, got);
    }
    if (box.word && box.word_valid) {
      detail::check_witness(out, id + "/witness", rs, box.h, box.lambda, box.word, box.value);
    } else if (box.word) {
      // pin the forensics: the printed word must remain demonstrably invalid
      const WeylWord w = parse_word(box.word, rs.rank());
      const Weight lam = parse_weight_label(rs, box.lambda).weight;
      const Weight h = parse_weight_label(rs, box.h).weight;
      const bool reduced = word_length(rs, w) == static_cast<Int>(w.size());
      const bool negative = rs.invariant_form_sign(apply_word(rs, w, lam), h) < 0;
      detail::emit(out, id + "/witness-erratum", !reduced && !negative,
                   "printed word " + std::string(box.word) +
                       " is unreduced and pairs nonnegatively (documented erratum)");
    }
  }
  for (const auto& [row, col] : e6_empty_boxes()) {
    const Int got = detail::ell_box(rs, col, row, kE6TableLimit);
    // a depth-11 search either finds a value >= 11 or proves the bound >= 12
    detail::expect_ge(out, "e6-empty/" + row + ":" + col, kE6TableLimit, got < 0 ? -got : got);
  }
  {  // ell^sd attainment data
    const auto sd = ell_sd_delta(rs);
    detail::expect_eq(out, "e6/sd-value", Int{9}, sd.value);
    std::vector<std::vector<Int>> gens;
    for (const auto& g : selfdual_generators(rs)) gens.push_back(g.coords);
    std::sort(gens.begin(), gens.end());
    const std::vector<std::vector<Int>> expected = {{0, 0, 0, 1, 0, 0},
                                                    {0, 0, 1, 0, 1, 0},
                                                    {0, 1, 0, 0, 0, 0},
                                                    {1, 0, 0, 0, 0, 1}};
    detail::emit(out, "e6/sd-generators", gens == expected, "w2, w4, w1+w6, w3+w5");
  }
}

// ---------------------------------------------------------------------------
// E7 and E8 records.
// ---------------------------------------------------------------------------

inline void check_e7(Report& out) {
  const RootSystem rs = RootSystem::from_string("E7");
  const auto d = ell_delta(rs);
  detail::expect_eq(out, "e7/ell", Int{10}, d.value);
  detail::emit(out, "e7/ell-attained-at-w7",
               d.h_index == 7 && d.lambda_index == 7 && ell_result_valid(rs, d.best),
               "attained at (w7, w7) with a valid witness");
  const auto dom = rs.dominant_roots();
  detail::emit(out, "e7/theta-is-w1",
               dom.highest_long.omega_coords == rs.fundamental_weight(1).coords,
               "the highest root is w1");
  detail::expect_eq(out, "e7/theta-height", Int{17}, dom.highest_long.height);
  for (int j = 1; j <= 7; ++j)
    detail::expect_eq(out, "e7/ell-w1-at-w" + std::to_string(j), Int{17},
                      detail::ell_box(rs, "w1", "w" + std::to_string(j)));
}

inline void check_e8_basic(Report& out) {
  const RootSystem rs = RootSystem::from_string("E8");
  detail::expect_eq(out, "e8/num-positive-roots", Int{120}, rs.num_positive_roots());
  detail::expect_eq(out, "e8/dim", Int{248}, Int{8 + 2 * rs.num_positive_roots()});
  const auto dom = rs.dominant_roots();
  detail::emit(out, "e8/theta-is-w8",
               dom.highest_long.omega_coords == rs.fundamental_weight(8).coords, "theta = w8");
  detail::expect_eq(out, "e8/theta-height", Int{29}, dom.highest_long.height);
  for (int k = 1; k <= 8; ++k)
    detail::expect_eq(out, "e8/ell-w8-at-w" + std::to_string(k), Int{29},
                      detail::ell_box(rs, "w8", "w" + std::to_string(k)));
}

/// Opt-in record: the exact E8 value. Only the published bracket [7, 29] and
/// internal consistency are asserted; the value itself is this computation's
/// own output and is reported, not compared to a printed number.
inline void check_e8_exact(Report& out) {
  const auto d = e8_exact();
  const RootSystem rs = RootSystem::from_string("E8");
  std::ostringstream os;
  os << "exact ell_E8 = " << d.value << ", attained at (h=w" << d.h_index << ", lambda=w"
     << d.lambda_index << "), witness " << format_word(d.best.witness, 8);
  detail::emit(out, "e8-exact/bounds", d.value >= 7 && d.value <= 29, os.str());
  detail::emit(out, "e8-exact/witness-valid", ell_result_valid(rs, d.best), "recheckable");
  const Int viaW8 = detail::ell_box(rs, "w8", "w1");
  detail::emit(out, "e8-exact/le-upper", d.value <= viaW8,
               "minimum over all pairs cannot exceed one pair");
}

// ---------------------------------------------------------------------------
// Family propositions (A_n, B_n, C_n, D_n, G2) and structural facts.
// ---------------------------------------------------------------------------

inline void check_a_family(Report& out) {
  for (int n : {3, 5, 6, 8}) {
    const std::string t = "A" + std::to_string(n);
    const RootSystem rs = RootSystem::from_string(t);
    bool chainOk = true;
    for (int j = 1; j <= n; ++j)
      chainOk = chainOk && detail::ell_box(rs, "w" + std::to_string(j), "w1") == j;
    detail::emit(out, "an/ell-w1-chain/" + t, chainOk, "ell^-_{w1}(wj) = j for all j");
    bool halfOk = true;
    for (int j = 1; j <= (n + 1) / 2; ++j) {
      const auto e = ell_for_h(rs, rs.fundamental_weight(j));
      WeylWord w;  // rj ... r1 attains it at lambda = w1
      for (int i = j; i >= 1; --i) w.letters.push_back(i);
      const Weight img = apply_word(rs, w, rs.fundamental_weight(1));
      halfOk = halfOk && e.value == j && word_length(rs, w) == j &&
               rs.invariant_form_sign(img, rs.fundamental_weight(j)) < 0;
    }
    detail::emit(out, "an/ell-wj/" + t, halfOk,
                 "ell^{wj} = j for j <= (n+1)/2, certified by rj..r1 at w1");
    detail::expect_eq(out, "an/rho/" + t, Int{(n + 2) / 2}, ell_for_h(rs, rs.rho()).value);
    // self-dual h: value n+1-j for the j-th dual-pair generator
    bool sdOk = true;
    const auto gens = selfdual_generators(rs);
    for (std::size_t g = 0; g < gens.size(); ++g) {
      const int j = static_cast<int>(g) + 1;
      sdOk = sdOk && ell_for_h(rs, gens[g]).value == n + 1 - j;
    }
    detail::emit(out, "an/selfdual/" + t, sdOk, "ell^h = n+1-j_h on dual-pair generators");
    // highest root
    const auto dom = rs.dominant_roots();
    detail::expect_eq(out, "an/theta/" + t, Int{n}, ell_for_h(rs, dom.highest_long.as_weight()).value);
  }
}

inline void check_bc_family(Report& out) {
  for (int n = 2; n <= 8; ++n) {
    const std::string tc = "C" + std::to_string(n);
    const RootSystem rs = RootSystem::from_string(tc);
    const auto e1 = ell_for_h(rs, rs.fundamental_weight(1));
    detail::emit(out, "cn/ell-w1/" + tc, e1.value == n && e1.argmin_lambda == n,
                 "ell^{w1} = n at lambda = wn");
    bool upper = true;
    for (int j = 2; j <= n; ++j)
      upper = upper && ell_for_h(rs, rs.fundamental_weight(j)).value == 2 * n - j;
    detail::emit(out, "cn/ell-wj/" + tc, upper, "ell^{wj} = 2n-j for j >= 2");
    const auto er = ell_for_h(rs, rs.rho());
    detail::emit(out, "cn/rho/" + tc, er.value == n && er.argmin_lambda == 1,
                 "ell^{rho} = n at lambda = w1");
    {  // attaining elements: r1...rn at (w1, wn); rj..rn r(n-1)..r1 at (wj, w1); rn..r1 at (rho, w1)
      WeylWord wn, wrho;
      for (int i = 1; i <= n; ++i) wn.letters.push_back(i);
      for (int i = n; i >= 1; --i) wrho.letters.push_back(i);
      detail::check_witness(out, "cn/w1-witness/" + tc, rs, "w1", "w" + std::to_string(n),
                            format_word(wn, rs.rank()), n);
      detail::check_witness(out, "cn/rho-witness/" + tc, rs, "rho", "w1",
                            format_word(wrho, rs.rank()), n);
      bool upperWitness = true;
      for (int j = 2; j <= n; ++j) {
        WeylWord w;
        for (int i = j; i <= n; ++i) w.letters.push_back(i);
        for (int i = n - 1; i >= 1; --i) w.letters.push_back(i);
        const Weight img = apply_word(rs, w, rs.fundamental_weight(1));
        upperWitness = upperWitness && word_length(rs, w) == 2 * n - j &&
                       rs.invariant_form_sign(img, rs.fundamental_weight(j)) < 0;
      }
      detail::emit(out, "cn/wj-witnesses/" + tc, upperWitness,
                   "rj..rn r(n-1)..r1 certifies ell^-_{wj}(w1) = 2n-j");
    }
    // spinor-side closed form
    bool spinor = true;
    for (int j = 2; j <= n; ++j) {
      const Int i = (j + 2) / 2;
      spinor = spinor && detail::ell_box(rs, "w" + std::to_string(n),
                                         "w" + std::to_string(j)) == (n - j) * i + i * (i + 1) / 2;
    }
    detail::emit(out, "cn/ell-wn-row/" + tc, spinor,
                 "ell^-_{wn}(wj) = (n-j)i + i(i+1)/2 with i = floor((j+2)/2)");

    // B_n carries the same per-weight profile as C_n
    const std::string tb = "B" + std::to_string(n);
    const RootSystem rb = RootSystem::from_string(tb);
    bool same = true;
    for (int j = 1; j <= n; ++j)
      same = same && ell_for_h(rb, rb.fundamental_weight(j)).value ==
                         ell_for_h(rs, rs.fundamental_weight(j)).value;
    detail::emit(out, "bn/profile-matches-cn/" + tb, same, "ell^{wj}(Bn) = ell^{wj}(Cn)");
  }
}

inline void check_d_family(Report& out) {
  for (int n = 4; n <= 12; ++n) {
    const std::string t = "D" + std::to_string(n);
    const RootSystem rs = RootSystem::from_string(t);
    auto profile = [&](int j) { return ell_for_h(rs, rs.fundamental_weight(j)).value; };
    detail::expect_eq(out, "dn/ell-w1/" + t, Int{n - 1}, profile(1));
    detail::expect_eq(out, "dn/ell-w2/" + t, Int{2 * n - 3}, profile(2));
    detail::expect_eq(out, "dn/ell-w3/" + t, Int{2 * n - 5}, profile(3));
    if (n >= 6) {
      bool mid = true;
      for (int j = 4; j <= n - 2; ++j) mid = mid && profile(j) == 2 * n - j - 1;
      detail::emit(out, "dn/ell-mid/" + t, mid, "ell^{wj} = 2n-j-1 for 4 <= j <= n-2");
    }
    if (n == 5) {
      detail::expect_eq(out, "dn/d5-spinors/" + t, Int{3}, profile(5));
      detail::expect_eq(out, "dn/d5-spinors4/" + t, Int{3}, profile(4));
    } else {
      detail::emit(out, "dn/spinors/" + t, profile(n - 1) == n - 1 && profile(n) == n - 1,
                   "ell^{w(n-1)} = ell^{wn} = n-1");
    }
    detail::expect_eq(out, "dn/rho/" + t, Int{n}, ell_for_h(rs, rs.rho()).value);
    if (n >= 5) {
      Weight h = rs.fundamental_weight(n - 1) + rs.fundamental_weight(n);
      detail::expect_eq(out, "dn/spinor-sum/" + t, Int{n}, ell_for_h(rs, h).value);
    }
    // witnesses from the proposition: r1..r(n-1) and r1..r(n-2) rn against w1
    {
      WeylWord wa, wb;
      for (int i = 1; i <= n - 1; ++i) wa.letters.push_back(i);
      for (int i = 1; i <= n - 2; ++i) wb.letters.push_back(i);
      wb.letters.push_back(n);
      detail::check_witness(out, "dn/w1-witness-a/" + t, rs, "w1",
                            "w" + std::to_string(n - 1), format_word(wa, rs.rank()), n - 1);
      detail::check_witness(out, "dn/w1-witness-b/" + t, rs, "w1", "w" + std::to_string(n),
                            format_word(wb, rs.rank()), n - 1);
    }
    // rho witnesses rn..r1 and r(n-1) rn r(n-2)..r1
    {
      WeylWord wa, wb;
      for (int i = n; i >= 1; --i) wa.letters.push_back(i);
      wb.letters.push_back(n - 1);
      wb.letters.push_back(n);
      for (int i = n - 2; i >= 1; --i) wb.letters.push_back(i);
      detail::check_witness(out, "dn/rho-witness-a/" + t, rs, "rho", "w1",
                            format_word(wa, rs.rank()), n);
      detail::check_witness(out, "dn/rho-witness-b/" + t, rs, "rho", "w1",
                            format_word(wb, rs.rank()), n);
    }
    {  // w_{j,1} = rj..r(n-1) rn r(n-2)..r1 certifies ell^-_{wj}(w1) = 2n-j-1
      bool ok = true;
      for (int j = 2; j <= n - 2; ++j) {
        WeylWord w;
        for (int i = j; i <= n - 1; ++i) w.letters.push_back(i);
        w.letters.push_back(n);
        for (int i = n - 2; i >= 1; --i) w.letters.push_back(i);
        const Weight img = apply_word(rs, w, rs.fundamental_weight(1));
        ok = ok && word_length(rs, w) == 2 * n - j - 1 &&
             rs.invariant_form_sign(img, rs.fundamental_weight(j)) < 0;
      }
      detail::emit(out, "dn/wj1-witnesses/" + t, ok,
                   "rj..r(n-1) rn r(n-2)..r1 certifies ell^-_{wj}(w1) = 2n-j-1");
    }
  }
  {  // D5 detail boxes
    const RootSystem d5 = RootSystem::from_string("D5");
    detail::expect_eq(out, "d5/box-w5-w1", Int{4}, detail::ell_box(d5, "w5", "w1"));
    detail::check_witness(out, "d5/box-w5-w1/witness", d5, "w5", "w1", "5321", 4);
    detail::expect_eq(out, "d5/box-w5-w5", Int{6}, detail::ell_box(d5, "w5", "w5"));
    detail::check_witness(out, "d5/box-w5-w5/witness", d5, "w5", "w5", "534235", 6);
    detail::expect_eq(out, "d5/box-rho-w5", Int{6}, detail::ell_box(d5, "rho", "w5"));
    detail::check_witness(out, "d5/box-rho-w5/witness-a", d5, "rho", "w5", "341235", 6);
    detail::check_witness(out, "d5/box-rho-w5/witness-b", d5, "rho", "w5", "534235", 6);
    auto gens = selfdual_generators(d5);
    const bool ok = gens.size() == 4 && gens[3].coords == std::vector<Int>{0, 0, 0, 1, 1};
    detail::emit(out, "d5/sd-generators", ok, "w1, w2, w3, w4+w5");
  }
}

inline void check_g2(Report& out) {
  const RootSystem rs = RootSystem::from_string("G2");
  // every strictly dominant h already reaches the minimum 3
  bool all3 = true;
  for (Int a = 1; a <= 3; ++a)
    for (Int b = 1; b <= 3; ++b) all3 = all3 && ell_for_h(rs, Weight{{a, b}}).value == 3;
  all3 = all3 && ell_for_h(rs, Weight{{1, 0}}).value == 3 &&
         ell_for_h(rs, Weight{{0, 1}}).value == 3;
  detail::emit(out, "g2/ell-h-always-3", all3, "ell^h = 3 for every sampled dominant h");
  // the only values of ell^-_h(lambda) are 3 and 4
  bool valueSet = true;
  for (Int a = 0; a <= 3; ++a)
    for (Int b = 0; b <= 3; ++b)
      for (Int c = 0; c <= 3; ++c)
        for (Int d = 0; d <= 3; ++d) {
          if ((a == 0 && b == 0) || (c == 0 && d == 0)) continue;
          const Int v = ell_minus(rs, Weight{{a, b}}, Weight{{c, d}}).hit->value;
          valueSet = valueSet && (v == 3 || v == 4);
        }
  detail::emit(out, "g2/value-set", valueSet, "all ell^-_h(lambda) values lie in {3, 4}");
}

inline void check_duality_and_sd(Report& out) {
  const RootSystem e6 = RootSystem::from_string("E6");
  const bool dualOk = dual_weight(e6, e6.fundamental_weight(1)) == e6.fundamental_weight(6) &&
                      dual_weight(e6, e6.fundamental_weight(2)) == e6.fundamental_weight(2) &&
                      dual_weight(e6, e6.fundamental_weight(3)) == e6.fundamental_weight(5) &&
                      dual_weight(e6, e6.fundamental_weight(4)) == e6.fundamental_weight(4);
  detail::emit(out, "duality/E6", dualOk, "w1* = w6, w2* = w2, w3* = w5, w4* = w4");

  bool minusList = true;
  for (const auto& t : {"B2", "B5", "C3", "C8", "D4", "D6", "D12", "E7", "E8", "F4", "G2"})
    minusList = minusList && minus_one_longest(RootSystem::from_string(t));
  for (const auto& t : {"A2", "A5", "D5", "D7", "E6"})
    minusList = minusList && !minus_one_longest(RootSystem::from_string(t));
  detail::emit(out, "duality/minus-one-list", minusList,
               "w0 = -1 exactly for Bn, Cn, D2n, E7, E8, F4, G2 (and A1)");
}

inline void check_dominant_root_law(Report& out) {
  std::vector<std::string> types;
  for (int n = 1; n <= 8; ++n) types.push_back("A" + std::to_string(n));
  for (int n = 2; n <= 8; ++n) types.push_back("B" + std::to_string(n));
  for (int n = 2; n <= 8; ++n) types.push_back("C" + std::to_string(n));
  for (int n = 4; n <= 8; ++n) types.push_back("D" + std::to_string(n));
  types.insert(types.end(), {"E6", "E7", "E8", "F4", "G2"});
  for (const auto& t : types) {
    const RootSystem rs = RootSystem::from_string(t);
    bool ok = true;
    std::ostringstream os;
    for (const auto& c : dominant_root_law(rs)) {
      ok = ok && c.expected == c.computed;
      os << (c.is_long ? "long" : "short") << ": expected " << c.expected << " got "
         << c.computed << "; ";
    }
    detail::emit(out, "dominant-root-law/" + t, ok, os.str());
  }
}

inline void check_criteria(Report& out) {
  // rank-1 subgroup reports across all simple ambients of rank <= 8
  std::vector<std::string> ambients;
  for (int n = 1; n <= 8; ++n) ambients.push_back("A" + std::to_string(n));
  for (int n = 2; n <= 8; ++n) ambients.push_back("B" + std::to_string(n));
  for (int n = 2; n <= 8; ++n) ambients.push_back("C" + std::to_string(n));
  for (int n = 4; n <= 8; ++n) ambients.push_back("D" + std::to_string(n));
  ambients.insert(ambients.end(), {"E6", "E7", "E8", "F4", "G2"});
  const GroupDatum a1{parse_type_string("A1"), 0};
  bool ok = true;
  for (const auto& t : ambients) {
    const RootSystem rs = RootSystem::from_string(t);
    const auto rep = ak_bound(rs, a1);
    const auto exact = sl2_property(rs.factors(), {true});
    const bool expectA = t != "A1";
    const bool expectM = t != "A1" && t != "A2" && t != "B2" && t != "C2";
    ok = ok && rep.holds_a == expectA && exact.holds_a == expectA && exact.holds_m == expectM;
    // the sufficient bound may only claim (M) when the exact criterion agrees
    ok = ok && (!rep.holds_m || expectM);
  }
  detail::emit(out, "criteria/sl2-across-rank-le-8", ok,
               "(A) guaranteed except ambient A1; (M) exceptions A1, A2, B2");

  const auto torus = ak_bound(RootSystem::from_string("C3"), GroupDatum{{}, 2});
  detail::expect_eq(out, "criteria/torus-max-k", Int{3}, torus.max_guaranteed_k);
  detail::expect_eq(out, "criteria/classical-b2", Int{2},
                    classical_bound(make_simple_type('B', 2), 1, true).k);
  detail::emit(out, "criteria/e8-subgroup-d124",
               e8_subgroup_report(make_simple_type('D', 124)).holds_m,
               "property (M) for E8 inside D124");
}

/// The full golden run. The exact-E8 record is opt-in: it is the one record
/// whose runtime dominates everything else.
inline Report verify_paper(bool includeE8Exact = false) {
  Report out;
  check_value_tables(out);
  check_table_witnesses(out);
  check_f4_table(out);
  check_e6_table(out);
  check_e7(out);
  check_e8_basic(out);
  check_a_family(out);
  check_bc_family(out);
  check_d_family(out);
  check_g2(out);
  check_duality_and_sd(out);
  check_dominant_root_law(out);
  check_criteria(out);
  if (includeE8Exact) check_e8_exact(out);
  return out;
}

}  // namespace weylell::golden
