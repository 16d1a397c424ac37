#pragma once

#include <string>
#include <vector>

#include "weylell/ell.hpp"

namespace weylell {

struct LabeledWeight {
  std::string label;
  Weight weight;
};

/// Parses a weight literal: named shortcuts w1..wn and rho, sums of named
/// shortcuts ("w1+w6"), or comma-separated omega-coordinates ("1,0,2").
inline LabeledWeight parse_weight_label(const RootSystem& rs, const std::string& text) {
  auto lower = text;
  for (auto& ch : lower) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  auto named = [&rs](const std::string& tok) -> Weight {
    if (tok == "rho") return rs.rho();
    if (tok.size() >= 2 && tok[0] == 'w') {
      const int j = std::stoi(tok.substr(1));
      return rs.fundamental_weight(j);
    }
    throw std::invalid_argument("unknown weight name \"" + tok + "\"");
  };
  if (lower.find('+') != std::string::npos) {
    Weight acc = rs.zero_weight();
    std::size_t pos = 0;
    while (pos <= lower.size()) {
      const std::size_t nxt = lower.find('+', pos);
      const std::string tok = lower.substr(pos, nxt == std::string::npos ? nxt : nxt - pos);
      acc = acc + named(tok);
      if (nxt == std::string::npos) break;
      pos = nxt + 1;
    }
    return {lower, acc};
  }
  if (lower == "rho" || (lower.size() >= 2 && lower[0] == 'w' &&
                         std::isdigit(static_cast<unsigned char>(lower[1]))))
    return {lower, named(lower)};
  // raw coordinates
  Weight w{std::vector<Int>{}};
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) w.coords.push_back(std::stoll(tok));
  if (static_cast<int>(w.coords.size()) != rs.rank())
    throw std::invalid_argument("weight literal \"" + text + "\" has " +
                                std::to_string(w.coords.size()) + " coordinates, expected " +
                                std::to_string(rs.rank()));
  return {text, w};
}

struct EllTableCell {
  bool exact = false;
  Int value = 0;  // the value when exact, otherwise a lower bound (limit + 1)
  WeylWord witness;
};

struct EllTable {
  std::vector<LabeledWeight> rows;  // lambda labels
  std::vector<LabeledWeight> cols;  // h labels
  std::vector<std::vector<EllTableCell>> cells;
  Int limit = 0;
};

/// Cross-table of ell^-_h(lambda) over the given rows (lambda) and columns (h),
/// each search capped at `limit`; exhausted cells carry the ">= limit+1" bound.
inline EllTable ell_table(const RootSystem& rs, std::vector<LabeledWeight> rows,
                          std::vector<LabeledWeight> cols, Int limit) {
  EllTable t;
  t.limit = limit;
  t.rows = std::move(rows);
  t.cols = std::move(cols);
  t.cells.assign(t.rows.size(), std::vector<EllTableCell>(t.cols.size()));
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    for (std::size_t j = 0; j < t.cols.size(); ++j) {
      auto s = ell_minus(rs, t.cols[j].weight, t.rows[i].weight, limit);
      EllTableCell cell;
      if (s.hit) {
        cell.exact = true;
        cell.value = s.hit->value;
        cell.witness = s.hit->witness;
      } else {
        cell.exact = false;
        cell.value = limit + 1;
      }
      t.cells[i][j] = std::move(cell);
    }
  }
  return t;
}

inline std::string render_cell(const EllTableCell& c) {
  return c.exact ? std::to_string(c.value) : (">=" + std::to_string(c.value));
}

/// Tab-separated rendering; ">= n" cells use ">=n".
inline std::string render_table_tsv(const EllTable& t) {
  std::string out = "lambda\\h";
  for (const auto& c : t.cols) out += "\t" + c.label;
  out += "\n";
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    out += t.rows[i].label;
    for (std::size_t j = 0; j < t.cols.size(); ++j) out += "\t" + render_cell(t.cells[i][j]);
    out += "\n";
  }
  return out;
}

}  // namespace weylell
