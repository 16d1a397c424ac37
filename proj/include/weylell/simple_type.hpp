#pragma once

#include <cctype>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace weylell {

using Int = std::int64_t;

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

/// One simple factor of a root system, e.g. B3 or E8 (Bourbaki numbering inside).
struct SimpleType {
  Family family;
  int rank;

  bool admissible() const {
    switch (family) {
      case Family::A: return rank >= 1;
      case Family::B: return rank >= 2;
      case Family::C: return rank >= 2;
      case Family::D: return rank >= 4;
      case Family::E: return rank == 6 || rank == 7 || rank == 8;
      case Family::F: return rank == 4;
      case Family::G: return rank == 2;
    }
    return false;
  }

  std::string name() const {
    return std::string(1, static_cast<char>(family)) + std::to_string(rank);
  }

  Int num_positive_roots() const {
    const Int n = rank;
    switch (family) {
      case Family::A: return n * (n + 1) / 2;
      case Family::B:
      case Family::C: return n * n;
      case Family::D: return n * (n - 1);
      case Family::E: return n == 6 ? 36 : (n == 7 ? 63 : 120);
      case Family::F: return 24;
      case Family::G: return 6;
    }
    return 0;
  }

  Int weyl_order() const {
    auto fact = [](Int n) { Int r = 1; for (Int i = 2; i <= n; ++i) r *= i; return r; };
    const Int n = rank;
    switch (family) {
      case Family::A: return fact(n + 1);
      case Family::B:
      case Family::C: return fact(n) << n;
      case Family::D: return fact(n) << (n - 1);
      case Family::E: return n == 6 ? 51840 : (n == 7 ? 2903040 : 696729600);
      case Family::F: return 1152;
      case Family::G: return 12;
    }
    return 0;
  }

  /// Dimension of the natural representation, for the classical families.
  Int natural_rep_dim() const {
    switch (family) {
      case Family::A: return rank + 1;
      case Family::B: return 2 * rank + 1;
      case Family::C: return 2 * rank;
      case Family::D: return 2 * rank;
      default: throw std::invalid_argument("natural_rep_dim: " + name() + " is not classical");
    }
  }

  bool is_classical() const {
    return family == Family::A || family == Family::B || family == Family::C || family == Family::D;
  }

  /// True iff the longest Weyl element acts as -1 on the weight lattice.
  bool minus_one_longest() const {
    switch (family) {
      case Family::A: return rank == 1;
      case Family::B:
      case Family::C: return true;
      case Family::D: return rank % 2 == 0;
      case Family::E: return rank != 6;
      case Family::F:
      case Family::G: return true;
    }
    return false;
  }

  bool operator==(const SimpleType&) const = default;
};

inline SimpleType make_simple_type(char familyLetter, int rank) {
  const char up = static_cast<char>(std::toupper(static_cast<unsigned char>(familyLetter)));
  if (up < 'A' || up > 'G')
    throw std::invalid_argument(std::string("unknown family letter '") + familyLetter + "'");
  SimpleType t{static_cast<Family>(up), rank};
  if (!t.admissible())
    throw std::invalid_argument("inadmissible rank for factor " + t.name());
  return t;
}

/// Parses "A5", "E8", "A2xB3xA1" (case-insensitive, factors joined by 'x').
inline std::vector<SimpleType> parse_type_string(const std::string& s) {
  std::vector<SimpleType> out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t end = pos;
    while (end < s.size() && std::tolower(static_cast<unsigned char>(s[end])) != 'x') ++end;
    const std::string tok = s.substr(pos, end - pos);
    if (tok.empty()) throw std::invalid_argument("empty factor in type string \"" + s + "\"");
    std::size_t i = 1;
    while (i < tok.size() && std::isdigit(static_cast<unsigned char>(tok[i]))) ++i;
    if (i != tok.size() || tok.size() < 2)
      throw std::invalid_argument("malformed factor \"" + tok + "\" in type string \"" + s + "\"");
    int rank = 0;
    try {
      rank = std::stoi(tok.substr(1));
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed rank in factor \"" + tok + "\"");
    }
    try {
      out.push_back(make_simple_type(tok[0], rank));
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument(std::string(e.what()) + " (token \"" + tok + "\")");
    }
    pos = (end < s.size()) ? end + 1 : end;
    if (end < s.size() && end + 1 == s.size())
      throw std::invalid_argument("trailing 'x' in type string \"" + s + "\"");
  }
  if (out.empty()) throw std::invalid_argument("empty type string");
  return out;
}

/// Canonical form: uppercase, factors in input order (order carries node indexing).
inline std::string canonical_type_string(const std::vector<SimpleType>& factors) {
  std::string s;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) s += 'x';
    s += factors[i].name();
  }
  return s;
}

}  // namespace weylell
