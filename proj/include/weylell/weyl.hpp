#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "weylell/root_system.hpp"

namespace weylell {

/// A word in the simple reflections, generator indices 1..rank. As in
/// w = r_{j_1} ... r_{j_l}, the rightmost letter acts first on weights.
struct WeylWord {
  std::vector<int> letters;

  std::size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }
  bool operator==(const WeylWord&) const = default;
};

/// Text format: digit string for rank <= 9 ("12342321"), comma-separated
/// integers otherwise ("7,6,5,4,2,3,4,5,6,7"). Both forms parse for any rank.
inline WeylWord parse_word(const std::string& text, int rank) {
  WeylWord w;
  if (text.empty()) return w;
  if (text.find(',') != std::string::npos) {
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      if (tok.empty()) throw std::invalid_argument("empty letter in word \"" + text + "\"");
      w.letters.push_back(std::stoi(tok));
    }
  } else {
    for (char ch : text) {
      if (!std::isdigit(static_cast<unsigned char>(ch)))
        throw std::invalid_argument("bad character in word \"" + text + "\"");
      w.letters.push_back(ch - '0');
    }
  }
  for (int j : w.letters)
    if (j < 1 || j > rank)
      throw std::invalid_argument("word letter " + std::to_string(j) + " outside 1.." +
                                  std::to_string(rank));
  return w;
}

inline std::string format_word(const WeylWord& w, int rank) {
  std::string s;
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    if (rank <= 9) {
      s += static_cast<char>('0' + w.letters[i]);
    } else {
      if (i) s += ',';
      s += std::to_string(w.letters[i]);
    }
  }
  return s;
}

/// (r_i lambda)_k = lambda_k - lambda_i * A[k][i]; an involution.
inline Weight reflect(const RootSystem& rs, int i, const Weight& lambda) {
  if (i < 1 || i > rs.rank())
    throw std::out_of_range("reflection index " + std::to_string(i) + " outside 1.." +
                            std::to_string(rs.rank()));
  if (static_cast<int>(lambda.coords.size()) != rs.rank())
    throw std::invalid_argument("reflect: weight rank mismatch");
  Weight out = lambda;
  const Int li = lambda.coords[i - 1];
  if (li == 0) return out;
  const auto& A = rs.cartan();
  for (int k = 0; k < rs.rank(); ++k) out.coords[k] -= li * A[k][i - 1];
  return out;
}

inline Weight apply_word(const RootSystem& rs, const WeylWord& w, const Weight& lambda) {
  Weight cur = lambda;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) cur = reflect(rs, *it, cur);
  return cur;
}

/// Coxeter length of the element represented by w (not the letter count):
/// the number of positive roots sent to negative roots.
inline Int word_length(const RootSystem& rs, const WeylWord& w) {
  const auto& A = rs.cartan();
  const int n = rs.rank();
  Int count = 0;
  std::vector<Int> c(n);
  for (const auto& root : rs.positive_roots()) {
    c = root.root_coords;
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
      const int i = *it - 1;
      Int s = 0;
      for (int j = 0; j < n; ++j) s += A[i][j] * c[j];
      c[i] -= s;
    }
    for (int j = 0; j < n; ++j) {
      if (c[j] < 0) { ++count; break; }
      if (c[j] > 0) break;
    }
  }
  return count;
}

/// w0*lambda for dominant lambda (the antidominant orbit element) plus a word
/// reaching it, by greedy descent on the smallest positive coordinate.
inline std::pair<Weight, WeylWord> antidominant(const RootSystem& rs, const Weight& lambda) {
  if (static_cast<int>(lambda.coords.size()) != rs.rank())
    throw std::invalid_argument("antidominant: weight rank mismatch");
  if (!lambda.dominant())
    throw std::invalid_argument("antidominant: weight is not dominant");
  Weight cur = lambda;
  std::vector<int> applied;  // in application order
  for (;;) {
    int i = 0;
    while (i < rs.rank() && cur.coords[i] <= 0) ++i;
    if (i == rs.rank()) break;
    cur = reflect(rs, i + 1, cur);
    applied.push_back(i + 1);
  }
  WeylWord w;
  w.letters.assign(applied.rbegin(), applied.rend());
  return {cur, w};
}

namespace detail {
/// Permutation p with -w0 * fw(j) = fw(p(j)), 1-based.
inline std::vector<int> duality_permutation(const RootSystem& rs) {
  std::vector<int> p(rs.rank() + 1, 0);
  for (int j = 1; j <= rs.rank(); ++j) {
    const Weight anti = antidominant(rs, rs.fundamental_weight(j)).first;
    int k = 0;
    for (int m = 0; m < rs.rank(); ++m) {
      if (anti.coords[m] == -1 && k == 0) k = m + 1;
      else if (anti.coords[m] != 0) throw std::logic_error("duality image is not -fw(k)");
    }
    p[j] = k;
  }
  return p;
}
}  // namespace detail

/// lambda* = -w0 * lambda; permutes fundamental weights, dominant for dominant input.
inline Weight dual_weight(const RootSystem& rs, const Weight& lambda) {
  static thread_local std::unordered_map<std::string, std::vector<int>> cache;
  auto [it, inserted] = cache.try_emplace(rs.type_string());
  if (inserted) it->second = detail::duality_permutation(rs);
  const auto& p = it->second;
  Weight out = rs.zero_weight();
  for (int j = 1; j <= rs.rank(); ++j) out.coords[p[j] - 1] = lambda.coords[j - 1];
  return out;
}

inline Coweight dual_coweight(const RootSystem& rs, const Coweight& h) {
  Weight img = dual_weight(rs, Weight{h.coords});
  return Coweight{img.coords};
}

/// True iff dual_weight is the identity on all fundamental weights (w0 = -1).
inline bool minus_one_longest(const RootSystem& rs) {
  for (int j = 1; j <= rs.rank(); ++j)
    if (dual_weight(rs, rs.fundamental_weight(j)) != rs.fundamental_weight(j)) return false;
  return true;
}

struct OrbitSearchResult {
  Int depth = 0;
  WeylWord witness;
  Weight image;
  Int explored = 0;
};

namespace detail {

struct CoordKeyHash {
  std::size_t operator()(const std::vector<std::int16_t>& v) const {
    std::uint64_t h = 1469598103934665603ULL;  // FNV-1a over the raw coordinates
    for (std::int16_t x : v) {
      h ^= static_cast<std::uint16_t>(x);
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

inline std::vector<std::int16_t> to_key(const std::vector<Int>& coords) {
  std::vector<std::int16_t> k(coords.size());
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i] > std::numeric_limits<std::int16_t>::max() ||
        coords[i] < std::numeric_limits<std::int16_t>::min())
      throw std::overflow_error("orbit search: weight coordinate out of int16 range");
    k[i] = static_cast<std::int16_t>(coords[i]);
  }
  return k;
}

}  // namespace detail

/// Hard ceiling on visited orbit points. The largest orbit any supported
/// computation touches is E8's 483840; the ceiling turns a hopeless search
/// (say, a spinor orbit of D30) into a clean error instead of an OOM.
inline constexpr Int kMaxOrbitNodes = 5'000'000;

/// Level-synchronous BFS over the Weyl orbit of a dominant start weight,
/// returning the first node (FIFO order, generators in ascending index) at
/// minimal depth where signTest holds, with the witness word read off the
/// parent links. Since each word gives a walk in the orbit graph and each
/// walk a word, BFS depth from a dominant start equals the minimal Coxeter
/// length of an element mapping the start to the hit.
inline std::optional<OrbitSearchResult> orbit_bfs_first_negative(
    const RootSystem& rs, const Weight& start,
    const std::function<bool(const std::vector<Int>&)>& signTest, Int depthLimit) {
  if (!start.dominant())
    throw std::invalid_argument("orbit_bfs_first_negative: start weight is not dominant");
  if (depthLimit < 0) throw std::invalid_argument("orbit_bfs_first_negative: negative depth limit");

  struct Node {
    std::vector<std::int16_t> key;
    std::int32_t parent;
    std::int16_t gen;
    std::int16_t depth;
  };
  const int n = rs.rank();
  const auto& A = rs.cartan();

  std::vector<Node> nodes;
  std::unordered_map<std::vector<std::int16_t>, std::int32_t, detail::CoordKeyHash> seen;
  auto key0 = detail::to_key(start.coords);

  auto make_result = [&](std::int32_t idx) {
    OrbitSearchResult res;
    res.depth = nodes[idx].depth;
    res.explored = static_cast<Int>(nodes.size());
    res.image.coords.assign(nodes[idx].key.begin(), nodes[idx].key.end());
    std::vector<int> gens;  // generators in application order, start to hit
    for (std::int32_t cur = idx; nodes[cur].parent >= 0; cur = nodes[cur].parent)
      gens.push_back(nodes[cur].gen);
    res.witness.letters.assign(gens.begin(), gens.end());  // leftmost acts last
    return res;
  };

  nodes.push_back(Node{key0, -1, 0, 0});
  seen.emplace(key0, 0);
  std::vector<Int> coords(start.coords);
  if (signTest(coords)) return make_result(0);

  std::vector<Int> child(n);
  for (std::size_t head = 0; head < nodes.size(); ++head) {
    const std::int16_t depth = nodes[head].depth;
    if (depth >= depthLimit) break;  // FIFO order: all later nodes are at least this deep
    const auto ukey = nodes[head].key;
    for (int i = 0; i < n; ++i) {
      const Int li = ukey[i];
      if (li == 0) continue;  // stationary reflection, same orbit point
      for (int k = 0; k < n; ++k) child[k] = ukey[k] - li * A[k][i];
      auto ck = detail::to_key(child);
      auto [it, inserted] = seen.try_emplace(std::move(ck), static_cast<std::int32_t>(nodes.size()));
      if (!inserted) continue;
      if (static_cast<Int>(nodes.size()) >= kMaxOrbitNodes)
        throw std::runtime_error("orbit search exceeds " + std::to_string(kMaxOrbitNodes) +
                                 " points; the orbit of this weight is too large");
      nodes.push_back(Node{it->first, static_cast<std::int32_t>(head),
                           static_cast<std::int16_t>(i + 1),
                           static_cast<std::int16_t>(depth + 1)});
      if (signTest(child)) return make_result(static_cast<std::int32_t>(nodes.size() - 1));
    }
  }
  return std::nullopt;
}

/// Number of orbit points within depthLimit of a dominant start (the whole
/// orbit when depthLimit >= the orbit's eccentricity).
inline Int orbit_size_within(const RootSystem& rs, const Weight& start, Int depthLimit) {
  Int count = 0;
  auto res = orbit_bfs_first_negative(
      rs, start, [&count](const std::vector<Int>&) { ++count; return false; }, depthLimit);
  (void)res;
  return count;
}

}  // namespace weylell
