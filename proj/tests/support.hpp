#pragma once

// Helpers shared by the test binaries. The oracles here deliberately avoid the
// library's own elimination and graph code.

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "crn/network.hpp"
#include "crn/parser.hpp"

namespace crn::testing {

inline std::filesystem::path data_path(const std::string& name) {
  return std::filesystem::path(CRN_DATA_DIR) / name;
}

inline Network load(const std::string& name) { return parse_network_file(data_path(name)); }

inline const std::vector<std::string>& corpus() {
  static const std::vector<std::string> files = {
      "yeast.crn",          "sorribas.crn",      "baccam.crn",     "baccam-delayed.crn",
      "handel.crn",         "split-chain.crn",   "crossed-pair.crn", "mass-action-steady.crn",
      "reversible-pair.crn", "two-step.crn",     "purine.crn"};
  return files;
}

using IntMatrix = std::vector<std::vector<std::int64_t>>;

// Integer reaction vectors straight from the complexes, one row per reaction.
inline IntMatrix integer_reaction_rows(const Network& net) {
  IntMatrix rows;
  for (const Reaction& rx : net.reactions()) {
    std::vector<std::int64_t> v(net.species_count(), 0);
    for (const auto& [s, c] : net.complexes()[rx.product].terms()) v[s] += c;
    for (const auto& [s, c] : net.complexes()[rx.reactant].terms()) v[s] -= c;
    rows.push_back(std::move(v));
  }
  return rows;
}

// Fraction-free (Bareiss) rank over the integers. Entries stay bounded by
// minors of the input, which fit comfortably in 128 bits for the corpus.
inline std::size_t bareiss_rank(IntMatrix in) {
  if (in.empty()) return 0;
  const std::size_t rows = in.size();
  const std::size_t cols = in.front().size();
  std::vector<std::vector<__int128>> a(rows, std::vector<__int128>(cols));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) a[i][j] = in[i][j];
  __int128 prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) / prev;
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

// Determinant by cofactor expansion; only for small square matrices.
inline std::int64_t cofactor_det(const IntMatrix& m) {
  const std::size_t k = m.size();
  if (k == 0) return 1;
  if (k == 1) return m[0][0];
  std::int64_t det = 0;
  for (std::size_t c = 0; c < k; ++c) {
    if (m[0][c] == 0) continue;
    IntMatrix minor;
    for (std::size_t i = 1; i < k; ++i) {
      std::vector<std::int64_t> row;
      for (std::size_t j = 0; j < k; ++j)
        if (j != c) row.push_back(m[i][j]);
      minor.push_back(std::move(row));
    }
    const std::int64_t term = m[0][c] * cofactor_det(minor);
    det += (c % 2 == 0) ? term : -term;
  }
  return det;
}

// Largest k with a nonzero k x k minor. Exponential; small matrices only.
inline std::size_t minor_rank(const IntMatrix& m) {
  if (m.empty() || m.front().empty()) return 0;
  const std::size_t rows = m.size();
  const std::size_t cols = m.front().size();
  std::size_t best = 0;
  for (std::uint32_t rmask = 1; rmask < (1u << rows); ++rmask) {
    const auto k = static_cast<std::size_t>(__builtin_popcount(rmask));
    if (k <= best || k > cols) continue;
    for (std::uint32_t cmask = 1; cmask < (1u << cols); ++cmask) {
      if (static_cast<std::size_t>(__builtin_popcount(cmask)) != k) continue;
      IntMatrix sub;
      for (std::size_t i = 0; i < rows; ++i) {
        if (!(rmask >> i & 1)) continue;
        std::vector<std::int64_t> row;
        for (std::size_t j = 0; j < cols; ++j)
          if (cmask >> j & 1) row.push_back(m[i][j]);
        sub.push_back(std::move(row));
      }
      if (cofactor_det(sub) != 0) {
        best = k;
        break;
      }
    }
  }
  return best;
}

inline IntMatrix select(const IntMatrix& rows, const std::vector<std::size_t>& which) {
  IntMatrix out;
  for (std::size_t j : which) out.push_back(rows[j]);
  return out;
}

// reach[i][j]: complex j reachable from complex i along reactions (reflexive).
inline std::vector<std::vector<bool>> reachability(const Network& net, bool undirected) {
  const std::size_t n = net.complex_count();
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) reach[i][i] = true;
  for (const Reaction& rx : net.reactions()) {
    reach[rx.reactant][rx.product] = true;
    if (undirected) reach[rx.product][rx.reactant] = true;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (reach[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (reach[k][j]) reach[i][j] = true;
  return reach;
}

// Groups of mutually reachable complexes, ordered by smallest member.
inline std::vector<std::vector<std::size_t>> closure_classes(const std::vector<std::vector<bool>>& reach) {
  const std::size_t n = reach.size();
  std::vector<bool> placed(n, false);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t i = 0; i < n; ++i) {
    if (placed[i]) continue;
    std::vector<std::size_t> group;
    for (std::size_t j = i; j < n; ++j)
      if (reach[i][j] && reach[j][i]) {
        group.push_back(j);
        placed[j] = true;
      }
    out.push_back(std::move(group));
  }
  return out;
}

struct RandomNetworkOptions {
  std::size_t max_species = 4;
  std::size_t max_reactions = 6;
  int max_coefficient = 2;
};

// Random network with coefficients in {0..max_coefficient}. Self-loops and
// repeated reactions are redrawn.
inline Network random_network(std::mt19937_64& rng, const RandomNetworkOptions& opt = {}) {
  std::uniform_int_distribution<std::size_t> species_dist(1, opt.max_species);
  std::uniform_int_distribution<std::size_t> reaction_dist(1, opt.max_reactions);
  std::uniform_int_distribution<int> coeff(0, opt.max_coefficient);
  const std::size_t m = species_dist(rng);
  const std::size_t r = reaction_dist(rng);

  NetworkBuilder b;
  for (std::size_t s = 0; s < m; ++s) b.add_species("X" + std::to_string(s + 1));
  std::vector<std::pair<std::vector<int>, std::vector<int>>> seen;
  const auto draw = [&] {
    std::vector<int> v(m);
    for (int& c : v) c = coeff(rng);
    return v;
  };
  const auto terms = [&](const std::vector<int>& v) {
    std::vector<NetworkBuilder::Term> t;
    for (std::size_t s = 0; s < m; ++s)
      if (v[s] > 0) t.emplace_back(v[s], "X" + std::to_string(s + 1));
    return t;
  };
  while (seen.size() < r) {
    auto from = draw();
    auto to = draw();
    if (from == to) continue;
    if (std::find(seen.begin(), seen.end(), std::pair{from, to}) != seen.end()) continue;
    b.add_reaction(std::nullopt, terms(from), terms(to), seen.size() + 1);
    seen.emplace_back(std::move(from), std::move(to));
  }
  return std::move(b).build();
}

}  // namespace crn::testing
