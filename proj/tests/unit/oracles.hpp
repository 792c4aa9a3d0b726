#pragma once

// Brute-force reference computations used to cross-check the library. They
// deliberately avoid the stabilizer chain, union-find and Gaussian elimination
// code they are compared against.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "symcent/permutation.hpp"

namespace oracle {

using Perm = std::vector<std::uint32_t>;

inline Perm images(const symcent::Permutation& g) { return {g.images().begin(), g.images().end()}; }

// x^(g h) = h(g(x))
inline Perm compose(const Perm& g, const Perm& h) {
  Perm out(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) out[i] = h[g[i]];
  return out;
}

/// Every element of <gens>, by breadth-first closure under right
/// multiplication by generators.
inline std::set<Perm> closure(const std::vector<symcent::Permutation>& gens, std::size_t n) {
  Perm id(n);
  for (std::size_t i = 0; i < n; ++i) id[i] = static_cast<std::uint32_t>(i);
  std::set<Perm> seen{id};
  std::vector<Perm> frontier{id};
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const auto& x : frontier) {
      for (const auto& s : gens) {
        auto y = compose(x, images(s));
        if (seen.insert(y).second) next.push_back(std::move(y));
      }
    }
    frontier = std::move(next);
  }
  return seen;
}

/// Orbit sizes of the stabilizer of `alpha`, sorted, from the element list.
inline std::vector<std::size_t> subdegrees(const std::set<Perm>& group, std::uint32_t alpha) {
  const std::size_t n = group.begin()->size();
  std::vector<int> comp(n, -1);
  std::vector<std::vector<std::uint32_t>> parent(n);
  std::vector<std::size_t> sizes;
  std::vector<Perm> stab;
  for (const auto& g : group) {
    if (g[alpha] == alpha) stab.push_back(g);
  }
  for (std::uint32_t x = 0; x < n; ++x) {
    if (comp[x] != -1) continue;
    std::set<std::uint32_t> orb;
    for (const auto& h : stab) orb.insert(h[x]);
    for (auto y : orb) comp[y] = static_cast<int>(sizes.size());
    sizes.push_back(orb.size());
  }
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

/// Whether some block of imprimitivity exists, by growing the block
/// containing {0, beta} under all elements until it stabilizes.
inline bool has_nontrivial_block(const std::set<Perm>& group) {
  const std::size_t n = group.begin()->size();
  for (std::uint32_t beta = 1; beta < n; ++beta) {
    std::set<std::uint32_t> block{0, beta};
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& g : group) {
        std::set<std::uint32_t> img;
        for (auto x : block) img.insert(g[x]);
        bool meets = false;
        for (auto x : img) meets |= block.count(x) > 0;
        if (meets && img != block) {
          block.insert(img.begin(), img.end());
          changed = true;
        }
      }
    }
    if (block.size() < n) return true;
  }
  return false;
}

/// Orbital index for each ordered pair, from the element list: pairs are
/// grouped by the set of their images.
inline std::vector<std::set<std::pair<std::uint32_t, std::uint32_t>>> orbitals(const std::set<Perm>& group) {
  const std::size_t n = group.begin()->size();
  std::set<std::pair<std::uint32_t, std::uint32_t>> done;
  std::vector<std::set<std::pair<std::uint32_t, std::uint32_t>>> out;
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = 0; b < n; ++b) {
      if (done.count({a, b})) continue;
      std::set<std::pair<std::uint32_t, std::uint32_t>> orb;
      for (const auto& g : group) orb.insert({g[a], g[b]});
      done.insert(orb.begin(), orb.end());
      out.push_back(std::move(orb));
    }
  }
  return out;
}

}  // namespace oracle
