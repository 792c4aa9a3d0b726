#include "symcent/action.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>
#include <unordered_set>

#include "symcent/error.hpp"
#include "symcent/union_find.hpp"

namespace symcent {

Partition orbits(const std::vector<Permutation>& gens, std::size_t degree) {
  UnionFind uf(degree);
  for (const auto& g : gens) {
    for (std::size_t x = 0; x < degree; ++x) uf.unite(x, g(static_cast<Point>(x)));
  }
  std::vector<std::ptrdiff_t> slot(degree, -1);
  Partition out;
  for (std::size_t x = 0; x < degree; ++x) {
    const auto r = uf.find(x);
    if (slot[r] < 0) {
      slot[r] = static_cast<std::ptrdiff_t>(out.size());
      out.emplace_back();
    }
    out[static_cast<std::size_t>(slot[r])].push_back(static_cast<Point>(x));
  }
  return out;
}

std::vector<Point> orbit(const std::vector<Permutation>& gens, Point alpha) {
  if (gens.empty()) return {alpha};
  std::vector<bool> seen(gens.front().degree(), false);
  std::vector<Point> out{alpha};
  seen[alpha] = true;
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (const auto& g : gens) {
      const Point y = g(out[i]);
      if (!seen[y]) {
        seen[y] = true;
        out.push_back(y);
      }
    }
  }
  return out;
}

PermutationGroup point_stabilizer(const PermutationGroup& g, Point alpha) {
  if (alpha >= g.degree()) throw PreconditionError("point out of range");
  StabilizerChain chain(g.degree(), g.generators(), {alpha});
  if (chain.levels().size() < 2) return PermutationGroup::trivial(g.degree());
  return {g.degree(), chain.levels()[1].generators};
}

std::vector<std::size_t> minimal_block_system(const PermutationGroup& g, Point alpha, Point beta) {
  const std::size_t n = g.degree();
  UnionFind uf(n);
  std::vector<std::pair<std::size_t, std::size_t>> queue;
  if (uf.unite(alpha, beta)) queue.emplace_back(alpha, beta);
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const auto [a, b] = queue[i];
    for (const auto& s : g.generators()) {
      const auto x = uf.find(s(static_cast<Point>(a)));
      const auto y = uf.find(s(static_cast<Point>(b)));
      if (x != y) {
        uf.unite(x, y);
        queue.emplace_back(x, y);
      }
    }
  }
  std::vector<std::size_t> label(n);
  std::map<std::size_t, std::size_t> ids;
  for (std::size_t x = 0; x < n; ++x) {
    label[x] = ids.try_emplace(uf.find(x), ids.size()).first->second;
  }
  return label;
}

bool is_primitive(const PermutationGroup& g) {
  const std::size_t n = g.degree();
  if (orbits(g.generators(), n).size() != 1) return false;
  if (n <= 2) return true;
  // Block systems through (0, beta) and (0, beta^h), h in G_0, are images of
  // each other, so one beta per G_0-orbit suffices.
  const auto stab = point_stabilizer(g, 0);
  for (const auto& o : orbits(stab.generators(), n)) {
    const Point beta = o.front() == 0 ? (o.size() > 1 ? o[1] : 0) : o.front();
    if (beta == 0) continue;
    const auto label = minimal_block_system(g, 0, beta);
    const auto block_size = static_cast<std::size_t>(std::count(label.begin(), label.end(), label[0]));
    if (block_size < n) return false;
  }
  return true;
}

ActionClassification classify_action(const PermutationGroup& g) {
  const std::size_t n = g.degree();
  ActionClassification c;
  const auto orbs = orbits(g.generators(), n);
  for (const auto& o : orbs) c.orbit_sizes.push_back(o.size());
  std::sort(c.orbit_sizes.begin(), c.orbit_sizes.end());
  c.transitive = orbs.size() == 1;
  c.half_transitive = std::adjacent_find(c.orbit_sizes.begin(), c.orbit_sizes.end(),
                                         std::not_equal_to<>()) == c.orbit_sizes.end();
  // rank = sum over G-orbit representatives x of the number of G_x-orbits.
  for (const auto& o : orbs) {
    const auto stab = point_stabilizer(g, o.front());
    const auto sub = orbits(stab.generators(), n);
    c.rank += sub.size();
    if (c.transitive) {
      for (const auto& s : sub) c.subdegrees.push_back(s.size());
    }
  }
  std::sort(c.subdegrees.begin(), c.subdegrees.end());
  c.regular = c.transitive && g.order() == n;
  if (c.transitive && !c.regular) {
    std::vector<std::size_t> nontrivial;
    bool fixed_seen = false;
    for (auto d : c.subdegrees) {
      if (d == 1 && !fixed_seen) {
        fixed_seen = true;
        continue;
      }
      nontrivial.push_back(d);
    }
    c.three_halves_transitive =
        !nontrivial.empty() &&
        std::all_of(nontrivial.begin(), nontrivial.end(),
                    [&](std::size_t d) { return d == nontrivial.front(); });
  }
  c.primitive = c.transitive && is_primitive(g);
  c.faithful = !g.source_order() || *g.source_order() == g.order();
  return c;
}

std::vector<std::vector<Point>> ksubsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<Point>> out;
  if (k > n) return out;
  std::vector<Point> cur(k);
  for (std::size_t i = 0; i < k; ++i) cur[i] = static_cast<Point>(i);
  while (true) {
    out.push_back(cur);
    if (out.size() > kDerivedActionCap) {
      throw PreconditionError("induced degree exceeds cap " + std::to_string(kDerivedActionCap));
    }
    std::ptrdiff_t i = static_cast<std::ptrdiff_t>(k) - 1;
    while (i >= 0 && cur[static_cast<std::size_t>(i)] == n - k + static_cast<std::size_t>(i)) --i;
    if (i < 0) break;
    ++cur[static_cast<std::size_t>(i)];
    for (auto j = static_cast<std::size_t>(i) + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

PermutationGroup action_on_ksubsets(const PermutationGroup& g, std::size_t k) {
  if (k > g.degree()) throw PreconditionError("subset size exceeds degree");
  const auto subsets = ksubsets(g.degree(), k);
  std::map<std::vector<Point>, Point> index;
  for (std::size_t i = 0; i < subsets.size(); ++i) index[subsets[i]] = static_cast<Point>(i);
  std::vector<Permutation> gens;
  for (const auto& s : g.generators()) {
    std::vector<Point> images(subsets.size());
    for (std::size_t i = 0; i < subsets.size(); ++i) {
      std::vector<Point> img;
      img.reserve(k);
      for (Point x : subsets[i]) img.push_back(s(x));
      std::sort(img.begin(), img.end());
      images[i] = index.at(img);
    }
    gens.emplace_back(std::move(images));
  }
  PermutationGroup out(subsets.size(), std::move(gens));
  out.set_source_order(g.order());
  return out;
}

namespace {

struct VectorHash {
  std::size_t operator()(const std::vector<Point>& v) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (Point x : v) {
      h ^= x;
      h *= 1099511628211ULL;
    }
    return h;
  }
};

// Images of the canonical element of the right coset H x: level by level,
// pick the point of the basic orbit whose image under x is least. The result
// is the lexicographically least element of H x on H's base, and it is the
// same for every x in the coset.
std::vector<Point> coset_key(const StabilizerChain& hchain, Permutation x) {
  for (const auto& level : hchain.levels()) {
    Point best = level.orbit.front();
    for (Point b : level.orbit) {
      if (x(b) < x(best)) best = b;
    }
    x = *level.transversal[best] * x;
  }
  const auto im = x.images();
  return {im.begin(), im.end()};
}

}  // namespace

PermutationGroup action_on_cosets(const PermutationGroup& g, const PermutationGroup& h) {
  if (g.degree() != h.degree()) throw PreconditionError("degree mismatch");
  for (const auto& s : h.generators()) {
    if (!g.contains(s)) throw PreconditionError("subgroup generator " + s.to_cycles() + " not in G");
  }
  const auto& hchain = h.chain();
  std::vector<Permutation> reps{Permutation::identity(g.degree())};
  std::unordered_map<std::vector<Point>, Point, VectorHash> index;
  index.emplace(coset_key(hchain, reps[0]), 0);
  std::vector<std::vector<Point>> images(g.generators().size());
  for (std::size_t i = 0; i < reps.size(); ++i) {
    for (std::size_t j = 0; j < g.generators().size(); ++j) {
      Permutation y = reps[i] * g.generators()[j];
      auto key = coset_key(hchain, y);
      auto [it, inserted] = index.try_emplace(std::move(key), static_cast<Point>(reps.size()));
      if (inserted) {
        if (reps.size() >= kDerivedActionCap) {
          throw PreconditionError("coset count exceeds cap " + std::to_string(kDerivedActionCap));
        }
        reps.push_back(std::move(y));
      }
      images[j].push_back(it->second);
    }
  }
  std::vector<Permutation> gens;
  for (auto& im : images) gens.emplace_back(std::move(im));
  PermutationGroup out(reps.size(), std::move(gens));
  out.set_source_order(g.order());
  return out;
}

namespace {

using ElementSet = std::unordered_set<Permutation, PermutationHash>;

ElementSet closure(const std::vector<Permutation>& gens, std::size_t degree) {
  ElementSet set{Permutation::identity(degree)};
  std::vector<Permutation> frontier{Permutation::identity(degree)};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& x : frontier) {
      for (const auto& s : gens) {
        auto y = x * s;
        if (set.insert(y).second) next.push_back(std::move(y));
      }
    }
    frontier = std::move(next);
  }
  return set;
}

bool normalizes(const Permutation& x, const std::vector<Permutation>& gens, const ElementSet& set) {
  return std::all_of(gens.begin(), gens.end(),
                     [&](const Permutation& s) { return set.contains(conjugate(s, x)); });
}

}  // namespace

GroupTheoreticChecks group_theoretic_checks(const PermutationGroup& g, Point alpha,
                                            std::uint32_t p) {
  if (alpha >= g.degree()) throw PreconditionError("point out of range");
  const auto elems = g.elements(kEnumerationCap);
  std::vector<Permutation> h;
  for (const auto& x : elems) {
    if (x(alpha) == alpha) h.push_back(x);
  }
  std::size_t sylow = 1;
  for (std::size_t rest = h.size(); rest % p == 0; rest /= p) sylow *= p;
  if (sylow == 1) throw PreconditionError("Sylow subgroup trivial: p does not divide |H|");

  std::vector<Permutation> pgens;
  ElementSet pset{Permutation::identity(g.degree())};
  while (pset.size() < sylow) {
    const Permutation* pick = nullptr;
    for (const auto& x : h) {
      if (pset.contains(x)) continue;
      Permutation xp = Permutation::identity(g.degree());
      for (std::uint32_t i = 0; i < p; ++i) xp = xp * x;
      if (!pset.contains(xp) || !normalizes(x, pgens, pset)) continue;
      pick = &x;
      break;
    }
    if (pick == nullptr) throw VerificationError("failed to extend p-subgroup to Sylow subgroup");
    pgens.push_back(*pick);
    pset = closure(pgens, g.degree());
  }

  GroupTheoreticChecks out;
  out.sylow_order = sylow;
  out.normalizer_in_stabilizer = true;
  for (const auto& x : elems) {
    if (x(alpha) != alpha && normalizes(x, pgens, pset)) {
      out.normalizer_in_stabilizer = false;
      break;
    }
  }
  for (Point beta : orbit(g.generators(), alpha)) {
    if (beta == alpha) continue;
    const auto n = static_cast<std::size_t>(
        std::count_if(h.begin(), h.end(), [&](const Permutation& x) { return x(beta) == beta; }));
    out.max_conjugate_intersection = std::max(out.max_conjugate_intersection, n);
  }
  return out;
}

}  // namespace symcent
