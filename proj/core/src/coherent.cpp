#include "symcent/coherent.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "symcent/action.hpp"
#include "symcent/error.hpp"
#include "symcent/union_find.hpp"

namespace symcent {

std::vector<std::size_t> CoherentConfiguration::reflexive_orbitals() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < orbitals.size(); ++i) {
    if (orbitals[i].reflexive) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> CoherentConfiguration::valencies_at(Point alpha) const {
  std::vector<std::size_t> out;
  for (const auto& o : orbitals) {
    if (o.support_orbit == point_orbit[alpha]) out.push_back(o.valency);
  }
  std::sort(out.begin(), out.end());
  return out;
}

CoherentConfiguration two_orbits(const PermutationGroup& g) {
  const std::size_t n = g.degree();
  if (n > kCoherentDegreeCap) {
    throw PreconditionError("degree " + std::to_string(n) + " exceeds coherent cap " +
                            std::to_string(kCoherentDegreeCap));
  }
  CoherentConfiguration cc;
  cc.n = n;

  cc.point_orbit.assign(n, 0);
  const auto orbs = orbits(g.generators(), n);
  for (std::size_t i = 0; i < orbs.size(); ++i) {
    cc.orbit_sizes.push_back(orbs[i].size());
    for (Point x : orbs[i]) cc.point_orbit[x] = i;
  }

  UnionFind uf(n * n);
  for (const auto& s : g.generators()) {
    const auto img = s.images();
    for (std::size_t a = 0; a < n; ++a) {
      const std::size_t row = img[a] * n;
      for (std::size_t b = 0; b < n; ++b) uf.unite(a * n + b, row + img[b]);
    }
  }

  // Classes in order of least pair; a pair scan visits pairs lexicographically.
  std::vector<std::int64_t> class_of_root(n * n, -1);
  std::vector<std::uint32_t> provisional(n * n);
  std::vector<OrbitalInfo> info;
  for (std::size_t idx = 0; idx < n * n; ++idx) {
    const auto r = uf.find(idx);
    if (class_of_root[r] < 0) {
      class_of_root[r] = static_cast<std::int64_t>(info.size());
      OrbitalInfo o;
      o.representative = {static_cast<Point>(idx / n), static_cast<Point>(idx % n)};
      o.reflexive = idx / n == idx % n;
      o.support_orbit = cc.point_orbit[idx / n];
      info.push_back(o);
    }
    const auto c = static_cast<std::uint32_t>(class_of_root[r]);
    provisional[idx] = c;
    ++info[c].size;
  }
  for (auto& o : info) o.valency = o.size / cc.orbit_sizes[o.support_orbit];

  std::vector<std::size_t> order(info.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const auto& x = info[a];
    const auto& y = info[b];
    if (x.reflexive != y.reflexive) return x.reflexive;
    if (x.valency != y.valency) return x.valency < y.valency;
    return x.representative < y.representative;
  });
  std::vector<std::uint32_t> renumber(info.size());
  for (std::size_t i = 0; i < order.size(); ++i) renumber[order[i]] = static_cast<std::uint32_t>(i);

  cc.orbital_of.resize(n * n);
  for (std::size_t idx = 0; idx < n * n; ++idx) cc.orbital_of[idx] = renumber[provisional[idx]];
  cc.orbitals.resize(info.size());
  for (std::size_t i = 0; i < order.size(); ++i) cc.orbitals[i] = info[order[i]];
  for (auto& o : cc.orbitals) {
    o.star = cc.orbital(o.representative.second, o.representative.first);
  }
  return cc;
}

namespace {

void count_row(const CoherentConfiguration& cc, Point alpha, Point beta,
               std::vector<std::uint32_t>& counts) {
  const std::size_t m = cc.rank();
  std::fill(counts.begin(), counts.end(), 0);
  const std::size_t n = cc.n;
  for (std::size_t gamma = 0; gamma < n; ++gamma) {
    const std::size_t r = cc.orbital_of[alpha * n + gamma];
    const std::size_t s = cc.orbital_of[gamma * n + beta];
    ++counts[r * m + s];
  }
}

}  // namespace

IntersectionTensor intersection_tensor(const CoherentConfiguration& cc) {
  const std::size_t m = cc.rank();
  if (m > kTensorRankCap) {
    throw PreconditionError("rank " + std::to_string(m) + " exceeds tensor cap " +
                            std::to_string(kTensorRankCap));
  }
  IntersectionTensor tensor(m);
  std::vector<std::uint32_t> counts(m * m);
  for (std::size_t t = 0; t < m; ++t) {
    const auto [a, b] = cc.orbitals[t].representative;
    count_row(cc, a, b, counts);
    for (std::size_t r = 0; r < m; ++r) {
      for (std::size_t s = 0; s < m; ++s) tensor(t, r, s) = counts[r * m + s];
    }
  }
  return tensor;
}

AxiomReport verify_cc_axioms(const CoherentConfiguration& cc, const IntersectionTensor& tensor,
                             std::size_t trials, std::uint64_t seed) {
  AxiomReport rep;
  const std::size_t n = cc.n;
  const std::size_t m = cc.rank();
  auto fail = [&](bool& flag, const std::string& msg) {
    flag = false;
    if (rep.failure.empty()) rep.failure = msg;
  };
  auto pair_str = [](std::size_t a, std::size_t b) {
    return "(" + std::to_string(a + 1) + "," + std::to_string(b + 1) + ")";
  };

  // (1) every orbital touching the diagonal lies inside it.
  std::vector<bool> touches_diag(m, false);
  for (std::size_t a = 0; a < n; ++a) touches_diag[cc.orbital(a, a)] = true;
  std::vector<std::vector<std::size_t>> members(m);
  for (std::size_t idx = 0; idx < n * n; ++idx) {
    const std::size_t s = cc.orbital_of[idx];
    if (s >= m) {
      fail(rep.diagonal_union, "orbital index out of range at " + pair_str(idx / n, idx % n));
      return rep;
    }
    members[s].push_back(idx);
    if (touches_diag[s] && idx / n != idx % n) {
      fail(rep.diagonal_union, "orbital " + std::to_string(s) + " mixes diagonal and pair " +
                                   pair_str(idx / n, idx % n));
    }
  }

  // (2) transposition maps orbitals onto orbitals.
  std::vector<std::int64_t> star(m, -1);
  for (std::size_t a = 0; a < n && rep.star_closed; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const auto s = cc.orbital(a, b);
      const auto t = static_cast<std::int64_t>(cc.orbital(b, a));
      if (star[s] < 0) star[s] = t;
      if (star[s] != t) {
        fail(rep.star_closed, "transpose of orbital " + std::to_string(s) + " is split at " +
                                  pair_str(b, a));
        break;
      }
    }
  }

  // (3) intersection numbers do not depend on the chosen pair.
  std::mt19937_64 rng(seed);
  std::vector<std::uint32_t> counts(m * m);
  for (std::size_t t = 0; t < m && rep.representative_independent; ++t) {
    if (members[t].empty()) continue;
    std::uniform_int_distribution<std::size_t> pick(0, members[t].size() - 1);
    for (std::size_t k = 0; k < trials; ++k) {
      const std::size_t idx = members[t][pick(rng)];
      count_row(cc, static_cast<Point>(idx / n), static_cast<Point>(idx % n), counts);
      bool same = true;
      for (std::size_t r = 0; r < m && same; ++r) {
        for (std::size_t s = 0; s < m; ++s) {
          if (counts[r * m + s] != tensor(t, r, s)) {
            same = false;
            fail(rep.representative_independent,
                 "C^" + std::to_string(t) + "_{" + std::to_string(r) + "," + std::to_string(s) +
                     "} differs at pair " + pair_str(idx / n, idx % n));
            break;
          }
        }
      }
      if (!same) break;
    }
  }

  // Triangle identity on pair-set cardinalities.
  if (rep.star_closed && rep.diagonal_union) {
    for (std::size_t r = 0; r < m && rep.triangle_identity; ++r) {
      for (std::size_t s = 0; s < m && rep.triangle_identity; ++s) {
        for (std::size_t t = 0; t < m; ++t) {
          const auto size = [&](std::size_t x) { return std::uint64_t{members[x].size()}; };
          const auto st = [&](std::size_t x) { return static_cast<std::size_t>(star[x]); };
          const std::uint64_t a = size(t) * tensor(st(t), r, s);
          const std::uint64_t b = size(r) * tensor(st(r), s, t);
          const std::uint64_t c = size(s) * tensor(st(s), t, r);
          if (a != b || b != c) {
            fail(rep.triangle_identity, "triangle identity fails at (r,s,t)=(" +
                                            std::to_string(r) + "," + std::to_string(s) + "," +
                                            std::to_string(t) + ")");
            break;
          }
        }
      }
    }
  }
  return rep;
}

std::vector<Matrix> adjacency_matrices(const CoherentConfiguration& cc, const Field& field) {
  std::vector<Matrix> out(cc.rank(), Matrix(cc.n, cc.n));
  for (std::size_t a = 0; a < cc.n; ++a) {
    for (std::size_t b = 0; b < cc.n; ++b) out[cc.orbital(a, b)](a, b) = field.one();
  }
  return out;
}

std::string verify_adjacency_products(const CoherentConfiguration& cc,
                                      const IntersectionTensor& tensor) {
  const std::size_t n = cc.n;
  const std::size_t m = cc.rank();
  std::vector<std::vector<std::int64_t>> adj(m, std::vector<std::int64_t>(n * n, 0));
  for (std::size_t idx = 0; idx < n * n; ++idx) adj[cc.orbital_of[idx]][idx] = 1;
  std::vector<std::int64_t> prod(n * n);
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t s = 0; s < m; ++s) {
      std::fill(prod.begin(), prod.end(), 0);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
          const auto a = adj[r][i * n + k];
          if (a == 0) continue;
          for (std::size_t j = 0; j < n; ++j) prod[i * n + j] += a * adj[s][k * n + j];
        }
      }
      for (std::size_t idx = 0; idx < n * n; ++idx) {
        std::int64_t expect = 0;
        for (std::size_t t = 0; t < m; ++t) expect += std::int64_t{tensor(t, r, s)} * adj[t][idx];
        if (prod[idx] != expect) {
          std::ostringstream os;
          os << "A_" << r << " A_" << s << " differs from sum_t C^t A_t at entry (" << idx / n + 1
             << "," << idx % n + 1 << ")";
          return os.str();
        }
      }
    }
  }
  return {};
}

}  // namespace symcent
