#include "symcent/schur.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "symcent/action.hpp"
#include "symcent/coherent.hpp"
#include "symcent/error.hpp"
#include "symcent/union_find.hpp"

namespace symcent {

std::vector<Permutation> regular_subgroup_elements(const std::vector<Permutation>& t_gens,
                                                   std::size_t degree, Point base) {
  std::vector<std::optional<Permutation>> by_image(degree);
  std::vector<Point> order{base};
  by_image[base] = Permutation::identity(degree);
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (const auto& s : t_gens) {
      const Point y = s(order[i]);
      if (!by_image[y]) {
        by_image[y] = *by_image[order[i]] * s;
        order.push_back(y);
      }
    }
  }
  std::vector<Permutation> out;
  for (Point x : order) out.push_back(*by_image[x]);
  return out;
}

namespace {

struct IndexedT {
  Point base = 0;
  std::vector<std::ptrdiff_t> index_of_image;  // image of base -> element index

  std::ptrdiff_t find(const std::vector<Permutation>& elems, const Permutation& x) const {
    const auto i = index_of_image[x(base)];
    if (i < 0 || elems[static_cast<std::size_t>(i)] != x) return -1;
    return i;
  }
};

IndexedT index_regular(const std::vector<Permutation>& elems) {
  if (elems.empty()) throw PreconditionError("empty subgroup");
  const std::size_t n = elems.front().degree();
  if (elems.size() != n) throw PreconditionError("T is not regular: |T| != degree");
  IndexedT idx;
  idx.index_of_image.assign(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    const Point y = elems[i](idx.base);
    if (idx.index_of_image[y] >= 0) throw PreconditionError("T is not regular: not transitive");
    idx.index_of_image[y] = static_cast<std::ptrdiff_t>(i);
  }
  return idx;
}

}  // namespace

SchurRing schur_ring_from_action(const std::vector<Permutation>& t_elements,
                                 const PermutationGroup& h, const Field& field,
                                 const ElementNamer& namer) {
  const auto idx = index_regular(t_elements);
  const std::size_t n = t_elements.size();
  // Closed under multiplication, hence a subgroup acting regularly.
  std::vector<std::size_t> mult(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const auto k = idx.find(t_elements, t_elements[i] * t_elements[j]);
      if (k < 0) throw PreconditionError("T is not closed under multiplication");
      mult[i * n + j] = static_cast<std::size_t>(k);
    }
  }
  std::size_t identity = n;
  for (std::size_t i = 0; i < n; ++i) {
    if (t_elements[i].is_identity()) identity = i;
  }
  if (identity == n) throw PreconditionError("T does not contain the identity");

  UnionFind uf(n);
  for (const auto& s : h.generators()) {
    for (std::size_t i = 0; i < n; ++i) {
      const auto k = idx.find(t_elements, conjugate(t_elements[i], s));
      if (k < 0) throw PreconditionError("H does not normalize T");
      uf.unite(i, static_cast<std::size_t>(k));
    }
  }

  SchurRing ring;
  ring.group_order = n;
  std::map<std::size_t, std::size_t> slot;
  std::vector<std::size_t> set_of(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto [it, inserted] = slot.try_emplace(uf.find(i), ring.basic_sets.size());
    if (inserted) ring.basic_sets.emplace_back();
    ring.basic_sets[it->second].push_back(i);
    set_of[i] = it->second;
  }
  const std::size_t m = ring.basic_sets.size();

  // Axioms: {e} is basic; inverse-closed.
  if (ring.basic_sets[set_of[identity]].size() != 1) {
    throw VerificationError("{e} is not a basic set");
  }
  for (const auto& v : ring.basic_sets) {
    std::vector<std::size_t> inv;
    for (auto x : v) {
      inv.push_back(static_cast<std::size_t>(idx.find(t_elements, t_elements[x].inverse())));
    }
    std::sort(inv.begin(), inv.end());
    if (ring.basic_sets[set_of[inv.front()]] != inv) {
      throw VerificationError("basic sets not closed under inversion");
    }
  }

  std::vector<FieldElement> sc(m * m * m, field.zero());
  std::vector<std::uint64_t> counts(n);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      std::fill(counts.begin(), counts.end(), 0);
      for (auto x : ring.basic_sets[i]) {
        for (auto y : ring.basic_sets[j]) ++counts[mult[x * n + y]];
      }
      for (std::size_t k = 0; k < m; ++k) {
        const auto& v = ring.basic_sets[k];
        const auto c = counts[v.front()];
        for (auto z : v) {
          if (counts[z] != c) throw VerificationError("orbit sums do not span a ring");
        }
        sc[(i * m + j) * m + k] = field.from_int(static_cast<std::int64_t>(c));
      }
    }
  }

  auto name = [&](std::size_t i) { return namer ? namer(i) : "t" + std::to_string(i); };
  std::vector<std::string> labels;
  for (const auto& v : ring.basic_sets) {
    std::string label;
    for (auto x : v) {
      if (!label.empty()) label += '+';
      label += name(x);
    }
    labels.push_back(label);
  }
  ring.labels = labels;
  Vector unit(m, field.zero());
  unit[set_of[identity]] = field.one();
  ring.algebra = SCAlgebra(field, std::move(labels), std::move(sc), std::move(unit));
  return ring;
}

SchurIsoReport schur_vs_centralizer(const PermutationGroup& g, const std::vector<Permutation>& t_gens,
                                    const Field& field, Point alpha, const ElementNamer& namer) {
  const std::size_t n = g.degree();
  auto t_elements = regular_subgroup_elements(t_gens, n, alpha);
  const auto idx = index_regular(t_elements);
  for (const auto& s : g.generators()) {
    for (const auto& t : t_elements) {
      if (idx.find(t_elements, conjugate(t, s)) < 0) {
        throw PreconditionError("T is not normal in G");
      }
    }
  }
  const auto cc = two_orbits(g);
  if (cc.reflexive_orbitals().size() != 1) throw PreconditionError("G is not transitive");
  const auto tensor = intersection_tensor(cc);
  const auto cent = centralizer_algebra(cc, tensor, field);
  const auto ring = schur_ring_from_action(t_elements, point_stabilizer(g, alpha), field, namer);

  SchurIsoReport rep;
  rep.orbitals = cc.rank();
  rep.basic_sets = ring.basic_sets.size();
  rep.basic_set_labels = ring.labels;

  std::map<std::vector<std::size_t>, std::size_t> set_index;
  for (std::size_t i = 0; i < ring.basic_sets.size(); ++i) set_index[ring.basic_sets[i]] = i;
  std::vector<std::vector<std::size_t>> v(cc.rank());
  for (std::size_t i = 0; i < t_elements.size(); ++i) {
    v[cc.orbital(alpha, t_elements[i](alpha))].push_back(i);
  }
  std::vector<std::size_t> phi(cc.rank());
  std::vector<bool> hit(ring.basic_sets.size(), false);
  rep.bijection = cc.rank() == ring.basic_sets.size();
  for (std::size_t s = 0; s < cc.rank() && rep.bijection; ++s) {
    std::sort(v[s].begin(), v[s].end());
    auto it = set_index.find(v[s]);
    if (it == set_index.end() || hit[it->second]) {
      rep.bijection = false;
      rep.mismatch = "orbital " + std::to_string(s) + " does not correspond to a basic set";
      break;
    }
    hit[it->second] = true;
    phi[s] = it->second;
  }
  if (!rep.bijection) {
    if (rep.mismatch.empty()) rep.mismatch = "orbital and basic-set counts differ";
    return rep;
  }
  rep.sizes_match = true;
  for (std::size_t s = 0; s < cc.rank(); ++s) {
    if (ring.basic_sets[phi[s]].size() != cc.orbitals[s].valency) {
      rep.sizes_match = false;
      rep.mismatch = "valency of orbital " + std::to_string(s) + " differs from basic-set size";
      break;
    }
  }
  rep.structure_constants_match = true;
  const std::size_t m = cc.rank();
  for (std::size_t r = 0; r < m && rep.structure_constants_match; ++r) {
    for (std::size_t s = 0; s < m && rep.structure_constants_match; ++s) {
      for (std::size_t t = 0; t < m; ++t) {
        if (cent.sc(r, s, t) != ring.algebra.sc(phi[s], phi[r], phi[t])) {
          rep.structure_constants_match = false;
          rep.mismatch = "structure constant mismatch at (" + std::to_string(r) + "," +
                         std::to_string(s) + "," + std::to_string(t) + ")";
          break;
        }
      }
    }
  }
  return rep;
}

HeckeResult hecke_check(const PermutationGroup& g, Point alpha, const Field& field) {
  if (field.kind() != FieldKind::prime) throw PreconditionError("hecke_check requires a prime field");
  const auto elems = g.elements(kHeckeOrderCap);
  std::unordered_map<Permutation, std::size_t, PermutationHash> index;
  for (std::size_t i = 0; i < elems.size(); ++i) index.emplace(elems[i], i);
  std::vector<std::size_t> h;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (elems[i](alpha) == alpha) h.push_back(i);
  }
  if (h.size() % field.characteristic() == 0) {
    throw PreconditionError("characteristic divides |G_alpha|");
  }
  const FieldElement inv_h = field.inv(field.from_int(static_cast<std::int64_t>(h.size())));
  const FieldElement scale = field.mul(inv_h, inv_h);

  // e g e = |H|^-2 sum_{h,h'} h g h'; identical rows collapse before the rank.
  std::map<std::vector<std::pair<std::size_t, std::uint32_t>>, bool> distinct;
  std::vector<Vector> rows;
  std::map<std::size_t, std::uint64_t> acc;
  for (const auto& x : elems) {
    acc.clear();
    for (auto a : h) {
      const Permutation ax = elems[a] * x;
      for (auto b : h) ++acc[index.at(ax * elems[b])];
    }
    std::vector<std::pair<std::size_t, std::uint32_t>> key;
    for (auto [k, c] : acc) {
      const FieldElement v = field.mul(scale, field.from_int(static_cast<std::int64_t>(c)));
      if (!field.is_zero(v)) key.emplace_back(k, v.value);
    }
    if (!distinct.emplace(key, true).second) continue;
    Vector row(elems.size(), field.zero());
    for (auto [k, v] : key) row[k] = FieldElement{v};
    rows.push_back(std::move(row));
  }
  HeckeResult out;
  out.hecke_dim = row_basis(field, rows, elems.size()).size();
  out.permutation_rank = two_orbits(g).rank();
  out.matches_rank = out.hecke_dim == out.permutation_rank;
  return out;
}

}  // namespace symcent
