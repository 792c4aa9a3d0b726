#include "symcent/group.hpp"

#include <algorithm>
#include <deque>
#include <mutex>

#include "symcent/error.hpp"

namespace symcent {

StabilizerChain::StabilizerChain(std::size_t degree, const std::vector<Permutation>& generators,
                                 const std::vector<Point>& base_prefix)
    : degree_(degree) {
  for (Point b : base_prefix) {
    if (b >= degree) throw PreconditionError("base point out of range");
    Level level;
    level.base_point = b;
    levels_.push_back(std::move(level));
  }
  std::vector<Permutation> gens;
  for (const auto& g : generators) {
    if (g.degree() != degree) throw PreconditionError("generator degree mismatch");
    if (!g.is_identity()) gens.push_back(g);
  }
  if (!gens.empty() && levels_.empty()) {
    Level level;
    level.base_point = gens.front().first_moved();
    levels_.push_back(std::move(level));
  }
  for (const auto& g : gens) {
    // Make sure no generator fixes the whole base.
    const bool fixes_base = std::all_of(levels_.begin(), levels_.end(), [&](const Level& l) {
      return g(l.base_point) == l.base_point;
    });
    if (fixes_base) {
      Level level;
      level.base_point = g.first_moved();
      levels_.push_back(std::move(level));
    }
  }
  for (std::size_t l = 0; l < levels_.size(); ++l) {
    for (const auto& g : gens) {
      bool fixes_prefix = true;
      for (std::size_t j = 0; j < l; ++j) {
        if (g(levels_[j].base_point) != levels_[j].base_point) {
          fixes_prefix = false;
          break;
        }
      }
      if (fixes_prefix) levels_[l].generators.push_back(g);
    }
  }
  for (std::size_t l = 0; l < levels_.size(); ++l) rebuild_orbit(l);
  schreier_sims();
}

void StabilizerChain::rebuild_orbit(std::size_t l) {
  Level& level = levels_[l];
  level.transversal.assign(degree_, std::nullopt);
  level.orbit.clear();
  level.transversal[level.base_point] = Permutation::identity(degree_);
  level.orbit.push_back(level.base_point);
  for (std::size_t i = 0; i < level.orbit.size(); ++i) {
    const Point x = level.orbit[i];
    for (const auto& s : level.generators) {
      const Point y = s(x);
      if (!level.transversal[y]) {
        level.transversal[y] = *level.transversal[x] * s;
        level.orbit.push_back(y);
      }
    }
  }
}

std::pair<Permutation, std::size_t> StabilizerChain::sift(Permutation g, std::size_t start) const {
  for (std::size_t l = start; l < levels_.size(); ++l) {
    const Point b = g(levels_[l].base_point);
    const auto& u = levels_[l].transversal[b];
    if (!u) return {std::move(g), l};
    g = g * u->inverse();
  }
  return {std::move(g), levels_.size()};
}

void StabilizerChain::add_generator_at(std::size_t level, const Permutation& g) {
  levels_[level].generators.push_back(g);
  rebuild_orbit(level);
}

void StabilizerChain::schreier_sims() {
  if (levels_.empty()) return;
  auto i = static_cast<std::ptrdiff_t>(levels_.size()) - 1;
  while (i >= 0) {
    bool restarted = false;
    const auto li = static_cast<std::size_t>(i);
    // Level i's data can change while we iterate, so work on copies.
    const std::vector<Point> orbit = levels_[li].orbit;
    const std::vector<Permutation> gens = levels_[li].generators;
    for (Point beta : orbit) {
      for (const auto& s : gens) {
        const Permutation& u_beta = *levels_[li].transversal[beta];
        const Permutation& u_next = *levels_[li].transversal[s(beta)];
        Permutation h = u_beta * s * u_next.inverse();
        auto [residue, stop] = sift(std::move(h), li + 1);
        if (residue.is_identity()) continue;
        if (stop == levels_.size()) {
          Level level;
          level.base_point = residue.first_moved();
          levels_.push_back(std::move(level));
        }
        for (std::size_t l = li + 1; l <= stop; ++l) add_generator_at(l, residue);
        i = static_cast<std::ptrdiff_t>(stop);
        restarted = true;
        break;
      }
      if (restarted) break;
    }
    if (!restarted) --i;
  }
}

std::vector<Point> StabilizerChain::base() const {
  std::vector<Point> out;
  for (const auto& l : levels_) out.push_back(l.base_point);
  return out;
}

std::uint64_t StabilizerChain::order() const {
  std::uint64_t n = 1;
  for (const auto& l : levels_) {
    const std::uint64_t k = l.orbit.size();
    if (n > UINT64_MAX / k) throw PreconditionError("group order overflows 64 bits");
    n *= k;
  }
  return n;
}

bool StabilizerChain::contains(const Permutation& g) const {
  if (g.degree() != degree_) throw PreconditionError("degree mismatch in membership test");
  auto [residue, stop] = sift(g);
  return stop == levels_.size() && residue.is_identity();
}

void StabilizerChain::for_each_element(
    const std::function<void(const Permutation&)>& visit) const {
  // g = u_{k-1} ... u_1 u_0 with u_l from level l's transversal.
  std::function<void(std::size_t, const Permutation&)> walk = [&](std::size_t l,
                                                                  const Permutation& prefix) {
    if (l == 0) {
      for (Point x : levels_[0].orbit) visit(prefix * *levels_[0].transversal[x]);
      return;
    }
    for (Point x : levels_[l].orbit) walk(l - 1, prefix * *levels_[l].transversal[x]);
  };
  if (levels_.empty()) {
    visit(Permutation::identity(degree_));
    return;
  }
  walk(levels_.size() - 1, Permutation::identity(degree_));
}

struct PermutationGroup::Cache {
  std::once_flag once;
  std::unique_ptr<StabilizerChain> chain;
};

PermutationGroup::PermutationGroup(std::size_t degree, std::vector<Permutation> generators)
    : degree_(degree), generators_(std::move(generators)), cache_(std::make_shared<Cache>()) {
  for (const auto& g : generators_) {
    if (g.degree() != degree_) throw PreconditionError("generator degree mismatch");
  }
}

const StabilizerChain& PermutationGroup::chain() const {
  std::call_once(cache_->once, [this] {
    cache_->chain = std::make_unique<StabilizerChain>(degree_, generators_);
  });
  return *cache_->chain;
}

bool PermutationGroup::contains(const Permutation& g) const {
  if (g.degree() != degree_) throw PreconditionError("degree mismatch in membership test");
  return chain().contains(g);
}

std::vector<Permutation> PermutationGroup::elements(std::uint64_t cap) const {
  const auto n = order();
  if (n > cap) {
    throw PreconditionError("group order " + std::to_string(n) + " exceeds enumeration cap " +
                            std::to_string(cap));
  }
  std::vector<Permutation> out;
  out.reserve(n);
  chain().for_each_element([&](const Permutation& g) { out.push_back(g); });
  return out;
}

}  // namespace symcent
