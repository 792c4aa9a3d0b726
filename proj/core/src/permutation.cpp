#include "symcent/permutation.hpp"

#include <numeric>

#include "symcent/error.hpp"

namespace symcent {

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point x : images_) {
    if (x >= images_.size() || seen[x]) throw PreconditionError("images do not form a bijection");
    seen[x] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  return Permutation(std::move(images), Unchecked{});
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<Point> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = static_cast<Point>(i);
  return Permutation(std::move(inv), Unchecked{});
}

std::uint64_t Permutation::order() const {
  std::uint64_t result = 1;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::uint64_t len = 0;
    for (auto x = static_cast<Point>(i); !seen[x]; x = images_[x]) {
      seen[x] = true;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

Point Permutation::first_moved() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return static_cast<Point>(i);
  }
  return static_cast<Point>(images_.size());
}

std::string Permutation::to_cycles() const {
  std::string out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    out += '(';
    bool first = true;
    for (auto x = static_cast<Point>(i); !seen[x]; x = images_[x]) {
      seen[x] = true;
      if (!first) out += ' ';
      out += std::to_string(x + 1);
      first = false;
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Permutation operator*(const Permutation& g, const Permutation& h) {
  if (g.degree() != h.degree()) throw PreconditionError("degree mismatch in product");
  std::vector<Point> images(g.degree());
  for (std::size_t i = 0; i < images.size(); ++i) images[i] = h.images_[g.images_[i]];
  return Permutation(std::move(images), Permutation::Unchecked{});
}

Permutation conjugate(const Permutation& h, const Permutation& g) {
  return g.inverse() * h * g;
}

Permutation parse_permutation(std::string_view text, std::size_t degree) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<bool> used(degree, false);

  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == ',' ||
                               text[i] == '\r' || text[i] == '\n')) {
      ++i;
    }
  };

  skip_space();
  if (i == text.size()) throw ParseError("empty permutation", i);
  while (i < text.size()) {
    if (text[i] != '(') throw ParseError("expected '('", i);
    ++i;
    std::vector<Point> cycle;
    skip_space();
    while (i < text.size() && text[i] != ')') {
      if (text[i] < '0' || text[i] > '9') throw ParseError("expected a point", i);
      const std::size_t start = i;
      std::uint64_t v = 0;
      while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
        v = v * 10 + static_cast<std::uint64_t>(text[i] - '0');
        if (v > degree) throw ParseError("point exceeds degree " + std::to_string(degree), start);
        ++i;
      }
      if (v == 0) throw ParseError("points are 1-based", start);
      const auto x = static_cast<Point>(v - 1);
      if (used[x]) throw ParseError("repeated point " + std::to_string(v), start);
      used[x] = true;
      cycle.push_back(x);
      skip_space();
    }
    if (i == text.size()) throw ParseError("unterminated cycle", i);
    ++i;  // ')'
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      images[cycle[k]] = cycle[(k + 1) % cycle.size()];
    }
    skip_space();
  }
  return Permutation(std::move(images));
}

std::size_t PermutationHash::operator()(const Permutation& g) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (Point x : g.images()) {
    h ^= x;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace symcent
