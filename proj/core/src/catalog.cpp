#include "symcent/catalog.hpp"

#include <fstream>
#include <sstream>
#include <unordered_set>

#include "symcent/action.hpp"
#include "symcent/error.hpp"
#include "symcent/field.hpp"

namespace symcent {

namespace {

Permutation cycle(std::size_t degree, const std::vector<Point>& points) {
  std::vector<Point> images(degree);
  for (std::size_t i = 0; i < degree; ++i) images[i] = static_cast<Point>(i);
  for (std::size_t k = 0; k < points.size(); ++k) images[points[k]] = points[(k + 1) % points.size()];
  return Permutation(std::move(images));
}

std::vector<Point> range(Point first, Point last) {
  std::vector<Point> out;
  for (Point x = first; x < last; ++x) out.push_back(x);
  return out;
}

std::uint32_t primitive_root(std::uint32_t q) {
  const Field f = Field::prime(q);
  for (std::uint32_t g = 1; g < q; ++g) {
    std::uint64_t order = 1;
    FieldElement x{g};
    while (x != f.one()) {
      x = f.mul(x, FieldElement{g});
      ++order;
    }
    if (order == q - 1) return g;
  }
  return 1;
}

}  // namespace

PermutationGroup build_symmetric(std::size_t n) {
  if (n == 0) throw PreconditionError("degree must be positive");
  if (n == 1) return PermutationGroup::trivial(1);
  std::vector<Permutation> gens{cycle(n, {0, 1})};
  if (n > 2) gens.push_back(cycle(n, range(0, static_cast<Point>(n))));
  return {n, std::move(gens)};
}

PermutationGroup build_alternating(std::size_t n) {
  if (n == 0) throw PreconditionError("degree must be positive");
  if (n < 3) return PermutationGroup::trivial(n);
  std::vector<Permutation> gens{cycle(n, {0, 1, 2})};
  if (n > 3) {
    gens.push_back(n % 2 == 1 ? cycle(n, range(0, static_cast<Point>(n)))
                              : cycle(n, range(1, static_cast<Point>(n))));
  }
  return {n, std::move(gens)};
}

PermutationGroup build_alt_on_pairs(std::size_t n, bool add_transposition) {
  if (n < 3) throw PreconditionError("altpairs needs n >= 3");
  auto base = build_alternating(n);
  if (add_transposition) {
    auto gens = base.generators();
    gens.push_back(cycle(n, {0, 1}));
    base = PermutationGroup(n, std::move(gens));
  }
  return action_on_ksubsets(base, 2);
}

PermutationGroup build_sign_twist(std::size_t n) {
  if (n < 3) throw PreconditionError("signtwist needs n >= 3");
  if ((n + 1) * (n + 2) / 2 > kDerivedActionCap) throw PreconditionError("signtwist degree exceeds cap");
  const std::size_t deg = n + 2;
  const auto big = build_alternating(deg);
  const auto twist = cycle(deg, {static_cast<Point>(n), static_cast<Point>(n + 1)});
  // S_n = <(1 2), (1 2 ... n)>; the n-cycle is odd exactly when n is even.
  std::vector<Permutation> hgens{cycle(deg, {0, 1}) * twist};
  auto ncycle = cycle(deg, range(0, static_cast<Point>(n)));
  hgens.push_back(n % 2 == 0 ? ncycle * twist : ncycle);
  return action_on_cosets(big, PermutationGroup(deg, std::move(hgens)));
}

PermutationGroup build_frobenius_affine(std::uint32_t q, std::uint32_t d) {
  if (!is_prime(q)) throw PreconditionError("frobenius: q must be prime");
  if (d == 0 || (q - 1) % d != 0) throw PreconditionError("frobenius: d must divide q-1");
  const Field f = Field::prime(q);
  const FieldElement a = f.pow(FieldElement{primitive_root(q)}, (q - 1) / d);
  std::vector<Point> shift(q);
  std::vector<Point> scale(q);
  for (std::uint32_t x = 0; x < q; ++x) {
    shift[x] = (x + 1) % q;
    scale[x] = f.mul(a, FieldElement{x}).value;
  }
  std::vector<Permutation> gens{Permutation(std::move(shift))};
  if (d > 1) gens.emplace_back(std::move(scale));
  return {q, std::move(gens)};
}

AffineExample build_affine_counterexample() {
  auto point = [](std::uint32_t x, std::uint32_t y) { return static_cast<Point>(x % 3 + 3 * (y % 3)); };
  std::vector<Point> a(9);
  std::vector<Point> b(9);
  std::vector<Point> xm(9);
  for (std::uint32_t y = 0; y < 3; ++y) {
    for (std::uint32_t x = 0; x < 3; ++x) {
      a[point(x, y)] = point(x + 1, y);
      b[point(x, y)] = point(x, y + 1);
      xm[point(x, y)] = point(x + y, y);  // X (x,y)^T = (x+y, y)^T
    }
  }
  AffineExample ex{PermutationGroup::trivial(9), Permutation(a), Permutation(b), Permutation(xm), 0};
  ex.group = PermutationGroup(9, {ex.a, ex.b, ex.x});
  return ex;
}

namespace {

struct Gf2mMatrix {
  FieldElement a, b, c, d;
};

// Right action of a 2x2 matrix on projective points; (1:x) -> x, (0:1) -> q.
Permutation projective_map(const Field& f, const Gf2mMatrix& m) {
  const auto q = static_cast<std::uint32_t>(f.order());
  std::vector<Point> images(q + 1);
  for (std::uint32_t i = 0; i <= q; ++i) {
    const FieldElement u = i < q ? f.one() : f.zero();
    const FieldElement v = i < q ? FieldElement{i} : f.one();
    const FieldElement nu = f.add(f.mul(u, m.a), f.mul(v, m.c));
    const FieldElement nv = f.add(f.mul(u, m.b), f.mul(v, m.d));
    images[i] = f.is_zero(nu) ? q : f.mul(nv, f.inv(nu)).value;
  }
  return Permutation(std::move(images));
}

FieldElement multiplicative_generator(const Field& f) {
  for (std::uint64_t g = 2; g < f.order(); ++g) {
    const FieldElement x{static_cast<std::uint32_t>(g)};
    bool generates = true;
    const std::uint64_t n = f.order() - 1;
    for (std::uint64_t r = 2; r <= n; ++r) {
      if (n % r == 0 && is_prime(r) && f.pow(x, n / r) == f.one()) {
        generates = false;
        break;
      }
    }
    if (generates) return x;
  }
  return f.one();
}

}  // namespace

PermutationGroup build_psl2(std::uint32_t q, Psl2Action action) {
  unsigned m = 0;
  switch (q) {
    case 4: m = 2; break;
    case 8: m = 3; break;
    case 32: m = 5; break;
    default: throw PreconditionError("psl2: q must be one of 4, 8, 32");
  }
  if (action == Psl2Action::dihedral_cosets && q < 8) {
    throw PreconditionError("psl2cosets needs q >= 8");
  }
  const Field f = Field::binary(m);
  const FieldElement w = multiplicative_generator(f);
  // Transvection and inversion have F_2 entries and only generate SL(2,2);
  // the diagonal diag(w, w^-1) supplies the rest of the field.
  std::vector<Permutation> gens{
      projective_map(f, {f.one(), f.one(), f.zero(), f.one()}),
      projective_map(f, {f.zero(), f.one(), f.one(), f.zero()}),
      projective_map(f, {w, f.zero(), f.zero(), f.inv(w)}),
  };
  PermutationGroup line(q + 1, std::move(gens));
  if (action == Psl2Action::line) return line;

  const auto elems = line.elements(kEnumerationCap);
  const Permutation* c = nullptr;
  for (const auto& g : elems) {
    if (g.order() == q + 1) {
      c = &g;
      break;
    }
  }
  if (c == nullptr) throw VerificationError("psl2: no element of order q+1");
  std::unordered_set<Permutation, PermutationHash> cyclic;
  Permutation power = Permutation::identity(q + 1);
  for (std::uint32_t i = 0; i <= q; ++i, power = power * *c) cyclic.insert(power);
  std::vector<Permutation> hgens{*c};
  for (const auto& g : elems) {
    if (!cyclic.contains(g) && cyclic.contains(conjugate(*c, g))) {
      hgens.push_back(g);
      break;
    }
  }
  PermutationGroup dihedral(q + 1, std::move(hgens));
  if (dihedral.order() != 2 * (q + 1)) throw VerificationError("psl2: normalizer has wrong order");
  return action_on_cosets(line, dihedral);
}

PermutationGroup parse_generator_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t degree = 0;
  bool have_degree = false;
  std::vector<Permutation> gens;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    if (!have_degree) {
      std::istringstream head(line.substr(first));
      std::string word;
      head >> word;
      if (word != "degree" || !(head >> degree) || degree == 0) {
        throw ParseError("line " + std::to_string(lineno) + ": expected 'degree n'", first);
      }
      have_degree = true;
      continue;
    }
    try {
      gens.push_back(parse_permutation(line, degree));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(lineno) + ": " + e.what(), e.position());
    }
  }
  if (!have_degree) throw ParseError("missing 'degree n' line", 0);
  return {degree, std::move(gens)};
}

PermutationGroup read_generator_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot open generator file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_generator_text(buf.str());
}

namespace {

std::vector<std::uint64_t> parse_params(const std::string& spec, const std::string& body,
                                        std::size_t count) {
  std::vector<std::uint64_t> out;
  std::size_t i = 0;
  while (i <= body.size()) {
    const auto comma = body.find(',', i);
    const auto piece = body.substr(i, comma == std::string::npos ? std::string::npos : comma - i);
    if (piece.empty() || piece.find_first_not_of("0123456789") != std::string::npos ||
        piece.size() > 9) {
      throw PreconditionError("malformed group spec '" + spec + "'");
    }
    out.push_back(std::stoull(piece));
    if (comma == std::string::npos) break;
    i = comma + 1;
  }
  if (out.size() != count) throw PreconditionError("group spec '" + spec + "' expects " +
                                                   std::to_string(count) + " parameter(s)");
  return out;
}

}  // namespace

CatalogEntry build_from_spec(const std::string& spec) {
  const auto colon = spec.find(':');
  const std::string name = spec.substr(0, colon);
  const std::string body = colon == std::string::npos ? "" : spec.substr(colon + 1);
  auto one = [&] { return static_cast<std::size_t>(parse_params(spec, body, 1)[0]); };

  if (name == "file") {
    if (body.empty()) throw PreconditionError("file: spec needs a path");
    return {spec, read_generator_file(body), {}, {}, "generators from " + body};
  }
  if (colon == std::string::npos && name != "example3_2") {
    throw PreconditionError("unknown group spec '" + spec + "'");
  }
  if (name == "sym") {
    const auto n = one();
    return {spec, build_symmetric(n), {}, {}, "symmetric group, natural action"};
  }
  if (name == "alt") {
    const auto n = one();
    return {spec, build_alternating(n), {}, {}, "alternating group, natural action"};
  }
  if (name == "altpairs") {
    const auto n = one();
    return {spec, build_alt_on_pairs(n), {}, {}, "alternating group on 2-subsets"};
  }
  if (name == "signtwist") {
    const auto n = one();
    return {spec, build_sign_twist(n), {}, {}, "A_{n+2} on cosets of sign-twisted S_n"};
  }
  if (name == "frobenius") {
    const auto p = parse_params(spec, body, 2);
    if (p[0] > 10'000) throw PreconditionError("frobenius: q exceeds cap");
    const auto q = static_cast<std::uint32_t>(p[0]);
    const auto d = static_cast<std::uint32_t>(p[1]);
    auto g = build_frobenius_affine(q, d);
    std::vector<Permutation> t{g.generators().front()};
    auto namer = [](std::size_t i) { return std::to_string(i); };
    return {spec, std::move(g), std::move(t), namer, "one-dimensional affine group x -> ax+b"};
  }
  if (name == "example3_2") {
    if (colon != std::string::npos) throw PreconditionError("example3_2 takes no parameters");
    auto ex = build_affine_counterexample();
    const auto elems = regular_subgroup_elements({ex.a, ex.b}, 9, ex.alpha);
    std::vector<Point> points;
    for (const auto& e : elems) points.push_back(e(ex.alpha));
    auto namer = [points](std::size_t i) {
      const Point v = points.at(i);
      const unsigned x = v % 3;
      const unsigned y = v / 3;
      std::string s;
      if (x == 1) s += "a";
      if (x == 2) s += "a^2";
      if (y == 1) s += "b";
      if (y == 2) s += "b^2";
      return s.empty() ? std::string("1") : s;
    };
    return {spec, ex.group, {ex.a, ex.b}, namer, "T:<X> in AGL(2,3), X = [[1,1],[0,1]]"};
  }
  if (name == "psl2line") {
    const auto q = static_cast<std::uint32_t>(one());
    return {spec, build_psl2(q, Psl2Action::line), {}, {}, "PSL(2,q) on the projective line"};
  }
  if (name == "psl2cosets") {
    const auto q = static_cast<std::uint32_t>(one());
    return {spec, build_psl2(q, Psl2Action::dihedral_cosets), {}, {},
            "PSL(2,q) on cosets of D_{2(q+1)}"};
  }
  throw PreconditionError("unknown group spec '" + spec + "'");
}

std::vector<CatalogListing> catalog_listing() {
  return {
      {"sym:n", "n", "symmetric group S_n, natural action (2-transitive)"},
      {"alt:n", "n", "alternating group A_n, natural action (2-transitive for n >= 4)"},
      {"altpairs:n", "n(n-1)/2", "A_n on 2-subsets; n = 7 gives subdegrees {1,10,10}"},
      {"signtwist:n", "(n+1)(n+2)/2", "A_{n+2} on cosets of sign-twisted S_n; subdegrees {1,2n,n(n-1)/2}"},
      {"frobenius:q,d", "q", "x -> ax+b, a in the order-d subgroup of F_q^*, q prime"},
      {"example3_2", "9", "T:<X> in AGL(2,3); subdegrees {1,1,1,3,3}; non-symmetric over F_3"},
      {"psl2line:q", "q+1", "PSL(2,q), q in {4,8,32}, on the projective line"},
      {"psl2cosets:q", "q(q-1)/2", "PSL(2,q), q in {8,32}, on cosets of D_{2(q+1)}; 3/2-transitive"},
      {"file:<path>", "from file", "generator file: 'degree n' then one cycle-notation generator per line"},
  };
}

}  // namespace symcent
