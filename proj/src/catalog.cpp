#include "holo/catalog.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <map>

#include "holo/errors.hpp"

namespace holo {

namespace {

std::vector<std::uint16_t> empty_table(std::size_t n) {
  return std::vector<std::uint16_t>(n * n);
}

}  // namespace

GroupPtr cyclic_group(std::size_t n) {
  if (n == 0 || n > kMaxTableOrder) throw ParseError("cyclic order out of range");
  auto t = empty_table(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      t[i * n + j] = static_cast<std::uint16_t>((i + j) % n);
  return make_table_group(std::move(t), n, "cyclic:" + std::to_string(n));
}

GroupPtr dihedral_group(std::size_t order) {
  if (order < 4 || order % 2 != 0 || order > kMaxTableOrder)
    throw ParseError("dihedral order must be an even number >= 4");
  const std::size_t n = order / 2;
  // Elements: r^i at i, s r^i at n+i, with s r^a s = r^-a.
  auto rot = [&](std::size_t a) { return a % n; };
  auto t = empty_table(order);
  std::vector<std::string> labels(order);
  for (std::size_t a = 0; a < n; ++a) {
    labels[a] = a == 0 ? "e" : "r^" + std::to_string(a);
    labels[n + a] = a == 0 ? "s" : "s r^" + std::to_string(a);
    for (std::size_t b = 0; b < n; ++b) {
      t[a * order + b] = static_cast<std::uint16_t>(rot(a + b));
      t[a * order + (n + b)] = static_cast<std::uint16_t>(n + rot(n + b - a));
      t[(n + a) * order + b] = static_cast<std::uint16_t>(n + rot(a + b));
      t[(n + a) * order + (n + b)] = static_cast<std::uint16_t>(rot(n + b - a));
    }
  }
  return make_table_group(std::move(t), order,
                          "dihedral:" + std::to_string(order),
                          std::move(labels));
}

GroupPtr quaternion_group(std::size_t order) {
  if (order < 8 || (order & (order - 1)) != 0 || order > kMaxTableOrder)
    throw ParseError("quaternion order must be a power of two >= 8");
  const std::size_t m = order / 2;  // order of a
  auto rot = [&](std::size_t v) { return v % m; };
  // Elements: a^i at i, a^i b at m+i, with b^2 = a^(m/2), b^-1 a b = a^-1.
  auto t = empty_table(order);
  std::vector<std::string> labels(order);
  for (std::size_t i = 0; i < m; ++i) {
    labels[i] = i == 0 ? "e" : "a^" + std::to_string(i);
    labels[m + i] = i == 0 ? "b" : "a^" + std::to_string(i) + " b";
    for (std::size_t j = 0; j < m; ++j) {
      t[i * order + j] = static_cast<std::uint16_t>(rot(i + j));
      t[i * order + (m + j)] = static_cast<std::uint16_t>(m + rot(i + j));
      t[(m + i) * order + j] = static_cast<std::uint16_t>(m + rot(m + i - j));
      t[(m + i) * order + (m + j)] =
          static_cast<std::uint16_t>(rot(m + i - j + m / 2));
    }
  }
  return make_table_group(std::move(t), order,
                          "quaternion:" + std::to_string(order),
                          std::move(labels));
}

namespace {

GroupPtr perm_family_group(std::size_t n, bool even_only, std::string name) {
  std::vector<Point> img(n);
  for (std::size_t i = 0; i < n; ++i) img[i] = static_cast<Point>(i);
  std::vector<std::vector<Point>> elems;
  auto parity = [](const std::vector<Point>& v) {
    int p = 0;
    for (std::size_t i = 0; i < v.size(); ++i)
      for (std::size_t j = i + 1; j < v.size(); ++j)
        if (v[i] > v[j]) ++p;
    return p % 2;
  };
  do {
    if (!even_only || parity(img) == 0) elems.push_back(img);
  } while (std::next_permutation(img.begin(), img.end()));
  const std::size_t m = elems.size();
  if (m > kMaxTableOrder) throw ParseError("degree out of range");
  std::map<std::vector<Point>, std::uint16_t> index;
  for (std::size_t i = 0; i < m; ++i)
    index[elems[i]] = static_cast<std::uint16_t>(i);
  auto t = empty_table(m);
  std::vector<std::string> labels(m);
  for (std::size_t i = 0; i < m; ++i) {
    labels[i] = Perm(std::vector<Point>(elems[i])).to_cycles();
    for (std::size_t j = 0; j < m; ++j) {
      std::vector<Point> prod(n);
      for (std::size_t x = 0; x < n; ++x) prod[x] = elems[j][elems[i][x]];
      t[i * m + j] = index.at(prod);
    }
  }
  return make_table_group(std::move(t), m, std::move(name), std::move(labels));
}

}  // namespace

GroupPtr symmetric_group(std::size_t n) {
  if (n < 1 || n > 6) throw ParseError("symmetric degree must be 1..6");
  return perm_family_group(n, false, "sym:" + std::to_string(n));
}

GroupPtr alternating_group(std::size_t n) {
  if (n < 1 || n > 7) throw ParseError("alternating degree must be 1..7");
  return perm_family_group(n, true, "alt:" + std::to_string(n));
}

namespace {

// Arithmetic of a small finite field of order q = p^k, k <= 2.
struct SmallField {
  std::size_t q = 0, p = 0;
  std::vector<std::uint8_t> add, mul;  // q*q tables

  explicit SmallField(std::size_t q_) : q(q_) {
    std::size_t red = 0;  // x^2 = red(x) for the quadratic extensions
    switch (q) {
      case 2: case 3: case 5: case 7: p = q; break;
      case 4: p = 2; red = 3; break;   // x^2 = x + 1
      case 9: p = 3; red = 2; break;   // x^2 = 2
      default: throw ParseError("unsupported field order");
    }
    add.resize(q * q);
    mul.resize(q * q);
    auto lo = [&](std::size_t v) { return v % p; };
    auto hi = [&](std::size_t v) { return v / p; };
    for (std::size_t a = 0; a < q; ++a)
      for (std::size_t b = 0; b < q; ++b) {
        add[a * q + b] = static_cast<std::uint8_t>(
            lo(lo(a) + lo(b)) + p * ((hi(a) + hi(b)) % p));
        if (q == p) {
          mul[a * q + b] = static_cast<std::uint8_t>(a * b % p);
        } else {
          // (a0 + a1 x)(b0 + b1 x) with x^2 reduced via red.
          std::size_t c0 = lo(a) * lo(b) % p;
          std::size_t c1 = (lo(a) * hi(b) + hi(a) * lo(b)) % p;
          std::size_t c2 = hi(a) * hi(b) % p;
          c0 = (c0 + c2 * lo(red)) % p;
          c1 = (c1 + c2 * hi(red)) % p;
          mul[a * q + b] = static_cast<std::uint8_t>(c0 + p * c1);
        }
      }
  }

  std::size_t plus(std::size_t a, std::size_t b) const { return add[a * q + b]; }
  std::size_t times(std::size_t a, std::size_t b) const { return mul[a * q + b]; }
  std::size_t neg(std::size_t a) const {
    for (std::size_t b = 0; b < q; ++b)
      if (plus(a, b) == 0) return b;
    throw InvariantError("field negation failed");
  }
};

using Mat2 = std::array<std::size_t, 4>;

GroupPtr matrix_group_from(const std::vector<Mat2>& mats, const SmallField& f,
                           std::string name) {
  // Identity first, the rest in lexicographic order.
  std::vector<Mat2> elems = mats;
  std::sort(elems.begin(), elems.end());
  Mat2 id = {1, 0, 0, 1};
  auto it = std::find(elems.begin(), elems.end(), id);
  if (it == elems.end()) throw InvariantError("identity matrix missing");
  std::rotate(elems.begin(), it, it + 1);
  std::map<Mat2, std::uint16_t> index;
  for (std::size_t i = 0; i < elems.size(); ++i)
    index[elems[i]] = static_cast<std::uint16_t>(i);
  const std::size_t m = elems.size();
  auto t = empty_table(m);
  std::vector<std::string> labels(m);
  for (std::size_t i = 0; i < m; ++i) {
    const Mat2& a = elems[i];
    labels[i] = "[" + std::to_string(a[0]) + "," + std::to_string(a[1]) + ";" +
                std::to_string(a[2]) + "," + std::to_string(a[3]) + "]";
    for (std::size_t j = 0; j < m; ++j) {
      const Mat2& b = elems[j];
      Mat2 c = {f.plus(f.times(a[0], b[0]), f.times(a[1], b[2])),
                f.plus(f.times(a[0], b[1]), f.times(a[1], b[3])),
                f.plus(f.times(a[2], b[0]), f.times(a[3], b[2])),
                f.plus(f.times(a[2], b[1]), f.times(a[3], b[3]))};
      t[i * m + j] = index.at(c);
    }
  }
  return make_table_group(std::move(t), m, std::move(name), std::move(labels));
}

}  // namespace

GroupPtr special_linear_2(std::size_t q) {
  SmallField f(q);
  std::vector<Mat2> mats;
  for (std::size_t a = 0; a < q; ++a)
    for (std::size_t b = 0; b < q; ++b)
      for (std::size_t c = 0; c < q; ++c)
        for (std::size_t d = 0; d < q; ++d)
          if (f.plus(f.times(a, d), f.neg(f.times(b, c))) == 1)
            mats.push_back({a, b, c, d});
  return matrix_group_from(mats, f, "sl:2," + std::to_string(q));
}

GroupPtr projective_special_linear_2(std::size_t q) {
  GroupPtr sl = special_linear_2(q);
  auto res = quotient_central(sl, sl->center_members());
  return res.group;
}

GroupPtr projective_special_linear_3_2() {
  // Invertible 3x3 matrices over the field with two elements.
  std::vector<std::array<std::uint8_t, 9>> mats;
  for (std::size_t bits = 0; bits < 512; ++bits) {
    std::array<std::uint8_t, 9> m;
    for (std::size_t i = 0; i < 9; ++i) m[i] = (bits >> i) & 1;
    std::uint8_t det =
        (m[0] & m[4] & m[8]) ^ (m[0] & m[5] & m[7]) ^ (m[1] & m[3] & m[8]) ^
        (m[1] & m[5] & m[6]) ^ (m[2] & m[3] & m[7]) ^ (m[2] & m[4] & m[6]);
    if (det) mats.push_back(m);
  }
  std::sort(mats.begin(), mats.end());
  std::array<std::uint8_t, 9> id = {1, 0, 0, 0, 1, 0, 0, 0, 1};
  auto idit = std::find(mats.begin(), mats.end(), id);
  std::rotate(mats.begin(), idit, idit + 1);
  std::map<std::array<std::uint8_t, 9>, std::uint16_t> index;
  for (std::size_t i = 0; i < mats.size(); ++i)
    index[mats[i]] = static_cast<std::uint16_t>(i);
  const std::size_t m = mats.size();
  auto t = empty_table(m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const auto& a = mats[i];
      const auto& b = mats[j];
      std::array<std::uint8_t, 9> c{};
      for (int r = 0; r < 3; ++r)
        for (int cc = 0; cc < 3; ++cc)
          c[r * 3 + cc] = (a[r * 3] & b[cc]) ^ (a[r * 3 + 1] & b[3 + cc]) ^
                          (a[r * 3 + 2] & b[6 + cc]);
      t[i * m + j] = index.at(c);
    }
  return make_table_group(std::move(t), m, "psl:3,2");
}

namespace {

struct SpecParser {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool consume(std::string_view word) {
    skip_ws();
    if (text.substr(pos, word.size()) == word) {
      pos += word.size();
      return true;
    }
    return false;
  }

  void expect(char c) {
    skip_ws();
    if (pos >= text.size() || text[pos] != c)
      throw ParseError("expected '" + std::string(1, c) + "' in group spec");
    ++pos;
  }

  std::size_t number() {
    skip_ws();
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
      throw ParseError("expected number in group spec");
    std::size_t v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      v = v * 10 + static_cast<std::size_t>(text[pos] - '0');
      if (v > 100000000) throw ParseError("number too large in group spec");
      ++pos;
    }
    return v;
  }

  bool next_is_digit() {
    std::size_t p = pos;
    while (p < text.size() && std::isspace(static_cast<unsigned char>(text[p]))) ++p;
    return p < text.size() && std::isdigit(static_cast<unsigned char>(text[p]));
  }

  GroupPtr parse_spec() {
    skip_ws();
    if (consume("direct(")) {
      GroupPtr a = parse_spec();
      expect(',');
      GroupPtr b = parse_spec();
      expect(')');
      return direct_product(a, b).group;
    }
    if (consume("central(")) {
      GroupPtr a = parse_spec();
      expect(',');
      GroupPtr b = parse_spec();
      std::vector<std::pair<Elt, Elt>> pairs;
      bool explicit_amalgam = false;
      skip_ws();
      if (pos < text.size() && text[pos] == ';') {
        ++pos;
        explicit_amalgam = true;
        for (;;) {
          std::size_t l = number();
          expect('=');
          std::size_t r = number();
          pairs.emplace_back(static_cast<Elt>(l), static_cast<Elt>(r));
          skip_ws();
          if (pos < text.size() && text[pos] == ',') {
            ++pos;
            continue;
          }
          break;
        }
      }
      expect(')');
      if (!explicit_amalgam) pairs = default_amalgam(a, b);
      return central_product(a, b, pairs).group;
    }
    if (consume("opposite(")) {
      GroupPtr a = parse_spec();
      expect(')');
      return opposite(a);
    }
    // atom
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
      ++pos;
    std::string name(text.substr(start, pos - start));
    if (name.empty()) throw ParseError("expected group name in spec");
    expect(':');
    std::vector<std::size_t> params;
    params.push_back(number());
    // Greedy parameter list: a comma followed by a digit continues the atom.
    while (true) {
      std::size_t save = pos;
      skip_ws();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        if (next_is_digit()) {
          params.push_back(number());
          continue;
        }
      }
      pos = save;
      break;
    }
    return build_atom(name, params);
  }

  static GroupPtr build_atom(const std::string& name,
                             const std::vector<std::size_t>& params) {
    auto arity = [&](std::size_t n) {
      if (params.size() != n)
        throw ParseError("wrong parameter count for " + name);
    };
    if (name == "cyclic") {
      arity(1);
      return cyclic_group(params[0]);
    }
    if (name == "dihedral") {
      arity(1);
      return dihedral_group(params[0]);
    }
    if (name == "quaternion") {
      arity(1);
      return quaternion_group(params[0]);
    }
    if (name == "sym") {
      arity(1);
      return symmetric_group(params[0]);
    }
    if (name == "alt") {
      arity(1);
      return alternating_group(params[0]);
    }
    if (name == "sl") {
      arity(2);
      if (params[0] != 2) throw ParseError("only sl:2,q is available");
      return special_linear_2(params[1]);
    }
    if (name == "psl") {
      arity(2);
      if (params[0] == 2) return projective_special_linear_2(params[1]);
      if (params[0] == 3 && params[1] == 2)
        return projective_special_linear_3_2();
      throw ParseError("only psl:2,q and psl:3,2 are available");
    }
    throw ParseError("unknown group name: " + name);
  }

  // The unique central subgroups of equal prime order on both sides.
  static std::vector<std::pair<Elt, Elt>> default_amalgam(const GroupPtr& a,
                                                          const GroupPtr& b) {
    auto prime_subgroups = [](const GroupPtr& g) {
      std::map<std::size_t, std::vector<std::vector<Elt>>> by_prime;
      for (Elt z : g->center_members()) {
        std::size_t o = g->element_order(z);
        if (o < 2) continue;
        bool prime = true;
        for (std::size_t d = 2; d * d <= o; ++d)
          if (o % d == 0) {
            prime = false;
            break;
          }
        if (!prime) continue;
        std::vector<Elt> sub;
        Elt c = z;
        while (c != 0) {
          sub.push_back(c);
          c = g->mul(c, z);
        }
        sub.push_back(0);
        std::sort(sub.begin(), sub.end());
        auto& list = by_prime[o];
        if (std::find(list.begin(), list.end(), sub) == list.end())
          list.push_back(sub);
      }
      return by_prime;
    };
    auto pa = prime_subgroups(a);
    auto pb = prime_subgroups(b);
    std::vector<std::size_t> candidates;
    for (const auto& [p, subs] : pa)
      if (subs.size() == 1 && pb.count(p) && pb.at(p).size() == 1)
        candidates.push_back(p);
    if (candidates.size() != 1)
      throw ParseError(
          "central() needs an explicit amalgam: no unique prime-order "
          "central subgroup pairing");
    std::size_t p = candidates[0];
    // Map least generator to least generator.
    Elt ga = 0, gb = 0;
    for (Elt z : pa.at(p)[0])
      if (z != 0) {
        ga = z;
        break;
      }
    for (Elt z : pb.at(p)[0])
      if (z != 0) {
        gb = z;
        break;
      }
    return {{ga, gb}};
  }
};

}  // namespace

GroupPtr named_group(std::string_view spec) {
  SpecParser p{spec};
  GroupPtr g = p.parse_spec();
  p.skip_ws();
  if (p.pos != spec.size())
    throw ParseError("trailing characters in group spec");
  return g;
}

}  // namespace holo
