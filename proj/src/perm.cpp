#include "holo/perm.hpp"

#include <algorithm>
#include <cctype>

#include "holo/errors.hpp"

namespace holo {

Perm::Perm(std::size_t degree) : images_(degree) {
  for (std::size_t i = 0; i < degree; ++i) images_[i] = static_cast<Point>(i);
}

Perm::Perm(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point img : images_) {
    if (img >= images_.size() || seen[img])
      throw ParseError("image vector is not a permutation");
    seen[img] = true;
  }
}

bool Perm::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Perm Perm::then(const Perm& other) const {
  if (degree() != other.degree())
    throw Error("degree mismatch in composition");
  Perm r;
  r.images_.resize(degree());
  for (std::size_t i = 0; i < degree(); ++i)
    r.images_[i] = other.images_[images_[i]];
  return r;
}

Perm Perm::inverse() const {
  Perm r;
  r.images_.resize(degree());
  for (std::size_t i = 0; i < degree(); ++i)
    r.images_[images_[i]] = static_cast<Point>(i);
  return r;
}

Perm Perm::conjugated_by(const Perm& t) const {
  // t^-1 * this * t, left to right: x -> t[this[t^-1[x]]]
  if (degree() != t.degree())
    throw Error("degree mismatch in conjugation");
  Perm r;
  r.images_.resize(degree());
  for (std::size_t i = 0; i < degree(); ++i)
    r.images_[t.images_[i]] = t.images_[images_[i]];
  return r;
}

std::string Perm::to_cycles() const {
  std::string out;
  std::vector<bool> done(degree(), false);
  for (std::size_t start = 0; start < degree(); ++start) {
    if (done[start] || images_[start] == start) continue;
    out += '(';
    Point x = static_cast<Point>(start);
    bool first = true;
    do {
      if (!first) out += ' ';
      out += std::to_string(x);
      done[x] = true;
      x = images_[x];
      first = false;
    } while (x != start);
    out += ')';
  }
  if (out.empty()) out = "()";
  return out;
}

Perm Perm::parse(std::string_view text, std::size_t degree) {
  std::vector<Point> images(degree);
  for (std::size_t i = 0; i < degree; ++i) images[i] = static_cast<Point>(i);
  std::vector<bool> moved(degree, false);

  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  bool any_cycle = false;
  while (pos < text.size()) {
    if (text[pos] != '(') throw ParseError("expected '(' in cycle notation");
    ++pos;
    std::vector<Point> cycle;
    skip_ws();
    while (pos < text.size() && text[pos] != ')') {
      if (!std::isdigit(static_cast<unsigned char>(text[pos])))
        throw ParseError("expected point in cycle notation");
      unsigned long v = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        v = v * 10 + static_cast<unsigned long>(text[pos] - '0');
        if (v >= degree) throw ParseError("point out of range in cycle notation");
        ++pos;
      }
      cycle.push_back(static_cast<Point>(v));
      skip_ws();
      if (pos < text.size() && text[pos] == ',') {  // tolerate comma separators
        ++pos;
        skip_ws();
      }
    }
    if (pos == text.size()) throw ParseError("unterminated cycle");
    ++pos;  // ')'
    any_cycle = true;
    if (cycle.size() >= 2) {
      for (Point p : cycle) {
        if (moved[p]) throw ParseError("point repeated across cycles");
        moved[p] = true;
      }
      for (std::size_t i = 0; i < cycle.size(); ++i)
        images[cycle[i]] = cycle[(i + 1) % cycle.size()];
    } else if (cycle.size() == 1) {
      if (moved[cycle[0]]) throw ParseError("point repeated across cycles");
      moved[cycle[0]] = true;
    }
    skip_ws();
  }
  if (!any_cycle) throw ParseError("empty permutation text");
  return Perm(std::move(images));
}

std::size_t Perm::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (Point p : images_) {
    h ^= p;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace holo
