#include "grouplab/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "grouplab/errors.hpp"

namespace grouplab {

Perm::Perm(Point degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), Point{0});
}

Perm Perm::from_images(std::vector<Point> images) {
  std::vector<bool> seen(images.size(), false);
  for (Point v : images) {
    if (v >= images.size() || seen[v])
      throw Error("image array is not a bijection");
    seen[v] = true;
  }
  Perm p;
  p.images_ = std::move(images);
  return p;
}

Perm Perm::from_cycles(Point degree,
                       const std::vector<std::vector<Point>>& cycles) {
  std::vector<Point> img(degree);
  std::iota(img.begin(), img.end(), Point{0});
  std::vector<bool> used(degree, false);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      Point a = cycle[i];
      Point b = cycle[(i + 1) % cycle.size()];
      if (a == 0 || a > degree)
        throw Error("point " + std::to_string(a) + " out of range 1.." +
                    std::to_string(degree));
      if (used[a - 1])
        throw Error("repeated point " + std::to_string(a) + " in cycle spec");
      used[a - 1] = true;
      img[a - 1] = b - 1;
    }
  }
  return from_images(std::move(img));
}

Perm Perm::operator*(const Perm& rhs) const {
  Perm out;
  out.images_.resize(images_.size());
  for (Point i = 0; i < degree(); ++i)
    out.images_[i] = rhs.images_[images_[i]];
  return out;
}

Perm Perm::inverse() const {
  Perm out;
  out.images_.resize(images_.size());
  for (Point i = 0; i < degree(); ++i)
    out.images_[images_[i]] = i;
  return out;
}

Perm Perm::conjugated_by(const Perm& g) const {
  // (g^-1 * h * g)[x] = g[h[g^-1[x]]], built without forming g^-1 explicitly
  Perm out;
  out.images_.resize(images_.size());
  for (Point i = 0; i < degree(); ++i)
    out.images_[g.images_[i]] = g.images_[images_[i]];
  return out;
}

Perm Perm::commutator_with(const Perm& y) const {
  return inverse() * y.inverse() * *this * y;
}

bool Perm::is_identity() const {
  for (Point i = 0; i < degree(); ++i)
    if (images_[i] != i) return false;
  return true;
}

std::uint64_t Perm::order() const {
  std::vector<bool> seen(images_.size(), false);
  std::uint64_t ord = 1;
  for (Point i = 0; i < degree(); ++i) {
    if (seen[i]) continue;
    std::uint64_t len = 0;
    Point j = i;
    while (!seen[j]) {
      seen[j] = true;
      j = images_[j];
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

std::string Perm::to_cycle_string() const {
  std::ostringstream out;
  std::vector<bool> seen(images_.size(), false);
  bool any = false;
  for (Point i = 0; i < degree(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    any = true;
    out << '(';
    Point j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) out << ' ';
      out << (j + 1);
      first = false;
      j = images_[j];
    }
    out << ')';
  }
  if (!any) return "()";
  return out.str();
}

std::size_t PermHash::operator()(const Perm& p) const noexcept {
  // FNV-1a over the image words
  std::uint64_t h = 1469598103934665603ull;
  for (Point v : p.images()) {
    h ^= v;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

Perm parse_cycles(Point degree, const std::string& text) {
  std::vector<std::vector<Point>> cycles;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  };
  skip_ws();
  if (i == text.size()) throw Error("empty cycle spec");
  while (i < text.size()) {
    skip_ws();
    if (i == text.size()) break;
    if (text[i] != '(')
      throw Error(std::string("expected '(' in cycle spec, got '") +
                  text[i] + "'");
    ++i;
    std::vector<Point> cycle;
    while (true) {
      skip_ws();
      if (i == text.size()) throw Error("unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw Error(std::string("unexpected character '") + text[i] +
                    "' in cycle");
      std::uint64_t v = 0;
      while (i < text.size() &&
             std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + (text[i] - '0');
        if (v > 1000000) throw Error("point value too large");
        ++i;
      }
      if (v == 0) throw Error("points are 1-based; 0 is not a point");
      cycle.push_back(static_cast<Point>(v));
    }
    if (!cycle.empty()) cycles.push_back(std::move(cycle));
  }
  return Perm::from_cycles(degree, cycles);
}

} // namespace grouplab
