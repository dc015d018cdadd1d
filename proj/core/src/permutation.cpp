#include "crownforge/permutation.hpp"

#include <charconv>
#include <numeric>

#include "crownforge/errors.hpp"

namespace crownforge {

Permutation::Permutation(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), Point{0});
}

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point v : images_) {
    if (v >= images_.size() || seen[v])
      throw PreconditionError("images do not form a permutation");
    seen[v] = true;
  }
}

Permutation Permutation::unchecked(std::vector<Point> images) {
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::from_one_based(std::span<const Point> images) {
  std::vector<Point> v(images.size());
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (images[i] == 0) throw PreconditionError("one-based image 0");
    v[i] = images[i] - 1;
  }
  return Permutation(std::move(v));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<Point> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = static_cast<Point>(i);
  return unchecked(std::move(inv));
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  std::vector<Point> r(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) r[i] = rhs.images_[images_[i]];
  return unchecked(std::move(r));
}

Permutation& Permutation::operator*=(const Permutation& rhs) {
  for (auto& v : images_) v = rhs.images_[v];
  return *this;
}

Permutation Permutation::pow(std::int64_t e) const {
  Permutation base = e < 0 ? inverse() : *this;
  std::uint64_t n = e < 0 ? static_cast<std::uint64_t>(-e) : static_cast<std::uint64_t>(e);
  Permutation r(degree());
  while (n) {
    if (n & 1) r *= base;
    base = base * base;
    n >>= 1;
  }
  return r;
}

Permutation Permutation::conjugate_by(const Permutation& g) const {
  // x^(g^-1 p g): maps x^g to (x^p)^g
  std::vector<Point> r(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) r[g.images_[i]] = g.images_[images_[i]];
  return unchecked(std::move(r));
}

Integer Permutation::order() const {
  std::vector<bool> seen(images_.size(), false);
  Integer l = 1;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::uint64_t len = 0;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    if (len > 1) {
      const Integer g = boost::multiprecision::gcd(l, Integer(len));
      l = l / g * len;
    }
  }
  return l;
}

std::vector<Point> Permutation::support() const {
  std::vector<Point> s;
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) s.push_back(static_cast<Point>(i));
  return s;
}

Permutation Permutation::extended(std::size_t degree) const {
  if (degree < images_.size()) throw PreconditionError("extended: degree shrinks");
  std::vector<Point> r(degree);
  std::iota(r.begin(), r.end(), Point{0});
  std::copy(images_.begin(), images_.end(), r.begin());
  return unchecked(std::move(r));
}

Permutation Permutation::shifted(std::size_t offset, std::size_t degree) const {
  if (offset + images_.size() > degree) throw PreconditionError("shifted: domain too small");
  std::vector<Point> r(degree);
  std::iota(r.begin(), r.end(), Point{0});
  for (std::size_t i = 0; i < images_.size(); ++i)
    r[offset + i] = static_cast<Point>(offset + images_[i]);
  return unchecked(std::move(r));
}

Permutation Permutation::restricted(std::size_t degree) const {
  std::vector<Point> r(images_.begin(), images_.begin() + static_cast<std::ptrdiff_t>(degree));
  for (Point v : r)
    if (v >= degree) throw PreconditionError("restricted: points not invariant");
  return unchecked(std::move(r));
}

std::string Permutation::to_string() const {
  std::string out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    out += '(';
    bool first = true;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      if (!first) out += ',';
      out += std::to_string(j + 1);
      first = false;
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Permutation parse_permutation(std::string_view text, std::size_t degree) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<bool> used(degree, false);
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == '\n')) ++i;
  };
  skip_ws();
  if (i == text.size()) throw ParseError("empty permutation text");
  while (i < text.size()) {
    if (text[i] != '(') throw ParseError("expected '(' in \"" + std::string(text) + "\"");
    ++i;
    skip_ws();
    std::vector<Point> cycle;
    if (i < text.size() && text[i] == ')') {
      ++i;
    } else {
      while (true) {
        skip_ws();
        std::uint64_t v = 0;
        auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), v);
        if (ec != std::errc()) throw ParseError("expected a point in \"" + std::string(text) + "\"");
        i = static_cast<std::size_t>(ptr - text.data());
        if (v < 1 || v > degree)
          throw ParseError("point " + std::to_string(v) + " out of range 1.." + std::to_string(degree));
        if (used[v - 1]) throw ParseError("point " + std::to_string(v) + " repeated");
        used[v - 1] = true;
        cycle.push_back(static_cast<Point>(v - 1));
        skip_ws();
        if (i < text.size() && text[i] == ',') {
          ++i;
          continue;
        }
        if (i < text.size() && text[i] == ')') {
          ++i;
          break;
        }
        throw ParseError("malformed cycle in \"" + std::string(text) + "\"");
      }
    }
    for (std::size_t k = 0; k < cycle.size(); ++k) images[cycle[k]] = cycle[(k + 1) % cycle.size()];
    skip_ws();
  }
  return Permutation::unchecked(std::move(images));
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (Point v : p.images()) {
    h ^= v;
    h *= 0x100000001b3ULL;
  }
  return static_cast<std::size_t>(h);
}

}  // namespace crownforge
