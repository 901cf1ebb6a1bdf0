#include "jhkit/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

#include "jhkit/error.hpp"

namespace jhkit {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 0 || v >= size() || seen[static_cast<std::size_t>(v)]) {
      throw std::invalid_argument("invalid permutation image table");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 0);
  return Permutation(std::move(images));
}

Permutation Permutation::parse_cycles(std::string_view text, int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 0);
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  if (text.substr(pos) == "id") return Permutation(std::move(images));
  while (pos < text.size()) {
    if (text[pos] != '(') throw ParseError("expected '(' in cycle notation", pos);
    ++pos;
    std::vector<int> cycle;
    for (;;) {
      skip_ws();
      if (pos >= text.size()) throw ParseError("unterminated cycle", pos);
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      if (text[pos] == ',') {
        ++pos;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[pos]))) {
        throw ParseError("expected point number in cycle", pos);
      }
      std::size_t start = pos;
      int value = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        value = value * 10 + (text[pos] - '0');
        if (value > 1'000'000) throw ParseError("point number too large", start);
        ++pos;
      }
      if (value < 1 || value > n) {
        throw ParseError("point " + std::to_string(value) + " outside 1.." + std::to_string(n), start);
      }
      if (used[static_cast<std::size_t>(value - 1)]) {
        throw ParseError("point " + std::to_string(value) + " repeated", start);
      }
      used[static_cast<std::size_t>(value - 1)] = true;
      cycle.push_back(value - 1);
    }
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      images[static_cast<std::size_t>(cycle[i])] = cycle[(i + 1) % cycle.size()];
    }
    skip_ws();
  }
  return Permutation(std::move(images));
}

std::vector<Permutation> Permutation::all(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 0);
  std::vector<Permutation> out;
  do {
    out.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

bool Permutation::is_identity() const noexcept {
  for (int i = 0; i < size(); ++i) {
    if (images_[static_cast<std::size_t>(i)] != i) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 0; i < size(); ++i) inv[static_cast<std::size_t>(images_[static_cast<std::size_t>(i)])] = i;
  return Permutation(std::move(inv));
}

Permutation Permutation::compose(const Permutation& other) const {
  if (other.size() != size()) throw std::invalid_argument("composing permutations of different degree");
  std::vector<int> out(images_.size());
  for (int i = 0; i < size(); ++i) out[static_cast<std::size_t>(i)] = (*this)(other(i));
  return Permutation(std::move(out));
}

std::string Permutation::to_cycles() const {
  std::string out;
  std::vector<bool> seen(images_.size(), false);
  for (int i = 0; i < size(); ++i) {
    if (seen[static_cast<std::size_t>(i)] || images_[static_cast<std::size_t>(i)] == i) continue;
    out += '(';
    int j = i;
    bool first = true;
    while (!seen[static_cast<std::size_t>(j)]) {
      seen[static_cast<std::size_t>(j)] = true;
      if (!first) out += ' ';
      out += std::to_string(j + 1);
      first = false;
      j = images_[static_cast<std::size_t>(j)];
    }
    out += ')';
  }
  return out.empty() ? std::string("()") : out;
}

}  // namespace jhkit
