#include <stdexcept>

#include "jhkit/collector.hpp"
#include "jhkit/error.hpp"

namespace jhkit {

namespace {

// Hall rank: heavier elements are larger; within a weight, earlier is larger.
bool greater(const std::vector<HallElement>& h, int u, int v) {
  if (h[static_cast<std::size_t>(u)].weight != h[static_cast<std::size_t>(v)].weight)
    return h[static_cast<std::size_t>(u)].weight > h[static_cast<std::size_t>(v)].weight;
  return u < v;
}

}  // namespace

std::vector<HallElement> hall_basis(const AlphabetPtr& alphabet, int max_weight) {
  if (max_weight < 1) throw PreconditionError("hall_basis: max_weight must be >= 1");
  std::vector<HallElement> h;
  for (Letter l = 0; l < alphabet->size(); ++l) h.push_back({1, l, -1, -1});
  for (int n = 2; n <= max_weight; ++n) {
    const int existing = static_cast<int>(h.size());
    for (int u = 0; u < existing; ++u) {
      for (int v = 0; v < existing; ++v) {
        const auto& eu = h[static_cast<std::size_t>(u)];
        if (eu.weight + h[static_cast<std::size_t>(v)].weight != n) continue;
        if (!greater(h, u, v)) continue;
        if (!eu.is_leaf() && greater(h, eu.right, v)) continue;
        h.push_back({n, 0, u, v});
      }
    }
  }
  return h;
}

std::string hall_to_string(const std::vector<HallElement>& basis, std::size_t index, const Alphabet& alphabet) {
  const auto& e = basis.at(index);
  if (e.is_leaf()) return alphabet.name(e.leaf);
  return "[" + hall_to_string(basis, static_cast<std::size_t>(e.left), alphabet) + "," +
         hall_to_string(basis, static_cast<std::size_t>(e.right), alphabet) + "]";
}

Word hall_to_word(const std::vector<HallElement>& basis, std::size_t index, const AlphabetPtr& alphabet) {
  const auto& e = basis.at(index);
  if (e.is_leaf()) return Word::letter(alphabet, e.leaf);
  return commutator(hall_to_word(basis, static_cast<std::size_t>(e.left), alphabet),
                    hall_to_word(basis, static_cast<std::size_t>(e.right), alphabet));
}

long long witt_dimension(int m, int n) {
  if (n < 1) throw std::invalid_argument("witt_dimension: n must be >= 1");
  auto mobius = [](int d) {
    int result = 1;
    for (int q = 2; q * q <= d; ++q) {
      if (d % q) continue;
      d /= q;
      if (d % q == 0) return 0;
      result = -result;
    }
    return d > 1 ? -result : result;
  };
  long long total = 0;
  for (int d = 1; d <= n; ++d) {
    if (n % d) continue;
    long long pw = 1;
    for (int i = 0; i < n / d; ++i) pw *= m;
    total += mobius(d) * pw;
  }
  return total / n;
}

}  // namespace jhkit
