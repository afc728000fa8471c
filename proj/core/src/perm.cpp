#include "cayleylab/perm.hpp"

#include <algorithm>
#include <cctype>

#include "cayleylab/error.hpp"

namespace cayleylab {
namespace {

void check_degree(int n) {
  if (n < 1 || n > Permutation::kMaxDegree) {
    throw InvalidArgument("permutation degree " + std::to_string(n) +
                          " outside [1, " +
                          std::to_string(Permutation::kMaxDegree) + "]");
  }
}

void check_same_degree(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) {
    throw InvalidArgument("degree mismatch: " + std::to_string(a.degree()) +
                          " vs " + std::to_string(b.degree()));
  }
}

// Reads one parenthesised cycle starting at text[pos] == '('. Advances pos
// past the closing parenthesis.
std::vector<int> read_cycle(std::string_view text, size_t& pos) {
  std::vector<int> cycle;
  ++pos;
  std::string number;
  bool closed_number = false;  // digits seen, then whitespace
  auto bad = [&](const std::string& what) {
    return InvalidArgument(what + " in '" + std::string(text) + "'");
  };
  for (; pos < text.size(); ++pos) {
    char c = text[pos];
    if (std::isspace(static_cast<unsigned char>(c))) {
      closed_number = !number.empty();
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      if (closed_number) throw bad("missing ',' between points");
      number.push_back(c);
    } else if (c == ',' || c == ')') {
      if (number.empty() && (c == ',' || !cycle.empty())) throw bad("empty point in cycle");
      if (!number.empty()) cycle.push_back(std::stoi(number));
      number.clear();
      closed_number = false;
      if (c == ')') {
        ++pos;
        return cycle;
      }
    } else {
      throw bad("unexpected character '" + std::string(1, c) + "'");
    }
  }
  throw bad("unterminated cycle");
}

std::vector<std::vector<int>> read_cycles(std::string_view text) {
  std::vector<std::vector<int>> cycles;
  size_t pos = 0;
  while (pos < text.size()) {
    char c = text[pos];
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
      ++pos;
    } else if (c == '(') {
      cycles.push_back(read_cycle(text, pos));
    } else {
      throw InvalidArgument("expected '(' in '" + std::string(text) + "'");
    }
  }
  return cycles;
}

}  // namespace

Permutation::Permutation(std::span<const int> images) {
  check_degree(static_cast<int>(images.size()));
  n_ = static_cast<std::uint8_t>(images.size());
  std::array<bool, kMaxDegree> seen{};
  for (int i = 0; i < n_; ++i) {
    int v = images[i];
    if (v < 0 || v >= n_ || seen[v]) {
      throw InvalidArgument("image array is not a bijection on [0, n)");
    }
    seen[v] = true;
    images_[i] = static_cast<Point>(v);
  }
}

Permutation Permutation::identity(int n) {
  check_degree(n);
  std::vector<int> images(n);
  for (int i = 0; i < n; ++i) images[i] = i;
  return Permutation(images);
}

Permutation Permutation::transposition(int n, int i, int j) {
  if (i == j) throw InvalidArgument("transposition needs two distinct points");
  return from_cycles(n, {{i, j}});
}

Permutation Permutation::from_cycles(
    int n, const std::vector<std::vector<int>>& cycles) {
  check_degree(n);
  std::vector<int> images(n);
  for (int i = 0; i < n; ++i) images[i] = i;
  std::vector<bool> used(n, false);
  for (const auto& cycle : cycles) {
    for (int p : cycle) {
      if (p < 1 || p > n) {
        throw InvalidArgument("point " + std::to_string(p) +
                              " outside 1.." + std::to_string(n));
      }
      if (used[p - 1]) {
        throw InvalidArgument("point " + std::to_string(p) +
                              " repeated across cycles");
      }
      used[p - 1] = true;
    }
    for (size_t k = 0; k < cycle.size(); ++k) {
      images[cycle[k] - 1] = cycle[(k + 1) % cycle.size()] - 1;
    }
  }
  return Permutation(images);
}

Permutation Permutation::parse(int n, std::string_view text) {
  return from_cycles(n, read_cycles(text));
}

bool Permutation::is_identity() const {
  for (int i = 0; i < n_; ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

bool Permutation::is_transposition() const {
  int moved = 0;
  for (int i = 0; i < n_; ++i) moved += images_[i] != i;
  if (moved != 2) return false;
  for (int i = 0; i < n_; ++i) {
    if (images_[i] != i && images_[images_[i]] != i) return false;
  }
  return true;
}

std::string Permutation::to_string() const {
  auto cycles = cycle_decomposition(*this);
  if (cycles.empty()) return "()";
  std::string out;
  for (const auto& cycle : cycles) {
    out.push_back('(');
    for (size_t k = 0; k < cycle.size(); ++k) {
      if (k) out.push_back(',');
      out += std::to_string(cycle[k]);
    }
    out.push_back(')');
  }
  return out;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  check_same_degree(a, b);
  std::vector<int> images(a.degree());
  for (int i = 0; i < a.degree(); ++i) images[i] = b[a[i]];
  return Permutation(images);
}

Permutation inverse(const Permutation& a) {
  std::vector<int> images(a.degree());
  for (int i = 0; i < a.degree(); ++i) images[a[i]] = i;
  return Permutation(images);
}

Permutation conjugate(const Permutation& a, const Permutation& g) {
  return compose(compose(inverse(g), a), g);
}

std::vector<std::vector<int>> cycle_decomposition(const Permutation& a) {
  std::vector<std::vector<int>> cycles;
  std::vector<bool> seen(a.degree(), false);
  // Scanning points in ascending order starts each cycle at its minimum and
  // emits cycles sorted by first point.
  for (int start = 0; start < a.degree(); ++start) {
    if (seen[start] || a[start] == start) continue;
    std::vector<int> cycle;
    for (int p = start; !seen[p]; p = a[p]) {
      seen[p] = true;
      cycle.push_back(p + 1);
    }
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

std::vector<int> support(const Permutation& a) {
  std::vector<int> moved;
  for (int i = 0; i < a.degree(); ++i) {
    if (a[i] != i) moved.push_back(i + 1);
  }
  return moved;
}

std::vector<int> cycle_type(const Permutation& a) {
  std::vector<int> lengths;
  std::vector<bool> seen(a.degree(), false);
  for (int start = 0; start < a.degree(); ++start) {
    if (seen[start]) continue;
    int len = 0;
    for (int p = start; !seen[p]; p = a[p]) {
      seen[p] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end(), std::greater<>());
  return lengths;
}

int cycle_count(const Permutation& a) {
  return static_cast<int>(cycle_type(a).size());
}

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int k = 2; k <= n; ++k) f *= static_cast<std::uint64_t>(k);
  return f;
}

std::uint64_t rank(const Permutation& a) {
  const int n = a.degree();
  std::uint64_t r = 0;
  for (int i = 0; i < n; ++i) {
    std::uint64_t smaller_after = 0;
    for (int j = i + 1; j < n; ++j) smaller_after += a[j] < a[i];
    r = r * static_cast<std::uint64_t>(n - i) + smaller_after;
  }
  return r;
}

Permutation unrank(int n, std::uint64_t r) {
  check_degree(n);
  if (r >= factorial(n)) {
    throw InvalidArgument("rank " + std::to_string(r) + " outside [0, " +
                          std::to_string(factorial(n)) + ")");
  }
  // Lehmer digits, most significant first: digit i lies in [0, n - i).
  std::vector<int> digits(n);
  for (int i = n - 1; i >= 0; --i) {
    const auto base = static_cast<std::uint64_t>(n - i);
    digits[i] = static_cast<int>(r % base);
    r /= base;
  }
  std::vector<int> pool(n);
  for (int i = 0; i < n; ++i) pool[i] = i;
  std::vector<int> images(n);
  for (int i = 0; i < n; ++i) {
    images[i] = pool[digits[i]];
    pool.erase(pool.begin() + digits[i]);
  }
  return Permutation(images);
}

std::vector<Permutation> parse_permutation_list(int n, std::string_view text) {
  std::vector<Permutation> out;
  for (const auto& cycle : read_cycles(text)) {
    out.push_back(Permutation::from_cycles(n, {cycle}));
  }
  return out;
}

}  // namespace cayleylab
