#include "permeq/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace permeq {

namespace {

bool is_bijection_table(const std::vector<Point>& table) {
  if (table.size() < 2 || table[0] != 0) return false;
  const unsigned n = static_cast<unsigned>(table.size()) - 1;
  std::vector<bool> seen(n + 1, false);
  for (unsigned i = 1; i <= n; ++i) {
    const Point v = table[i];
    if (v < 1 || v > n || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

}  // namespace

Permutation::Permutation(unsigned degree) : degree_(degree), table_(degree + 1) {
  if (degree == 0) throw Error("permutation degree must be >= 1");
  std::iota(table_.begin(), table_.end(), 0u);
}

Permutation::Permutation(std::vector<Point> table, int)
    : degree_(static_cast<unsigned>(table.size()) - 1), table_(std::move(table)) {
  assert(is_bijection_table(table_));
}

Permutation Permutation::from_images(const std::vector<Point>& images) {
  if (images.empty()) throw Error("permutation degree must be >= 1");
  std::vector<Point> table(images.size() + 1);
  table[0] = 0;
  std::copy(images.begin(), images.end(), table.begin() + 1);
  if (!is_bijection_table(table))
    throw Error("image table is not a bijection of {1,...," +
                std::to_string(images.size()) + "}");
  return Permutation(std::move(table), 0);
}

Permutation Permutation::from_table_unchecked(std::vector<Point> table) {
  return Permutation(std::move(table), 0);
}

bool Permutation::is_identity() const {
  for (unsigned i = 1; i <= degree_; ++i)
    if (table_[i] != i) return false;
  return true;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree())
    throw Error("degree mismatch: cannot compose degree " +
                std::to_string(p.degree()) + " with degree " +
                std::to_string(q.degree()));
  const unsigned n = p.degree();
  std::vector<Point> table(n + 1);
  table[0] = 0;
  for (unsigned i = 1; i <= n; ++i) table[i] = p(q(i));
  return Permutation::from_table_unchecked(std::move(table));
}

Permutation inverse(const Permutation& p) {
  const unsigned n = p.degree();
  std::vector<Point> table(n + 1);
  table[0] = 0;
  for (unsigned i = 1; i <= n; ++i) table[p(i)] = i;
  return Permutation::from_table_unchecked(std::move(table));
}

Permutation power(const Permutation& p, long long k) {
  if (k < 0) return power(inverse(p), -k);
  Permutation result = Permutation::identity(p.degree());
  Permutation base = p;
  unsigned long long e = static_cast<unsigned long long>(k);
  while (e > 0) {
    if (e & 1) result = compose(result, base);
    base = compose(base, base);
    e >>= 1;
  }
  return result;
}

Permutation conjugate(const Permutation& p, const Permutation& tau) {
  if (p.degree() != tau.degree())
    throw Error("degree mismatch: cannot conjugate degree " +
                std::to_string(p.degree()) + " by degree " +
                std::to_string(tau.degree()));
  const unsigned n = p.degree();
  std::vector<Point> table(n + 1);
  table[0] = 0;
  for (unsigned i = 1; i <= n; ++i) table[tau(i)] = tau(p(i));
  return Permutation::from_table_unchecked(std::move(table));
}

unsigned long long order(const Permutation& p) {
  const unsigned n = p.degree();
  std::vector<bool> visited(n + 1, false);
  unsigned long long result = 1;
  for (unsigned start = 1; start <= n; ++start) {
    if (visited[start]) continue;
    unsigned long long len = 0;
    for (Point x = start; !visited[x]; x = p(x)) {
      visited[x] = true;
      ++len;
    }
    const unsigned long long g = std::gcd(result, len);
    if (__builtin_mul_overflow(result / g, len, &result))
      throw Error("order overflows 64 bits");
  }
  return result;
}

Cycle Cycle::canonical(std::vector<Point> points) {
  assert(!points.empty());
  const auto min_it = std::min_element(points.begin(), points.end());
  std::rotate(points.begin(), min_it, points.end());
  return Cycle{std::move(points)};
}

namespace {

struct CycleParser {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool at_end() {
    skip_ws();
    return pos >= text.size();
  }

  [[noreturn]] void fail(const std::string& message) {
    throw ParseError(message + " at offset " + std::to_string(pos), pos);
  }

  Point parse_point(unsigned degree) {
    skip_ws();
    const std::size_t start = pos;
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
      fail("expected a point");
    unsigned long long value = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      value = value * 10 + static_cast<unsigned>(text[pos] - '0');
      if (value > degree) break;  // value already out of range; finish the token
      ++pos;
    }
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    const std::string token(text.substr(start, pos - start));
    if (value < 1 || value > degree)
      throw ParseError("point " + token + " out of range 1.." + std::to_string(degree) +
                           " at offset " + std::to_string(start),
                       start);
    return static_cast<Point>(value);
  }
};

}  // namespace

Permutation parse_cycles(std::string_view text, unsigned degree) {
  if (degree == 0) throw Error("permutation degree must be >= 1");
  CycleParser parser{text};
  std::vector<Point> table(degree + 1);
  std::iota(table.begin(), table.end(), 0u);
  std::vector<bool> used(degree + 1, false);

  while (!parser.at_end()) {
    if (parser.text[parser.pos] != '(')
      parser.fail(std::string("expected '(' but found '") + parser.text[parser.pos] + "'");
    ++parser.pos;
    std::vector<Point> cycle;
    parser.skip_ws();
    if (parser.pos < parser.text.size() && parser.text[parser.pos] == ')') {
      ++parser.pos;  // "()" denotes the identity contribution
      continue;
    }
    while (true) {
      const std::size_t point_pos = parser.pos;
      const Point p = parser.parse_point(degree);
      if (used[p])
        throw ParseError("duplicate point " + std::to_string(p) + " at offset " +
                             std::to_string(point_pos),
                         point_pos);
      used[p] = true;
      cycle.push_back(p);
      parser.skip_ws();
      if (parser.pos >= parser.text.size())
        parser.fail("unterminated cycle, expected ',' or ')'");
      const char c = parser.text[parser.pos];
      if (c == ',') {
        ++parser.pos;
        continue;
      }
      if (c == ')') {
        ++parser.pos;
        break;
      }
      parser.fail(std::string("expected ',' or ')' but found '") + c + "'");
    }
    for (std::size_t i = 0; i < cycle.size(); ++i)
      table[cycle[i]] = cycle[(i + 1) % cycle.size()];
  }
  return Permutation::from_table_unchecked(std::move(table));
}

std::string format_cycles(const Permutation& p) {
  const unsigned n = p.degree();
  std::vector<bool> visited(n + 1, false);
  std::string out;
  for (unsigned start = 1; start <= n; ++start) {
    if (visited[start] || p(start) == start) {
      visited[start] = true;
      continue;
    }
    out += '(';
    bool first = true;
    for (Point x = start; !visited[x]; x = p(x)) {
      visited[x] = true;
      if (!first) out += ',';
      out += std::to_string(x);
      first = false;
    }
    out += ')';
  }
  if (out.empty()) return "()";
  return out;
}

unsigned inferred_degree(std::string_view text) {
  unsigned best = 0;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isdigit(static_cast<unsigned char>(text[i]))) {
      unsigned long long value = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        value = value * 10 + static_cast<unsigned>(text[i] - '0');
        if (value > 1000000000ULL) throw Error("point value too large");
        ++i;
      }
      best = std::max(best, static_cast<unsigned>(value));
    } else {
      ++i;
    }
  }
  return best;
}

}  // namespace permeq
