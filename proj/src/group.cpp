#include "mixcay/group.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "mixcay/error.hpp"

namespace mixcay {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::invalid_input:
      return "invalid-input";
    case ErrorKind::validation:
      return "validation";
    case ErrorKind::capacity:
      return "capacity";
    case ErrorKind::not_strong:
      return "not-strong";
    case ErrorKind::invalid_fragment:
      return "invalid-fragment";
    case ErrorKind::parse:
      return "parse";
  }
  return "unknown";
}

// ---------------------------------------------------------------------------
// ElementSet

ElementSet::ElementSet(std::size_t group_order, std::vector<Element> members)
    : group_order_(group_order), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()),
                 members_.end());
  if (!members_.empty() && members_.back() >= group_order_) {
    throw Error(ErrorKind::invalid_input,
                "element " + std::to_string(members_.back()) +
                    " out of range for group of order " +
                    std::to_string(group_order_));
  }
}

ElementSet ElementSet::full(std::size_t group_order) {
  std::vector<Element> all(group_order);
  std::iota(all.begin(), all.end(), Element{0});
  return ElementSet(group_order, std::move(all));
}

bool ElementSet::contains(Element e) const {
  return std::binary_search(members_.begin(), members_.end(), e);
}

bool ElementSet::is_subset_of(const ElementSet& other) const {
  return std::includes(other.members_.begin(), other.members_.end(),
                       members_.begin(), members_.end());
}

bool ElementSet::intersects(const ElementSet& other) const {
  auto a = members_.begin();
  auto b = other.members_.begin();
  while (a != members_.end() && b != other.members_.end()) {
    if (*a == *b) return true;
    if (*a < *b) {
      ++a;
    } else {
      ++b;
    }
  }
  return false;
}

ElementSet ElementSet::with(Element e) const {
  auto m = members_;
  m.push_back(e);
  return ElementSet(group_order_, std::move(m));
}

ElementSet ElementSet::without(Element e) const {
  ElementSet out = *this;
  out.members_.erase(std::remove(out.members_.begin(), out.members_.end(), e),
                     out.members_.end());
  return out;
}

ElementSet ElementSet::without(const ElementSet& other) const {
  ElementSet out;
  out.group_order_ = group_order_;
  std::set_difference(members_.begin(), members_.end(), other.members_.begin(),
                      other.members_.end(), std::back_inserter(out.members_));
  return out;
}

ElementSet ElementSet::united(const ElementSet& other) const {
  ElementSet out;
  out.group_order_ = group_order_;
  std::set_union(members_.begin(), members_.end(), other.members_.begin(),
                 other.members_.end(), std::back_inserter(out.members_));
  return out;
}

// ---------------------------------------------------------------------------
// Group

Group Group::from_table(std::vector<std::vector<Element>> table,
                        std::string name) {
  const std::size_t n = table.size();
  if (n == 0) throw Error(ErrorKind::validation, "group table is empty");
  for (std::size_t a = 0; a < n; ++a) {
    if (table[a].size() != n) {
      throw Error(ErrorKind::validation,
                  "row " + std::to_string(a) + " has " +
                      std::to_string(table[a].size()) + " entries, expected " +
                      std::to_string(n));
    }
    for (std::size_t b = 0; b < n; ++b) {
      if (table[a][b] >= n) {
        throw Error(ErrorKind::validation,
                    "entry (" + std::to_string(a) + "," + std::to_string(b) +
                        ") = " + std::to_string(table[a][b]) +
                        " is out of range");
      }
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (table[0][a] != a || table[a][0] != a) {
      throw Error(ErrorKind::validation,
                  "index 0 is not the identity at element " +
                      std::to_string(a));
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    std::vector<bool> row_seen(n, false);
    std::vector<bool> col_seen(n, false);
    for (std::size_t b = 0; b < n; ++b) {
      if (row_seen[table[a][b]]) {
        throw Error(ErrorKind::validation,
                    "row " + std::to_string(a) + " repeats index " +
                        std::to_string(table[a][b]) + " (not a Latin square)");
      }
      row_seen[table[a][b]] = true;
      if (col_seen[table[b][a]]) {
        throw Error(ErrorKind::validation,
                    "column " + std::to_string(a) + " repeats index " +
                        std::to_string(table[b][a]) +
                        " (not a Latin square)");
      }
      col_seen[table[b][a]] = true;
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        if (table[table[a][b]][c] != table[a][table[b][c]]) {
          throw Error(ErrorKind::validation,
                      "associativity fails for (" + std::to_string(a) + "," +
                          std::to_string(b) + "," + std::to_string(c) + ")");
        }
      }
    }
  }

  Group g;
  g.order_ = n;
  g.name_ = std::move(name);
  g.table_.reserve(n * n);
  for (const auto& row : table) g.table_.insert(g.table_.end(), row.begin(), row.end());
  g.inverse_.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (table[a][b] == kIdentity) g.inverse_[a] = static_cast<Element>(b);
    }
  }
  return g;
}

std::vector<std::vector<Element>> Group::table() const {
  std::vector<std::vector<Element>> rows(order_);
  for (std::size_t a = 0; a < order_; ++a) {
    rows[a].assign(table_.begin() + static_cast<std::ptrdiff_t>(a * order_),
                   table_.begin() + static_cast<std::ptrdiff_t>((a + 1) * order_));
  }
  return rows;
}

Group Group::with_element_names(std::vector<std::string> names) const {
  if (!names.empty() && names.size() != order_) {
    throw Error(ErrorKind::invalid_input, "element name count mismatch");
  }
  Group g = *this;
  g.element_names_ = std::move(names);
  return g;
}

// ---------------------------------------------------------------------------
// Constructors

Group make_cyclic(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::invalid_input, "cyclic group order must be >= 1");
  std::vector<std::vector<Element>> t(n, std::vector<Element>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) t[a][b] = static_cast<Element>((a + b) % n);
  }
  return Group::from_table(std::move(t), "Z" + std::to_string(n));
}

// Elements s^i r^k are stored at index i*n + k.
Group make_dihedral(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::invalid_input, "dihedral parameter must be >= 1");
  const std::size_t order = 2 * n;
  std::vector<std::vector<Element>> t(order, std::vector<Element>(order));
  std::vector<std::string> names(order);
  for (std::size_t x = 0; x < order; ++x) {
    const std::size_t i = x / n, a = x % n;
    names[x] = (i ? std::string("s") : std::string()) +
               (a ? "r" + (a > 1 ? std::to_string(a) : std::string()) : std::string());
    if (names[x].empty()) names[x] = "e";
    for (std::size_t y = 0; y < order; ++y) {
      const std::size_t j = y / n, b = y % n;
      // (s^i r^a)(s^j r^b) = s^(i+j) r^((-1)^j a + b)
      const std::size_t k = (j ? (n - a) % n + b : a + b) % n;
      t[x][y] = static_cast<Element>(((i + j) % 2) * n + k);
    }
  }
  return Group::from_table(std::move(t), "D" + std::to_string(n))
      .with_element_names(std::move(names));
}

namespace {

std::string cycle_notation(const std::vector<int>& perm) {
  std::string out;
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i] || perm[i] == static_cast<int>(i)) continue;
    out += '(';
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) out += ' ';
      out += std::to_string(j + 1);
      first = false;
      j = static_cast<std::size_t>(perm[j]);
    }
    out += ')';
  }
  return out.empty() ? "e" : out;
}

}  // namespace

Group make_symmetric(std::size_t n) {
  if (n == 0 || n > 4) {
    throw Error(ErrorKind::invalid_input, "symmetric group degree must be in 1..4");
  }
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  std::map<std::vector<int>, Element> index;
  for (std::size_t i = 0; i < perms.size(); ++i) index[perms[i]] = static_cast<Element>(i);

  const std::size_t order = perms.size();
  std::vector<std::vector<Element>> t(order, std::vector<Element>(order));
  std::vector<std::string> names(order);
  for (std::size_t a = 0; a < order; ++a) {
    names[a] = cycle_notation(perms[a]);
    for (std::size_t b = 0; b < order; ++b) {
      // (a.b)(x) = a(b(x))
      std::vector<int> c(n);
      for (std::size_t x = 0; x < n; ++x) c[x] = perms[a][static_cast<std::size_t>(perms[b][x])];
      t[a][b] = index.at(c);
    }
  }
  return Group::from_table(std::move(t), "S" + std::to_string(n))
      .with_element_names(std::move(names));
}

Group direct_product(const Group& a, const Group& b) {
  const std::size_t n = a.order() * b.order();
  std::vector<std::vector<Element>> t(n, std::vector<Element>(n));
  const auto nb = static_cast<Element>(b.order());
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      t[x][y] = a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb);
    }
  }
  std::vector<std::string> names;
  if (!a.element_names().empty() || !b.element_names().empty()) {
    names.resize(n);
    for (Element x = 0; x < n; ++x) {
      auto name_of = [](const Group& g, Element e) {
        return g.element_names().empty() ? std::to_string(e) : g.element_names()[e];
      };
      names[x] = "(" + name_of(a, x / nb) + "," + name_of(b, x % nb) + ")";
    }
  }
  return Group::from_table(std::move(t), a.name() + " x " + b.name())
      .with_element_names(std::move(names));
}

Group make_from_table(std::string_view text, std::string name) {
  std::istringstream in{std::string(text)};
  std::string keyword;
  long long n = 0;
  if (!(in >> keyword) || keyword != "order" || !(in >> n) || n <= 0) {
    throw Error(ErrorKind::parse, "group table must start with `order n`");
  }
  const auto order = static_cast<std::size_t>(n);
  std::vector<std::vector<Element>> t(order, std::vector<Element>(order));
  for (std::size_t a = 0; a < order; ++a) {
    for (std::size_t b = 0; b < order; ++b) {
      long long v = 0;
      if (!(in >> v)) {
        throw Error(ErrorKind::parse, "group table truncated at row " +
                                          std::to_string(a) + ", column " +
                                          std::to_string(b));
      }
      if (v < 0) throw Error(ErrorKind::validation, "negative index in group table");
      t[a][b] = static_cast<Element>(v);
    }
  }
  std::string extra;
  if (in >> extra) throw Error(ErrorKind::parse, "trailing data after group table");
  return Group::from_table(std::move(t), std::move(name));
}

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

Group parse_factor(const std::string& f) {
  if (f.size() < 2) throw Error(ErrorKind::parse, "bad group factor `" + f + "`");
  std::size_t n = 0;
  const char* first = f.data() + 1;
  const char* last = f.data() + f.size();
  auto [ptr, ec] = std::from_chars(first, last, n);
  if (ec != std::errc() || ptr != last) {
    throw Error(ErrorKind::parse, "bad group factor `" + f + "`");
  }
  switch (std::toupper(static_cast<unsigned char>(f[0]))) {
    case 'Z':
      return make_cyclic(n);
    case 'D':
      return make_dihedral(n);
    case 'S':
      return make_symmetric(n);
    default:
      throw Error(ErrorKind::parse, "unknown group family in `" + f + "`");
  }
}

}  // namespace

Group parse_group_spec(std::string_view spec) {
  std::vector<std::string> factors;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= spec.size(); ++i) {
    if (i == spec.size() || spec[i] == 'x' || spec[i] == 'X' || spec[i] == '*') {
      factors.push_back(trim(spec.substr(start, i - start)));
      start = i + 1;
    }
  }
  if (factors.empty() || factors.front().empty()) {
    throw Error(ErrorKind::parse, "empty group spec");
  }
  Group g = parse_factor(factors[0]);
  for (std::size_t i = 1; i < factors.size(); ++i) {
    g = direct_product(g, parse_factor(factors[i]));
  }
  return g;
}

std::string format_table(const Group& g) {
  std::string out = "order " + std::to_string(g.order()) + "\n";
  for (Element a = 0; a < g.order(); ++a) {
    for (Element b = 0; b < g.order(); ++b) {
      if (b) out += ' ';
      out += std::to_string(g.mul(a, b));
    }
    out += '\n';
  }
  return out;
}

// ---------------------------------------------------------------------------
// Subgroups and set arithmetic

ElementSet make_element_set(const Group& g, std::vector<Element> members) {
  return ElementSet(g.order(), std::move(members));
}

bool is_subgroup(const Group& g, const ElementSet& s) {
  if (!s.contains(kIdentity)) return false;
  for (Element a : s) {
    for (Element b : s) {
      if (!s.contains(g.mul(a, g.inv(b)))) return false;
    }
  }
  return true;
}

Subgroup generated_subgroup(const Group& g, const ElementSet& s) {
  for (Element e : s) {
    if (!g.contains(e)) throw Error(ErrorKind::invalid_input, "element out of range");
  }
  std::vector<bool> in(g.order(), false);
  std::deque<Element> queue{kIdentity};
  in[kIdentity] = true;
  while (!queue.empty()) {
    const Element x = queue.front();
    queue.pop_front();
    for (Element gen : s) {
      const Element y = g.mul(x, gen);
      if (!in[y]) {
        in[y] = true;
        queue.push_back(y);
      }
    }
  }
  std::vector<Element> members;
  for (Element e = 0; e < g.order(); ++e) {
    if (in[e]) members.push_back(e);
  }
  return Subgroup{ElementSet(g.order(), std::move(members)), g.order()};
}

std::vector<Subgroup> all_subgroups(const Group& g, std::size_t cap) {
  if (g.order() > cap) {
    throw Error(ErrorKind::capacity, "group order " + std::to_string(g.order()) +
                                         " exceeds subgroup enumeration cap " +
                                         std::to_string(cap));
  }
  std::set<ElementSet> found;
  for (Element e = 0; e < g.order(); ++e) {
    found.insert(generated_subgroup(g, ElementSet(g.order(), {e})).elements);
  }
  // Saturate under pairwise joins until nothing new appears.
  std::vector<ElementSet> frontier(found.begin(), found.end());
  while (!frontier.empty()) {
    std::vector<ElementSet> next;
    const std::vector<ElementSet> snapshot(found.begin(), found.end());
    for (const auto& a : frontier) {
      for (const auto& b : snapshot) {
        auto joined = generated_subgroup(g, a.united(b)).elements;
        if (found.insert(joined).second) next.push_back(std::move(joined));
      }
    }
    frontier = std::move(next);
  }
  std::vector<Subgroup> out;
  out.reserve(found.size());
  for (const auto& s : found) out.push_back(Subgroup{s, g.order()});
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elements < b.elements;
  });
  return out;
}

Subgroup conjugate_subgroup(const Group& g, Element t, const Subgroup& h) {
  std::vector<Element> m;
  m.reserve(h.order());
  const Element ti = g.inv(t);
  for (Element x : h.elements) m.push_back(g.mul(g.mul(t, x), ti));
  return Subgroup{ElementSet(g.order(), std::move(m)), g.order()};
}

ElementSet left_coset(const Group& g, Element t, const ElementSet& h) {
  std::vector<Element> m;
  m.reserve(h.size());
  for (Element x : h) m.push_back(g.mul(t, x));
  return ElementSet(g.order(), std::move(m));
}

ElementSet left_coset(const Group& g, Element t, const Subgroup& h) {
  return left_coset(g, t, h.elements);
}

ElementSet right_coset(const Group& g, const ElementSet& h, Element t) {
  std::vector<Element> m;
  m.reserve(h.size());
  for (Element x : h) m.push_back(g.mul(x, t));
  return ElementSet(g.order(), std::move(m));
}

ElementSet set_product(const Group& g, const ElementSet& a, const ElementSet& b) {
  std::vector<Element> m;
  m.reserve(a.size() * b.size());
  for (Element x : a) {
    for (Element y : b) m.push_back(g.mul(x, y));
  }
  return ElementSet(g.order(), std::move(m));
}

ElementSet set_inverse(const Group& g, const ElementSet& a) {
  std::vector<Element> m;
  m.reserve(a.size());
  for (Element x : a) m.push_back(g.inv(x));
  return ElementSet(g.order(), std::move(m));
}

}  // namespace mixcay
