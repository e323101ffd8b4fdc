#include "qrf/group.hpp"

#include <array>
#include <charconv>
#include <string>

namespace qrf {

namespace {

std::string entry(int a, int b) { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }

}  // namespace

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<int>> table) {
  FiniteGroup g;
  g.order_ = static_cast<int>(table.size());
  g.table_ = std::move(table);
  g.validate();
  return g;
}

void FiniteGroup::validate() {
  const int n = order_;
  if (n <= 0) fail(Err::InvalidOrder, "multiplication table is empty");

  // closure: square table with entries in range
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(table_[i].size()) != n)
      fail(Err::NotClosed, "row " + std::to_string(i) + " has " +
                               std::to_string(table_[i].size()) + " entries, expected " +
                               std::to_string(n));
    for (int j = 0; j < n; ++j) {
      const int v = table_[i][j];
      if (v < 0 || v >= n)
        fail(Err::NotClosed, "entry " + entry(i, j) + " = " + std::to_string(v) +
                                 " is outside 0.." + std::to_string(n - 1));
    }
  }

  // every row and column must be a permutation of 0..n-1
  for (int i = 0; i < n; ++i) {
    std::vector<bool> seen_row(n, false), seen_col(n, false);
    for (int j = 0; j < n; ++j) {
      if (seen_row[table_[i][j]])
        fail(Err::NonInvertible, "row " + std::to_string(i) + " repeats element " +
                                     std::to_string(table_[i][j]) + " at column " +
                                     std::to_string(j));
      seen_row[table_[i][j]] = true;
      if (seen_col[table_[j][i]])
        fail(Err::NonInvertible, "column " + std::to_string(i) + " repeats element " +
                                     std::to_string(table_[j][i]) + " at row " +
                                     std::to_string(j));
      seen_col[table_[j][i]] = true;
    }
  }

  // two-sided identity
  identity_ = -1;
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int g = 0; g < n && ok; ++g) ok = table_[e][g] == g && table_[g][e] == g;
    if (ok) {
      identity_ = e;
      break;
    }
  }
  if (identity_ < 0) fail(Err::NoIdentity, "no two-sided identity element");

  // exhaustive associativity
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
          fail(Err::NotAssociative, "(a*b)*c != a*(b*c) at a=" + std::to_string(a) +
                                        " b=" + std::to_string(b) + " c=" + std::to_string(c));

  // inverses, two-sided
  inverses_.assign(n, -1);
  for (int g = 0; g < n; ++g) {
    for (int h = 0; h < n; ++h) {
      if (table_[g][h] == identity_) {
        inverses_[g] = h;
        break;
      }
    }
    if (inverses_[g] < 0 || table_[inverses_[g]][g] != identity_)
      fail(Err::NonInvertible, "element " + std::to_string(g) + " has no two-sided inverse");
  }
}

FiniteGroup FiniteGroup::cyclic(int n) {
  if (n < 1) fail(Err::InvalidOrder, "cyclic group order must be >= 1, got " + std::to_string(n));
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) table[i][j] = (i + j) % n;
  return from_table(std::move(table));
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& g, const FiniteGroup& h) {
  const int ng = g.order(), nh = h.order(), n = ng * nh;
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a) {
    const int a1 = a / nh, a2 = a % nh;
    for (int b = 0; b < n; ++b) {
      const int b1 = b / nh, b2 = b % nh;
      table[a][b] = g.product(a1, b1) * nh + h.product(a2, b2);
    }
  }
  return from_table(std::move(table));
}

int FiniteGroup::product(int g, int h) const {
  if (g < 0 || g >= order_ || h < 0 || h >= order_)
    fail(Err::IndexOutOfRange, "element " + entry(g, h) + " outside group of order " +
                                   std::to_string(order_));
  return table_[g][h];
}

int FiniteGroup::inverse(int g) const {
  if (g < 0 || g >= order_)
    fail(Err::IndexOutOfRange,
         "element " + std::to_string(g) + " outside group of order " + std::to_string(order_));
  return inverses_[g];
}

int FiniteGroup::element_order(int g) const {
  int acc = g, k = 1;
  while (acc != identity_) {
    acc = product(acc, g);
    ++k;
  }
  return k;
}

namespace {

// e,(01),(02),(12),(012),(021) as images of 0,1,2
constexpr std::array<std::array<int, 3>, 6> kS3Perms = {{
    {0, 1, 2},
    {1, 0, 2},
    {2, 1, 0},
    {0, 2, 1},
    {1, 2, 0},
    {2, 0, 1},
}};

int s3_index_of(const std::array<int, 3>& p) {
  for (int i = 0; i < 6; ++i)
    if (kS3Perms[i] == p) return i;
  return -1;
}

FiniteGroup make_s3() {
  std::vector<std::vector<int>> table(6, std::vector<int>(6));
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      std::array<int, 3> comp{};  // (p_i o p_j)(x) = p_i(p_j(x))
      for (int x = 0; x < 3; ++x) comp[x] = kS3Perms[i][kS3Perms[j][x]];
      table[i][j] = s3_index_of(comp);
    }
  return FiniteGroup::from_table(std::move(table));
}

bool parse_int(const std::string& s, int& out) {
  if (s.empty()) return false;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && p == s.data() + s.size() && out >= 1;
}

// "Z<n>" or "Z<a>xZ<b>"
bool parse_cyclic_name(const std::string& name, int& a, int& b) {
  if (name.size() < 2 || name[0] != 'Z') return false;
  auto x = name.find('x');
  if (x == std::string::npos) {
    b = 0;
    return parse_int(name.substr(1), a);
  }
  if (x + 1 >= name.size() || name[x + 1] != 'Z') return false;
  return parse_int(name.substr(1, x - 1), a) && parse_int(name.substr(x + 2), b);
}

}  // namespace

int s3_parity(int element) {
  constexpr std::array<int, 6> parity = {1, -1, -1, -1, 1, 1};
  if (element < 0 || element >= 6)
    fail(Err::IndexOutOfRange, "S3 element " + std::to_string(element));
  return parity[element];
}

FiniteGroup builtin_group(const std::string& name) {
  if (name == "S3") return make_s3();
  int a = 0, b = 0;
  if (parse_cyclic_name(name, a, b)) {
    if (b == 0) return FiniteGroup::cyclic(a);
    return FiniteGroup::direct_product(FiniteGroup::cyclic(a), FiniteGroup::cyclic(b));
  }
  fail(Err::ValidationError, "unknown group name \"" + name + "\"");
}

bool is_builtin_group(const std::string& name) {
  if (name == "S3") return true;
  int a = 0, b = 0;
  return parse_cyclic_name(name, a, b);
}

std::pair<int, int> cyclic_name_components(const std::string& name) {
  int a = 0, b = 0;
  if (!parse_cyclic_name(name, a, b)) return {0, 0};
  return {a, b};
}

}  // namespace qrf
