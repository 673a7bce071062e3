#include "weylkit/rootdata.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "weylkit/errors.hpp"

namespace weylkit {

// ---------------------------------------------------------------- Weight

Weight::Weight(std::size_t rank) {
  if (rank > kMaxRank) {
    throw RankMismatch("rank " + std::to_string(rank) + " exceeds the supported maximum " +
                       std::to_string(kMaxRank));
  }
  rank_ = static_cast<std::uint8_t>(rank);
}

Weight::Weight(std::initializer_list<value_type> coords)
    : Weight(std::span<const value_type>(coords.begin(), coords.size())) {}

Weight::Weight(std::span<const value_type> coords) : Weight(coords.size()) {
  std::copy(coords.begin(), coords.end(), c_.begin());
}

bool Weight::is_zero() const noexcept {
  return std::all_of(c_.begin(), c_.begin() + rank_, [](value_type x) { return x == 0; });
}

bool Weight::is_dominant() const noexcept {
  return std::all_of(c_.begin(), c_.begin() + rank_, [](value_type x) { return x >= 0; });
}

Weight& Weight::operator+=(const Weight& o) noexcept {
  for (std::size_t i = 0; i < rank_; ++i) c_[i] += o.c_[i];
  return *this;
}

Weight& Weight::operator-=(const Weight& o) noexcept {
  for (std::size_t i = 0; i < rank_; ++i) c_[i] -= o.c_[i];
  return *this;
}

Weight Weight::operator-() const noexcept { return scaled(-1); }

Weight Weight::scaled(value_type k) const noexcept {
  Weight r = *this;
  for (std::size_t i = 0; i < rank_; ++i) r.c_[i] *= k;
  return r;
}

std::size_t Weight::hash() const noexcept {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ rank_;
  for (std::size_t i = 0; i < rank_; ++i) {
    h ^= static_cast<std::uint64_t>(c_[i]) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

std::string to_string(const Weight& w) {
  std::string s = "[";
  for (std::size_t i = 0; i < w.rank(); ++i) {
    if (i) s += ',';
    s += std::to_string(w[i]);
  }
  return s + "]";
}

// ------------------------------------------------------------------ Root

bool Root::is_positive() const noexcept {
  bool nonzero = false;
  for (auto c : root_coords) {
    if (c < 0) return false;
    nonzero |= c != 0;
  }
  return nonzero;
}

Root Root::negated() const {
  Root r = *this;
  for (auto& c : r.root_coords) c = -c;
  for (auto& c : r.coroot_coords) c = -c;
  r.weight = -weight;
  return r;
}

std::int64_t Root::pair(const Weight& mu) const noexcept {
  std::int64_t s = 0;
  for (std::size_t j = 0; j < coroot_coords.size(); ++j) s += coroot_coords[j] * mu[j];
  return s;
}

// ----------------------------------------------------------- helpers

namespace {

std::int64_t determinant(IntMatrix m) {
  // Fraction-free (Bareiss) elimination; every division is exact.
  const std::size_t n = m.size();
  if (n == 0) return 1;
  __int128 prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        __int128 v = static_cast<__int128>(m[i][j]) * m[k][k] -
                     static_cast<__int128>(m[i][k]) * m[k][j];
        m[i][j] = static_cast<std::int64_t>(v / prev);
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

IntMatrix minor_of(const IntMatrix& m, std::size_t row, std::size_t col) {
  IntMatrix r;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i == row) continue;
    std::vector<std::int64_t> line;
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (j != col) line.push_back(m[i][j]);
    }
    r.push_back(std::move(line));
  }
  return r;
}

void validate_cartan(const IntMatrix& a) {
  const std::size_t n = a.size();
  if (n == 0 || n > kMaxRank) {
    throw NotFiniteType("Cartan matrix rank must be between 1 and " + std::to_string(kMaxRank));
  }
  for (const auto& row : a) {
    if (row.size() != n) throw NotFiniteType("Cartan matrix is not square");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i][i] != 2) throw NotFiniteType("Cartan diagonal entries must equal 2");
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (a[i][j] > 0) throw NotFiniteType("off-diagonal Cartan entries must be <= 0");
      if ((a[i][j] == 0) != (a[j][i] == 0)) {
        throw NotFiniteType("Cartan zero pattern is not symmetric");
      }
    }
  }
  for (std::size_t k = 1; k <= n; ++k) {
    IntMatrix lead(k, std::vector<std::int64_t>(k));
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) lead[i][j] = a[i][j];
    }
    if (determinant(lead) <= 0) {
      throw NotFiniteType("leading principal minor of order " + std::to_string(k) +
                          " is not positive");
    }
  }
}

// d_i * a[i][j] == d_j * a[j][i], smallest positive integers.
std::vector<std::int64_t> compute_symmetrizer(const IntMatrix& a) {
  const std::size_t n = a.size();
  std::vector<std::int64_t> num(n, 0), den(n, 1);
  for (std::size_t start = 0; start < n; ++start) {
    if (num[start] != 0) continue;
    num[start] = 1;
    std::vector<std::size_t> stack{start};
    while (!stack.empty()) {
      std::size_t i = stack.back();
      stack.pop_back();
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j || a[i][j] == 0 || num[j] != 0) continue;
        // d_j = d_i * a[i][j] / a[j][i]
        std::int64_t nj = num[i] * a[i][j];
        std::int64_t dj = den[i] * a[j][i];
        if (dj < 0) { nj = -nj; dj = -dj; }
        std::int64_t g = std::gcd(nj, dj);
        num[j] = nj / g;
        den[j] = dj / g;
        stack.push_back(j);
      }
    }
  }
  std::int64_t l = 1;
  for (auto d : den) l = std::lcm(l, d);
  std::vector<std::int64_t> d(n);
  for (std::size_t i = 0; i < n; ++i) d[i] = num[i] * (l / den[i]);
  std::int64_t g = 0;
  for (auto x : d) g = std::gcd(g, x);
  for (auto& x : d) x /= g;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (d[i] * a[i][j] != d[j] * a[j][i]) {
        throw NotFiniteType("Cartan matrix is not symmetrizable");
      }
    }
  }
  return d;
}

}  // namespace

// ------------------------------------------------------------- RootDatum

const Root& RootDatum::simple_root(std::size_t j) const {
  if (j >= rank()) {
    throw IndexOutOfRange("simple root index " + std::to_string(j + 1) + " out of range 1.." +
                          std::to_string(rank()));
  }
  return simple_[j];
}

Weight RootDatum::from_root_coords(std::span<const std::int64_t> c) const {
  Weight w(rank());
  for (std::size_t i = 0; i < rank(); ++i) {
    std::int64_t s = 0;
    for (std::size_t j = 0; j < rank(); ++j) s += cartan_[i][j] * c[j];
    w[i] = s;
  }
  return w;
}

std::vector<std::int64_t> RootDatum::to_scaled_root_coords(const Weight& w) const {
  std::vector<std::int64_t> c(rank(), 0);
  for (std::size_t i = 0; i < rank(); ++i) {
    for (std::size_t j = 0; j < rank(); ++j) c[i] += adjugate_[i][j] * w[j];
  }
  return c;
}

std::int64_t RootDatum::scaled_height(const Weight& w) const {
  auto c = to_scaled_root_coords(w);
  return std::accumulate(c.begin(), c.end(), std::int64_t{0});
}

Root RootDatum::make_root(std::span<const std::int64_t> root_coords) const {
  Root r;
  r.root_coords.assign(root_coords.begin(), root_coords.end());
  r.weight = from_root_coords(root_coords);
  // (alpha, alpha) / 2 with (alpha_i, alpha_j) = d_i * cartan[i][j].
  std::int64_t twice_norm = 0;
  for (std::size_t i = 0; i < rank(); ++i) {
    for (std::size_t j = 0; j < rank(); ++j) {
      twice_norm += root_coords[i] * root_coords[j] * sym_[i] * cartan_[i][j];
    }
  }
  const std::int64_t half_norm = twice_norm / 2;
  r.coroot_coords.resize(rank());
  for (std::size_t j = 0; j < rank(); ++j) {
    const std::int64_t num = root_coords[j] * sym_[j];
    if (half_norm == 0 || num % half_norm != 0) {
      throw InvariantViolation("coroot of a root is not integral");
    }
    r.coroot_coords[j] = num / half_norm;
  }
  return r;
}

RootDatum build_root_datum(const IntMatrix& cartan, std::string name) {
  validate_cartan(cartan);
  RootDatum d;
  d.name_ = std::move(name);
  d.cartan_ = cartan;
  d.sym_ = compute_symmetrizer(cartan);
  const std::size_t n = cartan.size();

  d.det_ = determinant(cartan);
  d.adjugate_.assign(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      // adj[i][j] = (-1)^{i+j} det(minor with row j and column i removed)
      std::int64_t m = n == 1 ? 1 : determinant(minor_of(cartan, j, i));
      d.adjugate_[i][j] = ((i + j) % 2 ? -m : m);
    }
  }

  // Reflection closure in simple-root coordinates.
  std::set<std::vector<std::int64_t>> roots;
  std::vector<std::vector<std::int64_t>> frontier;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::int64_t> e(n, 0);
    e[j] = 1;
    roots.insert(e);
    frontier.push_back(e);
  }
  const std::size_t bound = 4 * n * n;
  std::size_t passes = 0;
  while (!frontier.empty()) {
    if (++passes > bound) {
      throw NotFiniteType("positive-root closure did not stabilize within " +
                          std::to_string(bound) + " passes");
    }
    std::vector<std::vector<std::int64_t>> next;
    for (const auto& c : frontier) {
      for (std::size_t j = 0; j < n; ++j) {
        std::int64_t pj = 0;  // <beta, alpha_j^vee>
        for (std::size_t k = 0; k < n; ++k) pj += cartan[j][k] * c[k];
        if (pj == 0) continue;
        auto r = c;
        r[j] -= pj;
        if (std::any_of(r.begin(), r.end(), [](std::int64_t x) { return x < 0; })) continue;
        if (roots.insert(r).second) next.push_back(std::move(r));
      }
    }
    frontier = std::move(next);
  }

  std::vector<std::vector<std::int64_t>> sorted(roots.begin(), roots.end());
  std::stable_sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    auto ha = std::accumulate(a.begin(), a.end(), std::int64_t{0});
    auto hb = std::accumulate(b.begin(), b.end(), std::int64_t{0});
    if (ha != hb) return ha < hb;
    return a > b;
  });
  for (const auto& c : sorted) d.positive_.push_back(d.make_root(c));
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::int64_t> e(n, 0);
    e[j] = 1;
    d.simple_.push_back(d.make_root(e));
  }
  d.rho_ = Weight(n);
  for (std::size_t j = 0; j < n; ++j) d.rho_[j] = 1;
  return d;
}

IntMatrix named_cartan(std::string_view t) {
  static const std::map<std::string_view, IntMatrix> table = {
      {"A1", {{2}}},
      {"A2", {{2, -1}, {-1, 2}}},
      {"A3", {{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}}},
      {"B2", {{2, -1}, {-2, 2}}},
      {"B3", {{2, -1, 0}, {-1, 2, -1}, {0, -2, 2}}},
      {"C2", {{2, -2}, {-1, 2}}},
      {"C3", {{2, -1, 0}, {-1, 2, -2}, {0, -1, 2}}},
      {"D4", {{2, -1, 0, 0}, {-1, 2, -1, -1}, {0, -1, 2, 0}, {0, -1, 0, 2}}},
      {"G2", {{2, -3}, {-1, 2}}},
  };
  auto it = table.find(t);
  if (it == table.end()) {
    throw NotFiniteType("unknown type name '" + std::string(t) +
                        "' (expected one of A1 A2 A3 B2 B3 C2 C3 D4 G2)");
  }
  return it->second;
}

RootDatum build_root_datum(std::string_view type_name) {
  return build_root_datum(named_cartan(type_name), std::string(type_name));
}

Weight reflect_simple(const RootDatum& datum, std::size_t j, const Weight& lambda) {
  if (j >= datum.rank()) {
    throw IndexOutOfRange("simple reflection index " + std::to_string(j + 1) +
                          " out of range 1.." + std::to_string(datum.rank()));
  }
  if (lambda.rank() != datum.rank()) throw RankMismatch("weight rank differs from root datum");
  Weight r = lambda;
  const auto lj = lambda[j];
  if (lj != 0) {
    const auto& a = datum.cartan();
    for (std::size_t i = 0; i < datum.rank(); ++i) r[i] -= lj * a[i][j];
  }
  return r;
}

Weight reflect(const Root& alpha, const Weight& lambda) {
  return lambda - alpha.weight.scaled(alpha.pair(lambda));
}

std::int64_t pairing(const Weight& lambda, std::size_t j) {
  if (j >= lambda.rank()) {
    throw IndexOutOfRange("coroot index " + std::to_string(j + 1) + " out of range");
  }
  return lambda[j];
}

bool two_rho_check(const RootDatum& datum) {
  Weight sum(datum.rank());
  for (const auto& r : datum.positive_roots()) sum += r.weight;
  return sum == datum.weyl_vector().scaled(2);
}

}  // namespace weylkit
