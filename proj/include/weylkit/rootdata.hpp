#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace weylkit {

/// Largest rank supported by the fixed-capacity weight storage.
inline constexpr std::size_t kMaxRank = 8;

/// An element of the weight lattice, stored in fundamental-weight
/// coordinates so that the pairing with the j-th simple coroot is coords[j].
/// Comparison is lexicographic on coordinates.
class Weight {
 public:
  using value_type = std::int64_t;

  Weight() = default;
  explicit Weight(std::size_t rank);
  Weight(std::initializer_list<value_type> coords);
  explicit Weight(std::span<const value_type> coords);

  std::size_t rank() const noexcept { return rank_; }
  value_type operator[](std::size_t i) const noexcept { return c_[i]; }
  value_type& operator[](std::size_t i) noexcept { return c_[i]; }
  std::span<const value_type> coords() const noexcept { return {c_.data(), rank_}; }

  bool is_zero() const noexcept;
  bool is_dominant() const noexcept;

  Weight& operator+=(const Weight& o) noexcept;
  Weight& operator-=(const Weight& o) noexcept;
  friend Weight operator+(Weight a, const Weight& b) noexcept { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) noexcept { return a -= b; }
  Weight operator-() const noexcept;
  Weight scaled(value_type k) const noexcept;

  auto operator<=>(const Weight&) const = default;
  bool operator==(const Weight&) const = default;

  std::size_t hash() const noexcept;

 private:
  std::array<value_type, kMaxRank> c_{};
  std::uint8_t rank_ = 0;
};

struct WeightHash {
  std::size_t operator()(const Weight& w) const noexcept { return w.hash(); }
};

/// "[a,b,c]"
std::string to_string(const Weight& w);

using IntMatrix = std::vector<std::vector<std::int64_t>>;

/// A root carried in three coordinate systems: simple roots (positivity is
/// read off directly), fundamental weights (how it acts on characters) and
/// simple coroots (the coroot, so that <mu, alpha^vee> is an integer dot
/// product with fundamental-weight coordinates).
struct Root {
  std::vector<std::int64_t> root_coords;
  Weight weight;
  std::vector<std::int64_t> coroot_coords;

  bool is_positive() const noexcept;
  Root negated() const;
  /// <mu, alpha^vee>
  std::int64_t pair(const Weight& mu) const noexcept;
  bool operator==(const Root&) const = default;
};

/// A finite root system given by its Cartan matrix.
///
/// Convention: cartan[i][j] = <alpha_j, alpha_i^vee>, so column j is the
/// simple root alpha_j written in fundamental-weight coordinates. Under this
/// convention B2 is [[2,-1],[-2,2]] (alpha_1 long) and G2 is [[2,-3],[-1,2]]
/// (alpha_1 short), following Bourbaki numbering.
class RootDatum {
 public:
  std::size_t rank() const noexcept { return cartan_.size(); }
  const IntMatrix& cartan() const noexcept { return cartan_; }
  const std::string& name() const noexcept { return name_; }
  const std::vector<Root>& positive_roots() const noexcept { return positive_; }
  const Root& simple_root(std::size_t j) const;
  const Weight& weyl_vector() const noexcept { return rho_; }
  /// Number of positive roots, which is the length of the longest element.
  std::size_t longest_length() const noexcept { return positive_.size(); }
  /// d_i with d_i * cartan[i][j] symmetric; d_i is half the squared length
  /// of alpha_i up to a common scale.
  const std::vector<std::int64_t>& symmetrizer() const noexcept { return sym_; }

  /// Weight coordinates of the element with the given simple-root coordinates.
  Weight from_root_coords(std::span<const std::int64_t> c) const;
  /// Simple-root coordinates scaled by det(cartan), which keeps them integral.
  std::vector<std::int64_t> to_scaled_root_coords(const Weight& w) const;
  std::int64_t cartan_determinant() const noexcept { return det_; }
  /// det(cartan) * <w, rho^vee>: a linear functional positive on every
  /// positive root, used to order weights compatibly with dominance.
  std::int64_t scaled_height(const Weight& w) const;

  /// Builds the root with the given simple-root coordinates (assumed a root).
  Root make_root(std::span<const std::int64_t> root_coords) const;

  friend RootDatum build_root_datum(const IntMatrix& cartan, std::string name);

 private:
  RootDatum() = default;
  std::string name_;
  IntMatrix cartan_;
  std::vector<std::int64_t> sym_;
  std::vector<Root> positive_;
  std::vector<Root> simple_;
  Weight rho_;
  std::int64_t det_ = 1;
  IntMatrix adjugate_;
};

/// Named finite types: A1 A2 A3 B2 B3 C2 C3 D4 G2.
RootDatum build_root_datum(std::string_view type_name);
/// Validates the matrix and computes the positive roots by reflection closure.
RootDatum build_root_datum(const IntMatrix& cartan, std::string name = "custom");

/// The Cartan matrix of a named type.
IntMatrix named_cartan(std::string_view type_name);

/// s_j(lambda)_i = lambda_i - lambda_j * cartan[i][j].
Weight reflect_simple(const RootDatum& datum, std::size_t j, const Weight& lambda);
/// s_alpha(lambda) = lambda - <lambda, alpha^vee> alpha.
Weight reflect(const Root& alpha, const Weight& lambda);

/// <lambda, alpha_j^vee>
std::int64_t pairing(const Weight& lambda, std::size_t j);

/// 2 rho == sum of positive roots, in weight coordinates.
bool two_rho_check(const RootDatum& datum);

}  // namespace weylkit
