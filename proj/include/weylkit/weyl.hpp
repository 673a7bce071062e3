#pragma once

#include <cstddef>
#include <string>
#include <unordered_map>
#include <vector>

#include "weylkit/rootdata.hpp"

namespace weylkit {

/// Simple-reflection word, 0-based indices. Words are printed 1-based.
using Word = std::vector<int>;

/// "[1,2,1]" (1-based)
std::string format_word(const Word& w);

/// A Weyl group element. The key is the image of rho, which identifies the
/// element because rho is regular. `index` is the position in the owning
/// WeylGroup's BFS table.
struct WeylElt {
  std::size_t index = 0;
  Weight key;
  Word word;
  std::size_t length = 0;

  bool operator==(const WeylElt& o) const { return key == o.key; }
};

/// The Weyl group of a root datum, enumerated once by breadth-first closure
/// from the identity under right multiplication by simple reflections.
/// Immutable after construction.
class WeylGroup {
 public:
  static constexpr std::size_t kDefaultCap = 1'000'000;

  explicit WeylGroup(RootDatum datum, std::size_t cap = kDefaultCap);

  const RootDatum& datum() const noexcept { return datum_; }
  std::size_t rank() const noexcept { return datum_.rank(); }
  std::size_t order() const noexcept { return elts_.size(); }
  const std::vector<WeylElt>& elements() const noexcept { return elts_; }
  const WeylElt& operator[](std::size_t i) const { return elts_.at(i); }
  const WeylElt& identity() const { return elts_.front(); }
  const WeylElt& longest() const { return elts_.back(); }
  const WeylElt& simple_reflection(std::size_t j) const;

  /// Element with the given word (any word, not necessarily reduced).
  const WeylElt& from_word(const Word& word) const;
  /// Lookup by key w(rho); throws IndexOutOfRange if absent.
  const WeylElt& from_key(const Weight& key) const;

  /// w * s_j and s_j * w
  const WeylElt& right_mul(const WeylElt& w, std::size_t j) const;
  const WeylElt& left_mul(std::size_t j, const WeylElt& w) const;
  const WeylElt& multiply(const WeylElt& a, const WeylElt& b) const;
  const WeylElt& inverse(const WeylElt& w) const;

  /// Weight action along the stored word (rightmost letter first).
  Weight act(const WeylElt& w, const Weight& lambda) const;
  /// Weight action along an explicit word.
  Weight act_word(const Word& word, const Weight& lambda) const;
  /// Integer matrix of w on fundamental-weight coordinates (column i = w(varpi_i)).
  const IntMatrix& matrix(const WeylElt& w) const { return matrices_.at(w.index); }

  /// Every reduced word of w, in lexicographic order.
  std::vector<Word> all_reduced_words(const WeylElt& w) const;

 private:
  RootDatum datum_;
  std::vector<WeylElt> elts_;
  std::unordered_map<Weight, std::size_t, WeightHash> by_key_;
  std::vector<std::vector<std::size_t>> right_;
  std::vector<std::vector<std::size_t>> left_;
  std::vector<IntMatrix> matrices_;
};

/// (-1)^length
int sign(const WeylElt& w) noexcept;

/// Applies a precomputed Weyl matrix to a weight.
Weight apply_matrix(const IntMatrix& m, const Weight& lambda);

}  // namespace weylkit
