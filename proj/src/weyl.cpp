#include "weylkit/weyl.hpp"

#include <algorithm>
#include <map>

#include "weylkit/errors.hpp"

namespace weylkit {

std::string format_word(const Word& w) {
  std::string s = "[";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(w[i] + 1);
  }
  return s + "]";
}

int sign(const WeylElt& w) noexcept { return w.length % 2 ? -1 : 1; }

Weight apply_matrix(const IntMatrix& m, const Weight& lambda) {
  Weight r(lambda.rank());
  for (std::size_t i = 0; i < lambda.rank(); ++i) {
    std::int64_t s = 0;
    for (std::size_t j = 0; j < lambda.rank(); ++j) s += m[i][j] * lambda[j];
    r[i] = s;
  }
  return r;
}

WeylGroup::WeylGroup(RootDatum datum, std::size_t cap) : datum_(std::move(datum)) {
  const std::size_t n = datum_.rank();
  const Weight& rho = datum_.weyl_vector();
  elts_.push_back(WeylElt{0, rho, {}, 0});
  by_key_.emplace(rho, 0);

  for (std::size_t head = 0; head < elts_.size(); ++head) {
    right_.emplace_back(n, 0);
    for (std::size_t j = 0; j < n; ++j) {
      // (w s_j)(rho) = w(rho - alpha_j)
      Weight key = act(elts_[head], reflect_simple(datum_, j, rho));
      auto [it, inserted] = by_key_.emplace(key, elts_.size());
      if (inserted) {
        if (elts_.size() >= cap) {
          throw SafetyBoundExceeded("Weyl group enumeration exceeded " + std::to_string(cap) +
                                    " elements");
        }
        Word word = elts_[head].word;
        word.push_back(static_cast<int>(j));
        elts_.push_back(WeylElt{elts_.size(), key, std::move(word), elts_[head].length + 1});
      }
      right_[head][j] = it->second;
    }
  }

  left_.assign(elts_.size(), std::vector<std::size_t>(n, 0));
  matrices_.resize(elts_.size());
  for (const auto& w : elts_) {
    for (std::size_t j = 0; j < n; ++j) {
      left_[w.index][j] = by_key_.at(reflect_simple(datum_, j, w.key));
    }
    IntMatrix m(n, std::vector<std::int64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
      Weight e(n);
      e[i] = 1;
      Weight col = act_word(w.word, e);
      for (std::size_t r = 0; r < n; ++r) m[r][i] = col[r];
    }
    matrices_[w.index] = std::move(m);
  }

  std::size_t top = 0;
  for (const auto& w : elts_) top = std::max(top, w.length);
  if (elts_.back().length != top ||
      std::count_if(elts_.begin(), elts_.end(), [&](const WeylElt& w) { return w.length == top; }) != 1) {
    throw InvariantViolation("Weyl group has no unique longest element");
  }
}

const WeylElt& WeylGroup::simple_reflection(std::size_t j) const {
  if (j >= rank()) {
    throw IndexOutOfRange("simple reflection index " + std::to_string(j + 1) + " out of range 1.." +
                          std::to_string(rank()));
  }
  return elts_[right_[0][j]];
}

const WeylElt& WeylGroup::from_word(const Word& word) const {
  std::size_t cur = 0;
  for (int j : word) {
    if (j < 0 || static_cast<std::size_t>(j) >= rank()) {
      throw IndexOutOfRange("simple reflection index " + std::to_string(j + 1) +
                            " out of range 1.." + std::to_string(rank()));
    }
    cur = right_[cur][static_cast<std::size_t>(j)];
  }
  return elts_[cur];
}

const WeylElt& WeylGroup::from_key(const Weight& key) const {
  auto it = by_key_.find(key);
  if (it == by_key_.end()) throw IndexOutOfRange("no Weyl element with key " + to_string(key));
  return elts_[it->second];
}

const WeylElt& WeylGroup::right_mul(const WeylElt& w, std::size_t j) const {
  return elts_[right_.at(w.index).at(j)];
}

const WeylElt& WeylGroup::left_mul(std::size_t j, const WeylElt& w) const {
  return elts_[left_.at(w.index).at(j)];
}

const WeylElt& WeylGroup::multiply(const WeylElt& a, const WeylElt& b) const {
  return from_key(act(a, b.key));
}

const WeylElt& WeylGroup::inverse(const WeylElt& w) const {
  Word rev(w.word.rbegin(), w.word.rend());
  return from_word(rev);
}

Weight WeylGroup::act_word(const Word& word, const Weight& lambda) const {
  Weight r = lambda;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    r = reflect_simple(datum_, static_cast<std::size_t>(*it), r);
  }
  return r;
}

Weight WeylGroup::act(const WeylElt& w, const Weight& lambda) const {
  if (w.index < matrices_.size()) return apply_matrix(matrices_[w.index], lambda);
  return act_word(w.word, lambda);
}

std::vector<Word> WeylGroup::all_reduced_words(const WeylElt& w) const {
  std::map<std::size_t, std::vector<Word>> memo;
  auto rec = [&](auto&& self, std::size_t idx) -> const std::vector<Word>& {
    if (auto it = memo.find(idx); it != memo.end()) return it->second;
    std::vector<Word> out;
    if (elts_[idx].length == 0) {
      out.push_back({});
    } else {
      for (std::size_t j = 0; j < rank(); ++j) {
        std::size_t prev = right_[idx][j];
        if (elts_[prev].length + 1 != elts_[idx].length) continue;
        for (Word word : self(self, prev)) {
          word.push_back(static_cast<int>(j));
          out.push_back(std::move(word));
        }
      }
    }
    std::sort(out.begin(), out.end());
    return memo.emplace(idx, std::move(out)).first->second;
  };
  return rec(rec, w.index);
}

}  // namespace weylkit
