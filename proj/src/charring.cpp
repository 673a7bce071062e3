#include "weylkit/charring.hpp"

#include <algorithm>
#include <thread>
#include <unordered_map>
#include <utility>
#include <vector>

#include "weylkit/config.hpp"
#include "weylkit/errors.hpp"

namespace weylkit {

CharElt::CharElt(Terms terms) : terms_(std::move(terms)) {
  std::erase_if(terms_, [](const auto& t) { return t.second == 0; });
}

CharElt CharElt::monomial(const Weight& lambda, const Integer& c) {
  CharElt u;
  u.add_term(lambda, c);
  return u;
}

CharElt CharElt::constant(std::size_t rank, const Integer& c) { return monomial(Weight(rank), c); }

std::size_t CharElt::rank() const noexcept {
  return terms_.empty() ? 0 : terms_.begin()->first.rank();
}

Integer CharElt::coefficient(const Weight& lambda) const {
  auto it = terms_.find(lambda);
  return it == terms_.end() ? Integer(0) : it->second;
}

void CharElt::add_term(const Weight& lambda, const Integer& c) {
  if (c == 0) return;
  if (!terms_.empty() && terms_.begin()->first.rank() != lambda.rank()) {
    throw RankMismatch("cannot combine weights of rank " + std::to_string(lambda.rank()) +
                       " and " + std::to_string(terms_.begin()->first.rank()));
  }
  auto [it, inserted] = terms_.try_emplace(lambda, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Integer CharElt::augmentation() const {
  Integer s = 0;
  for (const auto& [w, c] : terms_) s += c;
  return s;
}

CharElt CharElt::shifted(const Weight& lambda) const {
  CharElt r;
  for (const auto& [w, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), w + lambda, c);
  return r;
}

CharElt& CharElt::operator+=(const CharElt& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

CharElt& CharElt::operator-=(const CharElt& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

CharElt& CharElt::operator*=(const Integer& k) {
  if (k == 0) {
    terms_.clear();
  } else {
    for (auto& [w, c] : terms_) c *= k;
  }
  return *this;
}

CharElt CharElt::operator-() const {
  CharElt r = *this;
  for (auto& [w, c] : r.terms_) c = -c;
  return r;
}

CharElt operator*(const CharElt& a, const CharElt& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.rank() != b.rank()) throw RankMismatch("product of characters of different rank");
  const CharElt& small = a.size() <= b.size() ? a : b;
  const CharElt& big = a.size() <= b.size() ? b : a;
  if (small.size() == 1) {
    const auto& [w, c] = *small.terms().begin();
    return big.shifted(w) * c;
  }
  std::unordered_map<Weight, Integer, WeightHash> acc;
  acc.reserve(small.size() * big.size());
  Integer prod;
  for (const auto& [wa, ca] : small.terms()) {
    for (const auto& [wb, cb] : big.terms()) {
      mpz_mul(prod.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
      acc[wa + wb] += prod;
    }
  }
  CharElt::Terms terms;
  for (auto& [w, c] : acc) {
    if (c != 0) terms.emplace(w, std::move(c));
  }
  return CharElt(std::move(terms));
}

CharElt power(const CharElt& u, long k, std::size_t rank) {
  if (k < 0) {
    if (u.size() != 1 || abs(u.terms().begin()->second) != 1) {
      throw NotDivisible("negative powers are defined only for units +-e^lambda");
    }
    const auto& [w, c] = *u.terms().begin();
    return CharElt::monomial(w.scaled(k), (-k) % 2 ? c : Integer(1));
  }
  CharElt result = CharElt::constant(u.is_zero() ? rank : u.rank(), 1);
  CharElt base = u;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

CharElt weyl_act(const WeylGroup& group, const WeylElt& w, const CharElt& u) {
  if (w.length == 0) return u;
  const IntMatrix& m = group.matrix(w);
  CharElt::Terms terms;
  for (const auto& [lambda, c] : u.terms()) terms.emplace(apply_matrix(m, lambda), c);
  return CharElt(std::move(terms));
}

CharElt reflect_simple(const RootDatum& datum, std::size_t j, const CharElt& u) {
  CharElt::Terms terms;
  for (const auto& [lambda, c] : u.terms()) terms.emplace(reflect_simple(datum, j, lambda), c);
  return CharElt(std::move(terms));
}

CharElt reflect(const Root& alpha, const CharElt& u) {
  CharElt::Terms terms;
  for (const auto& [lambda, c] : u.terms()) terms.emplace(reflect(alpha, lambda), c);
  return CharElt(std::move(terms));
}

namespace {

std::int64_t floor_div2(std::int64_t p) { return p >= 0 ? p / 2 : -((-p + 1) / 2); }

}  // namespace

CharElt divide_exact(const CharElt& u, const Root& alpha) {
  if (u.is_zero()) return {};
  if (alpha.weight.rank() != u.rank()) throw RankMismatch("root and character differ in rank");

  // Line mu + Z alpha is keyed by its point with <., alpha^vee> in {0, 1}.
  struct Entry {
    std::int64_t pos;
    const Integer* coeff;
  };
  std::unordered_map<Weight, std::vector<Entry>, WeightHash> lines;
  for (const auto& [mu, c] : u.terms()) {
    const std::int64_t p = alpha.pair(mu);
    Weight key = mu - alpha.weight.scaled(floor_div2(p));
    lines[key].push_back({p, &c});
  }

  CharElt::Terms out;
  Integer carry;
  for (auto& [key, entries] : lines) {
    std::sort(entries.begin(), entries.end(),
              [](const Entry& a, const Entry& b) { return a.pos > b.pos; });
    const std::int64_t base = alpha.pair(key);
    const std::int64_t lowest = entries.back().pos;
    carry = 0;
    std::size_t next = 0;
    for (std::int64_t p = entries.front().pos; p >= lowest; p -= 2) {
      if (next < entries.size() && entries[next].pos == p) carry += *entries[next++].coeff;
      if (p == lowest) break;
      if (carry != 0) out.emplace(key + alpha.weight.scaled((p - base) / 2), carry);
    }
    if (carry != 0) {
      throw NotDivisible("character is not divisible by (1 - e^{-alpha}) for alpha = " +
                         to_string(alpha.weight) + ": remainder survives past weight " +
                         to_string(key + alpha.weight.scaled((lowest - base) / 2)));
    }
  }
  return CharElt(std::move(out));
}

CharElt one_minus_exp_neg(const Root& alpha) {
  CharElt r = CharElt::constant(alpha.weight.rank(), 1);
  r.add_term(-alpha.weight, -1);
  return r;
}

CharElt weyl_denominator(const RootDatum& datum) {
  CharElt d = CharElt::constant(datum.rank(), 1);
  for (const auto& alpha : datum.positive_roots()) d = d * one_minus_exp_neg(alpha);
  return d;
}

CharElt antisymmetrize(const WeylGroup& group, const CharElt& u) {
  const Weight& rho = group.datum().weyl_vector();
  const auto& elts = group.elements();
  auto partial_sum = [&](std::size_t begin, std::size_t end) {
    CharElt acc;
    for (std::size_t i = begin; i < end; ++i) {
      const WeylElt& w = elts[i];
      const IntMatrix& m = group.matrix(w);
      const int s = sign(w);
      for (const auto& [lambda, c] : u.terms()) {
        acc.add_term(apply_matrix(m, lambda + rho) - rho, s > 0 ? c : Integer(-c));
      }
    }
    return acc;
  };

  const std::size_t threads = std::min(thread_count(), elts.size());
  if (threads <= 1) return partial_sum(0, elts.size());

  std::vector<CharElt> parts(threads);
  {
    std::vector<std::jthread> pool;
    const std::size_t chunk = (elts.size() + threads - 1) / threads;
    for (std::size_t t = 0; t < threads; ++t) {
      const std::size_t b = std::min(elts.size(), t * chunk);
      const std::size_t e = std::min(elts.size(), b + chunk);
      pool.emplace_back([&, t, b, e] { parts[t] = partial_sum(b, e); });
    }
  }
  CharElt total;
  for (const auto& p : parts) total += p;
  return total;
}

std::string to_string(const Integer& n) { return n.get_str(); }

std::string to_string(const CharElt& u) {
  if (u.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (auto it = u.terms().rbegin(); it != u.terms().rend(); ++it) {
    const auto& [w, c] = *it;
    const bool neg = c < 0;
    Integer mag = abs(c);
    if (first) {
      if (neg) s += '-';
    } else {
      s += neg ? " - " : " + ";
    }
    if (mag != 1) s += mag.get_str() + "*";
    s += "e" + to_string(w);
    first = false;
  }
  return s;
}

}  // namespace weylkit
