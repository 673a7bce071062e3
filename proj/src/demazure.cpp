#include "weylkit/demazure.hpp"

#include <algorithm>
#include <thread>

#include "weylkit/config.hpp"
#include "weylkit/errors.hpp"

namespace weylkit {

namespace {

CharElt divide_or_die(const CharElt& numerator, const Root& alpha, const char* op) {
  try {
    return divide_exact(numerator, alpha);
  } catch (const NotDivisible& e) {
    throw InvariantViolation(std::string(op) + " numerator failed to divide: " + e.what());
  }
}

template <class Step>
CharElt compose(const Word& word, const CharElt& u, Step step) {
  CharElt r = u;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    r = step(static_cast<std::size_t>(*it), r);
  }
  return r;
}

template <class Step>
CharElt compose_checked(const WeylGroup& group, const WeylElt& w, const CharElt& u,
                        PartialOptions opts, Step step) {
  if (!opts.strict && !strict_from_environment()) return compose(w.word, u, step);

  const auto words = group.all_reduced_words(w);
  std::vector<CharElt> results(words.size());
  const std::size_t threads = std::min(thread_count(), words.size());
  if (threads <= 1) {
    for (std::size_t i = 0; i < words.size(); ++i) results[i] = compose(words[i], u, step);
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        for (std::size_t i = t; i < words.size(); i += threads) {
          results[i] = compose(words[i], u, step);
        }
      });
    }
  }
  for (std::size_t i = 1; i < results.size(); ++i) {
    if (results[i] != results[0]) {
      throw WordMismatch("reduced words " + format_word(words[0]) + " and " +
                         format_word(words[i]) + " give different results");
    }
  }
  return results.front();
}

}  // namespace

CharElt delta(const RootDatum& datum, std::size_t j, const CharElt& u) {
  const Root& alpha = datum.simple_root(j);
  CharElt numerator = u - reflect_simple(datum, j, u).shifted(-alpha.weight);
  return divide_or_die(numerator, alpha, "delta");
}

CharElt delta_prime(const RootDatum& datum, std::size_t j, const CharElt& u) {
  const Root& alpha = datum.simple_root(j);
  CharElt numerator = u - reflect_simple(datum, j, u);
  return divide_or_die(numerator, alpha, "delta'");
}

CharElt partial_word(const RootDatum& datum, const Word& word, const CharElt& u) {
  return compose(word, u, [&](std::size_t j, const CharElt& v) { return delta(datum, j, v); });
}

CharElt partial_prime_word(const RootDatum& datum, const Word& word, const CharElt& u) {
  return compose(word, u,
                 [&](std::size_t j, const CharElt& v) { return delta_prime(datum, j, v); });
}

CharElt partial(const WeylGroup& group, const WeylElt& w, const CharElt& u, PartialOptions opts) {
  return compose_checked(group, w, u, opts, [&](std::size_t j, const CharElt& v) {
    return delta(group.datum(), j, v);
  });
}

CharElt partial_prime(const WeylGroup& group, const WeylElt& w, const CharElt& u,
                      PartialOptions opts) {
  return compose_checked(group, w, u, opts, [&](std::size_t j, const CharElt& v) {
    return delta_prime(group.datum(), j, v);
  });
}

std::vector<CharElt> partial_all(const WeylGroup& group, const CharElt& u) {
  std::vector<CharElt> out(group.order());
  for (const auto& w : group.elements()) {
    if (w.length == 0) {
      out[w.index] = u;
      continue;
    }
    const auto first = static_cast<std::size_t>(w.word.front());
    const WeylElt& rest = group.left_mul(first, w);
    out[w.index] = delta(group.datum(), first, out[rest.index]);
  }
  return out;
}

CharElt top(const WeylGroup& group, const CharElt& u, PartialOptions opts) {
  return partial(group, group.longest(), u, opts);
}

CharElt top_via_antisymmetrizer(const WeylGroup& group, const CharElt& u) {
  CharElt q = antisymmetrize(group, u);
  for (const auto& alpha : group.datum().positive_roots()) {
    q = divide_or_die(q, alpha, "Weyl denominator");
  }
  return q;
}

}  // namespace weylkit
