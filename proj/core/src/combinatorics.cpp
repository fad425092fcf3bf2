#include "gammax/combinatorics.hpp"

#include <mutex>
#include <vector>

namespace gammax {

Rational binomial_general(const Rational& r, std::size_t k) {
  Rational out(1);
  for (std::size_t i = 0; i < k; ++i) {
    out *= (r - Rational(static_cast<long>(i))) / Rational(static_cast<long>(i + 1));
  }
  return out;
}

namespace {

struct BernoulliTable {
  std::mutex mutex;
  std::vector<Rational> values{Rational(1)};
};

BernoulliTable& bernoulli_table() {
  static BernoulliTable table;
  return table;
}

}  // namespace

Rational bernoulli(std::size_t n) {
  auto& table = bernoulli_table();
  std::lock_guard lock(table.mutex);
  auto& b = table.values;
  while (b.size() <= n) {
    // (m+1) B_m = -sum_{j<m} C(m+1, j) B_j
    const std::size_t m = b.size();
    mpz_class choose(1);  // C(m+1, 0)
    Rational sum;
    for (std::size_t j = 0; j < m; ++j) {
      if (!b[j].is_zero()) sum += Rational(choose, 1) * b[j];
      choose = choose * static_cast<unsigned long>(m + 1 - j) / static_cast<unsigned long>(j + 1);
    }
    b.push_back(-sum / Rational(static_cast<long>(m + 1)));
  }
  return b[n];
}

}  // namespace gammax
