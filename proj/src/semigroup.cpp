#include "amoh/semigroup.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <string>
#include <utility>

#include "amoh/error.hpp"

namespace amoh {

DegreeSemigroup::DegreeSemigroup(std::vector<std::size_t> generators)
    : generators_(std::move(generators)) {
  for (std::size_t g : generators_) {
    if (g == 0) throw std::invalid_argument("semigroup generators must be positive");
    gcd_ = std::gcd(gcd_, g);
  }
}

std::vector<bool> DegreeSemigroup::membership_table(std::size_t bound) const {
  std::vector<bool> table(bound + 1, false);
  table[0] = true;
  for (std::size_t d = 1; d <= bound; ++d) {
    for (std::size_t g : generators_) {
      if (g <= d && table[d - g]) {
        table[d] = true;
        break;
      }
    }
  }
  return table;
}

bool DegreeSemigroup::contains(std::size_t value) const {
  if (value == 0) return true;
  if (gcd_ == 0 || value % gcd_ != 0) return false;
  return membership_table(value)[value];
}

std::vector<DegreeSemigroup::Relation> DegreeSemigroup::presentation() const {
  std::vector<Relation> relations;
  const std::size_t r = generators_.size();
  if (r < 2) return relations;

  const std::size_t pivot = static_cast<std::size_t>(
      std::min_element(generators_.begin(), generators_.end()) - generators_.begin());
  const std::size_t n1 = generators_[pivot];

  // Shortest paths over residues mod n1: dist[res] is the Apéry element.
  constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> dist(n1, kInf);
  std::vector<std::size_t> via_gen(n1, r);
  std::vector<std::size_t> via_res(n1, 0);
  using Item = std::pair<std::size_t, std::size_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  dist[0] = 0;
  queue.emplace(0, 0);
  while (!queue.empty()) {
    auto [d, res] = queue.top();
    queue.pop();
    if (d != dist[res]) continue;
    for (std::size_t i = 0; i < r; ++i) {
      if (i == pivot) continue;
      const std::size_t nd = d + generators_[i];
      const std::size_t nres = nd % n1;
      if (nd < dist[nres]) {
        dist[nres] = nd;
        via_gen[nres] = i;
        via_res[nres] = res;
        queue.emplace(nd, nres);
      }
    }
  }

  // Standard factorization of every Apéry element along the path tree.
  std::vector<std::vector<std::size_t>> eps(n1);
  std::function<const std::vector<std::size_t>&(std::size_t)> standard =
      [&](std::size_t res) -> const std::vector<std::size_t>& {
    if (!eps[res].empty()) return eps[res];
    if (res == 0) {
      eps[0].assign(r, 0);
      return eps[0];
    }
    std::vector<std::size_t> v = standard(via_res[res]);
    ++v[via_gen[res]];
    eps[res] = std::move(v);
    return eps[res];
  };

  for (std::size_t res = 0; res < n1; ++res) {
    if (dist[res] == kInf) continue;
    const std::vector<std::size_t>& base = standard(res);
    for (std::size_t i = 0; i < r; ++i) {
      if (i == pivot) continue;
      const std::size_t value = dist[res] + generators_[i];
      const std::size_t target = value % n1;
      std::vector<std::size_t> lhs = base;
      ++lhs[i];
      std::vector<std::size_t> rhs = standard(target);
      rhs[pivot] += (value - dist[target]) / n1;
      if (lhs != rhs) relations.push_back(Relation{std::move(lhs), std::move(rhs), value});
    }
  }
  std::stable_sort(relations.begin(), relations.end(),
                   [](const Relation& a, const Relation& b) { return a.degree < b.degree; });
  return relations;
}

Factorizer::Factorizer(std::vector<std::size_t> generators, std::size_t bound)
    : generators_(std::move(generators)), bound_(bound) {
  order_.resize(generators_.size());
  std::iota(order_.begin(), order_.end(), std::size_t{0});
  std::stable_sort(order_.begin(), order_.end(),
                   [&](std::size_t a, std::size_t b) { return generators_[a] > generators_[b]; });
  const std::size_t r = order_.size();
  suffix_reach_.assign(r + 1, std::vector<bool>(bound + 1, false));
  suffix_reach_[r][0] = true;
  for (std::size_t k = r; k-- > 0;) {
    const std::size_t g = generators_[order_[k]];
    auto& cur = suffix_reach_[k];
    const auto& next = suffix_reach_[k + 1];
    for (std::size_t d = 0; d <= bound; ++d) {
      cur[d] = next[d] || (d >= g && cur[d - g]);
    }
  }
}

std::optional<std::vector<std::size_t>> Factorizer::factor(std::size_t value) const {
  if (value > bound_) throw std::out_of_range("factorizer bound exceeded");
  if (!suffix_reach_[0][value]) return std::nullopt;
  std::vector<std::size_t> mult(generators_.size(), 0);
  std::size_t rest = value;
  for (std::size_t k = 0; k < order_.size(); ++k) {
    const std::size_t g = generators_[order_[k]];
    std::size_t c = rest / g;
    while (!suffix_reach_[k + 1][rest - c * g]) --c;
    mult[order_[k]] = c;
    rest -= c * g;
  }
  return mult;
}

DeltaSequence delta_sequence(std::size_t deg_f, std::size_t deg_g, const DegreeSemigroup& semigroup) {
  if (deg_f == 0 || deg_g == 0) {
    fail(ErrorKind::TrivialAlgebra, "delta sequence needs two nonconstant generators");
  }
  DeltaSequence out;
  out.deltas = {deg_g, deg_f};
  std::size_t d = std::gcd(deg_g, deg_f);
  out.ds.push_back(d);
  const std::size_t floor = std::gcd(semigroup.gcd(), d);
  while (d > floor) {
    std::optional<std::size_t> next;
    for (std::size_t g : semigroup.generators()) {
      if (g % d != 0 && (!next || g < *next)) next = g;
    }
    if (!next) fail(ErrorKind::InternalInconsistency, "gcd chain stalled");
    out.deltas.push_back(*next);
    d = std::gcd(d, *next);
    out.ds.push_back(d);
  }
  out.h = out.deltas.size() - 1;
  return out;
}

namespace {

// Inverse of a modulo m, for gcd(a, m) = 1 and m >= 1.
std::size_t mod_inverse(std::size_t a, std::size_t m) {
  long long t = 0, new_t = 1;
  long long r = static_cast<long long>(m), new_r = static_cast<long long>(a % m);
  while (new_r != 0) {
    const long long q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (r != 1) throw std::logic_error("mod_inverse: arguments not coprime");
  if (t < 0) t += static_cast<long long>(m);
  return static_cast<std::size_t>(t);
}

[[noreturn]] void not_in_semigroup(std::size_t value) {
  fail(ErrorKind::NotInSemigroup, std::to_string(value) + " has no constrained representation");
}

}  // namespace

SemigroupRepr semigroup_represent(std::size_t value, const DeltaSequence& delta) {
  const std::size_t h = delta.h;
  if (delta.deltas.size() != h + 1 || delta.ds.size() != h || h < 1) {
    throw std::invalid_argument("malformed delta sequence");
  }
  SemigroupRepr repr;
  repr.alphas.assign(h + 1, 0);
  std::size_t rest = value;
  // ds[k] holds d_{k+2}.
  for (std::size_t i = h; i >= 2; --i) {
    const std::size_t d_i = delta.ds[i - 2];
    const std::size_t d_next = delta.ds[i - 1];
    if (rest % d_next != 0) not_in_semigroup(value);
    const std::size_t modulus = d_i / d_next;
    const std::size_t step = delta.deltas[i] / d_next;
    const std::size_t alpha = ((rest / d_next) % modulus) * mod_inverse(step, modulus) % modulus;
    if (alpha * delta.deltas[i] > rest) not_in_semigroup(value);
    repr.alphas[i] = alpha;
    rest -= alpha * delta.deltas[i];
  }
  const std::size_t d0 = delta.deltas[0];
  const std::size_t d1 = delta.deltas[1];
  for (std::size_t a0 = rest / d0 + 1; a0-- > 0;) {
    const std::size_t tail = rest - a0 * d0;
    if (tail % d1 == 0) {
      repr.alphas[0] = a0;
      repr.alphas[1] = tail / d1;
      return repr;
    }
  }
  not_in_semigroup(value);
}

}  // namespace amoh
