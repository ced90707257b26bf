#pragma once

/**
 * Subalgebras k[f, g] of k[z] through their degree semigroup.
 *
 * A SAGBI basis is a finite set of monic elements of k[f, g] whose degrees
 * generate every degree occurring in k[f, g]. Subduction against it cancels
 * leading terms with products of basis elements; it ends in a constant
 * exactly when the input is a member, and the cancelled products assemble
 * into a certificate P with P(f, g) = u.
 */

#include <cstddef>
#include <cstdlib>
#include <deque>
#include <optional>
#include <algorithm>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "amoh/bivar.hpp"
#include "amoh/error.hpp"
#include "amoh/linsolve.hpp"
#include "amoh/poly.hpp"
#include "amoh/semigroup.hpp"

namespace amoh {

template <ExactField F>
struct BasisElement {
  Poly<F> poly;              // monic
  BivarExpr<F> provenance;   // provenance(f, g) == poly
  std::size_t degree = 0;

  friend bool operator==(const BasisElement&, const BasisElement&) = default;
};

template <ExactField F>
struct SagbiBasis {
  std::vector<BasisElement<F>> elements;
  Poly<F> f;
  Poly<F> g;

  std::vector<std::size_t> degrees() const {
    std::vector<std::size_t> out;
    out.reserve(elements.size());
    for (const auto& e : elements) out.push_back(e.degree);
    return out;
  }
  DegreeSemigroup semigroup() const { return DegreeSemigroup(degrees()); }

  friend bool operator==(const SagbiBasis&, const SagbiBasis&) = default;
};

template <ExactField F>
struct Subduction {
  Poly<F> remainder;
  BivarExpr<F> consumed;
};

template <ExactField F>
struct MembershipResult {
  bool member = false;
  std::optional<BivarExpr<F>> certificate;
  std::optional<std::size_t> obstruction_degree;
};

/// Completion cap used when none is given: AMOH_ITER_CAP if set, otherwise
/// 10 * (deg f + deg g)^2.
inline std::size_t default_iteration_cap(std::size_t deg_f, std::size_t deg_g) {
  if (const char* env = std::getenv("AMOH_ITER_CAP")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  const std::size_t s = deg_f + deg_g;
  return std::max<std::size_t>(10 * s * s, 10);
}

namespace detail {

inline std::size_t degree_or_zero_of(const Degree& d) { return d.is_finite() ? d.value() : 0; }

/// Lazily computed powers of basis elements and of their provenances.
template <ExactField F>
class PowerCache {
 public:
  explicit PowerCache(const std::vector<BasisElement<F>>& elements) : elements_(elements) {}

  Poly<F> product(const std::vector<std::size_t>& mult) {
    Poly<F> out = Poly<F>::constant(F(1));
    for (std::size_t i = 0; i < mult.size(); ++i) {
      if (mult[i] > 0) out = out * poly_power(i, mult[i]);
    }
    return out;
  }

  BivarExpr<F> provenance(const std::vector<std::size_t>& mult) {
    BivarExpr<F> out = BivarExpr<F>::constant(F(1));
    for (std::size_t i = 0; i < mult.size(); ++i) {
      if (mult[i] > 0) out = out * prov_power(i, mult[i]);
    }
    return out;
  }

 private:
  const Poly<F>& poly_power(std::size_t i, std::size_t k) {
    if (polys_.size() <= i) polys_.resize(i + 1);
    auto& row = polys_[i];
    if (row.empty()) row.push_back(Poly<F>::constant(F(1)));
    while (row.size() <= k) row.push_back(row.back() * elements_[i].poly);
    return row[k];
  }
  const BivarExpr<F>& prov_power(std::size_t i, std::size_t k) {
    if (provs_.size() <= i) provs_.resize(i + 1);
    auto& row = provs_[i];
    if (row.empty()) row.push_back(BivarExpr<F>::constant(F(1)));
    while (row.size() <= k) row.push_back(row.back() * elements_[i].provenance);
    return row[k];
  }

  const std::vector<BasisElement<F>>& elements_;
  std::vector<std::vector<Poly<F>>> polys_;
  std::vector<std::vector<BivarExpr<F>>> provs_;
};

template <ExactField F>
Subduction<F> subduct_elements(const Poly<F>& u, const std::vector<BasisElement<F>>& elements,
                               PowerCache<F>& cache, bool track = true) {
  Subduction<F> out{u, {}};
  if (u.is_constant() || elements.empty()) return out;
  std::vector<std::size_t> degrees;
  for (const auto& e : elements) degrees.push_back(e.degree);
  const Factorizer factorizer(degrees, u.deg());
  std::vector<std::pair<std::vector<std::size_t>, F>> used;
  while (!out.remainder.is_constant()) {
    auto mult = factorizer.factor(out.remainder.deg());
    if (!mult) break;
    const F c = out.remainder.leading();
    out.remainder -= cache.product(*mult) * c;
    used.emplace_back(std::move(*mult), c);
  }
  if (track) {
    for (const auto& [mult, c] : used) out.consumed += cache.provenance(mult) * c;
  }
  return out;
}

inline std::vector<std::size_t> trimmed(std::vector<std::size_t> v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
  return v;
}

}  // namespace detail

/// Cancels leading terms of u against products of basis elements, largest
/// basis degree consumed first. u == eval(consumed, f, g) + remainder, and the
/// remainder is constant or has a degree outside the basis semigroup.
template <ExactField F>
Subduction<F> subduct(const Poly<F>& u, const SagbiBasis<F>& basis) {
  detail::PowerCache<F> cache(basis.elements);
  return detail::subduct_elements(u, basis.elements, cache);
}

/// Completes {f, g} to a SAGBI basis by subducting tête-à-tête differences
/// taken from an Apéry-set presentation of the current degree semigroup.
/// `iteration_cap` of 0 selects default_iteration_cap().
template <ExactField F>
SagbiBasis<F> sagbi_basis(const Poly<F>& f, const Poly<F>& g, std::size_t iteration_cap = 0) {
  if (f.is_constant() && g.is_constant()) {
    fail(ErrorKind::TrivialAlgebra, "both generators are constants; k[f, g] = k");
  }
  const std::size_t cap =
      iteration_cap > 0 ? iteration_cap
                        : default_iteration_cap(detail::degree_or_zero_of(f.degree()),
                                                detail::degree_or_zero_of(g.degree()));
  SagbiBasis<F> basis;
  basis.f = f;
  basis.g = g;
  auto& elements = basis.elements;
  detail::PowerCache<F> cache(elements);

  // Subducts p (with p == eval(prov())) and adjoins the monic remainder when
  // it is not constant. Provenance is only built for adjoined elements.
  auto adjoin = [&](const Poly<F>& p, auto&& prov) {
    if (detail::subduct_elements(p, elements, cache, false).remainder.is_constant()) return false;
    Subduction<F> s = detail::subduct_elements(p, elements, cache);
    const F inv = F(1) / s.remainder.leading();
    const std::size_t d = s.remainder.deg();
    elements.push_back(BasisElement<F>{s.remainder * inv, (prov() - s.consumed) * inv, d});
    return true;
  };
  auto has_linear = [&] {
    return std::any_of(elements.begin(), elements.end(), [](const auto& e) { return e.degree == 1; });
  };

  adjoin(f, [] { return BivarExpr<F>::X(); });
  adjoin(g, [] { return BivarExpr<F>::Y(); });

  std::set<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> done;
  std::size_t steps = 0;
  bool grew = true;
  // A degree-1 element already generates every degree.
  while (grew && !has_linear()) {
    grew = false;
    for (const auto& rel : basis.semigroup().presentation()) {
      auto key = std::make_pair(detail::trimmed(rel.lhs), detail::trimmed(rel.rhs));
      if (!done.insert(std::move(key)).second) continue;
      if (++steps > cap) {
        fail(ErrorKind::InternalLimitExceeded,
             "subalgebra completion exceeded " + std::to_string(cap) + " steps");
      }
      const Poly<F> diff = cache.product(rel.lhs) - cache.product(rel.rhs);
      if (diff.is_constant()) continue;
      if (adjoin(diff, [&] { return cache.provenance(rel.lhs) - cache.provenance(rel.rhs); })) {
        grew = true;
        break;
      }
    }
  }

  // Drop elements whose degree is generated by the remaining ones; the
  // semigroup, and hence the SAGBI property, is unchanged.
  for (std::size_t k = elements.size(); k-- > 0;) {
    std::vector<std::size_t> others;
    for (std::size_t i = 0; i < elements.size(); ++i) {
      if (i != k) others.push_back(elements[i].degree);
    }
    if (!others.empty() && DegreeSemigroup(others).contains(elements[k].degree)) {
      elements.erase(elements.begin() + static_cast<std::ptrdiff_t>(k));
    }
  }
  return basis;
}

/// Whether is_member builds the certificate. Certificates of high-degree
/// members can be much larger than the question itself.
enum class Certify { Yes, No };

template <ExactField F>
MembershipResult<F> is_member(const Poly<F>& u, const SagbiBasis<F>& basis, Certify certify = Certify::Yes) {
  detail::PowerCache<F> cache(basis.elements);
  Subduction<F> s = detail::subduct_elements(u, basis.elements, cache, certify == Certify::Yes);
  MembershipResult<F> out;
  if (s.remainder.is_constant()) {
    out.member = true;
    if (certify == Certify::Yes) {
      s.consumed.add_term(s.remainder.constant_term(), 0, 0);
      out.certificate = std::move(s.consumed);
    }
  } else {
    out.obstruction_degree = s.remainder.deg();
  }
  return out;
}

/// Decides u in k[f, g]; members come with a certificate P, P(f, g) = u.
template <ExactField F>
MembershipResult<F> is_member(const Poly<F>& u, const Poly<F>& f, const Poly<F>& g) {
  return is_member(u, sagbi_basis(f, g));
}

/// Independent oracle: searches for P with every monomial weight
/// i*deg f + j*deg g <= bound and P(f, g) = u by exact linear algebra.
/// Absence of a result is not a proof of non-membership.
template <ExactField F>
std::optional<BivarExpr<F>> brute_force_member(const Poly<F>& u, const Poly<F>& f, const Poly<F>& g,
                                               std::size_t bound) {
  if (u.degree() > bound) {
    fail(ErrorKind::PreconditionViolated, "brute-force bound below deg u");
  }
  const std::size_t m = f.is_constant() ? 0 : f.deg();
  const std::size_t n = g.is_constant() ? 0 : g.deg();
  std::vector<std::pair<std::size_t, std::size_t>> monomials;
  const std::size_t max_i = m == 0 ? 0 : bound / m;
  for (std::size_t i = 0; i <= max_i; ++i) {
    const std::size_t max_j = n == 0 ? 0 : (bound - i * m) / n;
    for (std::size_t j = 0; j <= max_j; ++j) monomials.emplace_back(i, j);
  }
  std::vector<Poly<F>> f_pow{Poly<F>::constant(F(1))};
  std::vector<Poly<F>> g_pow{Poly<F>::constant(F(1))};
  Matrix<F> a(bound + 1, std::vector<F>(monomials.size(), F(0)));
  for (std::size_t col = 0; col < monomials.size(); ++col) {
    const auto [i, j] = monomials[col];
    while (f_pow.size() <= i) f_pow.push_back(f_pow.back() * f);
    while (g_pow.size() <= j) g_pow.push_back(g_pow.back() * g);
    const Poly<F> column = f_pow[i] * g_pow[j];
    for (std::size_t k = 0; k < column.coeffs().size() && k <= bound; ++k) a[k][col] = column.coeffs()[k];
  }
  std::vector<F> rhs(bound + 1, F(0));
  for (std::size_t k = 0; k < u.coeffs().size(); ++k) rhs[k] = u.coeffs()[k];
  auto solution = solve_linear(std::move(a), std::move(rhs));
  if (!solution) return std::nullopt;
  BivarExpr<F> cert;
  for (std::size_t col = 0; col < monomials.size(); ++col) {
    cert.add_term((*solution)[col], monomials[col].first, monomials[col].second);
  }
  if (eval_bivariate(cert, f, g) != u) {
    fail(ErrorKind::InternalInconsistency, "brute-force certificate failed re-evaluation");
  }
  return cert;
}

template <ExactField F>
DeltaSequence delta_sequence(const Poly<F>& f, const Poly<F>& g) {
  if (f.is_constant() || g.is_constant()) {
    fail(ErrorKind::TrivialAlgebra, "delta sequence needs nonconstant f and g");
  }
  return delta_sequence(f.deg(), g.deg(), sagbi_basis(f, g).semigroup());
}

}  // namespace amoh
