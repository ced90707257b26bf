#include "amoh/theorems.hpp"

#include <map>
#include <numeric>
#include <optional>
#include <vector>

#include "amoh/decompose.hpp"
#include "amoh/error.hpp"
#include "amoh/semigroup.hpp"
#include "amoh/subalgebra.hpp"

namespace amoh {

namespace {

// Everything check_strong_am needs that does not depend on a.
class StrongAmContext {
 public:
  StrongAmContext(const QPoly& f, const QPoly& g) : f_(f), g_(g) {
    if (f.is_constant() || g.is_constant()) {
      fail(ErrorKind::PreconditionViolated, "f and g must be nonconstant");
    }
  }

  StrongAmReport check(std::size_t a) {
    const std::size_t m = f_.deg();
    const std::size_t n = g_.deg();
    if (a == 0 || a > std::min(m, n)) {
      fail(ErrorKind::PreconditionViolated, "a must satisfy 1 <= a <= min(deg f, deg g)");
    }
    StrongAmReport report;
    report.a = a;
    report.u_degree = m - a;
    report.v_degree = n - a;
    report.divisibility_holds = m % n == 0 || n % m == 0;

    // k[f, g] = k[f~, g~] ∘ h, so its degrees are deg h times those of k[f~, g~].
    prepare();
    const std::size_t e = dec_->h.deg();
    if (a % e != 0) return report;
    const std::size_t du = report.u_degree / e;
    const std::size_t dv = report.v_degree / e;
    report.applicable = semigroup_->contains(du) && semigroup_->contains(dv);
    if (!report.applicable) return report;

    report.u_witness = witness(du);
    report.v_witness = witness(dv);
    if (!report.divisibility_holds) {
      fail(ErrorKind::InternalInconsistency, "applicable case without degree divisibility");
    }
    return report;
  }

 private:
  // A product of generators and basis elements.
  using Factors = std::vector<std::pair<std::size_t, std::size_t>>;  // (element index, exponent)

  void prepare() {
    if (dec_) return;
    dec_ = common_parameter(f_, g_);
    basis_ = sagbi_basis(dec_->f_tilde, dec_->g_tilde);
    semigroup_ = basis_->semigroup();
    delta_ = delta_sequence(dec_->f_tilde.deg(), dec_->g_tilde.deg(), *semigroup_);
    // Pseudo-elements for the generators themselves: index 0 is g~, 1 is f~.
    polys_ = {dec_->g_tilde, dec_->f_tilde};
    provs_ = {QExpr::Y(), QExpr::X()};
    for (const auto& el : basis_->elements) {
      polys_.push_back(el.poly);
      provs_.push_back(el.provenance);
    }
  }

  std::size_t element_of_degree(std::size_t degree) const {
    for (std::size_t i = 2; i < polys_.size(); ++i) {
      if (polys_[i].deg() == degree) return i;
    }
    fail(ErrorKind::InternalInconsistency, "delta entry without a basis element");
  }

  // Constrained δ-representation when it exists, otherwise a factorization
  // over the basis degrees.
  Factors factors_for(std::size_t value) const {
    Factors out;
    try {
      const SemigroupRepr repr = semigroup_represent(value, *delta_);
      for (std::size_t i = 0; i < repr.alphas.size(); ++i) {
        if (repr.alphas[i] == 0) continue;
        out.emplace_back(i < 2 ? i : element_of_degree(delta_->deltas[i]), repr.alphas[i]);
      }
      return out;
    } catch (const Error& err) {
      if (err.kind() != ErrorKind::NotInSemigroup) throw;
    }
    const Factorizer factorizer(basis_->degrees(), value);
    const auto mult = factorizer.factor(value);
    if (!mult) fail(ErrorKind::InternalInconsistency, "witness degree left the semigroup");
    for (std::size_t i = 0; i < mult->size(); ++i) {
      if ((*mult)[i] > 0) out.emplace_back(i + 2, (*mult)[i]);
    }
    return out;
  }

  const QExpr& prov_power(std::size_t i, std::size_t k) {
    auto& row = powers_[i];
    if (row.empty()) row.push_back(QExpr::constant(Rational(1)));
    while (row.size() <= k) row.push_back(row.back() * provs_[i]);
    return row[k];
  }

  // The witness degree is checked on the element polynomials: evaluation is
  // a ring map and each provenance evaluates to its element (a basis
  // invariant), which avoids expanding large powers a second time.
  QExpr witness(std::size_t value) {
    QExpr w = QExpr::constant(Rational(1));
    std::size_t degree = 0;
    for (const auto& [i, k] : factors_for(value)) {
      w = w * prov_power(i, k);
      degree += k * polys_[i].deg();
    }
    if (degree != value) fail(ErrorKind::InternalInconsistency, "witness degree mismatch");
    return w;
  }

  QPoly f_, g_;
  std::optional<Decomposition> dec_;
  std::optional<SagbiBasis<Rational>> basis_;
  std::optional<DegreeSemigroup> semigroup_;
  std::optional<DeltaSequence> delta_;
  std::vector<QPoly> polys_;
  std::vector<QExpr> provs_;
  std::map<std::size_t, std::vector<QExpr>> powers_;
};

}  // namespace

StrongAmReport check_strong_am(const QPoly& f, const QPoly& g, std::size_t a) {
  return StrongAmContext(f, g).check(a);
}

std::vector<StrongAmReport> check_strong_am_sweep(const QPoly& f, const QPoly& g) {
  StrongAmContext context(f, g);
  std::vector<StrongAmReport> out;
  for (std::size_t a = 1; a <= std::min(f.deg(), g.deg()); ++a) out.push_back(context.check(a));
  return out;
}

Prop22Report check_prop22(const QPoly& f, const QPoly& g) {
  if (f.is_constant() || g.is_constant()) {
    fail(ErrorKind::PreconditionViolated, "f and g must be nonconstant");
  }
  if (!f.is_monic() || !g.is_monic()) fail(ErrorKind::NotMonic, "f and g must be monic");
  const std::size_t m = f.deg();
  const std::size_t n = g.deg();
  const std::size_t d = std::gcd(m, n);
  const Rational m_q(static_cast<long>(m));
  const Rational n_q(static_cast<long>(n));
  const QPoly df = f.derivative();
  const QPoly dg = g.derivative();

  Prop22Report report;
  const QPoly wronskian = n_q * (df * g) - m_q * (f * dg);
  if (wronskian.is_constant()) report.a = wronskian.constant_term();
  report.condition_221_holds = wronskian.is_constant() && !wronskian.is_zero();

  const QPoly f_pow = f.pow(n / d);
  const QPoly g_pow = g.pow(m / d);
  const QPoly gap = f_pow - g_pow;
  if (gap.is_constant()) report.b = gap.constant_term();
  report.condition_222_holds = gap.is_constant();

  report.is_line = is_line(f, g).is_line;
  if (!(report.condition_221_holds && report.condition_222_holds)) return report;

  const Rational a = *report.a;
  const Rational b = *report.b;
  if (b.is_zero()) fail(ErrorKind::InternalInconsistency, "coprime generators with b = 0");

  const QPoly f_low = f.pow(n / d - 1);
  const QPoly g_low = g.pow(m / d - 1);
  // The differentiated relation, scaled by d, and its combination with the
  // wronskian condition.
  const bool eq224 = (n_q * (f_low * df) - m_q * (g_low * dg)).is_zero();
  const bool eq225 = (a * f_low + m_q * (dg * gap)).is_zero();
  const bool eq226 = dg == (-a / (m_q * b)) * f_low;
  const bool eq227 = df == (-a / (n_q * b)) * g_low;
  report.derived_derivatives_verified = eq224 && eq225 && eq226 && eq227;
  if (!report.derived_derivatives_verified) {
    fail(ErrorKind::InternalInconsistency, "derivative identities failed under both conditions");
  }
  if (!report.is_line) fail(ErrorKind::InternalInconsistency, "both conditions hold but the curve is not a line");

  if (m <= n) {
    if (m != 1) fail(ErrorKind::InternalInconsistency, "both conditions hold but f is not linear");
    const Rational c = f.constant_term();
    const QPoly shifted = QPoly{c, Rational(1)};
    if (g != shifted.pow(n) - QPoly::constant(b)) {
      fail(ErrorKind::InternalInconsistency, "canonical form mismatch");
    }
    report.canonical_c = c;
    report.canonical_b = b;
  }
  return report;
}

}  // namespace amoh
