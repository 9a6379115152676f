#include "lich/algebra.hpp"

#include "lich/error.hpp"

namespace lich {

Algebra::Algebra(BasisPtr basis, std::vector<Form> dgen, std::vector<Scalar> metric)
    : basis_(std::move(basis)), dgen_(std::move(dgen)), metric_(std::move(metric)) {
  const std::size_t n = basis_->size();
  if (dgen_.size() != n)
    throw Error(ErrorKind::InvalidInput, "need d of every generator (" + std::to_string(n) + ")");
  for (auto& f : dgen_) {
    require_same_basis(basis_, f.basis());
    if (f.is_zero()) f = Form(basis_, n >= 2 ? 2 : 0);
    else if (f.degree() != 2) throw Error(ErrorKind::DegreeMismatch, "d of a generator must be a 2-form");
  }
  if (metric_.empty()) metric_.assign(n, basis_->mode().one());
  if (metric_.size() != n) throw Error(ErrorKind::InvalidInput, "metric needs one entry per generator");
  Rational product(1);
  bool rational_product = true;
  for (const auto& m : metric_) {
    auto v = m.constant_value();
    if (!(m.mode() == basis_->mode()) || !v || v->sign() <= 0)
      throw Error(ErrorKind::InvalidInput, "metric entries must be positive constants");
    product *= *v;
    rational_product = rational_product && v.has_value();
  }
  if (auto root = product.sqrt()) volume_scale_ = basis_->mode().constant(*root);
  d2_failure_ = check_d2(*this);
}

bool Algebra::has_identity_metric() const {
  for (const auto& m : metric_)
    if (!m.is_one()) return false;
  return true;
}

void Algebra::require_sound() const {
  if (d2_failure_)
    throw Error(ErrorKind::StructuralFailure,
                "d^2 does not vanish on generator '" + basis_->name(d2_failure_->generator) +
                    "': " + d2_failure_->residual.to_string());
}

const Scalar& Algebra::volume_scale() const {
  if (!volume_scale_)
    throw Error(ErrorKind::InvalidInput, "product of metric entries must be a rational square");
  return *volume_scale_;
}

Form d(const Algebra& alg, const Form& a) {
  require_same_basis(alg.basis(), a.basis());
  const std::size_t n = alg.size();
  if (a.degree() == 0 || static_cast<std::size_t>(a.degree()) == n || a.is_zero())
    return Form(a.basis(), static_cast<std::size_t>(a.degree()) == n ? a.degree() : a.degree() + 1);
  Form r(a.basis(), a.degree() + 1);
  for (const auto& [mask, c] : a.terms()) {
    int position = 0;
    for (std::size_t i : mask_indices(mask)) {
      const IndexMask bit = IndexMask{1} << i;
      const IndexMask left = mask & (bit - 1);
      const IndexMask right = mask & ~(bit | (bit - 1));
      for (const auto& [m2, c2] : alg.dgen(i).terms()) {
        const int s1 = merge_sign(left, m2);
        if (s1 == 0) continue;
        const int s2 = merge_sign(left | m2, right);
        if (s2 == 0) continue;
        const int sign = s1 * s2 * ((position & 1) ? -1 : 1);
        Scalar v = c * c2;
        r.add_term(left | m2 | right, sign > 0 ? v : -v);
      }
      ++position;
    }
  }
  return r;
}

std::optional<D2Failure> check_d2(const Algebra& alg) {
  for (std::size_t i = 0; i < alg.size(); ++i) {
    Form res = d(alg, alg.dgen(i));
    if (!res.is_zero()) return D2Failure{i, res};
  }
  return std::nullopt;
}

VectorField BracketTable::bracket(const VectorField& u, const VectorField& v) const {
  VectorField r(basis_);
  for (std::size_t a = 0; a < size(); ++a) {
    if (u[a].is_zero()) continue;
    for (std::size_t b = 0; b < size(); ++b) {
      if (v[b].is_zero() || a == b) continue;
      r = r + (u[a] * v[b]) * table_[a][b];
    }
  }
  return r;
}

BracketTable brackets_from_d(const Algebra& alg) {
  const std::size_t n = alg.size();
  std::vector<std::vector<VectorField>> table(n, std::vector<VectorField>(n, VectorField(alg.basis())));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const IndexMask pair = (IndexMask{1} << i) | (IndexMask{1} << j);
      std::vector<Scalar> coeffs(n, alg.mode().zero());
      for (std::size_t k = 0; k < n; ++k) coeffs[k] = -alg.dgen(k).coefficient(pair);
      table[i][j] = VectorField(alg.basis(), coeffs);
      table[j][i] = -table[i][j];
    }
  }
  return BracketTable(alg.basis(), std::move(table));
}

std::optional<JacobiFailure> jacobi_check(const BracketTable& t) {
  const std::size_t n = t.size();
  auto frame = [&](std::size_t i) { return VectorField::frame(t.basis(), i); };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        VectorField sum = t.bracket(frame(i), t(j, k)) + t.bracket(frame(j), t(k, i)) +
                          t.bracket(frame(k), t(i, j));
        if (!sum.is_zero()) return JacobiFailure{i, j, k, sum};
      }
  return std::nullopt;
}

bool is_unimodular(const Algebra& alg) {
  const BracketTable t = brackets_from_d(alg);
  for (std::size_t i = 0; i < alg.size(); ++i) {
    Scalar trace = alg.mode().zero();
    for (std::size_t j = 0; j < alg.size(); ++j) trace += t(i, j)[j];
    if (!trace.is_zero()) return false;
  }
  return true;
}

void require_closed_omega(const Algebra& alg, const Form& omega) {
  require_same_basis(alg.basis(), omega.basis());
  if (omega.is_zero()) return;
  if (omega.degree() != 1) throw Error(ErrorKind::OmegaNotClosed, "omega must be a 1-form");
  Form dw = d(alg, omega);
  if (!dw.is_zero())
    throw Error(ErrorKind::OmegaNotClosed, "d(omega) = " + dw.to_string() + " is not zero");
}

TwistedDifferential::TwistedDifferential(const Algebra& alg, Form omega)
    : alg_(&alg), omega_(std::move(omega)) {
  require_closed_omega(alg, omega_);
}

Form TwistedDifferential::operator()(const Form& a) const {
  Form da = d(*alg_, a);
  if (omega_.is_zero() || a.is_zero()) return da;
  return da + wedge(omega_, a);
}

Form d_omega(const Algebra& alg, const Form& omega, const Form& a) {
  return TwistedDifferential(alg, omega)(a);
}

Form lie_derivative(const Algebra& alg, const VectorField& v, const Form& a) {
  require_same_basis(alg.basis(), v.basis());
  Form r = interior(v, d(alg, a)) + d(alg, interior(v, a));
  if (r.is_zero()) return Form(a.basis(), a.degree());
  return r;
}

std::vector<Scalar> to_coordinates(const Form& a, int degree) {
  const auto monos = monomial_basis(a.basis()->size(), degree);
  if (!a.is_zero() && a.degree() != degree)
    throw Error(ErrorKind::DegreeMismatch, "form degree differs from requested coordinates");
  std::vector<Scalar> out;
  out.reserve(monos.size());
  for (auto m : monos) out.push_back(a.coefficient(m));
  return out;
}

Form from_coordinates(const BasisPtr& basis, int degree, const std::vector<Scalar>& coords) {
  const auto monos = monomial_basis(basis->size(), degree);
  if (coords.size() != monos.size()) throw Error(ErrorKind::DegreeMismatch, "coordinate count mismatch");
  Form f(basis, degree);
  for (std::size_t i = 0; i < monos.size(); ++i) f.add_term(monos[i], coords[i]);
  return f;
}

Matrix operator_matrix(const BasisPtr& basis, int from, int to,
                       const std::function<Form(const Form&)>& op) {
  const std::size_t n = basis->size();
  const auto in = monomial_basis(n, from);
  const auto out = monomial_basis(n, to);
  Matrix m(out.size(), in.size(), basis->mode());
  for (std::size_t c = 0; c < in.size(); ++c) {
    Form image = op(Form::monomial(basis, in[c]));
    if (image.is_zero()) continue;
    if (image.degree() != to) throw Error(ErrorKind::DegreeMismatch, "operator changed degree unexpectedly");
    for (std::size_t r = 0; r < out.size(); ++r) m(r, c) = image.coefficient(out[r]);
  }
  return m;
}

}  // namespace lich
