#include "lich/exterior.hpp"

#include <bit>
#include <set>

#include "lich/error.hpp"

namespace lich {

BasisPtr Basis::create(std::vector<std::string> names, ScalarMode mode) {
  if (names.empty() || names.size() > kMaxGenerators)
    throw Error(ErrorKind::InvalidInput, "basis must have between 1 and 16 generators");
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (!seen.insert(n).second)
      throw Error(ErrorKind::InvalidInput, "duplicate generator '" + n + "'");
    if (mode.symbol_index(n))
      throw Error(ErrorKind::InvalidInput, "generator '" + n + "' clashes with a parameter");
  }
  return BasisPtr(new Basis(std::move(names), std::move(mode)));
}

std::optional<std::size_t> Basis::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

void require_same_basis(const BasisPtr& a, const BasisPtr& b) {
  if (a == b) return;
  if (!a || !b || !(*a == *b)) throw Error(ErrorKind::BasisMismatch, "operands live over different bases");
}

int mask_degree(IndexMask m) { return std::popcount(m); }

std::vector<std::size_t> mask_indices(IndexMask m) {
  std::vector<std::size_t> out;
  while (m) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(m)));
    m &= m - 1;
  }
  return out;
}

int merge_sign(IndexMask a, IndexMask b) {
  if (a & b) return 0;
  int inversions = 0;
  for (IndexMask rest = b; rest; rest &= rest - 1) {
    const int j = std::countr_zero(rest);
    inversions += std::popcount(a >> (j + 1));
  }
  return (inversions & 1) ? -1 : 1;
}

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

bool TupleLess::operator()(IndexMask a, IndexMask b) const {
  const int da = std::popcount(a), db = std::popcount(b);
  if (da != db) return da < db;
  if (a == b) return false;
  const IndexMask lowest = (a ^ b) & ~((a ^ b) - 1);
  return (a & lowest) != 0;
}

std::vector<IndexMask> monomial_basis(std::size_t n, int degree) {
  std::vector<IndexMask> out;
  if (degree < 0 || static_cast<std::size_t>(degree) > n) return out;
  for (IndexMask m = 0; m < (IndexMask{1} << n); ++m)
    if (std::popcount(m) == degree) out.push_back(m);
  std::sort(out.begin(), out.end(), TupleLess{});
  return out;
}

Form::Form(BasisPtr basis, int degree) : basis_(std::move(basis)), degree_(degree) {
  if (!basis_) throw Error(ErrorKind::InvalidInput, "form without a basis");
  if (degree < 0 || static_cast<std::size_t>(degree) > basis_->size())
    throw Error(ErrorKind::DegreeMismatch, "degree " + std::to_string(degree) + " out of range");
}

Form Form::constant(BasisPtr basis, const Scalar& value) {
  Form f(std::move(basis), 0);
  f.add_term(0, value);
  return f;
}

Form Form::generator(BasisPtr basis, std::size_t index) {
  if (index >= basis->size()) throw Error(ErrorKind::InvalidInput, "generator index out of range");
  return monomial(std::move(basis), IndexMask{1} << index);
}

Form Form::monomial(BasisPtr basis, IndexMask mask) {
  Scalar one = basis->mode().one();
  return monomial(std::move(basis), mask, one);
}

Form Form::monomial(BasisPtr basis, IndexMask mask, const Scalar& coeff) {
  Form f(std::move(basis), mask_degree(mask));
  f.add_term(mask, coeff);
  return f;
}

Form Form::volume(BasisPtr basis) {
  const IndexMask m = basis->volume_mask();
  return monomial(std::move(basis), m);
}

Scalar Form::coefficient(IndexMask mask) const {
  auto it = terms_.find(mask);
  return it == terms_.end() ? mode().zero() : it->second;
}

void Form::add_term(IndexMask mask, const Scalar& coeff) {
  if (mask_degree(mask) != degree_ || (mask >> basis_->size()) != 0)
    throw Error(ErrorKind::DegreeMismatch, "term does not match form degree");
  if (coeff.is_zero()) return;
  if (!(coeff.mode() == mode()))
    throw Error(ErrorKind::MixedModes, "coefficient mode differs from basis mode");
  auto [it, inserted] = terms_.try_emplace(mask, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Form Form::operator-() const {
  Form r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Form form_arith(const Form& a, const Form& b, FormOp op) {
  require_same_basis(a.basis(), b.basis());
  if (b.is_zero()) return a;
  if (a.is_zero()) return op == FormOp::Add ? b : -b;
  if (a.degree() != b.degree())
    throw Error(ErrorKind::DegreeMismatch, "cannot add forms of degree " +
                                               std::to_string(a.degree()) + " and " +
                                               std::to_string(b.degree()));
  Form r = a;
  for (const auto& [m, c] : b.terms()) r.add_term(m, op == FormOp::Add ? c : -c);
  return r;
}

Form operator+(const Form& a, const Form& b) { return form_arith(a, b, FormOp::Add); }
Form operator-(const Form& a, const Form& b) { return form_arith(a, b, FormOp::Sub); }

Form scale(const Scalar& c, const Form& a) {
  Form r(a.basis(), a.degree());
  if (c.is_zero()) return r;
  for (const auto& [m, v] : a.terms()) r.add_term(m, c * v);
  return r;
}

Form operator*(const Scalar& c, const Form& a) { return scale(c, a); }

bool operator==(const Form& a, const Form& b) {
  if (!(*a.basis_ == *b.basis_)) return false;
  if (a.is_zero() && b.is_zero()) return true;
  return a.degree_ == b.degree_ && a.terms_ == b.terms_;
}

std::string Form::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  const bool rational = mode().is_rational();
  bool first = true;
  for (const auto& [m, c] : terms_) {
    std::string coeff;
    if (rational) {
      const Rational& r = c.rational();
      if (first) coeff = r.to_string();
      else coeff = (r.sign() < 0 ? " - " : " + ") + r.abs().to_string();
    } else {
      coeff = (first ? "(" : " + (") + c.to_string() + ")";
    }
    out += coeff;
    first = false;
    if (m == 0) continue;
    out += ' ';
    bool first_gen = true;
    for (std::size_t i : mask_indices(m)) {
      if (!first_gen) out += '^';
      first_gen = false;
      out += basis_->name(i);
    }
  }
  return out;
}

Form wedge(const Form& a, const Form& b) {
  require_same_basis(a.basis(), b.basis());
  const int deg = a.degree() + b.degree();
  if (static_cast<std::size_t>(deg) > a.basis()->size()) return Form(a.basis(), 0);
  Form r(a.basis(), deg);
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      const int s = merge_sign(ma, mb);
      if (s == 0) continue;
      Scalar prod = ca * cb;
      r.add_term(ma | mb, s > 0 ? prod : -prod);
    }
  }
  return r;
}

Form interior(const VectorField& v, const Form& a) {
  require_same_basis(v.basis(), a.basis());
  if (a.degree() == 0) return Form(a.basis(), 0);
  Form r(a.basis(), a.degree() - 1);
  for (const auto& [m, c] : a.terms()) {
    for (std::size_t i : mask_indices(m)) {
      if (v[i].is_zero()) continue;
      const IndexMask below = m & ((IndexMask{1} << i) - 1);
      Scalar term = v[i] * c;
      r.add_term(m & ~(IndexMask{1} << i), (std::popcount(below) & 1) ? -term : term);
    }
  }
  return r;
}

Scalar pairing(const Form& one_form, const VectorField& v) {
  if (one_form.degree() != 1 && !one_form.is_zero())
    throw Error(ErrorKind::DegreeMismatch, "pairing needs a 1-form");
  return interior(v, one_form).coefficient(0);
}

Scalar evaluate(const Form& form, const std::vector<VectorField>& fields) {
  if (static_cast<int>(fields.size()) != form.degree() && !form.is_zero())
    throw Error(ErrorKind::DegreeMismatch, "wrong number of vector fields");
  Form cur = form;
  for (const auto& v : fields) cur = interior(v, cur);
  return cur.coefficient(0);
}

VectorField::VectorField(BasisPtr basis)
    : basis_(std::move(basis)), coeffs_(basis_->size(), basis_->mode().zero()) {}

VectorField::VectorField(BasisPtr basis, std::vector<Scalar> coeffs)
    : basis_(std::move(basis)), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != basis_->size())
    throw Error(ErrorKind::BasisMismatch, "vector field length differs from basis size");
  for (const auto& c : coeffs_)
    if (!(c.mode() == basis_->mode())) throw Error(ErrorKind::MixedModes, "vector field mode");
}

VectorField VectorField::frame(BasisPtr basis, std::size_t index) {
  VectorField v(std::move(basis));
  v.coeffs_.at(index) = v.basis_->mode().one();
  return v;
}

bool VectorField::is_zero() const {
  for (const auto& c : coeffs_)
    if (!c.is_zero()) return false;
  return true;
}

VectorField VectorField::operator-() const {
  VectorField r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

VectorField operator+(const VectorField& a, const VectorField& b) {
  require_same_basis(a.basis_, b.basis_);
  VectorField r = a;
  for (std::size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] += b.coeffs_[i];
  return r;
}

VectorField operator-(const VectorField& a, const VectorField& b) { return a + (-b); }

VectorField operator*(const Scalar& c, const VectorField& v) {
  VectorField r = v;
  for (auto& x : r.coeffs_) x = c * x;
  return r;
}

bool operator==(const VectorField& a, const VectorField& b) {
  return *a.basis_ == *b.basis_ && a.coeffs_ == b.coeffs_;
}

std::string VectorField::to_string(const std::vector<std::string>& frame_names) const {
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    const std::string name =
        i < frame_names.size() ? frame_names[i] : "X" + std::to_string(i + 1);
    std::string coeff;
    if (basis_->mode().is_rational()) {
      const Rational& r = coeffs_[i].rational();
      if (out.empty()) coeff = r.to_string();
      else coeff = (r.sign() < 0 ? " - " : " + ") + r.abs().to_string();
    } else {
      coeff = (out.empty() ? "(" : " + (") + coeffs_[i].to_string() + ")";
    }
    out += coeff + " " + name;
  }
  return out.empty() ? "0" : out;
}

}  // namespace lich
