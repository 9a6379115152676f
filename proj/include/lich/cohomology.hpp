#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "lich/hodge.hpp"

namespace lich {

// dim ker d_omega|_l - dim im d_omega|_{l-1} on the invariant complex.
std::size_t betti(const Algebra& alg, const Form& omega, int degree);

struct DegreeSummary {
  int degree;
  std::size_t betti;           // rank formula
  std::size_t dim_harmonic;    // harmonic kernel
  std::size_t dim_exact;       // im d_omega from degree - 1
  std::size_t dim_coexact;     // im delta_omega from degree + 1
  HarmonicSpace harmonic;
};

// Twisted cohomology of the invariant complex in every degree.
struct CohomologyReport {
  Form omega;
  bool unimodular;
  std::vector<DegreeSummary> degrees;

  std::vector<std::size_t> dims() const;
  // Rank formula and harmonic dimension agree in every degree.
  bool consistent() const;
};

CohomologyReport cohomology(const Algebra& alg, const Form& omega);

// Coordinates of the orthogonal projection onto the harmonic space, in the
// basis returned by harmonic_space. On non-unimodular algebras the space is
// ker d_omega intersected with the orthogonal complement of im d_omega,
// which still represents every class.
struct ClassCoordinates {
  HarmonicSpace space;
  std::vector<Scalar> coords;

  bool is_zero() const;
  Form projection() const;
};

// Throws NotClosed unless d_omega(theta) = 0.
ClassCoordinates class_coords(const Algebra& alg, const Form& omega, const Form& theta);

struct ExactWithPrimitive {
  Form primitive;
};
struct NotExact {
  ClassCoordinates coords;
};
using ExactnessCertificate = std::variant<ExactWithPrimitive, NotExact>;

inline bool is_exact(const ExactnessCertificate& c) {
  return std::holds_alternative<ExactWithPrimitive>(c);
}

// Solves d_omega(x) = theta over Lambda^{l-1}; free monomials of the
// elimination are set to zero so the primitive is deterministic.
ExactnessCertificate primitive(const Algebra& alg, const Form& omega, const Form& theta);

}  // namespace lich
