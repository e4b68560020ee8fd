#pragma once

#include <utility>
#include <vector>

#include "asmax/gf.hpp"

namespace asmax {

// sum_i a_i x^{p^i} with p = p0^s; all coefficients in one field.
struct LinPoly {
  const FieldCtx* field = nullptr;
  int s = 1;
  std::vector<FFElem> a;

  static LinPoly zero(const FieldCtx& K, int s);
  static LinPoly monomial(const FieldCtx& K, int s, int i, const FFElem& c);
  // x^{p^n} - x
  static LinPoly frobenius_minus_identity(const FieldCtx& K, int s, int n);

  bool is_zero() const { return a.empty(); }
  int degree() const { return static_cast<int>(a.size()) - 1; }
  const FFElem& lead() const { return a.back(); }
  FFElem coeff(int i) const;
  void trim();
  bool operator==(const LinPoly& o) const;
};

struct KernelSpace {
  const FieldCtx* field = nullptr;
  std::vector<FFElem> basis;  // over F_{p0}

  int dimension() const { return static_cast<int>(basis.size()); }
};

FFElem eval(const LinPoly& L, const FFElem& x);
FpMatrix to_matrix(const LinPoly& L);

LinPoly e_r(const LinPoly& R);
FFElem f_r(const LinPoly& R, const FFElem& x, const FFElem& y);

KernelSpace kernel(const LinPoly& L);
KernelSpace intersect_subfield(const KernelSpace& W, int d);

// Degree of the smallest field F_{p0^m}, m a multiple of the coefficient
// degree, containing every root of L.
int splitting_degree(const LinPoly& L, int bound);
int coefficient_degree(const LinPoly& L);

// Monic linearized polynomial with kernel exactly W (W must be F_p-stable).
LinPoly subspace_poly(const KernelSpace& W, int s);
// An F_p-basis of an F_p-stable subspace.
std::vector<FFElem> fp_basis(const KernelSpace& W, int s);
// F_{p0}-span of F_p * {vectors}.
KernelSpace fp_span(const FieldCtx& K, int s, const std::vector<FFElem>& vectors);

LinPoly ore_compose(const LinPoly& A, const LinPoly& B);
std::pair<LinPoly, LinPoly> ore_right_divide(const LinPoly& N, const LinPoly& D);

// Embed every coefficient through a subfield embedding.
LinPoly embed(const LinPoly& L, const SubfieldEmbed& emb);

}  // namespace asmax
