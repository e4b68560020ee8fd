#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "asmax/linearized.hpp"

namespace asmax {

// (v, t) with (v, t)(v', t') = (v + v', t + t' + f_R(v, v')).
struct HeisenbergElem {
  FFElem v, t;
};

HeisenbergElem heis_mul(const LinPoly& R, const HeisenbergElem& a, const HeisenbergElem& b);
// x -> (x, f_R(x, x) / 2), a homomorphism on any isotropic subspace.
HeisenbergElem heis_section(const LinPoly& R, const FFElem& x);

// omega(x, y) = f_R(x, y) - f_R(y, x), the commutator pairing on V_R.
FFElem symplectic_form(const LinPoly& R, const FFElem& x, const FFElem& y);

struct AbelianData {
  const FieldCtx* field = nullptr;  // F_q (or the ambient field for the fallback path)
  int s = 1;
  int n = 1;  // q = p^n with p = p0^s
  LinPoly R;
  std::vector<FFElem> basis;     // F_{p0}-basis of Abar
  std::vector<FFElem> fp_basis;  // F_p-basis of Abar
  LinPoly F_A;
  FFElem c_A;
  bool c_A_product_checked = false;
  LinPoly a;
  std::vector<FFElem> ker_a;  // F_{p0}-basis
  bool in_Fq = false;
  bool A_in_Fq2 = false;
  std::string path;
  std::vector<int> exponents;  // k_i on the eigenvector path
  std::optional<FFElem> alpha;  // alpha with alpha^{p-1} a primitive n-th root of unity

  // Row i: the i-th Abar-coordinate of a(x), as a functional on F_q coordinates.
  FpMatrix a_coords{3, 0, 0};
  // eta for the unit dual vectors, with lambda = 1.
  std::vector<FFElem> eta_unit;

  int dim() const { return static_cast<int>(basis.size()); }
  std::uint64_t character_count() const;
};

struct AbelianOptions {
  std::uint64_t budget = 100000;
  bool allow_eigenvector = true;
  // Ambient field containing V_R, used only when V_R meets F_q in no Lagrangian.
  const SubfieldEmbed* ambient = nullptr;
};

// Lagrangian search: eigenvector construction, then search inside V_R cap F_q,
// then Frobenius-stable search in the ambient field.
AbelianData find_abelian(const LinPoly& R, const AbelianOptions& opt = {});

// Both forms of c_A; asserts they agree when the product form is affordable.
FFElem c_a(const LinPoly& R, const LinPoly& F_A, const std::vector<FFElem>& abar_basis, bool* product_checked);

// a(x) with a o F_A = F_A o a = x^q - x.
LinPoly complement_poly(const LinPoly& F_A, int n);

// Characters of Abar are indexed by dual vectors chi over F_{p0}.
std::vector<Coeff> character_from_index(const AbelianData& d, std::uint64_t idx);
// eta with psi_{lambda,q}(eta x) = chi(a(x)) for all x in F_q.
FFElem eta_of_char(const AbelianData& d, const std::vector<Coeff>& chi, const FFElem& lambda);
// chi(a(x)) exponent: the F_{p0}-valued functional c(a(x)).
std::uint32_t xi_prime_exponent(const AbelianData& d, const std::vector<Coeff>& chi, const FFElem& x);

// A subset F_q^2: Tr_{q/p}(alpha R(alpha)) = 0 on Abar, checked by polarization.
bool a_in_fq2(const LinPoly& R, const std::vector<FFElem>& abar_basis, int s);

}  // namespace asmax
