#pragma once

#include "kls/incidence.hpp"

namespace kls {

// Truncation bound used by the Bayer-Ehrenborg recursion: Paper keeps
// degrees <= floor(rho/2), Strict keeps degrees <= floor((rho-1)/2).
enum class Truncation { Paper, Strict };

// eps_st = (x-1)^{rho_st}; a kernel exactly when the poset is Eulerian.
IncidenceElement eulerian_kernel(PosetPtr p);

// -1 on the diagonal, (x-1)^{rho_st - 1} off it.
IncidenceElement epsilon_bar(PosetPtr p);

// Right KLS function of a kernel: the unique f with f_ss = 1,
// deg f_st < rho_st/2 and f^rev = k*f.  Computed bottom-up: with
// q = sum_{s<w<=t} k_sw f_wt, the low half of -q is f_st.  Throws
// NotAKernel when a diagonal is not 1 and AntisymmetryViolation when
// q^rev != -q (which catches non-kernel inputs interval by interval).
IncidenceElement kls_right(const IncidenceElement& kernel);

// Left KLS function: g_ss = 1, deg g_st < rho_st/2, g^rev = g*k, with
// q = sum_{s<=w<t} g_sw k_wt.
IncidenceElement kls_left(const IncidenceElement& kernel);

// Z = g^rev * f = g * f^rev; both routes are evaluated and compared,
// FormulaMismatch if they ever differ.
IncidenceElement z_function(const IncidenceElement& kernel);

// Toric h for the Eulerian kernel: h_st = (g_st^rev - g_st)/(x-1)
// entrywise; diagonals come out 0.
IncidenceElement toric_h(PosetPtr p);

// Chow function H = -(epsilon_bar)^{-1}.
IncidenceElement chow_function(PosetPtr p);

// Chow polynomial of [bottom,top] recomputed from multichain counts:
// H_j = sum_k (-1)^{j-k} C(r+1, j-k) zeta(k+1).  Independent oracle for
// chow_function on Eulerian posets.
IntPolynomial chow_via_zeta_oracle(const Poset& p);

struct BeToric {
  IncidenceElement g;
  IncidenceElement h;
};

// Bayer-Ehrenborg toric g/h for arbitrary graded posets:
//   h_st = sum_{s<=w<t} g_sw (x-1)^{rho_wt - 1},    h_ss = 1,
//   g_st = truncation of (1-x) h_st,                g_ss = 1.
// Matches the Eulerian toric pair on Eulerian posets (off-diagonal).
BeToric be_toric(PosetPtr p, Truncation trunc = Truncation::Paper);

// Bayer-Ehrenborg Z: convolution of g^rev with f, where f_st is the
// dual poset's g at the reversed interval.
IncidenceElement be_z(PosetPtr p, Truncation trunc = Truncation::Paper);

}  // namespace kls
