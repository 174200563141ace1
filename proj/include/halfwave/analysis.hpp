#pragma once

// Quantitative structure of the flow: the aliasing error term of the
// interpolated equation with its tail coefficients and weighted negative-order
// norm, the O(1/N) modified-equation residual, weak-formulation residuals
// against test functions, and lattice-refinement convergence studies.

#include <string>
#include <vector>

#include "halfwave/dynamics.hpp"
#include "halfwave/initial_data.hpp"
#include "halfwave/trigpoly.hpp"

namespace halfwave::analysis {

using spectral::CoeffSeq;
using spectral::TrigPoly;

// E_N = I_N(S x D_N S) - S x D_N S, computed both by direct subtraction and
// through the tail projections (zbar^N - 1) P_+ + (z^N - 1) P_- applied to
// D_N S x S; the two routes must agree.
struct ErrorTerm {
  CoeffSeq e;
  double two_path_gap = 0;
};
ErrorTerm error_term(const TrigPoly& S, int N);

// Tail coefficients Chat_{n+k} = sum_{j=k}^n mu_j Shat_j x Shat_{n+k-j},
// k = 1..n, plus the mirrored Chat_{-n-k}; the reduced form pairs j with
// n+k-j so only the mu-difference survives.
struct TailCoeffs {
  int N = 0;
  long n = 0;
  std::vector<Vec3c> plus;   // Chat_{n+k}, entry k-1
  std::vector<Vec3c> minus;  // Chat_{-n-k}, entry k-1
  double reduced_gap = 0;    // full sum vs reduced form
  double conj_gap = 0;       // Chat_{-n-k} vs conj(Chat_{n+k})
};
TailCoeffs tail_coefficients(const TrigPoly& S, int N);

// Cauchy-Schwarz bound 2 ||S||_{H^{1/2} hom} (sum_j (2j-(n+k)) |Shat_{n+k-j}|^2)^{1/2}.
double tail_envelope(const TrigPoly& S, int N, long k);

// || E_N ||_{H^{-1/2-eps}} through the explicit weight sum over the tails.
double error_weighted_norm(const TailCoeffs& tc, double eps);

struct SweepRow {
  int N = 0;
  double sup_norm = 0;
  double t_at_sup = 0;
  double initial_norm = 0;
};
struct SweepOptions {
  double T = 0.5;
  int n_records = 8;
  double eps_exponent = 0.1;
  bool project = true;
};
struct ErrorSweep {
  double eps = 0.1;
  std::vector<SweepRow> rows;
  bool bounded = false;
  bool decaying = false;  // last row below the first
};
ErrorSweep error_norm_sweep(const data::InitialData& d, const std::vector<int>& Ns,
                            const SweepOptions& opt, int threads = 1);

// R_N = [I_N(S x DS) - S x DS] - (1/N) I_N(S x D^2 S) with D = |nabla|;
// consistency_gap checks I_N(S x D_N S) = S x DS + R_N coefficientwise.
struct Residual {
  CoeffSeq r;
  double hhalf_norm = 0;
  double consistency_gap = 0;
};
Residual residual_rn(const TrigPoly& S, int N);

// Weak-form residual of the recorded trajectory against test functions:
// | <phi, dS/dt> - <D^{1/2} S, D^{1/2}(phi x S)> | at interior record times,
// with dS/dt from central differences of the interpolants.
struct WeakReport {
  std::vector<std::string> fn_names;
  std::vector<double> times;
  std::vector<std::vector<double>> gap;  // [fn][time]
  std::vector<double> sup_gap;           // per fn
};
WeakReport weak_residual(const dynamics::Trajectory& traj,
                         const std::vector<TrigPoly>& fns);
std::vector<TrigPoly> default_test_functions(int count);
std::vector<std::string> test_function_names(int count);

struct ConvRow {
  int N = 0;
  double sup_err = 0;
  double dt = 0;
};
struct ConvOptions {
  double T = 1.0;
  int n_records = 8;
  double eps = 0.0;
  bool project = true;
};
// Reference solution: a much finer lattice run with halved step, or a
// step-halved run at the same N (temporal self-convergence).
struct Reference {
  bool high_n = true;
  int N_ref = 1025;
};
struct ConvTable {
  std::vector<ConvRow> rows;
  double slope = 0;    // fitted decay order of sup_err against N
  double T_used = 0;   // comparison window, capped by the measured horizon
  double horizon = 0;  // largest recorded t with H^{5/2} growth factor <= 2
  int N_ref = 0;
  double dt_ref = 0;
};
ConvTable convergence_study(const data::InitialData& d, const std::vector<int>& Ns,
                            const Reference& ref, const ConvOptions& opt,
                            int threads = 1);

}  // namespace halfwave::analysis
