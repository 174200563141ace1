#include "halfwave/dft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <stdexcept>

namespace halfwave {
namespace {

struct PlanPair {
  fftw_plan fwd = nullptr;
  fftw_plan bwd = nullptr;
};

std::mutex g_planner_mutex;
std::map<int, PlanPair>& plan_cache() {
  static std::map<int, PlanPair> cache;
  return cache;
}

// Plans are created once per length with FFTW_UNALIGNED so they can be
// executed on any caller buffer via the new-array interface.
const PlanPair& plans_for(int n) {
  std::lock_guard<std::mutex> lock(g_planner_mutex);
  auto& cache = plan_cache();
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  fftw_complex* scratch_in = fftw_alloc_complex(n);
  fftw_complex* scratch_out = fftw_alloc_complex(n);
  PlanPair p;
  p.fwd = fftw_plan_dft_1d(n, scratch_in, scratch_out, FFTW_FORWARD,
                           FFTW_ESTIMATE | FFTW_UNALIGNED);
  p.bwd = fftw_plan_dft_1d(n, scratch_in, scratch_out, FFTW_BACKWARD,
                           FFTW_ESTIMATE | FFTW_UNALIGNED);
  fftw_free(scratch_in);
  fftw_free(scratch_out);
  if (!p.fwd || !p.bwd) throw std::runtime_error("fftw plan creation failed");
  return cache.emplace(n, p).first->second;
}

void run(fftw_plan plan, const cvec& in, cvec& out) {
  if (&in == &out) throw std::invalid_argument("dft: in-place transform not supported");
  out.resize(in.size());
  auto* src = reinterpret_cast<fftw_complex*>(const_cast<std::complex<double>*>(in.data()));
  auto* dst = reinterpret_cast<fftw_complex*>(out.data());
  fftw_execute_dft(plan, src, dst);
}

}  // namespace

void dft_forward(const cvec& in, cvec& out) {
  if (in.empty()) throw std::invalid_argument("dft: empty input");
  run(plans_for(static_cast<int>(in.size())).fwd, in, out);
}

void dft_backward(const cvec& in, cvec& out) {
  if (in.empty()) throw std::invalid_argument("dft: empty input");
  run(plans_for(static_cast<int>(in.size())).bwd, in, out);
}

}  // namespace halfwave
