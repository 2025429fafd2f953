#include "fft.hpp"

#include <fftw3.h>

#include <mutex>

namespace subord::detail {
namespace {

// FFTW planning is not thread-safe; execution on distinct buffers is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

#ifdef SUBORD_FFT_DOUBLE

struct Buffer {
  explicit Buffer(std::size_t n) : data(fftw_alloc_complex(n)) {}
  ~Buffer() { fftw_free(data); }
  Buffer(const Buffer&) = delete;
  Buffer& operator=(const Buffer&) = delete;
  fftw_complex* data;
};

void run(std::vector<std::complex<double>>& v, FftDirection direction) {
  const auto n = v.size();
  Buffer buf(n);
  for (std::size_t i = 0; i < n; ++i) {
    buf.data[i][0] = v[i].real();
    buf.data[i][1] = v[i].imag();
  }
  fftw_plan plan;
  {
    std::lock_guard lock(planner_mutex());
    plan = fftw_plan_dft_1d(static_cast<int>(n), buf.data, buf.data,
                            direction == FftDirection::forward ? FFTW_FORWARD : FFTW_BACKWARD,
                            FFTW_ESTIMATE);
  }
  fftw_execute(plan);
  {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(plan);
  }
  for (std::size_t i = 0; i < n; ++i) v[i] = {buf.data[i][0], buf.data[i][1]};
}

#else

// Extended precision keeps roundoff of tiny spectral values (Gaussian tails)
// well below the relative tolerances the transform is checked against.
struct Buffer {
  explicit Buffer(std::size_t n) : data(fftwl_alloc_complex(n)) {}
  ~Buffer() { fftwl_free(data); }
  Buffer(const Buffer&) = delete;
  Buffer& operator=(const Buffer&) = delete;
  fftwl_complex* data;
};

void run(std::vector<std::complex<double>>& v, FftDirection direction) {
  const auto n = v.size();
  Buffer buf(n);
  for (std::size_t i = 0; i < n; ++i) {
    buf.data[i][0] = v[i].real();
    buf.data[i][1] = v[i].imag();
  }
  fftwl_plan plan;
  {
    std::lock_guard lock(planner_mutex());
    plan = fftwl_plan_dft_1d(static_cast<int>(n), buf.data, buf.data,
                             direction == FftDirection::forward ? FFTW_FORWARD : FFTW_BACKWARD,
                             FFTW_ESTIMATE);
  }
  fftwl_execute(plan);
  {
    std::lock_guard lock(planner_mutex());
    fftwl_destroy_plan(plan);
  }
  for (std::size_t i = 0; i < n; ++i) {
    v[i] = {static_cast<double>(buf.data[i][0]), static_cast<double>(buf.data[i][1])};
  }
}

#endif

}  // namespace

void dft(std::vector<std::complex<double>>& data, FftDirection direction) {
  if (data.empty()) return;
  run(data, direction);
}

}  // namespace subord::detail
