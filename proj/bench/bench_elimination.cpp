// Times the production elimination kernels against the serial Scalar
// reference on the span matrices the deciders actually build, plus dense
// random instances. Exact arithmetic: both sides must agree bit for bit.

#include <omp.h>

#include <chrono>
#include <iostream>
#include <random>
#include <vector>

#include "lef/families.hpp"
#include "lef/graded.hpp"
#include "lef/linalg.hpp"
#include "lef/report.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

lef::DenseMatrix random_matrix(size_t rows, size_t cols,
                               const lef::FieldCtx& ctx, std::mt19937& rng) {
  lef::DenseMatrix m(rows, cols, ctx);
  std::uniform_int_distribution<long long> num(-30, 30);
  std::uniform_int_distribution<long long> den(1, 9);
  for (size_t r = 0; r < rows; ++r)
    for (size_t c = 0; c < cols; ++c) {
      lef::Scalar v = lef::Scalar::from_integer(num(rng), ctx);
      if (ctx.is_rational())
        v /= lef::Scalar::from_integer(den(rng), ctx);
      m.set(r, c, v);
    }
  return m;
}

struct Case {
  std::string name;
  lef::DenseMatrix matrix;
};

std::vector<Case> build_cases() {
  std::mt19937 rng(20240811);
  const lef::FieldCtx q = lef::FieldCtx::rationals();
  const lef::FieldCtx fp = lef::FieldCtx::prime_field(32003);

  std::vector<Case> cases;
  cases.push_back({"dense Q 60x60", random_matrix(60, 60, q, rng)});
  cases.push_back({"dense F_p 300x300", random_matrix(300, 300, fp, rng)});

  for (unsigned t : {6u, 8u}) {
    const lef::Scalar a = lef::Scalar::from_integer(2, q);
    const lef::IdealPresentation ideal = lef::ideal_J(t, a);
    const unsigned d = 2 * t;  // widest layer of the scan
    cases.push_back({"span J_" + std::to_string(t) + " degree " +
                         std::to_string(d),
                     lef::span_matrix(ideal, d)});
  }
  return cases;
}

}  // namespace

int main() {
  std::cout << "threads: " << omp_get_max_threads() << "\n\n";
  std::vector<std::vector<std::string>> rows;
  rows.push_back({"case", "rows x cols", "serial", "kernel", "speedup"});

  for (const Case& c : build_cases()) {
    const auto t0 = Clock::now();
    const size_t serial_rank = lef::serial::rank(c.matrix);
    const double serial_s = seconds_since(t0);

    const auto t1 = Clock::now();
    const size_t kernel_rank = lef::rank(c.matrix);
    const double kernel_s = seconds_since(t1);

    if (serial_rank != kernel_rank) {
      std::cerr << "rank mismatch on " << c.name << ": " << serial_rank
                << " vs " << kernel_rank << "\n";
      return 1;
    }
    char serial_txt[32], kernel_txt[32], speedup[32];
    std::snprintf(serial_txt, sizeof serial_txt, "%.3fs", serial_s);
    std::snprintf(kernel_txt, sizeof kernel_txt, "%.3fs", kernel_s);
    std::snprintf(speedup, sizeof speedup, "%.1fx", serial_s / kernel_s);
    rows.push_back({c.name,
                    std::to_string(c.matrix.rows()) + "x" +
                        std::to_string(c.matrix.cols()),
                    serial_txt, kernel_txt, speedup});
  }
  std::cout << lef::format_columns(rows);
  return 0;
}
