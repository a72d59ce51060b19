// Benchmark comparing the serial reference kernels with the OpenMP ones:
// the table grid fill and the brute-force SL2 residue count.

#include <chrono>
#include <iostream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "teich/coset.hpp"
#include "teich/textio.hpp"

using namespace teich;

namespace {

template <typename F>
double time_ms(F&& f) {
  auto t0 = std::chrono::steady_clock::now();
  f();
  auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::cout << "OpenMP threads: " << omp_get_max_threads() << "\n";
#else
  std::cout << "OpenMP disabled; both columns run serial code\n";
#endif

  auto d13 = order_context(13);
  auto d17 = order_context(17);

  std::cout << "\nkernel                          serial_ms   parallel_ms\n";

  {
    IndexTable a, b;
    double ts = time_ms([&] { a = emit_table_serial(d13, Spin::odd, 4); });
    double tp = time_ms([&] { b = emit_table(d13, Spin::odd, 4); });
    bool same = a.cells == b.cells;
    std::printf("table D=13 range=4            %9.1f   %9.1f   %s\n", ts, tp,
                same ? "match" : "MISMATCH");
  }
  {
    IndexTable a, b;
    double ts = time_ms([&] { a = emit_table_serial(d17, Spin::odd, 4); });
    double tp = time_ms([&] { b = emit_table(d17, Spin::odd, 4); });
    bool same = a.cells == b.cells;
    std::printf("table D=17 range=4            %9.1f   %9.1f   %s\n", ts, tp,
                same ? "match" : "MISMATCH");
  }
  for (const char* mod : {"8", "9", "3w"}) {
    ResidueRing ring(parse_quadint(mod, d13));
    Int a, b;
    double ts = time_ms([&] { a = sl2_residue_count_serial(ring); });
    double tp = time_ms([&] { b = sl2_residue_count(ring); });
    std::printf("sl2 count D=13 n=%-6s        %9.1f   %9.1f   %s (%s)\n", mod, ts, tp,
                a == b ? "match" : "MISMATCH", a.get_str().c_str());
  }
  return 0;
}
