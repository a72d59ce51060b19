#include <doctest.h>

#include "teich/coset.hpp"
#include "teich/textio.hpp"

using namespace teich;

// The OpenMP kernels must agree cell-for-cell with the serial references.

TEST_CASE("parallel and serial table fills agree") {
  auto d13 = order_context(13);
  IndexTable a = emit_table_serial(d13, Spin::odd, 3);
  IndexTable b = emit_table(d13, Spin::odd, 3);
  CHECK(a.cells == b.cells);
  auto d17 = order_context(17);
  IndexTable c = emit_table_serial(d17, Spin::odd, 3);
  IndexTable d = emit_table(d17, Spin::odd, 3);
  CHECK(c.cells == d.cells);
}

TEST_CASE("parallel and serial SL2 counts agree") {
  auto d13 = order_context(13);
  for (const char* mod : {"2", "w", "4", "1+3*w", "2*w"}) {
    ResidueRing ring(parse_quadint(mod, d13));
    CHECK(sl2_residue_count_serial(ring) == sl2_residue_count(ring));
  }
}
