#include "ringlab/catalog.hpp"

namespace ringlab {

namespace {

const char kCatalog[] = R"ring(# Built-in verification catalog. Every extension below is exercised by the
# verify-theorems suites; orders range from 4 to 128.

ring Z2 = Z(2)
ring Z3 = Z(3)
ring Z4 = Z(4)
ring Z6 = Z(6)
ring Z8 = Z(8)
ring Z12 = Z(12)
ring T2F2 = UT(Z2, 2)
ring M2F2 = Mat(Z2, 2)

rng TrivZ2 = trivial(Z2)
rng TrivZ2xZ2 = trivial(product(Z2, Z2))

# Ideals of cyclic rings carried as R-rngs.
rrng I2of4 = ideal_of(Z4, {0, 2})
rrng I3of6 = ideal_of(Z6, {0, 3})
rrng I6of6 = ideal_of(Z6, {0, 1, 2, 3, 4, 5})
rrng I2of8 = ideal_of(Z8, {0, 2, 4, 6})
rrng I6of12 = ideal_of(Z12, {0, 6})

# Trivial-multiplication coefficient rngs under the scalar action.
rrng N2over2 = cyclic_action(Z2, TrivZ2)
rrng N2over4 = cyclic_action(Z4, TrivZ2)
rrng N22over2 = cyclic_action(Z2, TrivZ2xZ2)

# Upper-triangular matrices acting on the full matrix ring, and scalars on it.
rrng MatAct = matmul_action(T2F2, M2F2)
rrng ScalAct = cyclic_action(Z2, M2F2)

# A direct sum of two copies of Z/2 as an R-rng over Z/2.
rrng DSum = product(ideal_of(Z2, {0, 1}), ideal_of(Z2, {0, 1}))

ext E_Z2_Z2 = dorroh(ideal_of(Z2, {0, 1}))
ext E_Z4_I2 = dorroh(I2of4)
ext E_Z6_I3 = dorroh(I3of6)
ext E_Z6_Z6 = dorroh(I6of6)
ext E_Z8_I2 = dorroh(I2of8)
ext E_Z12_I6 = dorroh(I6of12)
ext E_Z2_N2 = dorroh(N2over2)
ext E_Z4_N2 = dorroh(N2over4)
ext E_Z2_N22 = dorroh(N22over2)
ext E_T2_M2 = dorroh(MatAct)
ext E_F2_M2 = dorroh(ScalAct)
ext E_Z2_DS = dorroh(DSum)

phi IdZ6 = inclusion(E_Z6_Z6)
phi InclZ4 = inclusion(E_Z4_I2)
)ring";

}  // namespace

const std::vector<std::pair<std::string, std::string>>& builtin_catalog() {
  static const std::vector<std::pair<std::string, std::string>> specs = {
      {"catalog", kCatalog},
  };
  return specs;
}

}  // namespace ringlab
