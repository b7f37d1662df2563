#pragma once

namespace ringlab {

// Knobs shared by constructions and searches. Order cap bounds every builder
// (brute-force checks are cubic or worse in the order), enum_cap bounds ideal
// enumeration, search_budget bounds backtracking nodes in homomorphism search.
struct Config {
  int order_cap = 4096;
  int enum_cap = 256;
  long long search_budget = 1'000'000;
};

}  // namespace ringlab
