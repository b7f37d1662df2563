#pragma once

#include <string>
#include <vector>

#include "ringlab/eval.hpp"

namespace ringlab {

struct SuiteFailure {
  std::string instance;
  std::string expected;
  std::string actual;
  std::string witness;
};

struct SuiteResult {
  std::string name;
  long long cases = 0;
  std::vector<SuiteFailure> failures;
};

struct ExtInstance {
  std::string name;
  DorrohRing ext;
};

const std::vector<std::string>& suite_names();

// Runs one named suite over the instances; every elementary assertion counts
// as a case, every discrepancy lands in failures with a re-checkable witness.
SuiteResult run_suite(const std::string& name,
                      const std::vector<ExtInstance>& instances,
                      const Config& cfg);

// Extensions of the built-in catalog.
std::vector<ExtInstance> catalog_instances(const Config& cfg);

// Extensions bound in a session, in binding order.
std::vector<ExtInstance> session_instances(const Session& session);

}  // namespace ringlab
