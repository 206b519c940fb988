#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <descent/verify.hpp>

#include <set>

using namespace descent;

TEST_CASE("every identity suite passes on a reduced sweep") {
  VerifyOptions opts;
  opts.dims = {2, 3, 4};
  opts.seed = 321;
  opts.trials = 25;
  const auto results = run_identity_suites(opts);
  CHECK(results.size() >= 20);
  std::set<std::string> ids;
  for (const auto& r : results) {
    INFO(r.id, ": ", r.detail);
    CHECK(r.passed);
    CHECK(ids.insert(r.id).second);  // ids are unique
  }
  // spot check that the catalogue covers the core identities
  for (const char* id : {"hodge-duality", "wave-laplace", "cartan", "projector-resolution",
                         "hodge-offdiagonal", "decompose-roundtrip-double"}) {
    CHECK(ids.count(id) == 1);
  }
}

TEST_CASE("results depend only on the seed") {
  VerifyOptions opts;
  opts.dims = {2, 3};
  opts.seed = 9;
  opts.trials = 10;
  const auto a = run_identity_suites(opts);
  const auto b = run_identity_suites(opts);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].id == b[i].id);
    CHECK(a[i].passed == b[i].passed);
  }
}
