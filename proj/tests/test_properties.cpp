#include <doctest.h>

#include "support/properties.hpp"

using namespace qseries::testing;

namespace {

void require_all(const std::vector<PropertyOutcome>& outcomes) {
  for (const auto& o : outcomes) {
    INFO(o.name);
    INFO(o.failure.value_or(""));
    CHECK(o.cases > 0);
    CHECK_FALSE(o.failure.has_value());
  }
}

}  // namespace

TEST_SUITE("properties") {
  TEST_CASE("series properties") { require_all(series_properties()); }
  TEST_CASE("dissection properties") { require_all(dissection_properties()); }
  TEST_CASE("congruence properties") { require_all(congruence_properties()); }
  TEST_CASE("a second seed") {
    require_all(series_properties(7));
    require_all(dissection_properties(7));
  }
}
