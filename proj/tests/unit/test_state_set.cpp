#include <doctest.h>

#include "odet/state_set.hpp"

using namespace odet;

TEST_CASE("state set: canonical form and ops") {
  StateSet s{3, 1, 3, 2};
  CHECK(s.size() == 3);
  CHECK(s.to_string() == "{1,2,3}");
  CHECK(s.contains(2));
  CHECK_FALSE(s.contains(0));

  s.insert(0);
  s.insert(2);
  CHECK(s.to_string() == "{0,1,2,3}");
  s.erase(1);
  CHECK(s.to_string() == "{0,2,3}");

  StateSet t{2, 5};
  CHECK(set_union(s, t).to_string() == "{0,2,3,5}");
  CHECK(set_intersection(s, t).to_string() == "{2}");
  CHECK(set_difference(s, t).to_string() == "{0,3}");
  CHECK(t.intersects(s));
  CHECK_FALSE(StateSet{5}.subset_of(s));
  CHECK(StateSet{0, 3}.subset_of(s));
  CHECK(StateSet{}.subset_of(s));
  CHECK(StateSet::full(3) == StateSet{0, 1, 2});
}
