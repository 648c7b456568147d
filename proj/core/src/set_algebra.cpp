// Copyright 2026 The latkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <latkit/set_algebra.hpp>

namespace latkit {

ElementSet set_join(const BoundedLattice &L, ElementSet A, ElementSet B) {
  ElementSet out;
  for (ElementId x : A) {
    for (ElementId y : B) {
      out.insert(L.join(x, y));
    }
  }
  return out;
}

ElementSet set_meet(const BoundedLattice &L, ElementSet A, ElementSet B) {
  ElementSet out;
  for (ElementId x : A) {
    for (ElementId y : B) {
      out.insert(L.meet(x, y));
    }
  }
  return out;
}

bool set_le(const BoundedLattice &L, ElementSet A, ElementSet B) {
  for (ElementId x : A) {
    if (!B.subset_of(L.up_set(x))) {
      return false;
    }
  }
  return true;
}

bool set_le1(const BoundedLattice &L, ElementSet A, ElementSet B) {
  for (ElementId x : A) {
    if (!L.up_set(x).intersects(B)) {
      return false;
    }
  }
  return true;
}

bool set_le2(const BoundedLattice &L, ElementSet A, ElementSet B) {
  for (ElementId y : B) {
    if (!L.down_set(y).intersects(A)) {
      return false;
    }
  }
  return true;
}

} // namespace latkit
