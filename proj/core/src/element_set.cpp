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

#include <latkit/element_set.hpp>

namespace latkit {

bool set_order_less(ElementSet a, ElementSet b) {
  if (a.size() != b.size()) {
    return a.size() < b.size();
  }
  const std::uint64_t diff = a.bits() ^ b.bits();
  if (diff == 0) {
    return false;
  }
  // Equal cardinality: the set holding the smallest differing id comes first.
  return (a.bits() & (diff & (~diff + 1))) != 0;
}

} // namespace latkit
