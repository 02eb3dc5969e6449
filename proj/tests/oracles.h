// Copyright 2026 The Authors.
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

#ifndef QCMATROID_TESTS_ORACLES_H_
#define QCMATROID_TESTS_ORACLES_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "qcmatroid/combinators.h"
#include "qcmatroid/families.h"
#include "qcmatroid/random.h"
#include "qcmatroid/verify.h"

// Independence tables indexed by subset bitmask, built from the definitions
// and never from Matroid::is_independent.
namespace qcmatroid::oracles {

using Table = std::vector<bool>;

// Every nonempty F ⊆ Q has |F| <= |V(F)| - 1.
Table forest_table(const std::vector<Edge>& edges);
// Every nonempty F ⊆ Q has |F| <= |V(F)|.
Table bicircular_table(const std::vector<Edge>& edges);
// Hall: every A ⊆ Q has |N(A)| >= |A|.
Table hall_table(std::size_t positions, const std::vector<Interval>& intervals);
Table partition_table(const std::vector<std::size_t>& part_of,
                      const std::vector<std::size_t>& capacities);
Table uniform_table(std::size_t n, std::size_t r);
Table truncate_table(const Table& base, std::size_t r);
// Some L ⊆ Q with |L| <= l leaves Q \ L in the base table.
Table relax_table(const Table& base, std::size_t l);
// Q = I1 ∪ I2 with I1 ⊆ S and I2 ⊆ [n] \ S, |I2| <= m.
Table union_table(std::size_t n, const ElementList& secret, std::size_t m);

// Dispatches on the concrete type, reading structure only.
Table definitional_table(const Matroid& matroid);

// Brute-force rank from a table.
std::size_t table_rank(const Table& table);

// partition, graphic, bicircular, transversal, uniform, free,
// free_uniform_union, truncate, l_relax.
const std::vector<std::string>& instance_kinds();

// A random instance of the named kind with ground size n. Combinator kinds
// wrap a random base family. `name` receives a short description.
MatroidPtr random_of_kind(const std::string& kind, std::size_t n, Rng& rng,
                          std::string* name);

// Kind chosen uniformly from instance_kinds().
MatroidPtr random_instance(std::size_t n, Rng& rng, std::string* name);

// A random loop-free instance (for partition tests).
MatroidPtr random_loopless_instance(std::size_t n, Rng& rng, std::string* name);

}  // namespace qcmatroid::oracles

#endif  // QCMATROID_TESTS_ORACLES_H_
