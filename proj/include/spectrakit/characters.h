// Copyright 2026 The spectrakit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "spectrakit/bigint.h"
#include "spectrakit/partition.h"

namespace spectrakit {

struct CharacterCaps {
    /// Largest k for which a complete character table is built.
    int table_max_k = 22;
    /// Largest k for coefficient evaluations that only need a few
    /// character rows.
    int coefficient_max_k = 32;
};

struct ConjugacyClass {
    Partition cycle_type;
    BigInt size;
};

/// z = prod_i i^{m_i} m_i!, the centralizer order of a permutation with the
/// given cycle type.
BigInt centralizer_order(const Partition &cycle_type);

/// Classes of S_k, in the same order as enumerate_partitions(k).
std::vector<ConjugacyClass> conjugacy_classes(int k);

/// chi_lambda at a permutation of the given cycle type (Murnaghan-Nakayama).
std::int64_t character(const Partition &lambda, const Partition &cycle_type);

/// chi_lambda on every class of S_|lambda|, in conjugacy_classes() order.
std::vector<std::int64_t> character_row(const Partition &lambda);

class CharacterTable {
   public:
    explicit CharacterTable(int k, const CharacterCaps &caps = {});

    int k() const {
        return k_;
    }
    const std::vector<Partition> &irreps() const {
        return irreps_;
    }
    const std::vector<ConjugacyClass> &classes() const {
        return classes_;
    }
    std::span<const std::int64_t> row(std::size_t irrep) const {
        return {values_.data() + irrep * classes_.size(), classes_.size()};
    }
    std::int64_t value(std::size_t irrep, std::size_t cls) const {
        return values_[irrep * classes_.size() + cls];
    }
    std::int64_t at(const Partition &lambda, const Partition &cycle_type) const;
    std::size_t index_of(const Partition &p) const;

   private:
    int k_;
    std::vector<Partition> irreps_;
    std::vector<ConjugacyClass> classes_;
    std::vector<std::int64_t> values_;
};

/// Process-wide immutable table for S_k, built on first use.
const CharacterTable &shared_character_table(int k, const CharacterCaps &caps = {});

/// g_{mu nu lambda} = (1/k!) sum_pi chi_mu(pi) chi_nu(pi) chi_lambda(pi).
BigInt kronecker(const Partition &mu, const Partition &nu, const Partition &lambda,
                 const CharacterCaps &caps = {});

/// c^lambda_{mu nu} by the lattice-word tableau rule.
BigInt littlewood_richardson(const Partition &mu, const Partition &nu, const Partition &lambda);

/// 2j values in D(j1) (x) D(j2), ascending, from doubled spins.
std::vector<int> clebsch_gordan_su2(int two_j1, int two_j2);

/// h^lambda_{mu nu}: for every nonnegative integer matrix with row sums mu and
/// column sums nu, the sorted entries form lambda; counts per lambda.
std::map<Partition, BigInt> classical_h(const Partition &mu, const Partition &nu);

}  // namespace spectrakit
