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

#include <compare>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "spectrakit/bigint.h"

namespace spectrakit {

/// A Young frame: weakly decreasing nonnegative row lengths. Trailing zeros
/// are stripped on construction, so equality and ordering act on the
/// canonical form.
class Partition {
   public:
    Partition() = default;
    explicit Partition(std::vector<int> rows);
    Partition(std::initializer_list<int> rows);

    /// Parses "8,4,2" (whitespace tolerant). An empty string is the empty
    /// partition.
    static Partition parse(std::string_view text);

    const std::vector<int> &rows() const {
        return rows_;
    }
    int size() const {
        return size_;
    }
    int depth() const {
        return static_cast<int>(rows_.size());
    }
    bool empty() const {
        return rows_.empty();
    }
    /// Row length, zero beyond the depth.
    int operator[](std::size_t i) const {
        return i < rows_.size() ? rows_[i] : 0;
    }

    /// Rows padded with zeros to exactly `n` entries; DomainError if depth > n.
    std::vector<int> padded(int n) const;
    /// True if the diagram of `inner` fits inside this one.
    bool contains(const Partition &inner) const;
    Partition conjugate() const;
    /// Row-wise sum.
    Partition operator+(const Partition &other) const;
    Partition scaled(int factor) const;
    /// lambda-bar: rows divided by size, padded to `length` entries.
    std::vector<double> normalized(int length) const;

    std::string str() const;

    bool operator==(const Partition &other) const = default;
    /// Lexicographic on rows, so (3) > (2,1) > (1,1,1).
    std::strong_ordering operator<=>(const Partition &other) const {
        return rows_ <=> other.rows_;
    }

   private:
    std::vector<int> rows_;
    int size_ = 0;
};

std::ostream &operator<<(std::ostream &out, const Partition &p);

/// A filling of a frame; rows[i][j] is the entry in row i, column j.
struct Tableau {
    Partition shape;
    std::vector<std::vector<int>> rows;

    bool is_standard() const;
    bool is_semistandard(int alphabet) const;
    bool operator==(const Tableau &other) const = default;
};

struct EnumerationCaps {
    int standard_max_size = 10;
    int semistandard_max_size_times_d = 30;
};

/// Hook length of the box in row `row`, column `col`, both counted from 1.
int hook_length(const Partition &shape, int row, int col);

/// f^lambda, the dimension of the irreducible S_k module, by hook lengths.
BigInt dim_symmetric(const Partition &shape);

/// t_lambda(d), the dimension of the irreducible U(d) module, by Weyl's
/// product formula. Zero when depth > d.
BigInt dim_unitary(const Partition &shape, int d);

/// k! / (lambda_1! lambda_2! ...).
BigInt multinomial(const Partition &shape);

/// All partitions of k with at most max_depth rows, largest first.
std::vector<Partition> enumerate_partitions(int k, int max_depth);
std::vector<Partition> enumerate_partitions(int k);

std::vector<Tableau> enumerate_standard_tableaux(const Partition &shape,
                                                 const EnumerationCaps &caps = {});
std::vector<Tableau> enumerate_semistandard_tableaux(const Partition &shape, int d,
                                                     const EnumerationCaps &caps = {});

/// Number of Gelfand-Tsetlin patterns with top row `shape` padded to d.
BigInt count_gelfand_tsetlin_patterns(const Partition &shape, int d);

/// Partial-sum dominance of two vectors with equal totals. Inputs are
/// sorted descending internally and padded with zeros to equal length.
bool majorizes(std::span<const double> dominant, std::span<const double> dominated,
               double tolerance = 1e-12);
bool majorizes(const Partition &dominant, const Partition &dominated);

struct FrameTriple {
    Partition mu;
    Partition nu;
    Partition lambda;
    bool operator==(const FrameTriple &other) const = default;
};

/// Complement-and-rotate transform of a Kronecker triple for C^m (x) C^n:
/// mu''_i = n*l1 - mu_{m-i+1}, nu''_i = m*l1 - nu_{n-i+1},
/// lambda''_i = l1 - lambda_{mn-i+1}, with l1 = lambda_1.
FrameTriple contragredient_triple(const Partition &mu, const Partition &nu,
                                  const Partition &lambda, int m, int n);

}  // namespace spectrakit
