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

#include "spectrakit/characters.h"

#include <algorithm>
#include <functional>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>

#include "spectrakit/errors.h"

namespace spectrakit {

namespace {

/// Murnaghan-Nakayama with border strips located on beta-numbers. The memo is
/// keyed by (remaining shape, remaining cycle type); cycles are stripped
/// largest first so classes sharing a tail share work.
class MurnaghanNakayama {
   public:
    std::int64_t value(const std::vector<int> &shape, const std::vector<int> &cycles,
                       std::size_t from) {
        if (from == cycles.size()) {
            return shape.empty() ? 1 : 0;
        }
        std::string key = encode(shape, cycles, from);
        auto it = memo_.find(key);
        if (it != memo_.end()) {
            return it->second;
        }
        int strip = cycles[from];
        int r = static_cast<int>(shape.size());
        std::vector<int> beta(r);
        for (int i = 0; i < r; ++i) {
            beta[i] = shape[i] + (r - 1 - i);
        }
        std::int64_t total = 0;
        for (int i = 0; i < r; ++i) {
            int target = beta[i] - strip;
            if (target < 0) {
                continue;
            }
            bool occupied = false;
            int between = 0;
            for (int j = 0; j < r; ++j) {
                if (beta[j] == target) {
                    occupied = true;
                    break;
                }
                if (beta[j] > target && beta[j] < beta[i]) {
                    ++between;
                }
            }
            if (occupied) {
                continue;
            }
            std::vector<int> moved = beta;
            moved[i] = target;
            std::sort(moved.rbegin(), moved.rend());
            std::vector<int> next(r);
            for (int j = 0; j < r; ++j) {
                next[j] = moved[j] - (r - 1 - j);
            }
            while (!next.empty() && next.back() == 0) {
                next.pop_back();
            }
            std::int64_t sub = value(next, cycles, from + 1);
            total = checked_add(total, (between % 2) ? -sub : sub);
        }
        memo_.emplace(std::move(key), total);
        return total;
    }

   private:
    static std::string encode(const std::vector<int> &shape, const std::vector<int> &cycles,
                              std::size_t from) {
        std::string key;
        key.reserve(shape.size() + cycles.size() - from + 1);
        for (int v : shape) {
            key.push_back(static_cast<char>(v));
        }
        key.push_back('\xff');
        for (std::size_t i = from; i < cycles.size(); ++i) {
            key.push_back(static_cast<char>(cycles[i]));
        }
        return key;
    }

    std::unordered_map<std::string, std::int64_t> memo_;
};

void check_size(int k, int cap, const char *what) {
    if (k > cap) {
        throw ResourceError(std::string(what) + ": k = " + std::to_string(k) +
                            " exceeds cap " + std::to_string(cap));
    }
}

}  // namespace

BigInt centralizer_order(const Partition &cycle_type) {
    BigInt z = 1;
    const auto &rows = cycle_type.rows();
    std::size_t i = 0;
    while (i < rows.size()) {
        std::size_t j = i;
        while (j < rows.size() && rows[j] == rows[i]) {
            ++j;
        }
        int mult = static_cast<int>(j - i);
        BigInt power = 1;
        for (int t = 0; t < mult; ++t) {
            power *= rows[i];
        }
        z *= power * factorial(mult);
        i = j;
    }
    return z;
}

std::vector<ConjugacyClass> conjugacy_classes(int k) {
    std::vector<ConjugacyClass> out;
    BigInt kf = factorial(k);
    for (Partition &p : enumerate_partitions(k)) {
        BigInt size = kf / centralizer_order(p);
        out.push_back(ConjugacyClass{std::move(p), std::move(size)});
    }
    return out;
}

std::int64_t character(const Partition &lambda, const Partition &cycle_type) {
    if (lambda.size() != cycle_type.size()) {
        throw DomainError("character: shape " + lambda.str() + " and class " + cycle_type.str() +
                          " have different sizes");
    }
    MurnaghanNakayama mn;
    return mn.value(lambda.rows(), cycle_type.rows(), 0);
}

std::vector<std::int64_t> character_row(const Partition &lambda) {
    MurnaghanNakayama mn;
    std::vector<std::int64_t> out;
    for (const Partition &cls : enumerate_partitions(lambda.size())) {
        out.push_back(mn.value(lambda.rows(), cls.rows(), 0));
    }
    return out;
}

CharacterTable::CharacterTable(int k, const CharacterCaps &caps) : k_(k) {
    if (k < 1) {
        throw DomainError("character table requires k >= 1");
    }
    check_size(k, caps.table_max_k, "character table");
    irreps_ = enumerate_partitions(k);
    classes_ = conjugacy_classes(k);
    values_.resize(irreps_.size() * classes_.size());
    MurnaghanNakayama mn;
    for (std::size_t i = 0; i < irreps_.size(); ++i) {
        for (std::size_t c = 0; c < classes_.size(); ++c) {
            values_[i * classes_.size() + c] =
                mn.value(irreps_[i].rows(), classes_[c].cycle_type.rows(), 0);
        }
    }
}

std::size_t CharacterTable::index_of(const Partition &p) const {
    // Both lists are sorted in descending lexicographic order.
    auto it = std::lower_bound(irreps_.begin(), irreps_.end(), p, std::greater<>());
    if (it == irreps_.end() || *it != p) {
        throw DomainError("partition " + p.str() + " is not a partition of " + std::to_string(k_));
    }
    return static_cast<std::size_t>(it - irreps_.begin());
}

std::int64_t CharacterTable::at(const Partition &lambda, const Partition &cycle_type) const {
    return value(index_of(lambda), index_of(cycle_type));
}

const CharacterTable &shared_character_table(int k, const CharacterCaps &caps) {
    static std::mutex mutex;
    static std::map<int, std::unique_ptr<CharacterTable>> tables;
    check_size(k, caps.table_max_k, "character table");
    std::lock_guard<std::mutex> lock(mutex);
    auto &slot = tables[k];
    if (!slot) {
        slot = std::make_unique<CharacterTable>(k, caps);
    }
    return *slot;
}

BigInt kronecker(const Partition &mu, const Partition &nu, const Partition &lambda,
                 const CharacterCaps &caps) {
    int k = lambda.size();
    if (mu.size() != k || nu.size() != k) {
        throw DomainError("kronecker: sizes differ: " + mu.str() + ", " + nu.str() + ", " +
                          lambda.str());
    }
    if (k == 0) {
        return 1;
    }
    check_size(k, caps.coefficient_max_k, "kronecker");
    std::vector<ConjugacyClass> classes = conjugacy_classes(k);
    std::vector<std::int64_t> cm, cn, cl;
    if (k <= caps.table_max_k) {
        const CharacterTable &table = shared_character_table(k, caps);
        auto copy = [&](const Partition &p) {
            auto r = table.row(table.index_of(p));
            return std::vector<std::int64_t>(r.begin(), r.end());
        };
        cm = copy(mu);
        cn = copy(nu);
        cl = copy(lambda);
    } else {
        cm = character_row(mu);
        cn = character_row(nu);
        cl = character_row(lambda);
    }
    BigInt sum = 0;
    for (std::size_t c = 0; c < classes.size(); ++c) {
        BigInt term = classes[c].size;
        term *= cm[c];
        term *= cn[c];
        term *= cl[c];
        sum += term;
    }
    BigInt kf = factorial(k);
    if (sum % kf != 0) {
        throw DomainError("kronecker: character sum not divisible by k!; character bug");
    }
    return sum / kf;
}

BigInt littlewood_richardson(const Partition &mu, const Partition &nu, const Partition &lambda) {
    if (mu.size() + nu.size() != lambda.size()) {
        throw DomainError("littlewood_richardson requires |mu| + |nu| = |lambda|");
    }
    if (!lambda.contains(mu) || !lambda.contains(nu)) {
        return 0;
    }
    int rows = lambda.depth();
    // filling[i][j] for cells of lambda/mu; 0 marks a cell of mu.
    std::vector<std::vector<int>> filling(rows);
    for (int i = 0; i < rows; ++i) {
        filling[i].assign(lambda[i], 0);
    }
    std::vector<int> used(nu.depth() + 2, 0);
    BigInt count = 0;
    // Cells in reverse reading order: rows top to bottom, right to left.
    std::vector<std::pair<int, int>> cells;
    for (int i = 0; i < rows; ++i) {
        for (int j = lambda[i] - 1; j >= mu[i]; --j) {
            cells.emplace_back(i, j);
        }
    }
    std::function<void(std::size_t)> place = [&](std::size_t idx) {
        if (idx == cells.size()) {
            ++count;
            return;
        }
        auto [i, j] = cells[idx];
        int hi = nu.depth();
        if (j + 1 < lambda[i]) {
            hi = std::min(hi, filling[i][j + 1]);
        }
        int lo = 1;
        if (i > 0 && j >= mu[i - 1]) {
            lo = filling[i - 1][j] + 1;
        }
        for (int v = lo; v <= hi; ++v) {
            if (used[v] >= nu[v - 1]) {
                continue;
            }
            if (v > 1 && used[v - 1] <= used[v]) {
                continue;
            }
            filling[i][j] = v;
            ++used[v];
            place(idx + 1);
            --used[v];
        }
        filling[i][j] = 0;
    };
    place(0);
    return count;
}

std::vector<int> clebsch_gordan_su2(int two_j1, int two_j2) {
    if (two_j1 < 0 || two_j2 < 0) {
        throw DomainError("spins must be nonnegative");
    }
    std::vector<int> out;
    for (int j = std::abs(two_j1 - two_j2); j <= two_j1 + two_j2; j += 2) {
        out.push_back(j);
    }
    return out;
}

std::map<Partition, BigInt> classical_h(const Partition &mu, const Partition &nu) {
    if (mu.size() != nu.size()) {
        throw DomainError("classical_h requires |mu| = |nu|");
    }
    int m = mu.depth(), n = nu.depth();
    std::vector<int> row_left = mu.rows(), col_left = nu.rows();
    std::vector<int> entries(static_cast<std::size_t>(m) * n, 0);
    std::map<Partition, BigInt> out;
    if (m == 0) {
        out[Partition()] = 1;
        return out;
    }
    std::function<void(int)> fill = [&](int cell) {
        int i = cell / n, j = cell % n;
        if (cell == m * n) {
            std::vector<int> sorted;
            for (int e : entries) {
                if (e > 0) {
                    sorted.push_back(e);
                }
            }
            std::sort(sorted.rbegin(), sorted.rend());
            out[Partition(std::move(sorted))] += 1;
            return;
        }
        // The last cell of a row or column is forced by its sum.
        int lo = 0, hi = std::min(row_left[i], col_left[j]);
        if (j == n - 1) {
            lo = row_left[i];
        }
        if (i == m - 1) {
            lo = std::max(lo, col_left[j]);
        }
        for (int v = lo; v <= hi; ++v) {
            if ((j == n - 1 && v != row_left[i]) || (i == m - 1 && v != col_left[j])) {
                continue;
            }
            entries[cell] = v;
            row_left[i] -= v;
            col_left[j] -= v;
            fill(cell + 1);
            row_left[i] += v;
            col_left[j] += v;
        }
        entries[cell] = 0;
    };
    fill(0);
    return out;
}

}  // namespace spectrakit
