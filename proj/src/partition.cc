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

#include "spectrakit/partition.h"

#include <algorithm>
#include <charconv>
#include <functional>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>

#include "spectrakit/errors.h"

namespace spectrakit {

Partition::Partition(std::vector<int> rows) : rows_(std::move(rows)) {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i] < 0) {
            throw DomainError("partition rows must be nonnegative");
        }
        if (i > 0 && rows_[i] > rows_[i - 1]) {
            throw DomainError("partition rows must be weakly decreasing");
        }
    }
    while (!rows_.empty() && rows_.back() == 0) {
        rows_.pop_back();
    }
    size_ = std::accumulate(rows_.begin(), rows_.end(), 0);
}

Partition::Partition(std::initializer_list<int> rows) : Partition(std::vector<int>(rows)) {
}

Partition Partition::parse(std::string_view text) {
    std::vector<int> rows;
    std::size_t pos = 0;
    while (pos < text.size()) {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == ',' || text[pos] == '[' ||
                                     text[pos] == ']' || text[pos] == '(' || text[pos] == ')')) {
            ++pos;
        }
        if (pos >= text.size()) {
            break;
        }
        int value = 0;
        auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
        if (ec != std::errc()) {
            throw DomainError("cannot parse partition from '" + std::string(text) + "'");
        }
        rows.push_back(value);
        pos = static_cast<std::size_t>(ptr - text.data());
    }
    return Partition(std::move(rows));
}

std::vector<int> Partition::padded(int n) const {
    if (depth() > n) {
        throw DomainError("partition " + str() + " has more than " + std::to_string(n) + " rows");
    }
    std::vector<int> out = rows_;
    out.resize(n, 0);
    return out;
}

bool Partition::contains(const Partition &inner) const {
    if (inner.depth() > depth()) {
        return false;
    }
    for (int i = 0; i < inner.depth(); ++i) {
        if (inner.rows_[i] > rows_[i]) {
            return false;
        }
    }
    return true;
}

Partition Partition::conjugate() const {
    std::vector<int> cols;
    if (!rows_.empty()) {
        cols.resize(rows_[0], 0);
        for (int r : rows_) {
            for (int j = 0; j < r; ++j) {
                ++cols[j];
            }
        }
    }
    return Partition(std::move(cols));
}

Partition Partition::operator+(const Partition &other) const {
    std::vector<int> out(std::max(depth(), other.depth()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = (*this)[i] + other[i];
    }
    return Partition(std::move(out));
}

Partition Partition::scaled(int factor) const {
    std::vector<int> out = rows_;
    for (int &r : out) {
        r *= factor;
    }
    return Partition(std::move(out));
}

std::vector<double> Partition::normalized(int length) const {
    std::vector<double> out(length, 0.0);
    if (size_ == 0) {
        return out;
    }
    for (int i = 0; i < std::min(length, depth()); ++i) {
        out[i] = static_cast<double>(rows_[i]) / size_;
    }
    return out;
}

std::string Partition::str() const {
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (i) {
            out << ',';
        }
        out << rows_[i];
    }
    out << ')';
    return out.str();
}

std::ostream &operator<<(std::ostream &out, const Partition &p) {
    return out << p.str();
}

namespace {

bool rows_match_shape(const Tableau &t) {
    if (static_cast<int>(t.rows.size()) != t.shape.depth()) {
        return false;
    }
    for (int i = 0; i < t.shape.depth(); ++i) {
        if (static_cast<int>(t.rows[i].size()) != t.shape[i]) {
            return false;
        }
    }
    return true;
}

}  // namespace

bool Tableau::is_standard() const {
    if (!rows_match_shape(*this)) {
        return false;
    }
    std::vector<int> seen(shape.size() + 1, 0);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < rows[i].size(); ++j) {
            int v = rows[i][j];
            if (v < 1 || v > shape.size() || seen[v]++) {
                return false;
            }
            if (j > 0 && rows[i][j - 1] >= v) {
                return false;
            }
            if (i > 0 && rows[i - 1][j] >= v) {
                return false;
            }
        }
    }
    return true;
}

bool Tableau::is_semistandard(int alphabet) const {
    if (!rows_match_shape(*this)) {
        return false;
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < rows[i].size(); ++j) {
            int v = rows[i][j];
            if (v < 1 || v > alphabet) {
                return false;
            }
            if (j > 0 && rows[i][j - 1] > v) {
                return false;
            }
            if (i > 0 && rows[i - 1][j] >= v) {
                return false;
            }
        }
    }
    return true;
}

int hook_length(const Partition &shape, int row, int col) {
    if (row < 1 || col < 1 || row > shape.depth() || col > shape[row - 1]) {
        throw DomainError("box (" + std::to_string(row) + "," + std::to_string(col) +
                          ") is not in frame " + shape.str());
    }
    --row;
    --col;
    int arm = shape[row] - col - 1;
    int leg = 0;
    for (int i = row + 1; i < shape.depth() && shape[i] > col; ++i) {
        ++leg;
    }
    return arm + leg + 1;
}

BigInt dim_symmetric(const Partition &shape) {
    BigInt hooks = 1;
    for (int i = 0; i < shape.depth(); ++i) {
        for (int j = 0; j < shape[i]; ++j) {
            hooks *= hook_length(shape, i + 1, j + 1);
        }
    }
    BigInt k = factorial(shape.size());
    if (k % hooks != 0) {
        throw DomainError("hook product does not divide k! for " + shape.str());
    }
    return k / hooks;
}

BigInt dim_unitary(const Partition &shape, int d) {
    if (d < 1) {
        throw DomainError("unitary dimension requires d >= 1");
    }
    if (shape.depth() > d) {
        return 0;
    }
    std::vector<int> l = shape.padded(d);
    BigRational t = 1;
    for (int i = 0; i < d; ++i) {
        for (int j = i + 1; j < d; ++j) {
            t *= BigRational(l[i] - l[j] + j - i, j - i);
        }
    }
    return require_integer(t, "Weyl dimension formula");
}

BigInt multinomial(const Partition &shape) {
    BigInt r = factorial(shape.size());
    for (int row : shape.rows()) {
        r /= factorial(row);
    }
    return r;
}

std::vector<Partition> enumerate_partitions(int k, int max_depth) {
    if (k < 0 || max_depth < 1) {
        throw DomainError("enumerate_partitions requires k >= 0 and max_depth >= 1");
    }
    std::vector<Partition> out;
    std::vector<int> current;
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.emplace_back(current);
            return;
        }
        if (static_cast<int>(current.size()) == max_depth) {
            return;
        }
        for (int part = std::min(remaining, max_part); part >= 1; --part) {
            current.push_back(part);
            rec(remaining - part, part);
            current.pop_back();
        }
    };
    rec(k, k);
    return out;
}

std::vector<Partition> enumerate_partitions(int k) {
    return enumerate_partitions(k, std::max(k, 1));
}

std::vector<Tableau> enumerate_standard_tableaux(const Partition &shape,
                                                 const EnumerationCaps &caps) {
    if (shape.size() > caps.standard_max_size) {
        throw ResourceError("standard tableau enumeration capped at size " +
                            std::to_string(caps.standard_max_size));
    }
    // The box holding k is a removable corner; recurse on the smaller frame.
    std::function<std::vector<Tableau>(const Partition &)> rec =
        [&](const Partition &p) -> std::vector<Tableau> {
        if (p.size() == 0) {
            return {Tableau{p, {}}};
        }
        std::vector<Tableau> out;
        for (int i = 0; i < p.depth(); ++i) {
            if (p[i] > p[i + 1]) {
                std::vector<int> rows = p.rows();
                --rows[i];
                for (Tableau t : rec(Partition(rows))) {
                    t.shape = p;
                    t.rows.resize(p.depth());
                    t.rows[i].push_back(p.size());
                    out.push_back(std::move(t));
                }
            }
        }
        return out;
    };
    return rec(shape);
}

std::vector<Tableau> enumerate_semistandard_tableaux(const Partition &shape, int d,
                                                     const EnumerationCaps &caps) {
    if (d < 1) {
        throw DomainError("alphabet size must be positive");
    }
    if (static_cast<long>(shape.size()) * d > caps.semistandard_max_size_times_d) {
        throw ResourceError("semistandard enumeration capped at size*d = " +
                            std::to_string(caps.semistandard_max_size_times_d));
    }
    // Cells holding the largest letter form a horizontal strip; peel it off.
    std::function<std::vector<Tableau>(const Partition &, int)> rec =
        [&](const Partition &p, int letters) -> std::vector<Tableau> {
        if (p.depth() > letters) {
            return {};
        }
        if (letters == 0) {
            return {Tableau{p, {}}};
        }
        std::vector<Tableau> out;
        std::vector<int> inner(p.depth(), 0);
        std::function<void(int)> choose = [&](int i) {
            if (i == p.depth()) {
                Partition mu(inner);
                for (Tableau t : rec(mu, letters - 1)) {
                    t.shape = p;
                    t.rows.resize(p.depth());
                    for (int r = 0; r < p.depth(); ++r) {
                        t.rows[r].resize(p[r], letters);
                    }
                    out.push_back(std::move(t));
                }
                return;
            }
            for (int v = p[i]; v >= p[i + 1]; --v) {
                inner[i] = v;
                choose(i + 1);
            }
        };
        choose(0);
        return out;
    };
    return rec(shape, d);
}

BigInt count_gelfand_tsetlin_patterns(const Partition &shape, int d) {
    if (shape.depth() > d) {
        return 0;
    }
    std::map<std::vector<int>, BigInt> memo;
    std::function<BigInt(const std::vector<int> &)> rec = [&](const std::vector<int> &top) -> BigInt {
        if (top.size() <= 1) {
            return 1;
        }
        auto it = memo.find(top);
        if (it != memo.end()) {
            return it->second;
        }
        BigInt total = 0;
        std::vector<int> next(top.size() - 1);
        std::function<void(std::size_t)> fill = [&](std::size_t i) {
            if (i == next.size()) {
                total += rec(next);
                return;
            }
            for (int v = top[i + 1]; v <= top[i]; ++v) {
                next[i] = v;
                fill(i + 1);
            }
        };
        fill(0);
        memo.emplace(top, total);
        return total;
    };
    return rec(shape.padded(d));
}

bool majorizes(std::span<const double> dominant, std::span<const double> dominated,
               double tolerance) {
    std::size_t n = std::max(dominant.size(), dominated.size());
    std::vector<double> a(dominant.begin(), dominant.end());
    std::vector<double> b(dominated.begin(), dominated.end());
    a.resize(n, 0.0);
    b.resize(n, 0.0);
    std::sort(a.rbegin(), a.rend());
    std::sort(b.rbegin(), b.rend());
    double sa = 0, sb = 0;
    bool ok = true;
    for (std::size_t i = 0; i < n; ++i) {
        sa += a[i];
        sb += b[i];
        if (sa < sb - tolerance) {
            ok = false;
        }
    }
    if (std::abs(sa - sb) > tolerance * std::max(1.0, std::abs(sa))) {
        throw DomainError("majorization requires equal totals");
    }
    return ok;
}

bool majorizes(const Partition &dominant, const Partition &dominated) {
    if (dominant.size() != dominated.size()) {
        throw DomainError("majorization requires equal totals");
    }
    int sa = 0, sb = 0;
    for (int i = 0; i < std::max(dominant.depth(), dominated.depth()); ++i) {
        sa += dominant[i];
        sb += dominated[i];
        if (sa < sb) {
            return false;
        }
    }
    return true;
}

FrameTriple contragredient_triple(const Partition &mu, const Partition &nu,
                                  const Partition &lambda, int m, int n) {
    if (m < 1 || n < 1) {
        throw DomainError("contragredient_triple requires m, n >= 1");
    }
    if (mu.size() != nu.size() || mu.size() != lambda.size()) {
        throw DomainError("contragredient_triple requires |mu| = |nu| = |lambda|");
    }
    std::vector<int> pm = mu.padded(m);
    std::vector<int> pn = nu.padded(n);
    std::vector<int> pl = lambda.padded(m * n);
    int l1 = lambda[0];
    auto complement = [](const std::vector<int> &rows, int width) {
        std::vector<int> out(rows.size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            out[i] = width - rows[rows.size() - 1 - i];
            if (out[i] < 0) {
                throw DomainError("contragredient row would be negative");
            }
        }
        return Partition(std::move(out));
    };
    return FrameTriple{complement(pm, n * l1), complement(pn, m * l1), complement(pl, l1)};
}

}  // namespace spectrakit
