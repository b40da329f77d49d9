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

#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <random>

#include "spectrakit/characters.h"
#include "spectrakit/errors.h"
#include "spectrakit/qstate.h"

namespace spectrakit {
namespace {

bool nonzero(const BigInt &x) {
    return x != 0;
}

TEST(CharacterTable, SmallGroups) {
    CharacterTable t1(1);
    ASSERT_EQ(t1.irreps().size(), 1u);
    EXPECT_EQ(t1.value(0, 0), 1);

    CharacterTable t2(2);
    EXPECT_EQ(t2.at({2}, {1, 1}), 1);
    EXPECT_EQ(t2.at({2}, {2}), 1);
    EXPECT_EQ(t2.at({1, 1}, {1, 1}), 1);
    EXPECT_EQ(t2.at({1, 1}, {2}), -1);
}

TEST(CharacterTable, ColumnOfIdentityIsDimension) {
    for (int k = 1; k <= 10; ++k) {
        const CharacterTable &t = shared_character_table(k);
        Partition identity(std::vector<int>(k, 1));
        for (const auto &lam : t.irreps()) {
            EXPECT_EQ(BigInt(t.at(lam, identity)), dim_symmetric(lam)) << lam;
        }
    }
}

TEST(CharacterTable, RowOrthogonality) {
    for (int k = 1; k <= 8; ++k) {
        const CharacterTable &t = shared_character_table(k);
        auto classes = conjugacy_classes(k);
        for (std::size_t a = 0; a < t.irreps().size(); ++a) {
            for (std::size_t b = 0; b < t.irreps().size(); ++b) {
                BigInt sum = 0;
                for (std::size_t c = 0; c < classes.size(); ++c) {
                    sum += classes[c].size * t.value(a, c) * t.value(b, c);
                }
                EXPECT_EQ(sum, a == b ? factorial(k) : BigInt(0));
            }
        }
    }
}

TEST(CharacterTable, CapRaisesResourceError) {
    EXPECT_THROW(CharacterTable(23), ResourceError);
    CharacterCaps small{5, 5};
    EXPECT_THROW(CharacterTable(6, small), ResourceError);
    EXPECT_THROW(kronecker({4, 2}, {3, 3}, {6}, small), ResourceError);
}

TEST(Kronecker, Examples) {
    EXPECT_EQ(kronecker({8, 6}, {7, 7}, {8, 4, 2}), 0);
    EXPECT_NE(kronecker({16, 12}, {14, 14}, {16, 8, 4}), 0);
    for (int k = 1; k <= 6; ++k) {
        Partition row({k});
        for (const auto &lam : enumerate_partitions(k)) {
            EXPECT_EQ(kronecker(row, lam, lam), 1);
        }
    }
    EXPECT_THROW(kronecker({2}, {2}, {3}), DomainError);
}

TEST(Kronecker, FullSymmetry) {
    for (int k = 1; k <= 7; ++k) {
        auto ps = enumerate_partitions(k);
        for (std::size_t a = 0; a < ps.size(); ++a) {
            for (std::size_t b = a; b < ps.size(); ++b) {
                for (std::size_t c = b; c < ps.size(); ++c) {
                    const Partition &x = ps[a], &y = ps[b], &z = ps[c];
                    BigInt g = kronecker(x, y, z);
                    EXPECT_EQ(kronecker(x, z, y), g);
                    EXPECT_EQ(kronecker(y, x, z), g);
                    EXPECT_EQ(kronecker(y, z, x), g);
                    EXPECT_EQ(kronecker(z, x, y), g);
                    EXPECT_EQ(kronecker(z, y, x), g);
                }
            }
        }
    }
}

TEST(Kronecker, TensorDimensionIdentity) {
    for (int k = 1; k <= 7; ++k) {
        auto ps = enumerate_partitions(k);
        for (const auto &mu : ps) {
            for (const auto &nu : ps) {
                BigInt sum = 0;
                for (const auto &lam : ps) {
                    sum += kronecker(mu, nu, lam) * dim_symmetric(lam);
                }
                EXPECT_EQ(sum, dim_symmetric(mu) * dim_symmetric(nu)) << mu << " " << nu;
            }
        }
    }
}

TEST(Kronecker, DvirBound) {
    for (int k = 1; k <= 7; ++k) {
        auto ps = enumerate_partitions(k);
        for (const auto &lam : ps) {
            for (const auto &mu : ps) {
                int overlap = 0;
                for (int i = 0; i < std::max(lam.depth(), mu.depth()); ++i) {
                    overlap += std::min(lam[i], mu[i]);
                }
                for (const auto &nu : ps) {
                    if (nu[0] > overlap) {
                        EXPECT_EQ(kronecker(mu, nu, lam), 0) << mu << " " << nu << " " << lam;
                    }
                }
            }
        }
    }
}

double frame_entropy(const Partition &p) {
    return shannon_entropy(p.normalized(p.depth()));
}

TEST(Kronecker, EntropyInequality) {
    for (int k = 1; k <= 7; ++k) {
        auto ps = enumerate_partitions(k);
        for (const auto &mu : ps) {
            for (const auto &nu : ps) {
                for (const auto &lam : ps) {
                    if (kronecker(mu, nu, lam) == 0) {
                        continue;
                    }
                    // g is fully symmetric, so every placement of the three
                    // frames is itself a nonzero triple.
                    std::array<const Partition *, 3> t{&mu, &nu, &lam};
                    for (int r = 0; r < 3; ++r) {
                        const Partition &a = *t[r];
                        const Partition &b = *t[(r + 1) % 3];
                        const Partition &c = *t[(r + 2) % 3];
                        EXPECT_LE(frame_entropy(c), frame_entropy(a) + frame_entropy(b) + 1e-12);
                    }
                }
            }
        }
    }
}

struct Triple {
    Partition a, b, c;
};

std::vector<Triple> nonzero_kronecker_triples(int max_k) {
    std::vector<Triple> out;
    for (int k = 1; k <= max_k; ++k) {
        auto ps = enumerate_partitions(k);
        for (const auto &a : ps) {
            for (const auto &b : ps) {
                for (const auto &c : ps) {
                    if (nonzero(kronecker(a, b, c))) {
                        out.push_back({a, b, c});
                    }
                }
            }
        }
    }
    return out;
}

TEST(Kronecker, SemigroupUnderRowAddition) {
    auto triples = nonzero_kronecker_triples(5);
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<std::size_t> pick(0, triples.size() - 1);
    for (int s = 0; s < 200; ++s) {
        const Triple &x = triples[pick(rng)];
        const Triple &y = triples[pick(rng)];
        EXPECT_TRUE(nonzero(kronecker(x.a + y.a, x.b + y.b, x.c + y.c)))
            << x.a << x.b << x.c << " + " << y.a << y.b << y.c;
    }
}

TEST(LittlewoodRichardson, Examples) {
    EXPECT_EQ(littlewood_richardson({1}, {1}, {2}), 1);
    EXPECT_EQ(littlewood_richardson({1}, {1}, {1, 1}), 1);
    EXPECT_EQ(littlewood_richardson({2, 1}, {2, 1}, {3, 2, 1}), 2);
    EXPECT_EQ(littlewood_richardson({3, 1}, {2, 2}, {5, 3}), 1);
    EXPECT_THROW(littlewood_richardson({1}, {1}, {3}), DomainError);
    for (int k1 = 0; k1 <= 5; ++k1) {
        for (int k2 = 0; k2 <= 5; ++k2) {
            for (const auto &mu : enumerate_partitions(k1)) {
                for (const auto &nu : enumerate_partitions(k2)) {
                    EXPECT_EQ(littlewood_richardson(mu, nu, mu + nu), 1);
                }
            }
        }
    }
}

// c^lambda_{mu nu} = <chi_lambda restricted to S_k1 x S_k2, chi_mu x chi_nu>.
BigInt lr_by_characters(const Partition &mu, const Partition &nu, const Partition &lam) {
    BigRational sum = 0;
    for (const auto &r1 : enumerate_partitions(mu.size())) {
        for (const auto &r2 : enumerate_partitions(nu.size())) {
            std::vector<int> joined = r1.rows();
            joined.insert(joined.end(), r2.rows().begin(), r2.rows().end());
            std::sort(joined.rbegin(), joined.rend());
            BigInt num = BigInt(character(lam, Partition(joined))) * character(mu, r1) *
                         character(nu, r2);
            sum += BigRational(num, centralizer_order(r1) * centralizer_order(r2));
        }
    }
    return require_integer(sum, "lr_by_characters");
}

TEST(LittlewoodRichardson, AgreesWithCharacterRestriction) {
    for (int k = 0; k <= 6; ++k) {
        for (const auto &lam : enumerate_partitions(k)) {
            for (int k1 = 0; k1 <= k; ++k1) {
                for (const auto &mu : enumerate_partitions(k1)) {
                    for (const auto &nu : enumerate_partitions(k - k1)) {
                        BigInt c = littlewood_richardson(mu, nu, lam);
                        EXPECT_EQ(c, lr_by_characters(mu, nu, lam)) << mu << nu << lam;
                        EXPECT_EQ(c, littlewood_richardson(nu, mu, lam));
                    }
                }
            }
        }
    }
}

TEST(LittlewoodRichardson, RestrictionDimensionIdentity) {
    for (int k = 1; k <= 7; ++k) {
        for (const auto &lam : enumerate_partitions(k)) {
            for (int k1 = 0; k1 <= k; ++k1) {
                BigInt sum = 0;
                for (const auto &mu : enumerate_partitions(k1)) {
                    for (const auto &nu : enumerate_partitions(k - k1)) {
                        sum += littlewood_richardson(mu, nu, lam) * dim_symmetric(mu) *
                               dim_symmetric(nu);
                    }
                }
                EXPECT_EQ(sum, dim_symmetric(lam)) << lam << " k1=" << k1;
            }
        }
    }
}

TEST(LittlewoodRichardson, SemigroupUnderRowAddition) {
    std::vector<Triple> triples;
    for (int k = 1; k <= 5; ++k) {
        for (int k1 = 0; k1 <= k; ++k1) {
            for (const auto &mu : enumerate_partitions(k1)) {
                for (const auto &nu : enumerate_partitions(k - k1)) {
                    for (const auto &lam : enumerate_partitions(k)) {
                        if (nonzero(littlewood_richardson(mu, nu, lam))) {
                            triples.push_back({mu, nu, lam});
                        }
                    }
                }
            }
        }
    }
    std::mt19937_64 rng(12);
    std::uniform_int_distribution<std::size_t> pick(0, triples.size() - 1);
    for (int s = 0; s < 200; ++s) {
        const Triple &x = triples[pick(rng)];
        const Triple &y = triples[pick(rng)];
        EXPECT_TRUE(nonzero(littlewood_richardson(x.a + y.a, x.b + y.b, x.c + y.c)));
    }
}

TEST(ClebschGordan, Examples) {
    EXPECT_EQ(clebsch_gordan_su2(4, 2), (std::vector<int>{2, 4, 6}));
    EXPECT_EQ(clebsch_gordan_su2(0, 5), (std::vector<int>{5}));
    EXPECT_EQ(clebsch_gordan_su2(1, 1), (std::vector<int>{0, 2}));
    EXPECT_THROW(clebsch_gordan_su2(-1, 1), DomainError);
}

TEST(ClebschGordan, AgreesWithTwoRowLittlewoodRichardson) {
    // Spin j is the U(2) frame (2j); two-row frames (l1, l2) carry spin (l1 - l2)/2.
    for (int a = 0; a <= 6; ++a) {
        for (int b = 0; b <= 6; ++b) {
            std::vector<int> expected;
            for (const auto &lam : enumerate_partitions(a + b, 2)) {
                BigInt c = littlewood_richardson(Partition({a}), Partition({b}), lam);
                for (BigInt i = 0; i < c; ++i) {
                    expected.push_back(lam[0] - lam[1]);
                }
            }
            std::sort(expected.begin(), expected.end());
            EXPECT_EQ(clebsch_gordan_su2(a, b), expected);
        }
    }
}

TEST(ClassicalH, Examples) {
    auto h = classical_h({3, 3}, {4, 2});
    ASSERT_EQ(h.size(), 2u);
    EXPECT_EQ(h.at(Partition({3, 2, 1})), 2);
    EXPECT_EQ(h.at(Partition({2, 2, 1, 1})), 1);
    BigInt lhs = multinomial({3, 3}) * multinomial({4, 2});
    EXPECT_EQ(lhs, 2 * multinomial({3, 2, 1}) + multinomial({2, 2, 1, 1}));

    auto single = classical_h({5}, {5});
    ASSERT_EQ(single.size(), 1u);
    EXPECT_EQ(single.at(Partition({5})), 1);

    auto square = classical_h({2, 2}, {2, 2});
    ASSERT_EQ(square.size(), 2u);
    EXPECT_EQ(square.at(Partition({2, 2})), 2);
    EXPECT_EQ(square.at(Partition({1, 1, 1, 1})), 1);
    EXPECT_THROW(classical_h({2}, {3}), DomainError);
}

TEST(ClassicalH, MultinomialIdentity) {
    for (int k = 1; k <= 8; ++k) {
        auto ps = enumerate_partitions(k);
        for (const auto &mu : ps) {
            for (const auto &nu : ps) {
                BigInt sum = 0;
                for (const auto &[lam, h] : classical_h(mu, nu)) {
                    sum += h * multinomial(lam);
                }
                EXPECT_EQ(sum, multinomial(mu) * multinomial(nu)) << mu << " " << nu;
            }
        }
    }
}

// Random nonnegative integer matrix with rows and columns ordered by
// decreasing sums, so its margins are partitions aligned with the matrix.
std::vector<std::vector<int>> random_frequency_matrix(std::mt19937_64 &rng, int rows, int cols) {
    std::uniform_int_distribution<int> entry(0, 2);
    std::vector<std::vector<int>> m(rows, std::vector<int>(cols));
    for (auto &row : m) {
        for (auto &x : row) {
            x = entry(rng);
        }
    }
    std::sort(m.begin(), m.end(), [](const auto &a, const auto &b) {
        return std::accumulate(a.begin(), a.end(), 0) > std::accumulate(b.begin(), b.end(), 0);
    });
    std::vector<int> order(cols);
    std::iota(order.begin(), order.end(), 0);
    auto col_sum = [&](int j) {
        int s = 0;
        for (const auto &row : m) {
            s += row[j];
        }
        return s;
    };
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return col_sum(a) > col_sum(b); });
    std::vector<std::vector<int>> out(rows, std::vector<int>(cols));
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) {
            out[i][j] = m[i][order[j]];
        }
    }
    return out;
}

struct Margins {
    Partition mu, nu, lambda;
};

Margins margins(const std::vector<std::vector<int>> &m) {
    std::vector<int> r, c(m[0].size(), 0), e;
    for (const auto &row : m) {
        r.push_back(std::accumulate(row.begin(), row.end(), 0));
        for (std::size_t j = 0; j < row.size(); ++j) {
            c[j] += row[j];
            e.push_back(row[j]);
        }
    }
    std::sort(e.rbegin(), e.rend());
    return {Partition(r), Partition(c), Partition(e)};
}

TEST(ClassicalH, FrequencyMatrixIsWitness) {
    std::mt19937_64 rng(14);
    for (int s = 0; s < 200; ++s) {
        auto m = random_frequency_matrix(rng, 2 + s % 2, 2 + (s / 2) % 2);
        Margins t = margins(m);
        if (t.mu.size() == 0) {
            continue;
        }
        auto h = classical_h(t.mu, t.nu);
        EXPECT_TRUE(h.count(t.lambda)) << t.mu << t.nu << t.lambda;
    }
}

// Adding aligned frequency matrices gives a witness for the row-wise sum of
// the margins; the entry frame is that of the summed matrix.
TEST(ClassicalH, SemigroupOfFrequencyMatrices) {
    std::mt19937_64 rng(15);
    int aligned = 0;
    for (int s = 0; s < 200; ++s) {
        int rows = 2 + s % 2, cols = 2 + (s / 2) % 2;
        auto a = random_frequency_matrix(rng, rows, cols);
        auto b = random_frequency_matrix(rng, rows, cols);
        Margins ta = margins(a), tb = margins(b);
        if (ta.mu.size() == 0 || tb.mu.size() == 0) {
            continue;
        }
        auto sum = a;
        for (int i = 0; i < rows; ++i) {
            for (int j = 0; j < cols; ++j) {
                sum[i][j] += b[i][j];
            }
        }
        Margins ts = margins(sum);
        EXPECT_EQ(ts.mu, ta.mu + tb.mu);
        EXPECT_EQ(ts.nu, ta.nu + tb.nu);
        auto h = classical_h(ts.mu, ts.nu);
        EXPECT_TRUE(h.count(ts.lambda));
        if (ts.lambda == ta.lambda + tb.lambda) {
            ++aligned;
            EXPECT_TRUE(h.count(ta.lambda + tb.lambda));
        }
    }
    EXPECT_GT(aligned, 0);
    for (int k = 1; k <= 5; ++k) {
        for (const auto &mu : enumerate_partitions(k)) {
            for (const auto &nu : enumerate_partitions(k)) {
                for (const auto &[lam, h] : classical_h(mu, nu)) {
                    auto doubled = classical_h(mu.scaled(2), nu.scaled(2));
                    EXPECT_TRUE(doubled.count(lam.scaled(2)));
                }
            }
        }
    }
}

// Row-wise addition of the sorted entry frames alone is not closed.
TEST(ClassicalH, RowWiseSumOfEntryFramesCanVanish) {
    EXPECT_EQ(classical_h({2}, {1, 1}).at(Partition({1, 1})), 1);
    EXPECT_EQ(classical_h({1, 1}, {2}).at(Partition({1, 1})), 1);
    EXPECT_EQ(classical_h({3, 1}, {3, 1}).count(Partition({2, 2})), 0u);
}

}  // namespace
}  // namespace spectrakit
