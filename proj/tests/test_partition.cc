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

#include <numeric>

#include "spectrakit/characters.h"
#include "spectrakit/errors.h"
#include "spectrakit/partition.h"

namespace spectrakit {
namespace {

BigInt big(long v) {
    return BigInt(v);
}

TEST(Partition, ParseAndCanonicalize) {
    EXPECT_EQ(Partition::parse("8,4,2").rows(), (std::vector<int>{8, 4, 2}));
    EXPECT_EQ(Partition::parse("3,2,0,0").rows(), (std::vector<int>{3, 2}));
    EXPECT_EQ(Partition::parse("8,4,2").size(), 14);
    EXPECT_THROW(Partition::parse("2,3"), DomainError);
    EXPECT_THROW(Partition::parse("2,-1"), DomainError);
    EXPECT_THROW(Partition::parse("a"), DomainError);
}

TEST(Partition, Conjugate) {
    EXPECT_EQ(Partition({4, 3, 1}).conjugate(), Partition({3, 2, 2, 1}));
    EXPECT_EQ(Partition({3, 2, 2, 1}).conjugate(), Partition({4, 3, 1}));
}

TEST(HookLength, Examples) {
    EXPECT_EQ(hook_length({4, 3, 1}, 1, 2), 4);
    EXPECT_EQ(hook_length({1}, 1, 1), 1);
    EXPECT_EQ(hook_length({2, 1}, 1, 1), 3);
    EXPECT_THROW(hook_length({2, 1}, 2, 2), DomainError);
    EXPECT_THROW(hook_length({2, 1}, 0, 1), DomainError);
    EXPECT_THROW(hook_length({2, 1}, 3, 1), DomainError);
}

TEST(DimSymmetric, Examples) {
    EXPECT_EQ(dim_symmetric({3, 2}), big(5));
    EXPECT_EQ(dim_symmetric({7}), big(1));
    EXPECT_EQ(dim_symmetric({2, 1}), big(2));
}

TEST(DimUnitary, Examples) {
    EXPECT_EQ(dim_unitary({3, 2}, 2), big(2));
    EXPECT_EQ(dim_unitary({1, 1, 1}, 2), big(0));
    EXPECT_EQ(dim_unitary({2}, 2), big(3));
}

TEST(EnumeratePartitions, Examples) {
    auto three = enumerate_partitions(3, 2);
    ASSERT_EQ(three.size(), 2u);
    EXPECT_EQ(three[0], Partition({3}));
    EXPECT_EQ(three[1], Partition({2, 1}));
    auto empty = enumerate_partitions(0, 3);
    ASSERT_EQ(empty.size(), 1u);
    EXPECT_EQ(empty[0].size(), 0);
    EXPECT_EQ(enumerate_partitions(4, 4).size(), 5u);
    EXPECT_EQ(enumerate_partitions(8).size(), 22u);
}

TEST(Tableaux, Examples) {
    EXPECT_EQ(enumerate_standard_tableaux({3, 2}).size(), 5u);
    EXPECT_EQ(enumerate_standard_tableaux({1, 1}).size(), 1u);
    EXPECT_EQ(enumerate_standard_tableaux({2, 2}).size(), 2u);
    EXPECT_EQ(enumerate_semistandard_tableaux({3, 2}, 2).size(), 2u);
    EXPECT_EQ(enumerate_semistandard_tableaux({1}, 5).size(), 5u);
    EXPECT_EQ(enumerate_semistandard_tableaux({2, 1}, 3).size(), 8u);
    for (const auto &t : enumerate_standard_tableaux({3, 2})) {
        EXPECT_TRUE(t.is_standard());
    }
    for (const auto &t : enumerate_semistandard_tableaux({3, 2}, 3)) {
        EXPECT_TRUE(t.is_semistandard(3));
    }
}

TEST(Tableaux, CapsRaiseResourceError) {
    EXPECT_THROW(enumerate_standard_tableaux({6, 5}), ResourceError);
    EXPECT_THROW(enumerate_semistandard_tableaux({6, 5}, 3), ResourceError);
}

TEST(Tableaux, StandardCountMatchesHookFormula) {
    for (int k = 0; k <= 8; ++k) {
        for (const auto &p : enumerate_partitions(k)) {
            EXPECT_EQ(big(static_cast<long>(enumerate_standard_tableaux(p).size())),
                      dim_symmetric(p))
                << p;
        }
    }
}

TEST(Tableaux, SemistandardCountMatchesWeylAndPatterns) {
    for (int k = 0; k <= 6; ++k) {
        for (int d = 1; d <= 4; ++d) {
            for (const auto &p : enumerate_partitions(k)) {
                BigInt t = dim_unitary(p, d);
                EXPECT_EQ(big(static_cast<long>(enumerate_semistandard_tableaux(p, d).size())), t)
                    << p << " d=" << d;
                EXPECT_EQ(count_gelfand_tsetlin_patterns(p, d), t) << p << " d=" << d;
            }
        }
    }
}

TEST(Dimensions, Completeness) {
    for (int k = 0; k <= 8; ++k) {
        for (int d = 1; d <= 3; ++d) {
            BigInt sum = 0;
            for (const auto &p : enumerate_partitions(k, d)) {
                sum += dim_unitary(p, d) * dim_symmetric(p);
            }
            BigInt power = 1;
            for (int i = 0; i < k; ++i) {
                power *= d;
            }
            EXPECT_EQ(sum, power) << "k=" << k << " d=" << d;
        }
    }
}

TEST(Dimensions, Bounds) {
    for (int k = 1; k <= 10; ++k) {
        for (int d = 1; d <= 4; ++d) {
            BigInt cap = 1;
            for (int i = 0; i < d * (d - 1) / 2; ++i) {
                cap *= (k + 1);
            }
            for (const auto &p : enumerate_partitions(k, d)) {
                EXPECT_LE(dim_symmetric(p), multinomial(p)) << p;
                EXPECT_LE(dim_unitary(p, d), cap) << p << " d=" << d;
            }
        }
    }
}

TEST(Majorization, Examples) {
    std::vector<double> a{2, 0}, b{1, 1};
    EXPECT_TRUE(majorizes(a, b));
    EXPECT_FALSE(majorizes(b, a));
    std::vector<double> c{3, 2, 1}, e{2, 2, 2};
    EXPECT_TRUE(majorizes(c, e));
    std::vector<double> f{3, 2};
    EXPECT_THROW(majorizes(c, f), DomainError);
}

TEST(Majorization, ReflexiveAndTransitive) {
    for (int k = 1; k <= 7; ++k) {
        auto ps = enumerate_partitions(k);
        for (const auto &x : ps) {
            EXPECT_TRUE(majorizes(x, x));
            for (const auto &y : ps) {
                for (const auto &z : ps) {
                    if (majorizes(x, y) && majorizes(y, z)) {
                        EXPECT_TRUE(majorizes(x, z)) << x << " " << y << " " << z;
                    }
                }
            }
        }
    }
}

TEST(Contragredient, Examples) {
    FrameTriple t = contragredient_triple({7, 7}, {7, 7}, {8, 4, 2}, 2, 2);
    EXPECT_EQ(t.mu, Partition({9, 9}));
    EXPECT_EQ(t.nu, Partition({9, 9}));
    EXPECT_EQ(t.lambda, Partition({8, 6, 4}));
    t = contragredient_triple({8, 6}, {7, 7}, {8, 4, 2}, 2, 2);
    EXPECT_EQ(t.mu, Partition({10, 8}));
    EXPECT_EQ(t.nu, Partition({9, 9}));
    EXPECT_EQ(t.lambda, Partition({8, 6, 4}));
    t = contragredient_triple({5}, {5}, {5}, 1, 1);
    EXPECT_EQ(t.mu.size(), 0);
    EXPECT_EQ(t.nu.size(), 0);
    EXPECT_EQ(t.lambda.size(), 0);
    EXPECT_THROW(contragredient_triple({3, 2, 1}, {6}, {6}, 2, 2), DomainError);
}

TEST(Contragredient, InvolutionOnNonzeroTriples) {
    for (int k = 1; k <= 6; ++k) {
        for (const auto &mu : enumerate_partitions(k, 2)) {
            for (const auto &nu : enumerate_partitions(k, 2)) {
                for (const auto &lam : enumerate_partitions(k, 3)) {
                    if (kronecker(mu, nu, lam) == 0) {
                        continue;
                    }
                    FrameTriple once = contragredient_triple(mu, nu, lam, 2, 2);
                    FrameTriple twice =
                        contragredient_triple(once.mu, once.nu, once.lambda, 2, 2);
                    EXPECT_EQ(twice.mu, mu);
                    EXPECT_EQ(twice.nu, nu);
                    EXPECT_EQ(twice.lambda, lam);
                }
            }
        }
    }
}

}  // namespace
}  // namespace spectrakit
