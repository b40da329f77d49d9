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

#include "spectrakit/bigint.h"

#include <vector>

#include "spectrakit/errors.h"

namespace spectrakit {

BigInt factorial(int n) {
    if (n < 0) {
        throw DomainError("factorial of negative number");
    }
    static const std::vector<BigInt> table = [] {
        std::vector<BigInt> t{1};
        for (unsigned i = 1; i <= 64; ++i) {
            t.push_back(t.back() * i);
        }
        return t;
    }();
    if (n < static_cast<int>(table.size())) {
        return table[n];
    }
    BigInt r = table.back();
    for (int i = static_cast<int>(table.size()); i <= n; ++i) {
        r *= i;
    }
    return r;
}

BigInt binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) {
        return 0;
    }
    BigInt r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
    }
    return r;
}

BigInt require_integer(const BigRational &q, const char *context) {
    if (boost::multiprecision::denominator(q) != 1) {
        throw DomainError(std::string("non-integral result in ") + context);
    }
    return boost::multiprecision::numerator(q);
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) {
        throw ResourceError("int64 overflow in character arithmetic");
    }
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) {
        throw ResourceError("int64 overflow in character arithmetic");
    }
    return r;
}

}  // namespace spectrakit
