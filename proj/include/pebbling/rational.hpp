// Copyright 2026 The Pebbling Toolkit Authors
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

#ifndef PEBBLING_RATIONAL_HPP
#define PEBBLING_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace pebbling {

/// Exact rational number. Every bound, weight and LP value in the toolkit
/// is carried as one of these; nothing is ever rounded to floating point.
using Rational = mpq_class;
using BigInt = mpz_class;

inline Rational make_rational(long num, long den = 1)
{
    if (den == 0)
        throw std::invalid_argument("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

/// 2^e as an exact rational; negative exponents give 1/2^|e|.
inline Rational pow2(long e)
{
    Rational q(1);
    if (e >= 0)
        mpq_mul_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(e));
    else
        mpq_div_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(-e));
    return q;
}

/// Renders "p/q", or just "p" when the denominator is 1.
inline std::string to_string(const Rational& q)
{
    return q.get_str(10);
}

inline Rational parse_rational(std::string_view text)
{
    std::string s(text);
    Rational q;
    if (s.empty() || q.set_str(s, 10) != 0)
        throw std::invalid_argument("malformed rational '" + s + "'");
    if (q.get_den() == 0)
        throw std::invalid_argument("rational with zero denominator '" + s + "'");
    q.canonicalize();
    return q;
}

inline bool is_integer(const Rational& q)
{
    return q.get_den() == 1;
}

inline BigInt floor(const Rational& q)
{
    BigInt r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

inline BigInt ceil(const Rational& q)
{
    BigInt r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

inline long to_long(const BigInt& z)
{
    if (!z.fits_slong_p())
        throw std::overflow_error("integer does not fit in a long: " + z.get_str());
    return z.get_si();
}

inline BigInt lcm(const BigInt& a, const BigInt& b)
{
    BigInt r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

} // namespace pebbling

#endif // PEBBLING_RATIONAL_HPP
