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

#ifndef PEBBLING_BUDGET_HPP
#define PEBBLING_BUDGET_HPP

#include <chrono>
#include <cstddef>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>

namespace pebbling {

/// An explicit refusal: the instance exceeds a configured budget. Never a
/// wrong answer; callers report it separately from failures.
class Refusal : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using Clock = std::chrono::steady_clock;

/// Limits for the brute-force routines. All overridable; the defaults keep
/// every desk-scale instance in reach.
struct Budget {
    int max_vertices = 8;
    int max_t = 4;
    /// Largest pebble count any enumerated distribution may hold.
    long max_pebbles = 1024;
    /// Cap on memoized states per reachability query family.
    std::size_t memo_cap = 4'000'000;
    /// Cap on distributions tested by a single enumeration.
    std::size_t enumeration_cap = 50'000'000;
    /// Wall-time limit per top-level computation, armed by `arm()`.
    std::optional<double> seconds;
    std::optional<Clock::time_point> deadline;

    void arm()
    {
        if (seconds)
            deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(*seconds));
    }

    void check_deadline() const
    {
        if (deadline && Clock::now() > *deadline)
            throw Refusal("wall-time budget exhausted");
    }

    /// Reads the per-computation wall-time limit from PEBBLE_BUDGET_SECS.
    Budget& with_env_deadline()
    {
        if (const char* s = std::getenv("PEBBLE_BUDGET_SECS")) {
            char* end = nullptr;
            double secs = std::strtod(s, &end);
            if (end != s && secs > 0)
                seconds = secs;
        }
        return *this;
    }
};

} // namespace pebbling

#endif // PEBBLING_BUDGET_HPP
