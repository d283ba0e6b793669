/*
   Copyright 2026 The qf2 authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef QF2_JOBS_HPP
#define QF2_JOBS_HPP

#include "globaldec.hpp"
#include "textio.hpp"

namespace qf2 {

// Exit codes: 0 decided, 1 decided-negative (configurable), 2 error,
// 3 factor not found within the bound.
enum ExitCode : int {
    kExitDecided = 0,
    kExitNegative = 1,
    kExitError = 2,
    kExitFactorNotFound = 3,
};

struct JobOptions {
    int degree_bound = 6;
    uint64_t seed = 1;
    bool negative_exit_zero = false;
    bool timing = false;
    bool verbose = false;  // decision reports carry per-place local profiles
    int trials = 0;        // 0 = per-command default (selftest)
    std::vector<std::string> places;
    std::optional<std::string> symbol_x, symbol_y;  // reciprocity on an explicit pair
};

struct JobSpec {
    int k = 1;
    std::string command;
    std::vector<FormOrGram> forms;
    JobOptions options;
};

/// Parse a job document: {"field":{"k":...},"command":...,"forms":[...],
/// "options":{...}}. Arity and field range are validated here.
JobSpec parse_job(const std::string& text);

struct JobResult {
    int exit_code = kExitError;
    Json report;
};

JobResult run_job(const JobSpec& job);

Json decision_to_json(const Decision& d);
Json profile_to_json(const LocalProfile& p);

}  // namespace qf2

#endif
