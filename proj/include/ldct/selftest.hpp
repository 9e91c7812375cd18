/*
 * Copyright 2026 The ldct Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef LDCT_SELFTEST_HPP_
#define LDCT_SELFTEST_HPP_

#include <ostream>

namespace ldct {

// Runs a quick invariant suite over every module, printing one
// "PASS <name>" / "FAIL <name>: <detail>" line per check. Returns the number
// of failed checks.
int run_selftest(std::ostream& out);

}  // namespace ldct

#endif  // LDCT_SELFTEST_HPP_
