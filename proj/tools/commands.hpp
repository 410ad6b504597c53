/*
 * Copyright 2026 The pbnphi Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pbnphi::cli {

/// Runs one subcommand. `args` excludes the program name. Reports go to
/// `out`, diagnostics to `err`. Returns the process exit status:
/// 0 ok, 1 usage, 2 parse/validation, 3 computation, 4 size cap.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Rounds to 12 significant digits, the precision reports are written with.
double report_number(double value);

}  // namespace pbnphi::cli
