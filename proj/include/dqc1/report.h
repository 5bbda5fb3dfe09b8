// Copyright 2026 The dqc1sim Authors
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

#ifndef DQC1_REPORT_H
#define DQC1_REPORT_H

#include <complex>
#include <string>

#include "dqc1/hardness.h"
#include "dqc1/simulator.h"

namespace dqc1 {

/// 17 significant digits; integral values keep a trailing ".0".
std::string format_real(double value);
/// "re,im"
std::string format_complex(std::complex<double> value);

/// One `key=value` line per field, fixed order.
std::string format_report(const ChainReport &report);
/// Single JSON object with every report field.
std::string format_report_json(const ChainReport &report);

/// CSV rows `z,probability`, with a header.
std::string format_distribution_csv(const Distribution &d);

}  // namespace dqc1

#endif  // DQC1_REPORT_H
