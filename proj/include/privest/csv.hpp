// Copyright 2026 The Privest Authors
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
//
// Minimal CSV support: comma separators, '.' decimal point, newline rows, an
// optional single header row detected by a non-numeric first line.

#ifndef PRIVEST_CSV_HPP_
#define PRIVEST_CSV_HPP_

#include <iosfwd>
#include <string>

#include <Eigen/Dense>

namespace privest {

// Reads a numeric matrix; throws std::runtime_error on unreadable files,
// ragged rows, or non-numeric cells outside a leading header row.
Eigen::MatrixXd ReadMatrixCsv(const std::string& path);
Eigen::MatrixXd ReadMatrixCsv(std::istream& in, const std::string& name = "<stream>");

// Writes with enough digits to round-trip doubles exactly.
void WriteMatrixCsv(std::ostream& out, const Eigen::MatrixXd& m);
void WriteMatrixCsv(const std::string& path, const Eigen::MatrixXd& m);

std::string FormatDouble(double v);

}  // namespace privest

#endif  // PRIVEST_CSV_HPP_
