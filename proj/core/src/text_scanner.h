// Copyright 2026 The trivalent Authors
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

#ifndef TRIVALENT_SRC_TEXT_SCANNER_H_
#define TRIVALENT_SRC_TEXT_SCANNER_H_

#include <string_view>
#include <vector>

namespace trivalent::internal {

struct Token {
  std::string_view text;
  int line = 0;
  int column = 0;
};

// Whitespace-separated tokens grouped by line, '#' comments removed, empty
// lines dropped. With split_parens, '(' and ')' are tokens of their own.
std::vector<std::vector<Token>> TokenizeLines(std::string_view text, bool split_parens);

int ParseInt(const Token& token, std::string_view what);
// Parses "<key>=<int>".
int ParseKeyInt(const Token& token, std::string_view key);

[[noreturn]] void Fail(const Token& token, std::string_view message);
[[noreturn]] void FailAt(int line, int column, std::string_view message);

}  // namespace trivalent::internal

#endif  // TRIVALENT_SRC_TEXT_SCANNER_H_
