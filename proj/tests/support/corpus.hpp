// Copyright 2026 The qspace Authors
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

#pragma once

namespace qspace::reference {

/// Expressions covering every production of the grammar, in non-canonical
/// spacing where possible.
inline constexpr const char* kExpressionCorpus[] = {
    "|;B>",
    "|;F>",
    "|1@1;U>",
    "|3@2,1@3,4@5;B>",
    "a+(1)|;B>",
    "a+(1) a+(1) |;B>",
    "a(2) |2@2;B>",
    "c+(6)|1@3,1@5,1@7,1@8;F>",
    "c(3) c+(3) |;F>",
    "[a(1),a+(1)]|1@2;B>",
    "{c(1), c+(1)} |1@2;F>",
    "[a(1), a+(2)] |1@1,1@2;B>",
    "{c+(1),c+(2)}|;F>",
    "<1@1;B|1@1;B>",
    "<|1@1;B>|a+(1)|;B>>",
    "<a+(1)|;B>|a+(1)|;B>>",
    "<1@1;B|(a+(1)|;B> + |1@2;B>)>",
    "2 |1@1;B>",
    "2i |1@1;B>",
    "3+4i |1@1;B>",
    "1.5 a+(1) |;B>",
    "-|1@1;B>",
    "|1@1;B> - |1@2;B>",
    "|1@1;B> + 2 |1@2;B> - 0.5i |2@1;B>",
    "(1-2i) |1@1;F>",
    "(2) + 3",
    "2 + 3",
    "|1@1;B> 2",
    "a+(1) (|;B> + |1@1;B>)",
    "(a+(1) + a+(2)) |;B>",
    "a+(1) a(1) |1@1;B> + |1@1;B>",
    "[a+(1) a(1), a+(2)] |;B>",
    "psi+(1) psi+(2) |;B>",
    "psi(2) psi+(2) |;F>",
    "<;B|;B>",
    "1e-3 |;B>",
    "2.5e2+1e1i |;U>",
    "(|;B>) |;B>",
    "<(a+(1) + a+(2)) |;B>|;B>",
    "<2 |;B> - |1@1;B>|1@1;B>",
    "<(1+1i)||;B>>",
    "<a+(1) (|;B> + |1@1;B>)||1@1;B>>",
    "<a+(1) (|;B> + |1@1;B>)|a(1) |2@1;B>>",
};

}  // namespace qspace::reference
