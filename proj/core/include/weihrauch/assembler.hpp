#pragma once

#include <string>

#include "weihrauch/machine.hpp"

namespace weihrauch {

// Textual assembly, one instruction per line. Labels are `name:`; jump
// operands may be labels or absolute instruction indices. `;` starts a
// comment. Registers are written r0..r255.
//
//   loop: oracle r2 r1
//         jz r2 next
//         out r2
//         halt
//   next: const r3 1
//         add r1 r1 r3
//         jmp loop
Program assemble(const std::string& text);
std::string disassemble(const Program& prog);

}  // namespace weihrauch
