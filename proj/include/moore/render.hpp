#pragma once

#include <iosfwd>

#include "moore/bounds.hpp"
#include "moore/check.hpp"

namespace moore {

enum class OutputFormat { plain, csv, json, markdown };
enum class FormulaChoice { corrected, old, both };

void render_bound_report(std::ostream& os, const BoundReport& rep,
                         FormulaChoice which, bool show_levels,
                         OutputFormat fmt);

// One row per diameter 1..kmax with exact corrected/old values. CSV
// emits exactly the columns k,corrected,old; the other formats add an
// old/corrected ratio rounded to four decimals.
void render_table(std::ostream& os, int z, int r, int kmax, OutputFormat fmt);

// Emits both comparison series (z,r) = (1,1) and (2,1) for k = 1..kmax,
// checks the k <= 20 prefix bit-exactly against the embedded reference
// data, and reports PASS/FAIL per series. Returns the process exit code:
// 0 when every checked series matches, 1 otherwise.
int run_compare(std::ostream& os, int kmax, OutputFormat fmt);

void render_check_report(std::ostream& os, const CheckReport& rep,
                         OutputFormat fmt);

}  // namespace moore
