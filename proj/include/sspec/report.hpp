#pragma once

#include <ostream>
#include <span>
#include <string>

#include "sspec/config.hpp"
#include "sspec/order_kernel.hpp"

namespace sspec {

// "2,3,5": ascending, comma-separated, no spaces.
std::string spectrum_string(std::span<const Prime> spectrum);

// Writes the configured report. Records must be sorted with record_less.
// Every format ends with a summary line that carries the record count.
void emit_report(std::span<const GroupRecord> records, const RunConfig& config, std::ostream& out);

}  // namespace sspec
