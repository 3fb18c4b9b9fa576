#pragma once

#include <string>
#include <utility>

#include "cpd/counterexample.hpp"
#include "cpd/finset.hpp"

namespace cpd {

// "{<a1,b1>, <a2,b2>}  vs  {<a1,b2>, <a2,b1>}" — both cells by label, two
// spaces around the separator.
std::string format_witness(const std::pair<EHNormalForm, EHNormalForm>& w);

// `format` is "text" (stable, diff-friendly lines) or "json" (a single
// structured document mirroring the report fields).  Unknown formats throw
// ValidationError.
std::string emit_report(const CounterexampleReport& report, const std::string& format);
std::string emit_report(const PullbackReport& report, const std::string& format);

}  // namespace cpd
