#pragma once

#include <string>

#include "qcorr/info_measures.hpp"
#include "qcorr/state_io.hpp"

namespace qcorr {

enum class ReportFormat { Text, Json };

// Runs the full analysis for a parsed state and renders the report. Text
// output prints values to six decimal places; json output carries full
// double precision and parses back losslessly. `order` is recorded as
// provenance; the statistics do not depend on it.
std::string run_report(const StateSpec &spec, ReportFormat format,
                       MeasurementOrder order = MeasurementOrder::AFirst);

}  // namespace qcorr
