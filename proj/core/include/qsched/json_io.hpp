#pragma once

#include <string>

#include "qsched/analysis.hpp"
#include "qsched/conditions.hpp"
#include "qsched/demand.hpp"
#include "qsched/graph.hpp"
#include "qsched/interval_schedule.hpp"
#include "qsched/oracle.hpp"
#include "qsched/simulator.hpp"

namespace qsched {

// All serialization is JSON with exact rational strings ("p/q" or an integer
// string); floating point never appears in machine output. Parsers accept
// decimals ("0.25") on input. Emitted documents re-parse to equal values and
// are byte-stable: keys keep a fixed order.

NetworkGraph parse_network_graph(const std::string& text);
ConflictGraph parse_conflict_graph(const std::string& text);
DemandVector parse_demands(const std::string& text);
Scenario parse_scenario(const std::string& text);
IntervalSchedule parse_interval_schedule(const std::string& text);
ActivationSchedule parse_activation_schedule(const std::string& text);

std::string to_json_text(const NetworkGraph& net);
std::string to_json_text(const ConflictGraph& g);
std::string to_json_text(const DemandVector& tau);
std::string to_json_text(const Scenario& scenario);
std::string to_json_text(const Verdict& verdict);
std::string to_json_text(const OracleResult& result);
std::string to_json_text(const PerformanceReport& report);
std::string to_json_text(const IntervalSchedule& sched);
std::string to_json_text(const ActivationSchedule& sched);
std::string to_json_text(const SimTrace& trace);

/// One compact JSON object per decision, newline separated, followed by one
/// metrics object: the stream form of a trace.
std::string trace_to_json_lines(const SimTrace& trace);

/// Single CSV line (with header) summarizing a trace's metrics.
std::string metrics_to_csv(const SimMetrics& metrics);

}  // namespace qsched
