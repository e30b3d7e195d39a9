#ifndef NETFORM_IO_HPP
#define NETFORM_IO_HPP

#include <string>

#include "netform/experiment.hpp"
#include "netform/matrix.hpp"

namespace netform {

// Fixed 6-decimal CSV, one data row per agent, diagonal written as a bare
// "0" so golden files diff cleanly.
std::string probability_csv(const ProbabilityMatrix& pm);

std::string probability_json(const ProbabilityMatrix& pm);

// The summary document: {config, class_counts, absorption, statistics}.
// Key order is fixed so reruns are byte-identical.
std::string summary_json(const ExperimentResult& result);

// Writes summary.json plus one final-probability matrix file per replica in
// the configured format, into result.config.out_dir. The paths written are
// recorded in result.written_files. I/O failures throw std::runtime_error
// naming the path.
void write_experiment_files(ExperimentResult& result);

}  // namespace netform

#endif  // NETFORM_IO_HPP
