#pragma once

#include "fibcode/fast_decoder.hpp"

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace fibcode {

inline constexpr unsigned kDefaultRepeats = 5;

/// Timings for one collection. Times are medians over the timed runs, in
/// milliseconds; one untimed warm-up per decoder precedes them.
struct BenchReport {
    std::string collection;
    std::uint64_t numbers = 0;
    std::uint64_t encoded_bytes = 0;
    std::vector<double> naive_samples_ms;
    std::vector<double> fast_samples_ms;
    double naive_ms = 0;
    double fast_ms = 0;
    double speedup = 0; // naive_ms / fast_ms
};

struct ValueProfileRow {
    std::uint64_t value = 0;
    double naive_ms = 0;
    double fast_ms = 0;
    double speedup = 0;
};

/// Runs `decode` once untimed, then `repeats` timed times, returning the
/// timed samples in milliseconds. Throws CorrectnessError as soon as any
/// output differs from `expected`.
std::vector<double> time_verified(unsigned repeats, std::span<const std::uint64_t> expected, const std::string& decoder,
                                  const std::function<std::vector<std::uint64_t>()>& decode);

/// Encodes once, then times decode_naive and decode_fast. Every run's output
/// is compared with the collection; a mismatch throws CorrectnessError.
/// Throws ConfigError for repeats == 0 or an empty collection.
BenchReport run_benchmark(std::span<const std::uint64_t> collection, unsigned repeats, const MappingTables& tables,
                          std::string name = {});

/// Benchmarks a stream of `copies` repetitions of each value.
std::vector<ValueProfileRow> per_value_profile(std::span<const std::uint64_t> values, std::uint64_t copies,
                                               unsigned repeats, const MappingTables& tables);

/// Binds the calling thread to the CPU it is running on. Returns false where unsupported.
bool pin_to_current_cpu();

/// One-line description of the timing protocol for report headers.
std::string protocol_description(unsigned repeats);

double median(std::vector<double> samples);

/// Mean naive and fast time of the rows, speedup as the ratio of the means.
BenchReport average_row(std::span<const BenchReport> rows, std::string name = "Avg.");

void print_table(std::ostream& out, std::span<const BenchReport> rows);
/// Columns: collection,naive_ms,fast_ms,speedup
void write_csv(std::ostream& out, std::span<const BenchReport> rows);
/// Columns: value,naive_ms,fast_ms,speedup
void write_profile_csv(std::ostream& out, std::span<const ValueProfileRow> rows);

} // namespace fibcode
