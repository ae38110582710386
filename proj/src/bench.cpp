#include "fibcode/bench.hpp"

#include "fibcode/collections.hpp"
#include "fibcode/error.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <ostream>

#ifdef __linux__
#include <sched.h>
#endif

namespace fibcode {

namespace {

using Clock = std::chrono::steady_clock;

std::string format_ms(double ms)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f", ms);
    return buf;
}

std::string format_speedup(double s)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2f", s);
    return buf;
}

} // namespace

std::vector<double> time_verified(unsigned repeats, std::span<const std::uint64_t> expected, const std::string& decoder,
                                  const std::function<std::vector<std::uint64_t>()>& decode)
{
    std::vector<double> samples;
    samples.reserve(repeats);
    for (unsigned run = 0; run <= repeats; ++run) {
        const auto t0 = Clock::now();
        const std::vector<std::uint64_t> out = decode();
        const auto t1 = Clock::now();
        if (!std::equal(out.begin(), out.end(), expected.begin(), expected.end()))
            throw CorrectnessError(decoder + " decoder output differs from the source collection");
        if (run == 0) continue; // warm-up
        samples.push_back(std::chrono::duration<double, std::milli>(t1 - t0).count());
    }
    return samples;
}

double median(std::vector<double> samples)
{
    if (samples.empty()) return 0;
    std::sort(samples.begin(), samples.end());
    const std::size_t mid = samples.size() / 2;
    return samples.size() % 2 ? samples[mid] : (samples[mid - 1] + samples[mid]) / 2;
}

BenchReport run_benchmark(std::span<const std::uint64_t> collection, unsigned repeats, const MappingTables& tables,
                          std::string name)
{
    if (repeats == 0) throw ConfigError("repeats must be positive");
    if (collection.empty()) throw ConfigError("cannot benchmark an empty collection");
    if (tables.segment_size() != 8) throw ConfigError("benchmarks run on 8-bit segments");

    const EncodedStream stream = encode_stream(collection);
    const std::span<const std::uint8_t> bytes(stream.bytes);

    BenchReport r;
    r.collection = std::move(name);
    r.numbers = collection.size();
    r.encoded_bytes = stream.bytes.size();
    r.naive_samples_ms = time_verified(repeats, collection, "naive",
                                   [&] { return decode_naive(bytes, stream.bit_length, stream.count); });
    r.fast_samples_ms = time_verified(repeats, collection, "fast", [&] { return decode_fast(bytes, stream.count, tables); });
    r.naive_ms = median(r.naive_samples_ms);
    r.fast_ms = median(r.fast_samples_ms);
    r.speedup = r.fast_ms > 0 ? r.naive_ms / r.fast_ms : 0;
    return r;
}

std::vector<ValueProfileRow> per_value_profile(std::span<const std::uint64_t> values, std::uint64_t copies,
                                               unsigned repeats, const MappingTables& tables)
{
    if (copies == 0) throw ConfigError("copies must be positive");
    std::vector<ValueProfileRow> rows;
    rows.reserve(values.size());
    for (std::uint64_t v : values) {
        if (v == 0) throw DomainError("zero not encodable");
        const std::vector<std::uint64_t> stream(static_cast<std::size_t>(copies), v);
        const BenchReport r = run_benchmark(stream, repeats, tables, std::to_string(v));
        rows.push_back({v, r.naive_ms, r.fast_ms, r.speedup});
    }
    return rows;
}

bool pin_to_current_cpu()
{
#ifdef __linux__
    const int cpu = sched_getcpu();
    if (cpu < 0) return false;
    cpu_set_t set;
    CPU_ZERO(&set);
    CPU_SET(cpu, &set);
    return sched_setaffinity(0, sizeof set, &set) == 0;
#else
    return false;
#endif
}

std::string protocol_description(unsigned repeats)
{
    return "median of " + std::to_string(repeats) +
           " timed runs per decoder after 1 untimed warm-up; steady_clock wall time; tables built before timing; "
           "outputs verified against the source; PRNG " +
           std::string(kPrngName);
}

BenchReport average_row(std::span<const BenchReport> rows, std::string name)
{
    BenchReport avg;
    avg.collection = std::move(name);
    if (rows.empty()) return avg;
    for (const auto& r : rows) {
        avg.numbers += r.numbers;
        avg.encoded_bytes += r.encoded_bytes;
        avg.naive_ms += r.naive_ms;
        avg.fast_ms += r.fast_ms;
    }
    avg.naive_ms /= static_cast<double>(rows.size());
    avg.fast_ms /= static_cast<double>(rows.size());
    avg.speedup = avg.fast_ms > 0 ? avg.naive_ms / avg.fast_ms : 0;
    return avg;
}

void print_table(std::ostream& out, std::span<const BenchReport> rows)
{
    std::size_t width = 10;
    for (const auto& r : rows) width = std::max(width, r.collection.size());
    char line[256];
    std::snprintf(line, sizeof line, "%-*s  %14s  %14s  %8s\n", static_cast<int>(width), "collection", "naive [ms]",
                  "fast [ms]", "speedup");
    out << line;
    for (const auto& r : rows) {
        std::snprintf(line, sizeof line, "%-*s  %14s  %14s  %7sx\n", static_cast<int>(width), r.collection.c_str(),
                      format_ms(r.naive_ms).c_str(), format_ms(r.fast_ms).c_str(), format_speedup(r.speedup).c_str());
        out << line;
    }
}

void write_csv(std::ostream& out, std::span<const BenchReport> rows)
{
    out << "collection,naive_ms,fast_ms,speedup\n";
    for (const auto& r : rows)
        out << r.collection << ',' << format_ms(r.naive_ms) << ',' << format_ms(r.fast_ms) << ','
            << format_speedup(r.speedup) << '\n';
}

void write_profile_csv(std::ostream& out, std::span<const ValueProfileRow> rows)
{
    out << "value,naive_ms,fast_ms,speedup\n";
    for (const auto& r : rows)
        out << r.value << ',' << format_ms(r.naive_ms) << ',' << format_ms(r.fast_ms) << ','
            << format_speedup(r.speedup) << '\n';
}

} // namespace fibcode
