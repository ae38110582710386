#pragma once

#include "fibcode/bench.hpp"
#include "fibcode/collections.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace fibcode::cli {

enum ExitCode : int {
    kOk = 0,
    kUsage = 1,
    kDataError = 2,
    kInternalError = 3,
};

enum class Algo { Fast, Naive };

int cmd_encode(const std::string& input, const std::string& output, std::ostream& out, std::ostream& err);
int cmd_decode(const std::string& archive, const std::string& output, Algo algo, std::ostream& out,
               std::ostream& err);
int cmd_gen(const std::string& kind, std::uint64_t seed, std::uint64_t length, const std::string& output,
            std::ostream& out, std::ostream& err);

struct BenchArgs {
    std::vector<std::string> kinds; // preset names, or "all"
    std::string input;              // raw number file, used when kinds is empty
    unsigned repeats = kDefaultRepeats;
    std::uint64_t length = kDefaultCollectionLength;
    std::uint64_t seed = kDefaultSeed;
    std::string report; // CSV path; empty to skip
};

int cmd_bench(const BenchArgs& args, std::ostream& out, std::ostream& err);
int cmd_table(int map, long long index, std::ostream& out, std::ostream& err);

/// Parses argv and dispatches to a command.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace fibcode::cli
