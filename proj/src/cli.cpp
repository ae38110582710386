#include "fibcode/cli.hpp"

#include "fibcode/archive.hpp"
#include "fibcode/bench.hpp"
#include "fibcode/collections.hpp"
#include "fibcode/error.hpp"
#include "fibcode/fast_decoder.hpp"
#include "fibcode/naive_codec.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <functional>
#include <ostream>

namespace fibcode::cli {

namespace {

int guarded(std::ostream& err, const std::function<int()>& body)
{
    try {
        return body();
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const CorrectnessError& e) {
        err << "internal error: " << e.what() << '\n';
        return kInternalError;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kDataError;
    } catch (const std::bad_alloc&) {
        err << "error: out of memory\n";
        return kDataError;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kInternalError;
    }
}

} // namespace

int cmd_encode(const std::string& input, const std::string& output, std::ostream& out, std::ostream& err)
{
    return guarded(err, [&] {
        const std::vector<std::uint64_t> numbers = read_raw_file(input);
        const EncodedStream stream = encode_stream(numbers);
        write_archive_file(output, stream);
        const double raw_bytes = 8.0 * static_cast<double>(numbers.size() + 1);
        const double archive_bytes = static_cast<double>(ArchiveHeader::kEncodedSize + stream.bytes.size());
        char line[160];
        std::snprintf(line, sizeof line, "encoded %llu numbers: %.0f raw bytes -> %.0f archive bytes (ratio %.4f)\n",
                      static_cast<unsigned long long>(numbers.size()), raw_bytes, archive_bytes,
                      archive_bytes / raw_bytes);
        out << line;
        return kOk;
    });
}

int cmd_decode(const std::string& archive, const std::string& output, Algo algo, std::ostream& out,
               std::ostream& err)
{
    return guarded(err, [&] {
        const EncodedStream stream = read_archive_file(archive);
        std::vector<std::uint64_t> numbers;
        if (algo == Algo::Fast) {
            const MappingTables tables = build_tables(ArchiveHeader::kSegmentSize);
            numbers = decode_fast(stream, tables);
        } else {
            numbers = decode_naive(stream);
        }
        write_raw_file(output, numbers);
        out << "decoded " << numbers.size() << " numbers (" << (algo == Algo::Fast ? "fast" : "naive") << ")\n";
        return kOk;
    });
}

int cmd_gen(const std::string& kind, std::uint64_t seed, std::uint64_t length, const std::string& output,
            std::ostream& out, std::ostream& err)
{
    return guarded(err, [&] {
        CollectionSpec spec;
        try {
            spec = preset_spec(kind, length, seed);
        } catch (const DomainError& e) {
            throw ConfigError(e.what());
        }
        const std::vector<std::uint64_t> values = generate(spec);
        write_raw_file(output, values);
        out << "wrote " << values.size() << " numbers of " << kind << " (" << spec.lo << ".." << spec.hi;
        if (spec.kind == CollectionKind::Rand) out << ", " << kPrngName << " seed " << seed;
        out << ") to " << output << '\n';
        return kOk;
    });
}

int cmd_bench(const BenchArgs& args, std::ostream& out, std::ostream& err)
{
    return guarded(err, [&] {
        if (args.repeats == 0) throw ConfigError("--repeats must be at least 1");
        if (args.kinds.empty() && args.input.empty()) throw ConfigError("bench needs --kind or --input");

        std::vector<std::string> kinds;
        for (const auto& k : args.kinds) {
            if (k == "all") {
                for (const auto& p : collection_presets()) kinds.emplace_back(p.name);
            } else {
                try {
                    preset_spec(k);
                } catch (const DomainError& e) {
                    throw ConfigError(e.what());
                }
                kinds.push_back(k);
            }
        }

        const MappingTables tables = build_tables(8);
        const bool pinned = pin_to_current_cpu();
        out << "# " << protocol_description(args.repeats) << (pinned ? "; pinned to one CPU" : "; not pinned")
            << '\n';

        std::vector<BenchReport> rows;
        if (kinds.empty()) {
            const auto values = read_raw_file(args.input);
            rows.push_back(run_benchmark(values, args.repeats, tables, args.input));
        }
        for (const auto& k : kinds) {
            const auto values = generate(preset_spec(k, args.length, args.seed));
            rows.push_back(run_benchmark(values, args.repeats, tables, k));
        }

        std::vector<BenchReport> table = rows;
        std::vector<BenchReport> seq;
        std::vector<BenchReport> rnd;
        for (const auto& r : rows) (r.collection.starts_with("SEQ_") ? seq : rnd).push_back(r);
        if (!kinds.empty() && rows.size() > 1) {
            if (seq.size() > 1) table.push_back(average_row(seq, "Avg. SEQ"));
            if (rnd.size() > 1) table.push_back(average_row(rnd, "Avg. RAND"));
        }
        print_table(out, table);

        if (!args.report.empty()) {
            std::ofstream csv(args.report, std::ios::trunc);
            if (!csv) throw IoError(args.report + ": cannot open report");
            write_csv(csv, table);
            if (!csv) throw IoError(args.report + ": write failed");
        }
        return kOk;
    });
}

int cmd_table(int map, long long index, std::ostream& out, std::ostream& err)
{
    return guarded(err, [&] {
        const MappingTables tables = build_tables(8);
        if (index < 0) throw ConfigError("record index must be in 0..255");
        const MapRecord& rec = record_lookup(tables, map, static_cast<std::size_t>(index));
        out << format_record(rec) << '\n' << "first_shifted: " << rec.first_shifted << '\n';
        return kOk;
    });
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Fibonacci-code compressor with a table-driven fast decoder", "fibc"};
    app.require_subcommand(1);

    std::string enc_in;
    std::string enc_out;
    auto* encode = app.add_subcommand("encode", "Encode a raw number file into an archive");
    encode->add_option("input", enc_in, "Raw number file")->required();
    encode->add_option("output", enc_out, "Archive to write")->required();

    std::string dec_in;
    std::string dec_out;
    std::string algo = "fast";
    auto* decode = app.add_subcommand("decode", "Decode an archive into a raw number file");
    decode->add_option("archive", dec_in, "Archive to read")->required();
    decode->add_option("output", dec_out, "Raw number file to write")->required();
    decode->add_option("--algo", algo, "Decoder")->check(CLI::IsMember({"fast", "naive"}));

    std::string gen_kind;
    std::uint64_t gen_seed = kDefaultSeed;
    std::uint64_t gen_length = kDefaultCollectionLength;
    std::string gen_out;
    auto* gen = app.add_subcommand("gen", "Generate a benchmark collection");
    gen->add_option("--kind", gen_kind, "Preset name, e.g. SEQ_ALL or RAND_Small")->required();
    gen->add_option("--seed", gen_seed, "Seed for RAND collections");
    gen->add_option("--length", gen_length, "Number count");
    gen->add_option("output", gen_out, "Raw number file to write")->required();

    BenchArgs bench_args;
    auto* bench = app.add_subcommand("bench", "Time the naive and fast decoders");
    auto* kind_opt = bench->add_option("--kind", bench_args.kinds, "Preset name(s), or 'all'");
    auto* input_opt = bench->add_option("--input", bench_args.input, "Raw number file to benchmark");
    kind_opt->excludes(input_opt);
    bench->add_option("--repeats", bench_args.repeats, "Timed runs per decoder");
    bench->add_option("--length", bench_args.length, "Numbers per generated collection");
    bench->add_option("--seed", bench_args.seed, "Seed for RAND collections");
    bench->add_option("--report", bench_args.report, "CSV report path");

    int map = 1;
    long long index = 0;
    auto* table = app.add_subcommand("table", "Print one mapping-table record");
    table->add_option("--map", map, "1 or 2")->required();
    table->add_option("--index", index, "Record index")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    if (encode->parsed()) return cmd_encode(enc_in, enc_out, out, err);
    if (decode->parsed()) return cmd_decode(dec_in, dec_out, algo == "fast" ? Algo::Fast : Algo::Naive, out, err);
    if (gen->parsed()) return cmd_gen(gen_kind, gen_seed, gen_length, gen_out, out, err);
    if (bench->parsed()) return cmd_bench(bench_args, out, err);
    if (table->parsed()) return cmd_table(map, index, out, err);
    return kUsage;
}

} // namespace fibcode::cli
