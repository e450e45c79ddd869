// Copyright 2026 The ternhash Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ternhash/bench.hpp"
#include "ternhash/data_io.hpp"
#include "ternhash/encoder.hpp"
#include "ternhash/error.hpp"
#include "ternhash/retrieval_eval.hpp"
#include "ternhash/threshold_search.hpp"
#include "ternhash/trit_logic.hpp"

namespace {

using namespace ternhash;

bool ends_with(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

size_t parse_k(const std::string& text) {
    if (text == "all") {
        return 0;
    }
    size_t pos = 0;
    unsigned long long v = 0;
    try {
        v = std::stoull(text, &pos);
    } catch (const std::exception&) {
        throw ParameterError("k must be a positive integer or 'all', got '" + text + "'");
    }
    if (pos != text.size() || v == 0) {
        throw ParameterError("k must be a positive integer or 'all', got '" + text + "'");
    }
    return static_cast<size_t>(v);
}

MetricKind resolve_metric(const std::string& name, CodeKind kind) {
    if (name == "auto") {
        return kind == CodeKind::Ternary ? MetricKind::Kleene : MetricKind::Binary;
    }
    return metric_from_string(name);
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out.is_open()) {
        throw IoError("cannot open '" + path + "' for writing");
    }
    return out;
}

int run(int argc, char** argv) {
    CLI::App app{"ternary hashing toolkit: fit double thresholds, encode, and evaluate retrieval"};
    app.require_subcommand(1);

    int threads = 0;

    auto* synth = app.add_subcommand("synth", "generate a synthetic labeled feature file");
    uint32_t synth_classes = 10;
    uint32_t synth_bits = 32;
    uint32_t synth_per_class = 100;
    double synth_separation = 1.5;
    double synth_ambiguity = 0.3;
    uint64_t synth_seed = 0;
    std::string synth_out;
    synth->add_option("--classes", synth_classes, "number of classes (>= 2)");
    synth->add_option("--bits", synth_bits, "outputs per sample");
    synth->add_option("--per-class", synth_per_class, "samples per class");
    synth->add_option("--separation", synth_separation, "gap between class means");
    synth->add_option("--ambiguity", synth_ambiguity, "fraction of mean-zero samples per bit");
    synth->add_option("--seed", synth_seed, "RNG seed");
    synth->add_option("--out", synth_out, "output feature file (TRNH)")->required();

    auto* fit = app.add_subcommand("fit", "search per-bit double thresholds on a feature file");
    std::string fit_features;
    uint32_t fit_bins = 100;
    std::string fit_logic = "kleene";
    std::string fit_out;
    fit->add_option("--features", fit_features, "input feature file (TRNH or CSV)")->required();
    fit->add_option("--bins", fit_bins, "histogram bins (>= 2)");
    fit->add_option("--logic", fit_logic, "lukasiewicz, kleene, or bochvar");
    fit->add_option("--out", fit_out, "output threshold file (TRNT)")->required();

    auto* encode = app.add_subcommand("encode", "encode features into packed codes");
    std::string encode_features;
    std::string encode_mode = "ternary";
    std::string encode_thresholds;
    std::string encode_out;
    encode->add_option("--features", encode_features, "input feature file")->required();
    encode->add_option("--mode", encode_mode, "binary or ternary")
        ->check(CLI::IsMember({"binary", "ternary"}));
    encode->add_option("--thresholds", encode_thresholds, "threshold file (ternary mode)");
    encode->add_option("--out", encode_out, "output code file (TRNC)")->required();

    auto* eval = app.add_subcommand("eval", "retrieval evaluation of query codes against a database");
    std::string eval_queries;
    std::string eval_database;
    std::string eval_metric = "auto";
    std::string eval_k = "all";
    uint64_t eval_seed = 0;
    uint64_t eval_triples = 100000;
    std::string eval_hist_out;
    eval->add_option("--queries", eval_queries, "query code file (TRNC)")->required();
    eval->add_option("--database", eval_database, "database code file (TRNC)")->required();
    eval->add_option("--metric", eval_metric, "binary, lukasiewicz, kleene, or auto");
    eval->add_option("--k", eval_k, "mAP cutoff, positive integer or 'all'");
    eval->add_option("--seed", eval_seed, "seed for ambiguity triple sampling");
    eval->add_option("--triples", eval_triples, "triple budget for the ambiguity rate");
    eval->add_option("--hist-out", eval_hist_out, "also write distance histograms (TSV)");

    auto* hist = app.add_subcommand("hist", "distance histograms and their overlap");
    std::string hist_queries;
    std::string hist_database;
    std::string hist_metric = "auto";
    std::string hist_out;
    hist->add_option("--queries", hist_queries, "query code file (TRNC)")->required();
    hist->add_option("--database", hist_database, "database code file (TRNC)")->required();
    hist->add_option("--metric", hist_metric, "binary, lukasiewicz, kleene, or auto");
    hist->add_option("--out", hist_out, "output histogram file (TSV)")->required();

    auto* bench = app.add_subcommand("bench", "time distance kernels, one query vs a database");
    std::vector<std::string> bench_kinds = {"matmul", "binary", "lukasiewicz", "kleene"};
    std::vector<uint32_t> bench_lengths = {16, 32, 64, 128, 256};
    uint32_t bench_db = 10000;
    uint32_t bench_reps = 5;
    uint64_t bench_seed = 0;
    bench->add_option("--kinds", bench_kinds, "kinds to run")->delimiter(',');
    bench->add_option("--lengths", bench_lengths, "code lengths in trits")->delimiter(',');
    bench->add_option("--db-size", bench_db, "database rows per sweep");
    bench->add_option("--reps", bench_reps, "timed repetitions");
    bench->add_option("--seed", bench_seed, "RNG seed for benchmark data");

    auto* convert = app.add_subcommand("convert", "convert features between CSV and TRNH");
    std::string convert_in;
    std::string convert_out;
    uint32_t convert_classes = 0;
    convert->add_option("--in", convert_in, "input file (.csv or .trnh)")->required();
    convert->add_option("--out", convert_out, "output file (.csv or .trnh)")->required();
    convert->add_option("--classes", convert_classes,
                        "override the inferred class count when reading CSV");

    for (auto* sub : {synth, fit, encode, eval, hist, bench, convert}) {
        sub->add_option("--threads", threads, "worker threads (0 = auto)");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return static_cast<int>(ErrorCode::Usage);
    }

    if (*synth) {
        const FeatureSet set = synth_gaussian(synth_classes, synth_bits, synth_per_class,
                                              synth_separation, synth_ambiguity, synth_seed);
        save_features(set, synth_out);
        std::cout << "wrote " << synth_out << ": " << set.count << " samples, " << set.bits
                  << " bits, " << set.classes << " classes\n";
        std::cout << "seed: " << synth_seed << "\n";
        return 0;
    }

    if (*fit) {
        const FeatureSet set = load_features(fit_features);
        const LogicKind logic = logic_from_string(fit_logic);
        const FitResult result = fit_thresholds(set, fit_bins, logic, threads);
        save_thresholds(result.table, fit_out);

        uint32_t degenerate = 0;
        double objective_sum = 0.0;
        for (const BitSearchResult& bit : result.bits) {
            degenerate += bit.degenerate ? 1 : 0;
            objective_sum += bit.objective;
        }
        char buf[64];
        std::cout << "wrote " << fit_out << ": " << result.table.num_bits() << " bits, logic "
                  << to_string(logic) << ", " << fit_bins << " bins\n";
        std::snprintf(buf, sizeof(buf), "%.9g", objective_sum);
        std::cout << "objective_sum: " << buf << "\n";
        std::cout << "degenerate_bits: " << degenerate << "\n";
        return 0;
    }

    if (*encode) {
        const FeatureSet set = load_features(encode_features);
        CodeSet codes;
        if (encode_mode == "binary") {
            codes = encode_set_binary(set, threads);
        } else {
            if (encode_thresholds.empty()) {
                throw ParameterError("ternary encoding needs --thresholds");
            }
            const ThresholdTable table = load_thresholds(encode_thresholds);
            codes = encode_set_ternary(set, table, threads);
        }
        save_codes(codes, encode_out);
        std::cout << "wrote " << encode_out << ": " << codes.count << " " << to_string(codes.kind)
                  << " codes of length " << codes.length << "\n";
        return 0;
    }

    if (*eval) {
        const CodeSet queries = load_codes(eval_queries);
        const CodeSet database = load_codes(eval_database);
        const MetricKind metric = resolve_metric(eval_metric, queries.kind);
        const size_t k = parse_k(eval_k);
        const RetrievalReport report =
            evaluate_retrieval(queries, database, k, metric, eval_triples, eval_seed, threads);
        write_report(std::cout, report);
        std::cout << "seed: " << eval_seed << "\n";
        if (!eval_hist_out.empty()) {
            std::ofstream out = open_out(eval_hist_out);
            write_histograms_tsv(out, report.histograms);
        }
        return 0;
    }

    if (*hist) {
        const CodeSet queries = load_codes(hist_queries);
        const CodeSet database = load_codes(hist_database);
        const MetricKind metric = resolve_metric(hist_metric, queries.kind);
        const DistanceHistograms h = distance_histograms(queries, database, metric);
        {
            std::ofstream out = open_out(hist_out);
            write_histograms_tsv(out, h);
        }
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.9g", overlap_area(h));
        std::cout << "overlap: " << buf << "\n";
        std::cout << "pos_pairs: " << h.pos_pairs << "\n";
        std::cout << "neg_pairs: " << h.neg_pairs << "\n";
        return 0;
    }

    if (*bench) {
        std::vector<BenchReport> reports;
        for (const std::string& kind_name : bench_kinds) {
            const BenchKind kind = bench_kind_from_string(kind_name);
            for (const uint32_t length : bench_lengths) {
                const BenchReport r = run_bench(kind, length, bench_db, bench_reps, bench_seed);
                std::cerr << to_string(kind) << " length " << length << ": median "
                          << r.median_seconds << " s/sweep\n";
                reports.push_back(r);
            }
        }
        std::cout << "# db_size: " << bench_db << ", reps: " << bench_reps
                  << ", seed: " << bench_seed << "\n";
        write_bench_table(std::cout, reports);
        return 0;
    }

    if (*convert) {
        const bool in_csv = ends_with(convert_in, ".csv");
        const bool in_trnh = ends_with(convert_in, ".trnh");
        const bool out_csv = ends_with(convert_out, ".csv");
        const bool out_trnh = ends_with(convert_out, ".trnh");
        if ((!in_csv && !in_trnh) || (!out_csv && !out_trnh)) {
            throw ParameterError("convert infers formats from .csv/.trnh extensions");
        }
        FeatureSet set = in_csv ? load_features_csv(convert_in) : load_features(convert_in);
        if (convert_classes != 0) {
            if (convert_classes < set.classes) {
                throw ParameterError("--classes " + std::to_string(convert_classes) +
                                     " is below the observed class count " +
                                     std::to_string(set.classes));
            }
            set.classes = convert_classes;
        }
        if (out_csv) {
            save_features_csv(set, convert_out);
        } else {
            save_features(set, convert_out);
        }
        std::cout << "wrote " << convert_out << ": " << set.count << " samples, " << set.bits
                  << " bits, " << set.classes << " classes\n";
        return 0;
    }

    return static_cast<int>(ErrorCode::Usage);
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return static_cast<int>(e.code());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return static_cast<int>(ErrorCode::Internal);
    }
}
