// Command-line front end: multiplier search, magic constants, file
// encode/decode, fault injection, and detection-rate campaigns.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "muse/container.hpp"
#include "muse/errors.hpp"
#include "muse/eval.hpp"
#include "muse/magic.hpp"
#include "muse/registry.hpp"
#include "muse/search.hpp"
#include "muse/spec_text.hpp"

namespace {

using namespace muse;

std::vector<std::uint8_t> read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError("cannot open '" + path + "'");
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file(const std::string& path, const void* data, std::size_t size) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw FormatError("cannot write '" + path + "'");
    out.write(static_cast<const char*>(data), std::streamsize(size));
}

code::CodeSpec load_spec(const std::string& spec_path, const std::string& codec_id) {
    if (!spec_path.empty()) {
        auto bytes = read_file(spec_path);
        return code::parse_spec_text(std::string(bytes.begin(), bytes.end()));
    }
    return builtin_muse_spec(codec_id);
}

std::vector<unsigned> parse_weights(const std::string& txt) {
    std::vector<unsigned> out;
    auto range = txt.find("..");
    if (range != std::string::npos) {
        unsigned lo = std::stoul(txt.substr(0, range));
        unsigned hi = std::stoul(txt.substr(range + 2));
        for (unsigned w = lo; w <= hi; ++w) out.push_back(w);
        return out;
    }
    std::stringstream ss(txt);
    std::string part;
    while (std::getline(ss, part, ',')) out.push_back(std::stoul(part));
    return out;
}

code::ErrorModel parse_model(const std::string& name) {
    if (name == "bidir" || name == "bidirectional") return code::ErrorModel::bidirectional;
    if (name == "unidir" || name == "unidirectional-0to1")
        return code::ErrorModel::unidirectional_0to1;
    if (name == "full" || name == "full-transition") return code::ErrorModel::full_transition;
    throw DomainError("unknown error model '" + name + "'");
}

int cmd_search(unsigned n, unsigned s, unsigned rb, const std::string& model,
               const std::string& assign, bool literal, bool strict, bool first,
               unsigned threads, const std::string& outdir) {
    search::SearchRequest req;
    req.n = n;
    req.s = s;
    req.rb = rb;
    req.model = parse_model(model);
    req.literal_range = literal;
    req.strict_bijective = strict;
    req.stop_at_first = first;
    req.threads = threads;
    if (assign.rfind("stride:", 0) == 0) {
        unsigned groups = std::stoul(assign.substr(7));
        req.assignment = code::stride_assignment(n, s, groups);
        req.assignment_label = "stride-g" + std::to_string(groups);
    } else if (assign != "seq" && assign != "sequential") {
        throw DomainError("unknown assignment '" + assign + "' (use seq or stride:<groups>)");
    }
    std::cout << "config: search n=" << n << " s=" << s << " rb=" << rb << " model=" << model
              << " assign=" << req.assignment_label << " literal-range=" << literal
              << " strict=" << strict << " stop=" << (first ? "first" : "all") << "\n";

    auto res = search::find_multipliers(req);
    std::cout << "scanned " << res.candidates_scanned << " candidates, remainders required "
              << res.remainders_required << ", found " << res.multipliers.size()
              << " multiplier(s)\n";
    if (res.multipliers.empty()) return 2;

    for (std::uint64_t m : res.multipliers) {
        code::CodeSpec spec;
        spec.n = n;
        spec.rb = rb;
        spec.k = n - rb;
        spec.m = m;
        spec.symbol_size = s;
        spec.error_model = req.model;
        spec.form = code::Form::systematic;
        spec.bit_assignment = res.assignment;
        spec.assignment_label = res.assignment_label;
        spec.name = "muse" + std::to_string(n) + "-" + std::to_string(n - rb) + "-m" +
                    std::to_string(m);
        spec.validate();
        std::string text = code::to_text(spec);
        std::cout << "m=" << m << "\n";
        if (!outdir.empty()) {
            std::filesystem::create_directories(outdir);
            std::string path = outdir + "/" + spec.name + ".spec";
            write_file(path, text.data(), text.size());
            std::cout << "wrote " << path << "\n";
        }
    }
    return 0;
}

int cmd_magic(std::uint64_t m, unsigned bits) {
    std::cout << "config: magic m=" << m << " max-dividend-bits=" << bits << "\n";
    MagicConstants magic = derive_magic(m, bits);
    std::cout << "inverse " << magic.inverse.to_decimal() << "\nshift " << magic.shift << "\n";
    return 0;
}

int cmd_encode(const std::string& spec_path, const std::string& codec_id, const std::string& in,
               const std::string& out) {
    code::CodeSpec spec = load_spec(spec_path, codec_id);
    code::MuseCodec codec(spec);
    std::cout << "config: encode code=" << spec.name << " (n=" << spec.n << " k=" << spec.k
              << " m=" << spec.m << ")\n";
    auto payload = read_file(in);
    auto file = container::encode(payload, codec, code::spec_fingerprint(spec));
    write_file(out, file.data(), file.size());
    std::cout << "encoded " << payload.size() << " bytes into "
              << (file.size() > 32 ? (file.size() - 32) / ((spec.n + 7) / 8) : 0)
              << " codewords (" << file.size() << " bytes)\n";
    return 0;
}

int cmd_decode(const std::string& spec_path, const std::string& codec_id, const std::string& in,
               const std::string& out, const std::string& sidecar_path) {
    code::CodeSpec spec = load_spec(spec_path, codec_id);
    code::MuseCodec codec(spec);
    std::cout << "config: decode code=" << spec.name << "\n";
    auto file = read_file(in);
    auto decoded = container::decode(file, codec, code::spec_fingerprint(spec));
    write_file(out, decoded.payload.data(), decoded.payload.size());

    std::ostringstream sc;
    for (const auto& e : decoded.sidecar) {
        const char* status = e.status == code::DecodeStatus::clean          ? "clean"
                             : e.status == code::DecodeStatus::corrected    ? "corrected"
                             : e.status == code::DecodeStatus::miscorrection_risk
                                 ? "miscorrection-risk"
                                 : "uncorrectable";
        sc << e.index << ' ' << status << '\n';
        if (!e.data_ok)
            std::cout << "codeword " << e.index << " (payload offset "
                      << e.index * (spec.k / 8) << "): uncorrectable\n";
    }
    if (!sidecar_path.empty()) {
        std::string s = sc.str();
        write_file(sidecar_path, s.data(), s.size());
    }
    std::cout << "decoded " << decoded.payload.size() << " bytes, corrected " << decoded.corrected
              << " codeword(s), uncorrectable " << decoded.uncorrectable << "\n";
    return decoded.uncorrectable ? 3 : 0;
}

int cmd_inject(const std::string& spec_path, const std::string& codec_id, const std::string& in,
               const std::string& out, unsigned bits, unsigned symbols, std::uint64_t seed,
               const std::string& log_path) {
    std::unique_ptr<code::Codec> codec;
    std::string name;
    if (!spec_path.empty() || codec_id.rfind("muse", 0) == 0) {
        code::CodeSpec spec = load_spec(spec_path, codec_id);
        name = spec.name;
        codec = std::make_unique<code::MuseCodec>(spec);
    } else {
        codec = make_codec(codec_id);
        name = codec_id;
    }
    std::cout << "config: inject code=" << name << " bits/cw=" << bits << " symbols/cw=" << symbols
              << " seed=" << seed << "\n";
    auto image = read_file(in);
    eval::FaultModel fm;
    fm.bits_per_codeword = bits;
    fm.symbols_per_codeword = symbols;
    auto rep = eval::inject_into_image(image, *codec, fm, seed);

    const auto& c = rep.counts;
    std::cout << "codewords " << rep.codewords << "\n"
              << "corrected " << c.corrected << "\nmiscorrected " << c.miscorrected << "\nsilent "
              << c.silent << "\ndetected-unused " << c.detected_unused
              << "\ndetected-contradiction " << c.detected_contradiction << "\ndetected-ambiguous "
              << c.detected_ambiguous << "\nround-trip "
              << (rep.roundtrip_ok ? "bit-exact" : "DAMAGED") << "\n";
    if (!out.empty()) write_file(out, rep.decoded.data(), rep.decoded.size());
    if (!log_path.empty()) {
        std::ostringstream os;
        for (const auto& e : rep.log)
            os << e.index << ' ' << int(e.status) << ' ' << int(e.detail) << ' ' << e.data_ok
               << '\n';
        std::string s = os.str();
        write_file(log_path, s.data(), s.size());
    }
    return 0;
}

int cmd_evaluate(const std::string& codec_id, const std::string& sweep,
                 const std::string& weights, std::uint64_t patterns, std::uint64_t errors,
                 std::uint64_t seed, const std::string& mode, unsigned threads, bool full_scale,
                 const std::string& out) {
    eval::CampaignConfig cfg;
    cfg.codec_id = codec_id;
    cfg.weights = parse_weights(weights);
    cfg.patterns_per_weight = full_scale ? 10000 : patterns;
    cfg.errors_per_pattern = full_scale ? 1000 : errors;
    cfg.seed = seed;
    cfg.threads = threads;
    cfg.mode = mode == "raw" ? eval::ClassificationMode::raw_alias
                             : eval::ClassificationMode::with_contradiction_check;

    std::string kind = sweep;
    if (kind == "auto") kind = make_codec(codec_id)->symbol_bits() > 1 ? "symbol" : "bit";
    std::cout << "config: evaluate codec=" << codec_id << " sweep=" << kind << " weights="
              << weights << " patterns=" << cfg.patterns_per_weight << " errors="
              << cfg.errors_per_pattern << " seed=" << seed << " mode=" << mode << "\n";

    auto rep = kind == "symbol" ? eval::run_symbol_error_sweep(cfg) : eval::run_bit_error_sweep(cfg);
    std::string csv = rep.to_csv();
    if (!out.empty()) {
        write_file(out, csv.data(), csv.size());
        std::cout << "wrote " << out << "\n";
    }
    for (const auto& row : rep.rows)
        std::printf("weight %u: checked %.2f%%  raw %.2f%%  half-rule %.2f%%  fig5 %.2f%%  (N=%llu)\n",
                    row.weight, 100 * row.rate_checked(), 100 * row.rate_raw(),
                    100 * row.rate_halfrule(), 100 * row.rate_fig5(),
                    (unsigned long long)row.counts.samples);
    std::printf("mean checked %.2f%%  half-rule %.2f%%  fig5 %.2f%%\n", 100 * rep.mean_checked(),
                100 * rep.mean_halfrule(), 100 * rep.mean_fig5());
    return 0;
}

int cmd_report(const std::vector<std::string>& inputs, const std::string& out) {
    std::ostringstream doc;
    doc << "detection-rate summary\n======================\n";
    for (const auto& path : inputs) {
        auto bytes = read_file(path);
        std::istringstream is(std::string(bytes.begin(), bytes.end()));
        std::string line;
        std::getline(is, line);  // header
        doc << "\n" << path << "\n";
        std::string codec;
        double sum_checked = 0, sum_fig5 = 0;
        unsigned rows = 0;
        while (std::getline(is, line)) {
            std::vector<std::string> f;
            std::stringstream ss(line);
            std::string part;
            while (std::getline(ss, part, ',')) f.push_back(part);
            if (f.size() < 16) continue;
            codec = f[0];
            doc << "  weight " << f[2] << ": samples " << f[3] << ", checked "
                << std::stod(f[11]) * 100 << "%, raw " << std::stod(f[10]) * 100
                << "%, half-rule " << std::stod(f[12]) * 100 << "%\n";
            sum_checked += std::stod(f[11]);
            sum_fig5 += std::stod(f[13]);
            ++rows;
        }
        if (rows)
            doc << "  " << codec << " mean: checked " << 100 * sum_checked / rows << "%, fig5 "
                << 100 * sum_fig5 / rows << "%\n";
    }
    std::string text = doc.str();
    if (!out.empty()) {
        write_file(out, text.data(), text.size());
        std::cout << "wrote " << out << "\n";
    } else {
        std::cout << text;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"MUSE arithmetic error-correcting code toolkit"};
    app.require_subcommand(1);

    // search
    auto* search_cmd = app.add_subcommand("search", "find valid code multipliers");
    unsigned n = 0, s = 1, rb = 0, threads = 0;
    std::string model = "bidir", assign = "seq", outdir;
    bool literal = false, strict = false, first = false;
    search_cmd->add_option("--n", n, "codeword bits")->required();
    search_cmd->add_option("--s", s, "symbol size in bits");
    search_cmd->add_option("--rb", rb, "redundancy budget in bits")->required();
    search_cmd->add_option("--model", model, "bidir | unidir | full");
    search_cmd->add_option("--assign", assign, "seq | stride:<groups>");
    search_cmd->add_flag("--literal-range", literal, "scan Algorithm-1 literal bounds");
    search_cmd->add_flag("--strict", strict, "require cross-direction distinctness");
    search_cmd->add_flag("--first", first, "stop at the first valid multiplier");
    search_cmd->add_option("--threads", threads, "worker threads (0 = auto)");
    search_cmd->add_option("--out", outdir, "directory for CodeSpec files");

    // magic
    auto* magic_cmd = app.add_subcommand("magic", "derive division magic constants");
    std::uint64_t magic_m = 0;
    unsigned magic_bits = 0;
    magic_cmd->add_option("--m", magic_m, "odd divisor")->required();
    magic_cmd->add_option("--bits", magic_bits, "max dividend bits")->required();

    // encode / decode
    auto* enc_cmd = app.add_subcommand("encode", "encode a file into codewords");
    auto* dec_cmd = app.add_subcommand("decode", "decode and correct a container");
    std::string spec_path, codec_id = "muse7264", in_path, out_path, sidecar, log_path;
    for (auto* c : {enc_cmd, dec_cmd}) {
        c->add_option("--spec", spec_path, "CodeSpec text file");
        c->add_option("--codec", codec_id, "built-in codec id");
        c->add_option("--in", in_path, "input file")->required();
        c->add_option("--out", out_path, "output file")->required();
    }
    dec_cmd->add_option("--sidecar", sidecar, "per-codeword status file");

    // inject
    auto* inj_cmd = app.add_subcommand("inject", "fault-injection round trip on a file");
    unsigned inj_bits = 0, inj_symbols = 0;
    std::uint64_t seed = 1;
    inj_cmd->add_option("--spec", spec_path, "CodeSpec text file");
    inj_cmd->add_option("--codec", codec_id, "built-in codec id");
    inj_cmd->add_option("--in", in_path, "input image")->required();
    inj_cmd->add_option("--out", out_path, "decoded output file");
    inj_cmd->add_option("--bits", inj_bits, "bit flips per codeword");
    inj_cmd->add_option("--symbols", inj_symbols, "symbol faults per codeword");
    inj_cmd->add_option("--seed", seed, "rng seed");
    inj_cmd->add_option("--log", log_path, "ground-truth log file");

    // evaluate
    auto* eval_cmd = app.add_subcommand("evaluate", "detection-rate campaign");
    std::string sweep = "auto", weights = "2..8", mode = "checked", csv_out;
    std::uint64_t patterns = 2000, errors = 200;
    bool full_scale = false;
    eval_cmd->add_option("--codec", codec_id, "built-in codec id")->required();
    eval_cmd->add_option("--sweep", sweep, "bit | symbol | auto");
    eval_cmd->add_option("--weights", weights, "e.g. 2..8 or 2,4,6");
    eval_cmd->add_option("--patterns", patterns, "position patterns per weight");
    eval_cmd->add_option("--errors", errors, "errors per pattern");
    eval_cmd->add_option("--seed", seed, "rng seed");
    eval_cmd->add_option("--mode", mode, "checked | raw");
    eval_cmd->add_option("--threads", threads, "worker threads (0 = auto)");
    eval_cmd->add_flag("--full-scale", full_scale, "paper-scale sample counts");
    eval_cmd->add_option("--out", csv_out, "CSV output path");

    // report
    auto* rep_cmd = app.add_subcommand("report", "summarize evaluation CSVs");
    std::vector<std::string> report_inputs;
    rep_cmd->add_option("--in", report_inputs, "CSV files")->required();
    rep_cmd->add_option("--out", out_path, "summary output (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*search_cmd)
            return cmd_search(n, s, rb, model, assign, literal, strict, first, threads, outdir);
        if (*magic_cmd) return cmd_magic(magic_m, magic_bits);
        if (*enc_cmd) return cmd_encode(spec_path, codec_id, in_path, out_path);
        if (*dec_cmd) return cmd_decode(spec_path, codec_id, in_path, out_path, sidecar);
        if (*inj_cmd)
            return cmd_inject(spec_path, codec_id, in_path, out_path, inj_bits, inj_symbols, seed,
                              log_path);
        if (*eval_cmd)
            return cmd_evaluate(codec_id, sweep, weights, patterns, errors, seed, mode, threads,
                                full_scale, csv_out);
        if (*rep_cmd) return cmd_report(report_inputs, out_path);
    } catch (const muse::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
