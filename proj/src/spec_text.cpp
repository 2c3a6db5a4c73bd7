#include "muse/spec_text.hpp"

#include <map>
#include <sstream>

#include "muse/errors.hpp"

namespace muse::code {

namespace {

const char* model_name(ErrorModel m) {
    switch (m) {
        case ErrorModel::bidirectional: return "bidirectional";
        case ErrorModel::unidirectional_0to1: return "unidirectional-0to1";
        case ErrorModel::full_transition: return "full-transition";
    }
    return "?";
}

ErrorModel model_from(const std::string& s) {
    if (s == "bidirectional") return ErrorModel::bidirectional;
    if (s == "unidirectional-0to1") return ErrorModel::unidirectional_0to1;
    if (s == "full-transition") return ErrorModel::full_transition;
    throw FormatError("unknown error-model '" + s + "'");
}

} // namespace

std::string to_text(const CodeSpec& spec) {
    std::ostringstream os;
    os << "muse-code v1\n";
    os << "name: " << spec.name << "\n";
    os << "n: " << spec.n << "\n";
    os << "k: " << spec.k << "\n";
    os << "rb: " << spec.rb << "\n";
    os << "m: " << spec.m << "\n";
    os << "symbol-size: " << spec.symbol_size << "\n";
    os << "error-model: " << model_name(spec.error_model) << "\n";
    os << "form: " << (spec.form == Form::systematic ? "systematic" : "non-systematic") << "\n";
    os << "assignment: " << spec.assignment_label << "\n";
    os << "symbols:\n";
    for (unsigned i = 0; i < spec.bit_assignment.size(); ++i) {
        os << "  S" << i << ":";
        for (std::uint16_t b : spec.bit_assignment[i]) os << ' ' << b;
        os << "\n";
    }
    return os.str();
}

CodeSpec parse_spec_text(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    if (!std::getline(is, line) || line != "muse-code v1")
        throw FormatError("spec text: missing 'muse-code v1' header");

    CodeSpec spec;
    std::map<unsigned, std::vector<std::uint16_t>> symbols;
    bool in_symbols = false;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (line == "symbols:") {
            in_symbols = true;
            continue;
        }
        auto colon = line.find(':');
        if (colon == std::string::npos) throw FormatError("spec text: bad line '" + line + "'");
        std::string key = line.substr(0, colon);
        std::string value = line.substr(colon + 1);
        auto ltrim = [](std::string& s) { s.erase(0, s.find_first_not_of(" \t")); };
        ltrim(value);
        std::string tkey = key;
        ltrim(tkey);

        if (in_symbols && tkey.size() > 1 && tkey[0] == 'S') {
            unsigned idx = std::stoul(tkey.substr(1));
            std::istringstream vs(value);
            std::vector<std::uint16_t> bits;
            unsigned b;
            while (vs >> b) bits.push_back(std::uint16_t(b));
            symbols[idx] = std::move(bits);
            continue;
        }
        if (tkey == "name") spec.name = value;
        else if (tkey == "n") spec.n = std::stoul(value);
        else if (tkey == "k") spec.k = std::stoul(value);
        else if (tkey == "rb") spec.rb = std::stoul(value);
        else if (tkey == "m") spec.m = std::stoull(value);
        else if (tkey == "symbol-size") spec.symbol_size = std::stoul(value);
        else if (tkey == "error-model") spec.error_model = model_from(value);
        else if (tkey == "form") {
            if (value == "systematic") spec.form = Form::systematic;
            else if (value == "non-systematic") spec.form = Form::non_systematic;
            else throw FormatError("spec text: unknown form '" + value + "'");
        } else if (tkey == "assignment") spec.assignment_label = value;
        else throw FormatError("spec text: unknown key '" + tkey + "'");
    }

    if (!symbols.empty()) {
        spec.bit_assignment.resize(symbols.rbegin()->first + 1);
        for (auto& [idx, bits] : symbols) {
            if (idx >= spec.bit_assignment.size())
                throw FormatError("spec text: symbol index out of order");
            spec.bit_assignment[idx] = std::move(bits);
        }
    } else if (spec.assignment_label == "sequential") {
        spec.bit_assignment = sequential_assignment(spec.n, spec.symbol_size);
    } else {
        throw FormatError("spec text: non-sequential assignment requires explicit symbols");
    }
    spec.validate();
    return spec;
}

std::uint64_t spec_fingerprint(const CodeSpec& spec) {
    std::string text = to_text(spec);
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

} // namespace muse::code
