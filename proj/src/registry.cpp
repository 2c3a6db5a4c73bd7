#include "muse/registry.hpp"

#include <algorithm>

#include "muse/errors.hpp"
#include "muse/hamming.hpp"
#include "muse/rs.hpp"

namespace muse {

using code::CodeSpec;
using code::ErrorModel;
using code::Form;

std::vector<std::string> builtin_codec_ids() {
    return {"muse7264", "muse7264sys", "muse144133", "muse8070", "muse8067",
            "hamming7264", "hamming7265", "rs144128", "rs8064", "rs4032"};
}

bool is_builtin_codec(const std::string& id) {
    auto ids = builtin_codec_ids();
    return std::find(ids.begin(), ids.end(), id) != ids.end();
}

code::CodeSpec builtin_muse_spec(const std::string& id) {
    CodeSpec s;
    s.name = id;
    if (id == "muse7264" || id == "muse7264sys") {
        s.n = 72;
        s.k = 64;
        s.rb = 8;
        s.m = 243;
        s.symbol_size = 1;
        s.error_model = ErrorModel::bidirectional;
        s.form = id == "muse7264sys" ? Form::systematic : Form::non_systematic;
        s.bit_assignment = code::sequential_assignment(72, 1);
    } else if (id == "muse144133") {
        s.n = 144;
        s.k = 133;
        s.rb = 11;
        s.m = 2005;
        s.symbol_size = 4;
        s.error_model = ErrorModel::bidirectional;
        s.form = Form::systematic;
        s.bit_assignment = code::sequential_assignment(144, 4);
    } else if (id == "muse8070") {
        s.n = 80;
        s.k = 70;
        s.rb = 10;
        s.m = 1005;
        s.symbol_size = 4;
        s.error_model = ErrorModel::bidirectional;
        s.form = Form::systematic;
        s.bit_assignment = code::sequential_assignment(80, 4);
    } else if (id == "muse8067") {
        s.n = 80;
        s.k = 67;
        s.rb = 13;
        s.m = 5621;
        s.symbol_size = 8;
        s.error_model = ErrorModel::unidirectional_0to1;
        s.form = Form::systematic;
        s.bit_assignment = code::stride_assignment(80, 8, 1);
        s.assignment_label = "stride-g1";
    } else {
        throw DomainError("no built-in MUSE spec named '" + id + "'");
    }
    s.validate();
    return s;
}

std::unique_ptr<code::Codec> make_codec(const std::string& id) {
    if (id.rfind("muse", 0) == 0) return std::make_unique<code::MuseCodec>(builtin_muse_spec(id));
    if (id == "hamming7264")
        return std::make_unique<baselines::HammingCode>(baselines::HammingCode::Kind::secded_72_64);
    if (id == "hamming7265")
        return std::make_unique<baselines::HammingCode>(baselines::HammingCode::Kind::sec_72_65);
    if (id == "rs144128")
        return std::make_unique<baselines::RsCode>(baselines::GaloisField::gf256(), 18, 16);
    if (id == "rs8064")
        return std::make_unique<baselines::RsCode>(baselines::GaloisField::gf256(), 10, 8);
    if (id == "rs4032")
        return std::make_unique<baselines::RsCode>(baselines::GaloisField::gf16(), 10, 8);
    throw DomainError("unknown codec id '" + id + "'");
}

} // namespace muse
