#include "serialize.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace qchan::cli {

std::string fmt_double(double value) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default: out += c;
        }
    }
    return out;
}

std::string matrix_json(const ComplexMatrix& m) {
    std::string out = "[";
    for (int r = 0; r < m.rows(); ++r) {
        if (r) out += ",";
        out += "[";
        for (int c = 0; c < m.cols(); ++c) {
            if (c) out += ",";
            out += "[" + fmt_double(m(r, c).real()) + "," + fmt_double(m(r, c).imag()) + "]";
        }
        out += "]";
    }
    return out + "]";
}

namespace {

std::string entry_text(const Complex& z) {
    char buf[64];
    if (z.imag() == 0.0) {
        std::snprintf(buf, sizeof(buf), "%.10g", z.real());
    } else {
        std::snprintf(buf, sizeof(buf), "%.10g%+.10gi", z.real(), z.imag());
    }
    return buf;
}

}  // namespace

std::string matrix_text(const ComplexMatrix& m) {
    std::string out = "[";
    for (int r = 0; r < m.rows(); ++r) {
        if (r) out += "; ";
        for (int c = 0; c < m.cols(); ++c) {
            if (c) out += " ";
            out += entry_text(m(r, c));
        }
    }
    return out + "]";
}

namespace {

ComplexMatrix matrix_from_json(const nlohmann::json& rows) {
    if (!rows.is_array() || rows.empty()) {
        throw std::invalid_argument("matrix: expected a non-empty array of rows");
    }
    const int n_rows = static_cast<int>(rows.size());
    const int n_cols = static_cast<int>(rows[0].size());
    std::vector<Complex> entries;
    entries.reserve(static_cast<std::size_t>(n_rows) * n_cols);
    for (const auto& row : rows) {
        if (!row.is_array() || static_cast<int>(row.size()) != n_cols) {
            throw std::invalid_argument("matrix: ragged rows");
        }
        for (const auto& entry : row) {
            if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() ||
                !entry[1].is_number()) {
                throw std::invalid_argument("matrix: entries must be [re, im] pairs");
            }
            entries.emplace_back(entry[0].get<double>(), entry[1].get<double>());
        }
    }
    return ComplexMatrix(n_rows, n_cols, std::move(entries));
}

DensityOperator named_state(const std::string& name) {
    const double s = 1.0 / std::sqrt(2.0);
    if (name == "zero") return pure(StateVector::basis(2, 0));
    if (name == "one") return pure(StateVector::basis(2, 1));
    if (name == "plus") return pure(StateVector({s, s}));
    if (name == "minus") return pure(StateVector({s, -s}));
    if (name == "plus_i") return pure(StateVector({s, Complex{0.0, s}}));
    if (name == "minus_i") return pure(StateVector({s, Complex{0.0, -s}}));
    if (name == "mixed") return DensityOperator::maximally_mixed(2);
    throw std::invalid_argument("unknown state name '" + name +
                                "' (expected zero, one, plus, minus, plus_i, minus_i, mixed)");
}

}  // namespace

DensityOperator state_from_document(const nlohmann::json& doc) {
    if (!doc.is_object()) throw std::invalid_argument("state document: expected an object");
    if (!doc.contains("dim") || !doc["dim"].is_number_integer()) {
        throw std::invalid_argument("state document: missing integer field 'dim'");
    }
    if (!doc.contains("kind") || !doc["kind"].is_string()) {
        throw std::invalid_argument("state document: missing string field 'kind'");
    }
    const int dim = doc["dim"].get<int>();
    const std::string kind = doc["kind"].get<std::string>();
    if (kind == "named") {
        if (!doc.contains("name") || doc.contains("matrix")) {
            throw std::invalid_argument("state document: kind 'named' requires 'name' and no 'matrix'");
        }
        const DensityOperator rho = named_state(doc["name"].get<std::string>());
        if (rho.dim() != dim) throw std::invalid_argument("state document: dim does not match name");
        return rho;
    }
    if (kind == "matrix") {
        if (!doc.contains("matrix") || doc.contains("name")) {
            throw std::invalid_argument("state document: kind 'matrix' requires 'matrix' and no 'name'");
        }
        const ComplexMatrix m = matrix_from_json(doc["matrix"]);
        if (m.rows() != dim || m.cols() != dim) {
            throw std::invalid_argument("state document: matrix shape does not match dim");
        }
        return DensityOperator(m);  // density invariants enforced here
    }
    throw std::invalid_argument("state document: kind must be 'named' or 'matrix'");
}

DensityOperator resolve_state(const std::string& arg) {
    try {
        return named_state(arg);
    } catch (const std::invalid_argument&) {
        // not a name, treat as a file path
    }
    FILE* f = std::fopen(arg.c_str(), "rb");
    if (!f) {
        throw std::invalid_argument("state '" + arg + "' is neither a named state nor a readable file");
    }
    std::string text;
    char buf[4096];
    std::size_t n;
    while ((n = std::fread(buf, 1, sizeof(buf), f)) > 0) text.append(buf, n);
    std::fclose(f);
    return state_from_document(nlohmann::json::parse(text));
}

KrausChannel channel_from_document(const nlohmann::json& doc) {
    if (!doc.is_object()) throw std::invalid_argument("channel document: expected an object");
    if (!doc.contains("dim") || !doc["dim"].is_number_integer()) {
        throw std::invalid_argument("channel document: missing integer field 'dim'");
    }
    const int dim = doc["dim"].get<int>();

    if (doc.contains("terms")) {
        const auto& terms = doc["terms"];
        if (!terms.is_array() || terms.empty()) {
            throw std::invalid_argument("channel document: 'terms' must be a non-empty array");
        }
        std::vector<StructuredKraus> parsed;
        parsed.reserve(terms.size());
        for (const auto& term : terms) {
            if (!term.contains("unitary") || !term.contains("projector") || !term.contains("side")) {
                throw std::invalid_argument(
                    "channel document: each term needs 'unitary', 'projector', 'side'");
            }
            const std::string side = term["side"].get<std::string>();
            if (side != "UP" && side != "PU") {
                throw std::invalid_argument("channel document: side must be 'UP' or 'PU'");
            }
            ComplexMatrix u = matrix_from_json(term["unitary"]);
            ComplexMatrix p = matrix_from_json(term["projector"]);
            if (u.rows() != dim || p.rows() != dim) {
                throw std::invalid_argument("channel document: term dimension does not match dim");
            }
            parsed.push_back({std::move(u), std::move(p),
                              side == "UP" ? KrausSide::UnitaryFirst : KrausSide::ProjectorFirst});
        }
        return make_channel(std::move(parsed));
    }

    if (doc.contains("kraus")) {
        const auto& kraus = doc["kraus"];
        if (!kraus.is_array() || kraus.empty()) {
            throw std::invalid_argument("channel document: 'kraus' must be a non-empty array");
        }
        std::vector<ComplexMatrix> ops;
        ops.reserve(kraus.size());
        for (const auto& op : kraus) {
            ComplexMatrix v = matrix_from_json(op);
            if (v.rows() != dim) {
                throw std::invalid_argument("channel document: operator dimension does not match dim");
            }
            ops.push_back(std::move(v));
        }
        return KrausChannel::from_raw(std::move(ops));
    }

    throw std::invalid_argument("channel document: needs 'terms' (structured) or 'kraus' (raw)");
}

std::string structured_channel_json(const KrausChannel& channel) {
    std::string out = "{\"dim\":" + std::to_string(channel.dim()) + ",\"terms\":[";
    bool first = true;
    for (const StructuredKraus& term : channel.terms()) {
        if (!first) out += ",";
        first = false;
        out += "{\"unitary\":" + matrix_json(term.unitary) +
               ",\"projector\":" + matrix_json(term.projector) + ",\"side\":\"" +
               (term.side == KrausSide::UnitaryFirst ? "UP" : "PU") + "\"}";
    }
    return out + "]}";
}

}  // namespace qchan::cli
