#include "commands.hpp"

#include <cstdio>
#include <stdexcept>
#include <string>
#include <vector>

#include "qchan/nocloning.hpp"
#include "qchan/teleport.hpp"
#include "serialize.hpp"

namespace qchan::cli {

namespace {

void require_format(const std::string& format) {
    if (format != "text" && format != "json") {
        throw std::invalid_argument("format must be 'text' or 'json'");
    }
}

void print_row(const std::string& key, const std::string& value) {
    std::printf("%-24s %s\n", key.c_str(), value.c_str());
}

std::string yesno(bool v) { return v ? "yes" : "no"; }

Event parse_event(const std::string& text, EventLabel label, const char* flag) {
    double t = 0.0, x = 0.0;
    if (std::sscanf(text.c_str(), "%lf,%lf", &t, &x) != 2) {
        throw std::invalid_argument(std::string(flag) + ": expected 't,x', got '" + text + "'");
    }
    return Event{label, t, x};
}

std::string order_name(EventOrder order) {
    switch (order) {
        case EventOrder::IBeforeII: return "I_before_II";
        case EventOrder::IIBeforeI: return "II_before_I";
        case EventOrder::Simultaneous: return "simultaneous";
    }
    return "?";
}

std::string interval_name(IntervalType type) {
    switch (type) {
        case IntervalType::Spacelike: return "spacelike";
        case IntervalType::Timelike: return "timelike";
        case IntervalType::Lightlike: return "lightlike";
    }
    return "?";
}

void write_file(const std::string& path, const std::string& content) {
    FILE* f = std::fopen(path.c_str(), "wb");
    if (!f) throw std::invalid_argument("cannot open '" + path + "' for writing");
    std::fwrite(content.data(), 1, content.size(), f);
    std::fclose(f);
}

}  // namespace

int cmd_teleport(const TeleportOptions& opts) {
    require_format(opts.format);
    const DensityOperator rho_c = resolve_state(opts.state);
    const TeleportReport report = run_teleport(rho_c);
    const bool boundary = report.b_matches_input && report.c_matches_input;

    if (!opts.export_channel_path.empty()) {
        write_file(opts.export_channel_path, structured_channel_json(teleport_channel()) + "\n");
    }

    if (opts.format == "json") {
        std::string out = "{";
        out += "\"command\":\"teleport\"";
        out += ",\"input_state\":" + matrix_json(report.input_state.mat());
        out += ",\"b_marginal\":" + matrix_json(report.b_marginal.mat());
        out += ",\"c_marginal\":" + matrix_json(report.c_marginal.mat());
        out += ",\"dist_b\":" + fmt_double(report.dist_b);
        out += ",\"dist_c\":" + fmt_double(report.dist_c);
        out += ",\"b_matches_input\":" + std::string(report.b_matches_input ? "true" : "false");
        out += ",\"c_matches_input\":" + std::string(report.c_matches_input ? "true" : "false");
        out += ",\"boundary_case\":" + std::string(boundary ? "true" : "false");
        out += "}";
        std::printf("%s\n", out.c_str());
    } else {
        std::printf("teleport report\n");
        print_row("input_state", matrix_text(report.input_state.mat()));
        print_row("b_marginal", matrix_text(report.b_marginal.mat()));
        print_row("c_marginal", matrix_text(report.c_marginal.mat()));
        print_row("dist_b", fmt_double(report.dist_b));
        print_row("dist_c", fmt_double(report.dist_c));
        print_row("b_matches_input", yesno(report.b_matches_input));
        print_row("c_matches_input", yesno(report.c_matches_input));
        print_row("boundary_case", yesno(boundary));
        if (boundary) {
            std::printf("note: the maximally mixed state is the fixed point of the C-marginal map;\n");
            std::printf("note: the clone condition on C degenerates to equality only here.\n");
        }
    }

    if (boundary) return kExitBoundary;
    return (report.b_matches_input && !report.c_matches_input) ? kExitExpected : kExitInputError;
}

int cmd_noclone(const NocloneOptions& opts) {
    require_format(opts.format);
    if (opts.instances < 1) throw std::invalid_argument("--instances must be at least 1");
    if (opts.random_probes < 0) throw std::invalid_argument("--random-probes must be non-negative");

    const SystemLayout layout = SystemLayout::qubit_cba();
    struct Row {
        std::uint64_t seed;
        int terms;
        double defect_b, defect_c, defect;
    };
    std::vector<Row> rows;
    rows.reserve(static_cast<std::size_t>(opts.instances));
    double min_defect = 1.0;
    for (int k = 0; k < opts.instances; ++k) {
        const std::uint64_t seed = opts.seed + static_cast<std::uint64_t>(k);
        Rng pick(seed);
        const int n_terms = 1 + static_cast<int>(pick.uniform_int(4));
        const auto [channel, rho_ba] = random_instance(layout, n_terms, seed);
        const CloneWitness w = clone_witness(channel, rho_ba, default_probes(seed, opts.random_probes),
                                             layout);
        rows.push_back({seed, n_terms, w.defect_b, w.defect_c, w.defect});
        if (w.defect < min_defect) min_defect = w.defect;
    }
    const bool all_witnessed = min_defect >= kCloneDefectThreshold;

    if (opts.format == "json") {
        std::string out = "{";
        out += "\"command\":\"noclone\"";
        out += ",\"seed\":" + std::to_string(opts.seed);
        out += ",\"instances\":" + std::to_string(opts.instances);
        out += ",\"random_probes\":" + std::to_string(opts.random_probes);
        out += ",\"defect_threshold\":" + fmt_double(kCloneDefectThreshold);
        out += ",\"results\":[";
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i) out += ",";
            out += "{\"seed\":" + std::to_string(rows[i].seed);
            out += ",\"terms\":" + std::to_string(rows[i].terms);
            out += ",\"defect_b\":" + fmt_double(rows[i].defect_b);
            out += ",\"defect_c\":" + fmt_double(rows[i].defect_c);
            out += ",\"defect\":" + fmt_double(rows[i].defect) + "}";
        }
        out += "]";
        out += ",\"min_defect\":" + fmt_double(min_defect);
        out += ",\"all_witnessed\":" + std::string(all_witnessed ? "true" : "false");
        out += "}";
        std::printf("%s\n", out.c_str());
    } else {
        std::printf("noclone witness table (%d instances, %d random probes each)\n", opts.instances,
                    opts.random_probes);
        std::printf("%-12s %-6s %-24s %-24s %-24s\n", "seed", "terms", "defect_b", "defect_c",
                    "defect");
        for (const Row& r : rows) {
            std::printf("%-12llu %-6d %-24s %-24s %-24s\n",
                        static_cast<unsigned long long>(r.seed), r.terms,
                        fmt_double(r.defect_b).c_str(), fmt_double(r.defect_c).c_str(),
                        fmt_double(r.defect).c_str());
        }
        print_row("min_defect", fmt_double(min_defect));
        print_row("all_witnessed", yesno(all_witnessed));
    }
    return all_witnessed ? kExitExpected : kExitInputError;
}

int cmd_audit(const AuditOptions& opts) {
    require_format(opts.format);
    const DensityOperator rho_c = resolve_state(opts.state);
    const Event event_i = parse_event(opts.event_i, EventLabel::EventI, "--eI");
    const Event event_ii = parse_event(opts.event_ii, EventLabel::EventII, "--eII");
    const ScenarioReport report = audit(rho_c, event_i, event_ii);
    const bool ok = report.verdict == Verdict::NoContradiction;

    if (opts.format == "json") {
        std::string out = "{";
        out += "\"command\":\"audit\"";
        out += ",\"input_state\":" + matrix_json(report.input_state.mat());
        out += ",\"event_i\":{\"t\":" + fmt_double(event_i.t) + ",\"x\":" + fmt_double(event_i.x) + "}";
        out += ",\"event_ii\":{\"t\":" + fmt_double(event_ii.t) + ",\"x\":" + fmt_double(event_ii.x) +
               "}";
        out += ",\"interval_type\":\"" + interval_name(report.interval_type) + "\"";
        out += ",\"rest_order\":\"" + order_name(report.rest_order) + "\"";
        out += ",\"boost_beta\":" +
               (report.boost_beta ? fmt_double(*report.boost_beta) : std::string("null"));
        out += ",\"boosted_order\":\"" + order_name(report.boosted_order) + "\"";
        if (report.window) {
            out += ",\"window\":[" + fmt_double(report.window->first) + "," +
                   fmt_double(report.window->second) + "]";
        } else {
            out += ",\"window\":null";
        }
        out += ",\"asserted_b_marginal\":" + matrix_json(report.asserted_b_marginal.mat());
        out += ",\"asserted_c_marginal\":" + matrix_json(report.asserted_c_marginal.mat());
        out += ",\"asserted_clone_pattern\":" +
               std::string(report.asserted_clone_pattern ? "true" : "false");
        out += ",\"actual_c_after\":" + matrix_json(report.actual_c_after.mat());
        out += ",\"dist_actual_c\":" + fmt_double(report.dist_actual_c);
        out += ",\"verdict\":\"" +
               std::string(ok ? "NoContradiction" : "ForbiddenPattern") + "\"";
        out += ",\"boundary_case\":" + std::string(report.boundary_case ? "true" : "false");
        out += ",\"signal\":[";
        for (int i = 0; i < 4; ++i) {
            if (i) out += ",";
            out += "{\"outcome\":\"" + report.signal[i].outcome_bits + "\",\"correction\":\"" +
                   report.signal[i].correction + "\"}";
        }
        out += "]";
        out += ",\"notes\":[";
        for (std::size_t i = 0; i < report.notes.size(); ++i) {
            if (i) out += ",";
            out += "\"" + json_escape(report.notes[i]) + "\"";
        }
        out += "]}";
        std::printf("%s\n", out.c_str());
    } else {
        std::printf("frame-ordering audit\n");
        print_row("input_state", matrix_text(report.input_state.mat()));
        print_row("event_i (t,x)", fmt_double(event_i.t) + "," + fmt_double(event_i.x));
        print_row("event_ii (t,x)", fmt_double(event_ii.t) + "," + fmt_double(event_ii.x));
        print_row("interval_type", interval_name(report.interval_type));
        print_row("rest_order", order_name(report.rest_order));
        print_row("boost_beta", report.boost_beta ? fmt_double(*report.boost_beta)
                                                  : std::string("none (no reordering frame exists)"));
        print_row("boosted_order", order_name(report.boosted_order));
        print_row("window", report.window ? "(" + fmt_double(report.window->first) + ", " +
                                                fmt_double(report.window->second) + ")"
                                          : std::string("absent"));
        print_row("asserted_b_marginal", matrix_text(report.asserted_b_marginal.mat()));
        print_row("asserted_c_marginal", matrix_text(report.asserted_c_marginal.mat()));
        print_row("asserted_clone_pattern", yesno(report.asserted_clone_pattern));
        print_row("actual_c_after", matrix_text(report.actual_c_after.mat()));
        print_row("dist_actual_c", fmt_double(report.dist_actual_c));
        print_row("verdict", ok ? "NoContradiction" : "ForbiddenPattern");
        print_row("boundary_case", yesno(report.boundary_case));
        for (int i = 0; i < 4; ++i) {
            print_row("signal " + report.signal[i].outcome_bits,
                      "correction " + report.signal[i].correction);
        }
        for (const std::string& note : report.notes) std::printf("note: %s\n", note.c_str());
    }
    return ok ? kExitExpected : kExitBoundary;
}

int cmd_channel_check(const ChannelCheckOptions& opts) {
    require_format(opts.format);
    FILE* f = std::fopen(opts.path.c_str(), "rb");
    if (!f) throw std::invalid_argument("cannot read channel file '" + opts.path + "'");
    std::string text;
    char buf[4096];
    std::size_t n;
    while ((n = std::fread(buf, 1, sizeof(buf), f)) > 0) text.append(buf, n);
    std::fclose(f);

    const KrausChannel channel = channel_from_document(nlohmann::json::parse(text));

    double partition_residual = 0.0;
    if (channel.is_structured()) {
        ComplexMatrix psum(channel.dim(), channel.dim());
        for (const StructuredKraus& term : channel.terms()) psum = psum + term.projector;
        partition_residual = max_abs_diff(psum, ComplexMatrix::identity(channel.dim()));
    }
    const TracePreservation tp = is_trace_preserving(channel);
    const double choi_min = hermitian_eigenvalues(choi(channel)).front();
    const bool cp = choi_min >= kChoiPsdSlack;

    if (opts.format == "json") {
        std::string out = "{";
        out += "\"command\":\"channel-check\"";
        out += ",\"dim\":" + std::to_string(channel.dim());
        out += ",\"terms\":" + std::to_string(channel.term_count());
        out += ",\"structured\":" + std::string(channel.is_structured() ? "true" : "false");
        out += ",\"partition_residual\":" +
               (channel.is_structured() ? fmt_double(partition_residual) : std::string("null"));
        out += ",\"tp_residual\":" + fmt_double(tp.residual);
        out += ",\"trace_preserving\":" + std::string(tp.preserving ? "true" : "false");
        out += ",\"choi_min_eigenvalue\":" + fmt_double(choi_min);
        out += ",\"completely_positive\":" + std::string(cp ? "true" : "false");
        out += "}";
        std::printf("%s\n", out.c_str());
    } else {
        std::printf("channel certification\n");
        print_row("dim", std::to_string(channel.dim()));
        print_row("terms", std::to_string(channel.term_count()));
        print_row("structured", yesno(channel.is_structured()));
        print_row("partition_residual",
                  channel.is_structured() ? fmt_double(partition_residual) : std::string("n/a"));
        print_row("tp_residual", fmt_double(tp.residual));
        print_row("trace_preserving", yesno(tp.preserving));
        print_row("choi_min_eigenvalue", fmt_double(choi_min));
        print_row("completely_positive", yesno(cp));
    }
    return cp ? kExitExpected : kExitInputError;
}

}  // namespace qchan::cli
