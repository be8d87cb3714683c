#include <cstdio>
#include <exception>

#include "CLI11.hpp"
#include "commands.hpp"

using namespace qchan::cli;

int main(int argc, char** argv) {
    CLI::App app{"qchan: density-operator channel engine for teleportation and no-cloning checks"};
    app.require_subcommand(1);

    TeleportOptions teleport_opts;
    CLI::App* teleport = app.add_subcommand(
        "teleport", "teleport a qubit state through the channel and report both marginals");
    teleport->add_option("--state", teleport_opts.state, "named state or state document path")
        ->required();
    teleport->add_option("--format", teleport_opts.format, "text or json");
    teleport->add_option("--export-channel", teleport_opts.export_channel_path,
                         "write the teleportation channel document to this path");

    NocloneOptions noclone_opts;
    CLI::App* noclone = app.add_subcommand(
        "noclone", "hunt for clone witnesses against random structured channels");
    noclone->add_option("--instances", noclone_opts.instances, "number of random channels")
        ->required();
    noclone->add_option("--seed", noclone_opts.seed, "base seed; instance k uses seed+k")->required();
    noclone->add_option("--random-probes", noclone_opts.random_probes,
                        "random probes appended to the six Pauli eigenstates");
    noclone->add_option("--format", noclone_opts.format, "text or json");

    AuditOptions audit_opts;
    CLI::App* audit = app.add_subcommand(
        "audit", "audit the frame-ordering argument for a given input state and event pair");
    audit->add_option("--state", audit_opts.state, "named state or state document path")->required();
    audit->add_option("--eI", audit_opts.event_i, "measurement event as 't,x' (default 1,0)");
    audit->add_option("--eII", audit_opts.event_ii, "correction event as 't,x' (default 1.2,5)");
    audit->add_option("--format", audit_opts.format, "text or json");

    ChannelCheckOptions check_opts;
    CLI::App* check = app.add_subcommand(
        "channel-check", "certify a channel document: partition, trace preservation, positivity");
    check->add_option("file", check_opts.path, "channel document path")->required();
    check->add_option("--format", check_opts.format, "text or json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitInputError;
    }

    try {
        if (teleport->parsed()) return cmd_teleport(teleport_opts);
        if (noclone->parsed()) return cmd_noclone(noclone_opts);
        if (audit->parsed()) return cmd_audit(audit_opts);
        if (check->parsed()) return cmd_channel_check(check_opts);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitInputError;
    }
    return kExitInputError;
}
