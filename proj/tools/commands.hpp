#pragma once

#include <cstdint>
#include <string>

namespace qchan::cli {

// Exit code convention, shared by all commands:
//   0  the expected outcome (teleportation works, cloning fails, no contradiction)
//   1  input or usage error
//   2  boundary / degenerate case (maximally mixed fixed point)
inline constexpr int kExitExpected = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitBoundary = 2;

struct TeleportOptions {
    std::string state;
    std::string format = "text";
    std::string export_channel_path;  // optional: write the channel document here
};

struct NocloneOptions {
    int instances = 0;
    std::uint64_t seed = 0;
    int random_probes = 16;
    std::string format = "text";
};

struct AuditOptions {
    std::string state;
    std::string event_i = "1,0";    // "t,x"
    std::string event_ii = "1.2,5";
    std::string format = "text";
};

struct ChannelCheckOptions {
    std::string path;
    std::string format = "text";
};

int cmd_teleport(const TeleportOptions& opts);
int cmd_noclone(const NocloneOptions& opts);
int cmd_audit(const AuditOptions& opts);
int cmd_channel_check(const ChannelCheckOptions& opts);

}  // namespace qchan::cli
