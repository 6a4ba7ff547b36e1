#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace twinsim {

enum class Errc {
    BadLength,
    UnknownNode,
    OverAllocated,
    LivelockGuard,
    AuthFailed,
    AlreadyRegistered,
    UnknownId,
    AuthRequired,
    NoEdgeCapacity,
    UnknownService,
    ContractRejected,
    UnknownAccessPoint,
    MigrationInProgress,
    InsufficientFunds,
    UnknownListing,
    NoPeering,
    UnknownAgent,
    InvalidSpec,
    ParseError,
    SchemaError,
    MissingArtifacts,
};

std::string_view errc_name(Errc c);

class Error : public std::runtime_error {
  public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const { return code_; }

  private:
    Errc code_;
};

} // namespace twinsim
