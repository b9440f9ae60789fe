#ifndef DYNALEARN_SERIALIZE_HPP
#define DYNALEARN_SERIALIZE_HPP

#include <iosfwd>
#include <string>

#include "dynalearn/machine.hpp"
#include "dynalearn/trainer.hpp"

namespace dynalearn {

/// Versioned plain-text machine format: a fixed header (arch, M, N, tau,
/// transfer, current_in_hidden, bounds, parameter count) followed by one
/// parameter per line in the order u, beta, v row-major, b. Values are
/// written with 17 significant digits so the round trip is value-exact.
void save_machine(const Machine& m, std::ostream& out);
void save_machine(const Machine& m, const std::string& path);
Machine load_machine(std::istream& in);
Machine load_machine(const std::string& path);

/// Checkpoint file: metadata header (lambda, attempts, accepts, schedule
/// hash) followed by the machine serialization.
void save_checkpoint(const Checkpoint& ck, std::uint64_t schedule_hash, const std::string& path);
Checkpoint load_checkpoint(const std::string& path, std::uint64_t* schedule_hash = nullptr);

}  // namespace dynalearn

#endif
