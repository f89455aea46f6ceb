#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "eventify/device.hpp"

namespace eventify {

struct Witness {
  enum class Reason { Crash, OutputViolation, NoImage, UnstableEdge };

  Word source;
  Word image;
  Reason reason = Reason::Crash;
  std::string detail;
};

std::string to_string(Witness::Reason reason);

/// Outcome of a simulation or stability check. A witness is present exactly
/// when the status is Fails.
class Verdict {
 public:
  enum class Status { Holds, HoldsUpToBound, Fails };

  static Verdict holds() { return Verdict(Status::Holds, 0, std::nullopt); }
  static Verdict holds_up_to(std::size_t bound) { return Verdict(Status::HoldsUpToBound, bound, std::nullopt); }
  static Verdict fails(Witness witness) { return Verdict(Status::Fails, 0, std::move(witness)); }

  Status status() const { return status_; }
  std::size_t bound() const { return bound_; }
  const std::optional<Witness>& witness() const { return witness_; }

  bool failed() const { return status_ == Status::Fails; }
  bool passed() const { return status_ != Status::Fails; }

 private:
  Verdict(Status status, std::size_t bound, std::optional<Witness> witness)
      : status_(status), bound_(bound), witness_(std::move(witness)) {}

  Status status_;
  std::size_t bound_;
  std::optional<Witness> witness_;
};

std::string to_string(Verdict::Status status);
std::string describe(const Verdict& verdict);

}  // namespace eventify
