// skvm: a skill-composing virtual machine
// Copyright 2026 The skvm Authors.
// Licensed under the Apache License, Version 2.0.
#pragma once

#include <stdexcept>
#include <string>

namespace skvm {

/// Contract violations and malformed inputs. Execution outcomes that are part
/// of normal operation (halt, fuel exhaustion, runtime faults) are reported
/// through RunResult instead, see exec.hpp.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace skvm
