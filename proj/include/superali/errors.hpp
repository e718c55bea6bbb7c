#pragma once

#include <stdexcept>
#include <string>

namespace superali {

class error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Operands live over different generator tables.
class table_mismatch_error : public error {
public:
  using error::error;
};

/// Matrix formats (m|n) differ, or a block has the wrong shape.
class format_mismatch_error : public error {
public:
  using error::error;
};

/// A parity-homogeneous value was required.
class parity_error : public error {
public:
  using error::error;
};

class not_invertible_error : public error {
public:
  using error::error;
};

/// Operands live on different superdomains.
class domain_mismatch_error : public error {
public:
  using error::error;
};

class parse_error : public error {
public:
  using error::error;
};

/// A documented precondition was violated.
class precondition_error : public error {
public:
  using error::error;
};

} // namespace superali
