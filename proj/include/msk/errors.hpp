#pragma once

#include <stdexcept>

namespace msk {

/// Input that cannot be decoded: bad JSON shape, dangling references, unknown verbs.
class MalformedInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Well-formed input that the theory rejects, e.g. an inapplicable move or an
/// unrealizable barcode.  The message names the failed condition.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace msk
