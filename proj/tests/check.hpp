#pragma once

#include "doctest.h"
#include "hyper/error.hpp"

namespace hyper::testing {

/// Code of the hyper::Error thrown by fn; fails the test if none is thrown.
inline Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected hyper::Error");
  return Errc::MalformedInput;
}

}  // namespace hyper::testing
