#pragma once

#include <gtest/gtest.h>

#include <functional>
#include <string>

#include "lnd/error.hpp"

namespace lnd::testing {

inline void expect_code(const std::function<void()>& f, const std::string& code) {
  try {
    f();
    ADD_FAILURE() << "expected error " << code;
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), code) << e.what();
  }
}

}  // namespace lnd::testing
