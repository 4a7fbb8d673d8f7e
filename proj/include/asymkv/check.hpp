// Copyright (c) 2026 asymkv contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace asymkv {

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

namespace detail {
[[noreturn]] inline void fail(const char* expr, const std::string& msg) {
    throw Error(msg.empty() ? std::string(expr) : msg + " (" + expr + ")");
}
}  // namespace detail

}  // namespace asymkv

#define ASYMKV_CHECK(cond, msg)                        \
    do {                                               \
        if (!(cond)) {                                 \
            ::asymkv::detail::fail(#cond, (msg));      \
        }                                              \
    } while (0)
