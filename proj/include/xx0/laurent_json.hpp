// Copyright 2026 The xx0kit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

// JSON form of a Laurent polynomial: {"<exponent>": "<decimal coefficient>"}
// with keys in ascending numeric exponent order. Requires nlohmann/json.

#include <string>

#include "json.hpp"
#include "xx0/laurent.hpp"

namespace xx0 {

inline nlohmann::ordered_json laurent_to_json(const LaurentPoly& p) {
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    for (const auto& [e, c] : p.terms()) j[std::to_string(e)] = to_decimal(c);
    return j;
}

inline LaurentPoly laurent_from_json(const nlohmann::ordered_json& j) {
    if (!j.is_object()) throw DomainError("Laurent polynomial JSON must be an object");
    LaurentPoly p;
    for (const auto& [key, val] : j.items()) {
        std::size_t used = 0;
        int e = 0;
        try {
            e = std::stoi(key, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != key.size() || key.empty()) throw DomainError("bad exponent key '" + key + "'");
        if (!val.is_string()) throw DomainError("coefficient for exponent " + key + " must be a string");
        p.add_term(e, parse_decimal(val.get<std::string>()));
    }
    return p;
}

} // namespace xx0
