#pragma once

// Minimal JSON Schema checker for the subset the shipped schemas use:
// type, properties, required, items, enum, additionalProperties (boolean).
// Test-only; deliberately independent of the library under test.

#include <string>

#include <json.hpp>

namespace schema_check {

using Json = nlohmann::json;

inline bool type_matches(const std::string& type, const Json& value) {
    if (type == "object") {
        return value.is_object();
    }
    if (type == "array") {
        return value.is_array();
    }
    if (type == "string") {
        return value.is_string();
    }
    if (type == "integer") {
        return value.is_number_integer() || value.is_number_unsigned();
    }
    if (type == "number") {
        return value.is_number();
    }
    if (type == "boolean") {
        return value.is_boolean();
    }
    if (type == "null") {
        return value.is_null();
    }
    return false;
}

inline bool validate(const Json& schema, const Json& value, std::string& error,
                     const std::string& path = "$") {
    if (schema.contains("type") && !type_matches(schema["type"].get<std::string>(), value)) {
        error = path + ": expected type " + schema["type"].get<std::string>();
        return false;
    }
    if (schema.contains("enum")) {
        bool found = false;
        for (const Json& candidate : schema["enum"]) {
            found = found || candidate == value;
        }
        if (!found) {
            error = path + ": value not in enum";
            return false;
        }
    }
    if (schema.contains("required")) {
        for (const Json& key : schema["required"]) {
            if (!value.contains(key.get<std::string>())) {
                error = path + ": missing required key " + key.get<std::string>();
                return false;
            }
        }
    }
    if (schema.contains("properties") && value.is_object()) {
        for (auto it = schema["properties"].begin(); it != schema["properties"].end(); ++it) {
            if (value.contains(it.key()) &&
                !validate(it.value(), value[it.key()], error, path + "." + it.key())) {
                return false;
            }
        }
        if (schema.value("additionalProperties", true) == false) {
            for (auto it = value.begin(); it != value.end(); ++it) {
                if (!schema["properties"].contains(it.key())) {
                    error = path + ": unexpected key " + it.key();
                    return false;
                }
            }
        }
    }
    if (schema.contains("items") && value.is_array()) {
        size_t i = 0;
        for (const Json& item : value) {
            if (!validate(schema["items"], item, error, path + "[" + std::to_string(i) + "]")) {
                return false;
            }
            ++i;
        }
    }
    return true;
}

}  // namespace schema_check
