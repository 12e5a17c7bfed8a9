#pragma once

// Minimal JSON-schema checker covering the subset the output schema uses:
// type (single or alternatives), enum, required, properties with optional
// additionalProperties: false, and homogeneous array items.

#include <json.hpp>
#include <string>

namespace schema {

using json = nlohmann::ordered_json;

inline bool type_matches(const json& inst, const std::string& t) {
  if (t == "object") return inst.is_object();
  if (t == "array") return inst.is_array();
  if (t == "string") return inst.is_string();
  if (t == "integer") return inst.is_number_integer();
  if (t == "number") return inst.is_number();
  if (t == "boolean") return inst.is_boolean();
  if (t == "null") return inst.is_null();
  return false;
}

// Empty string when `inst` conforms, otherwise a message naming the path.
inline std::string validate(const json& inst, const json& sch, const std::string& path = "$") {
  if (sch.contains("type")) {
    bool ok = false;
    if (sch["type"].is_array()) {
      for (const auto& t : sch["type"]) ok = ok || type_matches(inst, t.get<std::string>());
    } else {
      ok = type_matches(inst, sch["type"].get<std::string>());
    }
    if (!ok) return path + ": expected type " + sch["type"].dump() + ", got " + inst.dump();
  }
  if (sch.contains("enum")) {
    bool ok = false;
    for (const auto& v : sch["enum"]) ok = ok || (v == inst);
    if (!ok) return path + ": value " + inst.dump() + " not in enum " + sch["enum"].dump();
  }
  if (sch.contains("required")) {
    for (const auto& k : sch["required"]) {
      const auto key = k.get<std::string>();
      if (!inst.is_object() || !inst.contains(key))
        return path + ": missing required property '" + key + "'";
    }
  }
  if (sch.contains("properties") && inst.is_object()) {
    const bool closed =
        sch.contains("additionalProperties") && sch["additionalProperties"] == json(false);
    for (auto it = inst.begin(); it != inst.end(); ++it) {
      if (sch["properties"].contains(it.key())) {
        std::string err = validate(it.value(), sch["properties"][it.key()], path + "." + it.key());
        if (!err.empty()) return err;
      } else if (closed) {
        return path + ": unexpected property '" + it.key() + "'";
      }
    }
  }
  if (sch.contains("items") && inst.is_array()) {
    int i = 0;
    for (const auto& el : inst) {
      std::string err = validate(el, sch["items"], path + "[" + std::to_string(i++) + "]");
      if (!err.empty()) return err;
    }
  }
  return "";
}

}  // namespace schema
