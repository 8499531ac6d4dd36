#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace riemstats {

/// Renders a double with 17 significant digits (round-trip exact), so that
/// repeated runs over identical inputs produce byte-identical output.
std::string format_double(double value);

/// Minimal JSON document builder. Objects preserve insertion order and
/// doubles go through format_double; NaN/Inf are rejected. This is an
/// emitter only -- parsing (in tests) uses nlohmann/json.
class JsonValue {
 public:
  JsonValue() : kind_(Kind::null) {}
  JsonValue(bool b) : kind_(Kind::boolean), bool_(b) {}
  JsonValue(int v) : kind_(Kind::integer), int_(v) {}
  JsonValue(long v) : kind_(Kind::integer), int_(v) {}
  JsonValue(long long v) : kind_(Kind::integer), int_(v) {}
  JsonValue(unsigned v) : kind_(Kind::integer), int_(v) {}
  JsonValue(unsigned long v)
      : kind_(Kind::integer), int_(static_cast<long long>(v)) {}
  JsonValue(unsigned long long v)
      : kind_(Kind::integer), int_(static_cast<long long>(v)) {}
  JsonValue(double v) : kind_(Kind::number), double_(v) {}
  JsonValue(const char* s) : kind_(Kind::string), string_(s) {}
  JsonValue(std::string s) : kind_(Kind::string), string_(std::move(s)) {}

  static JsonValue array() {
    JsonValue v;
    v.kind_ = Kind::array;
    return v;
  }
  static JsonValue object() {
    JsonValue v;
    v.kind_ = Kind::object;
    return v;
  }

  void push_back(JsonValue item);                     // arrays
  void set(const std::string& key, JsonValue value);  // objects

  /// Serializes with two-space indentation and a trailing newline.
  std::string dump() const;

 private:
  enum class Kind { null, boolean, integer, number, string, array, object };

  void write(std::string& out, int depth) const;

  Kind kind_;
  bool bool_ = false;
  long long int_ = 0;
  double double_ = 0.0;
  std::string string_;
  std::vector<JsonValue> items_;
  std::vector<std::pair<std::string, JsonValue>> members_;
};

}  // namespace riemstats
