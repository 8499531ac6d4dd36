#include "riemstats/json_writer.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace riemstats {

std::string format_double(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

namespace {

void escape_string(std::string& out, const std::string& s) {
  out += '"';
  for (unsigned char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\b': out += "\\b"; break;
      case '\f': out += "\\f"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (c < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += static_cast<char>(c);
        }
    }
  }
  out += '"';
}

void indent(std::string& out, int depth) {
  out.append(static_cast<std::size_t>(depth) * 2, ' ');
}

}  // namespace

void JsonValue::push_back(JsonValue item) {
  if (kind_ != Kind::array) throw std::logic_error("push_back on non-array");
  items_.push_back(std::move(item));
}

void JsonValue::set(const std::string& key, JsonValue value) {
  if (kind_ != Kind::object) throw std::logic_error("set on non-object");
  members_.emplace_back(key, std::move(value));
}

void JsonValue::write(std::string& out, int depth) const {
  switch (kind_) {
    case Kind::null:
      out += "null";
      break;
    case Kind::boolean:
      out += bool_ ? "true" : "false";
      break;
    case Kind::integer:
      out += std::to_string(int_);
      break;
    case Kind::number:
      if (!std::isfinite(double_)) {
        throw std::invalid_argument("non-finite number in JSON output");
      }
      out += format_double(double_);
      break;
    case Kind::string:
      escape_string(out, string_);
      break;
    case Kind::array: {
      if (items_.empty()) {
        out += "[]";
        break;
      }
      // Arrays of scalars stay on one line; nested structures get one
      // element per line.
      bool nested = false;
      for (const auto& item : items_) {
        if (item.kind_ == Kind::array || item.kind_ == Kind::object) {
          nested = true;
          break;
        }
      }
      out += '[';
      for (std::size_t i = 0; i < items_.size(); ++i) {
        if (nested) {
          out += '\n';
          indent(out, depth + 1);
        }
        items_[i].write(out, depth + 1);
        if (i + 1 < items_.size()) out += nested ? "," : ", ";
      }
      if (nested) {
        out += '\n';
        indent(out, depth);
      }
      out += ']';
      break;
    }
    case Kind::object: {
      if (members_.empty()) {
        out += "{}";
        break;
      }
      out += '{';
      for (std::size_t i = 0; i < members_.size(); ++i) {
        out += '\n';
        indent(out, depth + 1);
        escape_string(out, members_[i].first);
        out += ": ";
        members_[i].second.write(out, depth + 1);
        if (i + 1 < members_.size()) out += ',';
      }
      out += '\n';
      indent(out, depth);
      out += '}';
      break;
    }
  }
}

std::string JsonValue::dump() const {
  std::string out;
  write(out, 0);
  out += '\n';
  return out;
}

}  // namespace riemstats
