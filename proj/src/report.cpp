#include "relcharge/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace relcharge {

JsonValue& JsonValue::set(const std::string& key, JsonValue value) {
    if (kind_ != Kind::objekt) throw std::logic_error("set() on non-object json value");
    members_[key] = std::move(value);
    return *this;
}

JsonValue& JsonValue::push(JsonValue value) {
    if (kind_ != Kind::list) throw std::logic_error("push() on non-array json value");
    items_.push_back(std::move(value));
    return *this;
}

std::string format_double(double v) {
    if (!std::isfinite(v)) return v > 0 ? "1e999" : (v < 0 ? "-1e999" : "null");
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

namespace {

void write_escaped(std::string& out, const std::string& s) {
    out += '"';
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default: out += c;
        }
    }
    out += '"';
}

void add_indent(std::string& out, int indent) { out.append(2 * indent, ' '); }

}  // namespace

void JsonValue::write(std::string& out, int indent) const {
    switch (kind_) {
        case Kind::null: out += "null"; break;
        case Kind::boolean: out += bool_ ? "true" : "false"; break;
        case Kind::integer: out += std::to_string(int_); break;
        case Kind::real: out += format_double(real_); break;
        case Kind::string: write_escaped(out, string_); break;
        case Kind::list: {
            if (items_.empty()) {
                out += "[]";
                break;
            }
            out += "[\n";
            for (std::size_t i = 0; i < items_.size(); ++i) {
                add_indent(out, indent + 1);
                items_[i].write(out, indent + 1);
                if (i + 1 < items_.size()) out += ',';
                out += '\n';
            }
            add_indent(out, indent);
            out += ']';
            break;
        }
        case Kind::objekt: {
            if (members_.empty()) {
                out += "{}";
                break;
            }
            out += "{\n";
            std::size_t i = 0;
            for (const auto& [key, value] : members_) {
                add_indent(out, indent + 1);
                write_escaped(out, key);
                out += ": ";
                value.write(out, indent + 1);
                if (++i < members_.size()) out += ',';
                out += '\n';
            }
            add_indent(out, indent);
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

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file: " + path);
    f << content;
    if (!f) throw std::runtime_error("write failed: " + path);
}

}  // namespace relcharge
