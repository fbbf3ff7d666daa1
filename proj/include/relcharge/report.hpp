#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace relcharge {

// Report values serialized with sorted keys and %.17g floats so that
// identical runs produce byte-identical files.
class JsonValue {
public:
    JsonValue() : kind_(Kind::null) {}
    JsonValue(bool b) : kind_(Kind::boolean), bool_(b) {}
    JsonValue(int v) : kind_(Kind::integer), int_(v) {}
    JsonValue(long v) : kind_(Kind::integer), int_(v) {}
    JsonValue(long long v) : kind_(Kind::integer), int_(v) {}
    JsonValue(unsigned long v) : kind_(Kind::integer), int_(static_cast<long long>(v)) {}
    JsonValue(unsigned long long v) : kind_(Kind::integer), int_(static_cast<long long>(v)) {}
    JsonValue(double v) : kind_(Kind::real), real_(v) {}
    JsonValue(const char* s) : kind_(Kind::string), string_(s) {}
    JsonValue(std::string s) : kind_(Kind::string), string_(std::move(s)) {}

    static JsonValue object() {
        JsonValue v;
        v.kind_ = Kind::objekt;
        return v;
    }
    static JsonValue array() {
        JsonValue v;
        v.kind_ = Kind::list;
        return v;
    }

    JsonValue& set(const std::string& key, JsonValue value);
    JsonValue& push(JsonValue value);

    std::string dump() const;  // trailing newline included

private:
    enum class Kind { null, boolean, integer, real, string, list, objekt };

    void write(std::string& out, int indent) const;

    Kind kind_;
    bool bool_{false};
    long long int_{0};
    double real_{0};
    std::string string_;
    std::vector<JsonValue> items_;
    std::map<std::string, JsonValue> members_;
};

std::string format_double(double v);  // %.17g

void write_text_file(const std::string& path, const std::string& content);

}  // namespace relcharge
