#pragma once

// Internal helper: hand-rolled JSON emission for the tool's flat, fixed
// schemas. Not installed.

#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace eisq::detail {

inline std::string json_escape(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out;
}

class JsonObject {
public:
    JsonObject& raw(std::string_view key, std::string_view raw_json) {
        next(key);
        out_ << raw_json;
        return *this;
    }
    JsonObject& field(std::string_view key, bool v) { return raw(key, v ? "true" : "false"); }
    JsonObject& field(std::string_view key, long long v) { return raw(key, std::to_string(v)); }
    JsonObject& field(std::string_view key, int v) { return field(key, static_cast<long long>(v)); }
    JsonObject& field(std::string_view key, unsigned v) {
        return field(key, static_cast<long long>(v));
    }
    JsonObject& field(std::string_view key, double v) {
        std::ostringstream tmp;
        tmp << v;
        return raw(key, tmp.str());
    }
    JsonObject& field(std::string_view key, std::string_view v) {
        next(key);
        out_ << '"' << json_escape(v) << '"';
        return *this;
    }
    JsonObject& field(std::string_view key, const char* v) {
        return field(key, std::string_view(v));
    }
    JsonObject& null_field(std::string_view key) { return raw(key, "null"); }

    std::string str() const { return "{" + out_.str() + "}"; }

private:
    void next(std::string_view key) {
        if (!first_) out_ << ',';
        first_ = false;
        out_ << '"' << json_escape(key) << "\":";
    }

    std::ostringstream out_;
    bool first_ = true;
};

template <typename T>
std::string json_int_array(const std::vector<T>& values) {
    std::string out = "[";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(values[i]);
    }
    return out + "]";
}

inline std::string json_string_array(const std::vector<std::string>& values) {
    std::string out = "[";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ',';
        out += '"' + json_escape(values[i]) + '"';
    }
    return out + "]";
}

}  // namespace eisq::detail
