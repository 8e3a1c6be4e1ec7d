#pragma once

/// \file report_io.hpp
///
/// Byte-stable JSON and CSV emission.  Floats are always written as
/// 17-significant-digit scientific notation ("%.16e"); non-finite values
/// become JSON null and the bare words nan/inf/-inf in CSV.

#include <cmath>
#include <cstdio>
#include <string>
#include <string_view>
#include <vector>

namespace cm_atlas::io {

inline std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.16e", v);
    return buf;
}

inline std::string json_escape(std::string_view s) {
    std::string out;
    out.reserve(s.size() + 2);
    out.push_back('"');
    for (char ch : s) {
        const auto c = static_cast<unsigned char>(ch);
        switch (ch) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default:
                if (c < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", c);
                    out += buf;
                } else {
                    out.push_back(ch);
                }
        }
    }
    out.push_back('"');
    return out;
}

/// Streaming JSON writer with fixed two-space indentation.  Keys are emitted
/// in call order, so output order is whatever the caller writes.
class json_writer {
public:
    json_writer& begin_object() { return open('{'); }
    json_writer& end_object() { return close('}'); }
    json_writer& begin_array() { return open('['); }
    json_writer& end_array() { return close(']'); }

    json_writer& key(std::string_view k) {
        separate();
        out_ += json_escape(k);
        out_ += ": ";
        after_key_ = true;
        return *this;
    }

    json_writer& value(double v) { return raw(std::isfinite(v) ? format_double(v) : "null"); }
    json_writer& value(int v) { return raw(std::to_string(v)); }
    json_writer& value(long long v) { return raw(std::to_string(v)); }
    json_writer& value(std::size_t v) { return raw(std::to_string(v)); }
    json_writer& value(bool v) { return raw(v ? "true" : "false"); }
    json_writer& value(std::string_view v) { return raw(json_escape(v)); }
    json_writer& value(const char* v) { return value(std::string_view(v)); }
    json_writer& value(const std::string& v) { return value(std::string_view(v)); }
    json_writer& null() { return raw("null"); }

    template <class T>
    json_writer& field(std::string_view k, const T& v) {
        key(k);
        return value(v);
    }

    /// The document, newline-terminated.
    std::string str() const { return out_ + "\n"; }

private:
    struct level {
        bool empty = true;
    };

    void separate() {
        if (after_key_) {
            after_key_ = false;
            return;
        }
        if (!stack_.empty()) {
            if (!stack_.back().empty) out_.push_back(',');
            stack_.back().empty = false;
            out_.push_back('\n');
            out_.append(2 * stack_.size(), ' ');
        }
    }
    json_writer& raw(const std::string& token) {
        separate();
        out_ += token;
        return *this;
    }
    json_writer& open(char c) {
        separate();
        out_.push_back(c);
        stack_.push_back({});
        return *this;
    }
    json_writer& close(char c) {
        const bool was_empty = stack_.back().empty;
        stack_.pop_back();
        if (!was_empty) {
            out_.push_back('\n');
            out_.append(2 * stack_.size(), ' ');
        }
        out_.push_back(c);
        return *this;
    }

    std::string out_;
    std::vector<level> stack_;
    bool after_key_ = false;
};

/// RFC 4180 field: quoted when it contains a comma, quote, CR or LF.
inline std::string csv_field(std::string_view s) {
    if (s.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(s);
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out.push_back('"');
        out.push_back(ch);
    }
    out.push_back('"');
    return out;
}

/// CSV table with a mandatory header; records end in CRLF.
class csv_writer {
public:
    explicit csv_writer(std::vector<std::string> header) { row(header); }

    void row(const std::vector<std::string>& fields) {
        for (std::size_t i = 0; i < fields.size(); ++i) {
            if (i) out_.push_back(',');
            out_ += csv_field(fields[i]);
        }
        out_ += "\r\n";
    }

    const std::string& str() const { return out_; }

private:
    std::string out_;
};

}  // namespace cm_atlas::io
