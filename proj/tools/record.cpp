#include "record.hpp"

#include <cmath>
#include <cstdio>

namespace morrey::cli {

namespace {

void escape_json_into(const std::string& s, std::string& out) {
    out.push_back('"');
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                    out += buf;
                } else {
                    out.push_back(c);
                }
        }
    }
    out.push_back('"');
}

void write_value(const Value& v, std::string& out) {
    struct Visitor {
        std::string& out;
        void operator()(std::nullptr_t) const { out += "null"; }
        void operator()(bool b) const { out += b ? "true" : "false"; }
        void operator()(std::int64_t i) const { out += std::to_string(i); }
        void operator()(double d) const {
            if (std::isfinite(d))
                out += format_number(d);
            else
                out += "null";  // JSON has no literal for inf/nan
        }
        void operator()(const std::string& s) const { escape_json_into(s, out); }
        void operator()(const Value::Array& a) const {
            out.push_back('[');
            for (size_t i = 0; i < a.size(); ++i) {
                if (i) out.push_back(',');
                write_value(a[i], out);
            }
            out.push_back(']');
        }
        void operator()(const Value::Object& o) const {
            out.push_back('{');
            bool first = true;
            for (const auto& [key, val] : o) {
                if (!first) out.push_back(',');
                first = false;
                escape_json_into(key, out);
                out.push_back(':');
                write_value(val, out);
            }
            out.push_back('}');
        }
    };
    std::visit(Visitor{out}, v.raw());
}

std::string csv_cell(const std::string& s) {
    if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char c : s) {
        if (c == '"') quoted += "\"\"";
        else quoted.push_back(c);
    }
    quoted.push_back('"');
    return quoted;
}

}  // namespace

std::string format_number(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return std::signbit(x) ? "-inf" : "inf";
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

std::string to_json(const Value& v) {
    std::string out;
    write_value(v, out);
    out.push_back('\n');
    return out;
}

std::string to_csv(const CsvTable& table) {
    std::string out;
    for (size_t i = 0; i < table.header.size(); ++i) {
        if (i) out.push_back(',');
        out += csv_cell(table.header[i]);
    }
    out.push_back('\n');
    for (const auto& row : table.rows) {
        for (size_t i = 0; i < row.size(); ++i) {
            if (i) out.push_back(',');
            out += csv_cell(row[i]);
        }
        out.push_back('\n');
    }
    return out;
}

}  // namespace morrey::cli
