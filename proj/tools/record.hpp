#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

namespace morrey::cli {

/// Minimal JSON value for run records. Objects are std::map, so keys are
/// emitted in sorted order; doubles are printed with 17 significant digits.
/// Both properties keep repeated runs byte-identical and round-trippable.
class Value {
public:
    using Array = std::vector<Value>;
    using Object = std::map<std::string, Value>;

    Value() : v_(nullptr) {}
    Value(bool b) : v_(b) {}
    Value(int i) : v_(static_cast<std::int64_t>(i)) {}
    Value(std::int64_t i) : v_(i) {}
    Value(double d) : v_(d) {}
    Value(const char* s) : v_(std::string(s)) {}
    Value(std::string s) : v_(std::move(s)) {}
    Value(Array a) : v_(std::move(a)) {}
    Value(Object o) : v_(std::move(o)) {}

    static Value from_doubles(const std::vector<double>& xs) {
        Array a;
        a.reserve(xs.size());
        for (double x : xs) a.emplace_back(x);
        return Value(std::move(a));
    }

    const std::variant<std::nullptr_t, bool, std::int64_t, double, std::string, Array, Object>&
    raw() const {
        return v_;
    }

private:
    std::variant<std::nullptr_t, bool, std::int64_t, double, std::string, Array, Object> v_;
};

/// %.17g formatting shared by the JSON and CSV emitters.
std::string format_number(double x);

std::string to_json(const Value& v);

/// One CSV table, RFC-4180-style quoting. Cells are preformatted strings.
struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

std::string to_csv(const CsvTable& table);

}  // namespace morrey::cli
