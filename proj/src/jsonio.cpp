#include "braidqi/jsonio.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace braidqi {

std::string format_double(double v) {
    if (!std::isfinite(v)) throw std::invalid_argument("format_double: non-finite value");
    if (v == 0.0) return "0";
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

namespace {

void append_escaped(std::string& out, const std::string& s) {
    out += '"';
    for (const char c : s) {
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
                    out += c;
                }
        }
    }
    out += '"';
}

void write_value(std::string& out, const ordered_json& j, int depth) {
    const std::string pad(static_cast<size_t>(depth) * 2, ' ');
    const std::string pad_in(static_cast<size_t>(depth + 1) * 2, ' ');
    switch (j.type()) {
        case nlohmann::detail::value_t::null: out += "null"; break;
        case nlohmann::detail::value_t::boolean: out += j.get<bool>() ? "true" : "false"; break;
        case nlohmann::detail::value_t::number_integer:
            out += std::to_string(j.get<long long>());
            break;
        case nlohmann::detail::value_t::number_unsigned:
            out += std::to_string(j.get<unsigned long long>());
            break;
        case nlohmann::detail::value_t::number_float:
            out += format_double(j.get<double>());
            break;
        case nlohmann::detail::value_t::string: append_escaped(out, j.get<std::string>()); break;
        case nlohmann::detail::value_t::array: {
            if (j.empty()) {
                out += "[]";
                break;
            }
            out += "[\n";
            for (size_t i = 0; i < j.size(); ++i) {
                out += pad_in;
                write_value(out, j[i], depth + 1);
                if (i + 1 < j.size()) out += ',';
                out += '\n';
            }
            out += pad + "]";
            break;
        }
        case nlohmann::detail::value_t::object: {
            if (j.empty()) {
                out += "{}";
                break;
            }
            out += "{\n";
            size_t i = 0;
            for (auto it = j.begin(); it != j.end(); ++it, ++i) {
                out += pad_in;
                append_escaped(out, it.key());
                out += ": ";
                write_value(out, it.value(), depth + 1);
                if (i + 1 < j.size()) out += ',';
                out += '\n';
            }
            out += pad + "}";
            break;
        }
        default:
            throw std::invalid_argument("json_to_string: unsupported value type");
    }
}

}  // namespace

std::string json_to_string(const ordered_json& j) {
    std::string out;
    write_value(out, j, 0);
    out += '\n';
    return out;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
    std::string out = "\"";
    for (const char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += '"';
    return out;
}

ordered_json complex_matrix_to_json(const ComplexMatrix& m) {
    ordered_json rows = ordered_json::array();
    for (int i = 0; i < m.rows; ++i) {
        ordered_json row = ordered_json::array();
        for (int j = 0; j < m.cols; ++j) {
            row.push_back(ordered_json::array({m.at(i, j).real(), m.at(i, j).imag()}));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

ordered_json complex_vector_to_json(const std::vector<cxd>& v) {
    ordered_json out = ordered_json::array();
    for (const cxd& z : v) out.push_back(ordered_json::array({z.real(), z.imag()}));
    return out;
}

ordered_json real_vector_to_json(const std::vector<double>& v) {
    ordered_json out = ordered_json::array();
    for (double x : v) out.push_back(x);
    return out;
}

}  // namespace braidqi
