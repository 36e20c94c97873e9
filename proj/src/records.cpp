#include "ptaa/records.hpp"

#include <cstdio>
#include <fstream>

#include "ptaa/errors.hpp"

namespace ptaa {

std::string fmt_g12(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 8);
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
                std::snprintf(buf, sizeof buf, "\\u%04x", c);
                out += buf;
            } else {
                out += c;
            }
        }
    }
    return out;
}

void json_object::add_string(const std::string& key, const std::string& value) {
    parts_.push_back("\"" + json_escape(key) + "\":\"" + json_escape(value) + "\"");
}

void json_object::add_number(const std::string& key, double value) {
    parts_.push_back("\"" + json_escape(key) + "\":" + fmt_g12(value));
}

void json_object::add_int(const std::string& key, long long value) {
    parts_.push_back("\"" + json_escape(key) + "\":" + std::to_string(value));
}

void json_object::add_bool(const std::string& key, bool value) {
    parts_.push_back("\"" + json_escape(key) + "\":" + (value ? "true" : "false"));
}

void json_object::add_null(const std::string& key) {
    parts_.push_back("\"" + json_escape(key) + "\":null");
}

void json_object::add_number_list(const std::string& key, const std::vector<double>& values) {
    std::string v = "[";
    for (size_t i = 0; i < values.size(); ++i) {
        if (i)
            v += ",";
        v += fmt_g12(values[i]);
    }
    v += "]";
    parts_.push_back("\"" + json_escape(key) + "\":" + v);
}

void json_object::add_pair_list(const std::string& key,
                                const std::vector<std::pair<int, int>>& values) {
    std::string v = "[";
    for (size_t i = 0; i < values.size(); ++i) {
        if (i)
            v += ",";
        v += "[" + std::to_string(values[i].first) + "," + std::to_string(values[i].second) + "]";
    }
    v += "]";
    parts_.push_back("\"" + json_escape(key) + "\":" + v);
}

void json_object::add_raw(const std::string& key, const std::string& json_fragment) {
    parts_.push_back("\"" + json_escape(key) + "\":" + json_fragment);
}

std::string json_object::str() const {
    std::string out = "{";
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i)
            out += ",";
        out += parts_[i];
    }
    out += "}";
    return out;
}

csv_writer::csv_writer(std::vector<std::string> header) : header_(std::move(header)) {}

void csv_writer::row(const std::vector<std::string>& cells) {
    if (cells.size() != header_.size())
        throw std::invalid_argument("csv row width does not match the header");
    rows_.push_back(cells);
}

void csv_writer::write_to(std::ostream& out) const {
    for (size_t i = 0; i < header_.size(); ++i) {
        if (i)
            out << ',';
        out << header_[i];
    }
    out << '\n';
    for (const auto& r : rows_) {
        for (size_t i = 0; i < r.size(); ++i) {
            if (i)
                out << ',';
            out << r[i];
        }
        out << '\n';
    }
}

void csv_writer::write_file(const std::string& path) const {
    std::ofstream f(path, std::ios::binary);
    if (!f)
        throw io_error("cannot open output file: " + path);
    write_to(f);
    if (!f.good())
        throw io_error("write failed: " + path);
}

} // namespace ptaa
