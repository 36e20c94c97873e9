#pragma once

#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace ptaa {

// canonical float rendering for every file and key: %.12g
std::string fmt_g12(double x);

std::string json_escape(const std::string& s);

// order-preserving flat JSON object writer
class json_object {
public:
    void add_string(const std::string& key, const std::string& value);
    void add_number(const std::string& key, double value);
    void add_int(const std::string& key, long long value);
    void add_bool(const std::string& key, bool value);
    void add_null(const std::string& key);
    void add_number_list(const std::string& key, const std::vector<double>& values);
    void add_pair_list(const std::string& key, const std::vector<std::pair<int, int>>& values);
    void add_raw(const std::string& key, const std::string& json_fragment);

    std::string str() const;

private:
    std::vector<std::string> parts_;
};

class csv_writer {
public:
    explicit csv_writer(std::vector<std::string> header);
    void row(const std::vector<std::string>& cells);
    void write_to(std::ostream& out) const;
    void write_file(const std::string& path) const; // throws io_error

private:
    std::vector<std::string> header_;
    std::vector<std::vector<std::string>> rows_;
};

} // namespace ptaa
