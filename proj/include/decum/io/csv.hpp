#pragma once

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "decum/common.hpp"

namespace decum::csv {

// Minimal numeric CSV support; every file the toolkit writes is plain
// comma-separated numbers/tokens with a single header line, no quoting.

inline std::vector<std::string> split(const std::string& line) {
    std::vector<std::string> out;
    std::string field;
    std::istringstream ss(line);
    while (std::getline(ss, field, ',')) out.push_back(field);
    if (!line.empty() && line.back() == ',') out.emplace_back();
    return out;
}

inline double parse_double(const std::string& s, const std::string& file, int lineno) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(s, &pos);
        DECUM_REQUIRE(pos == s.size(), IoError, "%s line %d: trailing characters in '%s'",
                      file.c_str(), lineno, s.c_str());
        return v;
    } catch (const std::invalid_argument&) {
        throw IoError(strprintf("%s line %d: expected a number, got '%s'", file.c_str(), lineno, s.c_str()));
    } catch (const std::out_of_range&) {
        throw IoError(strprintf("%s line %d: number out of range: '%s'", file.c_str(), lineno, s.c_str()));
    }
}

inline long parse_long(const std::string& s, const std::string& file, int lineno) {
    try {
        std::size_t pos = 0;
        const long v = std::stol(s, &pos);
        DECUM_REQUIRE(pos == s.size(), IoError, "%s line %d: trailing characters in '%s'",
                      file.c_str(), lineno, s.c_str());
        return v;
    } catch (const std::exception&) {
        throw IoError(strprintf("%s line %d: expected an integer, got '%s'", file.c_str(), lineno, s.c_str()));
    }
}

struct File {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

inline File read(const std::string& path) {
    std::ifstream in(path);
    DECUM_REQUIRE(in.good(), IoError, "cannot open '%s'", path.c_str());
    File f;
    std::string line;
    bool have_header = false;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        if (!have_header) {
            f.header = split(line);
            have_header = true;
        } else {
            f.rows.push_back(split(line));
        }
    }
    DECUM_REQUIRE(have_header, IoError, "'%s' has no header row", path.c_str());
    return f;
}

class Writer {
public:
    explicit Writer(const std::string& path) : path_(path), out_(path) {
        DECUM_REQUIRE(out_.good(), IoError, "cannot open '%s' for writing", path.c_str());
    }

    Writer& comment(const std::string& text) {
        out_ << "# " << text << "\n";
        return *this;
    }

    template <typename... Ts>
    Writer& row(const Ts&... fields) {
        bool first = true;
        ((out_ << (first ? "" : ",") << field_str(fields), first = false), ...);
        out_ << "\n";
        return *this;
    }

    Writer& raw_row(const std::vector<std::string>& fields) {
        for (std::size_t i = 0; i < fields.size(); ++i)
            out_ << (i ? "," : "") << fields[i];
        out_ << "\n";
        return *this;
    }

    void close() {
        out_.close();
        DECUM_REQUIRE(out_.good(), IoError, "write failed for '%s'", path_.c_str());
    }

private:
    static std::string field_str(double v) { return format_value(v); }
    static std::string field_str(int v) { return std::to_string(v); }
    static std::string field_str(long v) { return std::to_string(v); }
    static std::string field_str(std::size_t v) { return std::to_string(v); }
    static std::string field_str(const std::string& v) { return v; }
    static std::string field_str(const char* v) { return v; }

    std::string path_;
    std::ofstream out_;
};

}  // namespace decum::csv
