#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <string>
#include <vector>

#include "decum/common.hpp"
#include "decum/economics/params.hpp"
#include "decum/io/csv.hpp"
#include "decum/numerics/pchip.hpp"
#include "decum/solver/grid.hpp"

namespace decum {

// Value and policy tables from one backward-induction run: per age, family
// status and homeowner flag over the wealth grid, plus the optimal housing
// decision at retirement per total-wealth node.
struct Solution {
    using Table = std::vector<std::vector<double>>;  // rows: ages, cols: grid nodes

    WealthGrid grid;
    int retirement_age = 0;
    int terminal_age = 0;
    int quad_order = 0;
    bool min_withdrawals = false;
    std::uint64_t config_hash = 0;

    // index [d][h]: d 0=single 1=couple, h 0=renter 1=homeowner
    std::array<std::array<Table, 2>, 2> value;  // ages t0..T
    std::array<std::array<Table, 2>, 2> alpha;  // ages t0..T-1
    std::array<std::array<Table, 2>, 2> delta;  // ages t0..T-1
    std::array<std::vector<double>, 2> h_star;  // per total-wealth grid node

    static int d_index(FamilyStatus d) { return d == FamilyStatus::Couple ? 1 : 0; }

    int years() const { return terminal_age - retirement_age; }
    std::size_t age_row(int t) const {
        DECUM_REQUIRE(t >= retirement_age && t <= terminal_age, OutOfRange,
                      "Solution: age %d outside [%d, %d]", t, retirement_age, terminal_age);
        return static_cast<std::size_t>(t - retirement_age);
    }

    const std::vector<double>& value_row(int t, FamilyStatus d, bool h) const {
        return value[d_index(d)][h ? 1 : 0][age_row(t)];
    }
    const std::vector<double>& alpha_row(int t, FamilyStatus d, bool h) const {
        DECUM_REQUIRE(t < terminal_age, OutOfRange, "no policy at the terminal age");
        return alpha[d_index(d)][h ? 1 : 0][age_row(t)];
    }
    const std::vector<double>& delta_row(int t, FamilyStatus d, bool h) const {
        DECUM_REQUIRE(t < terminal_age, OutOfRange, "no policy at the terminal age");
        return delta[d_index(d)][h ? 1 : 0][age_row(t)];
    }

    Interpolant value_interp(int t, FamilyStatus d, bool h) const {
        return build_pchip(grid.nodes, value_row(t, d, h));
    }
    Interpolant alpha_interp(int t, FamilyStatus d, bool h) const {
        return build_pchip(grid.nodes, alpha_row(t, d, h));
    }
    Interpolant delta_interp(int t, FamilyStatus d, bool h) const {
        return build_pchip(grid.nodes, delta_row(t, d, h));
    }
};

namespace detail {

inline const char* d_token(int d) { return d == 1 ? "couple" : "single"; }
inline const char* h_token(int h) { return h == 1 ? "owner" : "renter"; }

inline void write_policy_table(const std::filesystem::path& path, const Solution& s,
                               const Solution::Table& table, int first_age) {
    csv::Writer w(path.string());
    std::vector<std::string> header{"age"};
    for (double x : s.grid.nodes) header.push_back(format_value(x));
    w.raw_row(header);
    for (std::size_t r = 0; r < table.size(); ++r) {
        std::vector<std::string> row{std::to_string(first_age + static_cast<int>(r))};
        for (double v : table[r]) row.push_back(format_value(v));
        w.raw_row(row);
    }
    w.close();
}

inline Solution::Table read_policy_table(const std::filesystem::path& path,
                                         std::vector<double>* nodes_out) {
    const csv::File f = csv::read(path.string());
    DECUM_REQUIRE(f.header.size() >= 2 && f.header[0] == "age", IoError,
                  "%s: expected 'age' header", path.string().c_str());
    if (nodes_out) {
        nodes_out->clear();
        for (std::size_t i = 1; i < f.header.size(); ++i)
            nodes_out->push_back(csv::parse_double(f.header[i], path.string(), 1));
    }
    Solution::Table t;
    int lineno = 1;
    for (const auto& row : f.rows) {
        ++lineno;
        DECUM_REQUIRE(row.size() == f.header.size(), IoError, "%s line %d: wrong field count",
                      path.string().c_str(), lineno);
        std::vector<double> vals;
        vals.reserve(row.size() - 1);
        for (std::size_t i = 1; i < row.size(); ++i)
            vals.push_back(csv::parse_double(row[i], path.string(), lineno));
        t.push_back(std::move(vals));
    }
    return t;
}

}  // namespace detail

inline void save_solution(const Solution& s, const std::filesystem::path& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    DECUM_REQUIRE(!ec, IoError, "cannot create output directory '%s'", dir.string().c_str());

    {
        std::ofstream meta(dir / "metadata.txt");
        DECUM_REQUIRE(meta.good(), IoError, "cannot write metadata in '%s'", dir.string().c_str());
        meta << "format_version 1\n";
        meta << "config_hash " << strprintf("%016llx", static_cast<unsigned long long>(s.config_hash)) << "\n";
        meta << "retirement_age " << s.retirement_age << "\n";
        meta << "terminal_age " << s.terminal_age << "\n";
        meta << "quad_order " << s.quad_order << "\n";
        meta << "min_withdrawals " << (s.min_withdrawals ? 1 : 0) << "\n";
        meta << "grid_nodes " << s.grid.size() << "\n";
        meta << "wmax_data " << format_value(s.grid.wmax_data) << "\n";
    }

    for (int d = 0; d < 2; ++d) {
        for (int h = 0; h < 2; ++h) {
            const std::string suffix = std::string(detail::d_token(d)) + "_" + detail::h_token(h) + ".csv";
            detail::write_policy_table(dir / ("value_" + suffix), s, s.value[d][h], s.retirement_age);
            detail::write_policy_table(dir / ("alpha_" + suffix), s, s.alpha[d][h], s.retirement_age);
            detail::write_policy_table(dir / ("delta_" + suffix), s, s.delta[d][h], s.retirement_age);
        }
        csv::Writer w((dir / (std::string("H_star_") + detail::d_token(d) + ".csv")).string());
        w.row("total_wealth", "H_star");
        for (std::size_t j = 0; j < s.h_star[static_cast<std::size_t>(d)].size(); ++j)
            w.row(s.grid.nodes[j], s.h_star[static_cast<std::size_t>(d)][j]);
        w.close();
    }
}

inline Solution load_solution(const std::filesystem::path& dir) {
    Solution s;
    {
        std::ifstream meta(dir / "metadata.txt");
        DECUM_REQUIRE(meta.good(), IoError, "cannot open '%s/metadata.txt'", dir.string().c_str());
        std::map<std::string, std::string> kv;
        std::string key, val;
        while (meta >> key >> val) kv[key] = val;
        DECUM_REQUIRE(kv.count("format_version") && kv["format_version"] == "1", IoError,
                      "unsupported solution format in '%s'", dir.string().c_str());
        s.config_hash = std::stoull(kv.at("config_hash"), nullptr, 16);
        s.retirement_age = std::stoi(kv.at("retirement_age"));
        s.terminal_age = std::stoi(kv.at("terminal_age"));
        s.quad_order = std::stoi(kv.at("quad_order"));
        s.min_withdrawals = kv.at("min_withdrawals") == "1";
        s.grid.wmax_data = std::stod(kv.at("wmax_data"));
    }

    for (int d = 0; d < 2; ++d) {
        for (int h = 0; h < 2; ++h) {
            const std::string suffix = std::string(detail::d_token(d)) + "_" + detail::h_token(h) + ".csv";
            s.value[d][h] = detail::read_policy_table(dir / ("value_" + suffix), &s.grid.nodes);
            s.alpha[d][h] = detail::read_policy_table(dir / ("alpha_" + suffix), nullptr);
            s.delta[d][h] = detail::read_policy_table(dir / ("delta_" + suffix), nullptr);
        }
        const csv::File f = csv::read((dir / (std::string("H_star_") + detail::d_token(d) + ".csv")).string());
        s.h_star[static_cast<std::size_t>(d)].clear();
        int lineno = 1;
        for (const auto& row : f.rows) {
            ++lineno;
            DECUM_REQUIRE(row.size() == 2, IoError, "H_star file: wrong field count at line %d", lineno);
            s.h_star[static_cast<std::size_t>(d)].push_back(csv::parse_double(row[1], "H_star", lineno));
        }
    }
    return s;
}

}  // namespace decum
