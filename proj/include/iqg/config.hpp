#pragma once

#include <fstream>
#include <map>
#include <sstream>

#include "iqg/cartan.hpp"

namespace iqg {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/** One verification run: the Cartan datum, the embedding parameters,
 *  the case selection, and the output target. */
struct RunConfig {
    std::vector<std::vector<int>> pairing;
    std::map<int, std::string> varsigma_text;  // 1-based row -> expression
    bool serre_on = true;
    int degree_cap = 12;
    std::vector<std::string> cases;  // empty means every catalog entry
    std::string output;              // empty means stdout

    CartanDatum datum() const { return build_datum(pairing); }

    IParams params(const CartanDatum& d) const {
        IParams p = default_params(d);
        p.serre_on = serre_on;
        for (const auto& [row, text] : varsigma_text) {
            if (row < 1 || row > d.rank())
                throw ConfigError("varsigma index " + std::to_string(row) + " out of range");
            try {
                p.varsigma[row - 1] = RatFunc::parse(text);
            } catch (const std::invalid_argument& e) {
                throw ConfigError("varsigma." + std::to_string(row) + ": " + e.what());
            }
        }
        return p;
    }
};

namespace detail {

inline std::string config_trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

}  // namespace detail

/** Parse the line-oriented run description.  Each line is blank, a
 *  `#` comment, or `key = value` with keys
 *    row       one pairing-matrix row as integers, repeated rank times
 *    varsigma.N  parameter expression for the N-th index (1-based)
 *    serre_mode  on|off
 *    degree_cap  positive integer
 *    cases       all, or a comma-separated list of catalog ids
 *    output      report path
 *  Errors carry the 1-based line number. */
inline RunConfig parse_config(std::istream& in, const std::string& origin = "config") {
    RunConfig cfg;
    std::string line;
    int lineno = 0;
    auto fail = [&](const std::string& msg) -> void {
        throw ConfigError(origin + ":" + std::to_string(lineno) + ": " + msg);
    };
    while (std::getline(in, line)) {
        ++lineno;
        std::string s = detail::config_trim(line);
        if (s.empty() || s[0] == '#') continue;
        size_t eq = s.find('=');
        if (eq == std::string::npos) fail("expected key = value");
        std::string key = detail::config_trim(s.substr(0, eq));
        std::string value = detail::config_trim(s.substr(eq + 1));
        if (key.empty()) fail("missing key");
        if (key == "row") {
            std::istringstream vs(value);
            std::vector<int> row;
            int x;
            while (vs >> x) row.push_back(x);
            if (!vs.eof()) fail("row entries must be integers");
            if (row.empty()) fail("empty pairing row");
            cfg.pairing.push_back(std::move(row));
        } else if (key.rfind("varsigma.", 0) == 0) {
            std::string idx = key.substr(9);
            int row = 0;
            try {
                size_t used = 0;
                row = std::stoi(idx, &used);
                if (used != idx.size()) throw std::invalid_argument(idx);
            } catch (const std::exception&) {
                fail("bad varsigma index '" + idx + "'");
            }
            if (value.empty()) fail("empty varsigma expression");
            if (!cfg.varsigma_text.emplace(row, value).second)
                fail("duplicate varsigma." + idx);
        } else if (key == "serre_mode") {
            if (value == "on")
                cfg.serre_on = true;
            else if (value == "off")
                cfg.serre_on = false;
            else
                fail("serre_mode must be on or off");
        } else if (key == "degree_cap") {
            try {
                size_t used = 0;
                cfg.degree_cap = std::stoi(value, &used);
                if (used != value.size()) throw std::invalid_argument(value);
            } catch (const std::exception&) {
                fail("degree_cap must be an integer");
            }
            if (cfg.degree_cap < 1) fail("degree_cap must be positive");
        } else if (key == "cases") {
            cfg.cases.clear();
            if (value != "all") {
                std::istringstream vs(value);
                std::string item;
                while (std::getline(vs, item, ',')) {
                    item = detail::config_trim(item);
                    if (item.empty()) fail("empty case id");
                    cfg.cases.push_back(item);
                }
                if (cfg.cases.empty()) fail("empty case list");
            }
        } else if (key == "output") {
            cfg.output = value;
        } else {
            fail("unknown key '" + key + "'");
        }
    }
    if (cfg.pairing.empty()) throw ConfigError(origin + ": no pairing rows given");
    try {
        build_datum(cfg.pairing);
    } catch (const CartanError& e) {
        throw ConfigError(origin + ": " + e.what());
    }
    return cfg;
}

inline RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file " + path);
    return parse_config(in, path);
}

}  // namespace iqg
