#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "iqg/iqg.hpp"

namespace {

iqg::RunConfig default_config() {
    iqg::RunConfig cfg;
    cfg.pairing = {{2, -1}, {-1, 2}};
    return cfg;
}

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string item;
    while (std::getline(in, item, ',')) {
        size_t a = item.find_first_not_of(" \t");
        if (a == std::string::npos) continue;
        size_t b = item.find_last_not_of(" \t");
        out.push_back(item.substr(a, b - a + 1));
    }
    return out;
}

/* key=value arguments of the show subcommand */
std::map<std::string, std::string> parse_keys(const std::vector<std::string>& args) {
    std::map<std::string, std::string> kv;
    for (const std::string& a : args) {
        size_t eq = a.find('=');
        if (eq == std::string::npos || eq == 0)
            throw std::invalid_argument("expected key=value, got '" + a + "'");
        if (!kv.emplace(a.substr(0, eq), a.substr(eq + 1)).second)
            throw std::invalid_argument("duplicate key '" + a.substr(0, eq) + "'");
    }
    return kv;
}

int need_int(const std::map<std::string, std::string>& kv, const std::string& key) {
    auto it = kv.find(key);
    if (it == kv.end()) throw std::invalid_argument("missing key '" + key + "'");
    size_t used = 0;
    int v = std::stoi(it->second, &used);
    if (used != it->second.size())
        throw std::invalid_argument("bad integer for '" + key + "': " + it->second);
    return v;
}

int opt_int(const std::map<std::string, std::string>& kv, const std::string& key, int dflt) {
    return kv.count(key) ? need_int(kv, key) : dflt;
}

int check_index(int i, int rank) {
    if (i < 1 || i > rank)
        throw std::invalid_argument("index " + std::to_string(i) + " out of range 1.." +
                                    std::to_string(rank));
    return i - 1;
}

int run_verify(const iqg::RunConfig& cfg, int jobs) {
    iqg::CartanDatum d = cfg.datum();
    iqg::UAlgebra alg(d, cfg.params(d), cfg.degree_cap);
    std::vector<iqg::CaseRecord> records = iqg::run_cases(iqg::expand_catalog(alg, cfg.cases), jobs);

    std::ofstream file;
    if (!cfg.output.empty()) {
        file.open(cfg.output);
        if (!file) {
            std::cerr << "error: cannot open output file " << cfg.output << "\n";
            return 2;
        }
    }
    std::ostream& out = cfg.output.empty() ? std::cout : file;
    size_t ok = 0;
    for (const iqg::CaseRecord& r : records) {
        out << iqg::format_record(r) << "\n";
        if (r.outcome == "verified") ++ok;
    }
    std::cerr << ok << "/" << records.size() << " cases verified on " << d.summary() << "\n";
    return ok == records.size() ? 0 : 1;
}

int run_show(const iqg::RunConfig& cfg, const std::string& what,
             const std::vector<std::string>& args) {
    iqg::CartanDatum d = cfg.datum();
    iqg::UAlgebra alg(d, cfg.params(d), cfg.degree_cap);
    std::map<std::string, std::string> kv = parse_keys(args);

    if (what == "idiv") {
        int i = check_index(need_int(kv, "i"), d.rank());
        int n = need_int(kv, "n");
        iqg::Parity par = iqg::parity_of(1 - n);
        if (auto it = kv.find("parity"); it != kv.end()) {
            if (it->second == "even")
                par = iqg::Parity::even;
            else if (it->second == "odd")
                par = iqg::Parity::odd;
            else
                throw std::invalid_argument("parity must be even or odd");
        }
        std::cout << iqg::idivided_power(alg, i, n, par).to_string() << "\n";
    } else if (what == "tcomp") {
        int i = check_index(need_int(kv, "i"), d.rank());
        int n = need_int(kv, "n");
        int r = need_int(kv, "r");
        std::cout << iqg::coproduct_component(alg, i, n, r).to_string() << "\n";
    } else if (what == "serre") {
        int i = check_index(need_int(kv, "i"), d.rank());
        int j = check_index(need_int(kv, "j"), d.rank());
        int n = opt_int(kv, "n", 1);
        if (i == j) throw std::invalid_argument("need distinct indices");
        const int N = iqg::serre_order(alg, i, j, n);
        const iqg::Parity par = iqg::serre_parity(alg, i, j, n);
        iqg::UElement mid = alg.one();
        for (int t = 0; t < n; ++t) mid = mid * alg.B(j);
        iqg::UElement total = alg.zero();
        for (int r = 0; r <= N; ++r) {
            iqg::UElement part = iqg::idivided_power(alg, i, N - r, par) * mid *
                                 iqg::idivided_power(alg, i, r, iqg::Parity::even);
            if (r % 2) part = -part;
            std::cout << "r=" << r << ": " << part.to_string() << "\n";
            total += part;
        }
        std::cout << "total: " << total.to_string() << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verifier for quantum symmetric pair relations"};
    app.require_subcommand(1);

    auto* verify = app.add_subcommand("verify", "run the case catalog and print the report");
    std::string verify_config;
    verify->add_option("--config", verify_config, "run description file")->required();
    std::string cases_csv;
    verify->add_option("--cases", cases_csv, "comma-separated case ids (default: the config's)");
    int jobs = 1;
    verify->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1, 256));

    auto* show = app.add_subcommand("show", "print one element in normal form");
    std::string what;
    show->add_option("what", what, "idiv, tcomp, or serre")
        ->required()
        ->check(CLI::IsMember({"idiv", "tcomp", "serre"}));
    std::vector<std::string> keys;
    show->add_option("keys", keys, "key=value arguments");
    std::string show_config;
    show->add_option("--config", show_config, "run description file (default: rank-two simply-laced)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (verify->parsed()) {
            iqg::RunConfig cfg = iqg::load_config(verify_config);
            if (!cases_csv.empty()) cfg.cases = split_csv(cases_csv);
            return run_verify(cfg, jobs);
        }
        iqg::RunConfig cfg =
            show_config.empty() ? default_config() : iqg::load_config(show_config);
        return run_show(cfg, what, keys);
    } catch (const iqg::ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
