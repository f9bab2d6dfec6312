#include <sstream>

#include "support/algebras.hpp"
#include "support/catchext.hpp"

using namespace iqg;
using namespace iqg::testsupport;

namespace {

RunConfig parse_text(const std::string& text) {
    std::istringstream in(text);
    return parse_config(in, "test");
}

std::string parse_failure(const std::string& text) {
    try {
        parse_text(text);
    } catch (const ConfigError& e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST_CASE("run description parsing") {
    RunConfig cfg = parse_text(
        "# heading comment\n"
        "\n"
        "row = 2 -1\n"
        "row = -1 2\n"
        "varsigma.2 = q^3\n"
        "serre_mode = off\n"
        "degree_cap = 9\n"
        "cases = thm42, lemma41\n"
        "output = out.txt\n");
    CHECK(cfg.pairing == std::vector<std::vector<int>>{{2, -1}, {-1, 2}});
    CHECK(cfg.varsigma_text == std::map<int, std::string>{{2, "q^3"}});
    CHECK_FALSE(cfg.serre_on);
    CHECK(cfg.degree_cap == 9);
    CHECK(cfg.cases == std::vector<std::string>{"thm42", "lemma41"});
    CHECK(cfg.output == "out.txt");

    CartanDatum d = cfg.datum();
    CHECK(d.summary() == "[2,-1;-1,2]");
    IParams p = cfg.params(d);
    CHECK_FALSE(p.serre_on);
    CHECK(p.varsigma[0] == qpow(-1));
    CHECK(p.varsigma[1] == qpow(3));
}

TEST_CASE("defaults") {
    RunConfig cfg = parse_text("row = 2 -1\nrow = -1 2\ncases = all\n");
    CHECK(cfg.serre_on);
    CHECK(cfg.degree_cap == 12);
    CHECK(cfg.cases.empty());
    CHECK(cfg.output.empty());
}

TEST_CASE("parse failures carry the line number") {
    CHECK(parse_failure("row = 2 -1\nfoo = 1\n") == "test:2: unknown key 'foo'");
    CHECK(parse_failure("row = 2 x\n") == "test:1: row entries must be integers");
    CHECK(parse_failure("row =\n") == "test:1: empty pairing row");
    CHECK(parse_failure("just words\n") == "test:1: expected key = value");
    CHECK(parse_failure("row = 2\nvarsigma.1 = q\nvarsigma.1 = q^2\n") ==
          "test:3: duplicate varsigma.1");
    CHECK(parse_failure("varsigma.x = q\n") == "test:1: bad varsigma index 'x'");
    CHECK(parse_failure("serre_mode = maybe\n") == "test:1: serre_mode must be on or off");
    CHECK(parse_failure("degree_cap = 0\n") == "test:1: degree_cap must be positive");
    CHECK(parse_failure("degree_cap = big\n") == "test:1: degree_cap must be an integer");
    CHECK(parse_failure("cases =\n") == "test:1: empty case list");
    CHECK(parse_failure("") == "test: no pairing rows given");
    CHECK(parse_failure("row = 2 -1\nrow = 0 2\n").find("not symmetric") != std::string::npos);
}

TEST_CASE("parameter expressions are validated late") {
    RunConfig cfg = parse_text("row = 2 -1\nrow = -1 2\nvarsigma.1 = q^\n");
    CartanDatum d = cfg.datum();
    CHECK_THROWS_AS(cfg.params(d), ConfigError);
    RunConfig out_of_range = parse_text("row = 2 -1\nrow = -1 2\nvarsigma.3 = q\n");
    CHECK_THROWS_AS(out_of_range.params(d), ConfigError);
    CHECK_THROWS_AS(load_config("/nonexistent/path.conf"), ConfigError);
}

TEST_CASE("catalog expansion") {
    CHECK(catalog_ids() ==
          std::vector<std::string>{"lemma31", "thm32", "prop33", "eq11", "prop34", "thm35",
                                   "prop36", "thm37", "thm42", "lemma41", "lemma43", "thm44",
                                   "thm45"});

    auto alg = make_algebra(a2());
    auto tasks = expand_catalog(*alg, {});
    CHECK(tasks.size() == 56);
    auto count = [&](const std::string& prefix) {
        size_t n = 0;
        for (const auto& t : tasks)
            if (t.id.rfind(prefix, 0) == 0) ++n;
        return n;
    };
    CHECK(count("lemma31[") == 2);
    CHECK(count("thm32[") == 8);
    CHECK(count("prop33[") == 18);
    CHECK(count("eq11[") == 2);
    CHECK(count("prop34[") == 2);
    CHECK(count("thm42[") == 2);
    CHECK(count("lemma41[") == 8);
    CHECK(count("lemma43[") == 4);
    CHECK(count("thm44[") == 2);
    CHECK(count("thm45[") == 2);
    CHECK(tasks[0].id == "lemma31[i=1,nmax=4]");

    /* selection keeps catalog order regardless of how it is written */
    auto subset = expand_catalog(*alg, {"thm42", "lemma31"});
    REQUIRE(subset.size() == 4);
    CHECK(subset[0].id == "lemma31[i=1,nmax=4]");
    CHECK(subset[2].id == "thm42[i=1,j=2]");

    CHECK_THROWS_AS(expand_catalog(*alg, {"thm99"}), std::invalid_argument);

    /* the heavy order-two family is dropped where the order outgrows
     * the budget, never silently mislabeled */
    auto g = make_algebra(g2());
    CHECK(expand_catalog(*g, {"prop36"}).size() == 1);
    CHECK(expand_catalog(*g, {"thm44"}).size() == 1);
    CHECK(expand_catalog(*g, {"prop34"}).size() == 2);
}

TEST_CASE("case execution and determinism") {
    auto alg = make_algebra(a2());
    auto once = run_cases(expand_catalog(*alg, {"thm42", "lemma41"}), 1);
    auto again = run_cases(expand_catalog(*alg, {"thm42", "lemma41"}), 2);
    REQUIRE(once.size() == 10);
    REQUIRE(again.size() == 10);
    CHECK(all_verified(once));
    for (size_t k = 0; k < once.size(); ++k) {
        CHECK(once[k].id == again[k].id);
        CHECK(once[k].claim == again[k].claim);
        CHECK(once[k].outcome == again[k].outcome);
        CHECK(once[k].witness == again[k].witness);
        CHECK(once[k].datum == "[2,-1;-1,2]");
    }
    CHECK(once[0].id == "thm42[i=1,j=2]");
    CHECK(once[0].outcome == "verified");

    /* an oversized job count is clamped */
    auto wide = run_cases(expand_catalog(*alg, {"thm42"}), 64);
    CHECK(all_verified(wide));
}

TEST_CASE("failures become error records") {
    auto tight = make_algebra(a2(), true, 2);
    auto records = run_cases(expand_catalog(*tight, {"thm42"}), 1);
    REQUIRE(records.size() == 2);
    for (const auto& r : records) {
        CHECK(r.outcome == "error");
        CHECK(r.witness.find("exceeds the degree cap") != std::string::npos);
    }
    CHECK_FALSE(all_verified(records));
}

TEST_CASE("report lines") {
    CaseRecord r;
    r.id = "x[i=1]";
    r.claim = "x";
    r.datum = "[2]";
    r.params = "vs=q^-1;serre=on";
    r.outcome = "verified";
    r.witness = "a\tb\nc";
    r.elapsed_ms = 5;
    CHECK(format_record(r) ==
          "case=x[i=1]\tclaim=x\tdatum=[2]\tparams=vs=q^-1;serre=on\toutcome=verified\t"
          "elapsed_ms=5\twitness=a b c");

    CaseRecord big;
    big.outcome = "refuted";
    big.witness.assign(2100, 'x');
    std::string line = format_record(big);
    CHECK(line.size() < 2200);
    CHECK(line.substr(line.size() - 4) == "x...");
}
