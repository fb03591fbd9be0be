#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <random>
#include <sstream>

#include "cli.hpp"
#include "support/brute_force.hpp"

namespace fs = std::filesystem;
using fixfree::cli::run;

namespace {

struct Result {
    int code = -1;
    std::string out;
    std::string err;
};

Result invoke(std::vector<std::string> args, const std::string& stdin_text = "") {
    args.insert(args.begin(), "fixfree");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::istringstream in(stdin_text);
    std::ostringstream out, err;
    Result r;
    r.code = run(static_cast<int>(argv.size()), argv.data(), in, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

class TempDir {
public:
    TempDir() {
        std::random_device rd;
        path_ = fs::temp_directory_path() / ("fixfree_cli_" + std::to_string(rd()) + std::to_string(rd()));
        fs::create_directories(path_);
    }
    ~TempDir() { fs::remove_all(path_); }
    std::string file(const std::string& name, const std::string& content) const {
        const fs::path p = path_ / name;
        std::ofstream(p, std::ios::binary) << content;
        return p.string();
    }
    std::string path(const std::string& name) const { return (path_ / name).string(); }

private:
    fs::path path_;
};

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    return {std::istreambuf_iterator<char>(f), {}};
}

std::size_t count_lines(const std::string& s) { return std::count(s.begin(), s.end(), '\n'); }

class EnvGuard {
public:
    EnvGuard(const char* name, const char* value) : name_(name) {
        if (const char* old = std::getenv(name)) old_ = old;
        ::setenv(name, value, 1);
    }
    ~EnvGuard() {
        if (old_) ::setenv(name_, old_->c_str(), 1);
        else ::unsetenv(name_);
    }

private:
    const char* name_;
    std::optional<std::string> old_;
};

}  // namespace

TEST_CASE("construct emits the worked example and it verifies") {
    TempDir dir;
    const auto lengths = dir.file("v.txt", "0 0 2 1 2 6 20\n");
    const Result r = invoke({"construct", "--lengths", lengths});
    CHECK(r.code == 0);
    CHECK(count_lines(r.out) == 31);
    CHECK(r.out.rfind("w1\t000\nw2\t010\n", 0) == 0);
    const Result v = invoke({"verify", "--code", "-"}, r.out);
    CHECK(v.code == 0);
    CHECK(v.out == "fix-free: yes\n");
}

TEST_CASE("construct small tables and trace") {
    TempDir dir;
    const Result r = invoke({"construct", "--lengths", "-", "--trace"}, "1 1\n");
    CHECK(r.code == 0);
    CHECK(r.out == "w1\t0\nw2\t11\n");
    CHECK(r.err.find("t=1 case1") != std::string::npos);
    CHECK(count_lines(r.err) == 2);

    const auto out = dir.path("t.txt");
    CHECK(invoke({"construct", "--lengths", "-", "--out", out}, "0 2\n").code == 0);
    CHECK(slurp(out) == "w1\t00\nw2\t11\n");
}

TEST_CASE("construct reports an unmet condition") {
    const Result r = invoke({"construct", "--lengths", "-"}, "1 1 1\n");
    CHECK(r.code == 1);
    CHECK(r.out.empty());
    CHECK(r.err.rfind("error: condition-not-met:", 0) == 0);
    CHECK(r.err.find("S = 7/8") != std::string::npos);
    CHECK(r.err.find("3/4") != std::string::npos);
    CHECK(r.err.find("5/8") != std::string::npos);
    CHECK(r.err.find("sufficient, not necessary") != std::string::npos);
    CHECK(r.err.find("oracle") != std::string::npos);
}

TEST_CASE("construct length caps from flag and environment") {
    const std::string v = "0 0 0 0 0 1\n";
    CHECK(invoke({"construct", "--lengths", "-", "--max-len", "5"}, v).code == 1);
    CHECK(invoke({"construct", "--lengths", "-", "--max-len", "6"}, v).code == 0);
    {
        EnvGuard env("FIXFREE_MAX_LEN", "5");
        const Result r = invoke({"construct", "--lengths", "-"}, v);
        CHECK(r.code == 1);
        CHECK(r.err.rfind("error: length-cap-exceeded", 0) == 0);
        // The flag wins over the environment.
        CHECK(invoke({"construct", "--lengths", "-", "--max-len", "6"}, v).code == 0);
    }
    {
        EnvGuard env("FIXFREE_MAX_LEN", "lots");
        CHECK(invoke({"construct", "--lengths", "-"}, "1\n").code == 2);
    }
    // The default cap of 24 applies without flag or environment.
    const std::string long_v = "0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 1\n";
    CHECK(invoke({"construct", "--lengths", "-"}, long_v).code == 1);
    CHECK(invoke({"construct", "--lengths", "-", "--max-len", "0"}, "1\n").code == 2);
}

TEST_CASE("design examples") {
    TempDir dir;
    {
        const Result r = invoke({"design", "--dist", "-"}, "a\t0.5\nb\t0.5\n");
        CHECK(r.code == 0);
        CHECK(r.out.rfind("a\t00\nb\t11\n", 0) == 0);
        CHECK(r.out.find("# redundancy  1.000000") != std::string::npos);
        CHECK(r.out.find("1.678072") != std::string::npos);
    }
    {
        const auto table = dir.path("one.tsv");
        const Result r = invoke({"design", "--dist", "-", "--out", table, "--kv"}, "only\t1.0\n");
        CHECK(r.code == 0);
        CHECK(slurp(table) == "only\t0\n");
        CHECK(r.out.find("lengths=1\n") != std::string::npos);
        CHECK(r.out.find("redundancy=1") != std::string::npos);
    }
    {
        const Result r = invoke({"design", "--dist", "-"}, "a\t1.5\nb\t-0.5\n");
        CHECK(r.code == 2);
        CHECK(r.err.rfind("error: invalid-distribution", 0) == 0);
    }
    CHECK(invoke({"design", "--dist", "-"}, "a\tnope\n").code == 2);
    CHECK(invoke({"design", "--dist", "-"}, "a\t0.999999999\nb\t0.000000001\n").code == 1);
}

TEST_CASE("verify rejects codes that are not fix-free") {
    const Result r = invoke({"verify", "--code", "-"}, "a\t0\nb\t10\n");
    CHECK(r.code == 1);
    CHECK(r.out == "fix-free: no\n");
    CHECK(r.err == "error: not-fix-free: 0 is a suffix of 10\n");
    CHECK(invoke({"verify", "--code", "-"}, "a\t0\nb\tzz\n").code == 2);
}

TEST_CASE("oracle") {
    {
        const Result r = invoke({"oracle", "--lengths", "-"}, "1 2\n");
        CHECK(r.code == 1);
        CHECK(r.out == "no fix-free code exists\n");
        CHECK(r.err.rfind("error: not-exists", 0) == 0);
    }
    {
        const Result r = invoke({"oracle", "--lengths", "-"}, "1 1 1\n");
        CHECK(r.code == 0);
        CHECK(r.out.find("w1\t0\nw2\t11\nw3\t101\n") != std::string::npos);
    }
    {
        const Result r = invoke({"oracle", "--lengths", "-", "--max-nodes", "2"}, "0 1 2 4 6\n");
        CHECK(r.code == 1);
        CHECK(r.err.rfind("error: inconclusive", 0) == 0);
    }
    CHECK(invoke({"oracle", "--lengths", "-", "--max-len", "2"}, "0 0 1\n").code == 1);
    CHECK(invoke({"oracle", "--lengths", "-", "--max-len", "27"}, "1\n").code == 2);
}

TEST_CASE("encode and decode in both directions") {
    TempDir dir;
    const auto table = dir.file("abc.tsv", "a\t0\nb\t11\nc\t101\n");
    const auto msg = dir.file("msg.txt", "a b c a\n");
    const auto bits = dir.path("msg.fxf");
    CHECK(invoke({"encode", "--code", table, "--in", msg, "--out", bits}).code == 0);
    const std::string raw = slurp(bits);
    CHECK(raw.substr(0, 4) == "FXF1");
    CHECK(raw.size() == 13);
    CHECK(static_cast<unsigned char>(raw[11]) == 7);

    const Result fwd = invoke({"decode", "--code", table, "--in", bits});
    CHECK(fwd.code == 0);
    CHECK(fwd.out == "a b c a\n");
    const auto back = dir.path("back.txt");
    CHECK(invoke({"decode", "--code", table, "--in", bits, "--direction", "backward", "--out", back}).code == 0);
    CHECK(slurp(back) == slurp(msg));

    CHECK(invoke({"decode", "--code", table, "--in", bits, "--direction", "sideways"}).code == 2);

    const Result unknown = invoke({"encode", "--code", table, "--in", "-", "--out", bits}, "a z\n");
    CHECK(unknown.code == 1);
    CHECK(unknown.err.rfind("error: unknown-symbol", 0) == 0);

    // Dangling bits: encode with a, then decode against a table where a is longer.
    const auto other = dir.file("other.tsv", "a\t00\nb\t11\n");
    CHECK(invoke({"encode", "--code", table, "--in", "-", "--out", bits}, "a\n").code == 0);
    const Result dangling = invoke({"decode", "--code", other, "--in", bits});
    CHECK(dangling.code == 1);
    CHECK(dangling.err.rfind("error: decode", 0) == 0);

    const auto garbage = dir.file("garbage.fxf", "nope");
    CHECK(invoke({"decode", "--code", table, "--in", garbage}).code == 2);
    const auto not_ff = dir.file("bad.tsv", "a\t0\nb\t01\n");
    CHECK(invoke({"encode", "--code", not_ff, "--in", msg, "--out", bits}).code == 2);
}

TEST_CASE("designed tables round-trip message files byte for byte") {
    TempDir dir;
    const auto dist = dir.file("d.tsv", "e\t0.4\nt\t0.3\na\t0.2\nq\t0.1\n");
    const auto table = dir.path("d_code.tsv");
    REQUIRE(invoke({"design", "--dist", dist, "--out", table}).code == 0);
    std::mt19937_64 rng(7);
    const std::vector<std::string> symbols{"e", "t", "a", "q"};
    for (int trial = 0; trial < 20; ++trial) {
        std::string text;
        const std::size_t n = 1 + rng() % 30;
        for (std::size_t i = 0; i < n; ++i) text += (i ? " " : "") + symbols[rng() % 4];
        text += '\n';
        const auto msg = dir.file("m.txt", text);
        const auto bits = dir.path("m.fxf");
        REQUIRE(invoke({"encode", "--code", table, "--in", msg, "--out", bits}).code == 0);
        for (const char* direction : {"forward", "backward"}) {
            const auto out = dir.path("m.out");
            REQUIRE(invoke({"decode", "--code", table, "--in", bits, "--direction", direction, "--out", out}).code ==
                    0);
            CHECK(slurp(out) == text);
        }
    }
}

TEST_CASE("analyze") {
    TempDir dir;
    const auto dist = dir.file("d.tsv", "a\t0.75\nb\t0.25\n");
    {
        const Result r = invoke({"analyze", "--dist", dist, "--code", "-"}, "a\t0\nb\t11\n");
        CHECK(r.code == 0);
        CHECK(r.out.find("entropy     0.811278") != std::string::npos);
        CHECK(r.out.find("avg_length  1.250000") != std::string::npos);
        CHECK(r.out.find("fix-free    yes") != std::string::npos);
    }
    {
        const Result r = invoke({"analyze", "--dist", dist, "--code", "-"}, "a\t0\nb\t01\n");
        CHECK(r.code == 0);
        CHECK(r.out.find("fix-free    no") != std::string::npos);
    }
    CHECK(invoke({"analyze", "--dist", dist, "--code", "-"}, "a\t0\n").code == 2);
}

TEST_CASE("usage errors") {
    CHECK(invoke({}).code == 2);
    CHECK(invoke({"frobnicate"}).code == 2);
    CHECK(invoke({"construct"}).code == 2);
    CHECK(invoke({"construct", "--lengths", "/nonexistent/path/v.txt"}).code == 2);
    CHECK(invoke({"construct", "--lengths", "-"}, "1 x\n").code == 2);
    CHECK(invoke({"--help"}).code == 0);
}
