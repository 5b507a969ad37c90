#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "rsse/decoder.hpp"
#include "rsse/sim.hpp"

using namespace rsse;
namespace fs = std::filesystem;

namespace {

fs::path work_dir() {
    static fs::path dir = [] {
        fs::path d = fs::temp_directory_path() /
                     ("rscli_test_" + std::to_string(::getpid()));
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

int run(const std::string& args, const std::string& stdout_file = "") {
    std::string cmd = std::string(RSCLI_PATH) + " " + args;
    if (!stdout_file.empty()) cmd += " > " + stdout_file;
    cmd += " 2> " + (work_dir() / "stderr.txt").string();
    int status = std::system(cmd.c_str());
    REQUIRE(WIFEXITED(status));
    return WEXITSTATUS(status);
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void spit(const fs::path& p, const std::string& content) {
    std::ofstream out(p);
    out << content;
}

std::string word_line(const Word& w) {
    std::string s;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(w[i]);
    }
    return s + "\n";
}

}  // namespace

TEST_CASE("params reports the decoder parameter table") {
    fs::path out = work_dir() / "params.txt";
    REQUIRE(run("params --m 8 --n 255 --k 63", out.string()) == 0);
    std::string text = slurp(out);
    CHECK(text.find("tau 96\n") != std::string::npos);
    CHECK(text.find("l 2\n") != std::string::npos);
    CHECK(text.find("t_max[2] 107\n") != std::string::npos);

    REQUIRE(run("params --m 5 --n 31 --k 4", out.string()) == 0);
    text = slurp(out);
    CHECK(text.find("l 3\n") != std::string::npos);
    CHECK(text.find("t_max[3] 18\n") != std::string::npos);

    REQUIRE(run("params --m 4 --n 15 --k 8", out.string()) == 0);
    text = slurp(out);
    CHECK(text.find("l 1\n") != std::string::npos);
    CHECK(text.find("tau 3\n") != std::string::npos);
    CHECK(text.find("t_max[1] 3\n") != std::string::npos);
}

TEST_CASE("encode, corrupt, decode round trip") {
    RsCode code(Field(5), 31, 6);
    fs::path info = work_dir() / "info.txt";
    fs::path cw = work_dir() / "cw.txt";
    fs::path noisy = work_dir() / "noisy.txt";
    fs::path dec = work_dir() / "dec.txt";
    spit(info, "1 2 3 4 5 6\n");

    std::string flags = "--m 5 --n 31 --k 6";
    REQUIRE(run("encode " + flags + " --in " + info.string() + " --out " +
                cw.string()) == 0);
    Word expect = encode(code, Word{1, 2, 3, 4, 5, 6});
    REQUIRE(slurp(cw) == word_line(expect));

    // zero corruption: decode returns the codeword with t = 0
    REQUIRE(run("decode " + flags + " --in " + cw.string() + " --out " +
                dec.string()) == 0);
    CHECK(slurp(dec) == word_line(expect) + "OK t=0\n");

    // weight-tau corruption still decodes to the planted codeword
    REQUIRE(run("corrupt " + flags + " --mode fixed --t 12 --seed 3 --in " +
                cw.string() + " --out " + noisy.string()) == 0);
    CHECK(slurp(noisy) != slurp(cw));
    REQUIRE(run("decode " + flags + " --in " + noisy.string() + " --out " +
                dec.string()) == 0);
    CHECK(slurp(dec) == word_line(expect) + "OK t=12\n");

    // the BMD baseline agrees at this weight
    REQUIRE(run("decode " + flags + " --decoder bmd --in " + noisy.string() +
                " --out " + dec.string()) == 0);
    CHECK(slurp(dec) == word_line(expect) + "OK t=12\n");
}

TEST_CASE("decoding failure exits with code 2") {
    RsCode code(Field(5), 31, 6);
    // find a word the decoder provably rejects
    Word bad;
    TrialRng rng(99, 0);
    for (int trial = 0;; ++trial) {
        REQUIRE(trial < 100);
        Word y(code.n);
        for (Elem& v : y) v = static_cast<Elem>(rng.below(32));
        if (!decode(code, y).ok) {
            bad = y;
            break;
        }
    }
    fs::path in = work_dir() / "bad.txt";
    fs::path out = work_dir() / "bad_out.txt";
    spit(in, word_line(bad));
    REQUIRE(run("decode --m 5 --n 31 --k 6 --in " + in.string() + " --out " +
                out.string()) == 2);
    CHECK(slurp(out).find("FAILURE ") == 0);
}

TEST_CASE("malformed input and usage errors exit with code 1") {
    fs::path in = work_dir() / "malformed.txt";
    fs::path out = work_dir() / "malformed_out.txt";
    std::string flags = "--m 5 --n 31 --k 6";

    spit(in, "1 2 3\n");  // wrong length
    CHECK(run("decode " + flags + " --in " + in.string()) == 1);

    spit(in, "1 2 3 4 5 x\n");  // non-numeric symbol
    CHECK(run("encode " + flags + " --in " + in.string()) == 1);

    spit(in, "1 2 3 4 5 99\n");  // symbol out of range
    CHECK(run("encode " + flags + " --in " + in.string()) == 1);

    CHECK(run("params --m 5 --n 31") == 1);       // missing required flag
    CHECK(run("params --m 5 --n 30 --k 6") == 1); // 30 does not divide 31
    CHECK(run("nonsense") == 1);
    CHECK(run("--help", (work_dir() / "help.txt").string()) == 0);
}

TEST_CASE("bounds CSV matches the reference failure-bound values") {
    fs::path out = work_dir() / "bounds.csv";
    REQUIRE(run("bounds --m 5 --n 31 --k 6 --out " + out.string()) == 0);
    std::string text = slurp(out);
    CHECK(text.find("t,p_f_bound,p_e_bound,p_w_t") == 0);
    auto field = [&](const std::string& t) {
        size_t pos = text.find("\n" + t + ",");
        REQUIRE(pos != std::string::npos);
        return std::strtod(text.c_str() + pos + t.size() + 2, nullptr);
    };
    CHECK(field("13") == doctest::Approx(6.7e-11).epsilon(0.02));
    CHECK(field("14") == doctest::Approx(2.3e-06).epsilon(0.02));
    CHECK(field("15") == doctest::Approx(8.1e-02).epsilon(0.02));

    // l = 3 code: failure bound is reported unavailable
    REQUIRE(run("bounds --m 5 --n 31 --k 4 --out " + out.string()) == 0);
    CHECK(slurp(out).find("bound unavailable (l!=2)") != std::string::npos);
}

TEST_CASE("Monte-Carlo CSV is byte-stable for a fixed seed") {
    fs::path a = work_dir() / "mc_a.csv";
    fs::path b = work_dir() / "mc_b.csv";
    std::string cmd = "mc-failure --m 5 --n 31 --k 6 --N 2000 --t 15 --seed 42";
    REQUIRE(run(cmd + " --out " + a.string()) == 0);
    REQUIRE(run(cmd + " --workers 4 --out " + b.string()) == 0);
    std::string ta = slurp(a);
    REQUIRE(ta == slurp(b));
    CHECK(ta.find("code,decoder,t_or_p,N,N_c,N_e,N_f") == 0);
    CHECK(ta.find("RS(2^5;31,6),extended,15,2000,") != std::string::npos);

    fs::path q = work_dir() / "mc_q.csv";
    REQUIRE(run("mc-qsc --m 5 --n 31 --k 6 --N 500 --p 0.3 --seed 7 --out " +
                q.string()) == 0);
    std::string tq = slurp(q);
    CHECK(tq.find(",extended,") != std::string::npos);
    CHECK(tq.find(",bmd,") != std::string::npos);
}
