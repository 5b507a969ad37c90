#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "rsse/bounds.hpp"
#include "rsse/decoder.hpp"
#include "rsse/sim.hpp"

namespace {

using namespace rsse;

struct CodeSpec {
    unsigned m = 0;
    std::string prim_poly_hex;
    unsigned n = 0;
    unsigned k = 0;

    RsCode build() const {
        uint32_t poly = 0;
        if (!prim_poly_hex.empty())
            poly = static_cast<uint32_t>(std::stoul(prim_poly_hex, nullptr, 16));
        return RsCode(Field(m, poly), n, k);
    }
};

void add_code_flags(CLI::App* cmd, CodeSpec& spec) {
    cmd->add_option("--m", spec.m, "extension degree, field is GF(2^m)")
        ->required();
    cmd->add_option("--prim-poly", spec.prim_poly_hex,
                    "primitive polynomial as hex bitmask (default per m)");
    cmd->add_option("--n", spec.n, "code length")->required();
    cmd->add_option("--k", spec.k, "code dimension")->required();
}

std::vector<Word> read_words(std::istream& in, unsigned expected_len,
                             uint32_t q) {
    std::vector<Word> words;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        Word w;
        long v;
        while (ls >> v) {
            if (v < 0 || v >= static_cast<long>(q))
                throw std::runtime_error("symbol out of range: " + std::to_string(v));
            w.push_back(static_cast<Elem>(v));
        }
        if (!ls.eof())
            throw std::runtime_error("malformed symbol in line: " + line);
        if (expected_len && w.size() != expected_len)
            throw std::runtime_error("expected " + std::to_string(expected_len) +
                                     " symbols, got " + std::to_string(w.size()));
        words.push_back(std::move(w));
    }
    return words;
}

void write_word(std::ostream& out, const Word& w) {
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) out << ' ';
        out << w[i];
    }
    out << '\n';
}

struct IoFiles {
    std::string in_path, out_path;
    std::ifstream fin;
    std::ofstream fout;
    std::istream* in = nullptr;
    std::ostream* out = nullptr;

    void open() {
        if (in_path.empty()) {
            in = &std::cin;
        } else {
            fin.open(in_path);
            if (!fin) throw std::runtime_error("cannot open " + in_path);
            in = &fin;
        }
        if (out_path.empty()) {
            out = &std::cout;
        } else {
            fout.open(out_path);
            if (!fout) throw std::runtime_error("cannot open " + out_path);
            out = &fout;
        }
    }
};

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6e", v);
    return buf;
}

void print_params(const RsCode& code) {
    DecoderParams p = decoder_params(code);
    std::cout << "n " << code.n << "\nk " << code.k << "\nq " << code.field.q()
              << "\nd " << code.d << "\ntau " << code.tau << "\nl " << p.l
              << "\nl_closed_form "
              << (code.k >= 2 ? std::to_string(l_closed_form(code.n, code.k))
                              : std::string("n/a"))
              << "\n";
    for (unsigned i = 1; i <= p.l; ++i)
        std::cout << "t_max[" << i << "] " << t_max_l(code.n, code.k, i) << "\n";
    for (unsigned i = 2; i <= p.l; ++i) {
        Ratio r = threshold_rate(code.n, i);
        std::cout << "R_th(" << i << ") " << r.num << "/" << r.den << " = "
                  << fmt(r.value()) << "\n";
    }
}

void sim_csv_header(std::ostream& out) {
    out << "code,decoder,t_or_p,N,N_c,N_e,N_f,rate_w,rate_f,rate_e,ci_low,ci_high,seed\n";
}

void sim_csv_row(std::ostream& out, const RsCode& code, const std::string& dec,
                 const std::string& t_or_p, const TrialReport& r,
                 const Interval& ci) {
    out << "RS(2^" << code.field.m() << ";" << code.n << "," << code.k << "),"
        << dec << "," << t_or_p << "," << r.trials << "," << r.n_correct << ","
        << r.n_error << "," << r.n_failure << "," << fmt(r.rate_word_error())
        << "," << fmt(r.rate_failure()) << "," << fmt(r.rate_error()) << ","
        << fmt(ci.low) << "," << fmt(ci.high) << "," << r.master_seed << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Reed-Solomon decoding beyond half the minimum distance via "
                 "syndrome extension and multi-sequence shift-register synthesis"};
    app.require_subcommand(1);

    CodeSpec spec;
    uint64_t seed = 1;
    unsigned workers = 0;
    IoFiles io;

    auto* params_cmd = app.add_subcommand("params", "print code and decoder parameters");
    add_code_flags(params_cmd, spec);

    auto* encode_cmd = app.add_subcommand("encode", "encode information words");
    add_code_flags(encode_cmd, spec);
    encode_cmd->add_option("--in", io.in_path, "input file (default stdin)");
    encode_cmd->add_option("--out", io.out_path, "output file (default stdout)");

    auto* corrupt_cmd = app.add_subcommand("corrupt", "corrupt words (QSC or fixed weight)");
    add_code_flags(corrupt_cmd, spec);
    std::string corrupt_mode = "qsc";
    double corrupt_p = 0.0;
    unsigned corrupt_t = 0;
    corrupt_cmd->add_option("--mode", corrupt_mode, "qsc or fixed")
        ->check(CLI::IsMember({"qsc", "fixed"}));
    corrupt_cmd->add_option("--p", corrupt_p, "QSC crossover probability");
    corrupt_cmd->add_option("--t", corrupt_t, "fixed error weight");
    corrupt_cmd->add_option("--seed", seed, "RNG master seed");
    corrupt_cmd->add_option("--in", io.in_path, "input file (default stdin)");
    corrupt_cmd->add_option("--out", io.out_path, "output file (default stdout)");

    auto* decode_cmd = app.add_subcommand("decode", "decode received words");
    add_code_flags(decode_cmd, spec);
    std::string decoder_kind = "extended";
    decode_cmd->add_option("--decoder", decoder_kind, "extended or bmd")
        ->check(CLI::IsMember({"extended", "bmd"}));
    decode_cmd->add_option("--in", io.in_path, "input file (default stdin)");
    decode_cmd->add_option("--out", io.out_path, "output file (default stdout)");

    auto* bounds_cmd = app.add_subcommand("bounds", "emit analytical bounds as CSV");
    add_code_flags(bounds_cmd, spec);
    std::vector<double> bound_ps;
    bounds_cmd->add_option("--p", bound_ps,
                           "QSC crossover probabilities; if given, emit the "
                           "word-error bound per p instead of per t");
    bounds_cmd->add_option("--out", io.out_path, "output file (default stdout)");

    auto* mcf_cmd = app.add_subcommand("mc-failure",
                                       "Monte-Carlo failure rates on the "
                                       "fixed-weight ensemble");
    add_code_flags(mcf_cmd, spec);
    double mc_n = 1e6;
    std::vector<unsigned> mc_ts;
    bool zero_cw = false;
    mcf_cmd->add_option("--N", mc_n, "trials per t (default 1e6)");
    mcf_cmd->add_option("--t", mc_ts, "error weights (default: sweep (tau, t_max])");
    mcf_cmd->add_option("--seed", seed, "RNG master seed");
    mcf_cmd->add_option("--workers", workers, "worker threads (0 = auto)");
    mcf_cmd->add_flag("--zero-codeword", zero_cw,
                      "use the all-zero codeword instead of random codewords");
    mcf_cmd->add_option("--out", io.out_path, "output file (default stdout)");

    auto* mcq_cmd = app.add_subcommand("mc-qsc",
                                       "Monte-Carlo word-error rates on the QSC "
                                       "for both decoders");
    add_code_flags(mcq_cmd, spec);
    std::vector<double> mc_ps;
    mcq_cmd->add_option("--p", mc_ps, "QSC crossover probabilities")->required();
    mcq_cmd->add_option("--N", mc_n, "trials per point (default 1e6)");
    mcq_cmd->add_option("--seed", seed, "RNG master seed");
    mcq_cmd->add_option("--workers", workers, "worker threads (0 = auto)");
    mcq_cmd->add_flag("--zero-codeword", zero_cw, "use the all-zero codeword");
    mcq_cmd->add_option("--out", io.out_path, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // normalize all usage errors to exit code 1 (0 stays 0 for --help)
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        RsCode code = spec.build();
        McOptions opts{workers, zero_cw};

        if (params_cmd->parsed()) {
            print_params(code);
            return 0;
        }

        if (encode_cmd->parsed()) {
            io.open();
            for (const Word& info : read_words(*io.in, code.k, code.field.q()))
                write_word(*io.out, encode(code, info));
            return 0;
        }

        if (corrupt_cmd->parsed()) {
            io.open();
            uint64_t trial = 0;
            for (const Word& w : read_words(*io.in, code.n, code.field.q())) {
                TrialRng rng(seed, trial++);
                if (corrupt_mode == "qsc") {
                    write_word(*io.out, qsc_corrupt(code.field, w, corrupt_p, rng));
                } else {
                    Word e = fixed_weight_error(code.field, code.n, corrupt_t, rng);
                    Word y(w);
                    for (unsigned j = 0; j < code.n; ++j)
                        y[j] = code.field.add(y[j], e[j]);
                    write_word(*io.out, y);
                }
            }
            return 0;
        }

        if (decode_cmd->parsed()) {
            io.open();
            bool any_failure = false;
            for (const Word& y : read_words(*io.in, code.n, code.field.q())) {
                DecodeResult r = decoder_kind == "bmd" ? bmd_decode(code, y)
                                                       : decode(code, y);
                if (r.ok) {
                    write_word(*io.out, r.codeword);
                    *io.out << "OK t=" << r.t << "\n";
                } else {
                    *io.out << "FAILURE " << to_string(r.reason) << "\n";
                    any_failure = true;
                }
            }
            return any_failure ? 2 : 0;
        }

        if (bounds_cmd->parsed()) {
            io.open();
            DecoderParams p = decoder_params(code);
            std::ostream& out = *io.out;
            if (!bound_ps.empty()) {
                out << "p,p_w_qsc,log10_p_w_qsc\n";
                for (double pv : bound_ps) {
                    if (p.l != 2) {
                        out << fmt(pv) << ",bound unavailable (l!=2),\n";
                        continue;
                    }
                    // exact rational from the decimal text of p
                    mpq_class pq(static_cast<long>(std::llround(pv * 1e9)),
                                 1000000000L);
                    pq.canonicalize();
                    BigProb b = p_w_qsc(code, p, pq);
                    out << fmt(pv) << "," << b.to_sci() << "," << fmt(b.log10())
                        << "\n";
                }
            } else {
                out << "t,p_f_bound,p_e_bound,p_w_t,log10_p_f,log10_p_e\n";
                for (unsigned t = p.tau + 1; t <= p.t_max; ++t) {
                    BigProb pe = p_e_bound(code, p, t);
                    out << t << ",";
                    if (p.l == 2) {
                        BigProb pf = p_f_bound(code, p, t);
                        BigProb pw = p_w_t(code, p, t);
                        out << pf.to_sci() << "," << pe.to_sci() << ","
                            << pw.to_sci() << "," << fmt(pf.log10()) << ","
                            << fmt(pe.log10()) << "\n";
                    } else {
                        out << "bound unavailable (l!=2)," << pe.to_sci() << ",,,"
                            << fmt(pe.log10()) << "\n";
                    }
                }
            }
            return 0;
        }

        if (mcf_cmd->parsed()) {
            io.open();
            DecoderParams p = decoder_params(code);
            if (mc_ts.empty())
                for (unsigned t = p.tau + 1; t <= p.t_max; ++t) mc_ts.push_back(t);
            sim_csv_header(*io.out);
            for (unsigned t : mc_ts) {
                TrialReport r = mc_fixed_weight(code, DecoderKind::extended, t,
                                                static_cast<uint64_t>(mc_n), seed,
                                                opts);
                sim_csv_row(*io.out, code, "extended", std::to_string(t), r,
                            wilson_interval(r.n_failure, r.trials));
            }
            return 0;
        }

        if (mcq_cmd->parsed()) {
            io.open();
            sim_csv_header(*io.out);
            for (double pv : mc_ps) {
                for (auto [kind, name] :
                     {std::pair{DecoderKind::extended, "extended"},
                      std::pair{DecoderKind::bmd, "bmd"}}) {
                    TrialReport r = mc_qsc(code, kind, pv,
                                           static_cast<uint64_t>(mc_n), seed, opts);
                    sim_csv_row(*io.out, code, name, fmt(pv), r,
                                wilson_interval(r.n_error + r.n_failure, r.trials));
                }
            }
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
