#include "pcpl/cli.hpp"

#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <istream>
#include <iterator>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "pcpl/analysis.hpp"
#include "pcpl/bitio.hpp"
#include "pcpl/codes.hpp"
#include "pcpl/distributions.hpp"
#include "pcpl/errors.hpp"
#include "pcpl/rational.hpp"

namespace pcpl {

namespace {

using u64 = std::uint64_t;

// Bad flag values are usage errors (exit 1); everything thrown as a plain
// std::exception is a data error (exit 2); PrecisionUnreachable is exit 3.
struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

CodeId parse_code_flag(const std::string& text) {
    try {
        return CodeId::parse(text);
    } catch (const std::exception& e) {
        throw usage_error(e.what());
    }
}

DistId parse_dist_flag(const std::string& text) {
    // Long-form family aliases are a CLI nicety; the library names stay short.
    std::string s = text;
    const auto colon = s.find(':');
    std::string head = s.substr(0, colon);
    if (head == "gauss-kuzmin") head = "gk";
    else if (head == "yule-simon") head = "ys";
    if (colon != std::string::npos) head += s.substr(colon);
    try {
        return DistId::parse(head);
    } catch (const std::exception& e) {
        throw usage_error(e.what());
    }
}

u64 parse_symbol_token(const std::string& tok) {
    u64 v = 0;
    const char* end = tok.data() + tok.size();
    const auto [p, ec] = std::from_chars(tok.data(), end, v);
    if (ec != std::errc{} || p != end || v == 0)
        throw std::runtime_error("bad integer token: \"" + tok + "\"");
    return v;
}

std::vector<std::uint8_t> read_bytes(std::istream& in) {
    std::vector<std::uint8_t> bytes;
    char chunk[4096];
    while (in.read(chunk, sizeof chunk) || in.gcount() > 0)
        bytes.insert(bytes.end(), chunk, chunk + in.gcount());
    return bytes;
}

// Resolves --in/--out to the given streams or to binary file streams.
struct io_streams {
    std::ifstream fin;
    std::ofstream fout;
    std::istream* in;
    std::ostream* out;

    io_streams(const std::string& in_path, const std::string& out_path,
               std::istream& def_in, std::ostream& def_out)
        : in(&def_in), out(&def_out) {
        if (!in_path.empty()) {
            fin.open(in_path, std::ios::binary);
            if (!fin) throw std::runtime_error("cannot open input file: " + in_path);
            in = &fin;
        }
        if (!out_path.empty()) {
            fout.open(out_path, std::ios::binary);
            if (!fout) throw std::runtime_error("cannot open output file: " + out_path);
            out = &fout;
        }
    }
};

CodeId frame_code(const FrameInfo& info, const std::string& code_flag) {
    if (info.family < 1 || info.family > 9)
        throw std::runtime_error("frame declares unknown code family byte " +
                                 std::to_string(info.family));
    CodeId from_frame = [&] {
        try {
            return CodeId(Family(info.family), info.param);
        } catch (const std::exception& e) {
            throw std::runtime_error(std::string("frame declares invalid code: ") +
                                     e.what());
        }
    }();
    if (!code_flag.empty()) {
        const CodeId wanted = parse_code_flag(code_flag);
        if (!(wanted == from_frame))
            throw std::runtime_error("frame code " + from_frame.name() +
                                     " does not match --code " + wanted.name());
    }
    return from_frame;
}

int cmd_encode(const std::string& code_flag, const std::string& in_path,
               const std::string& out_path, std::istream& def_in,
               std::ostream& def_out) {
    const CodeId code = parse_code_flag(code_flag);
    io_streams io(in_path, out_path, def_in, def_out);
    std::vector<BitString> codewords;
    std::string tok;
    while (*io.in >> tok) codewords.push_back(encode(code, parse_symbol_token(tok)));
    const auto bytes = frame_write(static_cast<std::uint8_t>(code.family),
                                   static_cast<std::int16_t>(code.param), codewords);
    io.out->write(reinterpret_cast<const char*>(bytes.data()),
                  static_cast<std::streamsize>(bytes.size()));
    return 0;
}

int cmd_decode(const std::string& code_flag, const std::string& in_path,
               const std::string& out_path, std::istream& def_in,
               std::ostream& def_out) {
    io_streams io(in_path, out_path, def_in, def_out);
    const auto bytes = read_bytes(*io.in);
    const Frame frame = frame_read(bytes);
    const CodeId code = frame_code(frame.info, code_flag);
    BitCursor cur(frame.payload);
    for (u64 s = 0; s < frame.info.symbols; ++s)
        *io.out << decode(code, cur) << "\n";
    if (cur.remaining() != 0)
        throw std::runtime_error("frame payload has trailing bits past the last symbol");
    return 0;
}

int cmd_codebook(const std::string& code_flag, u64 count, const std::string& format,
                 std::ostream& out) {
    const CodeId code = parse_code_flag(code_flag);
    const auto rows = codebook(code, count);
    char buf[96];
    if (format == "csv") {
        out << "symbol,bits,codeword\n";
        for (const auto& r : rows)
            out << r.symbol << ',' << r.bits << ',' << r.codeword.to_string() << "\n";
    } else {
        std::snprintf(buf, sizeof buf, "%8s  %4s  %s\n", "symbol", "bits", "codeword");
        out << buf;
        for (const auto& r : rows) {
            std::snprintf(buf, sizeof buf, "%8llu  %4u  ",
                          static_cast<unsigned long long>(r.symbol), r.bits);
            out << buf << r.codeword.to_string() << "\n";
        }
    }
    return 0;
}

void print_grid_text(const std::vector<std::vector<CodeReport>>& grid,
                     std::ostream& out) {
    char buf[200];
    std::snprintf(buf, sizeof buf, "%-10s %-12s %-16s %16s %16s\n", "dist", "method",
                  "code_param", "lo", "hi");
    out << buf;
    for (const auto& row : grid) {
        for (const auto& cell : row) {
            const std::string dist = cell.dist.name();
            const std::string cp = cell.code_param.empty() ? "-" : cell.code_param;
            if (cell.value.infinite) {
                std::snprintf(buf, sizeof buf, "%-10s %-12s %-16s %16s %16s\n",
                              dist.c_str(), cell.column.c_str(), cp.c_str(), "inf",
                              "inf");
            } else {
                std::snprintf(buf, sizeof buf, "%-10s %-12s %-16s %16.10g %16.10g\n",
                              dist.c_str(), cell.column.c_str(), cp.c_str(),
                              cell.value.value.lo, cell.value.value.hi);
            }
            out << buf;
        }
    }
}

int cmd_analyze(const std::vector<std::string>& dist_flags, double precision,
                const std::string& format, std::ostream& out) {
    if (!(precision > 0.0)) throw usage_error("--precision must be positive");
    std::vector<DistId> dists;
    if (dist_flags.empty()) {
        dists = table2_distributions();
    } else {
        for (const auto& d : dist_flags) dists.push_back(parse_dist_flag(d));
    }
    std::vector<std::vector<CodeReport>> grid;
    for (const DistId id : dists) grid.push_back(table2_row(id, precision));
    if (format == "csv") out << grid_csv(grid);
    else if (format == "json") out << grid_json(grid) << "\n";
    else print_grid_text(grid, out);
    return 0;
}

int cmd_golin(const std::string& dist_flag, int alg, int groups, std::ostream& out) {
    const DistId id = parse_dist_flag(dist_flag);
    const Distribution dist(id);
    const DesignerCode dc =
        alg == 1 ? golin_alg1(dist, groups) : golin_alg2(dist, groups);
    out << "alg: " << alg << "\n";
    out << "groups: " << dc.groups() << "\n";
    out << "group_sizes:";
    for (int k : dc.group_sizes) out << ' ' << k;
    out << "\n";
    const u64 total = dc.symbols_through(dc.groups());
    out << "symbols: " << total << "\n";
    out << "lengths:";
    const u64 shown = total < 32 ? total : 32;
    for (u64 i = 1; i <= shown; ++i) out << ' ' << dc.length(i);
    out << "\n";
    const Interval est = designer_expected_length(dc, dist, int(dc.groups()));
    char buf[64];
    std::snprintf(buf, sizeof buf, "expected_length: [%.10g, %.10g]\n", est.lo, est.hi);
    out << buf;
    return 0;
}

int cmd_rational_encode(const std::string& text, const std::string& code_flag,
                        const std::string& out_path, std::ostream& def_out) {
    const CodeId code = parse_code_flag(code_flag);
    const Rational r = Rational::parse(text);
    const BitString payload = encode_rational(r, code);
    const u64 symbols = cf_expand(r).terms.size() + 2;
    const auto bytes = frame_write(static_cast<std::uint8_t>(code.family),
                                   static_cast<std::int16_t>(code.param), symbols,
                                   payload);
    std::ofstream fout;
    std::ostream* outp = &def_out;
    if (!out_path.empty()) {
        fout.open(out_path, std::ios::binary);
        if (!fout) throw std::runtime_error("cannot open output file: " + out_path);
        outp = &fout;
    }
    outp->write(reinterpret_cast<const char*>(bytes.data()),
                static_cast<std::streamsize>(bytes.size()));
    return 0;
}

int cmd_rational_decode(const std::string& code_flag, const std::string& in_path,
                        const std::string& out_path, std::istream& def_in,
                        std::ostream& def_out) {
    io_streams io(in_path, out_path, def_in, def_out);
    const auto bytes = read_bytes(*io.in);
    const Frame frame = frame_read(bytes);
    const CodeId code = frame_code(frame.info, code_flag);
    BitCursor cur(frame.payload);
    const Rational r = decode_rational(cur, code);
    if (cur.remaining() != 0)
        throw std::runtime_error("frame payload has trailing bits past the rational");
    *io.out << r.str() << "\n";
    return 0;
}

int cmd_check(const std::string& code_flag, long long j, u64 n, std::ostream& out) {
    const CodeId code = parse_code_flag(code_flag);
    if (n < 3) throw usage_error("--n must be at least 3");
    if (j >= 0 && n < static_cast<u64>(j) + 3)
        throw usage_error("--n must be at least --j + 3");
    out << "code: " << code.name() << "\n";
    out << "n: " << n << "\n";

    if (j >= 0) {
        out << "j_smooth(" << j << "): "
            << (is_j_smooth(code, static_cast<u64>(j), n) ? "yes" : "no") << "\n";
    } else {
        const u64 j_cap = std::min<u64>(64, n - 3);
        long long level = -1;
        for (u64 jj = 0; jj <= j_cap; ++jj) {
            if (is_j_smooth(code, jj, n)) {
                level = static_cast<long long>(jj);
                break;
            }
        }
        if (level < 0) out << "smooth_level: none (j <= " << j_cap << ")\n";
        else out << "smooth_level: " << level << "\n";
    }

    bool monotone = true;
    u64 mono_at = 0;
    long double kraft = 0.0L;
    u64 prev_len = unbounded_length(code, 1);
    kraft += std::exp2(-static_cast<long double>(prev_len));
    for (u64 i = 2; i <= n; ++i) {
        const u64 len = unbounded_length(code, i);
        if (monotone && len < prev_len) {
            monotone = false;
            mono_at = i;
        }
        kraft += std::exp2(-static_cast<long double>(len));
        prev_len = len;
    }

    bool alphabetic = true;
    u64 alpha_at = 0;
    BitString prev = encode(code, 1);
    for (u64 i = 2; i <= n; ++i) {
        BitString curw = encode(code, i);
        if (lex_compare(prev, curw) != LexOrder::LT) {
            alphabetic = false;
            alpha_at = i;
            break;
        }
        prev = std::move(curw);
    }

    out << "alphabetic: " << (alphabetic ? "yes" : "no");
    if (!alphabetic) out << " (first violation at symbol " << alpha_at << ")";
    out << "\n";
    out << "monotone_lengths: " << (monotone ? "yes" : "no");
    if (!monotone) out << " (first violation at symbol " << mono_at << ")";
    out << "\n";
    char buf[64];
    std::snprintf(buf, sizeof buf, "kraft_sum: %.12g\n", static_cast<double>(kraft));
    out << buf;
    out << "kraft_le_1: " << (kraft <= 1.0L ? "yes" : "no") << "\n";
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"prefix-code toolkit: integer codes, expected-length analysis, "
                 "designer codes, and a continued-fraction rational codec"};
    app.require_subcommand(1);

    std::string code_flag, dist_flag, in_path, out_path, format, rational_text;
    std::vector<std::string> dist_flags;
    u64 count = 0;
    double precision = 1e-4;
    int alg = 1;
    int groups = 64;
    long long j = -1;
    u64 n = 4096;

    auto* enc = app.add_subcommand("encode",
                                   "encode whitespace-separated positive integers "
                                   "into a framed bitstream");
    enc->add_option("--code", code_flag, "code name, e.g. codek:-1, golomb:3, gamma")
        ->required();
    enc->add_option("--in", in_path, "input text file (default: stdin)");
    enc->add_option("--out", out_path, "output frame file (default: stdout)");

    auto* dec = app.add_subcommand("decode", "decode a framed bitstream back to text");
    dec->add_option("--code", code_flag,
                    "expected code name; omit to trust the frame header");
    dec->add_option("--in", in_path, "input frame file (default: stdin)");
    dec->add_option("--out", out_path, "output text file (default: stdout)");

    auto* cb = app.add_subcommand("codebook", "dump the first N codewords of a code");
    cb->add_option("--code", code_flag, "code name")->required();
    cb->add_option("--count", count, "number of symbols to list")->required();
    cb->add_option("--format", format, "text or csv (default text)")
        ->check(CLI::IsMember({"text", "csv"}));

    auto* an = app.add_subcommand("analyze",
                                  "expected-codeword-length grid over power-law "
                                  "distributions");
    an->add_option("--dist", dist_flags,
                   "distribution name (repeatable), e.g. gk, ys:1.5, zeta:2; "
                   "default: the full nine-row grid");
    an->add_option("--precision", precision, "target enclosure width (default 1e-4)");
    an->add_option("--format", format, "text, csv, or json (default text)")
        ->check(CLI::IsMember({"text", "csv", "json"}));

    auto* go = app.add_subcommand("golin", "sequential designer code for a distribution");
    go->add_option("--dist", dist_flag, "distribution name")->required();
    go->add_option("--alg", alg, "group selection rule, 1 or 2")
        ->required()
        ->check(CLI::Range(1, 2));
    go->add_option("--groups", groups, "maximum number of groups")
        ->required()
        ->check(CLI::Range(1, 64));

    auto* re = app.add_subcommand("rational-encode",
                                  "encode a nonnegative rational p/q as a framed "
                                  "bitstream of its continued-fraction terms");
    re->add_option("rational", rational_text, "rational in p/q or integer form")
        ->required();
    re->add_option("--code", code_flag, "term code (default codek:-1)");
    re->add_option("--out", out_path, "output frame file (default: stdout)");

    auto* rd = app.add_subcommand("rational-decode",
                                  "decode a framed rational back to p/q text");
    rd->add_option("--code", code_flag,
                   "expected term code; omit to trust the frame header");
    rd->add_option("--in", in_path, "input frame file (default: stdin)");
    rd->add_option("--out", out_path, "output text file (default: stdout)");

    auto* ck = app.add_subcommand("check",
                                  "smoothness, alphabetic order, monotone lengths, "
                                  "and Kraft diagnostics for a code");
    ck->add_option("--code", code_flag, "code name")->required();
    ck->add_option("--j", j, "check j-smoothness at this j only (default: scan)");
    ck->add_option("--n", n, "number of symbols to examine (default 4096)");

    std::vector<const char*> cargv;
    cargv.reserve(args.size() + 1);
    cargv.push_back("pcpl");
    for (const auto& a : args) cargv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(cargv.size()), cargv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*enc) return cmd_encode(code_flag, in_path, out_path, in, out);
        if (*dec) return cmd_decode(code_flag, in_path, out_path, in, out);
        if (*cb) return cmd_codebook(code_flag, count, format, out);
        if (*an) return cmd_analyze(dist_flags, precision, format, out);
        if (*go) return cmd_golin(dist_flag, alg, groups, out);
        if (*re) return cmd_rational_encode(rational_text, code_flag.empty()
                                                               ? "codek:-1"
                                                               : code_flag,
                                            out_path, out);
        if (*rd) return cmd_rational_decode(code_flag, in_path, out_path, in, out);
        if (*ck) return cmd_check(code_flag, j, n, out);
        err << "error: no subcommand\n";
        return 1;
    } catch (const usage_error& e) {
        err << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const PrecisionUnreachable& e) {
        err << "nonconvergence: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace pcpl
