#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "pcpl/analysis.hpp"
#include "pcpl/bitio.hpp"
#include "pcpl/codes.hpp"
#include "pcpl/distributions.hpp"
#include "pcpl/rational.hpp"

namespace py = pybind11;
using namespace pcpl;

namespace {

using u64 = std::uint64_t;

CodeId id_from_frame(const FrameInfo& info) {
    if (info.family < 1 || info.family > 9)
        throw std::runtime_error("frame declares unknown code family byte " +
                                 std::to_string(info.family));
    return CodeId(Family(info.family), info.param);
}

Frame parse_frame(const py::bytes& data) {
    const std::string buf = data;
    return frame_read(std::span(reinterpret_cast<const std::uint8_t*>(buf.data()),
                                buf.size()));
}

CodeId resolve_code(const Frame& frame, const std::optional<std::string>& code) {
    const CodeId from_frame = id_from_frame(frame.info);
    if (code) {
        const CodeId wanted = CodeId::parse(*code);
        if (!(wanted == from_frame))
            throw std::runtime_error("frame code " + from_frame.name() +
                                     " does not match requested " + wanted.name());
    }
    return from_frame;
}

std::pair<double, double> as_pair(const Interval& iv) { return {iv.lo, iv.hi}; }

std::pair<double, double> as_pair(const ExpectedLength& el) {
    if (el.infinite) {
        const double inf = std::numeric_limits<double>::infinity();
        return {inf, inf};
    }
    return as_pair(el.value);
}

}  // namespace

PYBIND11_MODULE(_pcpl, m) {
    m.doc() = "prefix-code toolkit: integer codes, expected-length analysis, "
              "rational codec";

    // ---- codes ----
    m.def(
        "codeword",
        [](const std::string& code, u64 i) { return encode(CodeId::parse(code), i).to_string(); },
        py::arg("code"), py::arg("i"), "bit text of one codeword");

    m.def(
        "codeword_length",
        [](const std::string& code, u64 i) { return codeword_length(CodeId::parse(code), i); },
        py::arg("code"), py::arg("i"));

    m.def(
        "codebook",
        [](const std::string& code, u64 count) {
            std::vector<std::tuple<u64, std::uint32_t, std::string>> rows;
            for (const auto& r : codebook(CodeId::parse(code), count))
                rows.emplace_back(r.symbol, r.bits, r.codeword.to_string());
            return rows;
        },
        py::arg("code"), py::arg("count"), "(symbol, bits, codeword) rows");

    m.def(
        "encode",
        [](const std::string& code, const std::vector<u64>& symbols) {
            const CodeId id = CodeId::parse(code);
            std::vector<BitString> words;
            words.reserve(symbols.size());
            for (u64 s : symbols) words.push_back(pcpl::encode(id, s));
            const auto bytes = frame_write(static_cast<std::uint8_t>(id.family),
                                           static_cast<std::int16_t>(id.param), words);
            return py::bytes(reinterpret_cast<const char*>(bytes.data()), bytes.size());
        },
        py::arg("code"), py::arg("symbols"), "framed byte serialization");

    m.def(
        "decode",
        [](const py::bytes& frame, const std::optional<std::string>& code) {
            const Frame f = parse_frame(frame);
            const CodeId id = resolve_code(f, code);
            BitCursor cur(f.payload);
            std::vector<u64> symbols;
            symbols.reserve(f.info.symbols < 4096 ? f.info.symbols : 4096);
            for (u64 s = 0; s < f.info.symbols; ++s)
                symbols.push_back(pcpl::decode(id, cur));
            if (cur.remaining() != 0)
                throw std::runtime_error("frame payload has trailing bits");
            return symbols;
        },
        py::arg("frame"), py::arg("code") = std::nullopt,
        "symbols from a framed byte serialization");

    // ---- analysis ----
    m.def(
        "expected_length",
        [](const std::string& code, const std::string& dist, double precision) {
            return as_pair(expected_length(CodeId::parse(code), DistId::parse(dist),
                                           precision));
        },
        py::arg("code"), py::arg("dist"), py::arg("precision") = 1e-4,
        "(lo, hi) enclosure in bits per symbol; (inf, inf) when divergent");

    m.def(
        "best_parameter",
        [](const std::string& family, const std::string& dist, double precision) {
            const Family fam = CodeId::parse(family).family;
            const BestParameter bp = best_parameter(fam, DistId::parse(dist), precision);
            const auto [lo, hi] = as_pair(bp.value);
            return std::make_tuple(bp.code.name(), lo, hi);
        },
        py::arg("family"), py::arg("dist"), py::arg("precision") = 1e-4,
        "(code_name, lo, hi) for the family's best parameter");

    m.def(
        "entropy",
        [](const std::string& dist) {
            return as_pair(Distribution(DistId::parse(dist)).entropy_interval());
        },
        py::arg("dist"), "(lo, hi) enclosure of the entropy in bits");

    m.def(
        "optimal_estimate",
        [](const std::string& dist, u64 x) {
            return optimal_estimate(DistId::parse(dist), x);
        },
        py::arg("dist"), py::arg("x") = u64{1} << 16,
        "minimum-redundancy estimate with tail cutoff x");

    m.def(
        "golin",
        [](const std::string& dist, int alg, int groups) {
            if (alg != 1 && alg != 2)
                throw std::invalid_argument("alg must be 1 or 2");
            const Distribution d{DistId::parse(dist)};
            const DesignerCode dc =
                alg == 1 ? golin_alg1(d, groups) : golin_alg2(d, groups);
            const Interval est = designer_expected_length(dc, d, int(dc.groups()));
            return std::make_tuple(dc.group_sizes, as_pair(est));
        },
        py::arg("dist"), py::arg("alg") = 1, py::arg("groups") = 64,
        "(group_sizes, (lo, hi)) for the sequential designer code");

    m.def(
        "analyze_csv",
        [](const std::vector<std::string>& dists, double precision) {
            std::vector<std::vector<CodeReport>> grid;
            if (dists.empty()) {
                grid = table2_grid(precision);
            } else {
                for (const auto& s : dists)
                    grid.push_back(table2_row(DistId::parse(s), precision));
            }
            return grid_csv(grid);
        },
        py::arg("dists") = std::vector<std::string>{}, py::arg("precision") = 1e-4,
        "expected-length grid as CSV");

    m.def(
        "analyze_json",
        [](const std::vector<std::string>& dists, double precision) {
            std::vector<std::vector<CodeReport>> grid;
            if (dists.empty()) {
                grid = table2_grid(precision);
            } else {
                for (const auto& s : dists)
                    grid.push_back(table2_row(DistId::parse(s), precision));
            }
            return grid_json(grid);
        },
        py::arg("dists") = std::vector<std::string>{}, py::arg("precision") = 1e-4,
        "expected-length grid as JSON");

    m.def(
        "monte_carlo",
        [](const std::string& code, const std::string& dist, u64 n, u64 seed) {
            std::mt19937_64 rng(seed);
            const Distribution d{DistId::parse(dist)};
            const MonteCarlo mc = monte_carlo_check(CodeId::parse(code), d, n, rng);
            return std::make_pair(mc.mean, mc.std_error);
        },
        py::arg("code"), py::arg("dist"), py::arg("n") = u64{100000},
        py::arg("seed") = u64{0}, "(mean, std_error) of sampled codeword length");

    // ---- structure checks ----
    m.def(
        "is_j_smooth",
        [](const std::string& code, u64 j, u64 n) {
            return is_j_smooth(CodeId::parse(code), j, n);
        },
        py::arg("code"), py::arg("j") = u64{0}, py::arg("n") = u64{4096});

    m.def(
        "is_antiunary",
        [](const std::string& dist, u64 j, u64 n) {
            return is_antiunary(Distribution(DistId::parse(dist)), j, n);
        },
        py::arg("dist"), py::arg("j") = u64{0}, py::arg("n") = u64{100000});

    m.def(
        "smooth_improve",
        [](std::vector<u64> lengths) { return smooth_improve(std::move(lengths)); },
        py::arg("lengths"), "exchange-improved 0-smooth length profile");

    // ---- rational codec ----
    m.def(
        "rational_encode",
        [](const std::string& text, const std::string& code) {
            const CodeId id = CodeId::parse(code);
            const Rational r = Rational::parse(text);
            const BitString payload = encode_rational(r, id);
            const u64 symbols = cf_expand(r).terms.size() + 2;
            const auto bytes = frame_write(static_cast<std::uint8_t>(id.family),
                                           static_cast<std::int16_t>(id.param),
                                           symbols, payload);
            return py::bytes(reinterpret_cast<const char*>(bytes.data()), bytes.size());
        },
        py::arg("rational"), py::arg("code") = "codek:-1",
        "framed continued-fraction serialization of p/q");

    m.def(
        "rational_decode",
        [](const py::bytes& frame, const std::optional<std::string>& code) {
            const Frame f = parse_frame(frame);
            const CodeId id = resolve_code(f, code);
            BitCursor cur(f.payload);
            const Rational r = decode_rational(cur, id);
            if (cur.remaining() != 0)
                throw std::runtime_error("frame payload has trailing bits");
            return r.str();
        },
        py::arg("frame"), py::arg("code") = std::nullopt, "p/q text from a frame");

    m.def(
        "cf_expand",
        [](const std::string& text) {
            const CFTerms t = cf_expand(Rational::parse(text));
            std::vector<std::string> terms;
            terms.reserve(t.terms.size());
            for (const auto& b : t.terms) terms.push_back(b.str());
            return std::make_pair(t.a0.str(), terms);
        },
        py::arg("rational"), "(a0, terms) as decimal strings");

    m.def(
        "cf_reconstruct",
        [](const std::string& a0, const std::vector<std::string>& terms) {
            CFTerms t;
            t.a0 = BigInt(a0);
            for (const auto& s : terms) t.terms.emplace_back(s);
            return cf_reconstruct(t).str();
        },
        py::arg("a0"), py::arg("terms"), "p/q text from continued-fraction terms");
}
