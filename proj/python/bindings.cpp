#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "rarebit/digits.hpp"
#include "rarebit/expansion.hpp"
#include "rarebit/moc.hpp"
#include "rarebit/polynomials.hpp"
#include "rarebit/seqfile.hpp"
#include "rarebit/sequences.hpp"
#include "rarebit/statistics.hpp"
#include "rarebit/witness.hpp"

namespace py = pybind11;
using namespace rarebit;

namespace {

// arbitrary-precision python ints travel as decimal strings
BigNat nat_from_py(const py::int_& value) {
    return BigNat::from_decimal(value.attr("__str__")().cast<std::string>());
}

py::int_ nat_to_py(const BigNat& value) {
    return py::module_::import("builtins").attr("int")(value.to_decimal()).cast<py::int_>();
}

PatternSpec spec_from(std::uint32_t k, std::uint32_t base, std::uint32_t modulus,
                      const std::optional<std::vector<std::uint32_t>>& omega) {
    PatternSpec spec;
    spec.base = base;
    spec.modulus = modulus;
    spec.pattern = omega ? *omega : std::vector<std::uint32_t>(k, 1);
    spec.validate();
    return spec;
}

GeneratorDescriptor descriptor_from(const std::string& kind, std::uint32_t k, std::uint32_t base,
                                    std::uint32_t modulus,
                                    const std::optional<std::vector<std::uint32_t>>& omega,
                                    const std::optional<std::string>& poly) {
    GeneratorDescriptor g;
    if (kind == "tm")
        g = GeneratorDescriptor::thue_morse();
    else if (kind == "pattern")
        g = GeneratorDescriptor::pattern(k);
    else if (kind == "general")
        g = GeneratorDescriptor::general(spec_from(k, base, modulus, omega));
    else
        throw std::invalid_argument("kind must be tm, pattern, or general");
    if (poly) g = g.along(IntPolynomial::parse(*poly));
    g.validate();
    return g;
}

std::vector<std::uint8_t> symbols_from(const py::bytes& data) {
    std::string raw = data;
    return std::vector<std::uint8_t>(raw.begin(), raw.end());
}

py::dict moc_result_dict(const MocResult& r) {
    py::dict d;
    d["n"] = r.prefix_length;
    d["m"] = r.complexity;
    if (r.witness) {
        d["witness"] = py::make_tuple(r.witness->i, r.witness->j, r.witness->block_len);
    } else {
        d["witness"] = py::none();
    }
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "automatic sequences, polynomial rarefaction, and unpredictability measures";
    m.attr("__version__") = "0.1.0";

    m.def(
        "digit_sum",
        [](const py::int_& n, std::uint32_t base) { return digit_sum(nat_from_py(n), base); },
        py::arg("n"), py::arg("base") = 2, "sum of the base-q digits of n");

    m.def(
        "to_digits",
        [](const py::int_& n, std::uint32_t base) {
            DigitString ds = to_digits(nat_from_py(n), base);
            return std::vector<std::uint32_t>(ds.digits.rbegin(), ds.digits.rend());
        },
        py::arg("n"), py::arg("base") = 2, "base-q digits of n, most significant first");

    m.def(
        "count_pattern",
        [](const py::int_& n, std::uint32_t k, std::uint32_t base, std::uint32_t modulus,
           const std::optional<std::vector<std::uint32_t>>& omega) {
            return count_pattern(nat_from_py(n), spec_from(k, base, modulus, omega));
        },
        py::arg("n"), py::arg("k") = 2, py::arg("base") = 2, py::arg("modulus") = 2,
        py::arg("omega") = py::none(),
        "overlapping occurrences of the pattern in the base-q expansion of n");

    m.def(
        "thue_morse", [](const py::int_& n) { return thue_morse(nat_from_py(n)); }, py::arg("n"));

    m.def(
        "pattern_value",
        [](const py::int_& n, std::uint32_t k, std::uint32_t base, std::uint32_t modulus,
           const std::optional<std::vector<std::uint32_t>>& omega) {
            return pattern_value(nat_from_py(n), spec_from(k, base, modulus, omega));
        },
        py::arg("n"), py::arg("k") = 2, py::arg("base") = 2, py::arg("modulus") = 2,
        py::arg("omega") = py::none());

    m.def(
        "generate",
        [](const std::string& kind, std::uint64_t n, std::uint32_t k, std::uint32_t base,
           std::uint32_t modulus, const std::optional<std::vector<std::uint32_t>>& omega,
           const std::optional<std::string>& poly) {
            Sequence s = generate_prefix(descriptor_from(kind, k, base, modulus, omega, poly), n);
            return py::bytes(reinterpret_cast<const char*>(s.symbols.data()), s.symbols.size());
        },
        py::arg("kind"), py::arg("n"), py::arg("k") = 2, py::arg("base") = 2,
        py::arg("modulus") = 2, py::arg("omega") = py::none(), py::arg("poly") = py::none(),
        "sequence prefix as one symbol per byte");

    m.def(
        "eval_poly",
        [](const std::string& poly, const py::int_& n) {
            return nat_to_py(IntPolynomial::parse(poly).eval(nat_from_py(n)));
        },
        py::arg("poly"), py::arg("n"));

    m.def(
        "moc",
        [](const py::bytes& data, std::optional<std::uint64_t> n) {
            auto symbols = symbols_from(data);
            return moc_result_dict(moc_fast(symbols, n ? *n : symbols.size()));
        },
        py::arg("sequence"), py::arg("n") = py::none(),
        "maximum order complexity with a repeated-block witness");

    m.def(
        "moc_profile",
        [](const py::bytes& data, const std::vector<std::uint64_t>& checkpoints) {
            auto symbols = symbols_from(data);
            std::vector<py::dict> out;
            for (const MocResult& r : moc_profile(symbols, checkpoints))
                out.push_back(moc_result_dict(r));
            return out;
        },
        py::arg("sequence"), py::arg("checkpoints"));

    m.def(
        "expansion_complexity",
        [](const py::bytes& data, std::optional<std::uint64_t> n, std::uint32_t dmax) {
            auto symbols = symbols_from(data);
            ExpansionResult r = expansion_complexity(symbols, n ? *n : symbols.size(), dmax);
            py::dict d;
            d["exceeded"] = r.exceeded;
            d["degree"] = r.exceeded ? py::object(py::none()) : py::object(py::int_(r.degree));
            d["annihilator"] =
                r.annihilator ? py::object(py::cast(r.annihilator->monomials)) : py::none();
            return d;
        },
        py::arg("sequence"), py::arg("n") = py::none(),
        py::arg("dmax") = kDefaultExpansionDegreeBound);

    m.def(
        "verify_annihilator",
        [](const std::vector<std::pair<std::uint32_t, std::uint32_t>>& monomials,
           const py::bytes& data, std::optional<std::uint64_t> n) {
            BivariatePolyF2 h;
            h.monomials = monomials;
            h.normalize();
            auto symbols = symbols_from(data);
            return verify_annihilator(h, symbols, n ? *n : symbols.size());
        },
        py::arg("monomials"), py::arg("sequence"), py::arg("n") = py::none());

    m.def("thue_morse_annihilator", [] { return thue_morse_annihilator().monomials; });
    m.def(
        "pattern_annihilator", [](std::uint32_t k) { return pattern_annihilator(k).monomials; },
        py::arg("k"));

    m.def(
        "correlation2",
        [](const py::bytes& data, std::optional<std::uint64_t> n) {
            auto symbols = symbols_from(data);
            CorrelationResult r = correlation2(symbols, n ? *n : symbols.size());
            py::dict d;
            d["value"] = r.value;
            d["m"] = r.window;
            d["d1"] = r.d1;
            d["d2"] = r.d2;
            return d;
        },
        py::arg("sequence"), py::arg("n") = py::none());

    m.def(
        "subword_complexity",
        [](const py::bytes& data, std::uint32_t k) {
            auto symbols = symbols_from(data);
            BlockStats st = subword_complexity(symbols, k);
            py::dict d;
            d["k"] = st.k;
            d["distinct"] = st.distinct;
            d["max_deviation"] = st.max_deviation;
            return d;
        },
        py::arg("sequence"), py::arg("k"));

    m.def(
        "tm_witness",
        [](const std::string& poly) {
            IntPolynomial p = IntPolynomial::parse(poly);
            TMWitness w = tm_witness(p);
            py::dict d;
            d["z"] = nat_to_py(w.z);
            d["lambda"] = w.lambda;
            d["y"] = nat_to_py(w.y);
            d["r"] = w.r;
            d["l0"] = w.l0;
            return d;
        },
        py::arg("poly"));

    m.def(
        "pattern_witness",
        [](const std::string& poly, std::uint32_t k) {
            IntPolynomial p = IntPolynomial::parse(poly);
            PatternWitness w = pattern_witness(p, k);
            py::dict d;
            d["z"] = nat_to_py(w.z);
            d["a"] = nat_to_py(w.a);
            d["u"] = w.u;
            d["y"] = nat_to_py(w.y);
            d["s"] = w.s;
            d["l0"] = w.l0;
            d["run_length"] = w.run_length;
            return d;
        },
        py::arg("poly"), py::arg("k"));

    m.def(
        "bound_certificate",
        [](const std::string& poly, std::uint32_t k, std::uint64_t n) {
            BoundCertificate cert = bound_certificate(IntPolynomial::parse(poly), k, n);
            py::dict d;
            d["bound"] = cert.bound;
            d["level"] = cert.level;
            d["n"] = cert.n;
            d["text"] = cert.to_text();
            return d;
        },
        py::arg("poly"), py::arg("k"), py::arg("n"));

    py::register_exception<SearchExhausted>(m, "SearchExhausted", PyExc_RuntimeError);
    py::register_exception<CertificateRefused>(m, "CertificateRefused", PyExc_RuntimeError);
}
