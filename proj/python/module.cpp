// Python bindings for the exact engine, the semiclassical formulas, and the
// sweep harness.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "wigner/asymptotics.hpp"
#include "wigner/errors.hpp"
#include "wigner/exact3nj.hpp"
#include "wigner/geometry.hpp"
#include "wigner/sweep.hpp"
#include "wigner/wigner_d.hpp"

namespace py = pybind11;
using namespace wigner;

namespace {

HalfInt to_half(py::handle h)
{
    if (py::isinstance<py::str>(h)) return HalfInt::parse(h.cast<std::string>());
    double v = h.cast<double>();
    double t = v * 2.0;
    if (std::fabs(t - std::llround(t)) > 1e-9)
        throw InvalidSpec("not a half-integer: " + std::to_string(v));
    return HalfInt::from_twice(static_cast<int>(std::llround(t)));
}

std::vector<HalfInt> to_halves(const py::sequence& seq)
{
    std::vector<HalfInt> out;
    out.reserve(py::len(seq));
    for (auto h : seq) out.push_back(to_half(h));
    return out;
}

py::dict exact_dict(const ExactValue& v, int digits)
{
    py::dict d;
    d["value"] = v.to_double();
    d["value_str"] = v.is_exact_zero() ? "0" : v.to_string(digits);
    d["exact_zero"] = v.is_exact_zero();
    d["stable_digits"] = v.stable_digits();
    d["precision_bits"] = v.precision_bits();
    return d;
}

py::dict asym_dict(const AsymResult& r)
{
    py::dict d;
    d["allowed"] = r.in_allowed_region;
    d["value"] = r.value ? py::object(py::float_(*r.value)) : py::none();
    d["volume"] = r.volume ? py::object(py::float_(*r.volume)) : py::none();
    d["prefactor"] = r.prefactor;
    d["cosine_argument"] = r.cosine_argument;
    d["d_factors"] = r.d_factors;
    return d;
}

AsymResult dispatch_asym(AsymKind kind, const std::vector<HalfInt>& e)
{
    switch (kind) {
        case AsymKind::NineJOneSmall:
            return asym_9j_one_small(e[0], e[1], e[2], e[3], e[4], e[5], e[6],
                                     e[7], e[8]);
        case AsymKind::NineJTwoSmall:
            return asym_9j_two_small(e[0], e[1], e[2], e[3], e[4], e[5], e[6],
                                     e[7], e[8]);
        case AsymKind::TwelveJTwoSmall: {
            std::array<HalfInt, 12> a;
            std::copy_n(e.begin(), 12, a.begin());
            return asym_12j_two_small(a);
        }
        case AsymKind::FifteenJThreeSmall: {
            std::array<HalfInt, 15> a;
            std::copy_n(e.begin(), 15, a.begin());
            return asym_15j_three_small(a);
        }
        case AsymKind::PonzanoRegge6j:
            return ponzano_regge_6j(e[0], e[1], e[2], e[3], e[4], e[5]);
    }
    throw InvalidSpec("unknown asymptotic kind");
}

} // namespace

PYBIND11_MODULE(wigner3nj, m)
{
    m.doc() = "exact and semiclassical Wigner 3nj symbols";

    py::register_exception<NotClassicallyAllowed>(m, "NotClassicallyAllowed");
    py::register_exception<NotATriangle>(m, "NotATriangle");
    py::register_exception<DegenerateAngle>(m, "DegenerateAngle");
    py::register_exception<IndexOutOfRange>(m, "IndexOutOfRange");
    py::register_exception<InvalidSpec>(m, "InvalidSpec");

    m.def(
        "triad_allowed",
        [](py::handle a, py::handle b, py::handle c) {
            return triad_allowed(to_half(a), to_half(b), to_half(c));
        },
        py::arg("a"), py::arg("b"), py::arg("c"),
        "triangle selection rule with integer coupling");

    m.def(
        "exact",
        [](const std::string& kind, const py::sequence& entries, int digits) {
            SymbolKind k;
            if (kind == "6j") k = SymbolKind::SixJ;
            else if (kind == "9j") k = SymbolKind::NineJ;
            else if (kind == "12j") k = SymbolKind::TwelveJFirst;
            else if (kind == "15j") k = SymbolKind::FifteenJFirst;
            else throw InvalidSpec("kind must be 6j|9j|12j|15j");
            return exact_dict(evaluate(SymbolArgs(k, to_halves(entries))),
                              digits);
        },
        py::arg("kind"), py::arg("entries"), py::arg("digits") = 30,
        "exact symbol value; entries row-major, as floats or strings "
        "like '51/2'");

    m.def(
        "asym",
        [](const std::string& kind, const py::sequence& entries) {
            AsymKind k = asym_kind_from_name(kind);
            auto e = to_halves(entries);
            if (e.size() != role_names(k).size())
                throw InvalidSpec("wrong entry count for " + kind);
            return asym_dict(dispatch_asym(k, e));
        },
        py::arg("kind"), py::arg("entries"),
        "asymptotic value; kind is 9j1s|9j2s|12j2s|15j3s|pr6j");

    m.def(
        "little_d",
        [](py::handle s, py::handle nu, py::handle mu, double theta) {
            return little_d(to_half(s), to_half(nu), to_half(mu), theta);
        },
        py::arg("s"), py::arg("nu"), py::arg("mu"), py::arg("theta"),
        "rotation matrix element d^s_{nu,mu}(theta)");

    m.def(
        "sweep",
        [](const std::string& kind, const py::dict& fixed,
           const std::string& free_role, py::object range, long precision,
           int jobs) {
            SweepSpec spec;
            spec.kind = asym_kind_from_name(kind);
            for (auto item : fixed)
                spec.fixed[item.first.cast<std::string>()] =
                    to_half(item.second);
            spec.free_role = free_role;
            if (!range.is_none()) {
                auto pair = range.cast<py::sequence>();
                spec.range = {to_half(pair[0]), to_half(pair[1])};
            }
            spec.precision_bits = precision;
            spec.jobs = jobs;

            py::list rows;
            for (const auto& r : run_sweep(spec)) {
                py::dict d;
                d["free_value"] = r.free_value.str();
                d["exact"] = r.exact;
                d["asym"] = r.asym ? py::object(py::float_(*r.asym)) : py::none();
                d["abs_err"] =
                    r.abs_err ? py::object(py::float_(*r.abs_err)) : py::none();
                d["volume"] =
                    r.volume ? py::object(py::float_(*r.volume)) : py::none();
                d["allowed"] = r.allowed;
                rows.append(d);
            }
            return rows;
        },
        py::arg("kind"), py::arg("fixed"), py::arg("free"),
        py::arg("range") = py::none(), py::arg("precision") = 0,
        py::arg("jobs") = 1,
        "sweep the free quantum number; returns a list of row dicts");

    m.def(
        "report",
        [](const py::sequence& rows, double volume_floor) {
            std::vector<ComparisonRow> rs;
            for (auto h : rows) {
                auto d = h.cast<py::dict>();
                ComparisonRow r;
                r.free_value = to_half(d["free_value"]);
                r.exact = d["exact"].cast<double>();
                if (!d["asym"].is_none()) r.asym = d["asym"].cast<double>();
                if (!d["abs_err"].is_none())
                    r.abs_err = d["abs_err"].cast<double>();
                if (!d["volume"].is_none())
                    r.volume = d["volume"].cast<double>();
                r.allowed = d["allowed"].cast<bool>();
                rs.push_back(std::move(r));
            }
            ErrorReport rep = error_report(rs, volume_floor);
            py::dict out;
            out["n_rows"] = rep.n_rows;
            out["n_allowed"] = rep.n_allowed;
            out["n_floored"] = rep.n_floored;
            out["n_caustic_adjacent"] = rep.n_caustic_adjacent;
            out["volume_floor"] = rep.volume_floor;
            out["max_abs_err_floored"] = rep.max_abs_err_floored;
            out["rms_err_floored"] = rep.rms_err_floored;
            out["rel_rms_floored"] = rep.rel_rms_floored;
            out["max_abs_err_allowed"] = rep.max_abs_err_allowed;
            out["rms_err_allowed"] = rep.rms_err_allowed;
            out["rel_rms_allowed"] = rep.rel_rms_allowed;
            return out;
        },
        py::arg("rows"), py::arg("volume_floor") = 0.5,
        "error statistics for sweep rows");
}
