// Python bindings. Integers cross as Python ints (any size), rationals as
// fractions.Fraction, matrices as lists of rows.

#include "evenlat/discform.hpp"
#include "evenlat/error.hpp"
#include "evenlat/io.hpp"
#include "evenlat/reconstruct.hpp"
#include "evenlat/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace evenlat;

namespace {

py::object to_py(const Integer& z)
{
    return py::reinterpret_steal<py::object>(PyLong_FromString(z.get_str().c_str(), nullptr, 10));
}

py::object to_py(const Rational& r)
{
    static py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(to_py(Integer(r.get_num())), to_py(Integer(r.get_den())));
}

template <typename T>
py::list to_py(const std::vector<T>& v)
{
    py::list out;
    for (const auto& x : v)
        out.append(to_py(x));
    return out;
}

template <typename T>
py::list to_py(const Matrix<T>& m)
{
    py::list out;
    for (std::size_t i = 0; i < m.rows(); ++i)
        out.append(to_py(m.row(i)));
    return out;
}

// Accepts ints, Fractions and "p/q" strings.
Rational rational_of(const py::handle& h)
{
    return parse_rational(py::str(h).cast<std::string>());
}

Integer integer_of(const py::handle& h)
{
    if (!py::isinstance<py::int_>(h))
        throw ParseError("expected an integer, got " + py::repr(h).cast<std::string>());
    return Integer(py::str(h).cast<std::string>());
}

template <typename T, typename F>
Matrix<T> matrix_of(const py::handle& rows, F elem)
{
    std::vector<std::vector<T>> data;
    std::size_t cols = 0;
    for (auto row : rows) {
        std::vector<T> r;
        for (auto x : row)
            r.push_back(elem(x));
        if (!data.empty() && r.size() != cols)
            throw ParseError("ragged matrix");
        cols = r.size();
        data.push_back(std::move(r));
    }
    return Matrix<T>::from_rows(data, cols);
}

IntMat int_matrix(const py::handle& rows) { return matrix_of<Integer>(rows, integer_of); }
RatMat rat_matrix(const py::handle& rows) { return matrix_of<Rational>(rows, rational_of); }

// Anything nlohmann can hold, with "p/q" strings left as strings.
py::object json_to_py(const io::Json& j)
{
    return py::module_::import("json").attr("loads")(j.dump());
}

py::dict module_dict(const FiniteQuadraticModule& m)
{
    py::list q, gens;
    for (std::size_t i = 0; i < m.num_generators(); ++i)
        q.append(to_py(m.q_gen(i)));
    RatMat b(m.num_generators(), m.num_generators());
    for (std::size_t i = 0; i < m.num_generators(); ++i)
        for (std::size_t j = 0; j < m.num_generators(); ++j)
            b(i, j) = m.b_gen(i, j);
    for (const auto& l : m.lifts())
        gens.append(to_py(l));
    py::dict d;
    d["invariant_factors"] = m.orders();
    d["order"] = m.order();
    d["generators"] = gens;
    d["q_table"] = q;
    d["b_table"] = to_py(b);
    return d;
}

Lattice lattice_of(const py::handle& h)
{
    if (py::isinstance<py::str>(h))
        return io::lattice_from_spec(h.cast<std::string>());
    return Lattice(int_matrix(h));
}

} // namespace

PYBIND11_MODULE(_evenlat, m)
{
    m.doc() = "Exact lattices, discriminant forms and curve configurations";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
    py::register_exception<GuardExceeded>(m, "GuardExceeded", PyExc_RuntimeError);

    m.def("snf", [](py::handle a) {
        SmithForm s = snf(int_matrix(a));
        py::dict d;
        d["D"] = to_py(s.D);
        d["S"] = to_py(s.S);
        d["T"] = to_py(s.T);
        d["invariant_factors"] = to_py(s.invariant_factors());
        return d;
    }, py::arg("matrix"), "Smith form S A T = D of an integer matrix.");

    m.def("snf_rational", [](py::handle a) {
        RationalSmithForm s = snf_rational(rat_matrix(a));
        py::dict d;
        d["D"] = to_py(s.D);
        d["S"] = to_py(s.S);
        d["T"] = to_py(s.T);
        d["invariant_factors"] = to_py(s.diagonal());
        return d;
    }, py::arg("matrix"), "Smith form of a nonsingular rational matrix.");

    m.def("hnf", [](py::handle a) {
        HermiteForm h = hnf(int_matrix(a));
        py::dict d;
        d["H"] = to_py(h.H);
        d["U"] = to_py(h.U);
        d["rank"] = h.rank;
        return d;
    }, py::arg("matrix"));

    m.def("inverse", [](py::handle a) { return to_py(inverse(rat_matrix(a))); }, py::arg("matrix"));

    m.def("signature", [](py::handle g) {
        Signature s = signature(rat_matrix(g));
        return py::make_tuple(s.n_plus, s.n_minus, s.n_zero);
    }, py::arg("gram"), "(n+, n-, n0) of a symmetric matrix.");

    m.def("lattice", [](py::handle l) {
        Lattice x = lattice_of(l);
        py::dict d;
        d["gram"] = to_py(x.gram());
        d["rank"] = x.rank();
        d["det"] = to_py(x.det());
        d["signature"] = py::make_tuple(x.signature().n_plus, x.signature().n_minus);
        d["even"] = x.is_even();
        d["discriminant_group"] = to_py(discriminant_group(x).invariant_factors);
        return d;
    }, py::arg("lattice"), "Invariants of a Gram matrix or a named sum such as 'U+U(2)+<-4>^2'.");

    m.def("disc", [](py::handle l) { return module_dict(from_lattice(lattice_of(l))); }, py::arg("lattice"),
          "Discriminant group and form.");

    m.def("isotropic", [](py::handle l) {
        FiniteQuadraticModule fm = from_lattice(lattice_of(l));
        return isotropic_elements(fm);
    }, py::arg("lattice"), "Nonzero isotropic elements as exponent vectors.");

    m.def("isotropic_subgroups", [](py::handle l) {
        FiniteQuadraticModule fm = from_lattice(lattice_of(l));
        py::list out;
        for (const auto& h : isotropic_subgroups(fm))
            out.append(py::dict(py::arg("order") = h.order(), py::arg("generators") = h.generators));
        return out;
    }, py::arg("lattice"));

    m.def("overlattices", [](py::handle l) {
        FiniteQuadraticModule fm = from_lattice(lattice_of(l));
        py::list out;
        for (const auto& h : isotropic_subgroups(fm)) {
            OverlatticeData d = overlattice(fm, h);
            out.append(py::dict(py::arg("index") = h.order(), py::arg("basis") = to_py(d.basis),
                                py::arg("gram") = to_py(d.lattice.gram())));
        }
        return out;
    }, py::arg("lattice"), "Even overlattices, one per isotropic subgroup.");

    m.def("are_isomorphic", [](py::handle a, py::handle b, bool negate_second) {
        FiniteQuadraticModule x = from_lattice(lattice_of(a)), y = from_lattice(lattice_of(b));
        if (negate_second)
            y = negate(y);
        return are_isomorphic(x, y).has_value();
    }, py::arg("a"), py::arg("b"), py::arg("negate_second") = false,
       "Whether the discriminant forms are isomorphic (guarded by EVENLAT_GUARD_ORDER).");

    m.def("embed_check", [](py::handle ambient, py::handle gens) {
        Lattice amb = lattice_of(ambient);
        IntMat g = int_matrix(gens);
        py::dict d;
        d["primitive"] = is_primitive(amb, g);
        d["gram"] = to_py(sublattice(amb, g).induced_gram);
        d["snf"] = to_py(snf(g).invariant_factors());
        return d;
    }, py::arg("ambient"), py::arg("gens"));

    m.def("complement", [](py::handle ambient, py::handle gens) {
        SublatticeData c = orthogonal_complement(lattice_of(ambient), int_matrix(gens));
        py::dict d;
        d["basis"] = to_py(c.basis_coords);
        d["gram"] = to_py(c.induced_gram);
        d["degenerate"] = c.degenerate;
        return d;
    }, py::arg("ambient"), py::arg("gens"));

    m.def("reconstruct", [](int max_tier) {
        ReconstructOptions opt;
        opt.max_tier = max_tier;
        Reconstruction24 r = reconstruct_24(opt);
        py::list sols;
        for (const auto& s : r.solutions)
            sols.append(json_to_py(io::config_json(s)));
        py::dict d;
        d["tier"] = r.tier;
        d["tier1_count"] = r.tier1_count;
        d["tier1_classes"] = r.tier1_classes;
        d["tier2_count"] = r.tier2_count;
        d["anomalies"] = r.anomalies;
        d["solutions"] = sols;
        return d;
    }, py::arg("max_tier") = 2, "Census of the 24-curve configuration.");

    m.def("verify", [](std::vector<std::string> results, int tier, const std::string& format) -> py::object {
        VerifyInputs in;
        in.tier_policy = tier;
        VerificationReport r = run_all(in, results);
        if (format == "md")
            return py::str(report_markdown(r));
        return json_to_py(report_json(r));
    }, py::arg("results") = std::vector<std::string>{}, py::arg("tier") = 0, py::arg("format") = "json",
       "Runs the checkers; returns the report as a dict (or Markdown).");

    m.def("result_ids", &result_ids);
}
