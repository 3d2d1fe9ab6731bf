#include "twistor/gh_classifier.hpp"
#include "twistor/oracles.hpp"

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace twistor;

namespace {

SamplingConfig make_config(std::uint64_t seed, int samples, int triples, double tol,
                           bool w2w3_as_printed, bool w1w3_as_printed)
{
    SamplingConfig cfg;
    cfg.seed = seed;
    cfg.num_points = samples;
    cfg.num_arg_triples = triples;
    cfg.tol = tol;
    cfg.w2w3 = w2w3_as_printed ? W2W3Reading::AsPrinted : W2W3Reading::Cyclic;
    cfg.w1w3 = w1w3_as_printed ? W1W3Reading::AsPrinted : W1W3Reading::Standard;
    return cfg;
}

py::dict blocks_dict(const CurvatureBlocks& b)
{
    py::dict d;
    d["s"] = b.s;
    d["B"] = b.B;
    d["Wplus"] = b.Wplus;
    d["Wminus"] = b.Wminus;
    d["strict"] = b.strict;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Gray-Hervella classes of the product twistor structures";

    static py::exception<Error> error(m, "Error");
    static py::exception<InputError> input_error(m, "InputError", error.ptr());
    static py::exception<ValidationError> validation_error(m, "ValidationError", error.ptr());
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) {
                std::rethrow_exception(p);
            }
        } catch (const InputError& e) {
            py::set_error(input_error, e.what());
        } catch (const ValidationError& e) {
            py::set_error(validation_error, e.what());
        } catch (const Error& e) {
            py::set_error(error, e.what());
        }
    });

    m.def("model_names", &model_names);
    m.def(
        "model",
        [](const std::string& name, double s, const Mat3& B, const Mat3& Wminus) {
            return model(name, ModelParams{s, B, Wminus}).matrix();
        },
        py::arg("name"), py::arg("s") = 0.0, py::arg("B") = Mat3::Zero(),
        py::arg("Wminus") = Mat3::Zero());
    m.def(
        "decompose", [](const Mat6& R) { return blocks_dict(decompose(CurvatureOperator(R))); },
        py::arg("R"));
    m.def(
        "compose",
        [](double s, const Mat3& B, const Mat3& Wplus, const Mat3& Wminus) {
            CurvatureBlocks b;
            b.s = s;
            b.B = B;
            b.Wplus = Wplus;
            b.Wminus = Wminus;
            return compose(b).matrix();
        },
        py::arg("s"), py::arg("B"), py::arg("Wplus"), py::arg("Wminus"));
    m.def(
        "reverse_orientation",
        [](const Mat6& R) { return reverse_orientation(CurvatureOperator(R)).matrix(); },
        py::arg("R"));

    m.def(
        "hodge_star", [](const Vec6& sigma) { return hodge_star(TwoVector(sigma)).coeffs; },
        py::arg("sigma"));
    m.def(
        "sphere_to_J",
        [](const Vec6& u, int sign) {
            return sphere_to_J(TwoVector(u), sign > 0 ? Orientation::Plus : Orientation::Minus)
                .matrix();
        },
        py::arg("u"), py::arg("sign"));

    m.def(
        "residual",
        [](const std::string& cond, const Mat6& R, const std::string& component, double t1,
           double t2, int n, std::uint64_t seed, int samples, int triples, double tol,
           bool w2w3_as_printed, bool w1w3_as_printed) {
            return residual(parse_condition(cond), CurvatureOperator(R), component,
                            Params{t1, t2, n},
                            make_config(seed, samples, triples, tol, w2w3_as_printed,
                                        w1w3_as_printed));
        },
        py::arg("condition"), py::arg("R"), py::arg("component"), py::arg("t1") = 1.0,
        py::arg("t2") = 1.0, py::arg("n") = 1, py::arg("seed") = 0, py::arg("samples") = 64,
        py::arg("triples") = 32, py::arg("tol") = 1e-9, py::arg("w2w3_as_printed") = false,
        py::arg("w1w3_as_printed") = false);

    m.def(
        "classify_json",
        [](const Mat6& R, const std::string& component, double t1, double t2, int n,
           std::uint64_t seed, int samples, int triples, double tol, bool w2w3_as_printed,
           bool w1w3_as_printed) {
            const ClassReport r = classify(
                CurvatureOperator(R), component, Params{t1, t2, n},
                make_config(seed, samples, triples, tol, w2w3_as_printed, w1w3_as_printed));
            return to_json(r).dump(2);
        },
        py::arg("R"), py::arg("component"), py::arg("t1") = 1.0, py::arg("t2") = 1.0,
        py::arg("n") = 1, py::arg("seed") = 0, py::arg("samples") = 64, py::arg("triples") = 32,
        py::arg("tol") = 1e-9, py::arg("w2w3_as_printed") = false,
        py::arg("w1w3_as_printed") = false);

    m.def("theorem_ids", &theorem_ids);
    m.def(
        "verify_theorem_json",
        [](const std::string& id, std::uint64_t seed, int samples, int triples, double tol) {
            return to_json(verify_theorem(id, make_config(seed, samples, triples, tol, false,
                                                          false)))
                .dump(2);
        },
        py::arg("id"), py::arg("seed") = 0, py::arg("samples") = 64, py::arg("triples") = 32,
        py::arg("tol") = 1e-9);

    m.def(
        "run_oracles",
        [](std::uint64_t seed, int trials) {
            OracleOptions opt;
            opt.seed = seed;
            opt.trials = trials;
            py::list out;
            for (const OracleResult& r : run_oracles(opt)) {
                py::dict d;
                d["check"] = r.name;
                d["trials"] = r.trials;
                d["max_residual"] = r.max_residual;
                d["tolerance"] = r.tolerance;
                d["passed"] = r.passed();
                d["witness"] = r.witness;
                out.append(d);
            }
            return out;
        },
        py::arg("seed") = 1, py::arg("trials") = 100);
}
