// Python bindings: numpy arrays in, plain dicts/lists out. Reports reuse the
// JSON serialization so field names match the CLI output exactly.

#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "smatrix/audit.hpp"
#include "smatrix/bounds.hpp"
#include "smatrix/constructions.hpp"
#include "smatrix/io.hpp"
#include "smatrix/linalg.hpp"
#include "smatrix/optimizer.hpp"
#include "smatrix/serialize.hpp"

namespace py = pybind11;

namespace {

smatrix::Matrix matrix_from_array(const py::array_t<double>& arr) {
    const auto buf = arr.request();
    if (buf.ndim != 2) {
        throw smatrix::DimensionError("expected a 2-d array");
    }
    const auto rows = static_cast<std::size_t>(buf.shape[0]);
    const auto cols = static_cast<std::size_t>(buf.shape[1]);
    smatrix::Matrix m(rows, cols);
    const auto view = arr.unchecked<2>();
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            m.at(i, j) = view(static_cast<py::ssize_t>(i),
                              static_cast<py::ssize_t>(j));
        }
    }
    return m;
}

py::array_t<double> array_from_matrix(const smatrix::Matrix& m) {
    py::array_t<double> arr({m.rows(), m.cols()});
    auto view = arr.mutable_unchecked<2>();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            view(static_cast<py::ssize_t>(i), static_cast<py::ssize_t>(j)) =
                m(i, j);
        }
    }
    return arr;
}

// Route report structs through their JSON form to plain Python objects.
py::object json_to_py(const smatrix::json& j) {
    namespace nj = nlohmann;
    switch (j.type()) {
        case nj::detail::value_t::null: return py::none();
        case nj::detail::value_t::boolean: return py::bool_(j.get<bool>());
        case nj::detail::value_t::number_integer:
            return py::int_(j.get<long long>());
        case nj::detail::value_t::number_unsigned:
            return py::int_(j.get<unsigned long long>());
        case nj::detail::value_t::number_float:
            return py::float_(j.get<double>());
        case nj::detail::value_t::string: return py::str(j.get<std::string>());
        case nj::detail::value_t::array: {
            py::list out;
            for (const auto& item : j) out.append(json_to_py(item));
            return out;
        }
        case nj::detail::value_t::object: {
            py::dict out;
            for (auto it = j.begin(); it != j.end(); ++it) {
                out[py::str(it.key())] = json_to_py(it.value());
            }
            return out;
        }
        default:
            throw smatrix::InternalError("unsupported JSON value type");
    }
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    using namespace smatrix;
    m.doc() = "Frobenius-norm lower-bound toolkit for non-negative matrices";

    py::register_exception<Error>(m, "ToolkitError", PyExc_ValueError);

    m.def("inverse_frobenius_norm",
          [](const py::array_t<double>& a) {
              return inverse_frobenius_norm(matrix_from_array(a));
          },
          py::arg("matrix"));

    m.def("sloane_coefficient", &sloane_coefficient, py::arg("n"));
    m.def("cheng_even_bound", &cheng_even_bound, py::arg("n"));
    m.def("h_value",
          [](const py::array_t<double>& a) {
              return h_value(matrix_from_array(a));
          },
          py::arg("matrix"));
    m.def("h_upper", &h_upper, py::arg("n"));

    m.def("sylvester_hadamard",
          [](unsigned k) { return array_from_matrix(sylvester_hadamard(k).body); },
          py::arg("k"));
    m.def("paley_hadamard",
          [](std::uint64_t q) { return array_from_matrix(paley_hadamard(q).body); },
          py::arg("q"));
    m.def("quadratic_residue_smatrix",
          [](std::uint64_t q) {
              return array_from_matrix(quadratic_residue_smatrix(q).body);
          },
          py::arg("q"));
    m.def("is_hadamard",
          [](const py::array_t<double>& a) {
              return is_hadamard(matrix_from_array(a));
          },
          py::arg("matrix"));
    m.def("is_smatrix",
          [](const py::array_t<double>& a) {
              return is_smatrix(matrix_from_array(a));
          },
          py::arg("matrix"));

    m.def("bound_report",
          [](const py::array_t<double>& a, double tolerance) {
              return json_to_py(to_json(bound_report(matrix_from_array(a), tolerance)));
          },
          py::arg("matrix"), py::arg("tolerance") = kEqualityTolerance);
    m.def("cauchy_schwarz_chain",
          [](const py::array_t<double>& a, double tolerance) {
              return json_to_py(
                  to_json(cauchy_schwarz_chain(matrix_from_array(a), tolerance)));
          },
          py::arg("matrix"), py::arg("tolerance") = kEqualityTolerance);
    m.def("audit_prop",
          [](const py::array_t<double>& b, double tolerance) {
              return json_to_py(to_json(audit_prop(matrix_from_array(b), tolerance)));
          },
          py::arg("matrix"), py::arg("tolerance") = kAuditTolerance);
    m.def("find_good_indices",
          [](const py::array_t<double>& b, int t, double tolerance) {
              return json_to_py(
                  to_json(find_good_indices(matrix_from_array(b), t, tolerance)));
          },
          py::arg("matrix"), py::arg("t"), py::arg("tolerance") = kAuditTolerance);
    m.def("extract_rounded_pair",
          [](const py::array_t<double>& b, int t, double tolerance) {
              return json_to_py(
                  to_json(extract_rounded_pair(matrix_from_array(b), t, tolerance)));
          },
          py::arg("matrix"), py::arg("t"), py::arg("tolerance") = kAuditTolerance);
    m.def("contradiction_scan",
          [](long long n_min, long long n_max) {
              py::list out;
              for (const auto& row : contradiction_scan(n_min, n_max)) {
                  out.append(json_to_py(to_json(row)));
              }
              return out;
          },
          py::arg("n_min"), py::arg("n_max"));

    m.def("minimize",
          [](std::size_t n, std::size_t starts, std::uint64_t seed,
             std::size_t max_iters, double tolerance) {
              OptimizerConfig cfg;
              cfg.n = n;
              cfg.starts = starts;
              cfg.seed = seed;
              cfg.max_iters = max_iters;
              cfg.tolerance = tolerance;
              const OptimizerRun run = projected_gradient_minimize(cfg);
              auto out = json_to_py(to_json(run, cfg)).cast<py::dict>();
              out["best_matrix"] = array_from_matrix(run.best_matrix);
              return out;
          },
          py::arg("n"), py::arg("starts") = 32, py::arg("seed") = 1,
          py::arg("max_iters") = 2000, py::arg("tolerance") = 1e-7);
    m.def("binary_oracle",
          [](std::size_t n) {
              const OracleResult res = binary_oracle(n);
              py::list mins;
              for (const Matrix& mm : res.minimizers) {
                  mins.append(array_from_matrix(mm));
              }
              return py::make_tuple(res.min_value, mins);
          },
          py::arg("n"));

    m.def("read_matrix",
          [](const std::string& path) {
              return array_from_matrix(read_matrix_file(path));
          },
          py::arg("path"));
    m.def("write_matrix",
          [](const py::array_t<double>& a, const std::string& path) {
              write_matrix_file(matrix_from_array(a), path);
          },
          py::arg("matrix"), py::arg("path"));
}
