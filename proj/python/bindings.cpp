#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "utq/acceptance.hpp"
#include "utq/composition.hpp"
#include "utq/derivations.hpp"
#include "utq/fock.hpp"
#include "utq/json_io.hpp"
#include "utq/qcalc.hpp"

namespace py = pybind11;
using namespace utq;

namespace {

FourierLoop make_loop(int N, bool real, bool include_zero,
                      const std::vector<std::pair<int, cplx>>& coeffs) {
  FourierLoop f(ModeSpec{N, include_zero}, real);
  for (const auto& [k, v] : coeffs) f.set(k, v);
  return f;
}

// pybind11 holders want non-const element types; hand the shared basis
// around in a tiny value wrapper instead
struct PyBasis {
  FockBasisPtr ptr;
};

}  // namespace

PYBIND11_MODULE(_utq, m) {
  m.doc() = "operator toolkit for quasisymmetric circle maps: composition operators, "
            "Siegel disc, Fock quantization, quantum differentials";

  py::class_<ModeSpec>(m, "ModeSpec")
      .def(py::init<int, bool>(), py::arg("N"), py::arg("include_zero") = false)
      .def_readonly("N", &ModeSpec::N)
      .def_readonly("include_zero", &ModeSpec::include_zero)
      .def_property_readonly("dim", &ModeSpec::dim);

  py::class_<FourierLoop>(m, "FourierLoop")
      .def(py::init(&make_loop), py::arg("N"), py::arg("real") = true,
           py::arg("include_zero") = false,
           py::arg("coeffs") = std::vector<std::pair<int, cplx>>{})
      .def_property_readonly("spec", &FourierLoop::spec)
      .def_property_readonly("is_real", &FourierLoop::is_real)
      .def("coeff", &FourierLoop::coeff, py::arg("k"))
      .def("set", &FourierLoop::set, py::arg("k"), py::arg("value"))
      .def("evaluate", &FourierLoop::evaluate, py::arg("theta"))
      .def("band", &FourierLoop::band);

  m.def("h_half_norm", &h_half_norm);
  m.def("symplectic_form", &symplectic_form);
  m.def("kahler_metric", &kahler_metric);
  m.def("hermitian_product", &hermitian_product);
  m.def("apply_J0", &apply_J0);

  py::class_<Quadruple>(m, "Quadruple")
      .def(py::init([](cplx z1, cplx z2, cplx z3, cplx z4) {
        return Quadruple{{z1, z2, z3, z4}};
      }))
      .def_property_readonly("points",
                             [](const Quadruple& q) {
                               return std::vector<cplx>(q.z.begin(), q.z.end());
                             });
  m.def("cross_ratio", &cross_ratio);

  py::class_<BaResult>(m, "BaResult")
      .def_readonly("epsilon_hat", &BaResult::epsilon_hat)
      .def_readonly("worst", &BaResult::worst);

  py::class_<CircleMap>(m, "CircleMap")
      .def_static("identity", &CircleMap::identity)
      .def_static("rotation", &CircleMap::rotation, py::arg("angle"))
      .def_static("mobius", &CircleMap::make_mobius, py::arg("a"), py::arg("angle") = 0.0)
      .def_static("flow", &CircleMap::make_flow, py::arg("v"), py::arg("t"),
                  py::arg("steps_per_unit") = 1024)
      .def_static("zigzag", &CircleMap::make_zigzag, py::arg("s"),
                  py::arg("breakpoints") = std::vector<double>{})
      .def_static("sampled", &CircleMap::make_sampled, py::arg("lift_values"))
      .def("lift", &CircleMap::lift, py::arg("theta"))
      .def("evaluate", &CircleMap::evaluate, py::arg("theta"))
      .def("map_point", &CircleMap::map_point, py::arg("z"))
      .def("inverse", &CircleMap::inverse, py::arg("grid") = 4096)
      .def_readwrite("dilatation_hint", &CircleMap::dilatation_hint);
  m.def("compose", &compose, py::arg("outer"), py::arg("inner"));
  m.def("normalized", &normalized);
  m.def("dilatation_from_derivative", &dilatation_from_derivative, py::arg("map"),
        py::arg("grid") = 4096);
  m.def("ba_test", &ba_test, py::arg("map"), py::arg("samples"), py::arg("seed"));

  py::class_<OneParticleOperator>(m, "OneParticleOperator")
      .def_property_readonly("matrix",
                             [](const OneParticleOperator& op) { return op.m; })
      .def_property_readonly("spec", [](const OneParticleOperator& op) { return op.spec; })
      .def("mode_index", &OneParticleOperator::index_of, py::arg("k"))
      .def("apply", &OneParticleOperator::apply);

  m.def("build_th", &build_Th, py::arg("map"), py::arg("spec"), py::arg("grid"));
  m.def("check_symplectic", &check_symplectic, py::arg("T"), py::arg("trials"),
        py::arg("band"), py::arg("seed"));
  py::class_<NormBoundCheck>(m, "NormBoundCheck")
      .def_readonly("norm_est", &NormBoundCheck::norm_est)
      .def_readonly("bound", &NormBoundCheck::bound);
  m.def("operator_norm_bound_check", &operator_norm_bound_check, py::arg("map"), py::arg("T"),
        py::arg("band") = -1);
  m.def("blocks", [](const OneParticleOperator& T) {
    const BlockDecomposition B = blocks(T);
    return std::make_pair(B.a, B.b);
  });
  m.def("block_relations_defect",
        [](const Mat& a, const Mat& b, int band) {
          return block_relations_defect(BlockDecomposition{a, b}, band);
        },
        py::arg("a"), py::arg("b"), py::arg("band") = -1);
  m.def("siegel_point_of", [](const OneParticleOperator& T) {
    const SiegelPointResult r = siegel_point_of(T);
    return std::make_pair(r.Z, r.asymmetry);
  });
  m.def("hs_norm_b", &hs_norm_b);

  py::class_<SymplecticElement>(m, "SymplecticElement")
      .def(py::init([](const Mat& a, const Mat& b) { return SymplecticElement{a, b}; }))
      .def_readonly("a", &SymplecticElement::a)
      .def_readonly("b", &SymplecticElement::b)
      .def("relations_defect", &SymplecticElement::relations_defect)
      .def("__mul__", [](const SymplecticElement& x, const SymplecticElement& y) { return x * y; });
  m.def("in_disc", [](const Mat& Z) {
    const DiscCheck c = in_disc(Z);
    return py::make_tuple(c.ok, c.min_eig, c.asymmetry);
  });
  m.def("siegel_act", &siegel_act, py::arg("A"), py::arg("Z"));
  m.def("stabilizer_check", &stabilizer_check, py::arg("A"), py::arg("tol") = 1e-10);
  m.def("random_symplectic", &random_symplectic, py::arg("n"), py::arg("seed"), py::arg("band"),
        py::arg("strength"));
  m.def("expm", &expm);

  m.def("hilbert_sign", [](int k) { return k >= 0 ? 1 : -1; });
  m.def("hilbert_pv_oracle", &hilbert_pv_oracle, py::arg("f"), py::arg("grid"));
  m.def("mult_operator", &mult_operator, py::arg("f"), py::arg("spec"));
  m.def("quantum_differential",
        [](const FourierLoop& f, const ModeSpec& spec) {
          return quantum_differential(f, spec).op;
        },
        py::arg("f"), py::arg("spec"));
  m.def("hs_norm_vs_sobolev", [](const FourierLoop& f) {
    const HsVsSobolev r = hs_norm_vs_sobolev(f);
    return py::make_tuple(r.hs, r.sobolev, r.ratio);
  });
  m.attr("QDIFF_HS_RATIO") = kQdiffHsRatio;
  m.def("finite_difference_op", &finite_difference_op, py::arg("f"), py::arg("grid"),
        py::arg("spec"));
  m.def("quasiclassical_check", &quasiclassical_check, py::arg("f"), py::arg("grid"));
  m.def("matrix_rank", &matrix_rank, py::arg("m"), py::arg("threshold") = 1e-10);

  py::class_<FockConfig>(m, "FockConfig")
      .def(py::init([](int n, int d, double lam) { return FockConfig{n, d, lam}; }),
           py::arg("n_modes"), py::arg("max_degree"), py::arg("lambda_") = 1.0)
      .def_readonly("n_modes", &FockConfig::n_modes)
      .def_readonly("max_degree", &FockConfig::max_degree);

  py::class_<PyBasis>(m, "FockBasis")
      .def_static("make", [](const FockConfig& cfg) { return PyBasis{FockBasis::make(cfg)}; })
      .def_property_readonly("dim", [](const PyBasis& b) { return b.ptr->dim(); })
      .def("exponents", [](const PyBasis& b, int idx) { return b.ptr->exponents(idx); })
      .def("degree", [](const PyBasis& b, int idx) { return b.ptr->degree(idx); })
      .def("index_of", [](const PyBasis& b, const MultiIndex& K) { return b.ptr->index_of(K); });

  py::class_<FockState>(m, "FockState")
      .def_property_readonly("coefficients", [](const FockState& s) { return s.c; })
      .def("norm", &FockState::norm);

  py::class_<FockOperator>(m, "FockOperator")
      .def_property_readonly("matrix", [](const FockOperator& op) { return op.m; })
      .def("apply", &FockOperator::apply);

  m.def("vacuum", [](const PyBasis& b) { return vacuum(b.ptr); });
  m.def("basis_state",
        [](const PyBasis& b, const MultiIndex& K) { return basis_state(b.ptr, K); });
  m.def("fock_inner", &inner);
  m.def("creation", [](int n, const PyBasis& b) { return creation(n, b.ptr); },
        py::arg("n"), py::arg("basis"));
  m.def("annihilation", [](int n, const PyBasis& b) { return annihilation(n, b.ptr); },
        py::arg("n"), py::arg("basis"));
  m.def("heisenberg_rep",
        [](const Vec& plus, const Vec& minus, const PyBasis& b) {
          return heisenberg_rep(plus, minus, b.ptr);
        },
        py::arg("plus"), py::arg("minus"), py::arg("basis"));
  m.def("wplus_coordinates", &wplus_coordinates, py::arg("f"), py::arg("n_modes"));
  m.def("coherent_state",
        [](const Mat& Z, const PyBasis& b) { return coherent_state(Z, b.ptr); },
        py::arg("Z"), py::arg("basis"));
  m.def("normalized_coherent",
        [](const Mat& Z, const PyBasis& b) { return normalized_coherent(Z, b.ptr); },
        py::arg("Z"), py::arg("basis"));
  m.def("coherent_inner", [](const Mat& Z1, const Mat& Z2, const PyBasis& basis) {
    const CoherentInner ci = coherent_inner(Z1, Z2, basis.ptr);
    return py::make_tuple(ci.truncated, ci.closed_form);
  });
  m.def("segal_action", [](const SymplecticElement& A, const Mat& Z) {
    const SegalAction act = segal_action(A, Z);
    return py::make_tuple(act.phase, act.target);
  });

  py::class_<SpAlgebraElement>(m, "SpAlgebraElement")
      .def(py::init([](const Mat& a, const Mat& b, const Mat& g) {
             return SpAlgebraElement{a, b, g};
           }),
           py::arg("alpha"), py::arg("beta"), py::arg("gamma"))
      .def_readonly("alpha", &SpAlgebraElement::alpha)
      .def_readonly("beta", &SpAlgebraElement::beta)
      .def_readonly("gamma", &SpAlgebraElement::gamma);
  m.def("sp_bracket", &sp_bracket);
  m.def("symplectic_rep",
        [](const SpAlgebraElement& X, const PyBasis& b) { return symplectic_rep(X, b.ptr); },
        py::arg("X"), py::arg("basis"));
  m.def("cocycle_defect", [](const SpAlgebraElement& X1, const SpAlgebraElement& X2,
                             const PyBasis& basis) {
    const CocycleResult r = cocycle_defect(X1, X2, basis.ptr);
    return py::make_tuple(r.operator_scalar, r.closed_form, r.off_scalar_residual);
  });
  m.def("second_quantize",
        [](const Mat& X, const PyBasis& b) { return second_quantize(X, b.ptr); },
        py::arg("X"), py::arg("basis"));
  m.def("interior_defect", &interior_defect);

  m.def("map_quantum_generators", [](const CircleMap& h, int n_modes, int cutoff, int grid) {
    const MapQuantumGenerators g = map_quantum_generators(h, n_modes, cutoff, grid);
    return py::make_tuple(g.wplus_compression, g.hankel_block);
  });

  m.def("run_acceptance", [](int criterion, std::uint64_t seed) {
    AcceptanceParams p;
    if (seed != 0) p.seed = seed;
    const Report rep = run_criterion(criterion, p);
    return py::make_tuple(rep.experiment, rep.pass(), rep.to_json().dump(2));
  }, py::arg("criterion"), py::arg("seed") = 0);

  m.def("loop_from_json", [](const std::string& text) {
    return loop_from_json(Json::parse(text));
  });
  m.def("map_from_json", [](const std::string& text) {
    return map_from_json(Json::parse(text));
  });
}
