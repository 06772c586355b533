#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>

#include "nilcount/bounds.hpp"
#include "nilcount/burnside.hpp"
#include "nilcount/cycle_stats.hpp"
#include "nilcount/oracle.hpp"
#include "nilcount/stirling.hpp"

namespace py = pybind11;
using namespace nilcount;

namespace {

// Arbitrary-precision values cross the boundary as exact python ints.
py::int_ to_py(const BigInt& value) {
  PyObject* obj = PyLong_FromString(value.str().c_str(), nullptr, 10);
  if (obj == nullptr) {
    throw py::error_already_set();
  }
  return py::reinterpret_steal<py::int_>(obj);
}

IntegerPartition lam(const std::string& text) { return IntegerPartition::parse(text); }

py::dict bound_to_dict(const BoundResult& result) {
  py::dict out;
  out["n"] = result.n;
  out["floored"] = to_py(result.floored);
  out["rational"] = to_fraction_string(result.exact);
  py::list terms;
  for (auto const& term : result.terms) {
    py::dict entry;
    entry["r"] = term.r;
    entry["lambda"] = term.lambda.to_string();
    entry["value"] = to_fraction_string(term.value);
    terms.append(std::move(entry));
  }
  out["terms"] = std::move(terms);
  return out;
}

}  // namespace

PYBIND11_MODULE(_nilcount, m) {
  m.doc() = "exact enumeration of 3-nilpotent semigroups";

  // exact combinatorial kernels
  m.def("stirling2", [](long n, long k) { return to_py(stirling2(n, k)); }, py::arg("n"),
        py::arg("k"));
  m.def("partial_partition_count",
        [](long n, long k) { return to_py(partial_partition_count(n, k)); }, py::arg("n"),
        py::arg("k"));
  m.def("bell", [](long m_) { return to_py(bell(m_)); }, py::arg("m"));
  m.def("binomial", [](long n, long k) { return to_py(binomial(n, k)); }, py::arg("n"),
        py::arg("k"));
  m.def("factorial", [](long n) { return to_py(factorial(n)); }, py::arg("n"));
  m.def("scaled_stirling", [](long p, long q) { return to_py(scaled_stirling(p, q)); },
        py::arg("p"), py::arg("q"));

  // cycle types; partitions are passed as strings like "1^2,2^1"
  m.def("partitions_of", [](int r) {
    std::vector<std::string> out;
    for (auto const& lambda : partitions_of(r)) {
      out.push_back(lambda.to_string());
    }
    return out;
  }, py::arg("r"));
  m.def("weight", [](const std::string& text) { return to_py(weight(lam(text))); },
        py::arg("lambda_"));
  m.def("beta", [](const std::string& text, int d) { return beta(lam(text), d); },
        py::arg("lambda_"), py::arg("d") = 1);
  m.def("delta", [](const std::string& text) { return delta(lam(text)); }, py::arg("lambda_"));
  m.def("gamma", [](const std::string& text) { return gamma(lam(text)); }, py::arg("lambda_"));
  m.def("zeta", [](const std::string& text) { return zeta(lam(text)); }, py::arg("lambda_"));
  m.def("eta", [](const std::string& text) { return eta(lam(text)); }, py::arg("lambda_"));
  m.def("stats", [](const std::string& text) {
    auto stats = cycle_stats(lam(text));
    py::dict out;
    out["lambda"] = lam(text).to_string();
    out["weight"] = to_py(stats.weight);
    py::dict beta_map;
    for (auto const& [d, value] : stats.beta) {
      beta_map[py::int_(d)] = value;
    }
    out["beta"] = std::move(beta_map);
    out["delta"] = stats.delta;
    out["gamma"] = stats.gamma;
    out["zeta"] = stats.zeta;
    out["eta"] = stats.eta;
    return out;
  }, py::arg("lambda_"));

  // closed-form counts and bounds
  m.def("t_presentation", [](long n) { return to_py(t_presentation(n)); }, py::arg("n"));
  m.def("t_identity", [](long n) { return to_py(t_identity(n)); }, py::arg("n"));
  m.def("commutative_presentation",
        [](long n) { return to_py(commutative_presentation(n)); }, py::arg("n"));
  m.def("commutative_identity", [](long n) { return to_py(commutative_identity(n)); },
        py::arg("n"));
  m.def("rank_stratified_presentation",
        [](int r) { return to_py(rank_stratified_presentation(r)); }, py::arg("r"));
  m.def("tn_over_nfact", [](long n) { return to_fraction_string(tn_over_nfact(n)); },
        py::arg("n"));
  m.def("twisted_fixed_points",
        [](const std::string& text, long n) { return to_py(twisted_fixed_points(lam(text), n)); },
        py::arg("lambda_"), py::arg("n"));
  m.def("correction_term_1a2b", [](int mu1, int mu2, long n) {
    return to_fraction_string(correction_term_1a2b(mu1, mu2, n));
  }, py::arg("mu1"), py::arg("mu2"), py::arg("n"));
  m.def("semirigid_iso_bound", [](long n) { return bound_to_dict(semirigid_iso_bound(n)); },
        py::arg("n"));
  m.def("commutative_semirigid_bound",
        [](long n) { return bound_to_dict(commutative_semirigid_bound(n)); }, py::arg("n"));
  m.def("selfdual_semirigid_bound",
        [](long n) { return bound_to_dict(selfdual_semirigid_bound(n)); }, py::arg("n"));
  m.def("equivalence_semirigid_bound",
        [](long n) { return bound_to_dict(equivalence_semirigid_bound(n)); }, py::arg("n"));

  // exact Burnside counts
  m.def("fixed_partial_partitions", [](const std::string& text, long k) {
    return to_py(fixed_partial_partitions(lam(text), k));
  }, py::arg("lambda_"), py::arg("k"));
  m.def("iso_classes_exact", [](long n) { return to_py(iso_classes_exact(n)); }, py::arg("n"));

  // brute-force oracle
  m.def("orbit_census", [](long n, bool allow_slow, int threads) {
    auto report = orbit_census(n, {allow_slow, threads});
    py::dict out;
    for (auto const& key : census_keys()) {
      out[py::str(key)] = to_py(report.counts.at(key));
    }
    return out;
  }, py::arg("n"), py::arg("allow_slow") = false, py::arg("threads") = 0);
  m.def("fixed_points_brute", [](int r, int k, const std::string& cycles, bool twist) {
    return to_py(fixed_points_brute(r, k, {parse_cycles(cycles, r), twist}));
  }, py::arg("r"), py::arg("k"), py::arg("perm"), py::arg("twist") = false);
  m.def("classify", [](int r, const std::vector<int>& cells) {
    std::vector<uint8_t> bytes;
    bytes.reserve(cells.size());
    for (int cell : cells) {
      bytes.push_back(static_cast<uint8_t>(cell));
    }
    auto flags = classify(PartialPartition::from_cells(r, std::move(bytes)));
    py::dict out;
    out["rigid"] = flags.rigid;
    out["semirigid"] = flags.semirigid;
    out["commutative"] = flags.commutative;
    out["selfdual"] = flags.selfdual;
    return out;
  }, py::arg("r"), py::arg("cells"));

  m.attr("__version__") = "1.0.0";
}
