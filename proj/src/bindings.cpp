#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "mwb/bounds.hpp"
#include "mwb/cli.hpp"
#include "mwb/geometry.hpp"
#include "mwb/matroid.hpp"
#include "mwb/matroid_io.hpp"
#include "mwb/search.hpp"
#include "mwb/structure.hpp"

namespace py = pybind11;
using namespace mwb;

namespace {

py::object json_to_py(const Json& j) {
    switch (j.type()) {
        case Json::value_t::null: return py::none();
        case Json::value_t::boolean: return py::bool_(j.get<bool>());
        case Json::value_t::number_integer: return py::int_(j.get<long long>());
        case Json::value_t::number_unsigned: return py::int_(j.get<unsigned long long>());
        case Json::value_t::number_float: return py::float_(j.get<double>());
        case Json::value_t::string: return py::str(j.get<std::string>());
        case Json::value_t::array: {
            py::list out;
            for (const auto& v : j) out.append(json_to_py(v));
            return out;
        }
        case Json::value_t::object: {
            py::dict out;
            for (auto it = j.begin(); it != j.end(); ++it)
                out[py::str(it.key())] = json_to_py(it.value());
            return out;
        }
        default: return py::none();
    }
}

// Thin ownership wrapper so every operation returns the same Python type.
struct PyMatroid {
    MatroidPtr p;
};

IndexSet to_set(const std::vector<int>& v) { return IndexSet::of(v); }

py::object search_result_to_py(const RestrictionResult& r) {
    py::dict d;
    d["outcome"] = r.outcome == Outcome::Found  ? "found"
                   : r.outcome == Outcome::None ? "none"
                                                : "inconclusive";
    d["nodes"] = r.nodes;
    if (r.witness) d["map"] = r.witness->map;
    return d;
}

py::object minor_result_to_py(const MinorResult& r) {
    py::dict d;
    d["outcome"] = r.outcome == Outcome::Found  ? "found"
                   : r.outcome == Outcome::None ? "none"
                                                : "inconclusive";
    d["nodes"] = r.nodes;
    if (r.witness) {
        d["contract"] = r.witness->contract.elements();
        d["delete"] = r.witness->del.elements();
        d["map"] = r.witness->inner.map;
    }
    return d;
}

StackCertificate cert_from_py(const py::dict& d) {
    StackCertificate c;
    c.q = d["q"].cast<int>();
    c.t = d["t"].cast<int>();
    for (auto layer : d["layers"])
        c.layers.push_back(to_set(layer.cast<std::vector<int>>()));
    return c;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "matroid workbench: exact finite-field matroids, geometry, density bounds, "
              "stack certificates and restriction search";

    py::class_<PyMatroid>(m, "Matroid")
        .def("__len__", [](const PyMatroid& s) { return s.p->size(); })
        .def("size", [](const PyMatroid& s) { return s.p->size(); })
        .def("rank", [](const PyMatroid& s, const std::vector<int>& x) { return s.p->rank(to_set(x)); })
        .def("full_rank", [](const PyMatroid& s) { return s.p->full_rank(); })
        .def("closure",
             [](const PyMatroid& s, const std::vector<int>& x) {
                 return s.p->closure(to_set(x)).elements();
             })
        .def("epsilon", [](const PyMatroid& s) { return epsilon(*s.p); })
        .def("is_simple", [](const PyMatroid& s) { return is_simple(*s.p); })
        .def("parallel_classes",
             [](const PyMatroid& s) {
                 std::vector<std::vector<int>> out;
                 for (const auto& c : simplify(*s.p).classes) out.push_back(c.elements());
                 return out;
             })
        .def("loops", [](const PyMatroid& s) { return simplify(*s.p).loops.elements(); })
        .def("flats",
             [](const PyMatroid& s, int k) {
                 std::vector<std::vector<int>> out;
                 for (const auto& f : flats_of_rank(*s.p, k)) out.push_back(f.elements());
                 return out;
             })
        .def("local_connectivity",
             [](const PyMatroid& s, const std::vector<int>& f, const std::vector<int>& x) {
                 return local_connectivity(*s.p, to_set(f), to_set(x));
             })
        .def("minor",
             [](const PyMatroid& s, const std::vector<int>& c, const std::vector<int>& d) {
                 return PyMatroid{minor(s.p, to_set(c), to_set(d))};
             },
             py::arg("contract"), py::arg("delete"))
        .def("contract",
             [](const PyMatroid& s, const std::vector<int>& c) {
                 return PyMatroid{minor(s.p, to_set(c), IndexSet{})};
             })
        .def("restrict",
             [](const PyMatroid& s, const std::vector<int>& keep) {
                 return PyMatroid{restriction(s.p, to_set(keep))};
             })
        .def("to_json", [](const PyMatroid& s) { return matroid_to_json(*s.p).dump(2); })
        .def("__repr__", [](const PyMatroid& s) {
            std::ostringstream os;
            os << "<Matroid n=" << s.p->size() << " r=" << s.p->full_rank() << ">";
            return os.str();
        });

    m.def("pg", [](int r, int q) { return PyMatroid{pg(r, q)}; }, py::arg("rank"), py::arg("q"));
    m.def("ag", [](int r, int q) { return PyMatroid{ag(r, q)}; }, py::arg("rank"), py::arg("q"));
    m.def("uniform", [](int r, int n) { return PyMatroid{uniform_matroid(r, n)}; });
    m.def("direct_sum",
          [](const PyMatroid& a, const PyMatroid& b) { return PyMatroid{direct_sum(a.p, b.p)}; });
    m.def("from_json", [](const std::string& text) {
        return PyMatroid{matroid_from_json(Json::parse(text))};
    });

    m.def(
        "find_restriction",
        [](const PyMatroid& host, const PyMatroid& target, uint64_t budget) {
            SearchOptions opts;
            opts.node_budget = budget;
            return search_result_to_py(find_restriction(*host.p, *target.p, opts));
        },
        py::arg("host"), py::arg("target"), py::arg("budget") = 0);
    m.def("verify_restriction",
          [](const PyMatroid& host, const PyMatroid& target, const std::vector<int>& map) {
              return verify_restriction(*host.p, *target.p, RestrictionWitness{map});
          });
    m.def(
        "has_u2_minor",
        [](const PyMatroid& host, int line_len) {
            return minor_result_to_py(has_u2_minor(*host.p, line_len));
        },
        py::arg("host"), py::arg("m"));
    m.def(
        "is_representable",
        [](const PyMatroid& host, int q, int t) {
            auto r = is_representable(*host.p, q, t);
            py::dict d;
            d["outcome"] = r.kind == RepresentabilityResult::Representable      ? "representable"
                           : r.kind == RepresentabilityResult::NotRepresentable ? "not-representable"
                                                                                : "refused";
            if (r.kind == RepresentabilityResult::Representable) d["embedding"] = r.embedding;
            if (!r.reason.empty()) d["reason"] = r.reason;
            return d;
        },
        py::arg("host"), py::arg("q"), py::arg("t") = 4);
    m.def("find_pg_minor", [](const PyMatroid& host, int rank, int q) {
        return minor_result_to_py(find_pg_minor(*host.p, rank, q));
    });

    m.def(
        "kung_check",
        [](const PyMatroid& host, int ell, py::object q, bool membership) {
            std::optional<int> ratio_q;
            if (!q.is_none()) ratio_q = q.cast<int>();
            return json_to_py(density_report_to_json(kung_check(*host.p, ell, ratio_q, membership)));
        },
        py::arg("host"), py::arg("ell"), py::arg("q") = py::none(),
        py::arg("check_membership") = false);
    m.def("kungrel_check", [](const PyMatroid& host, const std::vector<int>& c, int ell) {
        return json_to_py(kungrel_to_json(kungrel_check(*host.p, to_set(c), ell)));
    });
    m.def("projection_bound", [](int q, int r_after, int k) {
        auto r = projection_bound(q, r_after, k);
        return py::make_tuple(r.numerator(), r.denominator());
    });
    m.def("verify_projection_instance",
          [](const PyMatroid& host, const std::vector<int>& rmap, const std::vector<int>& flat,
             int q) {
              return json_to_py(projection_check_to_json(
                  verify_projection_instance(*host.p, RestrictionWitness{rmap}, to_set(flat), q)));
          });

    m.def("build_stack_greedy", [](const PyMatroid& host, int q, int t) {
        return json_to_py(stack_cert_to_json(build_stack_greedy(*host.p, q, t)));
    });
    m.def("verify_stack", [](const PyMatroid& host, const py::dict& cert) {
        return json_to_py(stack_verdict_to_json(verify_stack(*host.p, cert_from_py(cert))));
    });
    m.def("stack_flat_search", [](const PyMatroid& host, const std::vector<int>& rmap,
                                  const py::dict& cert, int h) {
        auto res = stack_flat_search(*host.p, RestrictionWitness{rmap}, cert_from_py(cert), h);
        return res.flat.elements();
    });
    m.def("is_weakly_round", [](const PyMatroid& host) {
        return json_to_py(roundness_to_json(is_weakly_round(*host.p)));
    });
    m.def(
        "weakly_round_restriction",
        [](const PyMatroid& host, long long beta_num, long long beta_den, int q, int d) {
            auto res = weakly_round_restriction(host.p, DensityThreshold{Rat(beta_num, beta_den), q}, d);
            py::dict out;
            out["outcome"] = res.outcome == WeaklyRoundRestriction::Ok ? "ok" : "floor";
            out["ground"] = res.ground.elements();
            out["steps"] = res.steps;
            out["matroid"] = py::cast(PyMatroid{res.matroid});
            return out;
        },
        py::arg("host"), py::arg("beta_num"), py::arg("beta_den"), py::arg("q"), py::arg("d"));
    m.def("majority_flat", [](const PyMatroid& host, const std::vector<int>& f0, int t) {
        auto res = majority_flat(*host.p, to_set(f0), t);
        py::dict out;
        out["flat"] = res.flat.elements();
        out["family_size"] = res.family_size;
        out["gained"] = res.gained;
        out["inequality_holds"] = res.inequality_holds;
        out["identity_applicable"] = res.identity_applicable;
        out["identity_holds"] = res.identity_holds;
        return out;
    });
    m.def("dense_point_above",
          [](const PyMatroid& host, const std::vector<int>& x, const std::vector<int>& c) {
              auto res = dense_point_above(*host.p, to_set(x), to_set(c));
              py::dict out;
              out["found"] = res.found;
              if (res.found) {
                  out["point"] = res.point.elements();
                  out["size"] = res.size;
              }
              return out;
          });

    m.def("run_cli", [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code = run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
    });

    m.attr("__version__") = "0.1.0";
}
