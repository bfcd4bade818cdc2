#include "refpoly_cli/examples.hpp"

#include <chrono>
#include <map>
#include <ostream>

#include "refpoly/constructions.hpp"
#include "refpoly/decomposition.hpp"
#include "refpoly/ehrhart.hpp"
#include "refpoly/errors.hpp"

namespace refpoly::cli {

namespace {

using Json = nlohmann::json;

Graph graph_from(const Json& spec) {
  if (spec.contains("cycle")) return cycle(spec["cycle"].get<int>());
  if (spec.contains("complete_multipartite"))
    return complete_multipartite(spec["complete_multipartite"].get<std::vector<int>>());
  if (spec.contains("complement_of")) {
    const auto& c = spec["complement_of"];
    std::vector<Edge> edges;
    for (const auto& e : c["edges"]) edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    return complement(Graph(c["vertices"].get<int>(), edges));
  }
  throw InputError("golden example: unknown graph description " + spec.dump());
}

// Lazily computed facts of one polytope.
class Subject {
 public:
  explicit Subject(VRep v) : v_(std::move(v)) {}

  const ConvexHull& hull() {
    if (!hull_) hull_ = convex_hull(v_);
    return *hull_;
  }
  const DeltaPolynomial& delta() {
    if (!delta_) delta_ = delta_polynomial(hull());
    return *delta_;
  }
  const IdpReport& idp() {
    if (!idp_) idp_ = has_idp(hull());
    return *idp_;
  }

 private:
  VRep v_;
  std::optional<ConvexHull> hull_;
  std::optional<DeltaPolynomial> delta_;
  std::optional<IdpReport> idp_;
};

class Checker {
 public:
  Checker(std::string id, std::ostream& out) : id_(std::move(id)), out_(out) {}

  template <typename T>
  void expect(const std::string& what, const T& expected, const T& actual) {
    ++checks_;
    if (expected == actual) return;
    ++mismatches_;
    out_ << "  MISMATCH " << id_ << " " << what << ": expected " << show(expected) << ", got "
         << show(actual) << "\n";
  }

  int checks() const { return checks_; }
  int mismatches() const { return mismatches_; }

 private:
  static std::string show(bool b) { return b ? "true" : "false"; }
  static std::string show(const std::string& s) { return s; }
  template <typename T>
  static std::string show(const T& v) {
    return std::to_string(v);
  }

  std::string id_;
  std::ostream& out_;
  int checks_ = 0;
  int mismatches_ = 0;
};

void check_polytope(Checker& c, const std::string& name, Subject& s, const Json& expect) {
  for (const auto& [key, value] : expect.items()) {
    if (key == "delta") {
      const auto& got = s.delta().coeffs();
      const auto want = value.get<std::vector<std::string>>();
      c.expect(name + " delta degree", static_cast<long>(want.size()) - 1,
               static_cast<long>(s.delta().degree()));
      for (std::size_t i = 0; i < want.size(); ++i) {
        const std::string have = i < got.size() ? got[i].get_str() : "0";
        c.expect(name + " delta_" + std::to_string(i), want[i], have);
      }
    } else if (key == "reflexive") {
      c.expect(name + " reflexive", value.get<bool>(), is_reflexive(s.hull()));
    } else if (key == "idp") {
      c.expect(name + " idp", value.get<bool>(), s.idp().holds);
    } else if (key == "idp_witness_dilation") {
      const long n = s.idp().witness ? static_cast<long>(s.idp().witness->n) : 0L;
      c.expect(name + " idp witness dilation", value.get<long>(), n);
    } else if (key == "facet_count") {
      c.expect(name + " facet count", value.get<long>(), static_cast<long>(s.hull().hrep.facets.size()));
    } else if (key == "normalized_volume") {
      c.expect(name + " normalized volume", value.get<std::string>(), s.delta().at_one().get_str());
    } else {
      throw InputError("golden example: unknown polytope field '" + key + "'");
    }
  }
}

}  // namespace

ExampleSummary run_examples(const Json& golden, const std::optional<std::string>& only,
                            std::ostream& out) {
  if (!golden.contains("examples") || !golden["examples"].is_object())
    throw InputError("golden document lacks an 'examples' object");
  const Json& examples = golden["examples"];
  if (only && !examples.contains(*only)) throw InputError("unknown example id '" + *only + "'");

  ExampleSummary summary;
  for (const auto& [id, ex] : examples.items()) {
    if (only && id != *only) continue;
    const auto start = std::chrono::steady_clock::now();
    const Graph g = graph_from(ex.at("graph"));
    Checker c(id, out);
    std::map<std::string, Subject> subjects;
    auto subject = [&](const std::string& name) -> Subject& {
      auto it = subjects.find(name);
      if (it != subjects.end()) return it->second;
      if (name == "gamma") return subjects.emplace(name, Subject(gamma_of_graphs(g, g))).first->second;
      if (name == "omega") return subjects.emplace(name, Subject(omega_of_graphs(g, g))).first->second;
      if (name == "gamma_suspended") {
        const Graph s = suspension(g);
        return subjects.emplace(name, Subject(gamma_of_graphs(s, s))).first->second;
      }
      throw InputError("golden example: unknown polytope '" + name + "'");
    };

    for (const auto& [key, value] : ex.items()) {
      if (key == "graph" || key == "note") continue;
      if (key == "perfect") {
        c.expect("perfect", value.get<bool>(), is_perfect_spgt(g));
      } else if (key == "same_delta") {
        const auto names = value.get<std::vector<std::string>>();
        c.expect("same delta " + names.at(0) + " " + names.at(1), true,
                 subject(names.at(0)).delta() == subject(names.at(1)).delta());
      } else if (key == "same_volume") {
        const auto names = value.get<std::vector<std::string>>();
        c.expect("same volume " + names.at(0) + " " + names.at(1), true,
                 subject(names.at(0)).delta().at_one() == subject(names.at(1)).delta().at_one());
      } else {
        check_polytope(c, key, subject(key), value);
      }
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out << "example " << id << ": " << (c.mismatches() == 0 ? "pass" : "FAIL") << " (" << c.checks()
        << " checks, " << c.mismatches() << " mismatches, " << std::fixed;
    out.precision(1);
    out << seconds << " s)\n";
    out.flush();
    ++summary.examples;
    summary.checks += c.checks();
    summary.mismatches += c.mismatches();
  }
  return summary;
}

}  // namespace refpoly::cli
