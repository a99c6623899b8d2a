#include "dgm/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <optional>
#include <sstream>

#include "dgm/deform.hpp"
#include "dgm/dsl.hpp"
#include "dgm/error.hpp"
#include "dgm/family.hpp"
#include "dgm/series.hpp"

namespace dgm::cli {
namespace {

// Thrown for malformed command-line values that CLI11 cannot catch itself.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

FieldSpec parse_field(const std::string& text) {
  if (text == "Q") return FieldSpec::rationals();
  if (text.rfind("GF:", 0) == 0) {
    std::uint64_t p = 0;
    const char* first = text.data() + 3;
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, p);
    if (ec == std::errc() && ptr == last && first != last) return FieldSpec::prime(p);
  }
  throw UsageError("--field expects Q or GF:<p>, got '" + text + "'");
}

dsl::Document load(const std::string& path) { return dsl::read_file(path); }

// d_1..d_k from the file, padded with zero maps.
std::vector<GradedMap> padded_lifts(const dsl::LoadedComplex& c, int k) {
  std::vector<GradedMap> lifts = c.lifts;
  const auto& m = c.complex.module();
  while (static_cast<int>(lifts.size()) < k) lifts.push_back(GradedMap::zero(m, m, -1));
  lifts.resize(static_cast<std::size_t>(k), GradedMap::zero(m, m, -1));
  return lifts;
}

int cmd_check(const std::string& path, std::ostream& out) {
  const dsl::Document doc = load(path);
  out << "field: " << doc.field.to_string() << "\n";
  out << "module " << doc.module->name() << ": dimension " << doc.module->dimension() << "\n";
  for (int p : doc.module->degrees()) {
    const auto names = doc.module->degree_component(p);
    out << "  degree " << p << ":";
    for (const auto& n : names) out << " " << n;
    out << "\n";
  }
  for (const auto& m : doc.maps) {
    const std::size_t terms = m.map.term_count();
    out << "map " << m.name << ": degree " << m.map.degree() << ", " << terms << (terms == 1 ? " term\n" : " terms\n");
  }
  const GradedMap* d = doc.find_map("d");
  if (d == nullptr) throw Error(Errc::MissingDifferential, "document has no map named 'd'");
  if (d->degree() == -1 && !is_differential(*d)) {
    out << "d^2 != 0\nstatus: not a differential\n";
    return kFinding;
  }
  const dsl::LoadedComplex c = dsl::load_complex(doc);
  out << "d^2 = 0\n";
  if (doc.has_deformation && !c.lifts.empty()) {
    const auto checks = check_relations(c.complex, c.lifts);
    for (std::size_t k = 0; k < checks.size(); ++k) {
      out << "relation " << k << ": " << (checks[k] ? "ok" : "fails") << "\n";
    }
  }
  out << "status: ok\n";
  return kSuccess;
}

int cmd_cohomology(const std::string& path, const std::vector<int>& degrees, std::ostream& out) {
  const dsl::LoadedComplex c = dsl::load_complex(load(path));
  const HomComplex h(c.complex);
  for (int p : degrees) {
    const CohomologyResult r = h.cohomology(p);
    out << "H^" << p << " dim=" << r.dim << "\n";
    for (const auto& rep : r.representatives) out << "  " << rep.to_string() << "\n";
  }
  return kSuccess;
}

int cmd_obstruction(const std::string& path, int order, std::ostream& out) {
  if (order < 0) throw UsageError("--order must be non-negative");
  const dsl::LoadedComplex c = dsl::load_complex(load(path));
  const auto lifts = padded_lifts(c, order);
  const Cochain o = obstruction(c.complex, lifts);
  out << "O_" << order << " = " << o.to_string() << "\n";
  const HomComplex h(c.complex);
  if (!h.is_cocycle(o)) {
    out << "cobounds: n/a (not a cocycle; lower relations fail)\n";
  } else {
    const SolveOutcome s = h.solve_coboundary(o);
    if (s.is_solved()) {
      out << "cobounds: yes, delta(" << s.solution().to_string() << ") = O_" << order << "\n";
    } else {
      out << "cobounds: no\nwitness: " << s.witness().to_string() << "\n";
    }
  }
  return kSuccess;
}

int cmd_deform(const std::string& path, int order, const std::string& mode, std::ostream& out) {
  const dsl::LoadedComplex c = dsl::load_complex(load(path));
  if (c.lifts.empty()) throw UsageError(path + ": deformation block must provide d_1");
  const LiftStrategy strategy =
      mode == "canonical" ? LiftStrategy::canonical(c.lifts.front()) : LiftStrategy::given(c.lifts);
  const DeformationReport report = deform_to_order(c.complex, strategy, order);
  out << report.to_string();
  return report.status == DeformationReport::Status::Extended ? kSuccess : kFinding;
}

int cmd_trivialize(const std::string& path, int order, std::ostream& out) {
  if (order < 0) throw UsageError("--order must be non-negative");
  const dsl::LoadedComplex c = dsl::load_complex(load(path));
  const MapSeries dt = MapSeries::deformation(c.complex.differential(), c.lifts, order);
  const TrivializationReport report = trivialize(dt, order);
  out << report.to_string();
  return report.status == TrivializationReport::Status::Trivialized ? kSuccess : kFinding;
}

int cmd_family(int n, const std::string& variant, std::optional<int> truncation,
                     const std::string& field, const std::string& path, std::ostream& out) {
  const auto v = family::parse_variant(variant);
  if (!v) throw UsageError("unknown variant '" + variant + "'");
  const family::FamilySpec spec = family::make_spec(n, *v, truncation, parse_field(field));
  const DgModule base = family::base_complex(spec.truncation, spec.field);
  const dsl::Document doc = dsl::make_document(base, family::lifts(spec, base));
  if (path.empty() || path == "-") {
    out << dsl::print(doc);
  } else {
    dsl::write_file(path, doc);
    out << "wrote " << path << "\n";
  }
  return kSuccess;
}

int cmd_verify(int n, const std::string& variant, std::optional<int> truncation, const std::string& field,
               std::ostream& out) {
  const FieldSpec f = parse_field(field);
  if (n < 1) throw UsageError("--n must be at least 1");
  const bool all = variant == "all";
  if (!all && variant != "polynomial" && variant != "obstructed" && variant != "infinite") {
    throw UsageError("--variant expects all, polynomial, obstructed or infinite");
  }
  std::vector<family::VerificationReport> reports;
  if (all || variant == "polynomial") reports.push_back(family::verify_polynomial_deformation(n, truncation, f));
  if (all || variant == "obstructed") reports.push_back(family::verify_obstructed_approximation(n, truncation, f));
  if (all || variant == "infinite") {
    const int p = std::max(truncation.value_or(0), 3 * n + 3);
    reports.push_back(family::verify_infinite_deformation(p, n, f));
  }
  bool ok = true;
  for (std::size_t i = 0; i < reports.size(); ++i) {
    if (i > 0) out << "\n";
    out << reports[i].to_string();
    ok = ok && reports[i].passed();
  }
  return ok ? kSuccess : kFinding;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Deformations of differential graded modules", "dgm"};
  app.require_subcommand(1);

  std::string file;
  std::vector<int> degrees;
  int order = 0;
  std::string lift_mode = "given";
  int n = 0;
  std::string variant = "all";
  std::optional<int> truncation;
  std::string field = "Q";
  std::string out_path;

  auto* check = app.add_subcommand("check", "parse a .dgm file and validate d^2 = 0");
  check->add_option("file", file, ".dgm input")->required();

  auto* cohom = app.add_subcommand("cohomology", "dimensions and representatives of H^p(V;V)");
  cohom->add_option("file", file, ".dgm input")->required();
  cohom->add_option("--p", degrees, "cochain degree (repeatable)")->required()->allow_extra_args(false);

  auto* obs = app.add_subcommand("obstruction", "print O_k for the file's deformation block");
  obs->add_option("file", file, ".dgm input")->required();
  obs->add_option("--order", order, "k")->required();

  auto* deform = app.add_subcommand("deform", "extend d + t d_1 + ... order by order");
  deform->add_option("file", file, ".dgm input")->required();
  deform->add_option("--order", order, "target order N")->required()->check(CLI::PositiveNumber);
  deform->add_option("--lifts", lift_mode, "given: use the file's lifts; canonical: only its d_1")
      ->check(CLI::IsMember({"given", "canonical"}));

  auto* triv = app.add_subcommand("trivialize", "gauge the deformation away order by order");
  triv->add_option("file", file, ".dgm input")->required();
  triv->add_option("--order", order, "truncation order N")->required();

  auto* fam = app.add_subcommand("paper-family", "write a member of the example family as .dgm");
  fam->add_option("--n", n, "order n")->required();
  fam->add_option("--variant", variant, "polynomial, obstructed, linear or infinite")->required();
  fam->add_option("--truncate", truncation, "top degree P of the truncation");
  fam->add_option("--field", field, "Q or GF:<p>");
  fam->add_option("--out", out_path, "output file (stdout when omitted)");

  auto* verify = app.add_subcommand("verify-paper", "verify the example family claims");
  verify->add_option("--n", n, "order n")->required();
  verify->add_option("--variant", variant, "all, polynomial, obstructed or infinite");
  verify->add_option("--truncate", truncation, "top degree P of the truncation");
  verify->add_option("--field", field, "Q or GF:<p>");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kInputError;
  }

  try {
    if (check->parsed()) return cmd_check(file, out);
    if (cohom->parsed()) return cmd_cohomology(file, degrees, out);
    if (obs->parsed()) return cmd_obstruction(file, order, out);
    if (deform->parsed()) return cmd_deform(file, order, lift_mode, out);
    if (triv->parsed()) return cmd_trivialize(file, order, out);
    if (fam->parsed()) return cmd_family(n, variant, truncation, field, out_path, out);
    if (verify->parsed()) return cmd_verify(n, variant, truncation, field, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const ParseError& e) {
    err << "error: " << file << ":" << e.what() << "\n";
    return kInputError;
  } catch (const Error& e) {
    err << "error: " << errc_name(e.code()) << ": " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace dgm::cli
