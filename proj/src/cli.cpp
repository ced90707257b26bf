#include "amoh/cli.hpp"

#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <variant>

#include <CLI11.hpp>
#include <json.hpp>

#include "amoh/decompose.hpp"
#include "amoh/error.hpp"
#include "amoh/jacobian.hpp"
#include "amoh/line.hpp"
#include "amoh/parse.hpp"
#include "amoh/semigroup.hpp"
#include "amoh/subalgebra.hpp"
#include "amoh/theorems.hpp"

namespace amoh::cli {

namespace {

using Json = nlohmann::ordered_json;

Json terms_json(const BivarExpr<Rational>& e) {
  Json arr = Json::array();
  for (const auto& [exp, c] : e.terms()) {
    arr.push_back(Json{{"i", exp.first}, {"j", exp.second}, {"coeff", c.to_string()}});
  }
  return arr;
}

Json terms_json(const BivarExpr<RationalFunction>& e) {
  Json arr = Json::array();
  for (const auto& [exp, c] : e.terms()) {
    arr.push_back(Json{{"i", exp.first}, {"j", exp.second}, {"coeff", render(c)}});
  }
  return arr;
}

template <class F>
Json membership_json(const MembershipResult<F>& r) {
  Json j{{"member", r.member}};
  if (r.certificate) j["certificate"] = terms_json(*r.certificate);
  if (r.obstruction_degree) j["obstruction_degree"] = *r.obstruction_degree;
  return j;
}

Json reason_json(const LineReason& reason) {
  Json j{{"kind", reason_name(reason)}};
  if (auto* d = std::get_if<reason::DivisibilityFailure>(&reason)) {
    j["m"] = d->m;
    j["n"] = d->n;
  } else if (auto* u = std::get_if<reason::UnfaithfulParameter>(&reason)) {
    j["deg_h"] = u->deg_h;
  } else if (auto* w = std::get_if<reason::DerivativeNotMember>(&reason)) {
    j["which"] = std::string(1, w->which);
  }
  return j;
}

std::string reason_text(const LineReason& reason) {
  std::ostringstream os;
  os << reason_name(reason);
  if (auto* d = std::get_if<reason::DivisibilityFailure>(&reason)) {
    os << "{m=" << d->m << ", n=" << d->n << "}";
  } else if (auto* u = std::get_if<reason::UnfaithfulParameter>(&reason)) {
    os << "{deg_h=" << u->deg_h << "}";
  } else if (auto* w = std::get_if<reason::DerivativeNotMember>(&reason)) {
    os << "{" << w->which << "'}";
  }
  return os.str();
}

template <class T>
Json optional_string(const std::optional<T>& v) {
  return v ? Json(v->to_string()) : Json(nullptr);
}

Json strong_am_json(const StrongAmReport& r) {
  Json j{{"a", r.a},
         {"applicable", r.applicable},
         {"u_degree", r.u_degree},
         {"v_degree", r.v_degree},
         {"u_witness", r.u_witness ? terms_json(*r.u_witness) : Json(nullptr)},
         {"v_witness", r.v_witness ? terms_json(*r.v_witness) : Json(nullptr)},
         {"divisibility_holds", r.divisibility_holds}};
  return j;
}

std::string join(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
  return s;
}

std::vector<std::size_t> parse_size_list(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
    if (used != item.size() || v == 0) {
      throw ParseError(0, {"comma-separated positive integers"}, "bad integer list '" + text + "'");
    }
    out.push_back(v);
  }
  if (out.size() < 2) throw ParseError(0, {"at least two entries"}, "delta sequence needs two entries");
  return out;
}

DeltaSequence delta_from_list(const std::vector<std::size_t>& deltas) {
  DeltaSequence d;
  d.deltas = deltas;
  std::size_t cur = std::gcd(deltas[0], deltas[1]);
  d.ds.push_back(cur);
  for (std::size_t i = 2; i < deltas.size(); ++i) {
    const std::size_t next = std::gcd(cur, deltas[i]);
    if (next >= cur) fail(ErrorKind::PreconditionViolated, "gcd chain must strictly decrease");
    cur = next;
    d.ds.push_back(cur);
  }
  d.h = deltas.size() - 1;
  return d;
}

struct Options {
  bool json = false;
  std::string f, g, u, deltas, kind = "mixed";
  std::size_t degree = 0;
  std::size_t a = 0;
  std::uint64_t seed = 1;
  std::size_t count = 10;
  std::size_t steps = 6;
  long max_coeff = 3;
};

class Runner {
 public:
  Runner(const Options& opt, std::istream& in, std::ostream& out) : opt_(opt), in_(in), out_(out) {}

  int is_line_cmd() {
    const QPoly f = parse_poly(opt_.f), g = parse_poly(opt_.g);
    const LineVerdict v = is_line(f, g);
    const LineReason crit = criterion_reason(f, g);
    if (opt_.json) {
      Json j{{"is_line", v.is_line},
             {"reason", reason_name(v.reason)},
             {"reason_detail", reason_json(v.reason)},
             {"criterion", reason_json(crit)},
             {"inverse", v.inverse ? terms_json(*v.inverse) : Json(nullptr)}};
      out_ << j.dump() << "\n";
    } else if (v.is_line) {
      out_ << "embedded line: z = " << render(*v.inverse) << "\n";
    } else {
      out_ << "not an embedded line: " << reason_text(v.reason) << " (criterion: " << reason_text(crit) << ")\n";
    }
    return kExitComputed;
  }

  int member_cmd(bool u_given) {
    const QPoly f = parse_poly(opt_.f), g = parse_poly(opt_.g);
    if (u_given) {
      emit_member(is_member(parse_poly(opt_.u), f, g));
      return kExitComputed;
    }
    const auto basis = sagbi_basis(f, g);
    std::string line;
    int status = kExitComputed;
    while (std::getline(in_, line)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      try {
        emit_member(is_member(parse_poly(line), basis));
      } catch (const ParseError& e) {
        emit_error(e);
        status = kExitUsage;
      }
    }
    return status;
  }

  int sagbi_cmd() {
    const auto basis = sagbi_basis(parse_poly(opt_.f), parse_poly(opt_.g));
    if (opt_.json) {
      Json arr = Json::array();
      for (const auto& e : basis.elements) {
        arr.push_back(Json{{"degree", e.degree}, {"poly", render(e.poly)}, {"provenance", terms_json(e.provenance)}});
      }
      out_ << Json{{"elements", arr}}.dump() << "\n";
    } else {
      for (const auto& e : basis.elements) {
        out_ << "deg " << e.degree << ": " << render(e.poly) << "  =  " << render(e.provenance) << "\n";
      }
    }
    return kExitComputed;
  }

  int delta_cmd() {
    const DeltaSequence d = delta_sequence(parse_poly(opt_.f), parse_poly(opt_.g));
    if (opt_.json) {
      out_ << Json{{"deltas", d.deltas}, {"ds", d.ds}, {"h", d.h}}.dump() << "\n";
    } else {
      out_ << "deltas (" << join(d.deltas) << "), ds (" << join(d.ds) << "), h = " << d.h << "\n";
    }
    return kExitComputed;
  }

  int represent_cmd() {
    DeltaSequence d;
    if (!opt_.deltas.empty()) {
      d = delta_from_list(parse_size_list(opt_.deltas));
    } else {
      d = delta_sequence(parse_poly(opt_.f), parse_poly(opt_.g));
    }
    std::optional<SemigroupRepr> repr;
    try {
      repr = semigroup_represent(opt_.degree, d);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NotInSemigroup) throw;
    }
    if (opt_.json) {
      Json j{{"degree", opt_.degree}, {"deltas", d.deltas}, {"representable", repr.has_value()}};
      j["alphas"] = repr ? Json(repr->alphas) : Json(nullptr);
      out_ << j.dump() << "\n";
    } else if (repr) {
      out_ << "alpha = (" << join(repr->alphas) << ") over delta = (" << join(d.deltas) << ")\n";
    } else {
      out_ << opt_.degree << " is not representable over delta = (" << join(d.deltas) << ")\n";
    }
    return kExitComputed;
  }

  int decompose_cmd() {
    const QPoly f = parse_poly(opt_.f), g = parse_poly(opt_.g);
    const Decomposition dec = common_parameter(f, g);
    const bool faithful = dec.h.deg() == 1;
    if (opt_.json) {
      out_ << Json{{"h", render(dec.h)},
                   {"f_tilde", render(dec.f_tilde, "w")},
                   {"g_tilde", render(dec.g_tilde, "w")},
                   {"faithful", faithful}}
                  .dump()
           << "\n";
    } else {
      out_ << "h = " << render(dec.h) << "\nf~ = " << render(dec.f_tilde, "w") << "\ng~ = "
           << render(dec.g_tilde, "w") << "\n" << (faithful ? "faithful" : "unfaithful") << "\n";
    }
    return kExitComputed;
  }

  int strong_am_cmd(bool a_given) {
    const QPoly f = parse_poly(opt_.f), g = parse_poly(opt_.g);
    std::vector<StrongAmReport> reports;
    if (a_given) {
      reports.push_back(check_strong_am(f, g, opt_.a));
    } else {
      reports = check_strong_am_sweep(f, g);
    }
    if (opt_.json) {
      if (a_given) {
        out_ << strong_am_json(reports.front()).dump() << "\n";
      } else {
        Json arr = Json::array();
        for (const auto& r : reports) arr.push_back(strong_am_json(r));
        out_ << arr.dump() << "\n";
      }
      return kExitComputed;
    }
    for (const auto& r : reports) {
      out_ << "a = " << r.a << ": degrees " << r.u_degree << ", " << r.v_degree;
      if (r.applicable) {
        out_ << " realized by " << render(*r.u_witness) << " and " << render(*r.v_witness)
             << "; divisibility " << (r.divisibility_holds ? "holds" : "FAILS") << "\n";
      } else {
        out_ << " not both in the degree semigroup\n";
      }
    }
    return kExitComputed;
  }

  int prop22_cmd() {
    const Prop22Report r = check_prop22(parse_poly(opt_.f), parse_poly(opt_.g));
    if (opt_.json) {
      out_ << Json{{"condition_221_holds", r.condition_221_holds},
                   {"a", optional_string(r.a)},
                   {"condition_222_holds", r.condition_222_holds},
                   {"b", optional_string(r.b)},
                   {"is_line", r.is_line},
                   {"canonical_c", optional_string(r.canonical_c)},
                   {"canonical_b", optional_string(r.canonical_b)},
                   {"derived_derivatives_verified", r.derived_derivatives_verified}}
                  .dump()
           << "\n";
    } else {
      out_ << "n f' g - m f g' in k^*: " << (r.condition_221_holds ? "yes" : "no");
      if (r.a) out_ << " (" << *r.a << ")";
      out_ << "\nf^(n/d) - g^(m/d) in k: " << (r.condition_222_holds ? "yes" : "no");
      if (r.b) out_ << " (" << *r.b << ")";
      out_ << "\nembedded line: " << (r.is_line ? "yes" : "no") << "\n";
      if (r.canonical_c) out_ << "canonical form f = z + c, g = (z + c)^n - b with c = " << *r.canonical_c << ", b = " << *r.canonical_b << "\n";
    }
    return kExitComputed;
  }

  int jacobian_cmd() {
    const BiPoly f = to_bipoly(parse_bivariate(opt_.f));
    const BiPoly g = to_bipoly(parse_bivariate(opt_.g));
    const Prop21Report r = prop21_probe(f, g);
    if (opt_.json) {
      out_ << Json{{"jacobian", render(r.jacobian)},
                   {"jacobian_constant", r.jacobian_constant},
                   {"fy_member", membership_json(r.fy_member)},
                   {"gy_member", membership_json(r.gy_member)}}
                  .dump()
           << "\n";
    } else {
      auto text = [](const MembershipResult<RationalFunction>& m) {
        return m.member ? "member, certificate " + render(*m.certificate)
                        : "not a member, obstruction degree " + std::to_string(*m.obstruction_degree);
      };
      out_ << "jacobian = " << render(r.jacobian) << (r.jacobian_constant ? " (in k^*)" : "") << "\n"
           << "f_y: " << text(r.fy_member) << "\ng_y: " << text(r.gy_member) << "\n";
    }
    return kExitComputed;
  }

  int gen_corpus_cmd() {
    std::vector<CorpusKind> kinds;
    if (opt_.kind == "mixed") {
      kinds = {CorpusKind::Line, CorpusKind::Unfaithful, CorpusKind::ExamplePattern, CorpusKind::Mutated};
    } else {
      for (CorpusKind k : {CorpusKind::Line, CorpusKind::Unfaithful, CorpusKind::ExamplePattern, CorpusKind::Mutated}) {
        if (opt_.kind == to_string(k)) kinds = {k};
      }
      if (kinds.empty()) throw ParseError(0, {"line", "unfaithful", "example-pattern", "mutated", "mixed"}, "unknown corpus kind");
    }
    for (std::size_t i = 0; i < opt_.count; ++i) {
      const CorpusKind kind = kinds[i % kinds.size()];
      const CorpusCurve c = corpus_curve(opt_.seed + i, kind, opt_.steps, opt_.max_coeff);
      out_ << Json{{"index", i}, {"seed", opt_.seed + i}, {"kind", to_string(kind)}, {"f", render(c.f)}, {"g", render(c.g)}}
                  .dump()
           << "\n";
    }
    return kExitComputed;
  }

  void emit_error(const Error& e) {
    if (opt_.json) {
      Json j{{"error", to_string(e.kind())}, {"message", e.what()}};
      if (auto* p = dynamic_cast<const ParseError*>(&e)) {
        j["position"] = p->position();
        j["expected"] = p->expected();
      }
      out_ << j.dump() << "\n";
    } else {
      out_ << "error: " << to_string(e.kind()) << ": " << e.what() << "\n";
    }
  }

 private:
  void emit_member(const MembershipResult<Rational>& r) {
    if (opt_.json) {
      out_ << membership_json(r).dump() << "\n";
    } else if (r.member) {
      out_ << "member: " << render(*r.certificate) << "\n";
    } else {
      out_ << "not a member (obstruction degree " << *r.obstruction_degree << ")\n";
    }
  }

  const Options& opt_;
  std::istream& in_;
  std::ostream& out_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact tests for parametric plane curves: embedded lines, subalgebra membership, degree semigroups", "amoh"};
  app.require_subcommand(1, 1);
  Options opt;

  auto curve = [&](CLI::App* sub, bool required) {
    auto* f = sub->add_option("--f", opt.f, "first generator f(z)");
    auto* g = sub->add_option("--g", opt.g, "second generator g(z)");
    if (required) {
      f->required();
      g->required();
    }
    sub->add_flag("--json", opt.json, "machine-readable output");
  };

  auto* is_line_sub = app.add_subcommand("is-line", "decide k[f, g] = k[z] and produce the inverse");
  curve(is_line_sub, true);
  auto* member_sub = app.add_subcommand("member", "subalgebra membership with certificate (stdin: one u per line)");
  curve(member_sub, true);
  auto* u_opt = member_sub->add_option("--u", opt.u, "polynomial to test");
  auto* sagbi_sub = app.add_subcommand("sagbi", "SAGBI basis of k[f, g]");
  curve(sagbi_sub, true);
  auto* delta_sub = app.add_subcommand("delta", "degree sequence and gcd chain");
  curve(delta_sub, true);
  auto* represent_sub = app.add_subcommand("represent", "constrained representation of a degree");
  curve(represent_sub, false);
  represent_sub->add_option("--degree", opt.degree, "degree to represent")->required();
  represent_sub->add_option("--deltas", opt.deltas, "explicit degree sequence, e.g. 6,3,2");
  auto* decompose_sub = app.add_subcommand("decompose", "largest common inner factor");
  curve(decompose_sub, true);
  auto* strong_sub = app.add_subcommand("strong-am", "degree-divisibility check (all a when --a is omitted)");
  curve(strong_sub, true);
  auto* a_opt = strong_sub->add_option("--a", opt.a, "shift a, 1 <= a <= min(deg f, deg g)");
  auto* prop22_sub = app.add_subcommand("prop22", "wronskian / power-difference conditions for monic f, g");
  curve(prop22_sub, true);
  auto* jac_sub = app.add_subcommand("jacobian-probe", "Jacobian and f_y, g_y membership over Q(x); f, g in x, y");
  curve(jac_sub, true);
  auto* corpus_sub = app.add_subcommand("gen-corpus", "line-delimited JSON test curves");
  corpus_sub->add_option("--seed", opt.seed, "first seed");
  corpus_sub->add_option("--count", opt.count, "number of curves");
  corpus_sub->add_option("--steps", opt.steps, "random moves per line");
  corpus_sub->add_option("--max-coeff", opt.max_coeff, "coefficient bound");
  corpus_sub->add_option("--kind", opt.kind, "line | unfaithful | example-pattern | mutated | mixed");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitComputed;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitUsage;
  }

  Runner runner(opt, in, out);
  try {
    if (*is_line_sub) return runner.is_line_cmd();
    if (*member_sub) return runner.member_cmd(u_opt->count() > 0);
    if (*sagbi_sub) return runner.sagbi_cmd();
    if (*delta_sub) return runner.delta_cmd();
    if (*represent_sub) {
      if (opt.deltas.empty() && (opt.f.empty() || opt.g.empty())) {
        err << "represent needs --deltas or both --f and --g\n";
        return kExitUsage;
      }
      return runner.represent_cmd();
    }
    if (*decompose_sub) return runner.decompose_cmd();
    if (*strong_sub) return runner.strong_am_cmd(a_opt->count() > 0);
    if (*prop22_sub) return runner.prop22_cmd();
    if (*jac_sub) return runner.jacobian_cmd();
    if (*corpus_sub) return runner.gen_corpus_cmd();
  } catch (const Error& e) {
    runner.emit_error(e);
    const bool internal =
        e.kind() == ErrorKind::InternalInconsistency || e.kind() == ErrorKind::InternalLimitExceeded;
    return internal ? kExitInternal : kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}

}  // namespace amoh::cli
