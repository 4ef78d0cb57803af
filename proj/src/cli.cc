// Copyright 2026 The Bentkit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "bentkit/cli.h"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <iomanip>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "bentkit/constructions.h"
#include "bentkit/dualshift.h"
#include "bentkit/error.h"
#include "bentkit/func.h"
#include "bentkit/gf.h"
#include "bentkit/instances.h"
#include "bentkit/parse.h"
#include "bentkit/walsh.h"
#include "json.hpp"

namespace bentkit {
namespace {

using Json = nlohmann::ordered_json;

struct GlobalOpts {
  std::string field;
  std::optional<std::string> generator;
  std::uint64_t seed = 1;
  bool json = false;
  bool confirm = false;
  bool timing = false;
};

struct InstanceOpts {
  std::string g;
  std::string points;
  std::string F;
  std::string diag;
};

std::string hex64(std::uint64_t v) {
  std::ostringstream os;
  os << "0x" << std::hex << std::setw(16) << std::setfill('0') << v;
  return os.str();
}

FieldPtr field_from(const GlobalOpts& g) {
  if (g.field.empty()) throw ParseError("--field is required");
  std::optional<ElemIndex> gen;
  if (g.generator) {
    std::size_t used = 0;
    const unsigned long v = std::stoul(*g.generator, &used);
    if (used != g.generator->size()) {
      throw ParseError("--generator expects an element index");
    }
    gen = static_cast<ElemIndex>(v);
  }
  return parse_field_spec(g.field, gen);
}

// Finds c with h = Tr(c x), reading c off the values at the power basis.
std::optional<ElemIndex> match_linear(const PFunc& h,
                                      const std::vector<ElemIndex>& by_key) {
  const FieldCtx& ctx = h.field();
  std::size_t key = 0;
  for (std::uint32_t j = ctx.n(); j-- > 0;) {
    key = key * ctx.p() + h(ctx.exp(static_cast<std::int64_t>(j)));
  }
  const ElemIndex c = by_key[key];
  if (trace_function(h.field_ptr(), c) == h) return c;
  return std::nullopt;
}

// A short name for f when it is linear or Tr(a x^2) + Tr(c x), up to a
// constant; otherwise a digest of its value table.
std::string describe_function(const PFunc& f) {
  const FieldPtr& ctx = f.field_ptr();
  const Fp c0 = f(0);
  const PFunc h = f.plus_constant(ctx->prime_field().neg(c0));
  const std::string tail = c0 == 0 ? "" : " + " + std::to_string(c0);
  if (h.is_constant()) return "zero" + tail;
  if (ctx->size() <= 4096) {
    std::vector<ElemIndex> by_key(ctx->size());
    for (ElemIndex c = 0; c < ctx->size(); ++c) {
      std::size_t key = 0;
      for (std::uint32_t j = ctx->n(); j-- > 0;) {
        key = key * ctx->p() +
              ctx->trace(ctx->mul(c, ctx->exp(static_cast<std::int64_t>(j))));
      }
      by_key[key] = c;
    }
    if (const auto c = match_linear(h, by_key)) {
      return "linear:" + std::to_string(*c) + tail;
    }
    if (ctx->p() != 2) {
      for (ElemIndex a = 1; a < ctx->size(); ++a) {
        const auto c = match_linear(h - quadratic(ctx, a), by_key);
        if (!c) continue;
        std::string s = "quad:" + std::to_string(a);
        if (*c != 0) s += " + linear:" + std::to_string(*c);
        return s + tail;
      }
    }
  }
  std::vector<CycInt> as_values;
  as_values.reserve(f.size());
  for (Fp v : f.values()) as_values.push_back(CycInt(f.p(), Integer(v)));
  return "table digest " + hex64(spectrum_digest({ctx, as_values}));
}

Json spectrum_structure(const WalshSpectrum& s) {
  std::map<std::string, std::size_t> hist;
  for (const CycInt& v : s.values) {
    const auto n = norm_sq(v);
    if (const auto* i = std::get_if<Integer>(&n)) {
      ++hist[i->str()];
    } else {
      ++hist["non-rational"];
    }
  }
  Json out = Json::object();
  for (const auto& [k, v] : hist) out[k] = v;
  return out;
}

Json degree_report(const PFunc& f, bool bent, bool weakly_regular) {
  const std::uint32_t p = f.p();
  const std::uint32_t n = f.field().n();
  const std::uint32_t deg = univariate_degree(f);
  Json out;
  out["degree"] = deg;
  if (bent) {
    const std::uint32_t bound =
        (p - 1) * n / 2 + (weakly_regular && !(p == 2 && n == 2) ? 0 : 1);
    out["degree_bound"] = bound;
    out["degree_bound_holds"] = deg <= bound;
  }
  return out;
}

std::optional<std::vector<Fp>> diag_from(const std::string& text,
                                         std::uint32_t p) {
  if (text.empty()) return std::nullopt;
  return parse_fp_list(p, text);
}

std::optional<Theorem> predictor_theorem(const std::string& s) {
  static const std::map<std::string, Theorem> kMap = {
      {"2", Theorem::kThm2},          {"3", Theorem::kThm3},
      {"prop1", Theorem::kProp1},     {"4.1", Theorem::kThm4Case1},
      {"4.2", Theorem::kThm4Case2},   {"4.3", Theorem::kThm4Case3},
      {"4.4", Theorem::kThm4Case4},   {"5", Theorem::kThm5}};
  const auto it = kMap.find(s);
  if (it == kMap.end()) return std::nullopt;
  return it->second;
}

std::string points_str(const std::vector<ElemIndex>& pts) {
  std::string s;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    s += (i ? "," : "") + std::to_string(pts[i]);
  }
  return s;
}

// Text rendering: scalars as "key: value", check lists as PASS/FAIL lines.
void render_text(const Json& j, std::ostream& out, const std::string& indent);

void render_value(const std::string& key, const Json& v, std::ostream& out,
                  const std::string& indent) {
  if (v.is_object()) {
    out << indent << key << ":\n";
    render_text(v, out, indent + "  ");
  } else if (v.is_array()) {
    out << indent << key << ":";
    if (v.empty()) out << " none";
    out << "\n";
    for (const Json& item : v) {
      if (item.is_object() && item.contains("pass") && item.contains("name")) {
        out << indent << "  " << (item["pass"].get<bool>() ? "PASS " : "FAIL ")
            << item["name"].get<std::string>() << ": "
            << item.value("detail", "") << "\n";
      } else if (item.is_object()) {
        out << indent << "  -";
        for (const auto& [k, x] : item.items()) {
          out << " " << k << "=" << (x.is_string() ? x.get<std::string>()
                                                   : x.dump());
        }
        out << "\n";
      } else {
        out << indent << "  "
            << (item.is_string() ? item.get<std::string>() : item.dump())
            << "\n";
      }
    }
  } else {
    out << indent << key << ": "
        << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
  }
}

void render_text(const Json& j, std::ostream& out, const std::string& indent) {
  for (const auto& [k, v] : j.items()) render_value(k, v, out, indent);
}

class Runner {
 public:
  Runner(const std::vector<std::string>& args, std::ostream& out)
      : out_(out), start_(std::chrono::steady_clock::now()) {
    std::string echo = "bentkit";
    for (const auto& a : args) echo += " " + a;
    report_["command"] = echo;
  }

  GlobalOpts opts;
  InstanceOpts inst;
  int example = 0;
  std::string fn;
  std::string thm;
  std::string taus;
  std::string a_text = "1";
  std::uint32_t k = 1;
  std::string u_text, v_text;
  std::string u_range, v_range;
  int count = 10;

  int reproduce() {
    const ExampleReport r = reproduce_example(example);
    report_["example"] = example;
    Json checks = Json::array();
    for (const CheckLine& c : r.checks) {
      checks.push_back({{"name", c.name}, {"pass", c.pass},
                        {"detail", c.detail}});
    }
    report_["checks"] = checks;
    report_["pass"] = r.pass();
    return finish(r.pass() ? kExitPass : kExitMismatch);
  }

  int check() {
    const FieldPtr f = field_from(opts);
    const PFunc g = parse_function(f, fn);
    report_["field"] = opts.field;
    report_["function"] = fn;
    const WalshSpectrum s = walsh_full(g);
    const RegularityReport r = classify(g, s);
    report_["bent"] = r.is_bent;
    report_["kind"] = to_string(r.kind);
    if (r.epsilon) {
      report_["epsilon"] = *r.epsilon;
      report_["dual"] = describe_function(*r.dual);
    }
    if (!r.is_bent) report_["spectrum_norms"] = spectrum_structure(s);
    const Json degrees = degree_report(g, r.is_bent, r.epsilon.has_value());
    for (const auto& [key, v] : degrees.items()) report_[key] = v;
    report_["spectrum_digest"] = hex64(spectrum_digest(s));
    return finish(kExitPass);
  }

  int walsh() {
    const FieldPtr f = field_from(opts);
    const PFunc g = parse_function(f, fn);
    const WalshSpectrum s = walsh_full(g);
    report_["field"] = opts.field;
    report_["function"] = fn;
    Json values = Json::array();
    for (ElemIndex b = 0; b < s.size(); ++b) {
      values.push_back(std::to_string(b) + ": " + s[b].to_string());
    }
    report_["spectrum"] = values;
    report_["spectrum_digest"] = hex64(spectrum_digest(s));
    return finish(kExitPass);
  }

  int fit_dual() {
    const FieldPtr f = field_from(opts);
    const PFunc g = parse_function(f, inst.g);
    const auto points = parse_elements(*f, inst.points);
    report_["field"] = opts.field;
    report_["g"] = inst.g;
    report_["points"] = points_str(points);
    const RegularityReport r = classify(g);
    if (!r.epsilon) {
      report_["error"] = "g is not weakly regular bent";
      return finish(kExitMismatch);
    }
    report_["epsilon"] = *r.epsilon;
    report_["dual"] = describe_function(*r.dual);
    try {
      const DualExpansion ex =
          fit_expansion(*r.dual, points, diag_from(inst.diag, f->p()));
      Json rows = Json::array();
      for (const auto& row : ex.A) rows.push_back(row);
      report_["A"] = rows;
      Json gamma = Json::array();
      for (std::uint32_t i : ex.gamma()) gamma.push_back(i + 1);
      report_["gamma"] = gamma;
      report_["off_diagonal_zero"] = ex.off_diagonal_zero();
      Json gs = Json::array();
      for (const PFunc& gi : ex.g) gs.push_back(describe_function(gi));
      report_["g_i"] = gs;
    } catch (const NotExpansionForm& e) {
      report_["expansion"] = std::string("none: ") + e.what();
      return finish(kExitMismatch);
    }
    return finish(kExitPass);
  }

  int construct() {
    const FieldPtr f = field_from(opts);
    const PFunc g = parse_function(f, inst.g);
    const auto points = parse_elements(*f, inst.points);
    const ReducedPoly F =
        parse_poly(f->p(), inst.F, static_cast<std::uint32_t>(points.size()));
    const Form1Spec spec{g, F, points};
    spec.validate();
    const PFunc h = compose_form1(spec);
    const WalshSpectrum s = walsh_full(h);
    const RegularityReport r = classify(h, s);
    report_["field"] = opts.field;
    report_["g"] = inst.g;
    report_["points"] = points_str(points);
    report_["F"] = F.to_string();
    report_["bent"] = r.is_bent;
    report_["kind"] = to_string(r.kind);
    if (r.epsilon) report_["epsilon"] = *r.epsilon;
    report_["theorem1_identity"] = walsh_via_theorem1(spec) == s;
    const Json degrees = degree_report(h, r.is_bent, r.epsilon.has_value());
    for (const auto& [key, v] : degrees.items()) report_[key] = v;
    report_["F_degree"] = F.degree();
    if (span_rank(*f, points) == points.size()) {
      report_["composed_degree"] = univariate_degree(
          compose_form1({PFunc::zero(f), F, points}));
    }
    report_["spectrum_digest"] = hex64(spectrum_digest(s));
    return finish(kExitPass);
  }

  int verify_theorem() {
    const FieldPtr f = field_from(opts);
    report_["field"] = opts.field;
    report_["theorem"] = thm;
    if (thm == "6" || thm == "7") return verify_gold(f);
    const auto t = predictor_theorem(thm);
    if (!t) throw ParseError("unknown theorem '" + thm + "'");
    const PFunc g = parse_function(f, inst.g);
    const auto points = parse_elements(*f, inst.points);
    const ReducedPoly F =
        parse_poly(f->p(), inst.F, static_cast<std::uint32_t>(points.size()));
    report_["g"] = inst.g;
    report_["points"] = points_str(points);
    report_["F"] = F.to_string();
    std::optional<ConstructionInstance> ci;
    std::string why;
    try {
      ci = make_instance(g, points, F, diag_from(inst.diag, f->p()));
    } catch (const NotExpansionForm& e) {
      why = e.what();
    } catch (const InvalidArgument& e) {
      why = e.what();
    }
    Json verdict;
    if (!ci) {
      const PFunc h = compose_form1({g, F, points});
      verdict["applicable"] = false;
      verdict["reason"] = why;
      verdict["bent"] = is_bent(h);
      verdict["predicted_vs_oracle"] = "n/a";
      report_["verdict"] = verdict;
      return finish(kExitPass);
    }
    const PredictionRun run = run_predictor(*ci, *t);
    verdict["applicable"] = run.applicable;
    if (!run.applicable) verdict["reason"] = run.reason;
    verdict["bent"] = run.oracle_bent;
    std::string cmp = "n/a";
    bool ok = true;
    if (run.applicable) {
      verdict["predicted_bent"] = run.predicted_bent;
      if (run.mismatch) {
        cmp = "mismatch(" + std::to_string(*run.mismatch) + ")";
        ok = false;
      } else if (run.predicted_bent != run.oracle_bent) {
        cmp = "mismatch(bentness)";
        ok = false;
      } else {
        cmp = "equal";
      }
    }
    verdict["predicted_vs_oracle"] = cmp;
    report_["verdict"] = verdict;
    report_["spectrum_digest"] = hex64(spectrum_digest(run.oracle));
    return finish(ok ? kExitPass : kExitMismatch);
  }

  int search() {
    const FieldPtr f = field_from(opts);
    report_["field"] = opts.field;
    report_["theorem"] = thm;
    if (thm == "6" || thm == "7") return search_gold(f);
    const auto t = predictor_theorem(thm);
    if (!t) throw ParseError("unknown theorem '" + thm + "'");
    std::mt19937_64 rng(opts.seed);
    report_["seed"] = opts.seed;
    Json hits = Json::array();
    std::size_t mismatches = 0;
    for (int i = 0; i < count; ++i) {
      const auto ci = sample_admissible(*t, f, rng);
      if (!ci) break;
      Json hit;
      hit["g"] = describe_function(ci->g);
      hit["points"] = points_str(ci->points);
      hit["F"] = ci->F.to_string();
      if (opts.confirm) {
        const PredictionRun run = run_predictor(*ci, *t);
        hit["oracle_agrees"] = run.agrees();
        mismatches += !run.agrees();
      }
      hits.push_back(hit);
    }
    report_["count"] = hits.size();
    report_["hits"] = hits;
    if (opts.confirm) report_["discrepancies"] = mismatches;
    return finish(mismatches == 0 ? kExitPass : kExitMismatch);
  }

 private:
  CriterionVerdict criterion(const FieldCtx& c, ElemIndex a, ElemIndex u,
                             ElemIndex v) const {
    try {
      return thm == "6" ? thm6_check(c, a, k, u, v) : thm7_check(c, a, k, u, v);
    } catch (const InvalidArgument& e) {
      return {false, false, e.what()};
    }
  }

  static PFunc gold_form(const FieldPtr& f, ElemIndex a, std::uint32_t k,
                         ElemIndex u, ElemIndex v) {
    return compose_form1({gold(f, a, k), ReducedPoly::product(f->p(), 2),
                          {u, v}});
  }

  int verify_gold(const FieldPtr& f) {
    const ElemIndex a = parse_element(*f, a_text);
    const ElemIndex u = parse_element(*f, u_text);
    const ElemIndex v = parse_element(*f, v_text);
    report_["a"] = a;
    report_["k"] = k;
    report_["u"] = u;
    report_["v"] = v;
    const CriterionVerdict cv = criterion(*f, a, u, v);
    Json verdict;
    verdict["applicable"] = cv.applicable;
    if (!cv.applicable) verdict["reason"] = cv.reason;
    bool bent = false;
    if (u != 0 && v != 0 && a != 0) bent = is_bent(gold_form(f, a, k, u, v));
    verdict["bent"] = bent;
    bool ok = true;
    if (cv.applicable) {
      verdict["predicted_bent"] = cv.bent;
      ok = cv.bent == bent;
      verdict["predicted_vs_oracle"] =
          ok ? "equal"
             : "mismatch(" + std::to_string(u) + "," + std::to_string(v) + ")";
    } else {
      verdict["predicted_vs_oracle"] = "n/a";
    }
    report_["verdict"] = verdict;
    return finish(ok ? kExitPass : kExitMismatch);
  }

  static std::pair<ElemIndex, ElemIndex> range_from(const std::string& text,
                                                    ElemIndex q) {
    if (text.empty()) return {1, q - 1};
    const std::size_t colon = text.find(':');
    if (colon == std::string::npos) {
      throw ParseError("expected lo:hi, got '" + text + "'");
    }
    auto bound = [&](const std::string& t) -> ElemIndex {
      std::size_t used = 0;
      unsigned long v = 0;
      try {
        v = std::stoul(t, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (t.empty() || used != t.size()) {
        throw ParseError("expected lo:hi, got '" + text + "'");
      }
      return static_cast<ElemIndex>(std::min<unsigned long>(v, q));
    };
    const ElemIndex lo = bound(text.substr(0, colon));
    const ElemIndex hi = bound(text.substr(colon + 1));
    if (lo == 0 || hi >= q) {
      throw ParseError("range must lie in 1:" + std::to_string(q - 1));
    }
    return {lo, hi};
  }

  int search_gold(const FieldPtr& f) {
    const ElemIndex a = parse_element(*f, a_text);
    const auto [u_lo, u_hi] = range_from(u_range, f->size());
    const auto [v_lo, v_hi] = range_from(v_range, f->size());
    report_["a"] = a;
    report_["k"] = k;
    Json hits = Json::array();
    std::size_t checked = 0, oracle_hits = 0, discrepancies = 0;
    bool applicable = true;
    std::string reason;
    for (ElemIndex u = u_lo; u <= u_hi && applicable; ++u) {
      for (ElemIndex v = v_lo; v <= v_hi && applicable; ++v) {
        if (thm == "6" && u == v) continue;
        const CriterionVerdict cv = criterion(*f, a, u, v);
        if (!cv.applicable) {
          applicable = false;
          reason = cv.reason;
          break;
        }
        ++checked;
        if (cv.bent) hits.push_back(Json::array({u, v}));
        if (opts.confirm) {
          const bool bent = is_bent(gold_form(f, a, k, u, v));
          oracle_hits += bent;
          if (bent != cv.bent) {
            if (discrepancies == 0) {
              report_["first_discrepancy"] = Json::array({u, v});
            }
            ++discrepancies;
          }
        }
      }
    }
    report_["applicable"] = applicable;
    if (!applicable) report_["reason"] = reason;
    report_["checked"] = checked;
    report_["count"] = hits.size();
    if (opts.confirm) {
      report_["oracle_count"] = oracle_hits;
      report_["discrepancies"] = discrepancies;
    }
    report_["hits"] = hits;
    return finish(discrepancies == 0 ? kExitPass : kExitMismatch);
  }

  int finish(int code) {
    if (opts.timing) {
      report_["wall_time_s"] =
          std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                        start_)
              .count();
    }
    if (opts.json) {
      out_ << report_.dump(2) << "\n";
    } else {
      render_text(report_, out_, "");
    }
    return code;
  }

  std::ostream& out_;
  std::chrono::steady_clock::time_point start_;
  Json report_;
};

void add_instance_opts(CLI::App* cmd, InstanceOpts& o, bool with_f) {
  cmd->add_option("--g", o.g, "Seed function g")->required();
  cmd->add_option("--points", o.points, "Comma-separated u_1,...,u_tau")
      ->required();
  if (with_f) cmd->add_option("--F", o.F, "Outer polynomial F")->required();
  cmd->add_option("--diag", o.diag,
                  "Explicit A_ii values for p = 2, comma-separated");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  Runner r(args, out);
  CLI::App app{"Bent functions of the form g(x) + F(Tr(u_1 x), ...)",
               "bentkit"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--field", r.opts.field, "Field spec p^n or p^n/c_n,...,c_0");
  app.add_option("--generator", r.opts.generator,
                 "Index of the generator xi (default: the root of the "
                 "modulus)");
  app.add_option("--seed", r.opts.seed, "Seed for randomized commands");
  app.add_flag("--json", r.opts.json, "Emit the report as JSON");
  app.add_flag("--confirm", r.opts.confirm,
               "Confirm criteria against the brute-force oracle");
  app.add_flag("--timing", r.opts.timing, "Append wall time to the report");

  auto* reproduce =
      app.add_subcommand("reproduce", "Reproduce a reference instance (1-7)");
  reproduce->add_option("example", r.example, "Reference instance number")
      ->required()
      ->check(CLI::Range(1, 7));

  auto* check = app.add_subcommand("check", "Classify a function");
  check->add_option("fn", r.fn, "Function spec")->required();
  auto* walsh = app.add_subcommand("walsh", "Dump the Walsh spectrum");
  walsh->add_option("fn", r.fn, "Function spec")->required();

  auto* fit = app.add_subcommand("fit-dual", "Fit the dual-shift expansion");
  add_instance_opts(fit, r.inst, false);
  auto* construct =
      app.add_subcommand("construct", "Build f = g + F(Tr(u_i x)) and classify");
  add_instance_opts(construct, r.inst, true);

  auto* verify = app.add_subcommand(
      "verify-theorem", "Compare a theorem's prediction with the oracle");
  verify->add_option("--thm", r.thm, "2|3|prop1|4.1|4.2|4.3|4.4|5|6|7")
      ->required();
  verify->add_option("--g", r.inst.g, "Seed function g");
  verify->add_option("--points", r.inst.points, "u_1,...,u_tau");
  verify->add_option("--F", r.inst.F, "Outer polynomial F");
  verify->add_option("--diag", r.inst.diag, "Explicit A_ii values (p = 2)");
  verify->add_option("--a", r.a_text, "Gold coefficient a");
  verify->add_option("--k", r.k, "Gold exponent k");
  verify->add_option("--u", r.u_text, "u");
  verify->add_option("--v", r.v_text, "v");

  auto* search = app.add_subcommand("search", "Enumerate criterion hits");
  search->add_option("--thm", r.thm, "2|3|prop1|4.1|4.2|4.3|4.4|5|6|7")
      ->required();
  search->add_option("--a", r.a_text, "Gold coefficient a (6, 7)");
  search->add_option("--k", r.k, "Gold exponent k (6, 7)");
  search->add_option("--u-range", r.u_range, "Index range lo:hi for u");
  search->add_option("--v-range", r.v_range, "Index range lo:hi for v");
  search->add_option("--count", r.count, "Random instances (2-5)")
      ->check(CLI::NonNegativeNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  try {
    if (*reproduce) return r.reproduce();
    if (*check) return r.check();
    if (*walsh) return r.walsh();
    if (*fit) return r.fit_dual();
    if (*construct) return r.construct();
    if (*verify) {
      if ((r.thm == "6" || r.thm == "7") &&
          (r.u_text.empty() || r.v_text.empty())) {
        throw ParseError("--u and --v are required for theorems 6 and 7");
      }
      if (r.thm != "6" && r.thm != "7" &&
          (r.inst.g.empty() || r.inst.points.empty() || r.inst.F.empty())) {
        throw ParseError("--g, --points and --F are required");
      }
      return r.verify_theorem();
    }
    if (*search) return r.search();
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitMismatch;
  }
  return kExitUsage;
}

}  // namespace bentkit
