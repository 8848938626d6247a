#include <algorithm>
#include <cmath>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "job.hpp"
#include "symdyn/decay.hpp"
#include "symdyn/error.hpp"
#include "symdyn/escape.hpp"
#include "symdyn/language.hpp"
#include "symdyn/perron.hpp"
#include "symdyn/perturbation.hpp"
#include "symdyn/structure.hpp"
#include "symdyn/swap.hpp"

namespace symdyn::cli {
namespace {

using nlohmann::json;

enum Exit { kOk = 0, kParse = 1, kUnsupported = 2, kDisagree = 3 };

struct Flags {
  std::string job;
  bool json = false;
  std::optional<double> tol;
  std::optional<std::size_t> nmax;
  std::optional<std::size_t> horizon;
};

std::string fmt(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  std::ostringstream os;
  os << std::setprecision(12) << x;
  return os.str();
}

json number(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return x;
}

json rational(const Rational& q) { return {{"exact", to_string(q)}, {"value", q.get_d()}}; }

json coeffs(const Polynomial& p) {
  json a = json::array();
  for (int i = 0; i <= p.degree(); ++i) a.push_back(to_string(p.coeff(i)));
  return a;
}

json integers(const std::vector<Integer>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(x.get_str());
  return a;
}

class Table {
 public:
  explicit Table(std::vector<std::string> head) : rows_{std::move(head)} {}
  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }
  void print(std::ostream& os) const {
    std::vector<std::size_t> w;
    for (const auto& r : rows_)
      for (std::size_t i = 0; i < r.size(); ++i) {
        if (w.size() <= i) w.push_back(0);
        w[i] = std::max(w[i], r[i].size());
      }
    for (const auto& r : rows_) {
      for (std::size_t i = 0; i < r.size(); ++i)
        os << (i ? "  " : "") << std::left << std::setw(static_cast<int>(w[i])) << r[i];
      os << '\n';
    }
  }

 private:
  std::vector<std::vector<std::string>> rows_;
};

void print_pairs(const std::vector<std::pair<std::string, std::string>>& kv) {
  std::size_t w = 0;
  for (const auto& [k, v] : kv) w = std::max(w, k.size());
  for (const auto& [k, v] : kv) std::cout << std::left << std::setw(static_cast<int>(w)) << k << "  " << v << '\n';
}

EngineOptions engine_options(const Job& job, const Flags& f) {
  EngineOptions o;
  if (auto t = f.tol ? f.tol : job.tol) o.tol = *t;
  if (auto n = f.nmax ? f.nmax : job.nmax) o.oracle_n = *n;
  o.oracle_n = std::max<std::size_t>(o.oracle_n, 6);
  return o;
}

const Word& single_word(const Job& job) {
  if (job.words.size() != 1) throw JobError("this command needs exactly one word");
  return job.words.front();
}

// Perturbation through the engine that fits the system.
PerturbationResult perturb(const Job& job, const EngineOptions& opt, bool want_series) {
  if (job.words.empty()) throw JobError("no forbidden word given");
  return std::visit(
      [&](const auto& s) -> PerturbationResult {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, FullSystem>) {
          return full_shift_gf(s.n, ForbiddenSet(job.words), opt);
        } else if constexpr (std::is_same_v<T, SftSystem>) {
          if (job.words.size() == 1 && !want_series) return sft_entropy_single(s.a, job.words[0], opt);
          return sft_multi_gf(s.a, ForbiddenSet(job.words), opt);
        } else if constexpr (std::is_same_v<T, SoficSystem>) {
          return sofic_perturb(s.g, single_word(job), opt).result;
        } else if constexpr (std::is_same_v<T, SgapSystem>) {
          return sgap_perturb_gf(s.s, single_word(job), opt);
        } else {
          if (want_series) return sgap_perturb_gf(GapSet::multiples(s.d), single_word(job), opt);
          return dgap_perturb_entropy(s.d, single_word(job), opt);
        }
      },
      job.system);
}

json result_json(const PerturbationResult& r) {
  json o;
  o["lambda"] = r.lambda;
  o["entropy"] = number(r.entropy);
  o["empty"] = r.empty;
  o["ambient_lambda"] = r.ambient_lambda;
  o["characteristic"] = coeffs(r.characteristic);
  if (r.generating_function) o["generating_function"] = r.generating_function->str();
  if (r.literal_generating_function) o["literal_generating_function"] = r.literal_generating_function->str();
  if (r.normalization_shift) o["normalization_shift"] = *r.normalization_shift;
  if (r.series) {
    json s = json::array();
    for (const auto& c : r.series->coefficients) s.push_back(to_string(c));
    o["series"] = s;
  }
  json oc;
  oc["performed"] = r.oracle.performed;
  oc["agree"] = r.oracle.agree;
  oc["lambda_agree"] = r.oracle.lambda_agree;
  oc["series_checked"] = r.oracle.series_checked;
  oc["series_agree"] = r.oracle.series_agree;
  oc["lambda"] = r.oracle.lambda;
  oc["counts"] = integers(r.oracle.counts);
  oc["avoiding_counts"] = integers(r.oracle.avoiding_counts);
  if (!r.oracle.detail.empty()) oc["detail"] = r.oracle.detail;
  o["oracle"] = oc;
  o["notes"] = r.notes;
  return o;
}

json header(const std::string& command, const Job& job) {
  json o;
  o["schema_version"] = kSchemaVersion;
  o["command"] = command;
  o["system"] = system_name(job.system);
  return o;
}

void emit(const json& rec) { std::cout << rec.dump(2) << '\n'; }

int cmd_entropy(const Job& job, const Flags& f) {
  const auto r = perturb(job, engine_options(job, f), false);
  if (f.json) {
    json rec = header("entropy", job);
    rec["result"] = result_json(r);
    emit(rec);
  } else {
    print_pairs({{"system", system_name(job.system)},
                 {"ambient lambda", fmt(r.ambient_lambda)},
                 {"lambda", fmt(r.lambda)},
                 {"entropy", fmt(r.entropy)},
                 {"characteristic", r.characteristic.str()},
                 {"oracle lambda", fmt(r.oracle.lambda)},
                 {"oracle agree", r.oracle.agree ? "true" : "false"}});
    for (const auto& n : r.notes) std::cout << "note: " << n << '\n';
    if (!r.oracle.detail.empty()) std::cout << "oracle: " << r.oracle.detail << '\n';
  }
  return r.oracle.agree ? kOk : kDisagree;
}

int cmd_series(const Job& job, const Flags& f) {
  const auto r = perturb(job, engine_options(job, f), true);
  if (!r.series) throw Unsupported("this system has no generating function");
  if (f.json) {
    json rec = header("series", job);
    rec["result"] = result_json(r);
    emit(rec);
  } else {
    print_pairs({{"F(z)", r.generating_function->str()},
                 {"literal F(z)", r.literal_generating_function ? r.literal_generating_function->str() : "-"},
                 {"shift j", r.normalization_shift ? std::to_string(*r.normalization_shift) : "-"}});
    Table t({"n", "series", "avoiding", "language"});
    for (std::size_t n = 0; n < r.series->coefficients.size(); ++n)
      t.add({std::to_string(n), to_string(r.series->coefficients[n]),
             n < r.oracle.avoiding_counts.size() ? r.oracle.avoiding_counts[n].get_str() : "-",
             n < r.oracle.counts.size() ? r.oracle.counts[n].get_str() : "-"});
    t.print(std::cout);
    if (!r.oracle.detail.empty()) std::cout << "oracle: " << r.oracle.detail << '\n';
  }
  return r.oracle.agree ? kOk : kDisagree;
}

int cmd_decay(const Job& job, const Flags& f) {
  if (!job.family) throw JobError("decay needs a word family");
  DecaySystem sys = std::visit(
      [](const auto& s) -> DecaySystem {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, SgapSystem>)
          return s.s;
        else if constexpr (std::is_same_v<T, DgapSystem>)
          return GapSet::multiples(s.d);
        else
          return presentation(System(s));
      },
      job.system);
  const double tol = f.tol ? *f.tol : job.tol.value_or(1e-13);
  const auto prof = decay_profile(*job.family, sys, job.n_lo, job.n_hi, tol);
  if (f.json) {
    json rec = header("decay", job);
    rec["family"] = job.family->str();
    rec["ambient_lambda"] = prof.ambient_lambda;
    rec["band_ratio"] = number(prof.band_ratio());
    json rows = json::array();
    for (const auto& r : prof.rows)
      rows.push_back({{"n", r.n},
                      {"word", r.word.str()},
                      {"lambda", r.lambda},
                      {"gap", r.gap},
                      {"scaled_gap", r.scaled_gap},
                      {"entropy_gap", r.entropy_gap}});
    rec["rows"] = rows;
    emit(rec);
  } else {
    Table t({"n", "word", "lambda_n", "gap", "scaled_gap", "n(h-h_n)"});
    for (const auto& r : prof.rows)
      t.add({std::to_string(r.n), r.word.str(), fmt(r.lambda), fmt(r.gap), fmt(r.scaled_gap), fmt(r.entropy_gap)});
    t.print(std::cout);
    std::cout << "band ratio " << fmt(prof.band_ratio()) << '\n';
  }
  return kOk;
}

int cmd_conjugacy(const Job& job, const Flags& f) {
  if (!job.u || !job.w) throw JobError("conjugacy needs u and w");
  const auto g = presentation(job.system);
  const std::size_t nmax = f.nmax ? *f.nmax : job.nmax.value_or(10);
  const auto adm = swap_admissible(g, *job.u, *job.w);
  std::optional<ConjugacyReport> rep;
  if (adm.admissible()) rep = verify_conjugacy(g, *job.u, *job.w, nmax, f.tol ? *f.tol : job.tol.value_or(1e-9));
  if (f.json) {
    json rec = header("conjugacy", job);
    rec["u"] = job.u->str();
    rec["w"] = job.w->str();
    rec["admissible"] = adm.admissible();
    rec["reasons"] = adm.reasons;
    if (rep) {
      rec["n_max"] = rep->n_max;
      rec["word_bijection"] = rep->word_bijection;
      rec["interior_onto"] = rep->interior_onto;
      rec["conjugate"] = rep->conjugate();
      rec["involution"] = rep->involution;
      rec["lambda_u"] = rep->lambda_u;
      rec["lambda_w"] = rep->lambda_w;
      rec["entropies_agree"] = rep->entropies_agree;
      rec["counts_u"] = rep->counts_u;
      rec["counts_w"] = rep->counts_w;
      rec["witnesses"] = rep->witnesses;
    }
    emit(rec);
  } else {
    print_pairs({{"admissible", adm.admissible() ? "true" : "false"}});
    for (const auto& r : adm.reasons) std::cout << "reason: " << r << '\n';
    if (rep) {
      print_pairs({{"word bijection", rep->word_bijection ? "true" : "false"},
                   {"block map onto", rep->interior_onto ? "true" : "false"},
                   {"involution", rep->involution ? "true" : "false"},
                   {"lambda_u", fmt(rep->lambda_u)},
                   {"lambda_w", fmt(rep->lambda_w)},
                   {"entropies agree", rep->entropies_agree ? "true" : "false"},
                   {"conjugate", rep->conjugate() ? "yes" : "no"}});
      for (const auto& w : rep->witnesses) std::cout << "witness: " << w << '\n';
    }
  }
  return kOk;
}

int cmd_structure(const Job& job, const Flags& f) {
  const std::size_t horizon = f.horizon ? *f.horizon : job.horizon.value_or(12);
  const auto rep = check_structure(presentation(job.system), job.words, horizon, job.candidate);
  if (f.json) {
    json rec = header("structure", job);
    rec["horizon"] = rep.horizon;
    rec["horizon_limited"] = rep.horizon_limited;
    rec["nonempty"] = rep.nonempty;
    rec["irreducible_at_horizon"] = rep.irreducible_at_horizon;
    if (!rep.irreducibility_witness.empty()) rec["irreducibility_witness"] = rep.irreducibility_witness;
    if (rep.sync) {
      rec["sync"] = {{"candidate", rep.sync->m.str()},
                     {"not_subword_of_forbidden", rep.sync->not_subword_of_forbidden},
                     {"in_language", rep.sync->in_language},
                     {"synchronizing_at_horizon", rep.sync->synchronizing_at_horizon},
                     {"passed", rep.sync->passed()}};
      if (!rep.sync->witness.empty()) rec["sync"]["witness"] = rep.sync->witness;
    }
    emit(rec);
  } else {
    std::vector<std::pair<std::string, std::string>> kv{
        {"horizon", std::to_string(rep.horizon)},
        {"nonempty", rep.nonempty ? "true" : "false"},
        {"irreducible at horizon", rep.irreducible_at_horizon ? "true" : "not verified"}};
    if (!rep.irreducibility_witness.empty()) kv.push_back({"no connector for", rep.irreducibility_witness});
    if (rep.sync) {
      kv.push_back({"candidate", rep.sync->m.str()});
      kv.push_back({"not in a forbidden word", rep.sync->not_subword_of_forbidden ? "true" : "false"});
      kv.push_back({"in language", rep.sync->in_language ? "true" : "false"});
      kv.push_back({"synchronizing", rep.sync->synchronizing_at_horizon ? "true" : "not verified"});
      if (!rep.sync->witness.empty()) kv.push_back({"sync witness", rep.sync->witness});
    }
    print_pairs(kv);
  }
  return kOk;
}

std::size_t escape_alphabet(const Job& job) {
  if (job.alphabet) return *job.alphabet;
  if (const auto* s = std::get_if<FullSystem>(&job.system)) return s->n;
  throw JobError("escape needs N or a full shift system");
}

int cmd_escape(const std::string& mode, const Job& job, const Flags& f) {
  const std::size_t n = escape_alphabet(job);
  json rec = header("escape " + mode, job);
  rec["N"] = n;
  int code = kOk;
  if (mode == "local") {
    const auto r = local_rate(job.points, n);
    if (!r.alpha_invertible) throw Unsupported("alpha(N) is singular");
    json alpha = json::array();
    for (std::size_t i = 0; i < r.alpha.rows(); ++i) {
      json row = json::array();
      for (std::size_t j = 0; j < r.alpha.cols(); ++j) row.push_back(to_string(r.alpha(i, j)));
      alpha.push_back(row);
    }
    rec["alpha"] = alpha;
    rec["T"] = rational(r.t);
    rec["lambda"] = rational(r.lambda);
    rec["rho"] = rational(r.rho);
    rec["diagonally_dominant"] = r.diagonally_dominant;
    if (!f.json)
      print_pairs({{"T", to_string(r.t)},
                   {"lambda", to_string(r.lambda) + " (" + fmt(r.lambda.get_d()) + ")"},
                   {"rho", to_string(r.rho) + " (" + fmt(r.rho.get_d()) + ")"},
                   {"diagonally dominant", r.diagonally_dominant ? "true" : "false"}});
  } else if (mode == "rate") {
    const double rho = escape_rate(n, job.words);
    rec["rho"] = number(rho);
    if (!f.json) print_pairs({{"rho", fmt(rho)}});
  } else if (mode == "sequence") {
    const auto rows = lambda_sequence(job.points, n, job.n_lo, job.n_hi, f.tol ? *f.tol : job.tol.value_or(1e-9));
    json out = json::array();
    Table t({"n", "lambda_n", "scaled_gap", "engine_lambda", "agree"});
    for (const auto& r : rows) {
      out.push_back({{"n", r.n},
                     {"lambda", r.lambda},
                     {"scaled_gap", r.scaled_gap},
                     {"engine_lambda", r.engine_lambda},
                     {"engines_agree", r.engines_agree}});
      t.add({std::to_string(r.n), fmt(r.lambda), fmt(r.scaled_gap), fmt(r.engine_lambda),
             r.engines_agree ? "true" : "false"});
      if (!r.engines_agree) code = kDisagree;
    }
    rec["rows"] = out;
    if (!f.json) t.print(std::cout);
  } else {
    throw JobError("escape mode is local, rate or sequence");
  }
  if (f.json) emit(rec);
  return code;
}

int cmd_present(const Job& job, const Flags& f) {
  const auto g = presentation(job.system);
  const auto sp = sofic_perturb(g, single_word(job), engine_options(job, f));
  const auto& p = sp.presentation;
  if (f.json) {
    json rec = header("present", job);
    rec["vertices"] = p.vertex_count();
    rec["alphabet"] = p.alphabet_size();
    json edges = json::array();
    for (const auto& e : p.edges()) edges.push_back({e.source, e.target, e.label});
    rec["edges"] = edges;
    rec["lambda"] = sp.result.lambda;
    rec["oracle_agree"] = sp.result.oracle.agree;
    emit(rec);
  } else {
    std::cout << "vertices " << p.vertex_count() << ", alphabet " << p.alphabet_size() << ", lambda "
              << fmt(sp.result.lambda) << '\n';
    Table t({"source", "target", "label"});
    for (const auto& e : p.edges()) t.add({std::to_string(e.source), std::to_string(e.target), std::to_string(e.label)});
    t.print(std::cout);
  }
  return sp.result.oracle.agree ? kOk : kDisagree;
}

}  // namespace
}  // namespace symdyn::cli

int main(int argc, char** argv) {
  using namespace symdyn::cli;
  CLI::App app{"Entropy, generating functions, conjugacies and escape rates of perturbed subshifts"};
  app.require_subcommand(1);
  Flags flags;
  std::string escape_mode;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("job", flags.job, "JSON job file")->required()->check(CLI::ExistingFile);
    sub->add_flag("--json", flags.json, "Emit a JSON record");
    sub->add_option("--tol", flags.tol, "Root-finding tolerance");
    sub->add_option("--nmax", flags.nmax, "Oracle word length (at least 6)");
    sub->add_option("--horizon", flags.horizon, "Horizon for structure checks");
  };
  std::vector<std::string> names{"entropy", "series", "decay", "conjugacy", "structure", "present"};
  for (const auto& n : names) add_common(app.add_subcommand(n));
  auto* esc = app.add_subcommand("escape", "Escape rates: local, rate or sequence");
  esc->add_option("mode", escape_mode, "local | rate | sequence")
      ->required()
      ->check(CLI::IsMember({"local", "rate", "sequence"}));
  add_common(esc);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? kOk : kParse;
  }

  try {
    const Job job = load_job(flags.job);
    const auto* sub = app.get_subcommands().front();
    const std::string cmd = sub->get_name();
    if (cmd == "entropy") return cmd_entropy(job, flags);
    if (cmd == "series") return cmd_series(job, flags);
    if (cmd == "decay") return cmd_decay(job, flags);
    if (cmd == "conjugacy") return cmd_conjugacy(job, flags);
    if (cmd == "structure") return cmd_structure(job, flags);
    if (cmd == "escape") return cmd_escape(escape_mode, job, flags);
    return cmd_present(job, flags);
  } catch (const JobError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kParse;
  } catch (const symdyn::InvalidArgument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kParse;
  } catch (const symdyn::Unsupported& e) {
    std::cerr << "unsupported: " << e.what() << '\n';
    return kUnsupported;
  } catch (const symdyn::OracleMismatch& e) {
    std::cerr << "oracle disagreement: " << e.what() << '\n';
    return kDisagree;
  } catch (const symdyn::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUnsupported;
  }
}
