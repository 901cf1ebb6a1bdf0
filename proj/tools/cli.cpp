#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <regex>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "jhkit/cohen.hpp"
#include "jhkit/collector.hpp"
#include "jhkit/error.hpp"
#include "jhkit/filtration.hpp"
#include "jhkit/groupring.hpp"
#include "jhkit/jameshopf.hpp"
#include "jhkit/series.hpp"
#include "jhkit/tensorcoalg.hpp"
#include "jhkit/verify.hpp"

namespace jhkit::cli {

namespace {

using nlohmann::json;

struct Config {
  int p = 2;
  int trunc = 4;
  std::string order = "right";
  std::uint64_t seed = 0;
  std::string format = "text";
  std::string alphabet;
  std::string ring = "Z";
};

// Letters named in free text: identifiers, sorted and unique.
AlphabetPtr infer_alphabet(const Config& cfg, std::initializer_list<std::string> texts,
                           const char* fallback = "x,y") {
  if (!cfg.alphabet.empty()) return Alphabet::parse(cfg.alphabet);
  static const std::regex ident("[A-Za-z_][A-Za-z0-9_]*");
  std::set<std::string> names;
  for (const auto& t : texts)
    for (auto it = std::sregex_iterator(t.begin(), t.end(), ident); it != std::sregex_iterator(); ++it)
      names.insert(it->str());
  if (names.empty()) return Alphabet::parse(fallback);
  return Alphabet::make(std::vector<std::string>(names.begin(), names.end()));
}

CoefficientRing parse_ring(const std::string& text) {
  if (text == "Z") return CoefficientRing::integers();
  if (text.rfind("Z/", 0) == 0) return CoefficientRing::prime_field(std::stoll(text.substr(2)));
  throw std::invalid_argument("unknown coefficient ring '" + text + "' (expected Z or Z/p)");
}

std::string matrix_text(const ModpMatrix& m) {
  std::string out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    out += "  ";
    for (std::size_t c = 0; c < m.cols(); ++c) out += (c ? " " : "") + std::to_string(m.at(r, c));
    out += "\n";
  }
  return out;
}

std::string endo_text(const GradedCoalgEndo& f) {
  std::string out;
  for (std::size_t n = 0; n < f.blocks.size(); ++n) out += "degree " + std::to_string(n) + ":\n" + matrix_text(f.blocks[n]);
  return out;
}

json smash_json(const SmashVector& v, const Alphabet& a) {
  json j = json::object();
  for (const auto& [l, c] : v) j[a.name(l)] = c;
  return j;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Config cfg;
  if (const char* env = std::getenv("JHKIT_SEED")) cfg.seed = std::stoull(env);
  bool seed_given = false;

  CLI::App app{"Free-group James-Hopf maps, Magnus/Fox calculus and tensor coalgebra tools", "jhkit"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--p", cfg.p, "prime for mod-p computations")->capture_default_str();
  app.add_option("--trunc", cfg.trunc, "series truncation degree D")->capture_default_str();
  app.add_option("--order", cfg.order, "sequence order: right|left")->capture_default_str();
  app.add_option_function<std::uint64_t>(
      "--seed", [&](std::uint64_t s) { cfg.seed = s, seed_given = true; }, "random seed (JHKIT_SEED overrides)");
  app.add_option("--format", cfg.format, "text|json")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  app.add_option("--alphabet", cfg.alphabet, "comma-separated letters (default: letters of the input, sorted)");

  std::string word, element, cohen_text, file;
  int k = 2, weight = 0, arity = 1, level = 1, deg = 0, n_index = 0;
  std::string index_text, algorithm = "closed", sigma_text = "()", signs_text, tuple_text;
  bool jh = false;

  auto* reduce = app.add_subcommand("reduce", "free reduction");
  reduce->add_option("word", word)->required();

  auto* hopf = app.add_subcommand("hopf", "James-Hopf map H_k");
  hopf->add_option("--k", k)->capture_default_str();
  hopf->add_option("word", word)->required();

  auto* magnus_cmd = app.add_subcommand("magnus", "Magnus expansion truncated at --trunc");
  magnus_cmd->add_option("--ring", cfg.ring, "Z or Z/p")->capture_default_str();
  magnus_cmd->add_option("word", word)->required();

  auto* fox = app.add_subcommand("fox", "Fox derivatives");
  fox->add_option("--index", index_text, "comma-separated letters i1,...,ik (d_ik applied first)");
  fox->add_option("--algorithm", algorithm)->check(CLI::IsMember({"closed", "recursive"}))->capture_default_str();
  fox->add_option("--ring", cfg.ring, "Z or Z/p")->capture_default_str();
  fox->add_option("word", word)->required();

  auto* val = app.add_subcommand("val", "Magnus valuation of a group-ring element");
  val->add_option("--ring", cfg.ring, "Z or Z/p")->capture_default_str();
  val->add_option("--n", n_index, "also decide membership in the n-th augmentation power");
  val->add_option("element", element)->required();

  auto* gamma = app.add_subcommand("gamma", "filtration membership");
  gamma->add_option("--weight", weight)->required();
  gamma->add_option("--arity", arity)->capture_default_str();
  gamma->add_flag("--jh", jh, "certify H_arity(w) in the weighted filtration instead");
  gamma->add_option("word", word)->required();

  auto* collect = app.add_subcommand("collect", "one Hall collection pass and H_k via collection");
  collect->add_option("--k", k)->capture_default_str();
  collect->add_option("word", word)->required();

  auto* hallbasis = app.add_subcommand("hallbasis", "basic commutators");
  hallbasis->add_option("--weight", weight)->required();

  auto* whitehead_cmd = app.add_subcommand("whitehead", "Whitehead product W_m");
  whitehead_cmd->add_option("--arity", arity)->required();
  whitehead_cmd->add_option("--weight", weight, "certify the image in gamma_weight");
  whitehead_cmd->add_option("word", word)->required();

  auto* cohen = app.add_subcommand("cohen", "Cohen-group elements");
  cohen->require_subcommand(1);
  auto* c_eval = cohen->add_subcommand("eval", "evaluate on a word");
  c_eval->add_option("cohen", cohen_text)->required();
  c_eval->add_option("word", word)->required();
  auto* c_evalmod = cohen->add_subcommand("evalmod", "evaluate on tower level N");
  c_evalmod->add_option("--level", level)->required();
  c_evalmod->add_option("cohen", cohen_text)->required();
  c_evalmod->add_option("word", word)->required();
  auto* c_e0 = cohen->add_subcommand("e0", "induced endomorphism of T(V)");
  c_e0->add_option("--deg", deg, "degree bound (default --trunc)");
  c_e0->add_option("cohen", cohen_text)->required();

  auto* tensor = app.add_subcommand("tensor", "tensor coalgebra endomorphisms");
  tensor->require_subcommand(1);
  auto* t_gen = tensor->add_subcommand("gen", "generator endomorphism beta T(sigma) H_k");
  t_gen->add_option("--k", k)->capture_default_str();
  t_gen->add_option("--sigma", sigma_text)->capture_default_str();
  t_gen->add_option("--deg", deg, "degree bound (default --trunc)");
  auto* t_factor = tensor->add_subcommand("factor", "factor an endomorphism into generators");
  t_factor->add_option("file", file)->required();
  auto* t_idem = tensor->add_subcommand("idem", "idempotent power under composition");
  t_idem->add_option("file", file)->required();
  auto* t_prim = tensor->add_subcommand("prim", "primitive dimension");
  t_prim->add_option("--deg", deg)->required();

  std::string suite = "all";
  auto* verify = app.add_subcommand("verify", "run a named verification suite");
  verify->add_option("suite", suite)->capture_default_str();
  verify->add_option("--n", n_index, "pattern: single instance, hopf index");
  verify->add_option("--signs", signs_text, "pattern: comma-separated +1/-1");
  verify->add_option("--tuple", tuple_text, "pattern: multi-indices 'a,b;c,d'");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }
  if (const char* env = std::getenv("JHKIT_SEED"); env && seed_given) cfg.seed = std::stoull(env);
  const bool as_json = cfg.format == "json";

  try {
    const auto order = parse_sequence_order(cfg.order);
    if (cfg.p != 0 && !is_prime(cfg.p)) throw PreconditionError("--p " + std::to_string(cfg.p) + " is not prime");
    if (cfg.trunc < 1) throw PreconditionError("--trunc " + std::to_string(cfg.trunc) + " must be >= 1");

    if (*reduce) {
      auto X = infer_alphabet(cfg, {word});
      auto w = parse_word(X, word);
      if (as_json)
        out << json{{"alphabet", X->names()}, {"reduced", to_string(w)}, {"length", w.size()}}.dump() << "\n";
      else
        out << to_string(w) << "\n";
    } else if (*hopf) {
      auto X = infer_alphabet(cfg, {word});
      auto w = parse_word(X, word);
      auto h = james_hopf(w, k, order);
      auto ab = abelianized_hopf(w, k);
      if (as_json)
        out << json{{"word", to_string(w)}, {"k", k}, {"hopf", to_string(h)}, {"abelianized", smash_json(ab, *h.alphabet())}}
                   .dump()
            << "\n";
      else
        out << to_string(h) << "\n" << to_string(ab, *h.alphabet()) << "\n";
    } else if (*magnus_cmd) {
      auto X = infer_alphabet(cfg, {word});
      auto s = magnus(parse_word(X, word), cfg.trunc, parse_ring(cfg.ring));
      if (as_json)
        out << json{{"ring", cfg.ring}, {"trunc", cfg.trunc}, {"series", to_string(s)}}.dump() << "\n";
      else
        out << to_string(s) << "\n";
    } else if (*fox) {
      auto X = infer_alphabet(cfg, {word, index_text});
      auto w = parse_word(X, word);
      const auto ring = parse_ring(cfg.ring);
      if (!index_text.empty() || fox->count("--index")) {
        std::vector<Letter> idx;
        std::stringstream ss(index_text);
        for (std::string name; std::getline(ss, name, ',');) {
          auto l = X->find(name);
          if (!l) throw UnknownLetter(name);
          idx.push_back(*l);
        }
        const auto alg = algorithm == "closed" ? FoxAlgorithm::closed_form : FoxAlgorithm::recursive;
        const Coeff v = higher_fox_aug(idx, w, ring, alg);
        if (as_json)
          out << json{{"index", index_text}, {"value", v}}.dump() << "\n";
        else
          out << v << "\n";
      } else {
        json j = json::object();
        for (Letter l = 0; l < X->size(); ++l) {
          auto d = fox_derivative(l, w, ring);
          if (as_json)
            j[X->name(l)] = to_string(d);
          else
            out << "d/d" << X->name(l) << ": " << to_string(d) << "\n";
        }
        if (as_json) out << j.dump() << "\n";
      }
    } else if (*val) {
      auto X = infer_alphabet(cfg, {element});
      auto a = parse_ring_element(parse_ring(cfg.ring), X, element);
      const int D = std::max(cfg.trunc, n_index);
      auto v = valuation(magnus_linear(a, D));
      json j{{"element", to_string(a)}, {"valuation", to_string(v)}};
      if (n_index > 0) {
        j["fox_member"] = aug_ideal_member(a, n_index);
        j["magnus_member"] = v.degree >= n_index;
      }
      if (as_json) {
        out << j.dump() << "\n";
      } else {
        out << "valuation " << to_string(v) << "\n";
        if (n_index > 0)
          out << "in augmentation power " << n_index << ": fox " << (j["fox_member"].get<bool>() ? "yes" : "no")
              << ", magnus " << (j["magnus_member"].get<bool>() ? "yes" : "no") << "\n";
      }
    } else if (*gamma) {
      auto X = infer_alphabet(cfg, {word});
      FiltrationSpec spec{cfg.p, weight, arity};
      spec.validate();
      json j;
      if (jh) {
        auto w = parse_word(X, word);
        const bool ok = verify_jh_filtration(w, spec, order);
        j = {{"word", to_string(w)}, {"threshold", spec.threshold()}, {"hopf_in_filtration", ok}};
        if (!as_json) out << "H_" << arity << " image in weighted filtration (threshold " << spec.threshold() << "): "
                          << (ok ? "yes" : "no") << "\n";
      } else {
        auto alpha = Alphabet::smash(X, arity);
        auto w = parse_word(alpha, word);
        auto m = gamma_member(w, spec, std::max(cfg.trunc, spec.threshold()));
        j = {{"word", to_string(w)}, {"threshold", m.threshold}, {"valuation", to_string(m.valuation)},
             {"verdict", to_string(m.verdict)}};
        if (!as_json)
          out << to_string(m.verdict) << " (valuation " << to_string(m.valuation) << ", threshold " << m.threshold << ")\n";
      }
      if (as_json) out << j.dump() << "\n";
    } else if (*collect) {
      auto X = infer_alphabet(cfg, {word});
      auto w = parse_word(X, word);
      auto res = collect_once(embed_sum(w), k);
      auto h = hopf_via_collection(w, k, order);
      const bool agree = abelianized(h) == abelianized_hopf(w, k);
      if (as_json)
        out << json{{"collected", to_string(res.collected)}, {"remainder", to_string(res.remainder)},
                    {"discarded", res.discarded}, {"hopf", to_string(h)}, {"abelianized_agrees", agree}}
                   .dump()
            << "\n";
      else
        out << "collected: " << to_string(res.collected) << "\nremainder: " << to_string(res.remainder)
            << "\ndiscarded: " << res.discarded << "\nH_" << k << " via collection: " << to_string(h)
            << "\nabelianized agreement: " << (agree ? "yes" : "no") << "\n";
    } else if (*hallbasis) {
      auto X = infer_alphabet(cfg, {});
      auto basis = hall_basis(X, weight);
      json j = json::array();
      for (std::size_t i = 0; i < basis.size(); ++i) {
        const auto name = hall_to_string(basis, i, *X);
        if (as_json)
          j.push_back({{"weight", basis[i].weight}, {"element", name}});
        else
          out << basis[i].weight << " " << name << "\n";
      }
      if (as_json) out << j.dump() << "\n";
    } else if (*whitehead_cmd) {
      auto X = infer_alphabet(cfg, {word});
      auto v = parse_word(Alphabet::smash(X, arity), word);
      auto image = whitehead(v, arity);
      json j{{"image", to_string(image)}};
      if (weight > 0) j["certified"] = verify_whitehead_filtration(v, {cfg.p, weight, arity});
      if (as_json) {
        out << j.dump() << "\n";
      } else {
        out << to_string(image) << "\n";
        if (weight > 0) out << "in filtration " << weight << ": " << (j["certified"].get<bool>() ? "yes" : "no") << "\n";
      }
    } else if (*cohen) {
      auto cw = parse_cohen_word(cohen_text);
      if (*c_eval || *c_evalmod) {
        auto X = infer_alphabet(cfg, {word});
        auto w = parse_word(X, word);
        std::string result = *c_eval ? to_string(eval(cw, w, order)) : to_string(eval_mod(cw, w, cfg.p, level, order));
        if (as_json)
          out << json{{"cohen", to_string(cw)}, {"word", to_string(w)}, {"result", result}}.dump() << "\n";
        else
          out << result << "\n";
      } else {
        TensorAmbient amb{static_cast<std::uint32_t>(cfg.p), infer_alphabet(cfg, {}), deg > 0 ? deg : cfg.trunc};
        auto f = induced_E0(cw, amb, order);
        out << (as_json ? endo_to_json(f) + "\n" : endo_text(f));
      }
    } else if (*tensor) {
      if (*t_gen) {
        TensorAmbient amb{static_cast<std::uint32_t>(cfg.p), infer_alphabet(cfg, {}), deg > 0 ? deg : cfg.trunc};
        auto f = generator_endo(k, Permutation::parse_cycles(sigma_text, k), amb);
        out << (as_json ? endo_to_json(f) + "\n" : endo_text(f));
      } else if (*t_factor) {
        auto factors = factor_endo(endo_from_json(read_file(file)));
        if (as_json) {
          json j = json::array();
          for (const auto& f : factors) {
            json terms = json::array();
            for (const auto& [s, c] : f.terms) terms.push_back({{"sigma", s.to_cycles()}, {"c", c}});
            j.push_back({{"k", f.k}, {"terms", terms}});
          }
          out << j.dump() << "\n";
        } else {
          out << to_string(factors);
        }
      } else if (*t_idem) {
        auto res = idempotent_power(endo_from_json(read_file(file)));
        json table = json::array();
        for (const auto& r : res.table)
          table.push_back({{"degree", r.degree}, {"rank", r.rank}, {"nullity", r.nullity}, {"dim", r.dim}});
        if (as_json) {
          out << json{{"power", res.power}, {"index", res.index}, {"period", res.period}, {"table", table}}.dump() << "\n";
        } else {
          out << "N = " << res.power << " (index " << res.index << ", period " << res.period << ")\n";
          out << "degree rank nullity dim\n";
          for (const auto& r : res.table)
            out << std::setw(6) << r.degree << std::setw(5) << r.rank << std::setw(8) << r.nullity << std::setw(4)
                << r.dim << "\n";
        }
      } else if (*t_prim) {
        auto X = infer_alphabet(cfg, {});
        TensorAmbient amb{static_cast<std::uint32_t>(cfg.p), X, deg};
        const auto dim = primitives(amb, deg).cols();
        const auto witt = restricted_witt_dimension(static_cast<int>(X->size()), cfg.p, deg);
        if (as_json)
          out << json{{"degree", deg}, {"nullspace", dim}, {"restricted_witt", witt}}.dump() << "\n";
        else
          out << "degree " << deg << ": nullspace " << dim << ", restricted Witt " << witt << "\n";
      }
    } else if (*verify) {
      if (suite == "pattern" && n_index > 0) {
        PatternInput in;
        in.n = n_index;
        std::stringstream ss(signs_text);
        for (std::string s; std::getline(ss, s, ',');) in.signs.push_back(std::stoi(s));
        std::stringstream ts(tuple_text);
        for (std::string J; std::getline(ts, J, ';');) {
          std::vector<int> idx;
          std::stringstream js(J);
          for (std::string y; std::getline(js, y, ',');) idx.push_back(std::stoi(y));
          in.tuple.push_back(std::move(idx));
        }
        const Coeff direct = polynomiality_pattern(in, order);
        const Coeff closed = polynomiality_closed_form(in, order);
        out << "direct " << direct << ", closed form " << closed << ", letters " << pattern_letter_count(in) << "\n";
        return direct == closed ? 0 : 1;
      }
      VerifyConfig vc{cfg.seed, order};
      std::vector<std::string> names = suite == "all" ? suite_names() : std::vector<std::string>{suite};
      bool all_ok = true;
      json j = json::array();
      for (const auto& name : names) {
        auto r = run_suite(name, vc);
        all_ok = all_ok && r.passed();
        if (as_json) {
          j.push_back({{"suite", r.name}, {"passed", r.passed()}, {"checks", r.checks}, {"failed", r.failed},
                       {"counterexamples", r.counterexamples}, {"notes", r.notes}});
          continue;
        }
        out << (r.passed() ? "PASS " : "FAIL ") << r.name << ": " << r.summary << " [" << r.checks << " checks, "
            << r.failed << " failed]\n";
        for (const auto& note : r.notes) out << "  note: " << note << "\n";
        for (const auto& c : r.counterexamples) out << "  replay: " << c << "\n";
      }
      if (as_json) out << j.dump() << "\n";
      return all_ok ? 0 : 1;
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}

}  // namespace jhkit::cli
