#pragma once

// Command-line front end. `run` is separate from main so tests can drive it
// with in-memory streams.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "klr/basis.hpp"
#include "klr/cartan.hpp"
#include "klr/dims.hpp"
#include "klr/idempotents.hpp"
#include "klr/levelred.hpp"
#include "klr/perms.hpp"
#include "klr/qpoly.hpp"
#include "klr/verify.hpp"

namespace klr::cli {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "klr/1";

inline Json big_json(const BigInt& v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max()) {
    return v.convert_to<long long>();
  }
  return v.str();
}

/// Ascending [[exponent, coefficient], ...].
inline Json poly_json(const LaurentPoly& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back(Json::array({e, big_json(c)}));
  return terms;
}

inline LaurentPoly poly_from_json(const Json& j) {
  LaurentPoly p;
  for (const auto& t : j) {
    const auto& c = t.at(1);
    p.add_term(t.at(0).get<long long>(), c.is_string() ? BigInt(c.get<std::string>()) : BigInt(c.get<long long>()));
  }
  return p;
}

inline std::vector<long long> parse_list(const std::string& text, const std::string& what) {
  std::vector<long long> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error(ErrorKind::BadInput, "cannot parse '" + item + "' in " + what);
    }
  }
  return out;
}

/// Registry name or path to a JSON document {"matrix": [[...]], "labels": [...]}.
inline CartanData load_cartan(const std::string& source) {
  namespace fs = std::filesystem;
  const bool looks_like_file = source.find('/') != std::string::npos ||
                               (source.size() > 5 && source.compare(source.size() - 5, 5, ".json") == 0);
  if (!looks_like_file && !fs::is_regular_file(source)) return builtin_cartan(source);
  std::ifstream in(source);
  if (!in) throw Error(ErrorKind::BadInput, "cannot open Cartan file '" + source + "'");
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const std::exception& e) {
    throw Error(ErrorKind::BadInput, std::string("malformed Cartan file: ") + e.what());
  }
  if (!doc.contains("matrix")) throw Error(ErrorKind::BadInput, "Cartan file has no \"matrix\"");
  Matrix m;
  try {
    m = doc.at("matrix").get<Matrix>();
  } catch (const std::exception&) {
    throw Error(ErrorKind::BadInput, "\"matrix\" must be an array of integer arrays");
  }
  CartanData c = validate_cartan(m);
  if (doc.contains("labels")) c = c.relabelled(doc.at("labels").get<std::vector<long long>>());
  return c;
}

inline Json cartan_json(const std::string& source, const CartanData& c) {
  Json j;
  j["source"] = source;
  j["matrix"] = c.matrix();
  j["symmetrizer"] = c.symmetrizer();
  j["labels"] = c.labels();
  return j;
}

/// Comma list aligned to node order, or label:coefficient entries.
inline Weight parse_weight(const CartanData& c, const std::string& text) {
  if (text.find(':') == std::string::npos) {
    auto k = parse_list(text, "--weight");
    if (k.size() != c.rank()) {
      throw Error(ErrorKind::LengthMismatch, "--weight has " + std::to_string(k.size()) + " entries, rank is " +
                                                 std::to_string(c.rank()));
    }
    Weight w(std::move(k));
    require_dominant(c, w);
    return w;
  }
  std::vector<long long> k(c.rank(), 0);
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw Error(ErrorKind::BadInput, "expected label:coefficient, got '" + item + "'");
    const auto label = parse_list(item.substr(0, colon), "--weight");
    const auto coeff = parse_list(item.substr(colon + 1), "--weight");
    if (label.size() != 1 || coeff.size() != 1) throw Error(ErrorKind::BadInput, "bad weight entry '" + item + "'");
    k[static_cast<std::size_t>(c.index_of_label(label[0]))] += coeff[0];
  }
  Weight w(std::move(k));
  require_dominant(c, w);
  return w;
}

inline IndexTuple parse_tuple(const CartanData& c, const std::string& text, const std::string& what) {
  std::vector<Index> out;
  for (long long label : parse_list(text, what)) out.push_back(c.index_of_label(label));
  return IndexTuple(std::move(out));
}

inline RootElement parse_beta(const CartanData& c, const std::string& text) {
  auto k = parse_list(text, "--beta");
  if (k.size() != c.rank()) {
    throw Error(ErrorKind::LengthMismatch, "--beta has " + std::to_string(k.size()) + " entries, rank is " +
                                               std::to_string(c.rank()));
  }
  return RootElement(std::move(k));
}

inline Json tuple_json(const CartanData& c, const IndexTuple& nu) {
  Json j = Json::array();
  for (Index i : nu) j.push_back(c.label(i));
  return j;
}

inline std::string labels_text(const CartanData& c, const IndexTuple& nu) { return tuple_text(c, nu); }

inline std::string list_text(const std::vector<long long>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

struct Common {
  std::string cartan = "A2";
  std::string weight;
  std::string format = "text";
  unsigned threads = 1;
  double time_budget = 0;

  EvalOptions eval() const {
    EvalOptions o;
    o.threads = std::max(1u, threads);
    if (time_budget > 0) o.budget = Budget(std::chrono::duration<double>(time_budget));
    return o;
  }
  bool json() const { return format == "json"; }
};

inline void add_common(CLI::App* sub, Common& common, bool weight_required = true) {
  sub->add_option("--cartan", common.cartan, "Registry name (A2, A1~, C3~, A4^2, D5^2, ...) or JSON file")
      ->capture_default_str();
  auto* w = sub->add_option("--weight", common.weight, "Dominant weight: k_1,...,k_r or label:k entries");
  if (weight_required) w->required();
  sub->add_option("--format", common.format, "Output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  sub->add_option("--threads", common.threads, "Worker threads for the permutation sums")->check(CLI::PositiveNumber);
  sub->add_option("--time-budget", common.time_budget, "Abort enumerations after this many seconds")
      ->check(CLI::NonNegativeNumber);
}

inline Json envelope(const std::string& command, const std::string& source, const CartanData& c,
                     const std::optional<Weight>& lambda) {
  Json j;
  j["schema"] = kSchema;
  j["command"] = command;
  j["cartan"] = cartan_json(source, c);
  if (lambda) j["weight"] = lambda->coeffs();
  return j;
}

inline void emit_json(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

/// Runs one command line (without the program name). Exit status 0 on success,
/// 1 on domain errors or failed verification, 2 on usage errors.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Dimensions, idempotents and basis index sets of cyclotomic quiver Hecke algebras", "klr"};
  app.require_subcommand(1);
  Common common;

  std::string nu_text, nuprime_text, beta_text, mu_text, letters_text, method = "all", suite = "all";
  std::vector<std::string> parts;
  bool all_pairs = false, use_oracle = false, list = false;
  long long n_value_opt = 1, max_n = 4, max_level = 3, limit = 1000;

  auto* c_dim = app.add_subcommand("dim", "Ungraded dimension of e(nu) R e(nu')");
  auto* c_gdim = app.add_subcommand("gdim", "Graded dimension of e(nu) R e(nu')");
  for (auto* sub : {c_dim, c_gdim}) {
    add_common(sub, common);
    sub->add_option("--nu", nu_text, "nu as comma-separated node labels");
    sub->add_option("--nuprime", nuprime_text, "nu' (defaults to nu)");
    sub->add_option("--beta", beta_text, "Root multiplicities, used with --all-pairs");
    sub->add_flag("--all-pairs", all_pairs, "Tabulate every pair (nu, nu') in I^beta");
  }
  c_dim->add_option("--method", method, "direct or divided (divided needs nu = nu')")
      ->check(CLI::IsMember({"all", "direct", "divided"}));
  c_gdim->add_flag("--oracle", use_oracle, "Use the recursive evaluation instead of the closed formula");

  auto* c_block = app.add_subcommand("block", "Dimension of R^Lambda(beta)");
  add_common(c_block, common);
  c_block->add_option("--beta", beta_text, "Root multiplicities")->required();

  auto* c_algebra = app.add_subcommand("algebra", "Dimension of R^Lambda(n), summed over Q_n^+");
  add_common(c_algebra, common);
  c_algebra->add_option("--n", n_value_opt, "Height n")->required()->check(CLI::NonNegativeNumber);

  auto* c_nonzero = app.add_subcommand("nonzero", "Decide whether e(nu) vanishes");
  add_common(c_nonzero, common);
  c_nonzero->add_option("--nu", nu_text, "nu")->required();
  c_nonzero->add_option("--method", method, "Criterion")
      ->check(CLI::IsMember({"all", "direct", "divided", "tilde", "shuffle"}));

  auto* c_basis = app.add_subcommand("basis", "Basis index set of e(nu~) R e(mu)");
  add_common(c_basis, common);
  c_basis->add_option("--mu", mu_text, "mu")->required();
  c_basis->add_option("--letters", letters_text, "Block letter order of nu~ (default: first occurrence in mu)");
  c_basis->add_flag("--list", list, "List the index pairs (w, r)");
  c_basis->add_option("--limit", limit, "Maximum number of listed pairs")->check(CLI::NonNegativeNumber);

  auto* c_tilde = app.add_subcommand("tilde", "Data of e(nu~) R e(nu~) for nu~ in block form");
  add_common(c_tilde, common);
  c_tilde->add_option("--nu", nu_text, "nu~ with pairwise distinct block letters")->required();

  auto* c_reduce = app.add_subcommand("reduce", "Level reduction along Lambda = Lambda^1 + ... + Lambda^l");
  add_common(c_reduce, common);
  c_reduce->add_option("--nu", nu_text, "nu");
  c_reduce->add_option("--mu", mu_text, "mu (defaults to nu)");
  c_reduce->add_option("--beta", beta_text, "Reduce the whole block R^Lambda(beta) instead");
  c_reduce->add_option("--part", parts, "One part Lambda^i per flag (default: fundamental weights)");

  auto* c_verify = app.add_subcommand("verify", "Run the self-check battery");
  add_common(c_verify, common, false);
  c_verify->add_option("--suite", suite, "Suite")->check(CLI::IsMember({"oracle", "divided", "levelred", "basis", "all"}));
  c_verify->add_option("--max-n", max_n, "Largest height checked")->check(CLI::NonNegativeNumber);
  c_verify->add_option("--max-level", max_level, "Largest weight level when --weight is absent")
      ->check(CLI::NonNegativeNumber);
  bool cartan_given_for_verify = false;
  c_verify->get_option("--cartan")->each([&](const std::string&) { cartan_given_for_verify = true; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  const bool json = common.json();
  auto* sub = app.get_subcommands().front();
  const std::string command = sub->get_name();
  try {
    const CartanData c = load_cartan(common.cartan);
    std::optional<Weight> lambda;
    if (!common.weight.empty()) lambda = parse_weight(c, common.weight);
    const EvalOptions opt = common.eval();
    Json doc = envelope(command, common.cartan, c, lambda);

    if (command == "dim" || command == "gdim") {
      const bool graded = command == "gdim";
      std::vector<std::pair<IndexTuple, IndexTuple>> pairs;
      if (all_pairs) {
        if (beta_text.empty()) throw Error(ErrorKind::BadInput, "--all-pairs needs --beta");
        const auto tuples = tuples_of(parse_beta(c, beta_text));
        for (const auto& a : tuples)
          for (const auto& b : tuples) pairs.emplace_back(a, b);
      } else {
        if (nu_text.empty() && !beta_text.empty()) throw Error(ErrorKind::BadInput, "--beta needs --all-pairs");
        const IndexTuple nu = parse_tuple(c, nu_text, "--nu");
        const IndexTuple nup = nuprime_text.empty() ? nu : parse_tuple(c, nuprime_text, "--nuprime");
        pairs.emplace_back(nu, nup);
      }
      Json rows = Json::array();
      std::ostringstream text;
      BigInt total = 0;
      LaurentPoly gtotal;
      for (const auto& [nu, nup] : pairs) {
        Json row;
        row["nu"] = tuple_json(c, nu);
        row["nuprime"] = tuple_json(c, nup);
        std::string value;
        if (graded) {
          const LaurentPoly g = use_oracle ? graded_dim_oracle(c, *lambda, nu, nup) : graded_dim(c, *lambda, nu, nup, opt);
          gtotal += g;
          row["graded"] = poly_json(g);
          row["text"] = g.to_string();
          value = g.to_string();
        } else {
          BigInt d;
          if (method == "divided") {
            if (!(nu == nup)) throw Error(ErrorKind::BadInput, "the divided formula needs nu = nu'");
            d = dim_divided(c, *lambda, nu, opt);
          } else {
            d = dim(c, *lambda, nu, nup, opt);
          }
          total += d;
          row["dim"] = big_json(d);
          value = d.str();
        }
        rows.push_back(row);
        if (pairs.size() == 1) {
          text << value << "\n";
        } else {
          text << labels_text(c, nu) << "  " << labels_text(c, nup) << "  " << value << "\n";
        }
      }
      doc["pairs"] = rows;
      if (graded) {
        doc["total"] = poly_json(gtotal);
        doc["total_text"] = gtotal.to_string();
        if (pairs.size() > 1) text << "total  " << gtotal.to_string() << "\n";
      } else {
        doc["total"] = big_json(total);
        if (pairs.size() > 1) text << "total  " << total.str() << "\n";
      }
      if (json) emit_json(out, doc); else out << text.str();
    } else if (command == "block") {
      const RootElement beta = parse_beta(c, beta_text);
      const LaurentPoly g = block_graded_dim(c, *lambda, beta, opt);
      const BigInt d = block_dim(c, *lambda, beta, opt);
      doc["beta"] = beta.coeffs();
      doc["graded"] = poly_json(g);
      doc["graded_text"] = g.to_string();
      doc["dim"] = big_json(d);
      if (json) emit_json(out, doc); else out << "graded  " << g.to_string() << "\ndim     " << d.str() << "\n";
    } else if (command == "algebra") {
      Json blocks = Json::array();
      std::ostringstream text;
      LaurentPoly gtotal;
      BigInt total = 0;
      for (const auto& beta : roots_of_height(c.rank(), n_value_opt)) {
        const LaurentPoly g = block_graded_dim(c, *lambda, beta, opt);
        const BigInt d = block_dim(c, *lambda, beta, opt);
        gtotal += g;
        total += d;
        blocks.push_back(Json{{"beta", beta.coeffs()}, {"dim", big_json(d)}, {"graded", poly_json(g)}, {"text", g.to_string()}});
        text << list_text(beta.coeffs()) << "  " << d.str() << "  " << g.to_string() << "\n";
      }
      text << "total  " << total.str() << "  " << gtotal.to_string() << "\n";
      doc["n"] = n_value_opt;
      doc["blocks"] = blocks;
      doc["dim"] = big_json(total);
      doc["graded"] = poly_json(gtotal);
      doc["graded_text"] = gtotal.to_string();
      if (json) emit_json(out, doc); else out << text.str();
    } else if (command == "nonzero") {
      const IndexTuple nu = parse_tuple(c, nu_text, "--nu");
      std::vector<NonzeroVerdict> verdicts;
      if (method == "all" || method == "direct") verdicts.push_back(nonzero_direct(c, *lambda, nu, opt));
      if (method == "all" || method == "divided") verdicts.push_back(nonzero_divided(c, *lambda, nu, opt));
      if (method == "tilde") verdicts.push_back(nonzero_tilde(c, *lambda, nu));
      if (method == "all") {
        try {
          verdicts.push_back(nonzero_tilde(c, *lambda, nu));
        } catch (const Error& e) {
          if (e.kind() != ErrorKind::NotTildeForm) throw;
        }
      }
      if (method == "all" || method == "shuffle") verdicts.push_back(nonzero_by_shuffle(c, *lambda, nu));
      Json arr = Json::array();
      std::ostringstream text;
      for (const auto& v : verdicts) {
        Json j;
        j["method"] = std::string(to_string(v.method));
        j["nonzero"] = v.verdict;
        text << to_string(v.method) << "  " << (v.verdict ? "nonzero" : "zero");
        if (v.value) {
          j["value"] = big_json(*v.value);
          text << "  sum=" << v.value->str();
        }
        if (!v.block_bounds.empty()) {
          Json b = Json::array();
          for (const auto& [ni, bi] : v.block_bounds) {
            b.push_back(Json::array({ni, bi}));
            text << "  N=" << ni << ",b=" << bi;
          }
          j["blocks"] = b;
        }
        if (v.shuffle) {
          Json pieces = Json::array();
          for (std::size_t i = 0; i < v.shuffle->pieces.size(); ++i) {
            pieces.push_back(Json{{"fundamental", c.label(v.shuffle->fundamentals[i])},
                                  {"positions", v.shuffle->split.parts[i]},
                                  {"piece", tuple_json(c, v.shuffle->pieces[i])}});
            text << "  Lambda_" << c.label(v.shuffle->fundamentals[i]) << ":" << labels_text(c, v.shuffle->pieces[i]);
          }
          j["witness"] = pieces;
        }
        text << "\n";
        arr.push_back(j);
      }
      doc["nu"] = tuple_json(c, nu);
      doc["verdicts"] = arr;
      if (json) emit_json(out, doc); else out << text.str();
    } else if (command == "basis") {
      const IndexTuple mu = parse_tuple(c, mu_text, "--mu");
      std::optional<std::vector<Index>> order;
      if (!letters_text.empty()) order = parse_tuple(c, letters_text, "--letters").entries();
      const TildeData t = tilde_of(mu, order);
      const BasisIndexSet set = basis_index_set(c, *lambda, mu, t);
      doc["mu"] = tuple_json(c, mu);
      doc["nu_tilde"] = tuple_json(c, t.tuple);
      doc["d_mu"] = d_mu(mu, t.tuple).one_line();
      doc["bounds"] = set.bounds;
      doc["empty"] = set.empty;
      doc["cardinality"] = big_json(set.cardinality());
      std::ostringstream text;
      text << "nu~     " << labels_text(c, t.tuple) << "\n"
           << "d_mu    " << d_mu(mu, t.tuple).to_string() << "\n"
           << "bounds  " << list_text(set.bounds) << "\n"
           << "size    " << set.cardinality().str() << (set.empty ? " (empty)" : "") << "\n";
      if (list) {
        Json elems = Json::array();
        long long emitted = 0;
        set.for_each([&](const Permutation& w, const std::vector<long long>& r) {
          if (emitted >= limit) return false;
          elems.push_back(Json{{"w", w.one_line()}, {"r", r}});
          text << w.to_string() << "  " << list_text(r) << "\n";
          ++emitted;
          return true;
        });
        doc["elements"] = elems;
        doc["truncated"] = BigInt(emitted) < set.cardinality();
      }
      if (json) emit_json(out, doc); else out << text.str();
    } else if (command == "tilde") {
      const IndexTuple nu = parse_tuple(c, nu_text, "--nu");
      const TildeData t = TildeData::from_tuple(nu);
      Json blocks = Json::array();
      std::ostringstream text;
      for (std::size_t i = 0; i < t.blocks.count(); ++i) {
        const long long ni = tilde_n(c, *lambda, t, i);
        blocks.push_back(Json{{"letter", c.label(t.letters[i])}, {"size", t.blocks.size_of(i)}, {"N", ni}});
        text << "block " << c.label(t.letters[i]) << "^" << t.blocks.size_of(i) << "  N=" << ni << "\n";
      }
      const LaurentPoly g = graded_dim_tilde(c, *lambda, t);
      const BigInt d = dim_tilde(c, *lambda, t);
      doc["nu_tilde"] = tuple_json(c, nu);
      doc["blocks"] = blocks;
      doc["dim"] = big_json(d);
      doc["graded"] = poly_json(g);
      doc["graded_text"] = g.to_string();
      text << "dim     " << d.str() << "\ngraded  " << g.to_string() << "\n";
      if (json) emit_json(out, doc); else out << text.str();
    } else if (command == "reduce") {
      LevelSplit split;
      if (parts.empty()) {
        for (Index i : fundamentals_of(*lambda)) split.parts.push_back(Weight::fundamental(c.rank(), i));
        if (split.parts.empty()) split.parts.push_back(*lambda);
      } else {
        for (const auto& p : parts) split.parts.push_back(parse_weight(c, p));
      }
      split.validate(c, *lambda);
      Json jparts = Json::array();
      for (const auto& p : split.parts) jparts.push_back(p.coeffs());
      doc["parts"] = jparts;
      BigInt reduced, direct;
      if (!beta_text.empty()) {
        const RootElement beta = parse_beta(c, beta_text);
        reduced = reduce_block_dim(c, beta, split);
        direct = block_dim(c, *lambda, beta, opt);
        doc["beta"] = beta.coeffs();
      } else {
        const IndexTuple nu = parse_tuple(c, nu_text, "--nu");
        const IndexTuple mu = mu_text.empty() ? nu : parse_tuple(c, mu_text, "--mu");
        reduced = reduce_pair_dim_multi(c, nu, mu, split);
        direct = dim(c, *lambda, nu, mu, opt);
        doc["nu"] = tuple_json(c, nu);
        doc["mu"] = tuple_json(c, mu);
      }
      doc["reduced"] = big_json(reduced);
      doc["direct"] = big_json(direct);
      doc["equal"] = reduced == direct;
      if (json) {
        emit_json(out, doc);
      } else {
        out << "reduced  " << reduced.str() << "\ndirect   " << direct.str() << "\n"
            << (reduced == direct ? "equal" : "DIFFERENT") << "\n";
      }
    } else if (command == "verify") {
      VerifyConfig cfg;
      cfg.max_n = max_n;
      cfg.max_level = max_level;
      if (lambda && !cartan_given_for_verify) throw Error(ErrorKind::BadInput, "--weight needs --cartan");
      if (cartan_given_for_verify) cfg.battery = {BatteryEntry{common.cartan, c}};
      cfg.weight = lambda;
      const auto reports = verify_suite(suite, cfg);
      Json arr = Json::array();
      bool ok = true;
      std::ostringstream text;
      for (const auto& r : reports) {
        ok = ok && r.passed();
        arr.push_back(Json{{"suite", r.suite},
                           {"passed", r.passed()},
                           {"blocks", r.blocks},
                           {"failed_blocks", r.failed_blocks},
                           {"checks", r.checks},
                           {"mismatches", r.mismatches},
                           {"first_counterexample", r.first_counterexample}});
        if (reports.size() > 1) text << r.suite << ": ";
        text << (r.passed() ? "OK: " : "FAIL: ") << (r.blocks - r.failed_blocks) << "/" << r.blocks
             << " β-blocks, " << r.mismatches << " mismatches";
        if (!r.passed()) text << "; first counterexample: " << r.first_counterexample;
        text << "\n";
      }
      doc.erase("weight");
      if (lambda) doc["weight"] = lambda->coeffs();
      doc["reports"] = arr;
      doc["passed"] = ok;
      if (json) emit_json(out, doc); else out << text.str();
      return ok ? 0 : 1;
    }
    return 0;
  } catch (const Error& e) {
    if (json) {
      emit_json(out, Json{{"schema", kSchema},
                          {"command", command},
                          {"error", Json{{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}}}});
    } else {
      err << "error: " << e.what() << "\n";
    }
    return 1;
  }
}

}  // namespace klr::cli
