// Command-line front end: growth tables, closed-form verification, series
// expansion, sequence analysis, automaton-space search, relation checks and
// normal-form counts.
//
// Exit codes: 0 success, 1 at least one verification failure, 2 usage or
// parse error, 3 resource cap exceeded.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mealy/analyze.hpp"
#include "mealy/corpus.hpp"
#include "mealy/csv.hpp"
#include "mealy/io.hpp"
#include "mealy/verify.hpp"

namespace {

using namespace mealy;

/// Builtin name or file path.
automaton resolve_automaton(const std::string& source) {
  try {
    return corpus_lookup(source).aut;
  } catch (const error&) {
    return load_automaton_file(source);
  }
}

nlohmann::ordered_json report_json(const verification_report& rep) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& c : rep.checks) {
    nlohmann::ordered_json j;
    j["id"] = c.id;
    j["claim"] = c.claim;
    j["status"] = c.status;
    j["expected"] = c.expected;
    j["got"] = c.got;
    j["range"] = c.range;
    arr.push_back(std::move(j));
  }
  return arr;
}

void print_report(const verification_report& rep, const std::string& format) {
  if (format == "json") {
    std::cout << report_json(rep).dump(2) << "\n";
    return;
  }
  for (const auto& c : rep.checks) {
    std::cout << "[" << c.status << "] " << c.id << ": " << c.claim << " (" << c.range << ")\n";
    if (c.status == "fail" || (c.status == "diagnostic" && c.expected != c.got)) {
      std::cout << "    expected: " << c.expected << "\n";
      std::cout << "    got:      " << c.got << "\n";
    }
  }
}

int run(int argc, char** argv) {
  CLI::App app{"growth functions of Mealy automata and their transformation semigroups"};
  app.require_subcommand(1);

  // growth -------------------------------------------------------------------
  std::string g_source, g_format = "csv", g_registry_path;
  unsigned g_nmax = 10;
  std::size_t g_cap = 1'000'000;
  bool g_monoid = false, g_oracle = false;
  auto* growth = app.add_subcommand("growth", "growth tables of an automaton");
  growth->add_option("automaton", g_source, "builtin name or file path")->required();
  growth->add_option("--nmax", g_nmax, "levels to enumerate")->check(CLI::PositiveNumber);
  growth->add_option("--element-cap", g_cap, "registry size cap");
  growth->add_option("--format", g_format, "csv, json or tsv")
      ->check(CLI::IsMember({"csv", "json", "tsv"}));
  growth->add_flag("--monoid", g_monoid, "count the identity as a length-0 element");
  growth->add_flag("--direct-oracle", g_oracle,
                   "cross-check levels n <= 6 against power-automaton minimization");
  growth->add_option("--registry", g_registry_path, "dump the element registry as JSON");

  // verify ---------------------------------------------------------------------
  std::string v_name, v_format = "text", v_corpus;
  long v_pbound = 8;
  auto* verify = app.add_subcommand("verify", "run the recorded checks for a corpus entry");
  verify->add_option("name", v_name, "a1..a4, a6, b<m>, a5, or 'all'")->required();
  verify->add_option("--pbound", v_pbound, "parameter bound for relation families");
  verify->add_option("--format", v_format, "text or json")->check(CLI::IsMember({"text", "json"}));
  verify->add_option("--corpus", v_corpus, "directory with golden tables");

  // series ---------------------------------------------------------------------
  std::string s_kind, s_file, s_format = "csv";
  unsigned s_nmax = 20;
  auto* series = app.add_subcommand("series", "expand a growth series");
  series->add_option("kind", s_kind, "a5, a6, a6-semigroup or rational")->required();
  series->add_option("file", s_file, "JSON {numerator, denominator} for 'rational'");
  series->add_option("--nmax", s_nmax, "truncation degree");
  series->add_option("--format", s_format, "csv or tsv")->check(CLI::IsMember({"csv", "tsv"}));

  // diff -----------------------------------------------------------------------
  std::string d_file, d_column;
  unsigned d_order = 1;
  auto* diff = app.add_subcommand("diff", "finite differences of a sequence file");
  diff->add_option("csv", d_file, "sequence CSV (n,value)")->required();
  diff->add_option("--order", d_order, "difference order")->check(CLI::PositiveNumber);
  diff->add_option("--column", d_column, "value column name for multi-column files");

  // analyze --------------------------------------------------------------------
  std::string an_file, an_column;
  unsigned an_kmax = 4, an_degmax = 4;
  auto* analyze = app.add_subcommand("analyze", "monotonicity and composite structure");
  analyze->add_option("csv", an_file, "sequence CSV (n,value)")->required();
  analyze->add_option("--kmax", an_kmax, "largest modulus to try");
  analyze->add_option("--degmax", an_degmax, "largest polynomial degree to try");
  analyze->add_option("--column", an_column, "value column name");

  // search ---------------------------------------------------------------------
  std::size_t se_states = 3, se_letters = 2;
  std::string se_prefix_from, se_save;
  unsigned se_prefix_len = 10;
  bool se_canonical = false, se_identity = false;
  std::uint64_t se_budget = 100'000'000;
  auto* search = app.add_subcommand("search", "scan automaton space for a growth prefix");
  search->add_option("--states", se_states, "state count")->required();
  search->add_option("--letters", se_letters, "alphabet size")->required();
  search->add_option("--prefix-from", se_prefix_from,
                     "CSV file, or builtin series a5|a6|a6-semigroup")
      ->required();
  search->add_option("--prefix-len", se_prefix_len, "levels to match");
  search->add_flag("--canonical", se_canonical, "dedup by state relabeling");
  search->add_flag("--require-identity", se_identity, "keep only machines with an identity state");
  search->add_option("--budget", se_budget, "table scan budget");
  search->add_option("--save", se_save, "write hits into this directory");

  // relations --------------------------------------------------------------------
  std::string r_source, r_file;
  long r_pbound = 8;
  auto* relations = app.add_subcommand("relations", "check a relation file against an automaton");
  relations->add_option("automaton", r_source, "builtin name or file path")->required();
  relations->add_option("relations", r_file, "relations JSON file")->required();
  relations->add_option("--pbound", r_pbound, "parameter bound");

  // normal-forms -------------------------------------------------------------------
  std::string n_name;
  unsigned n_nmax = 12;
  auto* nforms = app.add_subcommand("normal-forms", "normal-form counts against word growth");
  nforms->add_option("name", n_name, "grammar id: a1, a4, b<m>, a5")->required();
  nforms->add_option("--nmax", n_nmax, "largest word length");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  if (growth->parsed()) {
    const automaton a = resolve_automaton(g_source);
    enumerate_options opts;
    opts.element_cap = g_cap;
    opts.monoid_mode = g_monoid;
    const auto e = enumerate_growth(a, g_nmax, opts);
    if (g_oracle) {
      const unsigned upto = std::min(g_nmax, 6u);
      const auto oracle = growth_by_minimization(a, upto);
      for (unsigned n = 1; n <= upto; ++n)
        if (oracle[n - 1] != e.tables.spherical[n]) {
          std::cerr << "oracle mismatch at n=" << n << ": minimization " << oracle[n - 1]
                    << ", enumeration " << e.tables.spherical[n] << "\n";
          return 1;
        }
      std::cerr << "# oracle agreement for n <= " << upto << "\n";
    }
    if (g_format == "csv") {
      std::cout << growth_csv(e.tables);
    } else if (g_format == "tsv") {
      int_sequence s;
      s.start = 1;
      for (unsigned n = 1; n <= e.tables.levels(); ++n) s.values.push_back(e.tables.spherical[n]);
      std::cout << sequence_tsv(s);
    } else {
      nlohmann::ordered_json j;
      j["name"] = a.name;
      j["nmax"] = e.tables.levels();
      j["truncated"] = e.tables.truncated;
      auto rows = nlohmann::ordered_json::array();
      for (unsigned n = 1; n <= e.tables.levels(); ++n)
        rows.push_back({{"n", n},
                        {"delta", e.tables.delta[n]},
                        {"spherical", e.tables.spherical[n]},
                        {"cumulative", e.tables.cumulative[n]}});
      j["rows"] = std::move(rows);
      std::cout << j.dump(2) << "\n";
    }
    if (e.tables.truncated) {
      std::cerr << "truncated at level " << e.tables.truncated_at << " by the element cap\n";
      return 3;
    }
    if (!g_registry_path.empty()) {
      auto arr = nlohmann::ordered_json::array();
      for (std::uint32_t id = 0; id < e.registry.size(); ++id) {
        nlohmann::ordered_json j;
        j["id"] = id;
        j["min_length"] = e.registry.min_length[id];
        j["sigma"] = std::vector<unsigned>(e.registry.sigma_row(id).begin(),
                                           e.registry.sigma_row(id).end());
        j["sections"] = std::vector<std::uint32_t>(e.registry.section_row(id).begin(),
                                                   e.registry.section_row(id).end());
        arr.push_back(std::move(j));
      }
      write_text_file(g_registry_path, arr.dump(2) + "\n");
    }
    return 0;
  }

  if (verify->parsed()) {
    verify_options opts;
    opts.pbound = v_pbound;
    opts.corpus_dir = v_corpus;
    const verification_report rep = v_name == "all" ? verify_all(opts) : verify_named(v_name, opts);
    print_report(rep, v_format);
    return rep.all_pass() ? 0 : 1;
  }

  if (series->parsed()) {
    power_series s;
    if (s_kind == "a5") {
      s = nested_intermediate_series(s_nmax);
    } else if (s_kind == "a6") {
      const auto spec = a6_automaton_series();
      s = expand_rational(spec.numerator, spec.denominator, s_nmax);
    } else if (s_kind == "a6-semigroup") {
      const auto spec = a6_semigroup_series();
      s = expand_rational(spec.numerator, spec.denominator, s_nmax);
    } else if (s_kind == "rational") {
      if (s_file.empty()) throw error("series rational: missing file argument");
      const auto j = nlohmann::json::parse(read_text_file(s_file));
      std::vector<bigint> num, den;
      for (const auto& v : j.at("numerator")) num.emplace_back(v.get<long>());
      for (const auto& v : j.at("denominator")) den.emplace_back(v.get<long>());
      s = expand_rational(num, den, s_nmax);
    } else {
      throw error("unknown series kind: " + s_kind);
    }
    int_sequence coeffs;
    coeffs.start = 0;
    for (const auto& c : s.c) {
      if (boost::multiprecision::denominator(c) != 1)
        throw error("series has non-integer coefficients; emit aborted");
      coeffs.values.push_back(bigint(boost::multiprecision::numerator(c)));
    }
    std::cout << (s_format == "csv" ? sequence_csv(coeffs, "coefficient") : sequence_tsv(coeffs));
    return 0;
  }

  if (diff->parsed()) {
    const int_sequence s = sequence_from_csv(read_text_file(d_file), d_column);
    std::cout << sequence_csv(finite_difference(s, d_order), "value");
    return 0;
  }

  if (analyze->parsed()) {
    const int_sequence s = sequence_from_csv(read_text_file(an_file), an_column);
    nlohmann::ordered_json j;
    const auto descent = first_descent(s);
    j["first_descent"] = descent ? nlohmann::ordered_json(*descent) : nlohmann::ordered_json(nullptr);
    j["monotone"] = !descent.has_value();
    const auto verdict = detect_composite(s, an_kmax, an_degmax);
    j["composite"] = verdict.composite;
    if (verdict.composite) {
      j["k"] = verdict.k;
      auto parts = nlohmann::ordered_json::array();
      for (const auto& p : verdict.parts) {
        nlohmann::ordered_json jp;
        jp["residue"] = p.residue;
        if (std::holds_alternative<polynomial_fit>(p.form)) {
          const auto& pf = std::get<polynomial_fit>(p.form);
          jp["kind"] = "polynomial";
          auto cs = nlohmann::ordered_json::array();
          for (const auto& c : pf.coeffs) cs.push_back(rational_str(c));
          jp["coefficients"] = std::move(cs);
          jp["valid_from"] = pf.valid_from;
        } else {
          const auto& ef = std::get<exponential_fit>(p.form);
          jp["kind"] = "exponential";
          jp["scale0"] = rational_str(ef.scale0);
          jp["ratio"] = rational_str(ef.ratio);
          jp["offset"] = rational_str(ef.offset);
          jp["valid_from"] = ef.valid_from;
        }
        parts.push_back(std::move(jp));
      }
      j["parts"] = std::move(parts);
      j["witness"] = {verdict.witness->first, verdict.witness->second};
    } else {
      j["note"] = verdict.note;
    }
    std::cout << j.dump(2) << "\n";
    return 0;
  }

  if (search->parsed()) {
    search_query q;
    q.states = se_states;
    q.letters = se_letters;
    q.canonical = se_canonical;
    q.require_identity_state = se_identity;
    q.table_budget = se_budget;
    if (se_prefix_from == "a5" || se_prefix_from == "a6" || se_prefix_from == "a6-semigroup") {
      power_series s;
      if (se_prefix_from == "a5") {
        s = nested_intermediate_series(se_prefix_len);
      } else {
        const auto spec =
            se_prefix_from == "a6" ? a6_automaton_series() : a6_semigroup_series();
        s = expand_rational(spec.numerator, spec.denominator, se_prefix_len);
      }
      for (unsigned n = 1; n <= se_prefix_len; ++n)
        q.prefix.push_back(
            boost::multiprecision::numerator(s.c[n]).convert_to<std::uint64_t>());
    } else {
      const int_sequence s = sequence_from_csv(read_text_file(se_prefix_from));
      for (long n = std::max(1L, s.start); n < s.end() && q.prefix.size() < se_prefix_len; ++n)
        q.prefix.push_back(s.at(n).convert_to<std::uint64_t>());
    }
    const auto res = search_automata(q);
    for (std::size_t i = 0; i < res.hits.size(); ++i) {
      std::cout << serialize(res.hits[i]);
      if (i + 1 < res.hits.size()) std::cout << "\n";
      if (!se_save.empty())
        save_automaton_file(res.hits[i], se_save + "/" + res.hits[i].name + ".mealy");
    }
    std::cerr << "# scanned " << res.tables_scanned << " tables, " << res.hits.size() << " hits\n";
    if (res.budget_exceeded) {
      std::cerr << "budget exceeded; results are partial\n";
      return 3;
    }
    return 0;
  }

  if (relations->parsed()) {
    const automaton a = resolve_automaton(r_source);
    const relation_set rels = relation_set_from_json(nlohmann::json::parse(read_text_file(r_file)));
    const auto report = check_relations(a, rels, r_pbound);
    nlohmann::ordered_json j;
    j["automaton"] = a.name;
    j["relations"] = rels.name;
    j["instances_checked"] = report.instances_checked;
    j["all_hold"] = report.failures.empty();
    auto fails = nlohmann::ordered_json::array();
    for (const auto& f : report.failures) {
      nlohmann::ordered_json jf;
      jf["label"] = f.label;
      jf["lhs"] = f.lhs;
      jf["rhs"] = f.rhs;
      jf["params"] = f.env;
      fails.push_back(std::move(jf));
    }
    j["failures"] = std::move(fails);
    std::cout << j.dump(2) << "\n";
    return report.failures.empty() ? 0 : 1;
  }

  if (nforms->parsed()) {
    const normal_form_grammar grammar = make_normal_form_grammar(n_name, n_nmax);
    automaton a;
    if (n_name == "a5") {
      const auto out = run_a5_search();
      if (out.all.hits.empty()) throw error("no nested-growth machine found");
      a = out.all.hits.front();
    } else {
      a = corpus_lookup(n_name).aut;
    }
    enumerate_options opts;
    opts.monoid_mode = grammar.monoid;
    const auto e = enumerate_growth(a, n_nmax, opts);
    const int_sequence counts = enumerate_normal_forms(grammar, n_nmax);
    std::cout << "n,normal_forms,delta,match\n";
    bool all = true;
    for (unsigned n = grammar.monoid ? 0 : 1; n <= n_nmax; ++n) {
      const bool same = counts.at(n) == bigint(e.tables.delta[n]);
      all = all && same;
      std::cout << n << "," << counts.at(n).str() << "," << e.tables.delta[n] << ","
                << (same ? "yes" : "NO") << "\n";
    }
    return all ? 0 : 1;
  }

  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const mealy::resource_limit_error& e) {
    std::cerr << "resource cap: " << e.what() << "\n";
    return 3;
  } catch (const mealy::parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const mealy::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
