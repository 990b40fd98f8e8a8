#include "cli.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "qmarkoff/cyclotomic.hpp"
#include "qmarkoff/identities.hpp"
#include "qmarkoff/markoff.hpp"
#include "qmarkoff/parallel.hpp"
#include "qmarkoff/qmatrix.hpp"
#include "qmarkoff/search.hpp"
#include "qmarkoff/serialize.hpp"
#include "qmarkoff/word.hpp"

namespace qmarkoff::cli {

namespace {

struct CliError {
  int code;
  std::string message;
};

// Options shared by every subcommand.
struct Common {
  std::string format = "json";
  int threads = 0;
  std::uint64_t seed = 1;
  std::size_t safety_bound = kDefaultSafetyBound;
};

void add_common(CLI::App* sub, Common& c, const std::vector<std::string>& formats) {
  sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember(formats));
  sub->add_option("--threads", c.threads, "Worker threads (default: QMARKOFF_THREADS or all cores)")
      ->check(CLI::NonNegativeNumber);
  sub->add_option("--seed", c.seed, "Random seed");
  sub->add_option("--safety-bound", c.safety_bound, "Largest word length a search may enumerate");
}

Word parse_word(const std::string& s, Alphabet alphabet = Alphabet::binary) {
  const std::string allowed = alphabet == Alphabet::binary ? "ab" : "abcd";
  const auto bad = s.find_first_not_of(allowed);
  if (bad != std::string::npos) {
    throw CliError{invalid_word, "invalid letter '" + std::string(1, s[bad]) + "' in word '" + s + "' (allowed: " +
                                     allowed + ")"};
  }
  return Word(s, alphabet);
}

void require_k(int k, int lo, int hi) {
  if (k < lo || k > hi) {
    throw CliError{k_out_of_range,
                   "k = " + std::to_string(k) + " out of range (" + std::to_string(lo) + ".." + std::to_string(hi) + ")"};
  }
}

std::string fmt15(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return buf;
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

// compute

int cmd_compute(std::ostream& out, const Common& c, const std::string& map, const std::string& word_text) {
  const MapKind kind = parse_map_kind(map);
  const Word w = parse_word(word_text);
  const QMatrix m = kind == MapKind::M ? M_q(w) : mu_q(w);
  const LaurentPoly* entries[4] = {&m.m11, &m.m12, &m.m21, &m.m22};
  const char* names[4] = {"m11", "m12", "m21", "m22"};
  if (c.format == "json") {
    Json at1 = Json::object();
    for (int i = 0; i < 4; ++i) at1[names[i]] = entries[i]->eval_at_one().get_str();
    emit(out, Json{{"map", to_string(kind)},
                   {"word", w.str()},
                   {"matrix", to_json(m)},
                   {"m12", to_json(m.m12)},
                   {"m12_human", m.m12.to_string()},
                   {"at_q1", std::move(at1)}});
  } else if (c.format == "csv") {
    out << "entry,degree,coefficient\n";
    for (int i = 0; i < 4; ++i) {
      const auto& p = *entries[i];
      for (std::size_t d = 0; d < p.coeffs().size(); ++d) {
        out << names[i] << ',' << p.min_degree() + static_cast<int>(d) << ',' << p.coeffs()[d].get_str() << '\n';
      }
    }
  } else {
    const std::string label = (kind == MapKind::M ? "M_q(" : "mu_q(") + w.str() + ")";
    for (int i = 0; i < 4; ++i) out << label << '_' << names[i] + 1 << " = " << entries[i]->to_string() << '\n';
    out << "at q=1: ((" << m.m11.eval_at_one().get_str() << ", " << m.m12.eval_at_one().get_str() << "), ("
        << m.m21.eval_at_one().get_str() << ", " << m.m22.eval_at_one().get_str() << "))\n";
  }
  return ok;
}

// christoffel

int cmd_christoffel(std::ostream& out, const Common& c, std::size_t max_len) {
  const auto words = christoffel_words(max_len);
  auto fraction = [](const Word& w) {
    const Fraction f = stern_brocot_fraction(w);
    return std::to_string(f.numerator) + "/" + std::to_string(f.denominator);
  };
  if (c.format == "json") {
    Json list = Json::array();
    for (const auto& w : words) {
      list.push_back(Json{{"word", w.str()},
                          {"count_a", w.count_a()},
                          {"count_b", w.count_b()},
                          {"fraction", fraction(w)},
                          {"mu1_12", mu_q12(w).eval_at_one().get_str()}});
    }
    emit(out, Json{{"max_len", max_len}, {"count", words.size()}, {"words", std::move(list)}});
  } else if (c.format == "csv") {
    out << "word,count_a,count_b,fraction,mu1_12\n";
    for (const auto& w : words) {
      out << w.str() << ',' << w.count_a() << ',' << w.count_b() << ',' << fraction(w) << ','
          << mu_q12(w).eval_at_one().get_str() << '\n';
    }
  } else {
    for (const auto& w : words) out << w.str() << "  " << fraction(w) << '\n';
  }
  return ok;
}

// eval

int cmd_eval(std::ostream& out, const Common& c, const std::string& map, const std::string& word_text, int k) {
  const MapKind kind = parse_map_kind(map);
  const Word w = parse_word(word_text);
  require_k(k, 1, 6);
  const LaurentPoly p = kind == MapKind::M ? M_q12(w) : mu_q12(w);
  const CycInt z = eval_cyclotomic(p, k);
  std::optional<ConeIndex> cone;
  std::optional<LetterCounts> counts;
  std::optional<bool> closed_form;
  if (k == 6 && kind == MapKind::mu) {
    cone = cone_of(z);
    counts = recover_counts(z);
    closed_form = entry12_zeta6(w.size(), w.count_b()) == z;
  }
  if (c.format == "json") {
    Json j{{"map", to_string(kind)}, {"word", w.str()}, {"k", k}, {"value", to_json(z)}, {"human", z.to_string()}};
    j["cone_residue"] = cone ? Json(cone->residue) : Json(nullptr);
    j["counts"] = counts ? Json{{"count_a", counts->count_a}, {"count_b", counts->count_b}} : Json(nullptr);
    j["closed_form_agrees"] = closed_form ? Json(*closed_form) : Json(nullptr);
    emit(out, j);
  } else if (c.format == "csv") {
    out << "word,k";
    for (std::size_t i = 0; i < z.coords().size(); ++i) out << ",c" << i;
    out << ",cone_residue,count_a,count_b\n" << w.str() << ',' << k;
    for (const auto& x : z.coords()) out << ',' << x.get_str();
    out << ',' << (cone ? std::to_string(cone->residue) : "") << ',' << (counts ? std::to_string(counts->count_a) : "")
        << ',' << (counts ? std::to_string(counts->count_b) : "") << '\n';
  } else {
    out << (kind == MapKind::M ? "M" : "mu") << "_zeta" << k << "(" << w.str() << ")_12 = " << z.to_string() << '\n';
    if (cone) out << "cone residue: " << cone->residue << '\n';
    if (counts) out << "counts: |w|_a = " << counts->count_a << ", |w|_b = " << counts->count_b << '\n';
  }
  return ok;
}

// collide

int cmd_collide(std::ostream& out, const Common& c, const std::string& map, std::size_t max_len) {
  const MapKind kind = parse_map_kind(map);
  const CollisionReport r = collide(kind, max_len, SearchOptions{c.threads, c.safety_bound});
  if (c.format == "json") {
    emit(out, to_json(r));
  } else if (c.format == "csv") {
    out << collision_report_csv(r);
  } else {
    const auto& s = r.summary;
    out << "map " << to_string(kind) << ", max_len " << max_len << ": " << s.words_examined << " words, " << s.groups
        << " groups, " << s.pairs << " pairs\n"
        << "Identity1 " << s.identity1 << ", Identity2 " << s.identity2 << ", Both " << s.both << ", Unexplained "
        << s.unexplained << " (" << s.unexplained_after_chaining << " not linked through explained pairs)\n";
    for (const auto& p : r.pairs) {
      if (p.kind != PairClass::unexplained) continue;
      out << "Unexplained: " << p.x.str() << " ~ " << p.y.str() << (p.chain_explained ? " (chain-linked)" : "")
          << '\n';
    }
  }
  return r.has_unexplained() ? unexplained : ok;
}

// verify-identities

Json case_json(const IdentityCase& ic) {
  return Json{{"family", to_string(ic.family)},
              {"seed", std::to_string(ic.seed)},
              {"w", ic.w.str()},
              {"v", ic.v.str()},
              {"k", ic.k},
              {"m", ic.m},
              {"n", ic.n},
              {"lhs_word", ic.check.lhs_word.str()},
              {"rhs_word", ic.check.rhs_word.str()},
              {"lhs", to_json(ic.check.lhs)},
              {"rhs", to_json(ic.check.rhs)},
              {"equal", ic.check.equal()}};
}

struct VerifyArgs {
  std::string family = "all";
  std::size_t cases = 1000;
  std::optional<std::string> w, v;
  std::size_t k = 0, m = 0, n = 0;
  std::size_t delta_max_w = 3;
  std::size_t delta_max_pairs = 3;
};

int cmd_verify(std::ostream& out, const Common& c, const VerifyArgs& a) {
  std::vector<IdentityCase> cases;
  Json families = Json::array();
  bool all_equal = true;

  auto run_family = [&](IdentityFamily f) {
    std::vector<IdentityCase> got;
    if (a.w) {
      // one explicit case
      IdentityCase ic{f, 0, parse_word(*a.w), Word("", Alphabet::extended), a.k, a.m, a.n, {}};
      if (a.v) ic.v = parse_word(*a.v, Alphabet::extended);
      switch (f) {
        case IdentityFamily::identity1_M: ic.check = verify_identity1_M(ic.w, a.k, a.m, a.n); break;
        case IdentityFamily::identity1_mu: ic.check = verify_identity1_mu(ic.w); break;
        case IdentityFamily::identity2_M: ic.check = verify_identity2_M(ic.w, ic.v, a.k, a.m, a.n); break;
        case IdentityFamily::identity2_mu: ic.check = verify_identity2_mu(ic.w, ic.v); break;
      }
      got.push_back(std::move(ic));
    } else {
      got = run_identity_suite(f, a.cases, c.seed, {}, c.threads);
    }
    const bool eq = std::all_of(got.begin(), got.end(), [](const IdentityCase& x) { return x.check.equal(); });
    all_equal = all_equal && eq;
    families.push_back(Json{{"family", to_string(f)}, {"cases", got.size()}, {"all_equal", eq}});
    for (auto& x : got) cases.push_back(std::move(x));
  };

  // Delta_w(v) over every binary w with |w| <= delta_max_w and every
  // v in ({a,b}{c,d})^j, j <= delta_max_pairs.
  Json delta_cases = Json::array();
  auto run_delta = [&] {
    std::size_t n = 0;
    bool zero = true;
    for (std::size_t lw = 0; lw <= a.delta_max_w; ++lw) {
      for (const auto& w : all_words(lw)) {
        for (std::size_t j = 0; j <= a.delta_max_pairs; ++j) {
          for (const auto& v : paired_words(j)) {
            const LaurentPoly d = delta(w, v);
            ++n;
            zero = zero && d.is_zero();
            delta_cases.push_back(Json{{"w", w.str()}, {"v", v.str()}, {"delta", to_json(d)}, {"zero", d.is_zero()}});
          }
        }
      }
    }
    all_equal = all_equal && zero;
    families.push_back(Json{{"family", "delta"}, {"cases", n}, {"all_equal", zero}});
  };

  if (a.family == "all") {
    for (auto f : {IdentityFamily::identity1_M, IdentityFamily::identity1_mu, IdentityFamily::identity2_M,
                   IdentityFamily::identity2_mu}) {
      run_family(f);
    }
    if (!a.w) run_delta();
  } else if (a.family == "delta") {
    run_delta();
  } else {
    run_family(parse_identity_family(a.family));
  }

  if (c.format == "json") {
    Json list = Json::array();
    for (const auto& ic : cases) list.push_back(case_json(ic));
    emit(out, Json{{"seed", std::to_string(c.seed)},
                   {"all_equal", all_equal},
                   {"families", std::move(families)},
                   {"cases", std::move(list)},
                   {"delta_cases", std::move(delta_cases)}});
  } else if (c.format == "csv") {
    out << "family,seed,w,v,k,m,n,lhs_word,rhs_word,equal\n";
    for (const auto& ic : cases) {
      out << to_string(ic.family) << ',' << ic.seed << ',' << ic.w.str() << ',' << ic.v.str() << ',' << ic.k << ','
          << ic.m << ',' << ic.n << ',' << ic.check.lhs_word.str() << ',' << ic.check.rhs_word.str() << ','
          << (ic.check.equal() ? "true" : "false") << '\n';
    }
    for (const auto& d : delta_cases) {
      out << "delta,," << d["w"].get<std::string>() << ',' << d["v"].get<std::string>() << ",,,,,,"
          << (d["zero"].get<bool>() ? "true" : "false") << '\n';
    }
  } else {
    for (const auto& f : families) {
      out << f["family"].get<std::string>() << ": " << f["cases"].get<std::size_t>() << " cases, "
          << (f["all_equal"].get<bool>() ? "all equal" : "MISMATCH") << '\n';
    }
    for (const auto& ic : cases) {
      if (!ic.check.equal()) out << "  mismatch: " << ic.check.lhs_word.str() << " vs " << ic.check.rhs_word.str() << '\n';
    }
  }
  return all_equal ? ok : failure;
}

// closure

int cmd_closure(std::ostream& out, const Common& c, int k, bool scaled, std::size_t cap) {
  require_k(k, 1, 6);
  const ClosureResult r = monoid_closure(k, scaled, cap);
  const char* status = r.finite() ? "finite" : "exceeded_cap";
  if (c.format == "json") {
    emit(out, Json{{"k", k}, {"scaled", scaled}, {"cap", cap}, {"status", status}, {"size", r.size}});
  } else if (c.format == "csv") {
    out << "k,scaled,cap,status,size\n" << k << ',' << (scaled ? "true" : "false") << ',' << cap << ',' << status << ','
        << r.size << '\n';
  } else {
    out << "k=" << k << (scaled ? " scaled" : "") << ": ";
    if (r.finite()) out << "finite, " << r.size << " elements\n";
    else out << "more than " << cap << " elements\n";
  }
  return ok;
}

// residues

int cmd_residues(std::ostream& out, const Common& c, int k, std::size_t max_len) {
  require_k(k, 2, 5);
  if (max_len > c.safety_bound) throw ResourceBoundError(max_len, c.safety_bound);
  const ResidueReport r = residue_relation_check(k, max_len, c.threads);
  if (c.format == "json") {
    Json classes = Json::array();
    for (const auto& [res, values] : r.classes) {
      Json vs = Json::array();
      for (const auto& v : values) vs.push_back(to_json(v));
      classes.push_back(Json{{"residue", res}, {"count", values.size()}, {"values", std::move(vs)}});
    }
    emit(out, Json{{"k", k},
                   {"max_len", max_len},
                   {"words_checked", r.words_checked},
                   {"distinct_values", r.distinct_values},
                   {"residue_determined", r.residue_determined},
                   {"violations", r.violations},
                   {"ok", r.ok()},
                   {"classes", std::move(classes)}});
  } else if (c.format == "csv") {
    out << "residue";
    for (int i = 0; i < cyclotomic_degree(k); ++i) out << ",c" << i;
    out << '\n';
    for (const auto& [res, values] : r.classes) {
      for (const auto& v : values) {
        out << res;
        for (const auto& x : v.coords()) out << ',' << x.get_str();
        out << '\n';
      }
    }
  } else {
    out << "k=" << k << ", words of length <= " << max_len << ": " << r.words_checked << " words, "
        << r.distinct_values << " distinct values, " << r.violations.size() << " violations\n";
    for (const auto& [res, values] : r.classes) out << "  residue " << res << ": " << values.size() << " values\n";
  }
  return ok;
}

// markoff

int cmd_markoff(std::ostream& out, const Common& c, std::optional<std::size_t> depth, std::optional<std::string> up_to) {
  std::vector<BigInt> numbers;
  if (up_to) {
    BigInt bound;
    if (bound.set_str(*up_to, 10) != 0) throw CliError{usage, "--up-to expects a decimal integer"};
    numbers = markoff_numbers_up_to(bound);
  } else {
    numbers = markoff_numbers(depth.value_or(4));
  }
  if (c.format == "json") {
    emit(out, Json{{"count", numbers.size()}, {"numbers", to_json(numbers)}});
  } else if (c.format == "csv") {
    out << "index,markoff\n";
    for (std::size_t i = 0; i < numbers.size(); ++i) out << i << ',' << numbers[i].get_str() << '\n';
  } else {
    for (const auto& n : numbers) out << n.get_str() << '\n';
  }
  return ok;
}

// figure2-data

int cmd_figure2(std::ostream& out, const Common& c, std::size_t max_len) {
  if (max_len > c.safety_bound) throw ResourceBoundError(max_len, c.safety_bound);
  const auto points = figure2_points(max_len, c.threads);
  if (c.format == "json") {
    Json list = Json::array();
    for (const auto& p : points) list.push_back(Json{{"residue", p.residue}, {"value", to_json(p.value)}});
    emit(out, Json{{"max_len", max_len}, {"count", points.size()}, {"points", std::move(list)}});
    return ok;
  }
  out << "residue,c0,c1,c2,c3,re_approx,im_approx\n";
  for (const auto& p : points) {
    out << p.residue;
    for (const auto& x : p.value.coords()) out << ',' << x.get_str();
    const auto z = p.value.approx();
    out << ',' << fmt15(z.real()) << ',' << fmt15(z.imag()) << '\n';
  }
  return ok;
}

// injectivity

int cmd_injectivity(std::ostream& out, const Common& c, std::size_t max_len) {
  const InjectivityVerdict v = christoffel_injectivity(max_len);
  if (c.format == "json") {
    Json j{{"max_len", max_len},
           {"words", v.words},
           {"injective", v.injective},
           {"zeta6_injective", v.zeta6_injective},
           {"counts_distinct", v.counts_distinct}};
    j["counterexample"] =
        v.counterexample ? Json::array({v.counterexample->first.str(), v.counterexample->second.str()}) : Json(nullptr);
    emit(out, j);
  } else {
    out << v.words << " Christoffel words of length <= " << max_len << ": "
        << (v.injective ? "mu_q(w)_12 pairwise distinct" : "collision found") << '\n';
    if (v.counterexample) out << v.counterexample->first.str() << " ~ " << v.counterexample->second.str() << '\n';
  }
  return v.injective ? ok : failure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"q-deformed Markoff matrices: compute, evaluate, search", "qmarkoff"};
  app.require_subcommand(1);

  const std::vector<std::string> all_formats{"json", "csv", "human"};
  const std::vector<std::string> maps{"M", "mu"};
  Common common;
  std::function<int()> action;

  std::string map = "mu";
  std::string word;
  int k = 6;
  std::size_t max_len = 0;

  auto* compute = app.add_subcommand("compute", "M_q or mu_q of a word");
  add_common(compute, common, all_formats);
  compute->add_option("--map", map)->check(CLI::IsMember(maps));
  compute->add_option("--word", word)->required();
  compute->callback([&] { action = [&] { return cmd_compute(out, common, map, word); }; });

  auto* christoffel = app.add_subcommand("christoffel", "Christoffel words up to a length");
  add_common(christoffel, common, all_formats);
  christoffel->add_option("--max-len", max_len)->required();
  christoffel->callback([&] { action = [&] { return cmd_christoffel(out, common, max_len); }; });

  auto* eval = app.add_subcommand("eval", "12-entry at a root of unity, with cone and counts at zeta_6");
  add_common(eval, common, all_formats);
  eval->add_option("--map", map)->check(CLI::IsMember(maps));
  eval->add_option("--word", word)->required();
  eval->add_option("--k", k);
  eval->callback([&] { action = [&] { return cmd_eval(out, common, map, word, k); }; });

  auto* coll = app.add_subcommand("collide", "collision census of 12-entries");
  add_common(coll, common, all_formats);
  coll->add_option("--map", map)->check(CLI::IsMember(maps));
  coll->add_option("--max-len", max_len)->required();
  coll->callback([&] { action = [&] { return cmd_collide(out, common, map, max_len); }; });

  VerifyArgs va;
  std::string w_opt, v_opt;
  auto* verify = app.add_subcommand("verify-identities", "random or explicit checks of the identity families");
  add_common(verify, common, all_formats);
  verify->add_option("--family", va.family)->check(CLI::IsMember({"all", "1M", "1mu", "2M", "2mu", "delta"}));
  verify->add_option("--cases", va.cases, "Random cases per family");
  auto* w_flag = verify->add_option("--w", w_opt, "Explicit w (skips the random suite)");
  auto* v_flag = verify->add_option("--v", v_opt, "Explicit v over {a,b,c,d}");
  verify->add_option("--k", va.k);
  verify->add_option("--m", va.m);
  verify->add_option("--n", va.n);
  verify->add_option("--delta-max-w", va.delta_max_w);
  verify->add_option("--delta-max-pairs", va.delta_max_pairs);
  verify->callback([&] {
    if (*w_flag) va.w = w_opt;
    if (*v_flag) va.v = v_opt;
    action = [&] { return cmd_verify(out, common, va); };
  });

  bool scaled = false;
  std::size_t cap = 10000;
  auto* closure = app.add_subcommand("closure", "size of the monoid generated by mu_zeta_k(a), mu_zeta_k(b)");
  add_common(closure, common, all_formats);
  closure->add_option("--k", k)->required();
  closure->add_flag("--scaled", scaled, "Use zeta^-1 mu(a), zeta^-2 mu(b)");
  closure->add_option("--cap", cap);
  closure->callback([&] { action = [&] { return cmd_closure(out, common, k, scaled, cap); }; });

  auto* residues = app.add_subcommand("residues", "mu_1(w)_12 mod k against mu_zeta_k(w)_12");
  add_common(residues, common, all_formats);
  residues->add_option("--k", k)->required();
  std::size_t residues_len = 10;
  residues->add_option("--max-len", residues_len);
  residues->callback([&] { action = [&] { return cmd_residues(out, common, k, residues_len); }; });

  std::size_t depth = 4;
  std::string up_to;
  auto* markoff = app.add_subcommand("markoff", "Markoff numbers from the triple tree");
  add_common(markoff, common, all_formats);
  auto* depth_opt = markoff->add_option("--depth", depth);
  auto* up_to_opt = markoff->add_option("--up-to", up_to);
  depth_opt->excludes(up_to_opt);
  markoff->callback([&] {
    action = [&] {
      return cmd_markoff(out, common, *depth_opt ? std::optional(depth) : std::nullopt,
                         *up_to_opt ? std::optional(up_to) : std::nullopt);
    };
  });

  auto* figure2 = app.add_subcommand("figure2-data", "values of mu_zeta_5(w)_12 by residue mod 5, as CSV");
  add_common(figure2, common, {"csv", "json"});
  std::size_t figure2_len = 10;
  figure2->add_option("--max-len", figure2_len);
  figure2->callback([&] {
    if (figure2->count("--format") == 0) common.format = "csv";
    action = [&] { return cmd_figure2(out, common, figure2_len); };
  });

  auto* inj = app.add_subcommand("injectivity", "w -> mu_q(w)_12 on Christoffel words");
  add_common(inj, common, {"json", "human"});
  std::size_t inj_len = 40;
  inj->add_option("--max-len", inj_len);
  inj->callback([&] { action = [&] { return cmd_injectivity(out, common, inj_len); }; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return usage;
  }

  try {
    return action();
  } catch (const CliError& e) {
    err << "error: " << e.message << '\n';
    return e.code;
  } catch (const ResourceBoundError& e) {
    err << "error: " << e.what() << '\n';
    return resource_bound;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return k_out_of_range;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return usage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return failure;
  }
}

}  // namespace qmarkoff::cli
