#include <CLI11.hpp>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "stratkit/corpus.hpp"
#include "stratkit/engine.hpp"
#include "stratkit/json_io.hpp"
#include "stratkit/map_analysis.hpp"
#include "stratkit/mapfile.hpp"
#include "stratkit/matrix.hpp"
#include "stratkit/thom.hpp"

namespace {

using namespace stratkit;

struct Options {
  std::string input;
  bool json = false;
  std::string order = "grevlex";
  uint64_t budget = 10'000'000;
  uint64_t seed = 0;  // recorded for reproducibility; all checks are exact
  bool rectangular = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open input file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

PolyMap load_map(const Options& opt) {
  if (opt.input.empty())
    throw DomainError("no input map; pass -i FILE");
  MapFileOptions mopts;
  mopts.order = opt.order == "lex" ? MonomialOrder::lex()
                                   : MonomialOrder::grevlex();
  mopts.allow_rectangular = opt.rectangular;
  return parse_map(read_file(opt.input), mopts);
}

ordered_json wrap_report(const Options& opt, const std::string& command,
                         const std::string& input_text, ordered_json result) {
  ordered_json j;
  j["command"] = command;
  j["input"] = opt.input.empty() ? "corpus" : opt.input;
  j["digest"] = text_digest(input_text);
  ordered_json limits;
  limits["order"] = opt.order;
  limits["budget"] = opt.budget;
  limits["seed"] = opt.seed;
  j["limits"] = std::move(limits);
  j["result"] = std::move(result);
  ordered_json timings;
  timings["reduction_steps"] = total_reduction_steps();
  j["timings"] = std::move(timings);
  return j;
}

void emit(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

struct VerifyOutcome {
  ordered_json result;
  bool violations = false;
};

VerifyOutcome run_verify(const PolyMap& F) {
  VerifyOutcome out;
  Stratification s = stratify_union(F);
  JelonekReport jel = check_jelonek(F);
  ordered_json r;
  r["closedness_ok"] = s.closedness.ok();
  r["frontier_ok"] = s.frontier.ok;
  r["jelonek_ok"] = jel.dichotomy_ok;
  r["transversality_ok"] = s.transversality.ok;
  ordered_json violations = ordered_json::array();
  for (const auto& v : s.frontier.violations) violations.push_back(v);
  for (const auto& w : s.closedness.witnesses) violations.push_back(w);
  r["violations"] = std::move(violations);
  out.violations = !(s.closedness.ok() && s.frontier.ok && jel.dichotomy_ok &&
                     s.transversality.ok);
  out.result = std::move(r);
  return out;
}

void print_human_map_header(const PolyMap& F) {
  std::cout << "map";
  if (!F.name.empty()) std::cout << " " << F.name;
  std::cout << ": " << F.str() << "\n";
}

int dispatch(const std::string& command, const Options& opt) {
  bool violations = false;
  std::string input_text =
      opt.input.empty() ? std::string() : read_file(opt.input);
  ordered_json result;
  auto start = std::chrono::steady_clock::now();

  if (command == "corpus") {
    ordered_json all = ordered_json::array();
    std::vector<Fixture> fixtures = corpus_fixtures();
    std::sort(fixtures.begin(), fixtures.end(),
              [](const Fixture& a, const Fixture& b) { return a.name < b.name; });
    for (const auto& fixture : fixtures) {
      PolyMap F = parse_map(fixture.text);
      VerifyOutcome vo = run_verify(F);
      ConjectureReport conj = check_conjecture(F);
      ordered_json one;
      one["fixture"] = fixture.name;
      one["digest"] = text_digest(fixture.text);
      one["checks"] = vo.result;
      one["dominant"] = conj.dominant;
      one["pure_dimensional"] = conj.purity.pure;
      violations = violations || vo.violations;
      all.push_back(std::move(one));
      if (!opt.json)
        std::cout << "fixture " << fixture.name << ": "
                  << (vo.violations ? "VIOLATIONS" : "ok") << "\n";
    }
    result = std::move(all);
  } else {
    PolyMap F = load_map(opt);
    if (!opt.json) print_human_map_header(F);

    if (command == "jacobian") {
      PolyMatrix J = jacobian(F);
      ordered_json rows = ordered_json::array();
      for (int i = 0; i < J.rows(); ++i) {
        ordered_json row = ordered_json::array();
        for (int j = 0; j < J.cols(); ++j) row.push_back(J.at(i, j).str());
        rows.push_back(std::move(row));
      }
      result["jacobian"] = std::move(rows);
      if (F.is_square()) result["determinant"] = J.determinant().str();
      if (!opt.json) {
        for (int i = 0; i < J.rows(); ++i) {
          for (int j = 0; j < J.cols(); ++j)
            std::cout << (j ? " | " : "  [") << J.at(i, j).str();
          std::cout << "]\n";
        }
        if (F.is_square())
          std::cout << "det = " << J.determinant().str() << "\n";
      }
    } else if (command == "singular-locus") {
      Ideal sing = singular_locus(F);
      result["sing"] = to_json(sing);
      result["empty"] = sing.is_unit_ideal();
      if (!opt.json)
        std::cout << "Sing F = V(" << (sing.generators().empty() ? "0" :
                     sing.generators()[0].str()) << ")\n";
    } else if (command == "critical-values") {
      CriticalValues cv = critical_values(F);
      result["k0_closure"] = to_json(cv.closure);
      result["k0_pieces"] = to_json(cv.exact);
      result["exact_certified"] = cv.exact_certified;
      if (!opt.json)
        std::cout << "K0 closure generated by " << cv.closure.generators().size()
                  << " polynomial(s); " << cv.exact.pieces.size()
                  << " exact piece(s)\n";
    } else if (command == "asymptotic-set") {
      Ideal sf = asymptotic_set(F);
      result["sf"] = to_json(sf);
      result["dim"] = sf.is_unit_ideal() ? -1 : dimension(sf);
      result["proper"] = sf.is_unit_ideal();
      if (!opt.json) {
        if (sf.is_unit_ideal())
          std::cout << "S_F is empty (the map is proper)\n";
        else {
          std::cout << "S_F = V(";
          for (size_t i = 0; i < sf.generators().size(); ++i)
            std::cout << (i ? ", " : "") << sf.generators()[i].str();
          std::cout << "), dim " << dimension(sf) << "\n";
        }
      }
    } else if (command == "dominant") {
      bool dom = is_dominant(F);
      result["dominant"] = dom;
      if (!opt.json) std::cout << "dominant: " << (dom ? "true" : "false") << "\n";
    } else if (command == "proper") {
      bool prop = is_proper(F);
      result["proper"] = prop;
      if (!opt.json) std::cout << "proper: " << (prop ? "true" : "false") << "\n";
    } else if (command == "leading-forms") {
      LeadingFormData d = leading_form_data(F);
      result = to_json(d);
      if (!opt.json) {
        std::cout << "leading forms:";
        for (const auto& f : d.forms) std::cout << " " << f.str() << ";";
        std::cout << "\ngeneric rank " << d.generic_rank << " (condition "
                  << (d.rank_condition_ok ? "holds" : "fails")
                  << "), dim V = " << d.v_dim << "\n";
      }
    } else if (command == "thom-partition") {
      auto table = thom_partition(F);
      ordered_json arr = ordered_json::array();
      for (const auto& st : table) {
        ordered_json one;
        one["label"] = st.label();
        one["source_dim"] = st.source.dim;
        one["restricted_rank"] = st.k;
        one["image_closure"] = to_json(st.image_closure);
        one["image_pieces"] = to_json(st.image);
        one["certified"] = st.image_certified;
        arr.push_back(std::move(one));
        if (!opt.json) {
          std::cout << st.label() << ": image closure V(";
          for (size_t i = 0; i < st.image_closure.generators().size(); ++i)
            std::cout << (i ? ", " : "")
                      << st.image_closure.generators()[i].str();
          std::cout << "), k = " << st.k << "\n";
        }
      }
      result["strata"] = std::move(arr);
    } else if (command == "stratify") {
      Stratification s = stratify_union(F);
      result = to_json(s);
      if (!opt.json) {
        std::cout << s.strata.size() << " strata; filtration depth "
                  << s.filtration.size() << "; frontier "
                  << (s.frontier.ok ? "ok" : "VIOLATED") << "\n";
        for (const auto& st : s.strata)
          std::cout << "  " << st.id << " dim " << st.dim << " ["
                    << origin_name(st.origin)
                    << (st.origin == StratumOrigin::sf ? ", facons-substitute"
                                                       : "")
                    << "]\n";
      }
    } else if (command == "verify") {
      VerifyOutcome vo = run_verify(F);
      result = std::move(vo.result);
      violations = vo.violations;
      if (!opt.json)
        std::cout << "verify: " << (violations ? "VIOLATIONS" : "all checks pass")
                  << "\n";
    } else if (command == "conjecture") {
      ConjectureReport rep = check_conjecture(F);
      result["dominant"] = rep.dominant;
      result["pure"] = rep.purity.pure;
      result["dims"] = rep.purity.piece_dims;
      result["note"] = rep.purity.note;
      if (!opt.json)
        std::cout << "dominant: " << (rep.dominant ? "true" : "false")
                  << ", pure dimensional: "
                  << (rep.purity.pure ? "true" : "false") << "\n";
    } else {
      throw DomainError("unknown command: " + command);
    }
  }

  if (opt.json) {
    emit(wrap_report(opt, command, input_text, std::move(result)));
  } else {
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    std::cout << "(" << total_reduction_steps() << " reduction steps, " << ms
              << " ms)\n";
  }
  return violations ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"stratkit: exact analysis of polynomial mappings"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  if (const char* env = std::getenv("STRATKIT_BUDGET"))
    opt.budget = std::strtoull(env, nullptr, 10);

  app.add_option("-i,--input", opt.input, "map file");
  app.add_flag("--json", opt.json, "machine-readable output");
  app.add_option("--order", opt.order, "monomial order: lex|grevlex")
      ->check(CLI::IsMember({"lex", "grevlex"}));
  app.add_option("--budget", opt.budget, "reduction-step cap");
  app.add_option("--seed", opt.seed, "sampling seed (recorded in reports)");
  app.add_flag("--rectangular", opt.rectangular,
               "allow component count != variable count (algebra layer only)");

  for (const char* name :
       {"jacobian", "singular-locus", "critical-values", "asymptotic-set",
        "dominant", "proper", "leading-forms", "thom-partition", "stratify",
        "verify", "conjecture", "corpus"})
    app.add_subcommand(name);

  CLI11_PARSE(app, argc, argv);
  set_reduction_budget(opt.budget);
  reset_total_reduction_steps();

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    return dispatch(command, opt);
  } catch (const stratkit::BudgetExceededError& e) {
    if (opt.json) {
      stratkit::ordered_json j;
      j["command"] = command;
      j["error"] = "budget-exceeded";
      j["detail"] = e.what();
      j["partial"] = true;
      emit(j);
    } else {
      std::cerr << "error: " << e.what() << " (partial results discarded)\n";
    }
    return 2;
  } catch (const stratkit::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
