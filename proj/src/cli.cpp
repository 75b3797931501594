#include "omegat/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "omegat/cca.hpp"
#include "omegat/emptiness.hpp"
#include "omegat/error.hpp"
#include "omegat/exponent.hpp"
#include "omegat/expr.hpp"
#include "omegat/fuzz.hpp"
#include "omegat/logic.hpp"
#include "omegat/translate.hpp"

namespace omegat::cli {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// An expression argument or an --automaton file.
struct Input {
  std::string expression;
  std::string automaton_file;

  void attach(CLI::App* cmd) {
    cmd->add_option("expression", expression, "omega-T-regular expression");
    cmd->add_option("--automaton", automaton_file, "JSON automaton instead of an expression");
  }

  bool is_file() const { return !automaton_file.empty(); }

  void check() const {
    if (is_file() == !expression.empty())
      throw CLI::ValidationError("give exactly one of an expression or --automaton FILE");
  }

  cca::CCA automaton() const {
    check();
    if (is_file()) return cca::import_automaton(read_file(automaton_file));
    return translate::compile(expr::parse_omega_t(expression));
  }
};

void print_parse(const Input& in, std::ostream& out) {
  in.check();
  if (in.is_file()) {
    out << cca::export_automaton(in.automaton(), cca::Format::json);
    return;
  }
  const auto e = expr::parse_omega_t(in.expression);
  out << expr::to_string(e) << "\n";
}

void print_compile(const Input& in, bool intermediate, std::ostream& out) {
  in.check();
  if (in.is_file() || !intermediate) {
    out << cca::export_automaton(in.automaton(), cca::Format::json);
    return;
  }
  const auto e = expr::parse_omega_t(in.expression);
  translate::Compiler c(expr::letters_of(e), true);
  const cca::CCA merged = c.compile(e);
  for (const auto& set : c.intermediate()) {
    out << "# " << set.expression << " (" << set.automata.size() << " automata)\n";
    for (const auto& a : set.automata) out << cca::export_automaton(a, cca::Format::json);
  }
  out << "# merged\n" << cca::export_automaton(merged, cca::Format::json);
}

void print_empty(const Input& in, std::ostream& out) {
  const auto d = emptiness::decide(in.automaton());
  if (d.empty) {
    out << "EMPTY\n";
    return;
  }
  out << "NONEMPTY\n" << emptiness::witness_to_json(d.simple, *d.witness) << "\n";
}

int verify(const Input& in, const std::string& witness_file, std::ostream& out) {
  const cca::CCA simple = cca::simplify(in.automaton());
  const auto w = emptiness::witness_from_json(simple, read_file(witness_file));
  if (auto defect = emptiness::witness_defect(simple, w)) {
    out << "REJECTED " << *defect << "\n";
    return kFailed;
  }
  if (!emptiness::build_prefix_nfa(simple).accepts(emptiness::as_symbols(w.path))) {
    out << "REJECTED path is not a walk from the initial state\n";
    return kFailed;
  }
  out << "VERIFIED\n";
  return kOk;
}

void simulate(const Input& in, const std::string& word, std::optional<std::size_t> eps,
              std::ostream& out) {
  const cca::CCA a = in.automaton();
  const auto run = cca::has_run_prefix(a, word, eps);
  if (!run) {
    out << "NO RUN\n";
    return;
  }
  out << "RUN\n";
  for (std::size_t i = 0; i < run->configurations.size(); ++i) {
    const auto& c = run->configurations[i];
    if (i > 0) {
      const auto& t = run->transitions[i - 1];
      out << "  --" << (t.label ? std::string(1, *t.label) : std::string("eps")) << "/"
          << t.counter << ":" << cca::to_string(t.op) << "--> ";
    }
    out << a.name(c.state) << " [";
    for (std::size_t k = 0; k < c.counters.size(); ++k) out << (k ? " " : "") << c.counters[k];
    out << "]\n";
  }
  out << "blocks:";
  for (const auto& b : cca::split_by_checks(a, *run)) out << " \"" << b << "\"";
  out << "\n";
}

int fuzz(std::uint64_t seed, std::size_t cases, std::size_t depth, std::ostream& out) {
  const auto r = fuzz::run(seed, cases, depth);
  out << "cases=" << r.cases << " nonempty=" << r.nonempty << " oracle_found=" << r.oracle_found
      << " failures=" << r.failures.size() << "\n";
  for (const auto& f : r.failures) {
    out << "case " << f.index << " (seed " << f.seed << "): " << f.reason << "\n"
        << "minimized automaton:\n"
        << cca::export_automaton(f.minimized, cca::Format::json);
  }
  return r.ok() ? kOk : kFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"omega-T-regular expressions and counter-check automata", "omegat"};
  app.require_subcommand(1);

  Input parse_in, compile_in, empty_in, dot_in, sim_in, verify_in;
  auto* parse_cmd = app.add_subcommand("parse", "parse and print an expression");
  parse_in.attach(parse_cmd);

  bool intermediate = false;
  auto* compile_cmd = app.add_subcommand("compile", "compile to a CCA (JSON)");
  compile_in.attach(compile_cmd);
  compile_cmd->add_flag("--intermediate", intermediate, "also print every intermediate set");

  auto* empty_cmd = app.add_subcommand("empty", "decide emptiness, printing a witness");
  empty_in.attach(empty_cmd);

  auto* dot_cmd = app.add_subcommand("dot", "print the compiled CCA in DOT");
  dot_in.attach(dot_cmd);

  std::string word;
  std::optional<std::size_t> eps;
  auto* sim_cmd = app.add_subcommand("simulate", "search a run prefix reading a word");
  sim_in.attach(sim_cmd);
  sim_cmd->add_option("--word", word, "input word")->required();
  sim_cmd->add_option("--eps", eps, "epsilon steps allowed between letters");

  std::string formula_expr;
  bool expand = false, ascii = false;
  auto* formula_cmd = app.add_subcommand("formula", "emit the S1S+U formula schema");
  formula_cmd->add_option("expression", formula_expr, "omega-T-regular expression")->required();
  formula_cmd->add_flag("--expand-macros", expand, "unfold every macro");
  formula_cmd->add_flag("--ascii", ascii, "ASCII glyphs");

  std::string generator;
  auto* classify_cmd = app.add_subcommand("classify", "classify an exponent generator");
  classify_cmd->add_option("generator", generator, "e.g. staircase, ramp(1,1)")->required();

  std::uint64_t seed = 0;
  std::size_t cases = 200, depth = emptiness::kDefaultDepth;
  auto* fuzz_cmd = app.add_subcommand("fuzz", "random oracle-agreement self test");
  fuzz_cmd->add_option("--seed", seed)->required();
  fuzz_cmd->add_option("--cases", cases);
  fuzz_cmd->add_option("--depth", depth);

  std::string witness_file;
  auto* verify_cmd = app.add_subcommand("verify", "re-verify a witness from `empty`");
  verify_in.attach(verify_cmd);
  verify_cmd->add_option("--witness", witness_file, "witness JSON file")->required();

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*parse_cmd) print_parse(parse_in, out);
    if (*compile_cmd) print_compile(compile_in, intermediate, out);
    if (*empty_cmd) print_empty(empty_in, out);
    if (*dot_cmd) out << cca::export_automaton(dot_in.automaton(), cca::Format::dot);
    if (*sim_cmd) simulate(sim_in, word, eps, out);
    if (*formula_cmd)
      out << logic::emit_phi_text(expr::parse_omega_t(formula_expr), {ascii, expand});
    if (*classify_cmd)
      out << expr::to_string(expr::classify(expr::parse_generator(generator))) << "\n";
    if (*fuzz_cmd) return fuzz(seed, cases, depth, out);
    if (*verify_cmd) return verify(verify_in, witness_file, out);
    return kOk;
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace omegat::cli
