#include "diq/cli.hpp"

#include <filesystem>
#include <fstream>
#include <map>
#include <optional>

#include "CLI11.hpp"
#include "diq/corpus.hpp"
#include "diq/error.hpp"
#include "diq/groebner.hpp"
#include "diq/ideal_io.hpp"
#include "diq/ideal_ops.hpp"
#include "diq/localize.hpp"
#include "diq/parse.hpp"

namespace diq::cli {
namespace {

struct Options {
  std::string ideal;
  std::string by;
  std::string prime;
  std::string component;
  std::vector<std::string> primes;
  std::vector<std::string> with;
  std::vector<std::string> fs;
  std::string poly;
  std::vector<std::string> vars;
  std::string order = "grevlex";
  std::string strategy = "pm+mis";
  std::string method = "regseq";
  std::string criterion = "auto";
  std::string test = "quotient";
  int variant = 1;
  std::uint64_t seed = 0;
  unsigned mmax = 12;
  bool certificates = false;
  bool inline_output = false;
  bool maximal = false;
  // corpus
  bool list = false;
  std::string name;
  unsigned i1 = 0;
  std::vector<unsigned> minors;
  std::string out_dir;
};

class Runner {
 public:
  Runner(const Options& o, std::ostream& out, std::ostream& err) : o_(o), out_(out), err_(err) {}

  int dispatch(const std::string& cmd) {
    static const std::map<std::string, int (Runner::*)()> table = {
        {"gb", &Runner::gb},           {"nf", &Runner::nf},
        {"quotient", &Runner::quot},   {"saturate", &Runner::sat},
        {"intersect", &Runner::meet},  {"eliminate", &Runner::elim},
        {"dim", &Runner::dim},         {"mis", &Runner::mis},
        {"hull", &Runner::hull_cmd},   {"diq", &Runner::diq_cmd},
        {"satquot", &Runner::satquot}, {"assq", &Runner::assq},
        {"isolatedq", &Runner::isolatedq}, {"componentq", &Runner::componentq},
        {"lpa", &Runner::lpa_cmd},     {"localize", &Runner::localize_cmd},
        {"corpus", &Runner::corpus},
    };
    return (this->*table.at(cmd))();
  }

 private:
  Ideal load(const std::string& path) {
    Ideal ideal = read_ideal_file(path);
    if (base_ && !same_ring(base_->ring(), ideal.ring())) {
      throw ContextMismatch(path + " is over a different ring than " + o_.ideal);
    }
    return ideal;
  }

  const Ideal& base() {
    if (!base_) base_ = read_ideal_file(o_.ideal);
    return *base_;
  }

  OrderPtr order_for(const RingPtr& ring) const {
    if (o_.order == "lex") {
      return std::make_shared<const MonomialOrder>(MonomialOrder::lex(ring->nvars()));
    }
    return nullptr;
  }

  void emit(const Ideal& ideal) {
    const OrderPtr ord = order_for(ideal.ring());
    if (o_.inline_output) {
      out_ << format_ideal_inline(ideal, ord) << '\n';
    } else {
      out_ << format_ideal(ideal, ord);
    }
  }

  void note(const std::string& line) {
    if (o_.certificates) out_ << "# " << line << '\n';
  }

  void emit_certificates(const std::vector<Certificate>& certs) {
    for (const auto& c : certs) {
      note(c.criterion + (c.passed ? " pass " : " fail ") + c.detail);
    }
  }

  std::string vars_of(const RingCtx& ring, const std::vector<std::size_t>& idx) {
    std::string s;
    for (std::size_t i = 0; i < idx.size(); ++i) {
      if (i) s += ',';
      s += ring.name(idx[i]);
    }
    return s.empty() ? "{}" : s;
  }

  int gb() {
    emit(base());
    return ok;
  }

  int nf() {
    const Ideal& ideal = base();
    Polynomial f = parse_poly(o_.poly, ideal.ring());
    OrderPtr ord = order_for(ideal.ring());
    if (!ord) ord = ideal.ring()->default_order();
    out_ << format_poly(normal_form(f.with_order(ord), ideal.basis(ord), ord)) << '\n';
    return ok;
  }

  int quot() {
    emit(quotient(base(), load(o_.by)));
    return ok;
  }

  int sat() {
    Saturation s = saturate(base(), load(o_.by));
    note("steps " + std::to_string(s.steps));
    emit(s.ideal);
    return ok;
  }

  int meet() {
    std::vector<Ideal> all{base()};
    for (const auto& w : o_.with) all.push_back(load(w));
    emit(intersect(all));
    return ok;
  }

  int elim() {
    const Ideal& ideal = base();
    emit(eliminate(ideal, variable_indices(*ideal.ring(), o_.vars)));
    return ok;
  }

  int dim() {
    const Ideal& ideal = base();
    MisResult r = dimension(ideal);
    out_ << "dimension " << r.dimension << '\n';
    if (r.dimension >= 0) out_ << "independent " << vars_of(*ideal.ring(), r.independent_set) << '\n';
    return ok;
  }

  int mis() {
    const Ideal& ideal = base();
    for (const auto& u : all_mis(ideal)) out_ << vars_of(*ideal.ring(), u) << '\n';
    return ok;
  }

  int hull_cmd() {
    const Ideal& ideal = base();
    if (o_.method == "mis") {
      if (o_.prime.empty()) throw PreconditionError("hull --method mis needs --prime");
      emit(hull(ideal, MisHull{PrimeInput(load(o_.prime))}));
    } else {
      emit(hull(ideal, RegularSequenceHull{o_.seed, 20}));
    }
    return ok;
  }

  int diq_cmd() {
    emit(diq(base(), load(o_.by)));
    return ok;
  }

  int satquot() {
    const Ideal& ideal = base();
    Ideal by = load(o_.by);
    switch (o_.variant) {
      case 1: emit(sat_quot_1(ideal, by)); break;
      case 2: emit(sat_quot_2(ideal, by)); break;
      default: emit(sat_quot_3(ideal, by)); break;
    }
    return ok;
  }

  void emit_witness(const DivisorVerdict& v) {
    for (const auto& [label, ideal] : v.witness) {
      note(label + " = " + format_ideal_inline(ideal, order_for(ideal.ring())));
    }
  }

  int assq() {
    const Ideal& ideal = base();
    PrimeInput p(load(o_.prime));
    DivisorVerdict v = is_prime_divisor(
        ideal, p, o_.test == "saturation" ? DivisorTest::saturation : DivisorTest::quotient);
    emit_witness(v);
    out_ << (v.is_divisor ? "prime divisor" : "not a prime divisor") << '\n';
    return v.is_divisor ? ok : negative;
  }

  int isolatedq() {
    const Ideal& ideal = base();
    PrimeInput p(load(o_.prime));
    if (!contains(p.ideal(), ideal)) {
      out_ << "not a prime divisor\n";
      return negative;
    }
    DivisorVerdict v = is_isolated_divisor(ideal, p);
    emit_witness(v);
    if (!v.is_divisor) {
      out_ << "not a prime divisor\n";
      return negative;
    }
    out_ << (*v.is_isolated ? "isolated divisor" : "embedded divisor") << '\n';
    return *v.is_isolated ? ok : negative;
  }

  int componentq() {
    const Ideal& ideal = base();
    PrimeInput p(load(o_.prime));
    Ideal q = load(o_.component);
    static const std::map<std::string, ComponentCriterion> names = {
        {"general", ComponentCriterion::general},
        {"isolated", ComponentCriterion::isolated},
        {"maximal", ComponentCriterion::maximal},
        {"auto", ComponentCriterion::automatic}};
    ComponentOptions opts;
    opts.prime_is_maximal_divisor = o_.maximal;
    ComponentCheck c = is_primary_component(ideal, p, q, names.at(o_.criterion), opts);
    out_ << to_string(c.criterion) << ' ' << to_string(c.verdict) << ": " << c.detail << '\n';
    switch (c.verdict) {
      case CriterionVerdict::holds: return ok;
      case CriterionVerdict::fails: return negative;
      case CriterionVerdict::inapplicable: return usage;
    }
    return usage;
  }

  LpaOptions lpa_options() const {
    static const std::map<std::string, LpaStrategy> names = {
        {"plain", LpaStrategy::plain},
        {"pm", LpaStrategy::bracket},
        {"mis", LpaStrategy::mis},
        {"pm+mis", LpaStrategy::bracket_mis}};
    LpaOptions opts;
    opts.strategy = names.at(o_.strategy);
    opts.max_m = o_.mmax;
    opts.seed = o_.seed;
    opts.prime_is_maximal_divisor = o_.maximal;
    return opts;
  }

  int lpa_cmd() {
    const Ideal& ideal = base();
    PrimeInput p(load(o_.prime));
    LpaOutcome r;
    try {
      r = lpa(ideal, p, lpa_options());
    } catch (const LpaBudgetExhausted& e) {
      emit_certificates(e.certificates());
      throw;
    }
    emit_certificates(r.certificates);
    if (r.verdict == LpaVerdict::not_a_divisor) {
      out_ << "not a prime divisor\n";
      return negative;
    }
    note(to_string(r.verdict) + (r.exponent_m ? " m=" + std::to_string(*r.exponent_m) : ""));
    emit(*r.component);
    return ok;
  }

  int localize_cmd() {
    const Ideal& ideal = base();
    if (!o_.fs.empty()) {
      std::vector<Polynomial> fs;
      for (const auto& f : o_.fs) fs.push_back(parse_poly(f, ideal.ring()));
      emit(localize_fg(ideal, fs));
      return ok;
    }
    if (o_.primes.empty()) throw PreconditionError("localize needs --prime or --by-element");
    std::vector<Ideal> parts;
    const LpaOptions opts = lpa_options();
    for (const auto& path : o_.primes) {
      LpaOutcome r = lpa(ideal, PrimeInput(load(path)), opts);
      emit_certificates(r.certificates);
      if (r.verdict == LpaVerdict::not_a_divisor) {
        out_ << "not a prime divisor: " << path << '\n';
        return negative;
      }
      parts.push_back(*r.component);
    }
    emit(intersect(parts));
    return ok;
  }

  static std::string file_stem(const std::string& name) {
    std::string s;
    for (char c : name) s += std::isalnum(static_cast<unsigned char>(c)) ? c : '_';
    return s;
  }

  int corpus() {
    if (o_.i1 > 0) {
      emit(i1_family(o_.i1).ideal);
      return ok;
    }
    if (!o_.minors.empty()) {
      if (o_.minors.size() != 3) throw PreconditionError("--minors takes k,m,n");
      emit(adjacent_minors(o_.minors[0], o_.minors[1], o_.minors[2]));
      return ok;
    }
    const auto all = standard_corpus();
    if (o_.list) {
      for (const auto& d : all) out_ << d.name << '\n';
      return ok;
    }
    if (!o_.name.empty()) {
      for (const auto& d : all) {
        if (d.name != o_.name) continue;
        for (const auto& c : d.components) {
          note(std::string(c.kind == ComponentKind::isolated ? "isolated " : "embedded ") +
               format_ideal_inline(c.primary) + " prime " + format_ideal_inline(c.prime));
        }
        emit(d.ideal);
        return ok;
      }
      throw PreconditionError("no corpus ideal named '" + o_.name + "'");
    }
    if (!o_.out_dir.empty()) {
      std::filesystem::create_directories(o_.out_dir);
      for (const auto& d : all) {
        const std::filesystem::path base = std::filesystem::path(o_.out_dir) / file_stem(d.name);
        std::ofstream(base.string() + ".ideal") << format_ideal(d.ideal);
        for (std::size_t i = 0; i < d.components.size(); ++i) {
          const auto& c = d.components[i];
          const std::string tag = base.string() + ".c" + std::to_string(i + 1);
          std::ofstream(tag + ".primary.ideal") << format_ideal(c.primary);
          std::ofstream(tag + ".prime.ideal") << format_ideal(c.prime);
        }
      }
      out_ << all.size() << " ideals written to " << o_.out_dir << '\n';
      return ok;
    }
    throw PreconditionError("corpus needs --list, --name, --i1, --minors or --out");
  }

  const Options& o_;
  std::ostream& out_;
  std::ostream& err_;
  std::optional<Ideal> base_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Localization of polynomial ideals via double ideal quotients", "diqloc"};
  app.require_subcommand(1);
  Options o;

  auto ideal_opt = [&](CLI::App* sub) {
    sub->add_option("--ideal", o.ideal, "Input .ideal file")->required()->check(CLI::ExistingFile);
  };
  auto common = [&](CLI::App* sub) {
    sub->add_option("--order", o.order, "Output order")->check(CLI::IsMember({"lex", "grevlex"}));
    sub->add_flag("--inline", o.inline_output, "Print the result as (g1, g2, ...)");
    sub->add_flag("--certificates", o.certificates, "Print the audit trail as comments");
    sub->add_option("--seed", o.seed, "Seed for randomized choices");
  };
  auto by_opt = [&](CLI::App* sub) {
    sub->add_option("--by", o.by, "Second ideal file")->required()->check(CLI::ExistingFile);
  };
  auto prime_opt = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--prime", o.prime, "Prime ideal file")->check(CLI::ExistingFile);
    if (required) opt->required();
  };
  auto lpa_opts = [&](CLI::App* sub) {
    sub->add_option("--mmax", o.mmax, "Largest exponent m tried")->check(CLI::PositiveNumber);
    sub->add_option("--strategy", o.strategy, "Candidate generator")
        ->check(CLI::IsMember({"plain", "pm", "mis", "pm+mis"}));
    sub->add_flag("--maximal", o.maximal, "Assert that P is a maximal divisor");
  };

  auto* gb = app.add_subcommand("gb", "Reduced Groebner basis");
  ideal_opt(gb);
  common(gb);

  auto* nf = app.add_subcommand("nf", "Normal form of a polynomial");
  ideal_opt(nf);
  common(nf);
  nf->add_option("--poly", o.poly, "Polynomial to reduce")->required();

  auto* quot = app.add_subcommand("quotient", "Ideal quotient (I : J)");
  auto* sat = app.add_subcommand("saturate", "Saturation (I : J^inf)");
  auto* diq = app.add_subcommand("diq", "Double ideal quotient (I : (I : J))");
  for (auto* sub : {quot, sat, diq}) {
    ideal_opt(sub);
    by_opt(sub);
    common(sub);
  }

  auto* meet = app.add_subcommand("intersect", "Intersection of ideals");
  ideal_opt(meet);
  common(meet);
  meet->add_option("--with", o.with, "Further ideal files")->required()->check(CLI::ExistingFile);

  auto* elim = app.add_subcommand("eliminate", "Elimination ideal");
  ideal_opt(elim);
  common(elim);
  elim->add_option("--vars", o.vars, "Variables to eliminate")->required()->delimiter(',');

  auto* dim = app.add_subcommand("dim", "Krull dimension and an independent set");
  auto* mis = app.add_subcommand("mis", "All maximal independent sets");
  for (auto* sub : {dim, mis}) ideal_opt(sub);

  auto* hull = app.add_subcommand("hull", "Equidimensional hull");
  ideal_opt(hull);
  common(hull);
  prime_opt(hull, false);
  hull->add_option("--method", o.method, "regseq or mis")->check(CLI::IsMember({"regseq", "mis"}));

  auto* satquot = app.add_subcommand("satquot", "Saturated quotients");
  ideal_opt(satquot);
  by_opt(satquot);
  common(satquot);
  satquot->add_option("--variant", o.variant, "1: (I:(I:J)^inf)  2: (I:(I:J^inf)^inf)  3: (I:(I:J^inf))")
      ->required()
      ->check(CLI::Range(1, 3));

  auto* assq = app.add_subcommand("assq", "Is P a prime divisor of I?");
  ideal_opt(assq);
  prime_opt(assq, true);
  common(assq);
  assq->add_option("--test", o.test, "quotient or saturation")
      ->check(CLI::IsMember({"quotient", "saturation"}));

  auto* isolatedq = app.add_subcommand("isolatedq", "Is P an isolated divisor of I?");
  ideal_opt(isolatedq);
  prime_opt(isolatedq, true);
  common(isolatedq);

  auto* componentq = app.add_subcommand("componentq", "Is Q a P-primary component of I?");
  ideal_opt(componentq);
  prime_opt(componentq, true);
  componentq->add_option("--component", o.component, "Candidate component file")
      ->required()
      ->check(CLI::ExistingFile);
  componentq->add_option("--criterion", o.criterion, "general, isolated, maximal or auto")
      ->check(CLI::IsMember({"general", "isolated", "maximal", "auto"}));
  componentq->add_flag("--maximal", o.maximal, "Assert that P is a maximal divisor");

  auto* lpa = app.add_subcommand("lpa", "P-primary component of I");
  ideal_opt(lpa);
  prime_opt(lpa, true);
  common(lpa);
  lpa_opts(lpa);

  auto* loc = app.add_subcommand("localize", "Localization of I");
  ideal_opt(loc);
  common(loc);
  lpa_opts(loc);
  loc->add_option("--prime", o.primes, "Divisors kept by the localization")
      ->check(CLI::ExistingFile);
  loc->add_option("--by-element", o.fs, "Invert these polynomials instead");

  auto* corpus = app.add_subcommand("corpus", "Built-in test ideals");
  common(corpus);
  corpus->add_flag("--list", o.list, "List the standard corpus");
  corpus->add_option("--name", o.name, "Print one corpus ideal");
  corpus->add_option("--i1", o.i1, "Print I1(n)")->check(CLI::PositiveNumber);
  corpus->add_option("--minors", o.minors, "Print adjacent minors k,m,n")->delimiter(',');
  corpus->add_option("--out", o.out_dir, "Write every corpus ideal to this directory");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "diqloc: " << e.what() << '\n';
    return usage;
  }

  const std::string cmd = app.get_subcommands().front()->get_name();
  Runner runner(o, out, err);
  try {
    return runner.dispatch(cmd);
  } catch (const BudgetExhausted& e) {
    err << "diqloc: budget exhausted: " << e.what() << '\n';
    return budget;
  } catch (const ParseError& e) {
    err << "diqloc: parse error: " << e.what() << '\n';
    return usage;
  } catch (const Error& e) {
    err << "diqloc: " << e.what() << '\n';
    return usage;
  } catch (const std::exception& e) {
    err << "diqloc: " << e.what() << '\n';
    return usage;
  }
}

}  // namespace diq::cli
