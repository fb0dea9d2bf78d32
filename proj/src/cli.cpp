#include "lnd/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "lnd/automorphism.hpp"
#include "lnd/comm_poly.hpp"
#include "lnd/error.hpp"
#include "lnd/free_algebra.hpp"
#include "lnd/invariants.hpp"
#include "lnd/parser.hpp"
#include "lnd/projections.hpp"
#include "lnd/weyl.hpp"

namespace lnd::cli {

namespace {

const std::vector<std::string> kCommands = {
    "mul",        "partial",    "project",      "taylor",     "invert",   "verify",
    "compose",    "log-aut",    "exp-der",      "aut-series", "map-series", "apply-series",
    "invariants", "relation",   "kernel",       "weitzenboeck"};

struct Options {
  std::string command;
  std::optional<unsigned> n, m, free, comm;
  std::string laurent;
  std::vector<std::string> aut, der, slice, gen;
  std::optional<unsigned> word_bound, degree_bound, max_order, index, degree;
  std::string map = "phi";
  std::optional<std::string> table, series, out;
  std::vector<std::string> exprs;
};

[[noreturn]] void usage(const std::string& msg) { throw Error(errc::usage, msg); }

std::string read_all(std::istream& in) {
  std::string s((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
  return s;
}

class Runner {
 public:
  Runner(Options opts, std::istream& in) : o_(std::move(opts)), in_(in) {
    for (auto& e : o_.exprs)
      if (e == "-") e = read_all(in_);
  }

  std::string run() {
    const std::string& c = o_.command;
    if (c == "weitzenboeck") return weitzenboeck();
    if (c == "invert" || c == "verify" || c == "compose" || c == "log-aut" || c == "exp-der" ||
        c == "aut-series" || c == "map-series" || c == "apply-series")
      return automorphism_command();
    if (c == "kernel") return kernel();
    return with_carrier([&](const auto& like) { return generic(like); });
  }

 private:
  // Exactly one carrier: --n/--m, --free or --comm.
  template <class F>
  std::string with_carrier(F&& f) {
    const int chosen = int(o_.n || o_.m) + int(o_.free.has_value()) + int(o_.comm.has_value());
    if (chosen != 1) usage("select exactly one carrier: --n/--m, --free or --comm");
    if (!o_.laurent.empty() && !o_.comm) usage("--laurent needs --comm");
    if (o_.n || o_.m) {
      const WeylSignature sig{o_.n.value_or(0), o_.m.value_or(0)};
      if (sig.s() == 0) usage("A(0,0) has no generators");
      return f(WeylElement(sig));
    }
    if (o_.free) {
      if (*o_.free == 0) usage("--free needs at least one generator");
      return f(FreeElement(*o_.free));
    }
    if (*o_.comm == 0) usage("--comm needs at least one variable");
    return f(CommPoly(*o_.comm, laurent_mask(*o_.comm)));
  }

  std::vector<bool> laurent_mask(std::size_t count) const {
    std::vector<bool> mask(count, false);
    if (o_.laurent.empty()) return mask;
    std::stringstream ss(o_.laurent);
    std::string item;
    while (std::getline(ss, item, ',')) {
      std::size_t idx = 0;
      try {
        std::size_t used = 0;
        idx = std::stoul(item, &used);
        if (used != item.size()) idx = 0;
      } catch (const std::exception&) {
        idx = 0;
      }
      if (idx < 1 || idx > count) usage("invalid --laurent entry '" + item + "'");
      mask[idx - 1] = true;
    }
    return mask;
  }

  WeylSignature automorphism_signature() {
    if (o_.free) usage("automorphism commands need --n/--m (or --comm for P_m)");
    if (o_.comm) {
      if (o_.n || o_.m) usage("select exactly one carrier: --n/--m, --free or --comm");
      if (!o_.laurent.empty()) usage("automorphism commands do not accept --laurent");
      return WeylSignature{0, *o_.comm};
    }
    if (!o_.n && !o_.m) usage("automorphism commands need --n/--m");
    const WeylSignature sig{o_.n.value_or(0), o_.m.value_or(0)};
    if (sig.s() == 0) usage("A(0,0) has no generators");
    return sig;
  }

  template <class E>
  E expr(const E& like, std::size_t k) {
    if (k >= o_.exprs.size()) usage(o_.command + ": missing expression argument");
    return parse_element(o_.exprs[k], like);
  }

  void expect_exprs(std::size_t lo, std::size_t hi) {
    if (o_.exprs.size() < lo || o_.exprs.size() > hi) {
      if (lo == hi)
        usage(o_.command + " takes " + std::to_string(lo) + " expression argument(s)");
      usage(o_.command + " takes between " + std::to_string(lo) + " and " + std::to_string(hi) +
            " expression arguments");
    }
  }

  template <class E>
  std::vector<E> generators(const E& like) {
    std::vector<E> out;
    for (std::size_t i = 0; i < like.num_vars(); ++i) out.push_back(like.variable_like(i));
    return out;
  }

  template <class E>
  Derivation<E> derivation_from(const std::string& text, const E& like) {
    std::vector<E> values = parse_images(text, like);
    if constexpr (std::is_same_v<E, WeylElement>) check_weyl_derivation(like.signature(), values);
    return Derivation<E>::by_values(std::move(values));
  }

  // Standard partials with slices x_i unless --der/--slice are given.
  template <class E>
  LndSystem<E> system(const E& like) {
    if (o_.der.empty() && o_.slice.empty()) return standard_system(like);
    if (o_.der.size() != o_.slice.size()) usage("give one --slice per --der");
    std::vector<Derivation<E>> ders;
    std::vector<E> slices;
    for (std::size_t k = 0; k < o_.der.size(); ++k) {
      ders.push_back(derivation_from(o_.der[k], like));
      slices.push_back(parse_element(o_.slice[k], like));
    }
    return LndSystem<E>(std::move(ders), std::move(slices), generators(like));
  }

  template <class E>
  std::string generic(const E& like) {
    const std::string& c = o_.command;
    if (c == "mul") {
      if (o_.exprs.empty()) usage("mul takes at least one expression argument");
      E acc = expr(like, 0);
      for (std::size_t k = 1; k < o_.exprs.size(); ++k) acc = acc * expr(like, k);
      return to_string(acc);
    }
    if (c == "partial") {
      expect_exprs(1, 1);
      if (!o_.index) usage("partial needs --index");
      if (*o_.index < 1 || *o_.index > like.num_vars())
        throw Error(errc::index, "--index must lie in 1.." + std::to_string(like.num_vars()));
      const E a = expr(like, 0);
      const std::size_t i = *o_.index - 1;
      if constexpr (std::is_same_v<E, WeylElement>) return to_string(weyl_partial(a, i));
      else return to_string(partial(a, i));
    }
    if (c == "project") {
      expect_exprs(1, 1);
      const LndSystem<E> sys = system(like);
      const E a = expr(like, 0);
      if (o_.map == "phi") return to_string(sys.phi(a));
      if (o_.map == "psi") return to_string(sys.psi(a));
      usage("--map must be phi or psi");
    }
    if (c == "taylor") {
      expect_exprs(1, 1);
      const LndSystem<E> sys = system(like);
      std::string out;
      for (const auto& [alpha, coeff] : sys.taylor_decompose(expr(like, 0))) {
        if (!out.empty()) out += '\n';
        out += "alpha=" + alpha.to_string() + ": " + to_string(coeff);
      }
      return out;
    }
    if (c == "relation") {
      expect_exprs(1, 1);
      const LndSystem<E> sys = system(like);
      return relation_check(sys, expr(like, 0)) ? "true" : "false";
    }
    if (c == "invariants") {
      expect_exprs(0, 0);
      const LndSystem<E> sys = system(like);
      std::vector<E> gens;
      for (const auto& g : o_.gen) gens.push_back(parse_element(g, like));
      if (gens.empty()) gens = generators(like);
      std::optional<int> bound;
      if (o_.degree_bound) bound = static_cast<int>(*o_.degree_bound);
      std::string out;
      for (const auto& w : enumerate_generators(sys, gens, o_.word_bound.value_or(1), bound)) {
        if (!out.empty()) out += '\n';
        out += format_witness(w);
      }
      return out;
    }
    usage("unknown command '" + c + "'");
  }

  std::string kernel() {
    expect_exprs(0, 0);
    if (!o_.degree) usage("kernel needs --degree");
    return with_carrier([&](const auto& like) -> std::string {
      using E = std::decay_t<decltype(like)>;
      if constexpr (std::is_same_v<E, WeylElement>) {
        usage("kernel supports --free and --comm only");
      } else {
        if constexpr (std::is_same_v<E, CommPoly>)
          if (like.has_laurent()) usage("kernel does not accept --laurent");
        std::vector<Derivation<E>> ders;
        for (const auto& d : o_.der) ders.push_back(derivation_from(d, like));
        if (ders.empty())
          for (std::size_t i = 0; i < like.num_vars(); ++i)
            ders.push_back(Derivation<E>::partial(i));
        std::vector<E> basis;
        if constexpr (std::is_same_v<E, FreeElement>)
          basis = graded_kernel_oracle(like.num_gens(), ders, *o_.degree);
        else
          basis = graded_kernel_oracle(like.num_vars(), ders, *o_.degree);
        std::string out = "dim " + std::to_string(basis.size());
        for (const auto& b : basis) out += "\n" + to_string(b);
        return out;
      }
    });
  }

  std::string weitzenboeck() {
    expect_exprs(0, 0);
    if (!o_.n) usage("weitzenboeck needs --n");
    if (o_.m || o_.free || o_.comm) usage("weitzenboeck takes --n only");
    if (*o_.n < 3) throw Error(errc::index, "weitzenboeck needs n >= 3");
    if (*o_.n > 32) usage("weitzenboeck supports n <= 32");
    const auto invariants = weitzenboeck_invariants(*o_.n);
    std::string out;
    for (std::size_t k = 0; k < invariants.size(); ++k) {
      if (k) out += '\n';
      out += "phi(x" + std::to_string(k + 3) + ") = " + to_string(invariants[k]);
    }
    return out;
  }

  Automorphism automorphism(const WeylSignature& sig, const std::string& text) {
    return aut_verify(sig, parse_images(text, WeylElement(sig)));
  }

  Automorphism single_aut(const WeylSignature& sig) {
    if (o_.aut.size() != 1) usage(o_.command + " needs exactly one --aut");
    return automorphism(sig, o_.aut.front());
  }

  DiffOpSeries parse_series(const WeylSignature& sig, const std::string& text) {
    const WeylElement like(sig);
    DiffOpSeries series{sig, 0, {}};
    for (const Assignment& a : split_assignments(text)) {
      std::string_view key = a.lhs;
      auto bad = [&]() -> void {
        throw Error(errc::parse, "at byte " + std::to_string(a.lhs_offset) +
                                     ": series key must look like d^(a1,...,a" +
                                     std::to_string(sig.s()) + ")");
      };
      if (key.substr(0, 3) != "d^(" || key.back() != ')') bad();
      key = key.substr(3, key.size() - 4);
      std::vector<unsigned> entries;
      std::stringstream ss{std::string(key)};
      std::string item;
      while (std::getline(ss, item, ',')) {
        if (item.empty() || item.size() > 4 ||
            !std::all_of(item.begin(), item.end(), [](char ch) { return ch >= '0' && ch <= '9'; }))
          bad();
        entries.push_back(static_cast<unsigned>(std::stoul(item)));
      }
      if (entries.size() != sig.s()) bad();
      MultiIndex alpha(entries);
      series.max_order = std::max(series.max_order, alpha.total());
      WeylElement c = parse_element(a.rhs, like, a.rhs_offset);
      if (!c.is_zero()) series.coeffs.insert_or_assign(alpha, std::move(c));
    }
    return series;
  }

  LinearMapTable parse_table(const WeylSignature& sig, const std::string& text) {
    const WeylElement like(sig);
    LinearMapTable table{sig, {}};
    for (const Assignment& a : split_assignments(text)) {
      const WeylElement key = parse_element(a.lhs, like, a.lhs_offset);
      table.set(key, parse_element(a.rhs, like, a.rhs_offset));
    }
    return table;
  }

  std::string automorphism_command() {
    const WeylSignature sig = automorphism_signature();
    const std::string& c = o_.command;
    if (c == "verify") {
      expect_exprs(0, 0);
      single_aut(sig);
      return "verified";
    }
    if (c == "invert") {
      expect_exprs(0, 0);
      return format_images(invert(single_aut(sig)).images);
    }
    if (c == "compose") {
      expect_exprs(0, 0);
      if (o_.aut.size() < 2) usage("compose needs at least two --aut");
      Automorphism acc = automorphism(sig, o_.aut.front());
      for (std::size_t k = 1; k < o_.aut.size(); ++k)
        acc = aut_compose(acc, automorphism(sig, o_.aut[k]));
      return format_images(acc.images);
    }
    if (c == "log-aut") {
      expect_exprs(0, 0);
      return format_images(log_aut(single_aut(sig)).values);
    }
    if (c == "exp-der") {
      expect_exprs(0, 0);
      if (o_.der.size() != 1) usage("exp-der needs exactly one --der");
      const GeneratorDerivation d =
          make_derivation(sig, parse_images(o_.der.front(), WeylElement(sig)));
      return format_images(exp_der(d).images);
    }
    if (c == "aut-series") {
      expect_exprs(0, 0);
      if (!o_.max_order) usage("aut-series needs --max-order");
      return format_series(aut_to_series(single_aut(sig), *o_.max_order));
    }
    if (c == "map-series") {
      expect_exprs(0, 0);
      if (!o_.max_order) usage("map-series needs --max-order");
      if (!o_.table) usage("map-series needs --table");
      return format_series(map_to_series(parse_table(sig, *o_.table), *o_.max_order));
    }
    // apply-series
    expect_exprs(1, 1);
    const WeylElement a = expr(WeylElement(sig), 0);
    const int sources = int(!o_.aut.empty()) + int(o_.table.has_value()) + int(o_.series.has_value());
    if (sources != 1) usage("apply-series needs exactly one of --aut, --table, --series");
    const unsigned order =
        o_.max_order.value_or(static_cast<unsigned>(std::max(0, a.total_degree().value_or(0))));
    DiffOpSeries series{sig, 0, {}};
    if (!o_.aut.empty()) series = aut_to_series(single_aut(sig), order);
    else if (o_.table) series = map_to_series(parse_table(sig, *o_.table), order);
    else series = parse_series(sig, *o_.series);
    return to_string(series_apply(series, a));
  }

  Options o_;
  std::istream& in_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Exact computations with locally nilpotent derivations", "lndcalc"};
  Options o;
  app.add_option("command", o.command, "Command to run")
      ->required()
      ->check(CLI::IsMember(kCommands));
  app.add_option("exprs", o.exprs, "Expression arguments ('-' reads stdin)");
  app.add_option("--n", o.n, "Weyl pairs of A(n,m); degree for weitzenboeck");
  app.add_option("--m", o.m, "Central variables of A(n,m)");
  app.add_option("--free", o.free, "Free algebra on K generators");
  app.add_option("--comm", o.comm, "Polynomial ring in M variables");
  app.add_option("--laurent", o.laurent, "Invertible variables of --comm, e.g. 1,3");
  app.add_option("--aut", o.aut, "Automorphism 'x1 -> e1; ...' (repeatable)")
      ->allow_extra_args(false);
  app.add_option("--der", o.der, "Derivation 'x1 -> e1; ...' (repeatable)")
      ->allow_extra_args(false);
  app.add_option("--slice", o.slice, "Slice of the matching --der (repeatable)")
      ->allow_extra_args(false);
  app.add_option("--gen", o.gen, "Algebra generator for invariants (repeatable)")
      ->allow_extra_args(false);
  app.add_option("--word-bound", o.word_bound, "Longest ad-word for invariants");
  app.add_option("--degree-bound", o.degree_bound, "Largest witness degree for invariants");
  app.add_option("--max-order", o.max_order, "Truncation order of series");
  app.add_option("--index", o.index, "Variable index for partial (1-based)");
  app.add_option("--degree", o.degree, "Homogeneous degree for kernel");
  app.add_option("--map", o.map, "Projection for project: phi or psi");
  app.add_option("--table", o.table, "Linear map table 'monomial -> value; ...'");
  app.add_option("--series", o.series, "Series 'd^(a1,...,as) -> coeff; ...'");
  app.add_option("--out", o.out, "Also write the output to this file");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "ERROR usage: " << e.what() << "\n";
    return 2;
  }

  try {
    const std::string text = Runner(o, in).run();
    out << text;
    if (!text.empty()) out << "\n";
    if (o.out) {
      std::ofstream f(*o.out);
      if (!f) throw Error(errc::usage, "cannot open " + *o.out + " for writing");
      f << text;
      if (!text.empty()) f << "\n";
    }
    return 0;
  } catch (const Error& e) {
    err << "ERROR " << e.code() << ": " << e.what() << "\n";
    return e.code() == errc::usage || e.code() == errc::parse ? 2 : 1;
  } catch (const std::exception& e) {
    err << "ERROR internal: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace lnd::cli
