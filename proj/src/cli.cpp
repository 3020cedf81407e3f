#include "jacarena/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "jacarena/error.hpp"
#include "jacarena/oracle.hpp"
#include "jacarena/strategies.hpp"

namespace jacarena {

namespace {

// Raised for bad flags before any game starts.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Resigned {};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t\r\n") - b + 1);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += (c == '"') ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

struct MatchConfig {
  std::string ring;
  std::string x;
  std::string x_prime;
  long budget = -1;
  std::string prover = "auto";
  std::string delayer = "random";
  std::uint64_t seed = 0;
  std::uint32_t deg = 1;
  std::int64_t abs = 10;
  std::string out;
};

struct Prepared {
  RingPtr ring;
  Polynomial x, x_prime;
  StrategyPtr prover;
  std::uint64_t budget = 0;
};

Prepared prepare(const MatchConfig& cfg) {
  Prepared p;
  try {
    p.ring = RingPresentation::parse(cfg.ring);
    p.x = p.ring->reduce(p.ring->parse_polynomial(cfg.x));
    p.x_prime = p.ring->reduce(p.ring->parse_polynomial(cfg.x_prime.empty() ? cfg.x : cfg.x_prime));
    std::uint64_t natural = 0;
    if (cfg.prover == "auto") {
      const RingFactory f = ring_strategy_factory(p.ring);
      p.prover = f.make(p.x);
      natural = f.budget;
    } else if (cfg.prover == "euclideanDim1") {
      p.prover = euclidean_dim1_strategy(p.ring, p.x);
      natural = 2;
    } else if (cfg.prover == "zeroDim") {
      p.prover = zero_dim_strategy(p.ring, p.x);
      natural = 1;
    } else if (cfg.prover == "polyLift") {
      if (p.ring->vars().empty()) throw ConfigError("polyLift needs a polynomial ring");
      std::vector<std::string> vars(p.ring->vars().begin(), p.ring->vars().end() - 1);
      const RingFactory base = ring_strategy_factory(RingPresentation::create(p.ring->coeffs(), vars));
      p.prover = poly_lift_strategy(base, p.ring, p.ring->vars().back(), p.x);
      natural = base.budget + 1;
    } else if (cfg.prover == "leaf") {
      p.prover = leaf_strategy();
    } else if (cfg.prover.rfind("scripted:", 0) == 0) {
      std::vector<std::vector<Polynomial>> rounds;
      for (const auto& r : split(cfg.prover.substr(9), ';')) {
        std::vector<Polynomial> moves;
        if (!trim(r).empty()) {
          for (const auto& m : split(r, ',')) moves.push_back(p.ring->parse_polynomial(trim(m)));
        }
        rounds.push_back(std::move(moves));
      }
      natural = rounds.size();
      p.prover = scripted_strategy(std::move(rounds));
    } else {
      throw ConfigError("unknown prover '" + cfg.prover + "'");
    }
    p.budget = cfg.budget >= 0 ? static_cast<std::uint64_t>(cfg.budget) : natural;
  } catch (const Error& e) {
    throw ConfigError(e.what());
  }
  return p;
}

std::unique_ptr<DelayerStrategy> make_delayer(const MatchConfig& cfg, const Prepared& p) {
  const auto parts = split(cfg.delayer, ':');
  const std::string& kind = parts[0];
  try {
    if (kind == "random") {
      std::uint64_t seed = cfg.seed;
      std::uint32_t deg = cfg.deg;
      std::int64_t abs = cfg.abs;
      if (parts.size() > 1) seed = std::stoull(parts[1]);
      if (parts.size() > 2) deg = static_cast<std::uint32_t>(std::stoul(parts[2]));
      if (parts.size() > 3) abs = std::stoll(parts[3]);
      return std::make_unique<RandomDelayer>(seed, deg, abs);
    }
    if (kind == "refuterZ") {
      if (!p.x.is_constant()) throw ConfigError("refuterZ needs an integer x");
      return std::make_unique<RefuterZ>(p.x.constant_term().get_num());
    }
    if (kind == "refuterPoly") return std::make_unique<RefuterPoly>();
    if (kind == "jacWitness") {
      std::vector<Polynomial> u0;
      if (parts.size() > 1) {
        for (const auto& s : split(cfg.delayer.substr(11), ',')) u0.push_back(p.ring->parse_polynomial(trim(s)));
      }
      return std::make_unique<JacWitnessDelayer>(std::move(u0));
    }
  } catch (const Error& e) {
    throw ConfigError(e.what());
  } catch (const std::logic_error& e) {
    throw ConfigError("bad delayer parameters '" + cfg.delayer + "'");
  }
  throw ConfigError("unknown delayer '" + cfg.delayer + "'");
}

int finish(const Transcript& t, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << to_json(t) << "\n";
  } else {
    std::ofstream f(path);
    if (!f) throw ConfigError("cannot write " + path);
    f << to_json(t) << "\n";
    out << "winner: " << t.winner << "\n";
  }
  return t.prover_won() ? kExitProverWins : kExitDelayerWins;
}

int cmd_play(const MatchConfig& cfg, std::ostream& out) {
  const Prepared p = prepare(cfg);
  const auto delayer = make_delayer(cfg, p);
  Transcript t;
  try {
    t = referee_play(p.ring, p.x, p.x_prime, p.budget, p.prover, *delayer);
  } catch (const Error& e) {
    throw std::runtime_error(e.what());
  }
  return finish(t, cfg.out, out);
}

constexpr const char* kReplHelp =
    "Enter one reply b per prompt, written like the ring's elements:\n"
    "  integers, variables, + - * ^ and parentheses, e.g. 1 - 2*x^2.\n"
    "  The Prover's constraint becomes 1 - b*(1 - a*x).\n"
    "  ?  shows this help; end of input resigns.\n";

class HumanDelayer : public DelayerStrategy {
 public:
  HumanDelayer(std::istream& in, std::ostream& out) : in_(in), out_(out) {}
  std::vector<Polynomial> reply(const DelayerView& view, const std::vector<Polynomial>& moves) const override {
    out_ << "round " << view.round + 1 << ", budget " << view.budget << "\n";
    out_ << "U = {";
    for (std::size_t i = 0; i < view.constraints.size(); ++i) {
      out_ << (i ? ", " : "") << view.constraints[i].to_string();
    }
    out_ << "}\n";
    out_ << "Prover moves:";
    for (const auto& m : moves) out_ << " [" << m.to_string() << "]";
    out_ << (moves.empty() ? " none" : "") << "\n";
    std::vector<Polynomial> replies;
    for (const auto& m : moves) {
      while (true) {
        out_ << "b for a = " << m.to_string() << "> " << std::flush;
        std::string line;
        if (!std::getline(in_, line)) throw Resigned{};
        line = trim(line);
        if (line == "?") {
          out_ << kReplHelp;
          continue;
        }
        try {
          replies.push_back(view.ring->parse_polynomial(line));
          break;
        } catch (const Error& e) {
          out_ << "not an element: " << e.what() << " (? for help)\n";
        }
      }
    }
    return replies;
  }
  std::string name() const override { return "human"; }

 private:
  std::istream& in_;
  std::ostream& out_;
};

int cmd_repl(const MatchConfig& cfg, std::istream& in, std::ostream& out) {
  const Prepared p = prepare(cfg);
  const HumanDelayer human(in, out);
  out << "J_" << p.budget << "(" << p.ring->to_string() << ", " << p.x.to_string() << ", "
      << p.x_prime.to_string() << "), Prover " << (p.prover ? p.prover->name() : "leaf") << "\n";
  PlayResult r;
  try {
    r = referee_play_full(p.ring, p.x, p.x_prime, p.budget, p.prover, human);
  } catch (const Resigned&) {
    out << "\nDelayer resigned.\n";
    return kExitProverWins;
  } catch (const Error& e) {
    throw std::runtime_error(e.what());
  }
  const Transcript& t = r.transcript;
  out << "winner: " << t.winner << "\n";
  if (t.diagnosis) out << "diagnosis: " << *t.diagnosis << "\n";
  if (t.certificate) {
    out << "certificate: " << t.x_prime << "^" << t.certificate->exponent << " = sum of\n";
    for (const auto& [idx, cof] : t.certificate->cofactors) {
      out << "  (" << cof << ") * (" << r.generators[idx].to_string() << ")\n";
    }
  }
  if (!cfg.out.empty()) {
    std::ofstream f(cfg.out);
    if (!f) throw ConfigError("cannot write " + cfg.out);
    f << to_json(t) << "\n";
  }
  return t.prover_won() ? kExitProverWins : kExitDelayerWins;
}

int cmd_verify(const std::string& path, std::istream& in, std::ostream& out) {
  std::stringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
  } else {
    std::ifstream f(path);
    if (!f) throw ConfigError("cannot read " + path);
    buf << f.rdbuf();
  }
  const VerifyResult v = verify_transcript_json(buf.str());
  out << (v.ok ? "valid" : "invalid") << "\n";
  for (const auto& d : v.diagnosis) out << "  " << d << "\n";
  return v.ok ? kExitProverWins : kExitDelayerWins;
}

int cmd_alpha(const std::vector<std::string>& rings, std::uint64_t max_budget, std::ostream& out) {
  std::vector<FiniteRingTable> tables;
  for (const auto& text : rings) {
    try {
      tables.push_back(enumerate_finite(RingPresentation::parse(text)));
    } catch (const Error& e) {
      throw ConfigError(e.what());
    }
  }
  out << "ring,x,xPrime,minimalAlpha\n";
  auto show = [](const std::optional<std::uint64_t>& a) { return a ? std::to_string(*a) : std::string("NONE"); };
  for (const auto& t : tables) {
    const std::string name = csv_field(t.ring()->to_string());
    std::optional<std::uint64_t> ring_alpha = 0;
    for (std::size_t x = 0; x < t.size(); ++x) {
      const auto a = minimal_alpha(t, x, x, max_budget);
      const std::string e = csv_field(t.element(x).to_string());
      out << name << "," << e << "," << e << "," << show(a) << "\n";
      ring_alpha = (a && ring_alpha) ? std::optional<std::uint64_t>(std::max(*a, *ring_alpha)) : std::nullopt;
    }
    out << name << ",*,*," << show(ring_alpha) << "\n";
  }
  return kExitProverWins;
}

struct RefuteConfig {
  std::string family = "Z";
  long n = 2;
  std::string ring = "ZZ[X]";
  std::string var;
  long max_moves = -1;
  long max_abs = -1;
  std::uint32_t max_deg = 1;
};

int cmd_refute(const RefuteConfig& cfg, std::ostream& out) {
  RefutationSummary s;
  try {
    if (cfg.family == "Z") {
      s = refute_z_family(Integer(cfg.n), cfg.max_moves < 0 ? 3 : cfg.max_moves, cfg.max_abs < 0 ? 10 : cfg.max_abs);
    } else if (cfg.family == "poly") {
      const RingPtr ring = RingPresentation::parse(cfg.ring);
      if (ring->vars().empty()) throw ConfigError("refute poly needs a polynomial ring");
      const std::string var = cfg.var.empty() ? ring->vars().back() : cfg.var;
      s = refute_poly_family(ring, var, cfg.max_moves < 0 ? 2 : cfg.max_moves, cfg.max_deg,
                             cfg.max_abs < 0 ? 1 : cfg.max_abs);
    } else {
      throw ConfigError("unknown family '" + cfg.family + "' (Z or poly)");
    }
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kParseError || e.code() == ErrorCode::kUnknownVariable ||
        e.code() == ErrorCode::kInvalidArgument) {
      throw ConfigError(e.what());
    }
    throw std::runtime_error(e.what());
  }
  out << "refuted " << s.refuted << "/" << s.games << "\n";
  for (const auto& f : s.failures) out << "  not refuted: " << f << "\n";
  return s.refuted == s.games ? kExitProverWins : kExitDelayerWins;
}

void add_match_options(CLI::App* cmd, MatchConfig& cfg, bool with_delayer) {
  cmd->add_option("--ring", cfg.ring, "ring, e.g. \"ZZ[x]/(x^2 - 2)\"")->required();
  cmd->add_option("--x", cfg.x, "the element x")->required();
  cmd->add_option("--xprime", cfg.x_prime, "the target x' (default: x)");
  cmd->add_option("--budget", cfg.budget, "initial budget (default: the prover's own)");
  cmd->add_option("--prover", cfg.prover,
                  "auto | euclideanDim1 | zeroDim | polyLift | leaf | scripted:a,b;c (rounds split by ;)");
  if (with_delayer) {
    cmd->add_option("--delayer", cfg.delayer,
                    "random[:seed[:deg[:abs]]] | refuterZ | refuterPoly | jacWitness:u1,u2");
    cmd->add_option("--seed", cfg.seed, "seed for the random delayer");
    cmd->add_option("--deg", cfg.deg, "random delayer: largest exponent per variable");
    cmd->add_option("--abs", cfg.abs, "random delayer: largest coefficient size");
  }
  cmd->add_option("--out", cfg.out, "write the transcript here instead of stdout");
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Prover-Delayer games on Jacobson rings"};
  app.require_subcommand(1);

  MatchConfig play_cfg, repl_cfg;
  auto* play = app.add_subcommand("play", "play one match and write its transcript");
  add_match_options(play, play_cfg, true);
  auto* repl = app.add_subcommand("repl", "play as the Delayer against a Prover strategy");
  add_match_options(repl, repl_cfg, false);

  RefuteConfig refute_cfg;
  auto* refute = app.add_subcommand("refute", "run a diagonal refuter against every move list of a family");
  refute->add_option("--family", refute_cfg.family, "Z or poly");
  refute->add_option("--N", refute_cfg.n, "Z family: the integer N");
  refute->add_option("--ring", refute_cfg.ring, "poly family: the ring A[X]");
  refute->add_option("--var", refute_cfg.var, "poly family: the variable X (default: last)");
  refute->add_option("--max-moves", refute_cfg.max_moves, "longest move list");
  refute->add_option("--max-abs", refute_cfg.max_abs, "largest coefficient size in moves");
  refute->add_option("--max-deg", refute_cfg.max_deg, "poly family: largest move degree");

  std::vector<std::string> alpha_rings;
  std::uint64_t alpha_max = 8;
  auto* alpha = app.add_subcommand("alpha", "exact minimal budgets on finite rings (CSV)");
  alpha->add_option("rings", alpha_rings, "finite rings")->required();
  alpha->add_option("--max-budget", alpha_max, "give up above this budget");

  std::string verify_path;
  auto* verify = app.add_subcommand("verify", "check a transcript file ('-' for stdin)");
  verify->add_option("path", verify_path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kExitConfigError;
  }

  try {
    if (*play) return cmd_play(play_cfg, out);
    if (*repl) return cmd_repl(repl_cfg, in, out);
    if (*refute) return cmd_refute(refute_cfg, out);
    if (*alpha) return cmd_alpha(alpha_rings, alpha_max, out);
    if (*verify) return cmd_verify(verify_path, in, out);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const std::exception& e) {
    err << "engine error: " << e.what() << "\n";
    return kExitEngineError;
  }
  return kExitConfigError;
}

}  // namespace jacarena
