#include "jacarena/game.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cstdio>

#include "jacarena/error.hpp"
#include "jacarena/groebner.hpp"

namespace jacarena {

namespace {

using json = nlohmann::ordered_json;

class Leaf : public ProverStrategy {
 public:
  std::uint64_t budget() const override { return 0; }
  ProverTurn open() const override {
    return ProverTurn{{}, false, [](const std::vector<Polynomial>&) { return leaf_strategy(); }};
  }
  std::string name() const override { return "leaf"; }
};

json to_json_value(const Transcript& t, bool with_digest) {
  json j;
  j["ring"] = t.ring;
  j["x"] = t.x;
  j["xPrime"] = t.x_prime;
  j["budget"] = t.budget;
  json rounds = json::array();
  for (const auto& r : t.rounds) {
    json jr;
    jr["moves"] = r.moves;
    jr["replies"] = r.replies;
    jr["nextBudget"] = r.next_budget;
    rounds.push_back(std::move(jr));
  }
  j["rounds"] = std::move(rounds);
  j["winner"] = t.winner;
  if (t.certificate) {
    json cof = json::object();
    for (const auto& [idx, text] : t.certificate->cofactors) cof[std::to_string(idx)] = text;
    j["certificate"] = json{{"e", t.certificate->exponent}, {"cofactors", std::move(cof)}};
  } else {
    j["certificate"] = nullptr;
  }
  j["prover"] = t.prover;
  j["delayer"] = t.delayer;
  if (t.forfeit) j["forfeit"] = *t.forfeit;
  if (t.diagnosis) j["diagnosis"] = *t.diagnosis;
  if (with_digest) j["digest"] = t.digest;
  return j;
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::vector<std::string> strings_of(const std::vector<Polynomial>& ps) {
  std::vector<std::string> out;
  out.reserve(ps.size());
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}

TranscriptCertificate to_transcript_certificate(const NilCertificate& cert) {
  TranscriptCertificate tc;
  tc.exponent = cert.exponent;
  for (std::size_t i = 0; i < cert.cofactors.size(); ++i) {
    if (!cert.cofactors[i].is_zero()) tc.cofactors[i] = cert.cofactors[i].to_string();
  }
  return tc;
}

}  // namespace

StrategyPtr leaf_strategy() {
  static const StrategyPtr leaf = std::make_shared<Leaf>();
  return leaf;
}

bool is_leaf(const StrategyPtr& s) { return !s || s->budget() == 0; }

std::string transcript_digest(const Transcript& t) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(to_json_value(t, false).dump())));
  return buf;
}

std::string to_json(const Transcript& t, int indent) { return to_json_value(t, true).dump(indent); }

Transcript transcript_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParseError, std::string("transcript: ") + e.what());
  }
  try {
    Transcript t;
    t.ring = j.at("ring").get<std::string>();
    t.x = j.at("x").get<std::string>();
    t.x_prime = j.at("xPrime").get<std::string>();
    t.budget = j.at("budget").get<std::uint64_t>();
    for (const auto& jr : j.at("rounds")) {
      TranscriptRound r;
      r.moves = jr.at("moves").get<std::vector<std::string>>();
      r.replies = jr.at("replies").get<std::vector<std::string>>();
      r.next_budget = jr.at("nextBudget").get<std::uint64_t>();
      t.rounds.push_back(std::move(r));
    }
    t.winner = j.at("winner").get<std::string>();
    const auto& jc = j.at("certificate");
    if (!jc.is_null()) {
      TranscriptCertificate c;
      c.exponent = jc.at("e").get<std::uint64_t>();
      for (const auto& [key, value] : jc.at("cofactors").items()) {
        std::size_t used = 0;
        const unsigned long long idx = std::stoull(key, &used);
        if (used != key.size()) throw Error(ErrorCode::kParseError, "transcript: bad generator index " + key);
        c.cofactors[idx] = value.get<std::string>();
      }
      t.certificate = std::move(c);
    }
    t.prover = j.value("prover", "");
    t.delayer = j.value("delayer", "");
    if (j.contains("forfeit")) t.forfeit = j.at("forfeit").get<std::string>();
    if (j.contains("diagnosis")) t.diagnosis = j.at("diagnosis").get<std::string>();
    t.digest = j.value("digest", "");
    return t;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParseError, std::string("transcript: ") + e.what());
  } catch (const std::invalid_argument&) {
    throw Error(ErrorCode::kParseError, "transcript: bad generator index");
  } catch (const std::out_of_range&) {
    throw Error(ErrorCode::kParseError, "transcript: generator index out of range");
  }
}

std::vector<Polynomial> constraint_generators(const RingPtr& ring, const Polynomial& x,
                                              const std::vector<std::vector<Polynomial>>& moves,
                                              const std::vector<std::vector<Polynomial>>& replies) {
  std::vector<Polynomial> gens = ring->relations();
  const Polynomial one = ring->constant(1);
  for (std::size_t r = 0; r < moves.size(); ++r) {
    for (std::size_t i = 0; i < moves[r].size(); ++i) {
      gens.push_back((one - replies[r][i] * (one - moves[r][i] * x)).in_space(ring->space()));
    }
  }
  return gens;
}

PlayResult referee_play_full(const RingPtr& ring, const Polynomial& x_in, const Polynomial& x_prime_in,
                             std::uint64_t alpha, const StrategyPtr& prover, const DelayerStrategy& delayer) {
  const Polynomial x = ring->reduce(x_in);
  const Polynomial x_prime = ring->reduce(x_prime_in);
  Transcript t;
  t.ring = ring->to_string();
  t.x = x.to_string();
  t.x_prime = x_prime.to_string();
  t.budget = alpha;
  t.prover = prover ? prover->name() : "leaf";
  t.delayer = delayer.name();

  std::vector<std::vector<Polynomial>> all_moves, all_replies;
  std::vector<Polynomial> constraints;
  StrategyPtr strategy = prover ? prover : leaf_strategy();
  std::uint64_t tau = alpha;
  const Polynomial one = ring->constant(1);

  auto forfeit = [&](const std::string& why) {
    t.forfeit = "prover";
    t.diagnosis = why;
  };

  while (tau > 0 && !t.forfeit) {
    ProverTurn turn;
    std::vector<Polynomial> moves;
    try {
      if (!is_leaf(strategy)) turn = strategy->open();
      for (const auto& m : turn.moves) moves.push_back(ring->reduce(m));
    } catch (const Error& e) {
      forfeit(e.what());
      break;
    }
    const DelayerView view{ring, x, x_prime, tau, all_moves.size(), constraints};
    std::vector<Polynomial> replies = delayer.reply(view, moves);
    if (replies.size() != moves.size()) {
      throw Error(ErrorCode::kIllegalMove, "delayer answered " + std::to_string(replies.size()) + " of " +
                                               std::to_string(moves.size()) + " moves");
    }
    for (auto& b : replies) {
      try {
        b = ring->reduce(b);
      } catch (const Error& e) {
        throw Error(ErrorCode::kIllegalMove, std::string("delayer reply outside the ring: ") + e.what());
      }
    }
    for (std::size_t i = 0; i < moves.size(); ++i) {
      constraints.push_back((one - replies[i] * (one - moves[i] * x)).in_space(ring->space()));
    }

    StrategyPtr next = leaf_strategy();
    std::uint64_t declared = 0;
    try {
      if (!is_leaf(strategy)) next = turn.resume(replies);
      if (!next) next = leaf_strategy();
      // A strategy started with less budget than it asked for keeps playing
      // what it can; the remaining rounds simply run out.
      declared = std::min<std::uint64_t>(next->budget(), tau - 1);
    } catch (const Error& e) {
      forfeit(e.what());
    }
    t.rounds.push_back(TranscriptRound{strings_of(moves), strings_of(replies), declared});
    all_moves.push_back(std::move(moves));
    all_replies.push_back(std::move(replies));
    tau = declared;
    strategy = next;
  }

  PlayResult out;
  out.ring = ring;
  out.generators = constraint_generators(ring, x, all_moves, all_replies);
  if (!t.forfeit) out.certificate = nil_member(x_prime, out.generators);
  t.winner = out.certificate ? "prover" : "delayer";
  if (out.certificate) t.certificate = to_transcript_certificate(*out.certificate);
  t.digest = transcript_digest(t);
  out.transcript = std::move(t);
  return out;
}

Transcript referee_play(const RingPtr& ring, const Polynomial& x, const Polynomial& x_prime, std::uint64_t alpha,
                        const StrategyPtr& prover, const DelayerStrategy& delayer) {
  return referee_play_full(ring, x, x_prime, alpha, prover, delayer).transcript;
}

VerifyResult verify_transcript(const Transcript& t) {
  VerifyResult res;
  auto fail = [&](std::string why) {
    res.ok = false;
    res.diagnosis.push_back(std::move(why));
  };

  if (t.digest != transcript_digest(t)) fail("digest mismatch");

  RingPtr ring;
  Polynomial x, x_prime;
  try {
    ring = RingPresentation::parse(t.ring);
    x = ring->reduce(ring->parse_polynomial(t.x));
    x_prime = ring->reduce(ring->parse_polynomial(t.x_prime));
  } catch (const Error& e) {
    fail(std::string("unreadable header: ") + e.what());
    return res;
  }
  if (x.to_string() != t.x) fail("x is not in normal form");
  if (x_prime.to_string() != t.x_prime) fail("xPrime is not in normal form");

  std::vector<std::vector<Polynomial>> moves, replies;
  std::uint64_t tau = t.budget;
  for (std::size_t r = 0; r < t.rounds.size(); ++r) {
    const auto& round = t.rounds[r];
    const std::string at = " in round " + std::to_string(r + 1);
    if (tau == 0) {
      fail("round played at budget 0" + at);
      break;
    }
    if (round.moves.size() != round.replies.size()) {
      fail("reply count mismatch" + at);
      return res;
    }
    if (round.next_budget >= tau) fail("budget not decreased" + at);
    tau = round.next_budget;
    std::vector<Polynomial> ms, bs;
    try {
      for (const auto& s : round.moves) ms.push_back(ring->reduce(ring->parse_polynomial(s)));
      for (const auto& s : round.replies) bs.push_back(ring->reduce(ring->parse_polynomial(s)));
    } catch (const Error& e) {
      fail("unreadable element" + at + ": " + e.what());
      return res;
    }
    for (std::size_t i = 0; i < ms.size(); ++i) {
      if (ms[i].to_string() != round.moves[i]) fail("move not in normal form" + at);
      if (bs[i].to_string() != round.replies[i]) fail("reply not in normal form" + at);
    }
    moves.push_back(std::move(ms));
    replies.push_back(std::move(bs));
  }
  if (!t.forfeit && tau != 0) fail("match stopped before the budget reached 0");

  const std::vector<Polynomial> gens = constraint_generators(ring, x, moves, replies);
  if (t.winner != "prover" && t.winner != "delayer") {
    fail("unknown winner '" + t.winner + "'");
    return res;
  }
  if (t.forfeit) {
    if (*t.forfeit != "prover") fail("unknown forfeiting agent '" + *t.forfeit + "'");
    if (t.winner != "delayer") fail("forfeited match not won by delayer");
    if (t.certificate) fail("certificate recorded for a forfeited match");
    return res;
  }
  if (t.winner == "prover") {
    if (!t.certificate) {
      fail("prover win without certificate");
      return res;
    }
    NilCertificate cert;
    cert.exponent = t.certificate->exponent;
    cert.cofactors.assign(gens.size(), Polynomial(ring->space()));
    for (const auto& [idx, text] : t.certificate->cofactors) {
      if (idx >= gens.size()) {
        fail("certificate index " + std::to_string(idx) + " out of range");
        return res;
      }
      try {
        cert.cofactors[idx] = ring->parse_polynomial(text);
      } catch (const Error& e) {
        fail(std::string("unreadable certificate cofactor: ") + e.what());
        return res;
      }
    }
    if (!certificate_holds(x_prime, gens, cert)) fail("certificate does not verify");
  } else {
    if (t.certificate) fail("certificate recorded for a delayer win");
    if (in_nilradical(x_prime, gens)) fail("xPrime is nilpotent modulo the constraints but delayer recorded as winner");
  }
  return res;
}

VerifyResult verify_transcript_json(const std::string& text) {
  try {
    return verify_transcript(transcript_from_json(text));
  } catch (const Error& e) {
    return VerifyResult{false, {e.what()}};
  }
}

JacWitnessDelayer::Witness JacWitnessDelayer::witness(const RingPtr& ring, const Polynomial& x,
                                                      const Polynomial& a) const {
  std::vector<Polynomial> gens = ring->relations();
  for (const auto& u : u0_) gens.push_back(u.in_space(ring->space()));
  const Polynomial one = ring->constant(1);
  gens.push_back(one - a * x);
  auto cof = ideal_member(one, gens);
  if (!cof) throw Error(ErrorCode::kNotInJacobsonRadical, "1 is not in <U0, 1 - a*x> for a = " + a.to_string());
  Witness w;
  w.reply = cof->back().in_space(ring->space());
  cof->pop_back();
  for (auto& c : *cof) w.cofactors.push_back(c.in_space(ring->space()));
  return w;
}

std::vector<Polynomial> JacWitnessDelayer::reply(const DelayerView& view, const std::vector<Polynomial>& moves) const {
  std::vector<Polynomial> out;
  for (const auto& a : moves) out.push_back(witness(view.ring, view.x, a).reply);
  return out;
}

std::string JacWitnessDelayer::name() const {
  std::string s = "jacWitness(";
  for (std::size_t i = 0; i < u0_.size(); ++i) s += (i ? "," : "") + u0_[i].to_string();
  return s + ")";
}

NilCertificate extract_nil_from_jac(const RingPtr& ring, const Polynomial& x_in, const Polynomial& x_prime_in,
                                    std::uint64_t alpha, const StrategyPtr& strategy,
                                    const std::vector<Polynomial>& u0) {
  const JacWitnessDelayer delayer(u0);
  const Polynomial x = ring->reduce(x_in);
  const Polynomial x_prime = ring->reduce(x_prime_in);
  const PlayResult played = referee_play_full(ring, x, x_prime, alpha, strategy, delayer);
  if (!played.certificate) {
    throw Error(ErrorCode::kInvalidArgument, "strategy lost against the witness delayer" +
                                                 (played.transcript.diagnosis ? ": " + *played.transcript.diagnosis
                                                                              : std::string()));
  }
  const std::size_t nrel = ring->relations().size();
  NilCertificate out;
  out.exponent = played.certificate->exponent;
  out.cofactors.assign(nrel + u0.size(), Polynomial(ring->space()));
  for (std::size_t i = 0; i < nrel; ++i) out.cofactors[i] = played.certificate->cofactors[i];
  // Each constraint 1 - b(1 - a x) equals sum c_i w_i by the witness identity.
  std::size_t g = nrel;
  for (const auto& round : played.transcript.rounds) {
    for (const auto& move : round.moves) {
      const auto w = delayer.witness(ring, x, ring->parse_polynomial(move));
      const Polynomial& coeff = played.certificate->cofactors[g++];
      for (std::size_t i = 0; i < w.cofactors.size(); ++i) out.cofactors[i] += coeff * w.cofactors[i];
    }
  }
  std::vector<Polynomial> gens = ring->relations();
  for (const auto& u : u0) gens.push_back(u.in_space(ring->space()));
  if (!certificate_holds(x_prime, gens, out)) {
    throw Error(ErrorCode::kInvalidCertificate, "rewritten certificate does not verify");
  }
  return out;
}

}  // namespace jacarena
