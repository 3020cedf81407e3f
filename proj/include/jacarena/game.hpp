#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "jacarena/nil.hpp"
#include "jacarena/ring.hpp"

namespace jacarena {

class ProverStrategy;
using StrategyPtr = std::shared_ptr<const ProverStrategy>;

// One round of Prover play: the moves, and how to continue once the Delayer
// has answered them. `uses_replies` is a hint that the continuation ignores
// the replies, which lets wrappers skip converting them.
struct ProverTurn {
  std::vector<Polynomial> moves;
  bool uses_replies = true;
  std::function<StrategyPtr(const std::vector<Polynomial>&)> resume;
};

// A node of a strategy tree. Each strategy is bound to the ring it reasons
// in; that ring is a quotient of the match ring, so moves and replies pass
// through unchanged.
class ProverStrategy {
 public:
  virtual ~ProverStrategy() = default;
  // Rounds this node needs; 0 means the target is already nilpotent.
  virtual std::uint64_t budget() const = 0;
  // Called only when budget() > 0.
  virtual ProverTurn open() const = 0;
  virtual std::string name() const = 0;
};

StrategyPtr leaf_strategy();
bool is_leaf(const StrategyPtr& s);

// What a Delayer may look at before answering.
struct DelayerView {
  const RingPtr& ring;
  const Polynomial& x;
  const Polynomial& x_prime;
  std::uint64_t budget;  // budget at the start of this round
  std::size_t round;
  const std::vector<Polynomial>& constraints;
};

class DelayerStrategy {
 public:
  virtual ~DelayerStrategy() = default;
  virtual std::vector<Polynomial> reply(const DelayerView& view, const std::vector<Polynomial>& moves) const = 0;
  virtual std::string name() const = 0;
};
using DelayerPtr = std::shared_ptr<const DelayerStrategy>;

struct TranscriptRound {
  std::vector<std::string> moves;
  std::vector<std::string> replies;
  std::uint64_t next_budget = 0;
  friend bool operator==(const TranscriptRound&, const TranscriptRound&) = default;
};

struct TranscriptCertificate {
  std::uint64_t exponent = 0;
  std::map<std::size_t, std::string> cofactors;  // nonzero entries only
  friend bool operator==(const TranscriptCertificate&, const TranscriptCertificate&) = default;
};

struct Transcript {
  std::string ring;
  std::string x;
  std::string x_prime;
  std::uint64_t budget = 0;
  std::vector<TranscriptRound> rounds;
  std::string winner;  // "prover" or "delayer"
  std::optional<TranscriptCertificate> certificate;
  std::string prover;
  std::string delayer;
  std::optional<std::string> forfeit;    // agent that gave up, with the reason in diagnosis
  std::optional<std::string> diagnosis;
  std::string digest;

  bool prover_won() const { return winner == "prover"; }
  friend bool operator==(const Transcript&, const Transcript&) = default;
};

// Checksum over every field except the digest itself.
std::string transcript_digest(const Transcript& t);
std::string to_json(const Transcript& t, int indent = 2);
// Throws kParseError on malformed input.
Transcript transcript_from_json(const std::string& text);

// Generators the leaf check runs against: the ring relations followed by the
// constraint 1 - b (1 - a x) of every move/reply pair, in round order.
std::vector<Polynomial> constraint_generators(const RingPtr& ring, const Polynomial& x,
                                              const std::vector<std::vector<Polynomial>>& moves,
                                              const std::vector<std::vector<Polynomial>>& replies);

struct PlayResult {
  Transcript transcript;
  RingPtr ring;
  std::vector<Polynomial> generators;       // relations, then U
  std::optional<NilCertificate> certificate;
};

// Plays J_alpha(ring, x, x') to the end. Errors thrown by the Prover end the
// match as a forfeit; Delayer errors propagate, and a reply list of the wrong
// length raises kIllegalMove.
PlayResult referee_play_full(const RingPtr& ring, const Polynomial& x, const Polynomial& x_prime,
                             std::uint64_t alpha, const StrategyPtr& prover, const DelayerStrategy& delayer);
Transcript referee_play(const RingPtr& ring, const Polynomial& x, const Polynomial& x_prime, std::uint64_t alpha,
                        const StrategyPtr& prover, const DelayerStrategy& delayer);

struct VerifyResult {
  bool ok = true;
  std::vector<std::string> diagnosis;
};

// Replays the rules and recomputes the outcome independently.
VerifyResult verify_transcript(const Transcript& t);
VerifyResult verify_transcript_json(const std::string& text);

// Answers each move a with the cofactor q of 1 - a x in
// 1 = sum c_i w_i + q (1 - a x), w = relations followed by U0.
class JacWitnessDelayer : public DelayerStrategy {
 public:
  explicit JacWitnessDelayer(std::vector<Polynomial> u0) : u0_(std::move(u0)) {}

  struct Witness {
    Polynomial reply;
    std::vector<Polynomial> cofactors;  // over relations followed by U0
  };
  // Throws kNotInJacobsonRadical when 1 is not in <relations, U0, 1 - a x>.
  Witness witness(const RingPtr& ring, const Polynomial& x, const Polynomial& a) const;

  std::vector<Polynomial> reply(const DelayerView& view, const std::vector<Polynomial>& moves) const override;
  std::string name() const override;

 private:
  std::vector<Polynomial> u0_;
};

// Plays `strategy` against the witness Delayer and rewrites the final
// certificate over the relations followed by U0.
NilCertificate extract_nil_from_jac(const RingPtr& ring, const Polynomial& x, const Polynomial& x_prime,
                                    std::uint64_t alpha, const StrategyPtr& strategy,
                                    const std::vector<Polynomial>& u0);

}  // namespace jacarena
