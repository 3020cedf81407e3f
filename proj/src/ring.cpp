#include "jacarena/ring.hpp"

#include "jacarena/error.hpp"
#include "jacarena/parser.hpp"

namespace jacarena {

RingPresentation::RingPresentation(SpacePtr space, std::vector<Polynomial> relations, GroebnerBasis basis)
    : space_(std::move(space)), relations_(std::move(relations)), basis_(std::move(basis)) {}

RingPtr RingPresentation::create(SpacePtr space, std::vector<Polynomial> relations) {
  std::vector<Polynomial> rels;
  rels.reserve(relations.size());
  for (const auto& r : relations) rels.push_back(r.in_space(space));
  GroebnerBasis gb = groebner(rels);
  return RingPtr(new RingPresentation(std::move(space), std::move(rels), std::move(gb)));
}

RingPtr RingPresentation::create(CoefficientRing coeffs, std::vector<std::string> vars,
                                 std::vector<Polynomial> relations) {
  return create(make_space(std::move(coeffs), std::move(vars)), std::move(relations));
}

RingPtr RingPresentation::parse(std::string_view text) {
  RingSyntax syntax = parse_ring_syntax(text);
  return create(syntax.space, std::move(syntax.relations));
}

Polynomial RingPresentation::reduce(const Polynomial& p) const {
  const Polynomial lifted = p.in_space(space_);
  if (basis_.basis().empty()) return lifted;
  return basis_.reduce(lifted).in_space(space_);
}

Polynomial RingPresentation::parse_polynomial(std::string_view text) const {
  return jacarena::parse_polynomial(text, space_).in_space(space_);
}

std::string RingPresentation::to_string() const {
  std::string out = space_->coeffs.to_string();
  if (!space_->vars.empty()) {
    out += '[';
    for (std::size_t i = 0; i < space_->vars.size(); ++i) {
      if (i) out += ',';
      out += space_->vars[i];
    }
    out += ']';
  }
  if (!relations_.empty()) {
    out += "/(";
    for (std::size_t i = 0; i < relations_.size(); ++i) {
      if (i) out += ", ";
      out += relations_[i].to_string();
    }
    out += ')';
  }
  return out;
}

RingPtr quotient_extend(const RingPtr& ring, const std::vector<Polynomial>& extra) {
  std::vector<Polynomial> relations = ring->relations();
  std::vector<Polynomial> seed = ring->basis().basis();
  bool grew = false;
  for (const auto& e : extra) {
    Polynomial r = e.in_space(ring->space());
    relations.push_back(r);
    Polynomial nf = ring->reduce(r);
    if (!nf.is_zero()) {
      seed.push_back(std::move(nf));
      grew = true;
    }
  }
  GroebnerBasis gb = grew ? groebner(seed) : ring->basis();
  return RingPtr(new RingPresentation(ring->space(), std::move(relations), std::move(gb)));
}

RingElement::RingElement(RingPtr ring, const Polynomial& value)
    : ring_(std::move(ring)), value_(ring_->reduce(value)) {}

namespace {
void same_ring(const RingElement& a, const RingElement& b) {
  if (a.ring() != b.ring()) throw Error(ErrorCode::kIncompatibleRings, "elements of different presentations");
}
}  // namespace

RingElement operator+(const RingElement& a, const RingElement& b) {
  same_ring(a, b);
  return RingElement(a.ring_, a.value_ + b.value_);
}

RingElement operator-(const RingElement& a, const RingElement& b) {
  same_ring(a, b);
  return RingElement(a.ring_, a.value_ - b.value_);
}

RingElement operator*(const RingElement& a, const RingElement& b) {
  same_ring(a, b);
  return RingElement(a.ring_, a.value_ * b.value_);
}

RingElement RingElement::pow(std::uint64_t e) const {
  RingElement result(ring_, Polynomial::constant(ring_->space(), 1));
  RingElement base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

bool operator==(const RingElement& a, const RingElement& b) {
  same_ring(a, b);
  return a.value_ == b.value_;
}

RingElement parse_expr(std::string_view text, const RingPtr& ring) {
  return RingElement(ring, ring->parse_polynomial(text));
}

}  // namespace jacarena
