#include "pairlab/adversaries.hpp"

#include "pairlab/errors.hpp"

namespace pairlab {

BehaviorSpec::Kind BehaviorSpec::kind_from_string(const std::string& s) {
  if (s == "honest") return Kind::honest;
  if (s == "semi_honest") return Kind::semi_honest;
  if (s == "rho_substitution") return Kind::rho_substitution;
  if (s == "index_tamper") return Kind::index_tamper;
  if (s == "random_response") return Kind::random_response;
  throw ConfigError("unknown behavior kind: " + s);
}

std::string BehaviorSpec::kind_to_string(Kind k) {
  switch (k) {
    case Kind::honest: return "honest";
    case Kind::semi_honest: return "semi_honest";
    case Kind::rho_substitution: return "rho_substitution";
    case Kind::index_tamper: return "index_tamper";
    case Kind::random_response: return "random_response";
  }
  throw ConfigError("unknown behavior kind");
}

ServerBehavior::ServerBehavior(const BehaviorSpec& spec, const PairingParams& params)
    : spec_(spec), params_(params), rng_(derive_seed(spec.seed, 0xBE44)) {}

Response ServerBehavior::respond(const Algebra& alg, const Query& query) {
  switch (spec_.kind) {
    case BehaviorSpec::Kind::honest:
      return honest_eval(alg, query);

    case BehaviorSpec::Kind::semi_honest: {
      view_.push_back(query);
      return honest_eval(alg, query);
    }

    case BehaviorSpec::Kind::rho_substitution: {
      Response r = honest_eval(alg, query);
      if (r.values.size() <= kDeltaSlot) {
        throw ConfigError("rho_substitution needs a delta slot, query too short");
      }
      GTElem honest_delta = r.values[kDeltaSlot];
      GTElem rho;
      do {
        rho = alg.random_gt(rng_);
      } while (rho == honest_delta);
      r.values[kDeltaSlot] = rho;
      injected_.push_back(rho);
      return r;
    }

    case BehaviorSpec::Kind::index_tamper: {
      Response r = honest_eval(alg, query);
      if (spec_.index >= r.values.size()) {
        throw ConfigError("index_tamper index " + std::to_string(spec_.index) +
                          " out of range for response of length " +
                          std::to_string(r.values.size()));
      }
      // factor != 1: exponent drawn from [1, q); sampling is not billed
      GTElem factor =
          Algebra(params_).gt_pow(GTElem{params_.gt_gen}, Scalar{rng_.nonzero_below(params_.q)});
      r.values[spec_.index] = alg.gt_mul(r.values[spec_.index], factor);
      injected_.push_back(factor);
      return r;
    }

    case BehaviorSpec::Kind::random_response: {
      Response r;
      r.values.reserve(query.pairs.size());
      for (std::size_t i = 0; i < query.pairs.size(); ++i) {
        r.values.push_back(alg.random_gt(rng_));
      }
      return r;
    }
  }
  throw ConfigError("unknown behavior kind");
}

}  // namespace pairlab
