#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "symdyn/graph.hpp"
#include "symdyn/word.hpp"

namespace symdyn {

struct SyncCertificate {
  Word m;
  bool not_subword_of_forbidden = false;
  bool in_language = false;
  // um, mv in L implies umv in L for |u|, |v| <= horizon.
  bool synchronizing_at_horizon = false;
  std::string witness;  // "u|v" for a failing pair
  bool passed() const { return not_subword_of_forbidden && in_language && synchronizing_at_horizon; }
};

struct StructureReport {
  std::size_t horizon = 0;
  bool nonempty = false;
  // For all u, w in L_j, j <= max(1, horizon/3), some v with |v| <= horizon - 2j
  // gives uvw in L. A negative answer only means "not verified".
  bool irreducible_at_horizon = false;
  std::string irreducibility_witness;  // "u|w" with no connecting word found
  std::optional<SyncCertificate> sync;
  bool horizon_limited = true;
};

StructureReport check_structure(const LabeledGraph& system, const std::vector<Word>& forbidden, std::size_t horizon,
                                const std::optional<Word>& candidate = std::nullopt);

}  // namespace symdyn
