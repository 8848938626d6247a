#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "symdyn/escape.hpp"
#include "symdyn/gap_shift.hpp"
#include "symdyn/graph.hpp"
#include "symdyn/word.hpp"

namespace symdyn::cli {

inline constexpr int kSchemaVersion = 1;

struct FullSystem {
  std::size_t n;
};
struct SftSystem {
  DirectedGraph a;
};
struct SoficSystem {
  LabeledGraph g;
};
struct SgapSystem {
  GapSet s;
};
struct DgapSystem {
  unsigned d;
};
using System = std::variant<FullSystem, SftSystem, SoficSystem, SgapSystem, DgapSystem>;

// Malformed job files.
struct JobError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Job {
  System system;
  std::vector<Word> words;  // "word" or "words"
  std::optional<Word> u, w, candidate;
  std::optional<EventuallyPeriodicPoint> family;
  std::vector<EventuallyPeriodicPoint> points;
  std::optional<std::size_t> alphabet;  // "N" for escape jobs
  std::size_t n_lo = 4, n_hi = 14;
  std::optional<std::size_t> nmax, horizon;
  std::optional<double> tol;
};

Job parse_job(const nlohmann::json& j);
Job load_job(const std::string& path);

std::string system_name(const System& s);
// Presentation whose label language is the system's language. SFT systems
// are presented on their edges, so words are walks.
LabeledGraph presentation(const System& s);

}  // namespace symdyn::cli
