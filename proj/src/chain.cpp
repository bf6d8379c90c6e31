#include "morsespec/chain.hpp"

#include <algorithm>
#include <iterator>

#include "morsespec/error.hpp"

namespace morsespec {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DimensionTooSmall: return "dimension-too-small";
    case ErrorKind::MalformedSimplex: return "malformed-simplex";
    case ErrorKind::EmptyInput: return "empty-input";
    case ErrorKind::ArityMismatch: return "arity-mismatch";
    case ErrorKind::NonFinite: return "non-finite";
    case ErrorKind::ComplexMismatch: return "complex-mismatch";
    case ErrorKind::CycleDetected: return "cycle-detected";
    case ErrorKind::NonCriticalSupport: return "non-critical-support";
    case ErrorKind::ZeroChain: return "zero-chain";
    case ErrorKind::ZeroClass: return "zero-class";
    case ErrorKind::NonCycle: return "non-cycle";
    case ErrorKind::SpectrumMismatch: return "spectrum-mismatch";
    case ErrorKind::PreconditionViolated: return "precondition-violated";
    case ErrorKind::StepCountTooSmall: return "step-count-too-small";
    case ErrorKind::Domain: return "domain";
    case ErrorKind::Parse: return "parse";
  }
  return "unknown";
}

void add_into(std::vector<std::int32_t>& acc, std::span<const std::int32_t> other) {
  if (other.empty()) return;
  std::vector<std::int32_t> out;
  out.reserve(acc.size() + other.size());
  std::set_symmetric_difference(acc.begin(), acc.end(), other.begin(), other.end(),
                                std::back_inserter(out));
  acc.swap(out);
}

std::vector<std::int32_t> make_chain(std::vector<std::int32_t> ids) {
  std::sort(ids.begin(), ids.end());
  std::vector<std::int32_t> out;
  out.reserve(ids.size());
  for (std::size_t i = 0; i < ids.size();) {
    std::size_t j = i;
    while (j < ids.size() && ids[j] == ids[i]) ++j;
    if ((j - i) % 2 == 1) out.push_back(ids[i]);
    i = j;
  }
  return out;
}

}  // namespace morsespec
