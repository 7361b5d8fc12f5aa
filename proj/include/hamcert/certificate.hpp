#ifndef HAMCERT_CERTIFICATE_HPP
#define HAMCERT_CERTIFICATE_HPP

#include <string>
#include <variant>

#include "hamcert/connectivity.hpp"
#include "hamcert/hamilton.hpp"
#include "hamcert/induced_search.hpp"

namespace hamcert {

/// Output of the certifying deciders: a Hamiltonian cycle, or an induced
/// obstruction, or (for plain non-Hamiltonicity) a toughness witness.
using Certificate = std::variant<HamCycle, Embedding, ToughnessWitness>;

bool validate(const Graph& g, const Certificate& c);

inline bool is_cycle(const Certificate& c) { return std::holds_alternative<HamCycle>(c); }

/// One line, no newline:
///   CYCLE 0 1 2 3
///   OBSTRUCTION theta 2,2,2 map=0,2,1,3,4
///   TOUGHNESS x=1,3 components=3
std::string format_certificate(const Certificate& c);

}  // namespace hamcert

#endif  // HAMCERT_CERTIFICATE_HPP
