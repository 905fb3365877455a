#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "frobkit/ideal.hpp"

namespace frobkit {

/// A parsed session file: one ring header plus named bindings.
///
/// Grammar (line oriented; '#' starts a comment, blank lines are ignored):
///
///   char: 5
///   vars: a b c
///   order: grevlex            # lex | grevlex | block(k); default grevlex
///   poly u: b^4*(b-c)^4*(a-b)^4
///   int e: 1
///   ideal I: a*b - b*c, b*c - b^2
///   ideal J:
///     a*b - b*c
///     b*c - b^2
///
/// The header lines must precede all bindings. A line without a colon
/// continues the most recent ideal binding (one generator per line, optional
/// trailing comma). Binding names are unique across kinds.
struct SessionFile {
  RingPtr ring;
  std::map<std::string, Ideal> ideals;
  std::map<std::string, Polynomial> polys;
  std::map<std::string, std::int64_t> ints;
};

/// Parses session text. `source` names the input in diagnostics. All
/// polynomials are parsed eagerly in the declared ring; every failure is a
/// ParseError carrying a 1-based line number.
SessionFile parse_session(const std::string& text, const std::string& source = "<session>");

/// Reads and parses a session file; I/O failures are reported as ParseError
/// with line 0.
SessionFile load_session(const std::string& path);

}  // namespace frobkit
