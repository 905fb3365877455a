#include <cctype>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <vector>

#include "frobkit/parse.hpp"
#include "frobkit/session.hpp"

namespace frobkit {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

bool valid_name(const std::string& name) {
  if (name.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(name[0])) && name[0] != '_') return false;
  for (char c : name) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return true;
}

struct PendingIdeal {
  std::string name;
  std::vector<Polynomial> generators;
};

class SessionParser {
 public:
  explicit SessionParser(const std::string& source) : source_(source) {}

  SessionFile run(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    while (std::getline(in, raw)) {
      ++line_;
      handle_line(raw);
    }
    close_pending();
    if (!session_.ring) fail("session declares no ring (missing 'char:' / 'vars:' header)");
    return std::move(session_);
  }

 private:
  [[noreturn]] void fail(const std::string& message, std::size_t column = 0) {
    throw ParseError(source_ + ": " + message, column, line_);
  }

  void handle_line(const std::string& raw) {
    std::string line = raw;
    if (std::size_t hash = line.find('#'); hash != std::string::npos) {
      line = line.substr(0, hash);
    }
    if (trim(line).empty()) return;
    std::size_t colon = line.find(':');
    if (colon == std::string::npos) {
      append_continuation(line);
      return;
    }
    std::string head = trim(line.substr(0, colon));
    std::string rest = line.substr(colon + 1);
    std::istringstream head_in(head);
    std::string kind, name, extra;
    head_in >> kind >> name >> extra;
    if (!extra.empty()) fail("malformed binding head '" + head + "'");
    if (kind == "char" || kind == "vars" || kind == "order") {
      if (!name.empty()) fail("header '" + kind + "' takes no name");
      header(kind, trim(rest));
      return;
    }
    if (kind == "ideal" || kind == "poly" || kind == "int") {
      close_pending();
      binding(kind, name, rest, colon + 1);
      return;
    }
    fail("unknown binding kind '" + kind + "'");
  }

  void header(const std::string& key, const std::string& value) {
    if (bindings_started_) fail("header '" + key + "' must precede all bindings");
    if (key == "char") {
      if (characteristic_ != 0) fail("duplicate 'char' header");
      try {
        std::size_t used = 0;
        long long v = std::stoll(value, &used);
        if (used != value.size() || v < 2) throw std::invalid_argument("");
        characteristic_ = static_cast<std::uint64_t>(v);
      } catch (const std::exception&) {
        fail("invalid characteristic '" + value + "'");
      }
    } else if (key == "vars") {
      if (!vars_.empty()) fail("duplicate 'vars' header");
      std::string cleaned = value;
      for (char& c : cleaned) {
        if (c == ',') c = ' ';
      }
      std::istringstream in(cleaned);
      std::string v;
      while (in >> v) {
        if (!valid_name(v)) fail("invalid variable name '" + v + "'");
        vars_.push_back(v);
      }
      if (vars_.empty()) fail("empty variable list");
    } else {  // order
      if (order_set_) fail("duplicate 'order' header");
      order_set_ = true;
      if (value == "lex") {
        order_ = MonomialOrder::lex();
      } else if (value == "grevlex") {
        order_ = MonomialOrder::grevlex();
      } else if (value.rfind("block(", 0) == 0 && value.back() == ')') {
        std::string inner = value.substr(6, value.size() - 7);
        try {
          std::size_t used = 0;
          long long k = std::stoll(inner, &used);
          if (used != inner.size() || k < 0) throw std::invalid_argument("");
          order_ = MonomialOrder::block(static_cast<std::size_t>(k));
        } catch (const std::exception&) {
          fail("invalid block order '" + value + "'");
        }
      } else {
        fail("unknown order '" + value + "' (expected lex, grevlex, or block(k))");
      }
    }
  }

  void ensure_ring() {
    if (session_.ring) return;
    if (characteristic_ == 0 || vars_.empty()) {
      fail("bindings before a complete ring header ('char:' and 'vars:')");
    }
    try {
      session_.ring = make_ring(characteristic_, vars_, order_);
    } catch (const PreconditionError& e) {
      fail(e.what());
    }
    bindings_started_ = true;
  }

  void binding(const std::string& kind, const std::string& name, const std::string& rest,
               std::size_t rest_column) {
    ensure_ring();
    if (!valid_name(name)) fail("invalid binding name '" + name + "'");
    if (names_.count(name)) fail("duplicate binding name '" + name + "'");
    names_.insert(name);
    if (kind == "ideal") {
      pending_ = PendingIdeal{name, {}};
      append_generators(rest, rest_column);
      return;
    }
    std::string value = trim(rest);
    if (value.empty()) fail("binding '" + name + "' has no value");
    if (kind == "poly") {
      session_.polys.emplace(name, parse_in_ring(rest, rest_column));
    } else {  // int
      try {
        std::size_t used = 0;
        long long v = std::stoll(value, &used);
        if (used != value.size()) throw std::invalid_argument("");
        session_.ints.emplace(name, v);
      } catch (const std::exception&) {
        fail("invalid integer '" + value + "'");
      }
    }
  }

  void append_continuation(const std::string& line) {
    if (!pending_) fail("line belongs to no ideal binding");
    append_generators(line, 0);
  }

  // Splits a comma-separated generator list, keeping column offsets for
  // diagnostics. Empty segments (e.g. a trailing comma) are skipped.
  void append_generators(const std::string& text, std::size_t base_column) {
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t comma = text.find(',', start);
      std::size_t end = comma == std::string::npos ? text.size() : comma;
      std::string piece = text.substr(start, end - start);
      if (!trim(piece).empty()) {
        pending_->generators.push_back(parse_in_ring(piece, base_column + start));
      }
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
  }

  Polynomial parse_in_ring(const std::string& text, std::size_t base_column) {
    try {
      return parse_poly(session_.ring, text);
    } catch (const ParseError& e) {
      throw ParseError(source_ + ": " + e.what(), base_column + e.position(), line_);
    }
  }

  void close_pending() {
    if (!pending_) return;
    session_.ideals.emplace(pending_->name, Ideal(session_.ring, std::move(pending_->generators)));
    pending_.reset();
  }

  std::string source_;
  std::size_t line_ = 0;
  SessionFile session_;
  std::uint64_t characteristic_ = 0;
  std::vector<std::string> vars_;
  MonomialOrder order_ = MonomialOrder::grevlex();
  bool order_set_ = false;
  bool bindings_started_ = false;
  std::set<std::string> names_;
  std::optional<PendingIdeal> pending_;
};

}  // namespace

SessionFile parse_session(const std::string& text, const std::string& source) {
  return SessionParser(source).run(text);
}

SessionFile load_session(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open session file '" + path + "'", 0, 0);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_session(buffer.str(), path);
}

}  // namespace frobkit
