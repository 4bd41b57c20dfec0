#pragma once

// Line-oriented text formats.
//
// Braid word file:
//   strands: <n>
//   <letters...>                whitespace-separated nonzero integers,
//                               k > 0 is the k-th positive generator,
//                               k < 0 its inverse; may span several lines
//
// Solenoid spec file:
//   ambient: unknot             or: ambient: braid <strands> <letters...>
//   ambient-flag: strictly-achiral        optional, after a braid ambient
//   prefix:
//   stage: <strands> <letters...>         zero or more
//   cycle:
//   stage: <strands> <letters...>         one or more
//
// Blank lines are ignored.  Errors carry 1-based line numbers via
// parse_error; line 0 marks end-of-input or inline-string errors.
// emit_* and parse_* round-trip: parsing an emitted file reproduces an
// equal value.

#include <charconv>
#include <sstream>
#include <string>
#include <vector>

#include "solbraid/errors.hpp"
#include "solbraid/solenoid.hpp"

namespace solbraid {

namespace detail {

inline constexpr int kMaxStrands = 1024;

inline long long parse_int_token(const std::string& tok, int line) {
  long long v = 0;
  const char* first = tok.data();
  const char* last = first + tok.size();
  const auto res = std::from_chars(first, last, v);
  if (res.ec != std::errc() || res.ptr != last)
    throw parse_error(line, "expected an integer, got '" + tok + "'");
  return v;
}

inline int parse_strand_count(const std::string& tok, int line) {
  const long long n = parse_int_token(tok, line);
  if (n < 1 || n > kMaxStrands)
    throw parse_error(line, "strand count must be between 1 and " +
                                std::to_string(kMaxStrands));
  return static_cast<int>(n);
}

inline int parse_letter(const std::string& tok, int strands, int line) {
  const long long k = parse_int_token(tok, line);
  if (k == 0 || k >= strands || k <= -strands)
    throw parse_error(line, "letter '" + tok + "' is out of range for " +
                                std::to_string(strands) + " strands");
  return static_cast<int>(k);
}

/// Reads `<strands> <letters...>` from the rest of a line.
inline BraidWord parse_word_tail(std::istringstream& ls, int line,
                                 const std::string& what) {
  std::string tok;
  if (!(ls >> tok)) throw parse_error(line, what + " needs a strand count");
  const int strands = parse_strand_count(tok, line);
  std::vector<int> letters;
  while (ls >> tok) letters.push_back(parse_letter(tok, strands, line));
  return BraidWord(strands, std::move(letters));
}

inline void emit_word_tail(std::ostringstream& out, const BraidWord& b) {
  out << b.strands;
  for (int k : b.letters) out << ' ' << k;
}

}  // namespace detail

/// Parse the whole-string CLI form of a braid word: the strand count comes
/// from elsewhere, `word` is just the letter list.
inline BraidWord parse_inline_word(int strands, const std::string& word) {
  if (strands < 1 || strands > detail::kMaxStrands)
    throw parse_error(0, "strand count must be between 1 and " +
                             std::to_string(detail::kMaxStrands));
  std::istringstream ls(word);
  std::string tok;
  std::vector<int> letters;
  while (ls >> tok) letters.push_back(detail::parse_letter(tok, strands, 0));
  return BraidWord(strands, std::move(letters));
}

inline BraidWord parse_braid_text(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  bool have_header = false;
  int strands = 0;
  std::vector<int> letters;
  while (std::getline(in, raw)) {
    ++line_no;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    std::istringstream ls(raw);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (!have_header) {
      std::string val;
      if (tok != "strands:" || !(ls >> val))
        throw parse_error(line_no, "expected 'strands: <n>' header");
      strands = detail::parse_strand_count(val, line_no);
      std::string extra;
      if (ls >> extra)
        throw parse_error(line_no,
                          "unexpected token '" + extra + "' after the strand count");
      have_header = true;
      continue;
    }
    do letters.push_back(detail::parse_letter(tok, strands, line_no));
    while (ls >> tok);
  }
  if (!have_header) throw parse_error(0, "missing 'strands: <n>' header");
  return BraidWord(strands, std::move(letters));
}

inline std::string emit_braid_text(const BraidWord& b) {
  std::ostringstream out;
  out << "strands: " << b.strands << "\n";
  if (!b.letters.empty()) {
    for (std::size_t i = 0; i < b.letters.size(); ++i) {
      if (i) out << ' ';
      out << b.letters[i];
    }
    out << "\n";
  }
  return out.str();
}

inline SolenoidSpec parse_solenoid_spec(const std::string& text) {
  enum class Section { ExpectAmbient, AfterAmbient, Prefix, Cycle };
  Section section = Section::ExpectAmbient;

  bool ambient_unknot = true;
  BraidWord ambient_braid = identity_braid(1);
  bool ambient_flag = false;
  std::vector<StageBraid> prefix, cycle;

  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    std::istringstream ls(raw);
    std::string tok;
    if (!(ls >> tok)) continue;

    if (tok == "ambient:") {
      if (section != Section::ExpectAmbient)
        throw parse_error(line_no, "duplicate 'ambient:' line");
      std::string kind;
      if (!(ls >> kind))
        throw parse_error(line_no, "expected 'ambient: unknot' or 'ambient: braid <strands> <word>'");
      if (kind == "unknot") {
        std::string extra;
        if (ls >> extra)
          throw parse_error(line_no, "unexpected token '" + extra + "' after 'unknot'");
        ambient_unknot = true;
      } else if (kind == "braid") {
        ambient_braid = detail::parse_word_tail(ls, line_no, "ambient braid");
        if (!is_cyclic(ambient_braid))
          throw parse_error(line_no,
                            "ambient companion closure must be a knot (cyclic permutation)");
        ambient_unknot = false;
      } else {
        throw parse_error(line_no, "ambient kind must be 'unknot' or 'braid', got '" + kind + "'");
      }
      section = Section::AfterAmbient;
    } else if (tok == "ambient-flag:") {
      if (section != Section::AfterAmbient)
        throw parse_error(line_no, "'ambient-flag:' must follow the 'ambient:' line");
      std::string val, extra;
      if (!(ls >> val) || val != "strictly-achiral" || (ls >> extra))
        throw parse_error(line_no, "the only ambient flag is 'strictly-achiral'");
      ambient_flag = true;
    } else if (tok == "prefix:") {
      if (section != Section::AfterAmbient)
        throw parse_error(line_no, section == Section::ExpectAmbient
                                       ? "spec file must start with an 'ambient:' line"
                                       : "duplicate 'prefix:' line");
      std::string extra;
      if (ls >> extra)
        throw parse_error(line_no, "unexpected token '" + extra + "' after 'prefix:'");
      section = Section::Prefix;
    } else if (tok == "cycle:") {
      if (section != Section::Prefix)
        throw parse_error(line_no, "'cycle:' must follow the 'prefix:' section");
      std::string extra;
      if (ls >> extra)
        throw parse_error(line_no, "unexpected token '" + extra + "' after 'cycle:'");
      section = Section::Cycle;
    } else if (tok == "stage:") {
      if (section != Section::Prefix && section != Section::Cycle)
        throw parse_error(line_no, "'stage:' lines belong to the 'prefix:' or 'cycle:' sections");
      BraidWord b = detail::parse_word_tail(ls, line_no, "stage");
      if (b.strands < 2)
        throw parse_error(line_no, "stage braid needs winding number at least 2");
      if (!is_cyclic(b))
        throw parse_error(line_no,
                          "stage braid must be cyclic (permute its strands in one cycle)");
      (section == Section::Prefix ? prefix : cycle).emplace_back(std::move(b));
    } else {
      throw parse_error(line_no, "unrecognized directive '" + tok + "'");
    }
  }

  if (section == Section::ExpectAmbient)
    throw parse_error(0, "spec file must start with an 'ambient:' line");
  if (section != Section::Cycle || cycle.empty())
    throw parse_error(0, "spec file needs a 'cycle:' section with at least one stage");

  AmbientCompanion ambient =
      ambient_unknot ? AmbientCompanion::unknot()
                     : AmbientCompanion::closed_braid(std::move(ambient_braid), ambient_flag);
  return SolenoidSpec{std::move(ambient),
                      EventuallyPeriodicSeq<StageBraid>(std::move(prefix), std::move(cycle))};
}

inline std::string emit_solenoid_spec(const SolenoidSpec& spec) {
  std::ostringstream out;
  if (spec.ambient.is_unknot()) {
    out << "ambient: unknot\n";
  } else {
    out << "ambient: braid ";
    detail::emit_word_tail(out, spec.ambient.braid());
    out << "\n";
    if (spec.ambient.strictly_achiral_known()) out << "ambient-flag: strictly-achiral\n";
  }
  out << "prefix:\n";
  for (const auto& s : spec.stages.prefix) {
    out << "stage: ";
    detail::emit_word_tail(out, s.braid);
    out << "\n";
  }
  out << "cycle:\n";
  for (const auto& s : spec.stages.cycle) {
    out << "stage: ";
    detail::emit_word_tail(out, s.braid);
    out << "\n";
  }
  return out.str();
}

}  // namespace solbraid
