#pragma once

// Command-line front end.  Twelve subcommands over the library: braid
// normalization, conjugacy and achirality tests, cabling, Jones and
// Alexander polynomials, solenoid spec analysis and comparison,
// construction of strictly achiral embeddings, Smale-realization
// enumeration, invariant sequences, and SVG diagrams.
//
// Exit codes: 0 success; 1 domain or resource errors (resource limits
// additionally put a `limit:` field in the report); 2 command-line or
// file parse errors (file errors carry 1-based line numbers).

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "solbraid/analysis.hpp"
#include "solbraid/io.hpp"
#include "solbraid/report.hpp"
#include "solbraid/svg.hpp"

namespace solbraid {
namespace cli {

namespace detail {

inline std::string letters_string(const BraidWord& b) {
  if (b.letters.empty()) return "(identity)";
  std::string out;
  for (std::size_t i = 0; i < b.letters.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(b.letters[i]);
  }
  return out;
}

inline std::string ints_string(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(v[i]);
  }
  return out;
}

inline std::string bool_string(bool b) { return b ? "true" : "false"; }

inline std::string verdict_string(KnottingVerdict v) {
  switch (v) {
    case KnottingVerdict::Knotted: return "Knotted";
    case KnottingVerdict::Unknotted: return "Unknotted";
    default: return "Unknown";
  }
}

inline std::string achirality_string(Achirality a) {
  switch (a) {
    case Achirality::Yes: return "Yes";
    case Achirality::No: return "No";
    default: return "Unknown";
  }
}

inline std::string which_string(WhichInvariant w) {
  switch (w) {
    case WhichInvariant::Jones: return "jones";
    case WhichInvariant::Alexander: return "alexander";
    default: return "writhe";
  }
}

/// Whitespace-separated integers from a flag value.
inline std::vector<int> parse_int_list(const std::string& s, int lo, int hi,
                                       const std::string& what) {
  std::istringstream ls(s);
  std::string tok;
  std::vector<int> out;
  while (ls >> tok) {
    const long long v = solbraid::detail::parse_int_token(tok, 0);
    if (v < lo || v > hi)
      throw parse_error(0, what + " entry " + tok + " is out of range [" +
                               std::to_string(lo) + ", " + std::to_string(hi) + "]");
    out.push_back(static_cast<int>(v));
  }
  return out;
}

inline std::vector<long long> parse_weight_list(const std::string& s) {
  std::istringstream ls(s);
  std::string tok;
  std::vector<long long> out;
  while (ls >> tok) out.push_back(solbraid::detail::parse_int_token(tok, 0));
  return out;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream outf(path, std::ios::binary);
  if (!outf) throw std::runtime_error("cannot write file: " + path);
  outf << content;
  if (!outf) throw std::runtime_error("cannot write file: " + path);
}

/// Canonical digest text for a solenoid type given on the command line.
inline std::string type_digest_text(const std::vector<int>& prefix,
                                    const std::vector<int>& cycle) {
  return "type-prefix: " + ints_string(prefix) + "\ntype-cycle: " + ints_string(cycle) + "\n";
}

inline std::string stage_summary(const SolenoidSpec& spec) {
  std::string out;
  for (std::size_t i = 0; i < spec.stages.cycle.size(); ++i) {
    if (i) out += "; ";
    const BraidWord& b = spec.stages.cycle[i].braid;
    out += std::to_string(b.strands);
    for (int k : b.letters) out += ' ' + std::to_string(k);
  }
  return out;
}

}  // namespace detail

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"closed-braid and tame-solenoid analysis"};
  app.require_subcommand(1);

  bool json = false;
  int max_crossings = 24;
  unsigned long long max_orbit = 100000;
  int depth = 3;
  int strands = 1, inner_strands = 1;
  std::string word, other_word, inner_word;
  std::string file_a, file_b, out_path, type_str, prefix_str, which_str, weights_str;
  bool knotted = false;

  const auto add_braid_opts = [&](CLI::App* sc) {
    sc->add_option("--strands", strands, "number of strands")->required();
    sc->add_option("--word", word, "braid word letters, e.g. \"1 -2\" (default: identity)");
  };
  const auto add_json = [&](CLI::App* sc) {
    sc->add_flag("--json", json, "emit the report as JSON");
  };
  const auto add_orbit = [&](CLI::App* sc) {
    sc->add_option("--max-orbit", max_orbit, "summit-orbit cap for conjugacy searches")
        ->default_val(100000);
  };
  const auto add_crossings = [&](CLI::App* sc) {
    sc->add_option("--max-crossings", max_crossings, "crossing cap for bracket state sums")
        ->default_val(24);
  };

  CLI::App* c_norm = app.add_subcommand("braid-normalize", "left-greedy canonical form");
  add_braid_opts(c_norm);
  add_json(c_norm);

  CLI::App* c_conj = app.add_subcommand("braid-conjugate", "decide conjugacy of two braids");
  add_braid_opts(c_conj);
  c_conj->add_option("--other", other_word, "second braid word on the same strands")->required();
  add_orbit(c_conj);
  add_json(c_conj);

  CLI::App* c_achi = app.add_subcommand("braid-achiral", "is the braid conjugate to its mirror");
  add_braid_opts(c_achi);
  add_orbit(c_achi);
  add_json(c_achi);

  CLI::App* c_cabl = app.add_subcommand("braid-cable", "cable an inner braid into a closed braid");
  add_braid_opts(c_cabl);
  c_cabl->add_option("--inner-strands", inner_strands, "strands of the inner braid")->required();
  c_cabl->add_option("--inner-word", inner_word, "inner braid word (default: identity)");
  add_json(c_cabl);

  CLI::App* c_jone = app.add_subcommand("inv-jones", "Jones polynomial of the closure");
  add_braid_opts(c_jone);
  add_crossings(c_jone);
  add_json(c_jone);

  CLI::App* c_alex = app.add_subcommand("inv-alexander", "Alexander polynomial of the closure");
  add_braid_opts(c_alex);
  add_json(c_alex);

  CLI::App* c_anal = app.add_subcommand("sol-analyze", "analyze a solenoid spec file");
  c_anal->add_option("file", file_a, "solenoid spec file")->required();
  c_anal->add_option("--depth", depth, "levels of the knotting report")->default_val(3);
  add_crossings(c_anal);
  add_orbit(c_anal);
  add_json(c_anal);

  CLI::App* c_equi = app.add_subcommand("sol-equiv", "compare two solenoid spec files");
  c_equi->add_option("file", file_a, "first spec file")->required();
  c_equi->add_option("other", file_b, "second spec file")->required();
  add_json(c_equi);

  CLI::App* c_cons =
      app.add_subcommand("sol-construct", "emit a strictly achiral spec for an odd type");
  c_cons->add_option("--type", type_str, "cycle winding numbers, e.g. \"3 5\"")->required();
  c_cons->add_option("--prefix", prefix_str, "prefix winding numbers (default: none)");
  c_cons->add_flag("--knotted", knotted, "use the documented knotted achiral ambient companion");
  c_cons->add_option("--out", out_path, "write the spec file here instead of standard output");

  CLI::App* c_smal = app.add_subcommand("sol-smale", "enumerate Smale realizations of a type");
  c_smal->add_option("--type", type_str, "cycle winding numbers, all <= 3")->required();
  add_json(c_smal);

  CLI::App* c_invs = app.add_subcommand("sol-invariants", "invariant sequence along the levels");
  c_invs->add_option("file", file_a, "solenoid spec file")->required();
  c_invs->add_option("--which", which_str, "invariant to compute")
      ->required()
      ->check(CLI::IsMember({"jones", "alexander", "writhe"}));
  c_invs->add_option("--depth", depth, "last level to compute")->default_val(3);
  c_invs->add_option("--weights", weights_str, "level weights, e.g. \"1 2 4 8\" (default: all 1)");
  add_crossings(c_invs);
  add_json(c_invs);

  CLI::App* c_draw = app.add_subcommand("draw", "render the closed-braid diagram as SVG");
  add_braid_opts(c_draw);
  c_draw->add_option("--out", out_path, "output SVG path")->required();

  try {
    std::reverse(args.begin(), args.end());
    app.parse(std::move(args));
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? 0 : 2;
  }

  const auto emit = [&](const Report& rep) { out << (json ? rep.to_json() : rep.to_text()); };
  // Runs the command body; a resource cap turns into a `limit:` field.
  const auto finish = [&](Report& rep, const auto& compute) {
    try {
      compute(rep);
    } catch (const resource_limit_error& e) {
      rep.add("limit", e.what());
      emit(rep);
      return 1;
    }
    emit(rep);
    return 0;
  };

  try {
    if (app.got_subcommand(c_norm)) {
      const BraidWord b = parse_inline_word(strands, word);
      Report rep("braid-normalize", emit_braid_text(b));
      return finish(rep, [&](Report& r) {
        const GarsideCanonical g = normal_form(b);
        r.add("inf", std::to_string(g.inf));
        r.add("canonical_length", std::to_string(g.factors.size()));
        if (!g.factors.empty()) {
          std::string fs;
          for (std::size_t i = 0; i < g.factors.size(); ++i) {
            if (i) fs += ' ';
            fs += '(' + detail::letters_string(simple_to_word(g.factors[i], g.strands)) + ')';
          }
          r.add("factors", fs);
        }
        r.add("word", detail::letters_string(to_word(g)));
      });
    }

    if (app.got_subcommand(c_conj) || app.got_subcommand(c_achi)) {
      const bool achiral_mode = app.got_subcommand(c_achi);
      const BraidWord a = parse_inline_word(strands, word);
      const BraidWord b = achiral_mode ? mirror(a) : parse_inline_word(strands, other_word);
      Report rep(achiral_mode ? "braid-achiral" : "braid-conjugate",
                 achiral_mode ? emit_braid_text(a) : emit_braid_text(a) + emit_braid_text(b));
      return finish(rep, [&](Report& r) {
        const ConjugacyOptions co{static_cast<std::size_t>(max_orbit)};
        const ConjugacyResult res =
            achiral_mode ? is_achiral_braid(a, co) : are_conjugate(a, b, co);
        r.add("conjugate", detail::bool_string(res.conjugate));
        if (res.witness) r.add("witness", detail::letters_string(*res.witness));
      });
    }

    if (app.got_subcommand(c_cabl)) {
      const BraidWord outer = parse_inline_word(strands, word);
      const BraidWord inner = parse_inline_word(inner_strands, inner_word);
      Report rep("braid-cable", emit_braid_text(outer) + emit_braid_text(inner));
      return finish(rep, [&](Report& r) {
        const BraidWord c = cable_compose(outer, inner);
        r.add("strands", std::to_string(c.strands));
        r.add("word", detail::letters_string(c));
      });
    }

    if (app.got_subcommand(c_jone) || app.got_subcommand(c_alex)) {
      const bool jones_mode = app.got_subcommand(c_jone);
      const BraidWord b = parse_inline_word(strands, word);
      Report rep(jones_mode ? "inv-jones" : "inv-alexander", emit_braid_text(b));
      return finish(rep, [&](Report& r) {
        if (jones_mode)
          r.add("jones", jones(b, InvariantOptions{max_crossings}).to_string());
        else
          r.add("alexander", alexander(b).to_string());
      });
    }

    if (app.got_subcommand(c_anal)) {
      const SolenoidSpec spec = parse_solenoid_spec(detail::read_file(file_a));
      Report rep("sol-analyze", emit_solenoid_spec(spec));
      return finish(rep, [&](Report& r) {
        const ConjugacyOptions co{static_cast<std::size_t>(max_orbit)};
        const InvariantOptions io{max_crossings};
        const SolenoidType t = type_of(spec);
        if (!t.prefix.empty()) r.add("type_prefix", detail::ints_string(t.prefix));
        r.add("type_cycle", detail::ints_string(t.cycle));
        bool two_adic = spec.ambient.is_unknot();
        for (const auto& s : spec.stages.prefix) two_adic = two_adic && s.braid.strands == 2;
        for (const auto& s : spec.stages.cycle) two_adic = two_adic && s.braid.strands == 2;
        if (two_adic) {
          try {
            const SignSeq signs = encode_2adic(spec);
            if (!signs.prefix.empty()) r.add("signs_prefix", detail::ints_string(signs.prefix));
            r.add("signs_cycle", detail::ints_string(signs.cycle));
            r.add("achiral_2adic", detail::bool_string(is_achiral_2adic(signs)));
          } catch (const std::invalid_argument&) {
            // a knotted stage: no sign encoding
          }
        }
        r.add("strictly_achiral_embeddable",
              detail::bool_string(strictly_achiral_embeddable(t)));
        r.add("strict_achirality", detail::achirality_string(verify_strict_achirality(spec, co)));
        const KnottingReport kr = knotting_report(spec, depth, io, co);
        r.add("depth", std::to_string(depth));
        std::string levels;
        for (std::size_t i = 0; i < kr.levels.size(); ++i) {
          if (i) levels += ' ';
          levels += detail::verdict_string(kr.levels[i]);
        }
        r.add("knotting_levels", levels);
        r.add("knotting_aggregate", detail::verdict_string(kr.aggregate));
        r.add("truncated", detail::bool_string(kr.truncated));
      });
    }

    if (app.got_subcommand(c_equi)) {
      const SolenoidSpec sa = parse_solenoid_spec(detail::read_file(file_a));
      const SolenoidSpec sb = parse_solenoid_spec(detail::read_file(file_b));
      Report rep("sol-equiv", emit_solenoid_spec(sa) + emit_solenoid_spec(sb));
      return finish(rep, [&](Report& r) {
        const SolenoidType ta = type_of(sa), tb = type_of(sb);
        r.add("supernatural_equal", detail::bool_string(supernatural_equal(ta, tb)));
        r.add("types_deletion_equivalent", detail::bool_string(deletion_equivalent(ta, tb)));
        try {
          const SignSeq siga = encode_2adic(sa), sigb = encode_2adic(sb);
          r.add("signseq_equivalent", detail::bool_string(signseq_equivalent(siga, sigb)));
        } catch (const std::invalid_argument&) {
          // not a pair of unknotted 2-adic specs
        }
      });
    }

    if (app.got_subcommand(c_cons)) {
      const std::vector<int> cyc = detail::parse_int_list(type_str, 2, 1024, "type");
      const std::vector<int> pre = detail::parse_int_list(prefix_str, 2, 1024, "prefix");
      const SolenoidType t(pre, cyc);
      const SolenoidSpec spec = construct_strictly_achiral(t, knotted);
      const std::string text = emit_solenoid_spec(spec);
      if (out_path.empty())
        out << text;
      else
        detail::write_file(out_path, text);
      return 0;
    }

    if (app.got_subcommand(c_smal)) {
      const std::vector<int> cyc = detail::parse_int_list(type_str, 2, 1024, "type");
      Report rep("sol-smale", detail::type_digest_text({}, cyc));
      return finish(rep, [&](Report& r) {
        const SolenoidType t({}, cyc);
        const std::vector<SolenoidSpec> specs = smale_enumerate(t);
        r.add("type_cycle", detail::ints_string(cyc));
        r.add("count", std::to_string(specs.size()));
        for (std::size_t i = 0; i < specs.size(); ++i)
          r.add("spec_" + std::to_string(i + 1), detail::stage_summary(specs[i]));
      });
    }

    if (app.got_subcommand(c_invs)) {
      const SolenoidSpec spec = parse_solenoid_spec(detail::read_file(file_a));
      Report rep("sol-invariants", emit_solenoid_spec(spec));
      return finish(rep, [&](Report& r) {
        const WhichInvariant which = which_str == "jones"     ? WhichInvariant::Jones
                                     : which_str == "alexander" ? WhichInvariant::Alexander
                                                                : WhichInvariant::Writhe;
        std::vector<long long> weights = detail::parse_weight_list(weights_str);
        if (weights.empty() && depth >= 0)
          weights.assign(static_cast<std::size_t>(depth) + 1, 1);
        const InvariantSequence seq =
            invariant_sequence(spec, depth, which, weights, InvariantOptions{max_crossings});
        r.add("which", detail::which_string(seq.which));
        r.add("depth", std::to_string(seq.requested_depth));
        r.add("truncated", detail::bool_string(seq.truncated));
        for (std::size_t i = 0; i < seq.values.size(); ++i)
          r.add("value_" + std::to_string(i), seq.values[i].to_string());
        for (std::size_t i = 0; i < seq.series.size(); ++i)
          r.add("series_" + std::to_string(i), seq.series[i].to_string());
      });
    }

    if (app.got_subcommand(c_draw)) {
      const BraidWord b = parse_inline_word(strands, word);
      detail::write_file(out_path, render_svg(b));
      return 0;
    }
  } catch (const parse_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const resource_limit_error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace cli
}  // namespace solbraid
