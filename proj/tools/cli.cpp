#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <functional>
#include <ostream>
#include <random>

#include "freg/algebra.hpp"
#include "freg/fi2.hpp"
#include "freg/sampling.hpp"

namespace freg::cli {

  namespace {

    using nlohmann::json;

    struct Context {
      bool          json_out = false;
      FormatMode    mode     = FormatMode::alias;
      std::ostream& out;
    };

    std::string show(Context const& ctx, Element const& u) {
      return format_element(u, ctx.mode);
    }

    std::string show(Context const& ctx, Landscape const& u) {
      return format_word(u.to_word(), ctx.mode);
    }

    std::string show(Context const& ctx, Letter g) {
      return format_letter(g, ctx.mode);
    }

    int predicate(Context const& ctx, std::string const& cmd, bool value,
                  json extra = json::object()) {
      if (ctx.json_out) {
        extra["command"] = cmd;
        extra["result"]  = value;
        ctx.out << extra.dump() << '\n';
      } else {
        ctx.out << (value ? "true" : "false") << '\n';
      }
      return value ? ok : negative;
    }

    int element_list(Context const& ctx, std::string const& cmd,
                     std::vector<std::string> const& items,
                     json extra = json::object()) {
      if (ctx.json_out) {
        extra["command"] = cmd;
        extra["count"]   = items.size();
        extra["items"]   = items;
        ctx.out << extra.dump() << '\n';
      } else {
        for (auto const& s : items) {
          ctx.out << s << '\n';
        }
      }
      return ok;
    }

    Element element_of(std::string const& text) {
      return Element::of(parse_word(text));
    }

    // Tuple literal with entries printed as aliases.
    std::string shallow_literal(Letter g) {
      if (g.is_base()) {
        return "(1,1,x,x',1)";
      }
      return "(" + format_letter(g.left(), FormatMode::alias) + ","
             + std::string(to_string(g.left_anchor())) + ","
             + format_letter(g.middle(), FormatMode::alias) + ","
             + std::string(to_string(g.right_anchor())) + ","
             + format_letter(g.right(), FormatMode::alias) + ")";
    }

    std::string shallow_iliteral(ILetter h) {
      if (h.height() < 2) {
        return format_iletter(h, FormatMode::alias);
      }
      return "(" + format_iletter(h.left(), FormatMode::alias) + ","
             + format_iletter(h.middle(), FormatMode::alias) + ","
             + format_iletter(h.right(), FormatMode::alias) + ")";
    }

    std::string dot_escape(std::string const& s) {
      std::string out;
      for (char ch : s) {
        if (ch == '"' || ch == '\\') {
          out += '\\';
        }
        out += ch;
      }
      return out;
    }

    int eggbox(Context const& ctx, Letter g, bool dot) {
      auto const ups   = g.is_one() ? std::vector<Landscape>{Landscape()}
                                    : enumerate_hills(g, Direction::up);
      auto const downs = g.is_one() ? std::vector<Landscape>{Landscape()}
                                    : enumerate_hills(g, Direction::down);
      std::vector<std::vector<std::pair<Element, bool>>> rows;
      for (auto const& l : ups) {
        auto& row = rows.emplace_back();
        for (auto const& r : downs) {
          Element const u = Element::from_mountain(join(l, r));
          row.emplace_back(u, is_idempotent(u));
        }
      }
      if (ctx.json_out) {
        json j;
        j["command"] = "eggbox";
        j["letter"]  = show(ctx, g);
        j["rows"]    = json::array();
        for (auto const& row : rows) {
          json jr = json::array();
          for (auto const& [u, idem] : row) {
            jr.push_back({{"element", show(ctx, u)}, {"idempotent", idem}});
          }
          j["rows"].push_back(jr);
        }
        ctx.out << j.dump() << '\n';
        return ok;
      }
      if (!dot) {
        for (std::size_t i = 0; i < rows.size(); ++i) {
          for (std::size_t k = 0; k < rows[i].size(); ++k) {
            auto const& [u, idem] = rows[i][k];
            ctx.out << (k > 0 ? " | " : "") << (idem ? "*" : "") << show(ctx, u);
          }
          ctx.out << '\n';
        }
        return ok;
      }
      // One table-shaped record: rows are R-classes, columns L-classes and
      // each cell a (trivial) H-class.
      ctx.out << "digraph eggbox {\n  node [shape=plaintext];\n";
      ctx.out << "  dclass [label=<<table border=\"1\" cellborder=\"1\" "
                 "cellspacing=\"0\">\n";
      auto html = [](std::string const& s) {
        std::string out;
        for (char ch : s) {
          if (ch == '<') {
            out += "&lt;";
          } else if (ch == '>') {
            out += "&gt;";
          } else if (ch == '&') {
            out += "&amp;";
          } else {
            out += ch;
          }
        }
        return out;
      };
      for (auto const& row : rows) {
        ctx.out << "    <tr>";
        for (auto const& [u, idem] : row) {
          ctx.out << "<td>" << (idem ? "* " : "") << html(show(ctx, u)) << "</td>";
        }
        ctx.out << "</tr>\n";
      }
      ctx.out << "  </table>>, tooltip=\"" << dot_escape(show(ctx, g))
              << "\"];\n}\n";
      return ok;
    }

  }  // namespace

  int run(std::vector<std::string> const& args, std::ostream& out,
          std::ostream& err) {
    CLI::App app{"Canonical forms and Green's structure of the free regular "
                 "semigroup on one generator",
                 "freg"};
    app.require_subcommand(1);

    bool json_out = false;
    bool expanded = false;
    int  max_height = limits().max_height;
    app.add_flag("--json", json_out, "Emit one JSON document per result");
    app.add_flag("--expanded", expanded, "Print tuples as nested literals");
    app.add_option("--max-height", max_height, "Height cap for enumerations")
        ->check(CLI::PositiveNumber);

    std::string w1, w2, rel, which, letter_text, dir;
    int         level = 0;
    std::string cls   = "all";
    bool        dot   = false;

    auto* normalize = app.add_subcommand("normalize", "Canonical mountain of a word");
    normalize->add_option("word", w1)->required();
    auto* eq = app.add_subcommand("eq", "Do two words define the same element");
    eq->add_option("w1", w1)->required();
    eq->add_option("w2", w2)->required();
    auto* green = app.add_subcommand("green", "Green's relations between two words");
    green->add_option("relation", rel)
        ->required()
        ->check(CLI::IsMember({"R", "L", "J", "H", "D", "leqR", "leqL", "leqJ"}));
    green->add_option("w1", w1)->required();
    green->add_option("w2", w2)->required();
    auto* idem = app.add_subcommand("idempotent", "Is the element idempotent");
    idem->add_option("word", w1)->required();
    auto* inv = app.add_subcommand("inverse", "Canonical inverse");
    inv->add_option("word", w1)->required();
    auto* isinv = app.add_subcommand("is-inverse", "Are the elements mutually inverse");
    isinv->add_option("w1", w1)->required();
    isinv->add_option("w2", w2)->required();
    auto* natleq = app.add_subcommand("nat-leq", "w1 <= w2 in the natural partial order");
    natleq->add_option("w1", w1)->required();
    natleq->add_option("w2", w2)->required();
    auto* en = app.add_subcommand("enum", "Tuples of a given height");
    en->add_option("height", level)->required()->check(CLI::PositiveNumber);
    en->add_option("class", cls)->check(CLI::IsMember({"e", "d", "all"}));
    auto* enfi = app.add_subcommand("enum-fi2", "Triples of a given height");
    enfi->add_option("height", level)->required()->check(CLI::PositiveNumber);
    auto* dcl = app.add_subcommand("dclass", "Elements of the D-class of [g]");
    dcl->add_option("letter", letter_text)->required();
    auto* hills = app.add_subcommand("hills", "Uphills to or downhills from g");
    hills->add_option("letter", letter_text)->required();
    hills->add_option("direction", dir)->required()->check(CLI::IsMember({"up", "down"}));
    auto* sw = app.add_subcommand("sandwich", "Sandwich set of two idempotents");
    sw->add_option("e", w1)->required();
    sw->add_option("f", w2)->required();
    auto* embed = app.add_subcommand("embed", "Map between M° and i-mountains");
    embed->add_option("direction", which)
        ->required()
        ->check(CLI::IsMember({"to-fi2", "from-fi2"}));
    embed->add_option("word", w1)->required();

    int           check_height = 3;
    std::size_t   samples      = 500;
    std::uint64_t seed         = 1;
    auto* echeck = app.add_subcommand("embed-check", "Check the embedding on samples");
    echeck->add_option("--max-height", check_height)->check(CLI::PositiveNumber);
    echeck->add_option("--samples", samples);
    echeck->add_option("--seed", seed);

    std::size_t trials = 50, max_len = 8, nwords = 200;
    auto* conf = app.add_subcommand("confluence", "Strategy independence of normal forms");
    conf->add_option("--trials", trials);
    conf->add_option("--seed", seed);
    conf->add_option("--max-len", max_len)->check(CLI::PositiveNumber);
    conf->add_option("--words", nwords, "Number of random words");

    auto* egg = app.add_subcommand("eggbox", "Egg-box diagram of the D-class of [g]");
    egg->add_option("letter", letter_text)->required();
    egg->add_flag("--dot", dot, "Emit Graphviz DOT");

    for (auto* sub : app.get_subcommands({})) {
      sub->fallthrough();
    }

    try {
      std::vector<std::string> rev(args.rbegin(), args.rend());
      app.parse(rev);
    } catch (CLI::CallForHelp const&) {
      out << app.help();
      return ok;
    } catch (CLI::ParseError const& e) {
      err << "error: " << e.what() << '\n';
      return usage;
    }

    Limits const saved = limits();
    struct Restore {
      Limits l;
      ~Restore() {
        set_limits(l);
      }
    } restore{saved};
    Limits lim     = saved;
    lim.max_height = max_height;
    set_limits(lim);

    Context ctx{json_out, expanded ? FormatMode::expanded : FormatMode::alias, out};

    try {
      if (*normalize) {
        Element const u = element_of(w1);
        if (ctx.json_out) {
          json j{{"command", "normalize"},
                 {"input", w1},
                 {"canonical", show(ctx, u)},
                 {"peak", show(ctx, u.peak())},
                 {"height", u.peak().height()}};
          out << j.dump() << '\n';
        } else {
          out << show(ctx, u) << '\n';
        }
        return ok;
      }
      if (*eq) {
        Element const a = element_of(w1);
        Element const b = element_of(w2);
        return predicate(ctx, "eq", a == b,
                         {{"canonical", {show(ctx, a), show(ctx, b)}}});
      }
      if (*green) {
        Element const a = element_of(w1);
        Element const b = element_of(w2);
        if (rel.rfind("leq", 0) == 0) {
          Green const g = rel == "leqR" ? Green::R : rel == "leqL" ? Green::L : Green::J;
          return predicate(ctx, "green", green_leq(a, b, g), {{"relation", rel}});
        }
        Green const g = rel == "R"   ? Green::R
                        : rel == "L" ? Green::L
                        : rel == "J" ? Green::J
                        : rel == "H" ? Green::H
                                     : Green::D;
        Verdict const v = green_compare(a, b, g);
        if (ctx.json_out) {
          json j{{"command", "green"},
                 {"relation", rel},
                 {"verdict", std::string(to_string(v))}};
          out << j.dump() << '\n';
        } else {
          out << to_string(v) << '\n';
        }
        return v == Verdict::equivalent ? ok : negative;
      }
      if (*idem) {
        return predicate(ctx, "idempotent", is_idempotent(element_of(w1)));
      }
      if (*inv) {
        Element const v = canonical_inverse(element_of(w1));
        if (ctx.json_out) {
          out << json{{"command", "inverse"}, {"inverse", show(ctx, v)}}.dump() << '\n';
        } else {
          out << show(ctx, v) << '\n';
        }
        return ok;
      }
      if (*isinv) {
        return predicate(ctx, "is-inverse",
                         is_inverse_pair(element_of(w1), element_of(w2)));
      }
      if (*natleq) {
        return predicate(ctx, "nat-leq",
                         natural_leq(element_of(w1), element_of(w2)));
      }
      if (*en) {
        LevelClass const lc = cls == "e"   ? LevelClass::E
                              : cls == "d" ? LevelClass::D
                                           : LevelClass::All;
        std::vector<std::string> items;
        json                     rows = json::array();
        for (Letter g : enumerate_level(level, lc)) {
          std::string const alias = format_letter(g, FormatMode::alias);
          std::string const lit   = expanded ? format_letter(g, FormatMode::expanded)
                                             : shallow_literal(g);
          items.push_back(expanded ? lit : alias + " " + lit);
          rows.push_back({{"alias", alias}, {"literal", lit}});
        }
        if (ctx.json_out) {
          out << json{{"command", "enum"}, {"height", level}, {"class", cls},
                      {"count", rows.size()}, {"items", rows}}
                     .dump()
              << '\n';
          return ok;
        }
        return element_list(ctx, "enum", items);
      }
      if (*enfi) {
        std::vector<std::string> items;
        json                     rows = json::array();
        for (ILetter h : enumerate_ilevel(level)) {
          std::string const alias = format_iletter(h, FormatMode::alias);
          std::string const lit   = expanded ? format_iletter(h, FormatMode::expanded)
                                             : shallow_iliteral(h);
          items.push_back(expanded || h.height() < 2 ? lit : alias + " " + lit);
          rows.push_back({{"alias", alias}, {"literal", lit}});
        }
        if (ctx.json_out) {
          out << json{{"command", "enum-fi2"}, {"height", level},
                      {"count", rows.size()}, {"items", rows}}
                     .dump()
              << '\n';
          return ok;
        }
        return element_list(ctx, "enum-fi2", items);
      }
      if (*dcl) {
        std::vector<std::string> items;
        for (Element const& u : dclass(parse_letter(letter_text))) {
          items.push_back(show(ctx, u));
        }
        return element_list(ctx, "dclass", items);
      }
      if (*hills) {
        Letter const g = parse_letter(letter_text);
        std::vector<std::string> items;
        auto const hs = g.is_one() ? std::vector<Landscape>{Landscape()}
                                   : enumerate_hills(g, dir == "up" ? Direction::up
                                                                    : Direction::down);
        for (auto const& h : hs) {
          items.push_back(show(ctx, h));
        }
        return element_list(ctx, "hills", items);
      }
      if (*sw) {
        std::vector<std::string> items;
        for (Element const& g : sandwich(element_of(w1), element_of(w2))) {
          items.push_back(show(ctx, g));
        }
        return element_list(ctx, "sandwich", items);
      }
      if (*embed) {
        if (which == "to-fi2") {
          Element const u = element_of(w1);
          if (!in_Mcirc(u.mountain())) {
            err << "error: the canonical form " << show(ctx, u)
                << " is not in the embedded submodel\n";
            return usage;
          }
          std::string const v = format_iword(phi_mountain(u.mountain()), ctx.mode);
          if (ctx.json_out) {
            out << json{{"command", "embed"}, {"direction", which},
                        {"canonical", show(ctx, u)}, {"image", v}}
                       .dump()
                << '\n';
          } else {
            out << v << '\n';
          }
          return ok;
        }
        IWord const v = parse_iword(w1);
        if (!is_ilandscape(v) || !v.front().is_one() || !v.back().is_one()) {
          err << "error: not an i-mountain range\n";
          return usage;
        }
        IWord const     m = inormalize(v);
        Landscape const u = psi_mountain(m);
        if (ctx.json_out) {
          out << json{{"command", "embed"}, {"direction", which},
                      {"imountain", format_iword(m, ctx.mode)},
                      {"image", show(ctx, u)}}
                     .dump()
              << '\n';
        } else {
          out << show(ctx, u) << '\n';
        }
        return ok;
      }
      if (*echeck) {
        EmbeddingReport const r = check_embedding(check_height, samples, seed);
        if (ctx.json_out) {
          out << json{{"command", "embed-check"},
                      {"pass", r.pass},
                      {"exhaustive_mountains", r.exhaustive_mountains},
                      {"sampled_pairs", r.sampled_pairs},
                      {"failures", r.failures}}
                     .dump()
              << '\n';
        } else {
          out << (r.pass ? "pass" : "fail") << ": " << r.exhaustive_mountains
              << " mountains checked exhaustively, " << r.sampled_pairs
              << " sampled pairs\n";
          for (auto const& f : r.failures) {
            out << "  " << f << '\n';
          }
        }
        return r.pass ? ok : negative;
      }
      if (*conf) {
        std::vector<Token> alphabet{Anchor::one, Anchor::x, Anchor::xprime};
        for (int i = 1; i <= 2; ++i) {
          for (Letter g : enumerate_level(i, LevelClass::All)) {
            alphabet.emplace_back(g);
          }
        }
        Rng         rng(seed);
        std::size_t divergent = 0, decrease = 0;
        json        bad       = json::array();
        for (std::size_t k = 0; k < nwords; ++k) {
          Word const             w = random_word(max_len, alphabet, rng);
          ConfluenceReport const r = check_confluence(w, trials, rng());
          decrease += r.decrease_failures;
          if (r.divergence) {
            ++divergent;
            if (bad.size() < 10) {
              bad.push_back(format_word(w, ctx.mode));
            }
          }
        }
        bool const pass = divergent == 0 && decrease == 0;
        if (ctx.json_out) {
          out << json{{"command", "confluence"}, {"pass", pass},
                      {"words", nwords}, {"trials", trials},
                      {"divergent_words", divergent},
                      {"decrease_failures", decrease}, {"examples", bad}}
                     .dump()
              << '\n';
        } else {
          out << (pass ? "pass" : "fail") << ": " << nwords << " words, "
              << trials << " strategies each, " << divergent
              << " divergent, " << decrease << " non-decreasing runs\n";
        }
        return pass ? ok : negative;
      }
      if (*egg) {
        return eggbox(ctx, parse_letter(letter_text), dot);
      }
    } catch (CapExceeded const& e) {
      err << "error: " << e.what() << '\n';
      return cap;
    } catch (Error const& e) {
      err << "error: " << e.what() << '\n';
      return usage;
    } catch (InternalError const& e) {
      err << "internal error: " << e.what() << '\n';
      return internal;
    }
    err << "error: no command\n";
    return usage;
  }

}  // namespace freg::cli
