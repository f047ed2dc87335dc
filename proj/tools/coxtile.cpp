#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "coxtile/coxeter.hpp"
#include "coxtile/embeddings.hpp"
#include "coxtile/geometry.hpp"
#include "coxtile/render.hpp"
#include "coxtile/tilings.hpp"
#include "coxtile/words.hpp"

namespace {

using namespace coxtile;

struct Options {
  std::string config_path;
  uint64_t group_cap_override = 0;
  uint64_t word_cap_override = 0;
  std::string host;
  std::string row;
  std::string word;
  std::string xword;
  std::string element;
  std::string svg_path;
  std::string palette = "default";
  std::string relations = "all-commuting";
  std::string verify_case;
  bool count_only = false;
  bool regular = false;
  int jobs = 1;
};

Config load_config(const Options& opt) {
  Config cfg = Config::from_environment();
  if (!opt.config_path.empty()) cfg.apply_file(opt.config_path);
  if (opt.group_cap_override) cfg.group_cap = opt.group_cap_override;
  if (opt.word_cap_override) cfg.word_cap = opt.word_cap_override;
  return cfg;
}

struct Host {
  CoxeterSystem sys;
  LengthTable table;
};

Host load_host(const std::string& name, const Config& cfg) {
  if (name.empty()) throw ParseError("--host is required");
  Host h{build_system(CoxeterType::parse(name)), {}};
  h.table = LengthTable::build(h.sys.gens, cfg.group_cap);
  return h;
}

bool looks_like_word(const std::string& text) {
  return text.find('s') != std::string::npos || text.find('S') != std::string::npos;
}

Perm parse_element(const Host& h, const std::string& text) {
  if (text.empty()) throw ParseError("--element is required");
  if (looks_like_word(text))
    return evaluate(h.sys, word_from_string(text, h.sys.rank));
  return h.sys.element_from_string(text);
}

RelationSet parse_relations(const CoxeterSystem& sys, const std::string& text) {
  if (text == "all-commuting") return RelationSet::all_commuting(sys);
  if (text == "none") return RelationSet::none();
  if (text.rfind("custom:", 0) == 0)
    return relations_from_string(sys, text.substr(7));
  throw ParseError("--relations expects all-commuting, none, or custom:<pairs>");
}

std::string join_displays(const CoxeterSystem& sys, const std::vector<int>& strands) {
  std::string out;
  for (size_t i = 0; i < strands.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(sys.display_of_slot(strands[i]));
  }
  return out;
}

std::string anchor_text(const CoxeterSystem& sys, Mask anchor) {
  std::vector<int> strands;
  for (int L = 0; L < sys.symbols; ++L)
    if (anchor >> L & 1u) strands.push_back(L);
  if (strands.empty()) return "-";
  return join_displays(sys, strands);
}

void dump_tiling(std::ostream& os, const CoxeterSystem& sys, const Tiling& t) {
  os << "border= " << sys.element_to_string(t.border) << "\n";
  os << "tiles= " << t.tiles.size() << "\n";
  for (const Tile& tile : t.tiles) {
    os << kind_name(tile.kind) << " labels=" << join_displays(sys, tile.labels)
       << " anchor=" << anchor_text(sys, tile.anchor) << " origin=" << tile.origin + 1
       << "\n";
  }
}

void write_svg(const std::string& path, const Tiling& t, const CoxeterSystem& sys,
               const Options& opt, const Config& cfg) {
  EdgeBasis basis = default_basis(sys, opt.regular, cfg.min_steepness);
  RenderConfig rc;
  rc.scale = cfg.svg_scale;
  if (opt.palette == "mono")
    rc.mono = true;
  else if (opt.palette != "default")
    throw ParseError("--palette expects default or mono");
  rc.regular_mode = opt.regular;
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  out << to_svg(t, basis, rc);
}

int cmd_info(const Options& opt, const Config& cfg) {
  if (!opt.row.empty()) {
    AdmissiblePartition p = table_row(opt.row, cfg);
    std::cout << "row= " << opt.row << "\n";
    std::cout << "host= " << p.host->type.name() << " order= " << p.host_table->size()
              << "\n";
    std::cout << "sub= " << p.sub_type.name() << " order= " << p.sub_table.size()
              << " longest= " << p.sub_table.max_length() << "\n";
    for (size_t i = 0; i < p.blocks.size(); ++i) {
      std::cout << "t" << i + 1 << " block= {";
      for (size_t j = 0; j < p.blocks[i].size(); ++j)
        std::cout << (j ? "," : "") << "s" << p.blocks[i][j] + 1;
      std::cout << "} expansion= " << word_to_string(p.expansions[i])
                << " image= " << p.host->element_to_string(p.images[i]) << "\n";
    }
    std::cout << "induced matrix:\n";
    for (const auto& row : p.induced) {
      for (size_t j = 0; j < row.size(); ++j) std::cout << (j ? " " : "") << row[j];
      std::cout << "\n";
    }
    return 0;
  }
  if (!opt.host.empty()) {
    Host h = load_host(opt.host, cfg);
    std::cout << "type= " << h.sys.type.name() << " rank= " << h.sys.rank
              << " symbols= " << h.sys.symbols << " order= " << h.table.size()
              << " longest= " << h.table.max_length() << "\n";
    std::cout << "matrix:\n";
    for (int i = 0; i < h.sys.rank; ++i) {
      for (int j = 0; j < h.sys.rank; ++j)
        std::cout << (j ? " " : "") << h.sys.matrix[i][j];
      std::cout << "\n";
    }
    return 0;
  }
  std::cout << "catalogued rows:\n";
  for (const TableRowInfo& row : table_rows())
    std::cout << row.key << " host= " << row.host << " sub= " << row.sub
              << (row.constructible ? "" : " (data only)") << "\n";
  return 0;
}

int cmd_words(const Options& opt, const Config& cfg, bool classes_mode) {
  Host h = load_host(opt.host, cfg);
  const Perm w = parse_element(h, opt.element);
  WordEnumerator enumerator(h.table, cfg.word_cap);
  if (!classes_mode) {
    if (opt.count_only) {
      std::cout << enumerator.count(w) << "\n";
      return 0;
    }
    for (const Word& word : enumerator.enumerate(h.table.index_of(w)))
      std::cout << word_to_string(word) << "\n";
    return 0;
  }
  const RelationSet rels = parse_relations(h.sys, opt.relations);
  const std::vector<Word> words = enumerator.enumerate(h.table.index_of(w));
  const EquivalencePartition part = partition_words(h.sys, words, rels);
  if (opt.count_only) {
    std::cout << part.classes.size() << "\n";
    return 0;
  }
  std::cout << "words= " << words.size() << " classes= " << part.classes.size()
            << " relations= " << rels.to_string() << "\n";
  for (size_t c = 0; c < part.classes.size(); ++c) {
    std::cout << "class " << c + 1 << " (" << part.classes[c].size() << "):";
    for (uint32_t wi : part.classes[c]) std::cout << " [" << word_to_string(words[wi]) << "]";
    std::cout << "\n";
  }
  return 0;
}

int cmd_embed(const Options& opt, const Config& cfg, bool verify_matrix) {
  if (opt.row.empty()) throw ParseError("--row is required");
  AdmissiblePartition p = table_row(opt.row, cfg);
  if (verify_matrix) {
    const auto matrix = verify_induced_matrix(p);
    for (const auto& row : matrix) {
      for (size_t j = 0; j < row.size(); ++j) std::cout << (j ? " " : "") << row[j];
      std::cout << "\n";
    }
    std::cout << "matrix= ok (" << p.sub_type.name() << ")\n";
    return 0;
  }
  if (opt.word.empty()) throw ParseError("--word (an X-word over t-letters) is required");
  const Word x_word = word_from_string(opt.word, static_cast<int>(p.blocks.size()));
  const Word host_word = embed_word(p, x_word);
  std::cout << "x-word= " << word_to_string(x_word) << "\n";
  std::cout << "host-word= " << word_to_string(host_word) << "\n";
  const auto parse = parse_sigma_consistent(p, host_word);
  if (!parse) throw Error("internal: expansion did not parse back");
  std::cout << "parse=";
  for (const auto& [block, letters] : parse->parts)
    std::cout << " t" << block + 1 << ":[" << word_to_string(letters) << "]";
  std::cout << "\n";
  return 0;
}

int cmd_tile(const Options& opt, const Config& cfg) {
  Host h = load_host(opt.host, cfg);
  if (opt.word.empty()) throw ParseError("--word is required");
  const Word word = word_from_string(opt.word, h.sys.rank);
  const Tiling t = tile_word(h.sys, h.table, word);
  dump_tiling(std::cout, h.sys, t);
  if (!opt.svg_path.empty()) write_svg(opt.svg_path, t, h.sys, opt, cfg);
  return 0;
}

int cmd_subtile(const Options& opt, const Config& cfg) {
  if (opt.row.empty()) throw ParseError("--row is required");
  AdmissiblePartition p = table_row(opt.row, cfg);
  if (opt.xword.empty()) throw ParseError("--xword is required");
  const Word x_word = word_from_string(opt.xword, static_cast<int>(p.blocks.size()));
  const Tiling t = subtiling(p, x_word);
  dump_tiling(std::cout, *p.host, t);
  if (!opt.svg_path.empty()) write_svg(opt.svg_path, t, *p.host, opt, cfg);
  return 0;
}

int cmd_render(const Options& opt, const Config& cfg) {
  if (opt.svg_path.empty()) throw ParseError("--svg is required");
  if (!opt.row.empty()) {
    AdmissiblePartition p = table_row(opt.row, cfg);
    if (opt.xword.empty()) throw ParseError("--xword is required with --row");
    const Word x_word = word_from_string(opt.xword, static_cast<int>(p.blocks.size()));
    write_svg(opt.svg_path, subtiling(p, x_word), *p.host, opt, cfg);
    return 0;
  }
  Host h = load_host(opt.host, cfg);
  if (!opt.word.empty()) {
    const Word word = word_from_string(opt.word, h.sys.rank);
    write_svg(opt.svg_path, tile_word(h.sys, h.table, word), h.sys, opt, cfg);
    return 0;
  }
  if (opt.element.empty()) throw ParseError("render needs --word, --xword, or --element");
  Tiling region;
  region.family = h.sys.type.family;
  region.symbols = h.sys.symbols;
  region.border = parse_element(h, opt.element);
  (void)h.table.index_of(region.border);
  write_svg(opt.svg_path, region, h.sys, opt, cfg);
  return 0;
}

struct CaseReport {
  std::string line;
  std::vector<std::string> notes;
  bool ok;
};

CaseReport run_verify_case(const std::string& name, const Options& opt,
                           const Config& cfg) {
  auto line = [&](const VerifyResult& r) {
    std::ostringstream os;
    os << "case=" << name << " words=" << r.words << " classes=" << r.classes
       << " tilings=" << r.tilings << " ok=" << (r.ok ? "true" : "false");
    return os.str();
  };
  auto exhaustive = [&](const std::string& host) {
    Host h = load_host(host, cfg);
    const VerifyResult r =
        verify_all_elements(h.sys, h.table, tiling_relations(h.sys), opt.jobs,
                            cfg.word_cap);
    return CaseReport{line(r), {}, r.ok};
  };
  auto sub_case = [&](const std::string& row, bool drop_t1_t3) {
    AdmissiblePartition p = table_row(row, cfg);
    const Perm x0 = x_longest(p);
    const RelationSet full = induced_relation_set(p, tiling_relations(*p.host));
    const RelationSet used = drop_t1_t3 ? full.without(0, 2) : full;
    const VerifyResult r = verify_bijection(p, x0, used);
    CaseReport rep{line(r), {}, r.ok};
    if (drop_t1_t3 && full.contains(0, 2)) {
      const VerifyResult alt = verify_bijection(p, x0, full);
      std::ostringstream note;
      note << "# case=" << name << " note: keeping the (t1,t3) commutation gives words="
           << alt.words << " classes=" << alt.classes << " tilings=" << alt.tilings
           << " ok=" << (alt.ok ? "true" : "false");
      rep.notes.push_back(note.str());
    }
    return rep;
  };
  if (name == "a3-exhaustive") return exhaustive("A3");
  if (name == "a4-exhaustive") return exhaustive("A4");
  if (name == "d4-exhaustive") return exhaustive("D4");
  if (name == "b3-in-a5") return sub_case("A5-B3", false);
  if (name == "b3-in-a6") return sub_case("A6-B3", false);
  if (name == "b3-in-d4") return sub_case("D4-B3", true);
  if (name == "b4-in-d5") return sub_case("D5-B4", true);
  if (name == "h3-in-d6") return sub_case("D6-H3", false);
  throw ParseError("unknown verify case '" + name + "'");
}

int cmd_verify(const Options& opt, const Config& cfg) {
  static const std::vector<std::string> all = {
      "a3-exhaustive", "a4-exhaustive", "d4-exhaustive", "b3-in-a5",
      "b3-in-a6",      "b3-in-d4",      "b4-in-d5",      "h3-in-d6"};
  std::vector<std::string> cases;
  if (opt.verify_case == "all")
    cases = all;
  else
    cases.push_back(opt.verify_case);
  bool ok = true;
  for (const std::string& name : cases) {
    const CaseReport rep = run_verify_case(name, opt, cfg);
    std::cout << rep.line << "\n";
    for (const std::string& note : rep.notes) std::cout << note << "\n";
    ok = ok && rep.ok;
  }
  return ok ? 0 : 1;
}

bool is_usage_error(const std::exception& e) {
  return dynamic_cast<const ParseError*>(&e) != nullptr ||
         dynamic_cast<const NotReduced*>(&e) != nullptr ||
         dynamic_cast<const NotReducedInX*>(&e) != nullptr ||
         dynamic_cast<const NotReducedInW*>(&e) != nullptr ||
         dynamic_cast<const NotInSubgroup*>(&e) != nullptr ||
         dynamic_cast<const UnsupportedType*>(&e) != nullptr ||
         dynamic_cast<const UnsupportedHost*>(&e) != nullptr ||
         dynamic_cast<const InvalidAngles*>(&e) != nullptr ||
         dynamic_cast<const BasisMismatch*>(&e) != nullptr ||
         dynamic_cast<const AsymmetricBasis*>(&e) != nullptr;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Elnitsky tilings, subtilings, and reduced-word classes for Coxeter "
               "groups of types A, B, D, and H3"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--config", opt.config_path, "key=value config file");
  app.add_option("--group-cap", opt.group_cap_override, "override group size cap");
  app.add_option("--word-cap", opt.word_cap_override, "override word enumeration cap");

  auto add_host = [&](CLI::App* c) { c->add_option("--host", opt.host, "host system, e.g. A4 or D4"); };
  auto add_row = [&](CLI::App* c) { c->add_option("--row", opt.row, "partition row, e.g. A5-B3"); };
  auto add_render_flags = [&](CLI::App* c) {
    c->add_option("--svg", opt.svg_path, "write an SVG rendering to this path");
    c->add_option("--palette", opt.palette, "default|mono");
    c->add_flag("--regular", opt.regular, "regular-polygon type D angles");
  };

  CLI::App* info = app.add_subcommand("info", "describe a host system or a partition row");
  add_host(info);
  add_row(info);

  CLI::App* words = app.add_subcommand("words", "reduced words of one element");
  CLI::App* words_enum = words->add_subcommand("enumerate", "list reduced words");
  CLI::App* words_classes = words->add_subcommand("classes", "commutation classes");
  words->require_subcommand(1);
  for (CLI::App* c : {words_enum, words_classes}) {
    add_host(c);
    c->add_option("--element", opt.element, "one-line form or s-word");
    c->add_flag("--count-only", opt.count_only, "print only the count");
  }
  words_classes->add_option("--relations", opt.relations,
                            "all-commuting|none|custom:<i:j,...>");

  CLI::App* classes = app.add_subcommand("classes", "commutation classes (alias)");
  add_host(classes);
  classes->add_option("--element", opt.element, "one-line form or s-word");
  classes->add_flag("--count-only", opt.count_only, "print only the count");
  classes->add_option("--relations", opt.relations,
                      "all-commuting|none|custom:<i:j,...>");

  CLI::App* embed = app.add_subcommand("embed", "expand and parse X-words in a host");
  add_row(embed);
  embed->add_option("--word", opt.word, "X-word over t-letters");
  CLI::App* embed_vm = embed->add_subcommand("verify-matrix", "recompute the induced matrix");
  (void)embed_vm;

  CLI::App* tile = app.add_subcommand("tile", "tile a reduced host word");
  add_host(tile);
  tile->add_option("--word", opt.word, "reduced word");
  add_render_flags(tile);

  CLI::App* subtile = app.add_subcommand("subtile", "subtiling of an X-word");
  add_row(subtile);
  subtile->add_option("--xword", opt.xword, "reduced X-word");
  add_render_flags(subtile);

  CLI::App* verify = app.add_subcommand("verify", "bijection verification suites");
  verify->add_option("--case", opt.verify_case,
                     "a3-exhaustive|a4-exhaustive|d4-exhaustive|b3-in-a5|b3-in-a6|"
                     "b3-in-d4|b4-in-d5|h3-in-d6|all")
      ->required();
  verify->add_option("--jobs", opt.jobs, "worker threads for exhaustive sweeps");

  CLI::App* render = app.add_subcommand("render", "SVG of a tiling or region");
  add_host(render);
  add_row(render);
  render->add_option("--word", opt.word, "reduced host word");
  render->add_option("--xword", opt.xword, "reduced X-word");
  render->add_option("--element", opt.element, "render the bare region of an element");
  add_render_flags(render);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    const Config cfg = load_config(opt);
    if (info->parsed()) return cmd_info(opt, cfg);
    if (words->parsed()) return cmd_words(opt, cfg, words_classes->parsed());
    if (classes->parsed()) return cmd_words(opt, cfg, true);
    if (embed->parsed())
      return cmd_embed(opt, cfg, embed->get_subcommand("verify-matrix")->parsed());
    if (tile->parsed()) return cmd_tile(opt, cfg);
    if (subtile->parsed()) return cmd_subtile(opt, cfg);
    if (verify->parsed()) return cmd_verify(opt, cfg);
    if (render->parsed()) return cmd_render(opt, cfg);
    std::cerr << "error: no subcommand\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return is_usage_error(e) ? 2 : 1;
  }
}
