#include "artin/cli.hpp"

#include <fstream>
#include <functional>
#include <sstream>

#include "CLI11.hpp"

#include "artin/canonical.hpp"
#include "artin/io.hpp"

namespace artin::cli {

  namespace {

    using io::Json;

    // Unreadable files and malformed documents.
    class InputError : public Error {
     public:
      using Error::Error;
    };

    std::string slurp(std::string const& path) {
      std::ifstream in(path);
      if (!in) {
        throw InputError("cannot open " + path);
      }
      std::ostringstream ss;
      ss << in.rdbuf();
      return ss.str();
    }

    Json read_json(std::string const& path) {
      auto text = slurp(path);
      try {
        return Json::parse(text);
      } catch (nlohmann::json::exception const& e) {
        throw InputError(path + ": " + e.what());
      }
    }

    DefiningGraph read_graph(std::string const& path) {
      auto text = slurp(path);
      try {
        return parse_graph(text);
      } catch (Error const& e) {
        throw InputError(path + ": " + e.what());
      }
    }

    // Parse errors inside a document are input errors too.
    template <typename F>
    auto parsing(std::string const& path, F&& f) {
      try {
        return f();
      } catch (ParseError const& e) {
        throw InputError(path + ": " + e.what());
      } catch (nlohmann::json::exception const& e) {
        throw InputError(path + ": " + e.what());
      }
    }

    // A graph-of-groups file, or a plain graph whose crushed decomposition
    // is used.
    GraphOfGroups read_gog(std::string const& path) {
      auto j = read_json(path);
      if (j.is_object() && j.contains("vertices")) {
        return build_MS(parsing(path, [&] { return io::graph_from_json(j); }));
      }
      return parsing(path, [&] { return io::gog_from_json(j); });
    }

    std::size_t vertex(DefiningGraph const& g, std::string const& name) {
      auto v = g.index(name);
      if (!v) {
        throw InputError("unknown vertex \"" + name + "\"");
      }
      return *v;
    }

    void emit(std::ostream& out, Json const& j) {
      out << j.dump(2) << '\n';
    }

    struct Options {
      std::string              file, file2, spec;
      std::string              s, t;
      std::vector<std::string> subset;
      std::size_t              budget = 100000;
      std::size_t              jobs   = 1;
      std::size_t              max_j  = 0;
      std::size_t              id     = 0;
      std::optional<std::size_t> keep;
      bool                     dot = false;
    };

    // The witness is serialised, read back and replayed from g1; the result
    // must map onto g2 under the reported isomorphism.
    void verify_witness(DefiningGraph const& g1, DefiningGraph const& g2,
                        Equivalence const& e) {
      auto text   = io::to_json(g1, e.witness).dump();
      auto seq    = io::sequence_from_json(g1, Json::parse(text));
      auto marked = replay(g1, seq);
      if (!is_isomorphism(marked.current, g2, e.final_isomorphism)) {
        throw Error("internal: witness replay does not reach the target graph");
      }
    }

  }  // namespace

  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Artin generating set toolkit", "artin"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Show help for all subcommands");

    Options             o;
    std::function<int()> action;
    auto on = [&](CLI::App* sub, std::function<int()> f) {
      sub->callback([&action, f = std::move(f)] { action = f; });
    };

    auto* chunks = app.add_subcommand("chunks", "Big chunks and separating vertices");
    chunks->add_option("file", o.file, "Graph JSON")->required();
    on(chunks, [&] {
      auto g = read_graph(o.file);
      emit(out, io::to_json(g, big_chunks(g)));
      return ok;
    });

    auto* classify_cmd = app.add_subcommand("classify", "Coxeter class of the graph or a subset");
    classify_cmd->add_option("file", o.file, "Graph JSON")->required();
    classify_cmd->add_option("--subset", o.subset, "Comma-separated vertex names")
        ->delimiter(',');
    on(classify_cmd, [&] {
      auto      g = read_graph(o.file);
      VertexSet s = g.all();
      if (!o.subset.empty()) {
        s = {};
        for (auto const& n : o.subset) {
          s.insert(vertex(g, n));
        }
      }
      emit(out, io::to_json(g, classify(g, s)));
      return ok;
    });

    auto* twists = app.add_subcommand("twists", "Enumerate elementary twists");
    twists->add_option("file", o.file, "Graph JSON")->required();
    twists->add_option("--max-j", o.max_j, "Largest |J| (0: no cap)");
    on(twists, [&] {
      auto g     = read_graph(o.file);
      auto moves = enumerate_twists(g, {o.max_j});
      Json list  = Json::array();
      for (auto const& m : moves) {
        list.push_back(io::to_json(g, m));
      }
      emit(out, {{"count", moves.size()}, {"moves", list}});
      return ok;
    });

    auto* orbit = app.add_subcommand("orbit", "Twist orbit up to isomorphism");
    orbit->add_option("file", o.file, "Graph JSON")->required();
    orbit->add_option("--budget", o.budget, "Node budget")->capture_default_str();
    orbit->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
    on(orbit, [&] {
      auto g  = read_graph(o.file);
      auto ob = twist_orbit(g, {o.budget, o.jobs});
      emit(out, io::to_json(ob));
      return ob.truncated ? inconclusive : ok;
    });

    auto* equiv = app.add_subcommand("equiv", "Decide twist equivalence of two graphs");
    equiv->add_option("file1", o.file, "Graph JSON")->required();
    equiv->add_option("file2", o.file2, "Graph JSON")->required();
    equiv->add_option("--budget", o.budget, "Node budget")->capture_default_str();
    equiv->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
    on(equiv, [&] {
      auto g1 = read_graph(o.file);
      auto g2 = read_graph(o.file2);
      auto e  = are_twist_equivalent(g1, g2, {o.budget, o.jobs});
      if (e.answer == Equivalence::Answer::yes) {
        verify_witness(g1, g2, e);
      }
      emit(out, io::to_json(g1, g2, e));
      switch (e.answer) {
        case Equivalence::Answer::yes:
          return ok;
        case Equivalence::Answer::no:
          return negative;
        default:
          return inconclusive;
      }
    });

    auto* mgs = app.add_subcommand("mgs", "Crushed decomposition M_S");
    mgs->add_option("file", o.file, "Graph JSON")->required();
    mgs->add_flag("--dot", o.dot, "Emit Graphviz instead of JSON");
    on(mgs, [&] {
      auto G = build_MS(read_graph(o.file));
      if (o.dot) {
        out << io::to_dot(G);
      } else {
        emit(out, io::to_json(G));
      }
      return ok;
    });

    auto* gog = app.add_subcommand("gog", "Graph-of-groups moves");
    gog->require_subcommand(1);
    auto gog_out = [&](GraphOfGroups const& G) {
      if (o.dot) {
        out << io::to_dot(G);
      } else {
        emit(out, io::to_json(G));
      }
      return ok;
    };
    auto* reduce = gog->add_subcommand("reduce", "Collapse until reduced");
    reduce->add_option("file", o.file, "Graph-of-groups or graph JSON")->required();
    reduce->add_flag("--dot", o.dot, "Emit Graphviz");
    on(reduce, [&] { return gog_out(read_gog(o.file).reduce()); });

    auto* collapse = gog->add_subcommand("collapse", "Collapse one link");
    collapse->add_option("file", o.file, "Graph-of-groups or graph JSON")->required();
    collapse->add_option("link", o.id, "Link id")->required();
    collapse->add_option("--keep", o.keep, "Surviving node id on a tie");
    collapse->add_flag("--dot", o.dot, "Emit Graphviz");
    on(collapse, [&] { return gog_out(read_gog(o.file).collapse(o.id, o.keep)); });

    auto* expand = gog->add_subcommand("expand", "Split one node");
    expand->add_option("file", o.file, "Graph-of-groups or graph JSON")->required();
    expand->add_option("node", o.id, "Node id")->required();
    expand->add_option("spec", o.spec, "Expansion JSON")->required();
    expand->add_flag("--dot", o.dot, "Emit Graphviz");
    on(expand, [&] {
      auto G    = read_gog(o.file);
      auto spec = parsing(o.spec, [&] {
        return io::expand_spec_from_json(G.base(), read_json(o.spec));
      });
      return gog_out(G.expand(o.id, spec));
    });

    auto* surviving = gog->add_subcommand("surviving", "Links no reduction can avoid collapsing");
    surviving->add_option("file", o.file, "Graph-of-groups or graph JSON")->required();
    on(surviving, [&] {
      auto G   = read_gog(o.file);
      auto ids = G.surviving_links();
      emit(out, {{"surviving_links", ids}, {"links", G.links().size()}});
      return ok;
    });

    auto* rw = app.add_subcommand("ribbon-witness", "An (s, t)-ribbon along odd edges");
    rw->add_option("file", o.file, "Graph JSON")->required();
    rw->add_option("s", o.s, "Source vertex")->required();
    rw->add_option("t", o.t, "Target vertex")->required();
    on(rw, [&] {
      auto g = read_graph(o.file);
      auto w = ribbon_witness(g, vertex(g, o.s), vertex(g, o.t));
      if (!w) {
        emit(out, {{"exists", false},
                   {"reason", o.s + " and " + o.t + " lie in different odd components"}});
        return negative;
      }
      auto j      = io::to_json(g, *w);
      j["exists"] = true;
      emit(out, j);
      return ok;
    });

    auto* rv = app.add_subcommand("ribbon-validate", "Check a ribbon word");
    rv->add_option("file", o.file, "Graph JSON")->required();
    rv->add_option("word", o.spec, "Ribbon word JSON")->required();
    rv->add_option("s", o.s, "Source vertex")->required();
    rv->add_option("t", o.t, "Target vertex")->required();
    on(rv, [&] {
      auto g       = read_graph(o.file);
      auto letters = parsing(o.spec, [&] { return io::ribbon_from_json(g, read_json(o.spec)); });
      auto check   = validate_ribbon(g, letters, vertex(g, o.s), vertex(g, o.t));
      if (!check) {
        emit(out, {{"valid", false},
                   {"failing_index", check.failing_index},
                   {"reason", check.reason}});
        return negative;
      }
      auto j     = io::to_json(g, *check.word);
      j["valid"] = true;
      emit(out, j);
      return ok;
    });

    auto* dehn = app.add_subcommand("dehn-compile", "Write a Dehn twist as elementary twists");
    dehn->add_option("file", o.file, "Graph JSON")->required();
    dehn->add_option("spec", o.spec, "Dehn twist JSON")->required();
    on(dehn, [&] {
      auto g    = read_graph(o.file);
      auto spec = parsing(o.spec, [&] { return io::dehn_spec_from_json(g, read_json(o.spec)); });
      auto seq  = compile_dehn_twist(g, spec);
      auto fin  = replay(g, seq);
      auto j    = io::to_json(g, seq);
      j["final_graph"]      = io::graph_to_json(fin.current);
      j["final_isomorphic"] = is_isomorphic(fin.current, g).has_value();
      emit(out, j);
      return ok;
    });

    auto* certify = app.add_subcommand("certify", "Strong twist rigidity certificate");
    certify->add_option("file", o.file, "Graph JSON")->required();
    on(certify, [&] {
      auto g = read_graph(o.file);
      auto v = strong_twist_verdict(g);
      emit(out, io::to_json(g, v));
      return v.level == Verdict::Level::strong_certified ? ok : negative;
    });

    std::vector<char const*> argv{"artin"};
    for (auto const& a : args) {
      argv.push_back(a.c_str());
    }
    try {
      app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (CLI::CallForHelp const&) {
      out << app.help();
      return ok;
    } catch (CLI::CallForAllHelp const&) {
      out << app.help("", CLI::AppFormatMode::All);
      return ok;
    } catch (CLI::ParseError const& e) {
      err << "error: " << e.what() << '\n';
      return usage_error;
    }

    try {
      return action();
    } catch (StepFailure const& e) {
      err << "error: step " << e.index() << ": " << e.what() << '\n';
      return domain_error;
    } catch (InputError const& e) {
      err << "error: " << e.what() << '\n';
      return input_error;
    } catch (std::exception const& e) {
      err << "error: " << e.what() << '\n';
      return domain_error;
    }
  }

}  // namespace artin::cli
