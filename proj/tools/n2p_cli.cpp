// Command-line front end: parse ideal/graph files, run the combinatorial
// N_{2,p} analysis and the homological oracles, emit human-readable or
// machine-readable reports.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "n2p/n2p.hpp"

using nlohmann::json;

namespace {

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw n2p::Error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

n2p::FieldSpec parse_field(const std::string& s) {
  if (s == "q" || s == "Q" || s == "qq") return n2p::FieldSpec::rationals();
  if (s.rfind("fp:", 0) == 0)
    return n2p::FieldSpec::prime(std::stoll(s.substr(3)));
  if (s.size() > 1 && (s[0] == 'f' || s[0] == 'F'))
    return n2p::FieldSpec::prime(std::stoll(s.substr(1)));
  throw n2p::Error("unknown field spec '" + s + "' (use q, f<p> or fp:<p>)");
}

json index_json(const n2p::N2pIndex& idx) {
  json j;
  switch (idx.kind) {
    case n2p::N2pIndex::Kind::NotQuadratic: j["kind"] = "not_quadratic"; break;
    case n2p::N2pIndex::Kind::TwoRegular: j["kind"] = "two_regular"; break;
    case n2p::N2pIndex::Kind::Finite:
      j["kind"] = "finite";
      j["p"] = idx.p;
      break;
  }
  return j;
}

json witness_json(const n2p::FailureWitness& w, const n2p::MonomialIdeal& I) {
  json j;
  const auto& names = I.vars();
  switch (w.kind) {
    case n2p::FailureWitness::Kind::Hole: {
      j["type"] = "hole";
      json verts = json::array();
      for (int v : w.hole.vertices) verts.push_back(names.name(v));
      j["vertices"] = verts;
      break;
    }
    case n2p::FailureWitness::Kind::LinkNotSimplex:
      j["type"] = "link_not_simplex";
      j["square_vertex"] = names.name(w.x);
      j["pair"] = {names.name(w.y), names.name(w.z)};
      break;
    case n2p::FailureWitness::Kind::SquareVertexInLink:
      j["type"] = "square_vertex_in_link";
      j["square_vertex"] = names.name(w.x);
      j["other"] = names.name(w.y);
      break;
    case n2p::FailureWitness::Kind::NonQuadraticGenerator:
      j["type"] = "non_quadratic_generator";
      j["generator"] = w.generator.str(names);
      break;
  }
  return j;
}

std::string witness_text(const n2p::FailureWitness& w, const n2p::MonomialIdeal& I) {
  const auto& names = I.vars();
  switch (w.kind) {
    case n2p::FailureWitness::Kind::Hole: {
      std::string s = "hole of length " + std::to_string(w.hole.length()) + ":";
      for (int v : w.hole.vertices) s += " " + names.name(v);
      return s;
    }
    case n2p::FailureWitness::Kind::LinkNotSimplex:
      return "link of square vertex " + names.name(w.x) +
             " is not a simplex: " + names.name(w.y) + ", " + names.name(w.z) +
             " are non-adjacent";
    case n2p::FailureWitness::Kind::SquareVertexInLink:
      return "link of square vertex " + names.name(w.x) +
             " contains the square vertex " + names.name(w.y);
    case n2p::FailureWitness::Kind::NonQuadraticGenerator:
      return "generator " + w.generator.str(names) + " has degree != 2";
  }
  return {};
}

json betti_json(const n2p::GradedBettiTable& t) {
  json rows = json::array();
  for (const auto& [ij, mult] : t.entries)
    rows.push_back({ij.first, ij.second, mult});
  return rows;
}

void print_betti(const n2p::GradedBettiTable& t) {
  for (const auto& [ij, mult] : t.entries)
    std::cout << "beta_{" << ij.first << "," << ij.second << "} = " << mult << "\n";
}

struct Options {
  bool json_out = false;
  int threads = 1;
};

void emit(const json& j, const Options& opt) {
  if (opt.json_out) std::cout << j.dump(2) << "\n";
}

int run_ideal_analysis(const n2p::MonomialIdeal& I, const std::string& echo,
                       const Options& opt) {
  auto idx = n2p::n2p_quadratic(I);
  auto wit = n2p::failure_witness(I);
  json j;
  j["command"] = echo;
  j["n2p"] = index_json(idx);
  if (wit) j["witness"] = witness_json(*wit, I);
  if (opt.json_out) {
    emit(j, opt);
  } else {
    std::cout << "ideal: " << I.str() << "\n";
    std::cout << "n2p: " << idx.str() << "\n";
    if (wit) std::cout << "witness: " << witness_text(*wit, I) << "\n";
  }
  return 0;
}

int run_verify(const n2p::MonomialIdeal& I, const std::vector<n2p::FieldSpec>& fields,
               const std::string& echo, const Options& opt, int max_vars) {
  auto rep = n2p::cross_check(I, fields, max_vars, opt.threads);
  json j;
  j["command"] = echo;
  j["n2p"] = index_json(rep.combinatorial);
  j["agree"] = rep.agree;
  if (rep.witness) j["witness"] = witness_json(*rep.witness, I);
  json per_field = json::array();
  for (const auto& fr : rep.oracle)
    per_field.push_back({{"field", fr.field.str()},
                         {"hochster", index_json(fr.hochster_index)},
                         {"koszul", index_json(fr.koszul_index)}});
  j["oracles"] = per_field;
  if (opt.json_out) {
    emit(j, opt);
  } else {
    std::cout << "ideal: " << I.str() << "\n";
    std::cout << "combinatorial: " << rep.combinatorial.str() << "\n";
    for (const auto& fr : rep.oracle)
      std::cout << "oracle over " << fr.field.str()
                << ": hochster " << fr.hochster_index.str()
                << ", koszul " << fr.koszul_index.str() << "\n";
    std::cout << "agree: " << (rep.agree ? "true" : "false") << "\n";
    if (rep.witness)
      std::cout << "witness: " << witness_text(*rep.witness, I) << "\n";
  }
  if (!rep.agree)
    std::cerr << "internal-consistency failure: combinatorial and oracle "
                 "indices disagree\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"N_{2,p} analysis of quadratic monomial ideals"};
  app.require_subcommand(1);
  app.fallthrough();  // allow --json / --threads after the subcommand

  Options opt;
  app.add_flag("--json", opt.json_out, "emit machine-readable JSON");
  app.add_option("--threads", opt.threads, "worker threads for the oracle sweeps")
      ->check(CLI::Range(1, 256));

  std::string ideal_path, graph_path, field_str = "q", oracle = "both";
  std::string keep_csv, fields_csv = "q,f2,f3";
  int max_len = 10, max_vars = n2p::kHochsterVarCap, demo_n = 0;

  auto* c_n2p = app.add_subcommand("n2p", "maximal p with N_{2,p}");
  c_n2p->add_option("ideal", ideal_path, "ideal file (- for stdin)")->required();

  auto* c_betti = app.add_subcommand("betti", "graded Betti table");
  c_betti->add_option("ideal", ideal_path)->required();
  c_betti->add_option("--field", field_str, "q | f<p> | fp:<p>");
  c_betti->add_option("--oracle", oracle, "hochster | koszul | both");
  c_betti->add_option("--max-vars", max_vars, "cap for the subset sweep");

  auto* c_holes = app.add_subcommand("holes", "chordless cycles of a graph");
  c_holes->add_option("graph", graph_path)->required();
  c_holes->add_option("--max-len", max_len, "longest hole to report");

  auto* c_chordal = app.add_subcommand("chordal", "chordality test");
  c_chordal->add_option("graph", graph_path)->required();

  auto* c_polarize = app.add_subcommand("polarize", "squarefree polarization");
  c_polarize->add_option("ideal", ideal_path)->required();

  auto* c_saturated = app.add_subcommand("saturated", "saturation test (quadratic)");
  c_saturated->add_option("ideal", ideal_path)->required();

  auto* c_section = app.add_subcommand("section", "coordinate section");
  c_section->add_option("ideal", ideal_path)->required();
  c_section->add_option("--keep", keep_csv, "comma-separated variables")->required();

  auto* c_verify = app.add_subcommand("verify", "cross-check against the oracles");
  c_verify->add_option("ideal", ideal_path)->required();
  c_verify->add_option("--fields", fields_csv, "comma-separated fields");
  c_verify->add_option("--max-vars", max_vars);

  auto* c_demo = app.add_subcommand("demo", "built-in families");
  auto* c_demo_cycle = c_demo->add_subcommand("cycle", "the (d+1)-cycle ideal");
  c_demo_cycle->add_option("n", demo_n, "number of cycle vertices")->required();

  for (CLI::App* sc : {c_n2p, c_betti, c_holes, c_chordal, c_polarize,
                       c_saturated, c_section, c_verify, c_demo, c_demo_cycle})
    sc->fallthrough();

  CLI11_PARSE(app, argc, argv);

  try {
    if (c_n2p->parsed()) {
      return run_ideal_analysis(n2p::parse_ideal(read_input(ideal_path)),
                                "n2p " + ideal_path, opt);
    }
    if (c_betti->parsed()) {
      auto I = n2p::parse_ideal(read_input(ideal_path));
      auto f = parse_field(field_str);
      json j;
      j["command"] = "betti " + ideal_path;
      n2p::GradedBettiTable table;
      bool have_agree = false, agree = true;
      if (oracle == "hochster") {
        table = n2p::betti_table_general(I, f, max_vars, opt.threads);
      } else if (oracle == "koszul") {
        table = n2p::koszul_table(I, f);
      } else if (oracle == "both") {
        table = n2p::betti_table_general(I, f, max_vars, opt.threads);
        agree = (table == n2p::koszul_table(I, f));
        have_agree = true;
      } else {
        throw n2p::Error("unknown oracle '" + oracle + "'");
      }
      j["betti"] = betti_json(table);
      j["n2p"] = index_json(n2p::n2p_from_table(table));
      if (have_agree) j["agree"] = agree;
      if (opt.json_out) {
        emit(j, opt);
      } else {
        std::cout << "ideal: " << I.str() << " over " << f.str() << "\n";
        print_betti(table);
        std::cout << "n2p: " << n2p::n2p_from_table(table).str() << "\n";
        if (have_agree)
          std::cout << "oracles agree: " << (agree ? "true" : "false") << "\n";
      }
      if (have_agree && !agree)
        std::cerr << "internal-consistency failure: Hochster and Koszul "
                     "tables disagree\n";
      return 0;
    }
    if (c_holes->parsed()) {
      auto g = n2p::parse_graph(read_input(graph_path));
      auto holes = n2p::enumerate_holes(g, max_len);
      json j;
      j["command"] = "holes " + graph_path;
      json arr = json::array();
      for (const auto& h : holes) {
        json verts = json::array();
        for (int v : h.vertices) verts.push_back(g.vertices().name(v));
        arr.push_back(verts);
      }
      j["holes"] = arr;
      if (opt.json_out) {
        emit(j, opt);
      } else {
        std::cout << holes.size() << " hole(s) of length <= " << max_len << "\n";
        for (const auto& h : holes) {
          for (std::size_t i = 0; i < h.vertices.size(); ++i)
            std::cout << (i ? " " : "") << g.vertices().name(h.vertices[i]);
          std::cout << "\n";
        }
      }
      return 0;
    }
    if (c_chordal->parsed()) {
      auto g = n2p::parse_graph(read_input(graph_path));
      bool chordal = n2p::is_chordal(g);
      json j;
      j["command"] = "chordal " + graph_path;
      j["chordal"] = chordal;
      if (opt.json_out)
        emit(j, opt);
      else
        std::cout << (chordal ? "chordal" : "not chordal") << "\n";
      return 0;
    }
    if (c_polarize->parsed()) {
      auto I = n2p::parse_ideal(read_input(ideal_path));
      auto P = n2p::polarize(I);
      json j;
      j["command"] = "polarize " + ideal_path;
      j["ideal"] = n2p::print_ideal(P.ideal);
      json m;
      for (int v = 0; v < P.ideal.vars().size(); ++v)
        m[P.ideal.vars().name(v)] = I.vars().name(P.origin[static_cast<std::size_t>(v)]);
      j["variable_map"] = m;
      if (opt.json_out)
        emit(j, opt);
      else
        std::cout << n2p::print_ideal(P.ideal);
      return 0;
    }
    if (c_saturated->parsed()) {
      auto I = n2p::parse_ideal(read_input(ideal_path));
      bool sat = n2p::is_saturated_quadratic(I);
      json j;
      j["command"] = "saturated " + ideal_path;
      j["saturated"] = sat;
      if (opt.json_out)
        emit(j, opt);
      else
        std::cout << (sat ? "saturated" : "not saturated") << "\n";
      return 0;
    }
    if (c_section->parsed()) {
      auto I = n2p::parse_ideal(read_input(ideal_path));
      std::vector<std::string> keep;
      std::stringstream ss(keep_csv);
      std::string item;
      while (std::getline(ss, item, ',')) keep.push_back(item);
      auto S = n2p::coordinate_section(I, keep);
      json j;
      j["command"] = "section " + ideal_path;
      j["ideal"] = n2p::print_ideal(S);
      if (opt.json_out)
        emit(j, opt);
      else
        std::cout << n2p::print_ideal(S);
      return 0;
    }
    if (c_verify->parsed() || c_demo_cycle->parsed()) {
      n2p::MonomialIdeal I;
      std::string echo;
      if (c_verify->parsed()) {
        I = n2p::parse_ideal(read_input(ideal_path));
        echo = "verify " + ideal_path;
      } else {
        I = n2p::cycle_ideal(demo_n);
        echo = "demo cycle " + std::to_string(demo_n);
      }
      std::vector<n2p::FieldSpec> fields;
      std::stringstream ss(fields_csv);
      std::string item;
      while (std::getline(ss, item, ',')) fields.push_back(parse_field(item));
      return run_verify(I, fields, echo, opt, max_vars);
    }
    throw n2p::Error("no subcommand given");
  } catch (const n2p::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const n2p::UnknownVariable& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const n2p::GeneratorIsUnit& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const n2p::SelfLoop& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const n2p::DuplicateEdge& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const n2p::TooManyVariables& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const n2p::TooLarge& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const n2p::DegreeCapTooLow& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const n2p::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
