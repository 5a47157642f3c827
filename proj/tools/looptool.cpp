#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "loops/classify.hpp"
#include "loops/constructions.hpp"
#include "loops/errors.hpp"
#include "loops/invariants.hpp"
#include "loops/loop_table.hpp"
#include "loops/search.hpp"

using nlohmann::json;
using namespace loops;

namespace {

bool is_catalog_name(const std::string& s) {
  const auto& names = catalog_names();
  return std::find(names.begin(), names.end(), s) != names.end();
}

LoopTable load_input(const std::string& s) {
  if (is_catalog_name(s)) return make_loop(s);
  return read_loop_file(s);
}

json profile_to_json(const InvariantProfile& p) {
  return json{{"order", p.order},
              {"center_order", p.center_order},
              {"exponent", p.exponent},
              {"order3_count", p.order3_count},
              {"derived_order", p.derived_order},
              {"left_nucleus_order", p.left_nucleus_order},
              {"left_nucleus_exponent", p.left_nucleus_exponent},
              {"commuting_pairs", p.commuting_pairs},
              {"right_mlt_order", p.right_mlt_order},
              {"left_mlt_order", p.left_mlt_order},
              {"mlt_order", p.mlt_order},
              {"aut_order", p.aut_order},
              {"right_bruck", p.right_bruck},
              {"associated_right_bruck", p.associated_bruck_name}};
}

void print_profile_text(const std::string& label, const InvariantProfile& p) {
  std::cout << "loop:                    " << label << "\n"
            << "order:                   " << p.order << "\n"
            << "center order:            " << p.center_order << "\n"
            << "exponent:                " << p.exponent << "\n"
            << "elements of order 3:     " << p.order3_count << "\n"
            << "derived subloop order:   " << p.derived_order << "\n"
            << "left nucleus order:      " << p.left_nucleus_order << "\n"
            << "left nucleus exponent:   " << p.left_nucleus_exponent << "\n"
            << "commuting pairs:         " << p.commuting_pairs << "\n"
            << "right mult group order:  " << p.right_mlt_order << "\n"
            << "left mult group order:   " << p.left_mlt_order << "\n"
            << "mult group order:        " << p.mlt_order << "\n"
            << "automorphism group:      " << p.aut_order << "\n"
            << "right Bruck:             " << (p.right_bruck ? "yes" : "no") << "\n"
            << "associated right Bruck:  "
            << (p.associated_bruck_name.empty() ? "-" : p.associated_bruck_name)
            << "\n";
}

// fixed-width rendering of a labeled row of 10 values
template <typename T>
void print_row(const std::string& label, const std::vector<T>& vals) {
  std::cout << label;
  for (size_t i = label.size(); i < 26; ++i) std::cout << ' ';
  for (const T& v : vals) {
    std::ostringstream os;
    os << v;
    std::string s = os.str();
    for (size_t i = s.size(); i < 8; ++i) std::cout << ' ';
    std::cout << s;
  }
  std::cout << "\n";
}

std::vector<std::string> b_names() {
  return {"B1", "B2", "B3", "B4", "B5", "B6", "B7", "B8", "B9", "B10"};
}

void emit_reps(const std::string& dir, const std::string& stem,
               const std::vector<LoopTable>& reps) {
  if (dir.empty()) return;
  std::filesystem::create_directories(dir);
  for (size_t i = 0; i < reps.size(); ++i) {
    std::string name = stem + (i < 10 ? "0" : "") + std::to_string(i) + ".txt";
    write_loop_file((std::filesystem::path(dir) / name).string(), reps[i]);
  }
}

// first catalog name isomorphic to q, if any
std::string catalog_label(const LoopTable& q) {
  for (const std::string& name : catalog_names())
    if (make_loop(name).order() == q.order() &&
        are_isomorphic(make_loop(name), q).isomorphic)
      return name;
  return "";
}

int cmd_table1(bool as_json) {
  std::vector<InvariantProfile> ps;
  for (const std::string& name : b_names()) {
    std::cerr << "profiling " << name << "...\n";
    ps.push_back(profile(make_loop(name)));
  }
  auto col = [&](auto f) {
    std::vector<decltype(f(ps[0]))> out;
    for (const auto& p : ps) out.push_back(f(p));
    return out;
  };
  auto zq = col([](const InvariantProfile& p) { return p.center_order; });
  auto ex = col([](const InvariantProfile& p) { return p.exponent; });
  auto o3 = col([](const InvariantProfile& p) { return p.order3_count; });
  auto dq = col([](const InvariantProfile& p) { return p.derived_order; });
  auto nl = col([](const InvariantProfile& p) { return p.left_nucleus_order; });
  auto ne = col([](const InvariantProfile& p) { return p.left_nucleus_exponent; });
  auto cp = col([](const InvariantProfile& p) { return p.commuting_pairs; });
  auto rm = col([](const InvariantProfile& p) { return p.right_mlt_order; });
  auto lm = col([](const InvariantProfile& p) { return p.left_mlt_order; });
  auto mm = col([](const InvariantProfile& p) { return p.mlt_order; });
  auto au = col([](const InvariantProfile& p) { return p.aut_order; });
  std::vector<std::string> br, ab;
  for (const auto& p : ps) {
    br.push_back(p.right_bruck ? "yes" : "no");
    ab.push_back(p.associated_bruck_name);
  }
  if (as_json) {
    std::cout << json{{"columns", b_names()},
                      {"center_order", zq},
                      {"exponent", ex},
                      {"order3_count", o3},
                      {"derived_order", dq},
                      {"left_nucleus_order", nl},
                      {"left_nucleus_exponent", ne},
                      {"commuting_pairs", cp},
                      {"right_mlt_order", rm},
                      {"left_mlt_order", lm},
                      {"mlt_order", mm},
                      {"aut_order", au},
                      {"right_bruck", br},
                      {"associated_right_bruck", ab}}
                     .dump(2)
              << "\n";
    return 0;
  }
  print_row("Q", b_names());
  print_row("|Z(Q)|", zq);
  print_row("exp(Q)", ex);
  print_row("#{x: |x| = 3}", o3);
  print_row("|Q'|", dq);
  print_row("|Nl(Q)|", nl);
  print_row("exp(Nl(Q))", ne);
  print_row("#{(x,y): xy = yx}", cp);
  print_row("|Mlt_r(Q)|", rm);
  print_row("|Mlt_l(Q)|", lm);
  print_row("|Mlt(Q)|", mm);
  print_row("|Aut(Q)|", au);
  print_row("right Bruck", br);
  print_row("assoc. right Bruck", ab);
  return 0;
}

int cmd_table2(bool as_json) {
  std::vector<RMltProfile> ps;
  std::vector<LoopTable> group_tables;
  for (const std::string& name : b_names()) {
    std::cerr << "right multiplication group of " << name << "...\n";
    LoopTable q = make_loop(name);
    ps.push_back(rmlt_profile(q));
    group_tables.push_back(cayley_table(right_mlt(q)));
  }
  std::vector<int> cls;
  up_to_isomorphism(group_tables, &cls);
  std::vector<std::vector<std::string>> groups;
  for (size_t i = 0; i < cls.size(); ++i) {
    if ((size_t)cls[i] >= groups.size()) groups.resize(cls[i] + 1);
    groups[cls[i]].push_back(b_names()[i]);
  }
  auto ord = [&] {
    std::vector<unsigned long long> v;
    for (auto& p : ps) v.push_back(p.order);
    return v;
  }();
  auto ex = [&] {
    std::vector<long> v;
    for (auto& p : ps) v.push_back(p.exponent);
    return v;
  }();
  auto zg = [&] {
    std::vector<unsigned long long> v;
    for (auto& p : ps) v.push_back(p.center_order);
    return v;
  }();
  if (as_json) {
    std::cout << json{{"columns", b_names()},
                      {"order", ord},
                      {"exponent", ex},
                      {"center_order", zg},
                      {"isomorphism_classes", groups}}
                     .dump(2)
              << "\n";
    return 0;
  }
  print_row("Q", b_names());
  print_row("|G|", ord);
  print_row("exp(G)", ex);
  print_row("|Z(G)|", zg);
  std::cout << "isomorphism classes of G:";
  for (auto& g : groups) {
    std::cout << " {";
    for (size_t i = 0; i < g.size(); ++i) std::cout << (i ? "," : "") << g[i];
    std::cout << "}";
  }
  std::cout << "\n";
  return 0;
}

int cmd_classify_all(bool as_json, int jobs, const std::string& emit_dir) {
  std::cerr << "central extension search (p = 3)...\n";
  std::vector<LoopTable> pool = central_extensions_in_variety(3);
  std::cerr << "model search, elementary abelian case...\n";
  for (auto& q : model_search(trivial_center_spec(MCase::elementary_abelian), jobs))
    pool.push_back(q);
  std::cerr << "model search, cyclic case...\n";
  for (auto& q : model_search(trivial_center_spec(MCase::cyclic), jobs))
    pool.push_back(q);
  std::cerr << "catalog...\n";
  for (const std::string& name : catalog_names()) pool.push_back(make_loop(name));

  std::vector<LoopTable> classes = up_to_isomorphism(pool);
  emit_reps(emit_dir, "class", classes);
  int associative = 0, abelian = 0, nilpotent = 0, trivial_center = 0;
  json rows = json::array();
  std::vector<std::string> lines;
  for (size_t i = 0; i < classes.size(); ++i) {
    const LoopTable& q = classes[i];
    bool assoc = is_associative(q);
    bool comm = is_commutative(q);
    Nilpotence nil = central_nilpotence(q);
    int zc = (int)center(q).size();
    associative += assoc;
    abelian += assoc && comm;
    nilpotent += nil.nilpotent;
    trivial_center += zc == 1;
    std::string label = catalog_label(q);
    std::ostringstream os;
    os << "class " << i << ": " << (label.empty() ? "(new)" : label)
       << "  order=" << q.order() << " |Z|=" << zc << " exp=" << exponent(q)
       << (assoc ? " associative" : " nonassociative")
       << (nil.nilpotent ? " nilpotent(" + std::to_string(nil.cls) + ")" : "");
    lines.push_back(os.str());
    rows.push_back({{"index", i},
                    {"label", label},
                    {"order", q.order()},
                    {"center_order", zc},
                    {"exponent", exponent(q)},
                    {"associative", assoc},
                    {"abelian", assoc && comm},
                    {"centrally_nilpotent", nil.nilpotent},
                    {"nilpotence_class", nil.cls}});
  }
  if (as_json) {
    std::cout << json{{"classes", rows},
                      {"count", classes.size()},
                      {"associative", associative},
                      {"abelian", abelian},
                      {"centrally_nilpotent", nilpotent},
                      {"trivial_center", trivial_center}}
                     .dump(2)
              << "\n";
  } else {
    for (auto& l : lines) std::cout << l << "\n";
    std::cout << "total classes:       " << classes.size() << "\n"
              << "associative:         " << associative << "\n"
              << "abelian:             " << abelian << "\n"
              << "centrally nilpotent: " << nilpotent << "\n"
              << "trivial center:      " << trivial_center << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite right Bol loop toolkit"};
  app.require_subcommand(1);

  bool as_json = false;
  int jobs = 1;
  long timeout_secs = 0;
  std::string emit_dir;
  app.add_flag("--json", as_json, "machine-readable JSON output");
  app.add_option("--jobs", jobs, "parallel subtree workers for searches");
  app.add_option("--timeout-secs", timeout_secs,
                 "abort with exit code 124 after this many seconds");
  app.add_option("--emit-dir", emit_dir, "write result loop tables to this directory");

  auto* c_construct = app.add_subcommand("construct", "build a catalog loop");
  std::string construct_name, construct_out;
  c_construct->add_option("name", construct_name, "catalog name")->required();
  c_construct->add_option("--out", construct_out, "output file (default stdout)");

  auto* c_validate = app.add_subcommand("validate", "check a loop table file");
  std::string validate_path;
  c_validate->add_option("file", validate_path, "loop file")->required();

  auto* c_profile = app.add_subcommand("profile", "invariant profile of a loop");
  std::string profile_input;
  c_profile->add_option("input", profile_input, "catalog name or loop file")
      ->required();

  auto* c_classify = app.add_subcommand("classify", "group inputs by isomorphism");
  std::vector<std::string> classify_inputs;
  c_classify->add_option("inputs", classify_inputs, "catalog names or loop files")
      ->required();

  auto* c_isotopy = app.add_subcommand("isotopy", "test two loops for isotopy");
  std::string iso_a, iso_b;
  c_isotopy->add_option("first", iso_a, "catalog name or loop file")->required();
  c_isotopy->add_option("second", iso_b, "catalog name or loop file")->required();

  auto* c_search = app.add_subcommand("search", "exhaustive searches");
  c_search->require_subcommand(1);
  auto* c_central = c_search->add_subcommand(
      "central-ext", "right Bol central extensions of Z_p by C_p x C_p");
  int ext_p = 3;
  c_central->add_option("--p", ext_p, "prime (3, 5 or 7)")->required();
  auto* c_trivial = c_search->add_subcommand(
      "trivial-center", "order-27 right Bol loops over a prescribed subloop");
  std::string case_name;
  c_trivial->add_option("--case", case_name, "ea (elementary abelian) or cyc (cyclic)")
      ->required();
  std::string resume_file;
  c_trivial->add_option("--resume", resume_file, "subtree checkpoint file");

  auto* c_table1 = app.add_subcommand("table1", "invariants of B1..B10");
  auto* c_table2 = app.add_subcommand(
      "table2", "right multiplication groups of B1..B10");
  auto* c_all = app.add_subcommand("classify-all",
                                   "full census of order-27 right Bol loops");

  CLI11_PARSE(app, argc, argv);

  if (timeout_secs > 0) {
    std::thread([timeout_secs] {
      std::this_thread::sleep_for(std::chrono::seconds(timeout_secs));
      std::cerr << "timeout exceeded\n";
      std::_Exit(124);
    }).detach();
  }

  try {
    if (*c_construct) {
      LoopTable q = make_loop(construct_name);
      if (as_json) {
        std::vector<std::vector<int>> rows(q.order(), std::vector<int>(q.order()));
        for (int i = 0; i < q.order(); ++i)
          for (int j = 0; j < q.order(); ++j) rows[i][j] = q.mul(i, j);
        std::cout << json{{"name", construct_name}, {"order", q.order()},
                          {"rows", rows}}
                         .dump(2)
                  << "\n";
      } else if (!construct_out.empty()) {
        write_loop_file(construct_out, q);
      } else {
        std::cout << to_text(q);
      }
      return 0;
    }
    if (*c_validate) {
      try {
        LoopTable q = read_loop_file(validate_path);
        if (as_json)
          std::cout << json{{"valid", true}, {"order", q.order()}}.dump(2) << "\n";
        else
          std::cout << "valid loop of order " << q.order() << "\n";
        return 0;
      } catch (const loop_error& e) {
        if (as_json)
          std::cout << json{{"valid", false},
                            {"error", errc_name(e.code())},
                            {"message", e.what()}}
                           .dump(2)
                    << "\n";
        else
          std::cout << "invalid: " << errc_name(e.code()) << ": " << e.what()
                    << "\n";
        return 1;
      }
    }
    if (*c_profile) {
      LoopTable q = load_input(profile_input);
      InvariantProfile p = profile(q);
      if (as_json)
        std::cout << profile_to_json(p).dump(2) << "\n";
      else
        print_profile_text(profile_input, p);
      return 0;
    }
    if (*c_classify) {
      std::vector<LoopTable> tables;
      for (const std::string& s : classify_inputs) tables.push_back(load_input(s));
      std::vector<int> cls;
      std::vector<LoopTable> reps = up_to_isomorphism(tables, &cls);
      emit_reps(emit_dir, "class", reps);
      if (as_json) {
        json classes = json::array();
        for (size_t r = 0; r < reps.size(); ++r) {
          json members = json::array();
          for (size_t i = 0; i < cls.size(); ++i)
            if (cls[i] == (int)r) members.push_back(classify_inputs[i]);
          classes.push_back({{"index", r}, {"members", members}});
        }
        std::cout << json{{"count", reps.size()}, {"classes", classes}}.dump(2)
                  << "\n";
      } else {
        std::cout << reps.size() << " isomorphism classes\n";
        for (size_t r = 0; r < reps.size(); ++r) {
          std::cout << "class " << r << ":";
          for (size_t i = 0; i < cls.size(); ++i)
            if (cls[i] == (int)r) std::cout << " " << classify_inputs[i];
          std::cout << "\n";
        }
      }
      return 0;
    }
    if (*c_isotopy) {
      LoopTable a = load_input(iso_a), b = load_input(iso_b);
      IsotopyResult r = are_isotopic(a, b);
      if (as_json) {
        json out{{"isotopic", r.isotopic}};
        if (r.isotopic) {
          out["a"] = r.a;
          out["b"] = r.b;
          IsoCertificate cert = are_isomorphic(principal_isotope(a, r.a, r.b), b);
          out["isomorphism"] = cert.map.images();
        }
        std::cout << out.dump(2) << "\n";
      } else if (r.isotopic) {
        std::cout << "isotopic: principal isotope at (a,b) = (" << r.a << ","
                  << r.b << ") is isomorphic to the second loop\n";
      } else {
        std::cout << "not isotopic\n";
      }
      return 0;
    }
    if (*c_central) {
      std::cerr << "central extension search, p = " << ext_p << "...\n";
      std::vector<LoopTable> reps = central_extensions_in_variety(ext_p);
      emit_reps(emit_dir, "centralext_p" + std::to_string(ext_p) + "_", reps);
      int assoc = 0;
      for (const auto& q : reps) assoc += is_associative(q);
      if (as_json)
        std::cout << json{{"p", ext_p},
                          {"classes", reps.size()},
                          {"associative", assoc},
                          {"nonassociative", reps.size() - assoc}}
                         .dump(2)
                  << "\n";
      else
        std::cout << "p = " << ext_p << ": " << reps.size()
                  << " isomorphism classes (" << assoc << " groups, "
                  << reps.size() - assoc << " nonassociative)\n";
      return 0;
    }
    if (*c_trivial) {
      MCase mcase;
      if (case_name == "ea")
        mcase = MCase::elementary_abelian;
      else if (case_name == "cyc")
        mcase = MCase::cyclic;
      else
        fail(errc::inconsistent_spec, "--case must be ea or cyc");
      std::cerr << "model search, case " << case_name << "...\n";
      std::vector<LoopTable> models =
          model_search(trivial_center_spec(mcase), jobs, resume_file);
      std::vector<LoopTable> reps = up_to_isomorphism(models);
      emit_reps(emit_dir, "trivialcenter_" + case_name + "_", reps);
      int assoc = 0;
      for (const auto& q : reps) assoc += is_associative(q);
      if (as_json)
        std::cout << json{{"case", case_name},
                          {"raw_models", models.size()},
                          {"classes", reps.size()},
                          {"associative", assoc},
                          {"nonassociative", reps.size() - assoc}}
                         .dump(2)
                  << "\n";
      else
        std::cout << "case " << case_name << ": " << models.size()
                  << " models, " << reps.size() << " isomorphism classes ("
                  << assoc << " groups, " << reps.size() - assoc
                  << " nonassociative)\n";
      return 0;
    }
    if (*c_table1) return cmd_table1(as_json);
    if (*c_table2) return cmd_table2(as_json);
    if (*c_all) return cmd_classify_all(as_json, jobs, emit_dir);
  } catch (const loop_error& e) {
    std::cerr << "error: " << errc_name(e.code()) << ": " << e.what() << "\n";
    return 2;
  }
  return 0;
}
